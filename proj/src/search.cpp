#include "minordeck/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "minordeck/anf.hpp"
#include "minordeck/literal.hpp"

namespace minordeck
{

namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since( clock_type::time_point start )
{
  return std::chrono::duration<double>( clock_type::now() - start ).count();
}

std::size_t binomial2( std::size_t n )
{
  return n * ( n - 1 ) / 2;
}

void require_boolean_universe( const universe& u, const char* what )
{
  if ( u.domain_size() != 2 || u.codomain_size() != 2 )
  {
    throw domain_error( std::string( what ) + " runs over Boolean functions only" );
  }
}

void require_full( const universe& u, const char* what )
{
  search_budget unlimited;
  unlimited.max_candidates = std::numeric_limits<std::size_t>::max();
  if ( u.first_index() != 0 || u.size() != function_count( u.arity(), u.domain_size(), u.codomain_size(), unlimited ) )
  {
    throw range_error( std::string( what ) + " needs the whole universe, not a single shard" );
  }
}

std::string set_card_list( const universe& u, std::span<const card_id> ids )
{
  std::vector<std::string> names;
  for ( auto id : ids )
  {
    names.push_back( print_card( u.card_at( id ) ) );
  }
  std::sort( names.begin(), names.end() );
  std::string out = "{";
  for ( std::size_t i = 0; i < names.size(); ++i )
  {
    out += ( i ? "; " : "" ) + names[i];
  }
  return out + "}";
}

std::vector<card> cards_sorted( std::vector<card> cards )
{
  std::vector<std::pair<std::string, card>> keyed;
  for ( auto& c : cards )
  {
    auto key = print_card( c );
    keyed.emplace_back( std::move( key ), std::move( c ) );
  }
  std::sort( keyed.begin(), keyed.end(), []( const auto& a, const auto& b ) { return a.first < b.first; } );
  std::vector<card> out;
  for ( auto& [key, c] : keyed )
  {
    out.push_back( std::move( c ) );
  }
  return out;
}

/* essential arity 1 and nonconstant */
bool card_is_unary( const card& c )
{
  return c.essential_arity() == 1 && !c.is_constant();
}

bool card_passes( const universe& u, card_id id, class_filter filter, std::vector<signed char>& cache )
{
  if ( filter == class_filter::none )
  {
    return true;
  }
  if ( cache.size() < u.card_count() )
  {
    cache.resize( u.card_count(), -1 );
  }
  if ( cache[id] < 0 )
  {
    cache[id] = passes( filter, u.card_at( id ).to_function() ) ? 1 : 0;
  }
  return cache[id] == 1;
}

} // namespace

/* ---------------------------------------------------------------------- */

void search_budget::validate() const
{
  if ( shard_count < 1 )
  {
    throw range_error( "shard count must be positive" );
  }
  if ( shard_index >= shard_count )
  {
    throw range_error( "shard index " + std::to_string( shard_index ) + " outside 0.." +
                       std::to_string( shard_count - 1 ) );
  }
  if ( max_table_cells < 1 || max_candidates < 1 )
  {
    throw range_error( "budgets must be positive" );
  }
}

std::size_t function_count( unsigned n, unsigned k, unsigned m, const search_budget& budget )
{
  budget.validate();
  const auto cells = table_size( k, n, cell_guard::allow_large );
  if ( cells > budget.max_table_cells )
  {
    throw budget_error( "functions of arity " + std::to_string( n ) + " have " + std::to_string( cells ) +
                        " cells, beyond the budget" );
  }
  std::size_t count = 1;
  for ( std::size_t i = 0; i < cells; ++i )
  {
    if ( count > budget.max_candidates / m )
    {
      throw budget_error( "enumerating " + std::to_string( m ) + "^" + std::to_string( cells ) +
                          " functions exceeds the candidate budget of " + std::to_string( budget.max_candidates ) );
    }
    count *= m;
  }
  return count;
}

std::pair<std::size_t, std::size_t> shard_range( std::size_t total, const search_budget& budget )
{
  budget.validate();
  const auto first = total / budget.shard_count * budget.shard_index +
                     std::min<std::size_t>( budget.shard_index, total % budget.shard_count );
  const auto length = total / budget.shard_count + ( budget.shard_index < total % budget.shard_count ? 1 : 0 );
  return { first, first + length };
}

finite_function function_at( unsigned n, unsigned k, unsigned m, std::size_t index )
{
  const auto cells = table_size( k, n );
  std::vector<value_t> table( cells );
  for ( std::size_t j = cells; j-- > 0; )
  {
    table[j] = static_cast<value_t>( index % m );
    index /= m;
  }
  if ( index != 0 )
  {
    throw range_error( "function number out of range" );
  }
  return finite_function( n, k, m, std::move( table ) );
}

std::size_t index_of( const finite_function& f )
{
  std::size_t index = 0;
  const std::size_t m = f.codomain_size();
  for ( auto v : f.table() )
  {
    if ( index > ( std::numeric_limits<std::size_t>::max() - v ) / m )
    {
      throw budget_error( "function number does not fit in a machine word" );
    }
    index = index * m + v;
  }
  return index;
}

std::vector<finite_function> enumerate_functions( unsigned n, unsigned k, unsigned m, const search_budget& budget )
{
  const auto [first, last] = shard_range( function_count( n, k, m, budget ), budget );
  std::vector<finite_function> out;
  out.reserve( last - first );
  for ( auto i = first; i < last; ++i )
  {
    out.push_back( function_at( n, k, m, i ) );
  }
  return out;
}

class_filter parse_filter( std::string_view name )
{
  if ( name == "none" )
    return class_filter::none;
  if ( name == "lambda" )
    return class_filter::lambda;
  if ( name == "v" )
    return class_filter::v;
  if ( name == "l" )
    return class_filter::l;
  if ( name == "monotone" )
    return class_filter::monotone;
  if ( name == "clones" )
    return class_filter::clones;
  throw parse_error( "unknown filter '" + std::string( name ) + "' (lambda, v, l, monotone, clones, none)", 0 );
}

std::string filter_name( class_filter filter )
{
  switch ( filter )
  {
  case class_filter::none:
    return "none";
  case class_filter::lambda:
    return "lambda";
  case class_filter::v:
    return "v";
  case class_filter::l:
    return "l";
  case class_filter::monotone:
    return "monotone";
  case class_filter::clones:
    return "clones";
  }
  return "none";
}

bool passes( class_filter filter, const finite_function& f )
{
  switch ( filter )
  {
  case class_filter::none:
    return true;
  case class_filter::lambda:
    return in_lambda( f );
  case class_filter::v:
    return in_v( f );
  case class_filter::l:
    return in_l( f );
  case class_filter::monotone:
    return is_monotone( f );
  case class_filter::clones:
    return in_clone_union( f );
  }
  return false;
}

/* ---------------------------------------------------------------------- */

namespace
{

struct partial_universe
{
  std::vector<card> pool;
  std::vector<card_id> own;
  std::vector<card_id> labels;
};

struct table_hash
{
  std::size_t operator()( const std::vector<value_t>& t ) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for ( auto v : t )
    {
      h = ( h ^ v ) * 1099511628211ull;
    }
    return h;
  }
};

partial_universe compute_partial( unsigned n, unsigned k, unsigned m, std::size_t first, std::size_t last )
{
  partial_universe part;
  std::unordered_map<card, card_id> ids;
  std::unordered_map<std::vector<value_t>, card_id, table_hash> minor_memo;
  const auto intern = [&]( card c ) {
    const auto [it, inserted] = ids.emplace( c, static_cast<card_id>( part.pool.size() ) );
    if ( inserted )
    {
      part.pool.push_back( std::move( c ) );
    }
    return it->second;
  };
  const auto pairs = index_pairs( n );
  const auto maps = [&] {
    std::vector<std::vector<unsigned>> out;
    for ( const auto& p : pairs )
    {
      out.push_back( identification_map( n, p ) );
    }
    return out;
  }();

  part.own.reserve( last - first );
  part.labels.reserve( ( last - first ) * pairs.size() );
  for ( auto index = first; index < last; ++index )
  {
    const auto f = function_at( n, k, m, index );
    part.own.push_back( intern( canonical_form( f ) ) );
    for ( const auto& delta : maps )
    {
      const auto minor = minor_via_map( f, delta, n - 1 );
      std::vector<value_t> key( minor.table().begin(), minor.table().end() );
      auto it = minor_memo.find( key );
      if ( it == minor_memo.end() )
      {
        it = minor_memo.emplace( std::move( key ), intern( canonical_form( minor ) ) ).first;
      }
      part.labels.push_back( it->second );
    }
  }
  return part;
}

} // namespace

universe universe::build_range( unsigned n, unsigned k, unsigned m, std::size_t first, std::size_t last,
                                unsigned workers )
{
  if ( n < 2 )
  {
    throw arity_error( "a universe of decks needs arity at least 2" );
  }
  universe u;
  u.n_ = n;
  u.k_ = k;
  u.m_ = m;
  u.first_ = first;
  u.pairs_ = binomial2( n );

  workers = std::max( 1u, std::min<unsigned>( workers, static_cast<unsigned>( std::max<std::size_t>( 1, last - first ) ) ) );
  std::vector<partial_universe> parts( workers );
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  search_budget split;
  split.shard_count = workers;
  for ( unsigned w = 0; w < workers; ++w )
  {
    split.shard_index = w;
    const auto [a, b] = shard_range( last - first, split );
    ranges.emplace_back( first + a, first + b );
  }
  if ( workers == 1 )
  {
    parts[0] = compute_partial( n, k, m, first, last );
  }
  else
  {
    std::vector<std::thread> threads;
    for ( unsigned w = 0; w < workers; ++w )
    {
      threads.emplace_back( [&, w] { parts[w] = compute_partial( n, k, m, ranges[w].first, ranges[w].second ); } );
    }
    for ( auto& t : threads )
    {
      t.join();
    }
  }

  /* merge pools in worker order */
  u.own_.reserve( last - first );
  u.labels_.reserve( ( last - first ) * u.pairs_ );
  for ( auto& part : parts )
  {
    std::vector<card_id> remap( part.pool.size() );
    for ( std::size_t i = 0; i < part.pool.size(); ++i )
    {
      const auto [it, inserted] = u.ids_.emplace( part.pool[i], static_cast<card_id>( u.pool_.size() ) );
      if ( inserted )
      {
        u.pool_.push_back( std::move( part.pool[i] ) );
      }
      remap[i] = it->second;
    }
    for ( auto id : part.own )
    {
      u.own_.push_back( remap[id] );
    }
    for ( auto id : part.labels )
    {
      u.labels_.push_back( remap[id] );
    }
  }
  return u;
}

universe universe::build( unsigned n, unsigned k, unsigned m, const search_budget& budget )
{
  const auto total = function_count( n, k, m, budget );
  return build_range( n, k, m, 0, total, budget.shard_count );
}

universe universe::build_shard( unsigned n, unsigned k, unsigned m, const search_budget& budget )
{
  const auto [first, last] = shard_range( function_count( n, k, m, budget ), budget );
  return build_range( n, k, m, first, last, 1 );
}

std::optional<card_id> universe::find_card( const card& c ) const
{
  const auto it = ids_.find( c );
  if ( it == ids_.end() )
  {
    return std::nullopt;
  }
  return it->second;
}

finite_function universe::function( std::size_t position ) const
{
  return function_at( n_, k_, m_, first_ + position );
}

std::span<const card_id> universe::labeled( std::size_t position ) const
{
  return std::span<const card_id>( labels_ ).subspan( position * pairs_, pairs_ );
}

std::vector<card_id> universe::deck_key( std::size_t position ) const
{
  const auto cards = labeled( position );
  std::vector<card_id> key( cards.begin(), cards.end() );
  std::sort( key.begin(), key.end() );
  return key;
}

std::vector<card_id> universe::set_deck_key( std::size_t position ) const
{
  auto key = deck_key( position );
  key.erase( std::unique( key.begin(), key.end() ), key.end() );
  return key;
}

/* ---------------------------------------------------------------------- */

namespace
{

set_deck_census census_of( const universe& u )
{
  std::map<std::vector<card_id>, std::map<card_id, std::pair<std::size_t, std::size_t>>> buckets;
  for ( std::size_t pos = 0; pos < u.size(); ++pos )
  {
    auto& members = buckets[u.set_deck_key( pos )];
    const auto [it, inserted] = members.emplace( u.class_of( pos ), std::pair{ u.first_index() + pos, 0 } );
    ++it->second.second;
  }
  std::vector<std::pair<std::string, set_deck_bucket>> keyed;
  for ( const auto& [key, members] : buckets )
  {
    std::vector<card> cards;
    for ( auto id : key )
    {
      cards.push_back( u.card_at( id ) );
    }
    set_deck_bucket bucket{ set_deck( u.arity(), std::move( cards ) ), {} };
    std::vector<std::pair<std::string, bucket_member>> sorted_members;
    for ( const auto& [cls, info] : members )
    {
      sorted_members.emplace_back( print_card( u.card_at( cls ) ),
                                   bucket_member{ u.card_at( cls ), info.first, info.second } );
    }
    std::sort( sorted_members.begin(), sorted_members.end(),
               []( const auto& a, const auto& b ) { return a.first < b.first; } );
    for ( auto& [name, member] : sorted_members )
    {
      bucket.members.push_back( std::move( member ) );
    }
    keyed.emplace_back( print_set_deck( bucket.key ), std::move( bucket ) );
  }
  std::sort( keyed.begin(), keyed.end(), []( const auto& a, const auto& b ) { return a.first < b.first; } );
  set_deck_census census{ u.arity(), u.domain_size(), u.codomain_size(), {} };
  for ( auto& [name, bucket] : keyed )
  {
    census.buckets.push_back( std::move( bucket ) );
  }
  return census;
}

} // namespace

set_deck_census group_by_set_deck( unsigned n, unsigned k, unsigned m, const search_budget& budget )
{
  return census_of( universe::build_shard( n, k, m, budget ) );
}

set_deck_census merge_censuses( std::span<const set_deck_census> parts )
{
  if ( parts.empty() )
  {
    throw range_error( "nothing to merge" );
  }
  std::map<std::string, std::pair<set_deck, std::map<std::string, bucket_member>>> merged;
  for ( const auto& part : parts )
  {
    if ( part.n != parts.front().n || part.k != parts.front().k || part.m != parts.front().m )
    {
      throw domain_error( "censuses of different shapes cannot be merged" );
    }
    for ( const auto& bucket : part.buckets )
    {
      auto it = merged.try_emplace( print_set_deck( bucket.key ), bucket.key, std::map<std::string, bucket_member>{} )
                    .first;
      for ( const auto& member : bucket.members )
      {
        const auto [mit, inserted] = it->second.second.emplace( print_card( member.cls ), member );
        if ( !inserted )
        {
          mit->second.representative = std::min( mit->second.representative, member.representative );
          mit->second.functions += member.functions;
        }
      }
    }
  }
  set_deck_census out{ parts.front().n, parts.front().k, parts.front().m, {} };
  for ( auto& [name, entry] : merged )
  {
    set_deck_bucket bucket{ entry.first, {} };
    for ( auto& [member_name, member] : entry.second )
    {
      bucket.members.push_back( member );
    }
    out.buckets.push_back( std::move( bucket ) );
  }
  return out;
}

std::string census_to_cache( const set_deck_census& census )
{
  std::string out = "minor-deck-cache v1\n";
  for ( const auto& bucket : census.buckets )
  {
    for ( std::size_t i = 0; i < bucket.key.cards().size(); ++i )
    {
      out += ( i ? " | " : "" ) + print_card( bucket.key.cards()[i] );
    }
    for ( const auto& member : bucket.members )
    {
      out += "\t" + std::to_string( member.functions ) + " " + std::to_string( member.representative ) + " " +
             print_card( member.cls );
    }
    out += "\n";
  }
  return out;
}

set_deck_census census_from_cache( std::string_view text, unsigned n )
{
  const std::string_view header = "minor-deck-cache v1\n";
  if ( text.substr( 0, header.size() ) != header )
  {
    throw parse_error( "missing 'minor-deck-cache v1' header", 0 );
  }
  set_deck_census census{ n, 0, 0, {} };
  std::size_t pos = header.size();
  while ( pos < text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    const auto line = text.substr( pos, end - pos );
    const auto line_start = pos;
    pos = end + 1;
    if ( line.empty() )
    {
      continue;
    }
    std::vector<std::string_view> fields;
    for ( std::size_t start = 0;; )
    {
      const auto tab = line.find( '\t', start );
      fields.push_back( line.substr( start, tab == std::string_view::npos ? std::string_view::npos : tab - start ) );
      if ( tab == std::string_view::npos )
      {
        break;
      }
      start = tab + 1;
    }
    if ( fields.size() < 2 )
    {
      throw parse_error( "bucket line needs a set-deck and at least one member", line_start );
    }
    std::vector<card> cards;
    for ( std::size_t start = 0;; )
    {
      const auto bar = fields[0].find( " | ", start );
      cards.push_back( parse_card(
          fields[0].substr( start, bar == std::string_view::npos ? std::string_view::npos : bar - start ) ) );
      if ( bar == std::string_view::npos )
      {
        break;
      }
      start = bar + 3;
    }
    set_deck_bucket bucket{ set_deck( n, std::move( cards ) ), {} };
    for ( std::size_t i = 1; i < fields.size(); ++i )
    {
      const std::string field( fields[i] );
      const auto s1 = field.find( ' ' );
      const auto s2 = s1 == std::string::npos ? std::string::npos : field.find( ' ', s1 + 1 );
      if ( s2 == std::string::npos )
      {
        throw parse_error( "member field must read '<functions> <representative> <card>'", line_start );
      }
      try
      {
        bucket.members.push_back( bucket_member{ parse_card( field.substr( s2 + 1 ) ),
                                                 std::stoull( field.substr( s1 + 1, s2 - s1 - 1 ) ),
                                                 std::stoull( field.substr( 0, s1 ) ) } );
      }
      catch ( const std::logic_error& )
      {
        throw parse_error( "malformed member count", line_start );
      }
    }
    census.k = bucket.key.cards().front().domain_size();
    census.m = bucket.key.cards().front().codomain_size();
    census.buckets.push_back( std::move( bucket ) );
  }
  return census;
}

/* ---------------------------------------------------------------------- */

namespace
{

std::size_t position_in( const universe& u, const finite_function& f )
{
  if ( f.arity() != u.arity() || f.domain_size() != u.domain_size() || f.codomain_size() != u.codomain_size() )
  {
    throw domain_error( "function shape does not match the search universe" );
  }
  const auto index = index_of( f );
  if ( index < u.first_index() || index - u.first_index() >= u.size() )
  {
    throw range_error( "function lies outside the universe's shard" );
  }
  return index - u.first_index();
}

template<typename KeyFn>
std::vector<card> same_key_classes( const universe& u, const finite_function& f, class_filter filter, KeyFn key_of )
{
  require_full( u, "reconstruction search" );
  const auto target = key_of( position_in( u, f ) );
  std::set<card_id> classes;
  for ( std::size_t pos = 0; pos < u.size(); ++pos )
  {
    if ( !classes.contains( u.class_of( pos ) ) && key_of( pos ) == target )
    {
      classes.insert( u.class_of( pos ) );
    }
  }
  std::vector<signed char> cache;
  std::vector<card> out;
  for ( auto id : classes )
  {
    if ( card_passes( u, id, filter, cache ) )
    {
      out.push_back( u.card_at( id ) );
    }
  }
  return cards_sorted( std::move( out ) );
}

} // namespace

std::vector<card> find_set_reconstructions( const universe& u, const finite_function& f, class_filter filter )
{
  return same_key_classes( u, f, filter, [&]( std::size_t pos ) { return u.set_deck_key( pos ); } );
}

std::vector<card> find_set_reconstructions( const finite_function& f, const search_budget& budget,
                                            class_filter filter )
{
  return find_set_reconstructions( universe::build( f.arity(), f.domain_size(), f.codomain_size(), budget ), f,
                                   filter );
}

std::vector<card> find_reconstructions( const universe& u, const finite_function& f, class_filter filter )
{
  return same_key_classes( u, f, filter, [&]( std::size_t pos ) { return u.deck_key( pos ); } );
}

std::vector<card> find_reconstructions( const finite_function& f, const search_budget& budget, class_filter filter )
{
  return find_reconstructions( universe::build( f.arity(), f.domain_size(), f.codomain_size(), budget ), f, filter );
}

/* ---------------------------------------------------------------------- */

std::vector<pair_report> mine_strongly_hypomorphic_pairs( const universe& u, class_filter filter )
{
  require_full( u, "pair mining" );
  const bool boolean = u.domain_size() == 2 && u.codomain_size() == 2;
  if ( filter != class_filter::none && !boolean )
  {
    throw domain_error( "class filters apply to Boolean functions only" );
  }
  std::vector<std::size_t> order( u.size() );
  std::iota( order.begin(), order.end(), std::size_t{ 0 } );
  const auto less = [&]( std::size_t a, std::size_t b ) {
    const auto la = u.labeled( a );
    const auto lb = u.labeled( b );
    return std::lexicographical_compare( la.begin(), la.end(), lb.begin(), lb.end() ) || ( std::equal( la.begin(), la.end(), lb.begin() ) && a < b );
  };
  std::sort( order.begin(), order.end(), less );

  std::vector<signed char> cache;
  std::vector<pair_report> out;
  for ( std::size_t start = 0; start < order.size(); )
  {
    auto end = start + 1;
    const auto head = u.labeled( order[start] );
    while ( end < order.size() && std::ranges::equal( u.labeled( order[end] ), head ) )
    {
      ++end;
    }
    for ( auto i = start; i < end; ++i )
    {
      for ( auto j = i + 1; j < end; ++j )
      {
        const auto a = order[i];
        const auto b = order[j];
        if ( u.class_of( a ) == u.class_of( b ) || !card_passes( u, u.class_of( a ), filter, cache ) ||
             !card_passes( u, u.class_of( b ), filter, cache ) )
        {
          continue;
        }
        const auto f = u.function( a );
        const auto g = u.function( b );
        if ( !strongly_hypomorphic( f, g ) || equivalent( f, g ) )
        {
          throw std::logic_error( "mined pair " + print_literal( f ) + ", " + print_literal( g ) +
                                  " failed re-verification" );
        }
        pair_report report{ print_literal( f ), print_literal( g ), "strongly-hypomorphic", false, {}, {} };
        if ( boolean )
        {
          report.f_flags = classify( f );
          report.g_flags = classify( g );
        }
        out.push_back( std::move( report ) );
      }
    }
    start = end;
  }
  std::sort( out.begin(), out.end(), []( const pair_report& x, const pair_report& y ) {
    return std::tie( x.f_literal, x.g_literal ) < std::tie( y.f_literal, y.g_literal );
  } );
  return out;
}

std::vector<pair_report> mine_strongly_hypomorphic_pairs( unsigned n, unsigned k, unsigned m, class_filter filter,
                                                          const search_budget& budget )
{
  return mine_strongly_hypomorphic_pairs( universe::build( n, k, m, budget ), filter );
}

/* ---------------------------------------------------------------------- */

search_report verify_dichotomy( const universe& u )
{
  const auto start = clock_type::now();
  require_boolean_universe( u, "dichotomy verification" );
  require_full( u, "dichotomy verification" );
  const bool applies = u.arity() >= 4;

  search_report r;
  r.command = "verify-dichotomy";
  r.parameters["n"] = u.arity();
  r.parameters["k"] = 2;
  r.parameters["m"] = 2;
  r.parameters["arity_sufficient"] = applies;

  struct bucket_info
  {
    std::set<card_id> classes;
    std::size_t functions = 0;
    std::optional<std::size_t> witness; /* a member of the clone union */
  };
  std::map<std::vector<card_id>, bucket_info> set_buckets;
  std::map<std::vector<card_id>, bucket_info> deck_buckets;
  std::set<card_id> classes;
  std::size_t clone_members = 0;
  std::size_t symmetric_members = 0;
  for ( std::size_t pos = 0; pos < u.size(); ++pos )
  {
    const auto f = u.function( pos );
    classes.insert( u.class_of( pos ) );
    auto& sb = set_buckets[u.set_deck_key( pos )];
    sb.classes.insert( u.class_of( pos ) );
    ++sb.functions;
    if ( in_clone_union( f ) )
    {
      ++clone_members;
      if ( !sb.witness )
      {
        sb.witness = pos;
      }
    }
    auto& db = deck_buckets[u.deck_key( pos )];
    db.classes.insert( u.class_of( pos ) );
    ++db.functions;
    if ( is_totally_symmetric( f ) )
    {
      ++symmetric_members;
      if ( !db.witness )
      {
        db.witness = pos;
      }
    }
  }

  std::size_t clone_buckets = 0;
  std::size_t bad_clone_buckets = 0;
  std::size_t largest_classes = 0;
  std::size_t largest_functions = 0;
  for ( const auto& [key, info] : set_buckets )
  {
    largest_classes = std::max( largest_classes, info.classes.size() );
    largest_functions = std::max( largest_functions, info.functions );
    if ( !info.witness )
    {
      continue;
    }
    ++clone_buckets;
    if ( info.classes.size() > 1 )
    {
      ++bad_clone_buckets;
      if ( applies )
      {
        std::vector<card_id> cls( info.classes.begin(), info.classes.end() );
        r.violations.push_back( "set-deck " + set_card_list( u, key ) + " of clone member " +
                                print_literal( u.function( *info.witness ) ) + " is shared by " +
                                std::to_string( cls.size() ) + " classes: " + set_card_list( u, cls ) );
      }
    }
  }
  std::size_t symmetric_buckets = 0;
  std::size_t bad_symmetric_buckets = 0;
  for ( const auto& [key, info] : deck_buckets )
  {
    if ( !info.witness )
    {
      continue;
    }
    ++symmetric_buckets;
    if ( info.classes.size() > 1 )
    {
      ++bad_symmetric_buckets;
      if ( applies )
      {
        std::vector<card_id> cls( info.classes.begin(), info.classes.end() );
        r.violations.push_back( "deck of totally symmetric " + print_literal( u.function( *info.witness ) ) +
                                " is shared by " + std::to_string( cls.size() ) + " classes: " +
                                set_card_list( u, cls ) );
      }
    }
  }

  r.count( "functions", static_cast<std::int64_t>( u.size() ) );
  r.count( "classes", static_cast<std::int64_t>( classes.size() ) );
  r.count( "set_deck_buckets", static_cast<std::int64_t>( set_buckets.size() ) );
  r.count( "deck_buckets", static_cast<std::int64_t>( deck_buckets.size() ) );
  r.count( "largest_bucket_classes", static_cast<std::int64_t>( largest_classes ) );
  r.count( "largest_bucket_functions", static_cast<std::int64_t>( largest_functions ) );
  r.count( "clone_members", static_cast<std::int64_t>( clone_members ) );
  r.count( "clone_buckets", static_cast<std::int64_t>( clone_buckets ) );
  r.count( "nonsingleton_clone_buckets", static_cast<std::int64_t>( bad_clone_buckets ) );
  r.count( "symmetric_members", static_cast<std::int64_t>( symmetric_members ) );
  r.count( "symmetric_deck_buckets", static_cast<std::int64_t>( symmetric_buckets ) );
  r.count( "nonsingleton_symmetric_deck_buckets", static_cast<std::int64_t>( bad_symmetric_buckets ) );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

search_report verify_dichotomy( unsigned n, const search_budget& budget )
{
  const auto start = clock_type::now();
  auto r = verify_dichotomy( universe::build( n, 2, 2, budget ) );
  r.parameters["shards"] = budget.shard_count;
  r.elapsed_seconds = seconds_since( start );
  return r;
}

search_report verify_gsl( const universe& u )
{
  const auto start = clock_type::now();
  require_full( u, "essentially unary verification" );
  const bool applies = u.arity() >= std::max( u.domain_size(), 3u ) + 1;

  search_report r;
  r.command = "verify-gsl";
  r.parameters["n"] = u.arity();
  r.parameters["k"] = u.domain_size();
  r.parameters["m"] = u.codomain_size();
  r.parameters["arity_sufficient"] = applies;

  std::vector<char> unary( u.card_count() );
  for ( card_id id = 0; id < u.card_count(); ++id )
  {
    unary[id] = card_is_unary( u.card_at( id ) );
  }
  std::size_t unary_functions = 0;
  std::size_t all_cards_unary = 0;
  std::size_t biconditional_failures = 0;
  std::size_t card_failures = 0;
  for ( std::size_t pos = 0; pos < u.size(); ++pos )
  {
    const auto labels = u.labeled( pos );
    const bool f_unary = unary[u.class_of( pos )];
    const bool cards_unary = std::all_of( labels.begin(), labels.end(), [&]( auto id ) { return unary[id]; } );
    unary_functions += f_unary;
    all_cards_unary += cards_unary;
    if ( f_unary != cards_unary )
    {
      ++biconditional_failures;
      if ( applies )
      {
        r.violations.push_back( print_literal( u.function( pos ) ) +
                                ( f_unary ? " is essentially unary but has a card that is not"
                                          : " is not essentially unary but all its cards are" ) );
      }
    }
    if ( f_unary && !std::all_of( labels.begin(), labels.end(), [&]( auto id ) { return id == u.class_of( pos ); } ) )
    {
      ++card_failures;
      if ( applies )
      {
        r.violations.push_back( print_literal( u.function( pos ) ) + " has a card not equivalent to itself" );
      }
    }
  }
  r.count( "functions", static_cast<std::int64_t>( u.size() ) );
  r.count( "essentially_unary", static_cast<std::int64_t>( unary_functions ) );
  r.count( "all_cards_essentially_unary", static_cast<std::int64_t>( all_cards_unary ) );
  r.count( "biconditional_failures", static_cast<std::int64_t>( biconditional_failures ) );
  r.count( "card_equivalence_failures", static_cast<std::int64_t>( card_failures ) );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

search_report verify_gsl( unsigned n, const search_budget& budget )
{
  const auto start = clock_type::now();
  auto r = verify_gsl( universe::build( n, 2, 2, budget ) );
  r.parameters["shards"] = budget.shard_count;
  r.elapsed_seconds = seconds_since( start );
  return r;
}

/* ---------------------------------------------------------------------- */

std::vector<finite_function> totally_symmetric_functions( unsigned n )
{
  if ( n < 1 || n > 20 )
  {
    throw arity_error( "symmetric suites are built for arity 1..20" );
  }
  std::vector<finite_function> out;
  const std::size_t cells = std::size_t{ 1 } << n;
  for ( std::uint64_t pattern = 0; pattern < ( std::uint64_t{ 1 } << ( n + 1 ) ); ++pattern )
  {
    std::vector<value_t> table( cells );
    for ( std::size_t t = 0; t < cells; ++t )
    {
      table[t] = static_cast<value_t>( ( pattern >> std::popcount( t ) ) & 1u );
    }
    out.emplace_back( n, 2, 2, std::move( table ) );
  }
  return out;
}

willard_check check_willard( const finite_function& f )
{
  willard_check c;
  c.depends_on_all = essential_args( f ).size() == f.arity();
  c.cards_symmetric = true;
  if ( f.arity() >= 2 )
  {
    for ( const auto& pair : index_pairs( f.arity() ) )
    {
      if ( !is_totally_symmetric( identification_minor( f, pair ) ) )
      {
        c.cards_symmetric = false;
        break;
      }
    }
  }
  c.conclusion = ( is_determined_by_supp( f ) || is_determined_by_oddsupp( f ) ) && is_totally_symmetric( f );
  return c;
}

search_report verify_willard_property( unsigned n, unsigned k, std::size_t sample_count, std::uint64_t seed )
{
  const auto start = clock_type::now();
  if ( k != 2 )
  {
    throw domain_error( "the symmetric-card suite is built for Boolean functions (k = 2)" );
  }
  if ( n < std::max( k, 3u ) + 2 )
  {
    throw range_error( "the symmetric-card implication needs n >= max(k,3)+2 = 5" );
  }
  if ( n > 16 )
  {
    throw budget_error( "the symmetric-card suite is limited to arity 16" );
  }
  search_report r;
  r.command = "verify-willard";
  r.parameters["n"] = n;
  r.parameters["k"] = k;
  r.parameters["samples"] = sample_count;
  r.parameters["seed"] = seed;

  std::size_t hypothesis = 0;
  std::size_t counterexamples = 0;
  const auto examine = [&]( const finite_function& f, const char* origin ) {
    const auto c = check_willard( f );
    hypothesis += c.hypothesis();
    if ( c.counterexample() )
    {
      ++counterexamples;
      r.violations.push_back( std::string( origin ) + " " + print_literal( f ) );
    }
  };

  const auto symmetric = totally_symmetric_functions( n );
  for ( const auto& f : symmetric )
  {
    examine( f, "symmetric" );
  }
  std::size_t perturbed = 0;
  for ( const auto& f : symmetric )
  {
    for ( std::size_t cell = 0; cell < f.size(); ++cell )
    {
      std::vector<value_t> table( f.table().begin(), f.table().end() );
      table[cell] ^= 1u;
      examine( finite_function( n, 2, 2, std::move( table ) ), "perturbed" );
      ++perturbed;
    }
  }
  std::mt19937_64 rng( seed );
  const std::size_t cells = std::size_t{ 1 } << n;
  for ( std::size_t s = 0; s < sample_count; ++s )
  {
    std::vector<value_t> table( cells );
    std::uint64_t word = 0;
    for ( std::size_t t = 0; t < cells; ++t )
    {
      if ( t % 64 == 0 )
      {
        word = rng();
      }
      table[t] = static_cast<value_t>( ( word >> ( 63 - t % 64 ) ) & 1u );
    }
    examine( finite_function( n, 2, 2, std::move( table ) ), "random" );
  }

  r.count( "symmetric_suite", static_cast<std::int64_t>( symmetric.size() ) );
  r.count( "perturbed_suite", static_cast<std::int64_t>( perturbed ) );
  r.count( "random_samples", static_cast<std::int64_t>( sample_count ) );
  r.count( "hypothesis_holds", static_cast<std::int64_t>( hypothesis ) );
  r.count( "counterexamples", static_cast<std::int64_t>( counterexamples ) );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

/* ---------------------------------------------------------------------- */

search_report verify_deck_counts( std::span<const unsigned> arities )
{
  const auto start = clock_type::now();
  search_report r;
  r.command = "verify-deck-counts";
  r.parameters["arities"] = std::vector<unsigned>( arities.begin(), arities.end() );
  r.parameters["operations"] = std::vector<std::string>{ "meet", "join", "xor" };

  const std::vector<std::pair<std::string, binary_op>> ops = {
      { "meet", binary_op::meet() }, { "join", binary_op::join() }, { "xor", binary_op::xor_group() } };
  std::int64_t cases = 0;
  for ( const auto& [name, op] : ops )
  {
    /* identifying two of the r active arguments drops one (semilattice)
       or two (Boolean group) of them */
    const unsigned drop = op.kind() == binary_op::kind_t::semilattice ? 1 : 2;
    for ( auto n : arities )
    {
      if ( n < 3 )
      {
        throw arity_error( "deck counts are checked for arity at least 3" );
      }
      for ( unsigned r_active = 2; r_active + 1 <= n; ++r_active )
      {
        const auto lower_arity = r_active - drop;
        const auto lower = canonical_form( iterated_op( op, lower_arity, std::max( lower_arity, 1u ) ) );
        const auto upper = canonical_form( iterated_op( op, r_active, r_active ) );
        std::vector<card> expected( binomial2( r_active ), lower );
        expected.insert( expected.end(), binomial2( n ) - binomial2( r_active ), upper );
        const deck want( n, std::move( expected ) );
        const auto got = deck_of( iterated_op( op, r_active, n ) );
        ++cases;
        if ( got != want )
        {
          r.violations.push_back( name + " r=" + std::to_string( r_active ) + " n=" + std::to_string( n ) +
                                  ": deck differs from " + std::to_string( binomial2( r_active ) ) + " + " +
                                  std::to_string( binomial2( n ) - binomial2( r_active ) ) + " law" );
        }
      }
    }
  }
  r.count( "cases", cases );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

search_report verify_iterated_set_decks( const universe& u )
{
  const auto start = clock_type::now();
  require_boolean_universe( u, "the 4-ary set-deck check" );
  require_full( u, "the 4-ary set-deck check" );
  if ( u.arity() != 4 )
  {
    throw range_error( "the 4-ary set-deck check runs at n = 4" );
  }
  search_report r;
  r.command = "verify-iterated-setdecks";
  r.parameters["n"] = 4;
  const std::vector<std::pair<std::string, binary_op>> ops = {
      { "meet", binary_op::meet() }, { "join", binary_op::join() }, { "xor", binary_op::xor_group() } };
  for ( const auto& [name, op] : ops )
  {
    for ( unsigned r_active : { 2u, 3u } )
    {
      const auto target_fn = iterated_op( op, r_active, 4 );
      const auto target = u.set_deck_key( index_of( target_fn ) );
      std::int64_t matches = 0;
      for ( std::size_t pos = 0; pos < u.size(); ++pos )
      {
        if ( u.set_deck_key( pos ) != target )
        {
          continue;
        }
        ++matches;
        if ( u.card_at( u.class_of( pos ) ).essential_arity() == 4 )
        {
          r.violations.push_back( print_literal( u.function( pos ) ) + " depends on all arguments and shares the set-deck of " +
                                  name + "_" + std::to_string( r_active ) );
        }
      }
      r.count( "set_reconstructions_" + name + "_" + std::to_string( r_active ), matches );
    }
  }
  r.elapsed_seconds = seconds_since( start );
  return r;
}

search_report verify_iterated_set_decks( const search_budget& budget )
{
  const auto start = clock_type::now();
  auto r = verify_iterated_set_decks( universe::build( 4, 2, 2, budget ) );
  r.parameters["shards"] = budget.shard_count;
  r.elapsed_seconds = seconds_since( start );
  return r;
}

std::vector<finite_function> clone_members( unsigned n )
{
  if ( n < 1 || n > 16 )
  {
    throw arity_error( "clone members are listed for arity 1..16" );
  }
  const std::size_t cells = std::size_t{ 1 } << n;
  std::set<std::vector<value_t>> tables;
  tables.insert( std::vector<value_t>( cells, 0 ) );
  tables.insert( std::vector<value_t>( cells, 1 ) );
  /* subset bit i-1 selects x_i, which is table-index bit n-i */
  const auto index_mask = [n]( std::uint32_t subset ) {
    std::size_t mask = 0;
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( subset >> i ) & 1u )
      {
        mask |= std::size_t{ 1 } << ( n - 1 - i );
      }
    }
    return mask;
  };
  for ( std::uint32_t subset = 0; subset < ( 1u << n ); ++subset )
  {
    const auto mask = index_mask( subset );
    std::vector<value_t> conj( cells ), disj( cells ), affine( cells ), affine1( cells );
    for ( std::size_t t = 0; t < cells; ++t )
    {
      conj[t] = ( t & mask ) == mask;
      disj[t] = ( t & mask ) != 0;
      affine[t] = std::popcount( t & mask ) & 1;
      affine1[t] = affine[t] ^ 1u;
    }
    if ( subset != 0 )
    {
      tables.insert( std::move( conj ) );
      tables.insert( std::move( disj ) );
    }
    tables.insert( std::move( affine ) );
    tables.insert( std::move( affine1 ) );
  }
  std::vector<finite_function> out;
  for ( const auto& t : tables )
  {
    out.emplace_back( n, 2, 2, t );
  }
  return out;
}

search_report verify_within_class( unsigned n )
{
  const auto start = clock_type::now();
  if ( n < 2 )
  {
    throw arity_error( "set-decks need arity at least 2" );
  }
  search_report r;
  r.command = "verify-class-setdecks";
  r.parameters["n"] = n;
  const auto members = clone_members( n );
  std::map<std::string, std::map<std::string, std::string>> buckets; /* set-deck -> class -> representative */
  std::set<std::string> classes;
  for ( const auto& f : members )
  {
    const auto cls = print_card( canonical_form( f ) );
    classes.insert( cls );
    buckets[print_set_deck( set_deck_of( f ) )].emplace( cls, print_literal( f ) );
  }
  for ( const auto& [key, bucket] : buckets )
  {
    if ( bucket.size() > 1 )
    {
      std::string names;
      for ( const auto& [cls, rep] : bucket )
      {
        names += ( names.empty() ? "" : ", " ) + rep;
      }
      r.violations.push_back( "nonequivalent clone members share a set-deck: " + names );
    }
  }
  r.count( "members", static_cast<std::int64_t>( members.size() ) );
  r.count( "classes", static_cast<std::int64_t>( classes.size() ) );
  r.count( "set_deck_buckets", static_cast<std::int64_t>( buckets.size() ) );
  r.elapsed_seconds = seconds_since( start );
  return r;
}

} // namespace minordeck
