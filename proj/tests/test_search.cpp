#include <doctest.h>

#include <minordeck/literal.hpp>
#include <minordeck/search.hpp>

#include <json.hpp>

#include <map>
#include <set>

#include "oracle.hpp"

using namespace minordeck;

namespace
{

finite_function lit( const char* text )
{
  return parse_literal( text );
}

search_budget shard( unsigned count, unsigned index )
{
  search_budget b;
  b.shard_count = count;
  b.shard_index = index;
  return b;
}

const universe& boolean_universe( unsigned n )
{
  static std::map<unsigned, universe> cache;
  auto it = cache.find( n );
  if ( it == cache.end() )
  {
    it = cache.emplace( n, universe::build( n, 2, 2, search_budget{} ) ).first;
  }
  return it->second;
}

std::string stable_json( const search_report& r )
{
  return report_to_json( r, false );
}

/* frozen from an independent exhaustive run over raw truth tables */
struct frozen_census
{
  std::size_t classes;
  std::size_t set_deck_buckets;
  std::size_t deck_buckets;
  std::size_t strong_pairs;
  std::size_t largest_bucket_classes;
  std::size_t largest_bucket_functions;
  std::map<std::size_t, std::size_t> classes_per_bucket;
};

const frozen_census frozen_n3{ 80, 28, 40, 256, 5, 18, { { 1, 8 }, { 2, 8 }, { 4, 4 }, { 5, 8 } } };
const frozen_census frozen_n4{ 3984, 3220, 3852, 0, 4, 72, { { 1, 2600 }, { 2, 500 }, { 3, 96 }, { 4, 24 } } };

} // namespace

TEST_CASE( "function numbering" )
{
  CHECK( print_literal( function_at( 2, 2, 2, 1 ) ) == "b2:0001" );
  CHECK( print_literal( function_at( 2, 2, 2, 8 ) ) == "b2:1000" );
  CHECK( index_of( lit( "b3:00010111" ) ) == 0b00010111 );
  CHECK( index_of( function_at( 2, 3, 2, 300 ) ) == 300 );
  for ( std::size_t i = 0; i < 256; ++i )
  {
    REQUIRE( index_of( function_at( 3, 2, 2, i ) ) == i );
  }
}

TEST_CASE( "enumeration and shards" )
{
  CHECK( enumerate_functions( 2, 2, 2, {} ).size() == 16 );
  CHECK( enumerate_functions( 4, 2, 2, {} ).size() == 65536 );
  CHECK( function_count( 1, 3, 3, {} ) == 27 );
  CHECK_THROWS_AS( function_count( 5, 2, 2, {} ), budget_error );
  search_budget tight;
  tight.max_table_cells = 4;
  CHECK_THROWS_AS( enumerate_functions( 3, 2, 2, tight ), budget_error );
  CHECK_THROWS_AS( enumerate_functions( 3, 2, 2, shard( 2, 2 ) ), range_error );
  CHECK_THROWS_AS( enumerate_functions( 3, 2, 2, shard( 0, 0 ) ), range_error );

  std::set<std::size_t> seen;
  std::size_t previous_end = 0;
  for ( unsigned s = 0; s < 4; ++s )
  {
    const auto part = enumerate_functions( 3, 2, 2, shard( 4, s ) );
    CHECK( part.size() == 64 );
    CHECK( index_of( part.front() ) == previous_end );
    previous_end = index_of( part.back() ) + 1;
    for ( const auto& f : part )
    {
      CHECK( seen.insert( index_of( f ) ).second );
    }
  }
  CHECK( seen.size() == 256 );
  /* uneven split */
  std::size_t total = 0;
  for ( unsigned s = 0; s < 7; ++s )
  {
    const auto [first, last] = shard_range( 256, shard( 7, s ) );
    total += last - first;
    CHECK( last - first >= 36 );
    CHECK( last - first <= 37 );
  }
  CHECK( total == 256 );
}

TEST_CASE( "filters" )
{
  CHECK( parse_filter( "lambda" ) == class_filter::lambda );
  CHECK( parse_filter( "monotone" ) == class_filter::monotone );
  CHECK( filter_name( class_filter::clones ) == "clones" );
  CHECK_THROWS_AS( parse_filter( "bogus" ), parse_error );
  CHECK( passes( class_filter::clones, lit( "b2:0110" ) ) );
  CHECK_FALSE( passes( class_filter::lambda, lit( "b2:0110" ) ) );
  CHECK( passes( class_filter::none, lit( "b2:0110" ) ) );
}

TEST_CASE( "universe" )
{
  const auto& u = boolean_universe( 3 );
  CHECK( u.size() == 256 );
  CHECK( u.pair_count() == 3 );
  CHECK( u.function( 23 ) == function_at( 3, 2, 2, 23 ) );
  CHECK( u.card_at( u.class_of( 23 ) ) == canonical_form( u.function( 23 ) ) );
  const auto labels = u.labeled( 23 );
  const auto expected = labeled_deck_of( u.function( 23 ) );
  REQUIRE( labels.size() == 3 );
  for ( std::size_t i = 0; i < 3; ++i )
  {
    CHECK( u.card_at( labels[i] ) == expected[i].c );
  }
  CHECK( u.find_card( canonical_form( lit( "b1:01" ) ) ).has_value() );
  CHECK_FALSE( u.find_card( canonical_form( lit( "b4:0110100110010110" ) ) ).has_value() );

  const auto part = universe::build_shard( 3, 2, 2, shard( 4, 2 ) );
  CHECK( part.first_index() == 128 );
  CHECK( part.size() == 64 );
  CHECK( part.function( 0 ) == function_at( 3, 2, 2, 128 ) );
}

TEST_CASE( "set-deck census against the frozen table oracle" )
{
  for ( unsigned n : { 3u, 4u } )
  {
    const auto& frozen = n == 3 ? frozen_n3 : frozen_n4;
    const auto census = group_by_set_deck( n, 2, 2, {} );
    CHECK( census.buckets.size() == frozen.set_deck_buckets );
    std::map<std::size_t, std::size_t> histogram;
    std::size_t functions = 0;
    std::set<card> classes;
    for ( const auto& bucket : census.buckets )
    {
      ++histogram[bucket.members.size()];
      for ( const auto& m : bucket.members )
      {
        functions += m.functions;
        CHECK( classes.insert( m.cls ).second );
        CHECK( canonical_form( function_at( n, 2, 2, m.representative ) ) == m.cls );
      }
    }
    CHECK( histogram == frozen.classes_per_bucket );
    CHECK( functions == ( std::size_t{ 1 } << ( 1u << n ) ) );
    CHECK( classes.size() == frozen.classes );

    const auto report = verify_dichotomy( boolean_universe( n ) );
    CHECK( report.count_of( "classes" ) == static_cast<std::int64_t>( frozen.classes ) );
    CHECK( report.count_of( "set_deck_buckets" ) == static_cast<std::int64_t>( frozen.set_deck_buckets ) );
    CHECK( report.count_of( "deck_buckets" ) == static_cast<std::int64_t>( frozen.deck_buckets ) );
    CHECK( report.count_of( "largest_bucket_classes" ) == static_cast<std::int64_t>( frozen.largest_bucket_classes ) );
    CHECK( report.count_of( "largest_bucket_functions" ) ==
           static_cast<std::int64_t>( frozen.largest_bucket_functions ) );
    CHECK( mine_strongly_hypomorphic_pairs( boolean_universe( n ), class_filter::none ).size() ==
           frozen.strong_pairs );
  }
}

TEST_CASE( "the table oracle reproduces the frozen census" )
{
  for ( unsigned n : { 2u, 3u, 4u } )
  {
    const auto c = oracle::boolean_census( n );
    if ( n == 2 )
    {
      CHECK( c.classes == 12 );
      CHECK( c.set_deck_buckets == 4 );
      CHECK( c.strong_pairs == 20 );
      continue;
    }
    const auto& frozen = n == 3 ? frozen_n3 : frozen_n4;
    CHECK( c.classes == frozen.classes );
    CHECK( c.set_deck_buckets == frozen.set_deck_buckets );
    CHECK( c.deck_buckets == frozen.deck_buckets );
    CHECK( c.strong_pairs == frozen.strong_pairs );
    CHECK( c.largest_bucket_classes == frozen.largest_bucket_classes );
    CHECK( c.largest_bucket_functions == frozen.largest_bucket_functions );
    CHECK( c.classes_per_bucket == frozen.classes_per_bucket );
  }
}

TEST_CASE( "binary functions have single-card decks" )
{
  const auto census = group_by_set_deck( 2, 2, 2, {} );
  CHECK( census.buckets.size() == 4 );
  for ( const auto& bucket : census.buckets )
  {
    CHECK( bucket.key.size() == 1 );
  }
}

TEST_CASE( "sharded censuses merge to the full census" )
{
  for ( unsigned n : { 3u, 4u } )
  {
    const auto full = group_by_set_deck( n, 2, 2, {} );
    std::vector<set_deck_census> parts;
    for ( unsigned s = 0; s < 5; ++s )
    {
      parts.push_back( group_by_set_deck( n, 2, 2, shard( 5, s ) ) );
    }
    CHECK( merge_censuses( parts ) == full );
    std::reverse( parts.begin(), parts.end() );
    CHECK( merge_censuses( parts ) == full );
  }
  CHECK_THROWS_AS( merge_censuses( {} ), range_error );
}

TEST_CASE( "census cache round trip" )
{
  const auto census = group_by_set_deck( 3, 2, 2, {} );
  const auto text = census_to_cache( census );
  CHECK( text.rfind( "minor-deck-cache v1\n", 0 ) == 0 );
  CHECK( census_from_cache( text, 3 ) == census );
  CHECK_THROWS_AS( census_from_cache( "minor-deck-cache v2\n", 3 ), parse_error );
  CHECK_THROWS_AS( census_from_cache( "minor-deck-cache v1\ncard k=2 m=2 e=1 v=01\n", 3 ), parse_error );
  CHECK_THROWS_AS( census_from_cache( "minor-deck-cache v1\ncard k=2 m=2 e=1 v=01\tx 2 card k=2 m=2 e=1 v=01\n", 3 ),
                   parse_error );
}

TEST_CASE( "set-reconstructions and reconstructions" )
{
  const auto& u4 = boolean_universe( 4 );
  const auto a2 = iterated_op( binary_op::meet(), 2, 4 );
  const auto own = canonical_form( a2 );
  const auto monotone = find_set_reconstructions( u4, a2, class_filter::monotone );
  REQUIRE( monotone.size() == 1 );
  CHECK( monotone.front() == own );
  for ( const auto& c : find_set_reconstructions( u4, a2 ) )
  {
    CHECK( ( c == own || c.essential_arity() <= 3 ) );
  }
  const auto maj = lit( "b3:00010111" );
  const auto recon = find_set_reconstructions( maj, search_budget{} );
  CHECK( std::find( recon.begin(), recon.end(), canonical_form( maj ) ) != recon.end() );

  CHECK_THROWS_AS( find_set_reconstructions( u4, maj ), domain_error );
  const auto part = universe::build_shard( 4, 2, 2, shard( 2, 0 ) );
  CHECK_THROWS_AS( find_set_reconstructions( part, a2 ), range_error );

  for ( std::size_t x = 0; x < 65536; x += 1009 )
  {
    const auto f = function_at( 4, 2, 2, x );
    const auto full = find_reconstructions( u4, f );
    const auto set = find_set_reconstructions( u4, f );
    CHECK( std::find( full.begin(), full.end(), canonical_form( f ) ) != full.end() );
    for ( const auto& c : full )
    {
      CHECK( std::find( set.begin(), set.end(), c ) != set.end() );
    }
  }
}

TEST_CASE( "mined pairs" )
{
  const auto pairs3 = mine_strongly_hypomorphic_pairs( boolean_universe( 3 ), class_filter::none );
  CHECK( pairs3.size() == 256 );
  for ( const auto& p : pairs3 )
  {
    const auto f = parse_literal( p.f_literal );
    const auto g = parse_literal( p.g_literal );
    CHECK( strongly_hypomorphic( f, g ) );
    CHECK_FALSE( equivalent( f, g ) );
    CHECK( p.relation == "strongly-hypomorphic" );
    CHECK( p.f_flags == classify( f ) );
  }
  CHECK( mine_strongly_hypomorphic_pairs( 3, 2, 2, class_filter::none, shard( 3, 1 ) ).size() == 256 );
  CHECK( mine_strongly_hypomorphic_pairs( boolean_universe( 4 ), class_filter::clones ).empty() );
  CHECK( mine_strongly_hypomorphic_pairs( boolean_universe( 4 ), class_filter::none ).empty() );
  CHECK( mine_strongly_hypomorphic_pairs( 2, 2, 2, class_filter::none, {} ).size() == 20 );
  /* non-Boolean shapes mine without filters */
  CHECK_NOTHROW( mine_strongly_hypomorphic_pairs( 2, 3, 2, class_filter::none, {} ) );
  CHECK_THROWS_AS( mine_strongly_hypomorphic_pairs( 2, 3, 2, class_filter::l, {} ), domain_error );
}

TEST_CASE( "dichotomy report" )
{
  const auto r = verify_dichotomy( boolean_universe( 4 ) );
  CHECK( r.ok() );
  CHECK( r.count_of( "clone_members" ) == 54 );
  CHECK( r.count_of( "nonsingleton_clone_buckets" ) == 0 );
  CHECK( r.count_of( "symmetric_members" ) == 32 );
  CHECK( r.count_of( "nonsingleton_symmetric_deck_buckets" ) == 0 );
  CHECK( r.command == "verify-dichotomy" );
  const auto r3 = verify_dichotomy( boolean_universe( 3 ) );
  CHECK( r3.ok() );
  CHECK( r3.count_of( "nonsingleton_clone_buckets" ) > 0 );
}

TEST_CASE( "essentially unary report" )
{
  const auto r = verify_gsl( boolean_universe( 4 ) );
  CHECK( r.ok() );
  CHECK( r.count_of( "essentially_unary" ) == 8 );
  CHECK( r.count_of( "all_cards_essentially_unary" ) == 8 );
  CHECK( r.parameters["arity_sufficient"] == true );
  const auto r3 = verify_gsl( boolean_universe( 3 ) );
  CHECK( r3.ok() );
  CHECK( r3.parameters["arity_sufficient"] == false );
  CHECK( r3.count_of( "all_cards_essentially_unary" ) > r3.count_of( "essentially_unary" ) );

  /* negation padded to arity 4: all six cards equal its own card */
  const std::vector<unsigned> sigma{ 3 };
  const auto f = minor_via_map( lit( "b1:10" ), sigma, 4 );
  for ( const auto& lc : labeled_deck_of( f ) )
  {
    CHECK( lc.c == canonical_form( f ) );
  }
}

TEST_CASE( "symmetric-card implication" )
{
  const auto symmetric = totally_symmetric_functions( 5 );
  CHECK( symmetric.size() == 64 );
  for ( const auto& f : symmetric )
  {
    CHECK( is_totally_symmetric( f ) );
    CHECK_FALSE( check_willard( f ).counterexample() );
  }
  /* flipping one cell of a nonconstant symmetric function breaks card symmetry */
  const auto base = symmetric[5];
  std::vector<value_t> t( base.table().begin(), base.table().end() );
  t[0b00111] ^= 1u;
  const auto flipped = make_function( 5, 2, 2, t );
  CHECK_FALSE( check_willard( flipped ).cards_symmetric );
  CHECK( check_willard( lit( "b5:01101001100101101001011001101001" ) ).conclusion );

  const auto r = verify_willard_property( 5, 2, 2000, 7 );
  CHECK( r.ok() );
  CHECK( r.count_of( "symmetric_suite" ) == 64 );
  CHECK( r.count_of( "random_samples" ) == 2000 );
  CHECK( stable_json( r ) == stable_json( verify_willard_property( 5, 2, 2000, 7 ) ) );
  CHECK( r.parameters["seed"] == 7 );
  CHECK_THROWS_AS( verify_willard_property( 4, 2, 10, 1 ), range_error );
  CHECK_THROWS_AS( verify_willard_property( 5, 3, 10, 1 ), domain_error );
}

TEST_CASE( "deck-count law report" )
{
  const std::vector<unsigned> arities{ 4, 5, 6 };
  const auto r = verify_deck_counts( arities );
  CHECK( r.ok() );
  CHECK( r.count_of( "cases" ) == 27 );
}

TEST_CASE( "4-ary set-decks of iterated operations" )
{
  const auto r = verify_iterated_set_decks( boolean_universe( 4 ) );
  CHECK( r.ok() );
  CHECK( r.count_of( "set_reconstructions_meet_2" ) == 6 );
  CHECK( r.count_of( "set_reconstructions_xor_3" ) == 4 );
  CHECK_THROWS_AS( verify_iterated_set_decks( boolean_universe( 3 ) ), range_error );
}

TEST_CASE( "within-class set-decks at arity 5" )
{
  const auto r = verify_within_class( 5 );
  CHECK( r.ok() );
  CHECK( r.count_of( "members" ) == 116 );
  CHECK( r.count_of( "classes" ) == r.count_of( "set_deck_buckets" ) );
}

TEST_CASE( "reports are deterministic across shard schedules" )
{
  search_budget one;
  search_budget three = shard( 3, 0 );
  auto a = verify_dichotomy( 4, one );
  auto b = verify_dichotomy( 4, three );
  a.parameters.erase( "shards" );
  b.parameters.erase( "shards" );
  CHECK( stable_json( a ) == stable_json( b ) );
  CHECK( stable_json( verify_gsl( 4, one ) ) == stable_json( verify_gsl( 4, one ) ) );

  const auto json = report_to_json_value( verify_gsl( 3, one ) );
  CHECK( json.contains( "elapsed" ) );
  CHECK( json["violations"].is_array() );
  CHECK( json["counts"]["functions"] == 256 );
  CHECK_FALSE( report_to_json_value( verify_gsl( 3, one ), false ).contains( "elapsed" ) );
}
