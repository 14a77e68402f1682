#include "minordeck/deck.hpp"

#include <algorithm>

#include "minordeck/literal.hpp"

namespace minordeck
{

namespace
{

std::size_t pair_count( unsigned n )
{
  return std::size_t{ n } * ( n - 1 ) / 2;
}

void require_deckable( const finite_function& f )
{
  if ( f.arity() < 2 )
  {
    throw arity_error( "decks are defined for arity at least 2" );
  }
}

void require_same_shape( const finite_function& f, const finite_function& g )
{
  if ( f.arity() != g.arity() || f.domain_size() != g.domain_size() || f.codomain_size() != g.codomain_size() )
  {
    throw domain_error( "hypomorphy compares functions of equal arity, domain and codomain" );
  }
}

/* groups equal cards, ordered by their serialization */
std::vector<std::pair<std::string, deck_entry>> sorted_groups( std::vector<card> cards )
{
  std::vector<std::pair<std::string, card>> keyed;
  keyed.reserve( cards.size() );
  for ( auto& c : cards )
  {
    auto key = print_card( c );
    keyed.emplace_back( std::move( key ), std::move( c ) );
  }
  std::sort( keyed.begin(), keyed.end(), []( const auto& a, const auto& b ) { return a.first < b.first; } );
  std::vector<std::pair<std::string, deck_entry>> groups;
  for ( auto& [key, c] : keyed )
  {
    if ( !groups.empty() && groups.back().first == key )
    {
      ++groups.back().second.multiplicity;
    }
    else
    {
      groups.push_back( { key, deck_entry{ std::move( c ), 1 } } );
    }
  }
  return groups;
}

struct text_line
{
  std::size_t offset;
  std::string text;
};

/* non-blank lines with their offsets into the original text */
std::vector<text_line> split_lines( std::string_view text )
{
  std::vector<text_line> lines;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    std::string line( text.substr( start, end - start ) );
    if ( !line.empty() && line.back() == '\r' )
    {
      line.pop_back();
    }
    if ( line.find_first_not_of( " \t" ) != std::string::npos )
    {
      lines.push_back( { start, std::move( line ) } );
    }
    start = end + 1;
  }
  return lines;
}

template<typename Fn>
auto at_line( const text_line& line, Fn&& fn )
{
  try
  {
    return fn();
  }
  catch ( const parse_error& e )
  {
    std::string what = e.what();
    what = what.substr( 0, what.rfind( " (at position" ) );
    throw parse_error( what, line.offset + e.position() );
  }
}

} // namespace

deck::deck( unsigned source_arity, std::vector<card> cards ) : source_arity_( source_arity )
{
  if ( source_arity_ < 2 )
  {
    throw arity_error( "decks are defined for arity at least 2" );
  }
  if ( cards.size() != pair_count( source_arity_ ) )
  {
    throw range_error( "a deck of arity " + std::to_string( source_arity_ ) + " holds " +
                       std::to_string( pair_count( source_arity_ ) ) + " cards, got " +
                       std::to_string( cards.size() ) );
  }
  for ( auto& [key, entry] : sorted_groups( std::move( cards ) ) )
  {
    entries_.push_back( std::move( entry ) );
  }
}

unsigned deck::total() const noexcept
{
  unsigned sum = 0;
  for ( const auto& e : entries_ )
  {
    sum += e.multiplicity;
  }
  return sum;
}

set_deck::set_deck( unsigned source_arity, std::vector<card> cards ) : source_arity_( source_arity )
{
  if ( source_arity_ < 2 )
  {
    throw arity_error( "set-decks are defined for arity at least 2" );
  }
  if ( cards.empty() || cards.size() > pair_count( source_arity_ ) )
  {
    throw range_error( "a set-deck of arity " + std::to_string( source_arity_ ) + " holds 1.." +
                       std::to_string( pair_count( source_arity_ ) ) + " cards" );
  }
  for ( auto& [key, entry] : sorted_groups( std::move( cards ) ) )
  {
    if ( entry.multiplicity > 1 )
    {
      throw range_error( "set-deck lists a card twice: " + key );
    }
    cards_.push_back( std::move( entry.c ) );
  }
}

set_deck::set_deck( const deck& d ) : source_arity_( d.source_arity() )
{
  for ( const auto& e : d.entries() )
  {
    cards_.push_back( e.c );
  }
}

std::vector<labeled_card> labeled_deck_of( const finite_function& f )
{
  require_deckable( f );
  std::vector<labeled_card> result;
  for ( const auto& pair : index_pairs( f.arity() ) )
  {
    result.push_back( { pair, canonical_form( identification_minor( f, pair ) ) } );
  }
  return result;
}

deck deck_of( const finite_function& f )
{
  std::vector<card> cards;
  for ( auto& lc : labeled_deck_of( f ) )
  {
    cards.push_back( std::move( lc.c ) );
  }
  return deck( f.arity(), std::move( cards ) );
}

set_deck set_deck_of( const finite_function& f )
{
  return set_deck( deck_of( f ) );
}

bool hypomorphic( const finite_function& f, const finite_function& g )
{
  require_same_shape( f, g );
  require_deckable( f );
  return deck_of( f ) == deck_of( g );
}

bool strongly_hypomorphic( const finite_function& f, const finite_function& g )
{
  require_same_shape( f, g );
  require_deckable( f );
  for ( const auto& pair : index_pairs( f.arity() ) )
  {
    if ( !equivalent( identification_minor( f, pair ), identification_minor( g, pair ) ) )
    {
      return false;
    }
  }
  return true;
}

bool has_unique_identification_minor( const finite_function& f )
{
  return set_deck_of( f ).size() == 1;
}

std::string print_deck( const deck& d )
{
  std::string out;
  for ( const auto& e : d.entries() )
  {
    out += std::to_string( e.multiplicity ) + "x " + print_card( e.c ) + "\n";
  }
  return out;
}

deck parse_deck( std::string_view text, unsigned source_arity )
{
  std::vector<card> cards;
  const auto lines = split_lines( text );
  for ( const auto& line : lines )
  {
    at_line( line, [&] {
      const auto x = line.text.find( "x " );
      if ( x == 0 || x == std::string::npos || line.text.find_first_not_of( "0123456789" ) != x )
      {
        throw parse_error( "deck line must read '<multiplicity>x <card>'", 0 );
      }
      if ( x > 6 )
      {
        throw parse_error( "multiplicity too large", 0 );
      }
      const auto multiplicity = std::stoul( line.text.substr( 0, x ) );
      if ( multiplicity == 0 )
      {
        throw parse_error( "multiplicities are positive", 0 );
      }
      try
      {
        cards.insert( cards.end(), multiplicity, parse_card( std::string_view( line.text ).substr( x + 2 ) ) );
      }
      catch ( const parse_error& e )
      {
        std::string what = e.what();
        throw parse_error( what.substr( 0, what.rfind( " (at position" ) ), x + 2 + e.position() );
      }
      return 0;
    } );
  }
  deck parsed( source_arity, std::move( cards ) );
  if ( parsed.entries().size() != lines.size() )
  {
    throw parse_error( "deck lists a card on more than one line", 0 );
  }
  return parsed;
}

std::string print_set_deck( const set_deck& s )
{
  std::string out;
  for ( const auto& c : s.cards() )
  {
    out += print_card( c ) + "\n";
  }
  return out;
}

set_deck parse_set_deck( std::string_view text, unsigned source_arity )
{
  std::vector<card> cards;
  for ( const auto& line : split_lines( text ) )
  {
    cards.push_back( at_line( line, [&] { return parse_card( line.text ); } ) );
  }
  return set_deck( source_arity, std::move( cards ) );
}

} // namespace minordeck
