#include <doctest.h>

#include <minordeck/equivalence.hpp>
#include <minordeck/literal.hpp>

#include "oracle.hpp"

using namespace minordeck;

namespace
{

finite_function lit( const char* text )
{
  return parse_literal( text );
}

finite_function boolean( unsigned n, std::size_t x )
{
  const auto t = oracle::boolean_table( n, x );
  return make_function( n, 2, 2, { t.begin(), t.end() } );
}

} // namespace

TEST_CASE( "remove_inessential" )
{
  CHECK( print_literal( remove_inessential( lit( "b4:0011110011000011" ) ) ) == "b3:01101001" );
  CHECK( print_literal( remove_inessential( lit( "b2:1111" ) ) ) == "b1:11" );
  CHECK( print_literal( remove_inessential( lit( "b3:00010111" ) ) ) == "b3:00010111" );
  CHECK( print_literal( remove_inessential( lit( "b3:00110011" ) ) ) == "b1:01" );
}

TEST_CASE( "canonical forms" )
{
  CHECK( print_card( canonical_form( lit( "b2:0011" ) ) ) == "card k=2 m=2 e=1 v=01" );
  CHECK( canonical_form( lit( "b2:0101" ) ) == canonical_form( lit( "b2:0011" ) ) );
  CHECK( canonical_form( lit( "b2:0100" ) ) == canonical_form( lit( "b2:0010" ) ) );
  CHECK( print_card( canonical_form( lit( "b2:0100" ) ) ) == "card k=2 m=2 e=2 v=0010" );
  CHECK( canonical_form( lit( "b3:00000000" ) ).is_constant() );
  CHECK( canonical_form( lit( "b3:00000000" ) ).essential_arity() == 1 );
  CHECK_FALSE( canonical_form( lit( "b1:11" ) ) == canonical_form( lit( "b1:00" ) ) );
}

TEST_CASE( "equivalent" )
{
  CHECK( equivalent( lit( "b2:0010" ), lit( "b2:0100" ) ) );
  CHECK_FALSE( equivalent( lit( "b2:0001" ), lit( "b2:0111" ) ) );
  CHECK( equivalent( lit( "b1:01" ), lit( "b3:00001111" ) ) );
  CHECK_THROWS_AS( equivalent( lit( "b1:01" ), make_function( 1, 3, 2, { 0, 1, 1 } ) ), domain_error );
}

TEST_CASE( "is_minor_of" )
{
  const auto and2 = lit( "b2:0001" );
  const auto and3 = lit( "b3:00000001" );
  CHECK( is_minor_of( and2, and3 ) );
  CHECK( is_minor_of( lit( "b1:01" ), and2 ) );
  CHECK_FALSE( is_minor_of( and3, and2 ) );
  CHECK_FALSE( is_minor_of( lit( "b2:0111" ), and3 ) );
  CHECK_THROWS_AS( is_minor_of( and2, make_function( 1, 3, 3, { 0, 1, 2 } ) ), domain_error );
  CHECK_THROWS_AS( is_minor_of( and2, and3, 10 ), budget_error );
}

TEST_CASE( "canonical forms agree with bijection search at arity 3" )
{
  std::vector<card> cards;
  for ( std::size_t x = 0; x < 256; ++x )
  {
    cards.push_back( canonical_form( boolean( 3, x ) ) );
  }
  std::size_t mismatches = 0;
  for ( std::size_t x = 0; x < 256; ++x )
  {
    for ( std::size_t y = x; y < 256; ++y )
    {
      const bool fast = cards[x] == cards[y];
      const bool slow = oracle::bijection_equivalent( oracle::boolean_table( 3, x ), oracle::boolean_table( 3, y ), 3, 2 );
      mismatches += fast != slow;
    }
  }
  CHECK( mismatches == 0 );
}

TEST_CASE( "minor order and equivalence at arity up to 3" )
{
  std::vector<finite_function> all;
  for ( unsigned n = 1; n <= 2; ++n )
  {
    for ( std::size_t x = 0; x < ( std::size_t{ 1 } << ( 1u << n ) ); ++x )
    {
      all.push_back( boolean( n, x ) );
    }
  }
  for ( std::size_t x = 0; x < 256; x += 7 )
  {
    all.push_back( boolean( 3, x ) );
  }
  const auto count = all.size();
  std::vector<std::vector<char>> leq( count, std::vector<char>( count ) );
  for ( std::size_t i = 0; i < count; ++i )
  {
    for ( std::size_t j = 0; j < count; ++j )
    {
      leq[i][j] = is_minor_of( all[i], all[j] );
    }
  }
  for ( std::size_t i = 0; i < count; ++i )
  {
    CHECK( leq[i][i] );
    for ( std::size_t j = 0; j < count; ++j )
    {
      CHECK( equivalent( all[i], all[j] ) == ( leq[i][j] && leq[j][i] ) );
      if ( equivalent( all[i], all[j] ) )
      {
        CHECK( essential_args( all[i] ).size() == essential_args( all[j] ).size() );
      }
      for ( std::size_t l = 0; l < count; ++l )
      {
        if ( leq[i][j] && leq[j][l] && !leq[i][l] )
        {
          FAIL( "transitivity fails" );
        }
      }
    }
  }
}

TEST_CASE( "canonical_form is idempotent and permutation invariant" )
{
  const std::vector<std::vector<unsigned>> perms{ { 2, 1, 3, 4 }, { 4, 3, 2, 1 }, { 2, 3, 4, 1 } };
  for ( std::size_t x = 0; x < 65536; x += 97 )
  {
    const auto f = boolean( 4, x );
    const auto c = canonical_form( f );
    CHECK( canonical_form( c.to_function() ) == c );
    for ( const auto& p : perms )
    {
      CHECK( canonical_form( minor_via_map( f, p, 4 ) ) == c );
    }
  }
}

TEST_CASE( "cards over larger domains" )
{
  /* f(x,y) = x - y mod 3 and f(y,x) are equivalent */
  std::vector<value_t> t;
  std::vector<value_t> swapped;
  for ( unsigned x = 0; x < 3; ++x )
  {
    for ( unsigned y = 0; y < 3; ++y )
    {
      t.push_back( ( x + 3 - y ) % 3 );
      swapped.push_back( ( y + 3 - x ) % 3 );
    }
  }
  const auto f = make_function( 2, 3, 3, t );
  const auto g = make_function( 2, 3, 3, swapped );
  CHECK( equivalent( f, g ) );
  CHECK( canonical_form( f ).table().size() == 9 );
  CHECK( std::hash<card>{}( canonical_form( f ) ) == std::hash<card>{}( canonical_form( g ) ) );
}
