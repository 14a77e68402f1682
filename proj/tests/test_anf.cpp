#include <doctest.h>

#include <bit>

#include <minordeck/anf.hpp>
#include <minordeck/classify.hpp>
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

TEST_CASE( "to_anf of small functions" )
{
  CHECK( to_anf( lit( "b2:0111" ) ).monomials() == std::vector<monomial>{ 0b01, 0b10, 0b11 } );
  CHECK( to_anf( lit( "b2:0110" ) ).monomials() == std::vector<monomial>{ 0b01, 0b10 } );
  CHECK( to_anf( lit( "b4:0110100110010110" ) ).monomials() == std::vector<monomial>{ 1, 2, 4, 8 } );
  CHECK( to_anf( lit( "b3:00001111" ) ).monomials() == std::vector<monomial>{ 1 } );
  CHECK_THROWS_AS( to_anf( make_function( 1, 3, 2, { 0, 1, 1 } ) ), domain_error );
}

TEST_CASE( "from_anf and degree" )
{
  CHECK( print_literal( from_anf( anf_poly( 2, { 0b11 } ) ) ) == "b2:0001" );
  CHECK( print_literal( from_anf( anf_poly( 2, {} ) ) ) == "b2:0000" );
  CHECK( print_literal( from_anf( anf_poly( 1, { 0 } ) ) ) == "b1:11" );
  CHECK( degree( to_anf( lit( "b2:0111" ) ) ) == 2 );
  CHECK( degree( to_anf( lit( "b4:0110100110010110" ) ) ) == 1 );
  CHECK( degree( to_anf( lit( "b1:11" ) ) ) == 0 );
  CHECK( degree( anf_poly( 3, {} ) ) == 0 );
  CHECK( anf_poly( 2, { 1, 2, 1 } ).monomials() == std::vector<monomial>{ 2 } );
  CHECK_THROWS_AS( anf_poly( 2, { 4 } ), index_error );
  CHECK_THROWS_AS( anf_poly( 0, {} ), arity_error );
}

TEST_CASE( "anf text form" )
{
  CHECK( print_anf( to_anf( lit( "b2:0111" ) ) ) == "x1*x2 + x1 + x2" );
  CHECK( print_anf( to_anf( lit( "b2:1110" ) ) ) == "x1*x2 + 1" );
  CHECK( print_anf( anf_poly( 2, {} ) ) == "0" );
  CHECK( print_anf( anf_poly( 3, { 0b101, 0b011, 0b100 } ) ) == "x1*x2 + x1*x3 + x3" );
  CHECK( parse_anf( "x1*x2 + 1", 2 ) == anf_poly( 2, { 0, 3 } ) );
  CHECK( parse_anf( " x2 *x1+x1", 2 ) == anf_poly( 2, { 1, 3 } ) );
  CHECK( parse_anf( "0", 3 ) == anf_poly( 3, {} ) );
  CHECK( parse_anf( "x1 + x1", 3 ) == anf_poly( 3, {} ) );
  CHECK_THROWS_AS( parse_anf( "x3", 2 ), parse_error );
  CHECK_THROWS_AS( parse_anf( "x1 x2", 2 ), parse_error );
  CHECK_THROWS_AS( parse_anf( "2", 2 ), parse_error );
  CHECK_THROWS_AS( parse_anf( "", 2 ), parse_error );
  CHECK_THROWS_AS( parse_anf( "x1 +", 2 ), parse_error );
}

TEST_CASE( "anf round trips up to arity 4" )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    for ( std::size_t x = 0; x < ( std::size_t{ 1 } << ( 1u << n ) ); ++x )
    {
      const auto f = boolean( n, x );
      const auto p = to_anf( f );
      REQUIRE( from_anf( p ) == f );
      REQUIRE( in_l( f ) == ( degree( p ) <= 1 ) );
      REQUIRE( parse_anf( print_anf( p ), n ) == p );
    }
  }
}

TEST_CASE( "anf agrees with the subset-sum oracle at arity 3" )
{
  for ( std::size_t x = 0; x < 256; ++x )
  {
    const auto t = oracle::boolean_table( 3, x );
    const auto coefficients = oracle::anf_coefficients( t, 3 );
    const auto p = to_anf( boolean( 3, x ) );
    for ( monomial s = 0; s < 8; ++s )
    {
      REQUIRE( p.contains( s ) == ( coefficients[s] == 1 ) );
    }
  }
}

TEST_CASE( "monomials propagate to identification minors at arity 4" )
{
  /* the two arguments outside a quadratic monomial, once identified, leave a
     minor of degree at least 2 */
  for ( std::size_t x = 0; x < 65536; ++x )
  {
    const auto g = boolean( 4, x );
    const auto p = to_anf( g );
    for ( unsigned s = 0; s < 4; ++s )
    {
      for ( unsigned t = s + 1; t < 4; ++t )
      {
        if ( !p.contains( ( 1u << s ) | ( 1u << t ) ) )
          continue;
        std::vector<unsigned> rest;
        for ( unsigned i = 0; i < 4; ++i )
          if ( i != s && i != t )
            rest.push_back( i + 1 );
        const auto minor = identification_minor( g, make_pair_index( rest[0], rest[1] ) );
        REQUIRE( degree( to_anf( minor ) ) >= 2 );
      }
    }
    bool top_plus_linear = p.contains( 0b1111 );
    for ( auto mono : p.monomials() )
    {
      const auto size = std::popcount( mono );
      top_plus_linear = top_plus_linear && ( size == 4 || size <= 1 );
    }
    if ( top_plus_linear )
    {
      for ( auto pair : index_pairs( 4 ) )
      {
        REQUIRE( degree( to_anf( identification_minor( g, pair ) ) ) == 3 );
      }
    }
  }
}
