#include "minordeck/anf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace minordeck
{

namespace
{

constexpr unsigned max_anf_arity = 24;

void check_arity( unsigned arity )
{
  if ( arity < 1 || arity > max_anf_arity )
  {
    throw arity_error( "polynomials are supported for arity 1.." + std::to_string( max_anf_arity ) );
  }
}

/* table index (a_1 most significant) <-> monomial mask (x_i at bit i-1) */
std::uint32_t reverse_bits( std::uint32_t x, unsigned width )
{
  std::uint32_t r = 0;
  for ( unsigned i = 0; i < width; ++i )
  {
    r |= ( ( x >> i ) & 1u ) << ( width - 1 - i );
  }
  return r;
}

void moebius( std::vector<value_t>& t )
{
  for ( std::size_t step = 1; step < t.size(); step <<= 1 )
  {
    for ( std::size_t i = 0; i < t.size(); ++i )
    {
      if ( i & step )
      {
        t[i] ^= t[i ^ step];
      }
    }
  }
}

bool render_order( monomial a, monomial b )
{
  const auto pa = std::popcount( a );
  const auto pb = std::popcount( b );
  if ( pa != pb )
  {
    return pa > pb;
  }
  /* lexicographic on the ascending variable lists */
  for ( unsigned i = 0; i < 32; ++i )
  {
    const bool ia = ( a >> i ) & 1u;
    const bool ib = ( b >> i ) & 1u;
    if ( ia != ib )
    {
      return ia;
    }
  }
  return false;
}

} // namespace

anf_poly::anf_poly( unsigned arity, std::vector<monomial> monomials ) : arity_( arity )
{
  check_arity( arity_ );
  for ( auto mono : monomials )
  {
    if ( mono >> arity_ )
    {
      throw index_error( "monomial mentions a variable beyond x" + std::to_string( arity_ ) );
    }
  }
  std::sort( monomials.begin(), monomials.end() );
  /* x + x = 0 */
  for ( std::size_t i = 0; i < monomials.size(); )
  {
    auto j = i;
    while ( j < monomials.size() && monomials[j] == monomials[i] )
    {
      ++j;
    }
    if ( ( j - i ) % 2 == 1 )
    {
      monomials_.push_back( monomials[i] );
    }
    i = j;
  }
}

bool anf_poly::contains( monomial mono ) const
{
  return std::binary_search( monomials_.begin(), monomials_.end(), mono );
}

anf_poly to_anf( const finite_function& f )
{
  if ( !f.is_boolean() )
  {
    throw domain_error( "Zhegalkin polynomials are defined for Boolean functions only" );
  }
  check_arity( f.arity() );
  std::vector<value_t> coefficients( f.table().begin(), f.table().end() );
  moebius( coefficients );
  std::vector<monomial> monomials;
  for ( std::uint32_t t = 0; t < coefficients.size(); ++t )
  {
    if ( coefficients[t] )
    {
      monomials.push_back( reverse_bits( t, f.arity() ) );
    }
  }
  return anf_poly( f.arity(), std::move( monomials ) );
}

finite_function from_anf( const anf_poly& p )
{
  std::vector<value_t> table( std::size_t{ 1 } << p.arity(), 0 );
  for ( auto mono : p.monomials() )
  {
    table[reverse_bits( mono, p.arity() )] = 1;
  }
  /* the transform is an involution over GF(2) */
  moebius( table );
  return finite_function( p.arity(), 2, 2, std::move( table ) );
}

unsigned degree( const anf_poly& p )
{
  unsigned d = 0;
  for ( auto mono : p.monomials() )
  {
    d = std::max( d, static_cast<unsigned>( std::popcount( mono ) ) );
  }
  return d;
}

std::string print_anf( const anf_poly& p )
{
  if ( p.monomials().empty() )
  {
    return "0";
  }
  auto ordered = p.monomials();
  std::sort( ordered.begin(), ordered.end(), render_order );
  std::string out;
  for ( auto mono : ordered )
  {
    if ( !out.empty() )
    {
      out += " + ";
    }
    if ( mono == 0 )
    {
      out += "1";
      continue;
    }
    bool first = true;
    for ( unsigned i = 0; i < p.arity(); ++i )
    {
      if ( ( mono >> i ) & 1u )
      {
        out += first ? "x" : "*x";
        out += std::to_string( i + 1 );
        first = false;
      }
    }
  }
  return out;
}

anf_poly parse_anf( std::string_view text, unsigned arity )
{
  check_arity( arity );
  std::size_t pos = 0;
  const auto skip = [&] {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  };
  const auto number = [&] {
    if ( pos >= text.size() || !std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      throw parse_error( "expected a number", pos );
    }
    unsigned long value = 0;
    while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      value = value * 10 + static_cast<unsigned>( text[pos++] - '0' );
      if ( value > 1000 )
      {
        throw parse_error( "number too large", pos );
      }
    }
    return static_cast<unsigned>( value );
  };

  std::vector<monomial> monomials;
  bool first_term = true;
  while ( true )
  {
    skip();
    if ( !first_term )
    {
      if ( pos == text.size() )
      {
        break;
      }
      if ( text[pos] != '+' )
      {
        throw parse_error( "expected '+'", pos );
      }
      ++pos;
      skip();
    }
    first_term = false;
    if ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      const auto at = pos;
      const auto c = number();
      if ( c > 1 )
      {
        throw parse_error( "constants are 0 or 1", at );
      }
      if ( c == 1 )
      {
        monomials.push_back( 0 );
      }
      continue;
    }
    monomial mono = 0;
    while ( true )
    {
      if ( pos >= text.size() || text[pos] != 'x' )
      {
        throw parse_error( "expected a variable 'x<i>'", pos );
      }
      ++pos;
      const auto at = pos;
      const auto var = number();
      if ( var < 1 || var > arity )
      {
        throw parse_error( "variable index outside 1.." + std::to_string( arity ), at );
      }
      mono |= monomial{ 1 } << ( var - 1 );
      skip();
      if ( pos < text.size() && text[pos] == '*' )
      {
        ++pos;
        skip();
        continue;
      }
      break;
    }
    monomials.push_back( mono );
  }
  return anf_poly( arity, std::move( monomials ) );
}

} // namespace minordeck
