#include "minordeck/literal.hpp"

#include <cctype>
#include <limits>

namespace minordeck
{

namespace
{

class cursor
{
public:
  explicit cursor( std::string_view text ) : text_( text ) {}

  std::size_t position() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ == text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail( const std::string& what ) const { throw parse_error( what, pos_ ); }

  void expect( std::string_view token )
  {
    if ( text_.substr( pos_, token.size() ) != token )
    {
      fail( "expected '" + std::string( token ) + "'" );
    }
    pos_ += token.size();
  }

  void skip_spaces()
  {
    if ( peek() != ' ' )
    {
      fail( "expected a space" );
    }
    while ( peek() == ' ' )
    {
      ++pos_;
    }
  }

  unsigned number()
  {
    if ( !std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      fail( "expected a decimal number" );
    }
    unsigned long long value = 0;
    while ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      value = value * 10 + static_cast<unsigned>( text_[pos_] - '0' );
      if ( value > std::numeric_limits<value_t>::max() )
      {
        fail( "number too large" );
      }
      ++pos_;
    }
    return static_cast<unsigned>( value );
  }

  unsigned field( std::string_view name )
  {
    expect( name );
    expect( "=" );
    return number();
  }

  std::vector<value_t> comma_values()
  {
    std::vector<value_t> values{ number() };
    while ( peek() == ',' )
    {
      ++pos_;
      values.push_back( number() );
    }
    return values;
  }

  std::vector<value_t> digit_values()
  {
    std::vector<value_t> values;
    while ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      values.push_back( static_cast<value_t>( text_[pos_++] - '0' ) );
    }
    if ( values.empty() )
    {
      fail( "expected digits" );
    }
    return values;
  }

  void finish()
  {
    if ( !done() )
    {
      fail( "unexpected trailing input" );
    }
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim( std::string_view text, std::size_t& offset )
{
  offset = 0;
  while ( offset < text.size() && std::isspace( static_cast<unsigned char>( text[offset] ) ) )
  {
    ++offset;
  }
  auto end = text.size();
  while ( end > offset && std::isspace( static_cast<unsigned char>( text[end - 1] ) ) )
  {
    --end;
  }
  return text.substr( offset, end - offset );
}

/* rethrow parse errors relative to the untrimmed text */
template<typename Fn>
auto with_offset( std::size_t offset, Fn&& fn )
{
  try
  {
    return fn();
  }
  catch ( const parse_error& e )
  {
    if ( offset == 0 )
    {
      throw;
    }
    std::string what = e.what();
    what = what.substr( 0, what.rfind( " (at position" ) );
    throw parse_error( what, e.position() + offset );
  }
}

std::string join_values( std::span<const value_t> values, bool commas )
{
  std::string out;
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    if ( commas && i > 0 )
    {
      out += ',';
    }
    out += std::to_string( values[i] );
  }
  return out;
}

} // namespace

finite_function parse_literal( std::string_view raw )
{
  std::size_t offset = 0;
  const auto text = trim( raw, offset );
  return with_offset( offset, [&] {
    cursor in( text );
    if ( in.peek() == 'b' )
    {
      in.expect( "b" );
      const auto n = in.number();
      if ( n < 1 )
      {
        in.fail( "arity must be at least 1" );
      }
      in.expect( ":" );
      std::vector<value_t> table;
      while ( in.peek() == '0' || in.peek() == '1' )
      {
        table.push_back( in.peek() == '1' ? 1 : 0 );
        in.expect( std::string( 1, in.peek() ) );
      }
      if ( table.empty() )
      {
        in.fail( "expected bits" );
      }
      in.finish();
      if ( n >= 8 * sizeof( std::size_t ) || table.size() != ( std::size_t{ 1 } << n ) )
      {
        throw table_size_error( "b" + std::to_string( n ) + " literal needs " +
                                ( n < 64 ? std::to_string( std::size_t{ 1 } << n ) : std::string( "2^n" ) ) +
                                " bits, got " + std::to_string( table.size() ) );
      }
      return finite_function( n, 2, 2, std::move( table ) );
    }
    if ( in.peek() == 'f' )
    {
      in.expect( "f" );
      in.skip_spaces();
      const auto k = in.field( "k" );
      in.skip_spaces();
      const auto m = in.field( "m" );
      in.skip_spaces();
      const auto n = in.field( "n" );
      in.skip_spaces();
      in.expect( "v=" );
      auto values = in.comma_values();
      in.finish();
      return finite_function( n, k, m, std::move( values ) );
    }
    in.fail( "expected a function literal ('b<n>:<bits>' or 'f k=.. m=.. n=.. v=..')" );
  } );
}

std::string print_literal( const finite_function& f )
{
  if ( f.is_boolean() )
  {
    std::string out = "b" + std::to_string( f.arity() ) + ":";
    for ( auto v : f.table() )
    {
      out += v ? '1' : '0';
    }
    return out;
  }
  return "f k=" + std::to_string( f.domain_size() ) + " m=" + std::to_string( f.codomain_size() ) +
         " n=" + std::to_string( f.arity() ) + " v=" + join_values( f.table(), true );
}

card parse_card( std::string_view raw )
{
  std::size_t offset = 0;
  const auto text = trim( raw, offset );
  return with_offset( offset, [&] {
    cursor in( text );
    in.expect( "card" );
    in.skip_spaces();
    const auto k = in.field( "k" );
    in.skip_spaces();
    const auto m = in.field( "m" );
    in.skip_spaces();
    const auto e = in.field( "e" );
    in.skip_spaces();
    in.expect( "v=" );
    const auto values_at = in.position();
    auto values = m > 10 ? in.comma_values() : in.digit_values();
    in.finish();
    card parsed( k, m, e, std::move( values ) );
    if ( canonical_form( parsed.to_function() ) != parsed )
    {
      throw parse_error( "card table is not in canonical form", values_at );
    }
    return parsed;
  } );
}

std::string print_card( const card& c )
{
  return "card k=" + std::to_string( c.domain_size() ) + " m=" + std::to_string( c.codomain_size() ) +
         " e=" + std::to_string( c.essential_arity() ) + " v=" + join_values( c.table(), c.codomain_size() > 10 );
}

} // namespace minordeck
