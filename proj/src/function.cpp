#include "minordeck/function.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace minordeck
{

std::size_t table_size( unsigned k, unsigned n, cell_guard guard )
{
  std::size_t cells = 1;
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( cells > std::numeric_limits<std::size_t>::max() / k )
    {
      throw budget_error( "table size " + std::to_string( k ) + "^" + std::to_string( n ) + " overflows" );
    }
    cells *= k;
  }
  if ( guard == cell_guard::enforce && cells > default_cell_limit )
  {
    throw budget_error( "table size " + std::to_string( k ) + "^" + std::to_string( n ) +
                        " exceeds the cell limit of 2^24" );
  }
  return cells;
}

finite_function::finite_function( unsigned arity, unsigned domain_size, unsigned codomain_size,
                                  std::vector<value_t> table, cell_guard guard )
    : arity_( arity ), domain_size_( domain_size ), codomain_size_( codomain_size ), table_( std::move( table ) )
{
  if ( arity_ < 1 )
  {
    throw arity_error( "arity must be at least 1" );
  }
  if ( domain_size_ < 2 || codomain_size_ < 2 )
  {
    throw domain_error( "domain and codomain need at least two elements" );
  }
  const auto expected = table_size( domain_size_, arity_, guard );
  if ( table_.size() != expected )
  {
    throw table_size_error( "table has " + std::to_string( table_.size() ) + " entries, expected " +
                            std::to_string( expected ) );
  }
  for ( std::size_t i = 0; i < table_.size(); ++i )
  {
    if ( table_[i] >= codomain_size_ )
    {
      throw value_range_error( "table entry " + std::to_string( i ) + " = " + std::to_string( table_[i] ) +
                               " is outside 0.." + std::to_string( codomain_size_ - 1 ) );
    }
  }
}

value_t finite_function::operator()( std::span<const value_t> args ) const
{
  if ( args.size() != arity_ )
  {
    throw arity_error( "expected " + std::to_string( arity_ ) + " arguments, got " + std::to_string( args.size() ) );
  }
  for ( auto a : args )
  {
    if ( a >= domain_size_ )
    {
      throw value_range_error( "argument " + std::to_string( a ) + " is outside the domain" );
    }
  }
  return table_[encode_tuple( args, domain_size_ )];
}

bool finite_function::is_constant() const noexcept
{
  return std::all_of( table_.begin(), table_.end(), [this]( auto v ) { return v == table_.front(); } );
}

finite_function make_function( unsigned n, unsigned k, unsigned m, std::vector<value_t> table )
{
  return finite_function( n, k, m, std::move( table ) );
}

value_t eval( const finite_function& f, std::span<const value_t> args )
{
  return f( args );
}

std::vector<value_t> decode_index( std::size_t index, unsigned n, unsigned k )
{
  std::vector<value_t> tuple( n );
  for ( unsigned i = n; i-- > 0; )
  {
    tuple[i] = static_cast<value_t>( index % k );
    index /= k;
  }
  return tuple;
}

std::size_t encode_tuple( std::span<const value_t> tuple, unsigned k )
{
  std::size_t index = 0;
  for ( auto a : tuple )
  {
    index = index * k + a;
  }
  return index;
}

finite_function projection( unsigned n, unsigned i, unsigned k )
{
  if ( i < 1 || i > n )
  {
    throw index_error( "projection index " + std::to_string( i ) + " outside 1.." + std::to_string( n ) );
  }
  const auto cells = table_size( k, n );
  std::size_t stride = 1; /* k^(n-i) */
  for ( unsigned j = i; j < n; ++j )
  {
    stride *= k;
  }
  std::vector<value_t> table( cells );
  for ( std::size_t t = 0; t < cells; ++t )
  {
    table[t] = static_cast<value_t>( ( t / stride ) % k );
  }
  return finite_function( n, k, k, std::move( table ) );
}

finite_function compose( const finite_function& f, std::span<const finite_function> gs )
{
  if ( gs.size() != f.arity() )
  {
    throw composition_error( "composition needs " + std::to_string( f.arity() ) + " inner functions, got " +
                             std::to_string( gs.size() ) );
  }
  const auto& first = gs.front();
  for ( const auto& g : gs )
  {
    if ( g.arity() != first.arity() || g.domain_size() != first.domain_size() )
    {
      throw composition_error( "inner functions must share arity and domain" );
    }
    if ( g.codomain_size() != f.domain_size() )
    {
      throw composition_error( "inner codomain does not match the outer domain" );
    }
  }
  std::vector<value_t> table( first.size() );
  std::vector<value_t> inner( gs.size() );
  for ( std::size_t t = 0; t < table.size(); ++t )
  {
    for ( std::size_t j = 0; j < gs.size(); ++j )
    {
      inner[j] = gs[j].at( t );
    }
    table[t] = f.at( encode_tuple( inner, f.domain_size() ) );
  }
  return finite_function( first.arity(), first.domain_size(), f.codomain_size(), std::move( table ) );
}

bool is_essential( const finite_function& f, unsigned i )
{
  const auto n = f.arity();
  if ( i < 1 || i > n )
  {
    throw index_error( "argument index " + std::to_string( i ) + " outside 1.." + std::to_string( n ) );
  }
  const auto k = f.domain_size();
  std::size_t stride = 1;
  for ( unsigned j = i; j < n; ++j )
  {
    stride *= k;
  }
  const auto block = stride * k;
  for ( std::size_t base = 0; base < f.size(); base += block )
  {
    for ( std::size_t low = 0; low < stride; ++low )
    {
      const auto v = f.at( base + low );
      for ( std::size_t c = 1; c < k; ++c )
      {
        if ( f.at( base + low + c * stride ) != v )
        {
          return true;
        }
      }
    }
  }
  return false;
}

std::vector<unsigned> essential_args( const finite_function& f )
{
  std::vector<unsigned> result;
  for ( unsigned i = 1; i <= f.arity(); ++i )
  {
    if ( is_essential( f, i ) )
    {
      result.push_back( i );
    }
  }
  return result;
}

finite_function minor_via_map( const finite_function& g, std::span<const unsigned> sigma, unsigned n )
{
  const auto m = g.arity();
  const auto k = g.domain_size();
  if ( sigma.size() != m )
  {
    throw map_range_error( "map has " + std::to_string( sigma.size() ) + " entries, expected " + std::to_string( m ) );
  }
  if ( n < 1 )
  {
    throw arity_error( "target arity must be at least 1" );
  }
  /* weight[j] = sum of k^(m-i) over the positions i that sigma sends to j */
  std::vector<std::size_t> weight( n, 0 );
  std::size_t place = 1;
  for ( unsigned i = m; i-- > 0; )
  {
    if ( sigma[i] < 1 || sigma[i] > n )
    {
      throw map_range_error( "map value " + std::to_string( sigma[i] ) + " outside 1.." + std::to_string( n ) );
    }
    weight[sigma[i] - 1] += place;
    place *= k;
  }

  const auto cells = table_size( k, n );
  std::vector<value_t> table( cells );
  std::vector<value_t> digits( n, 0 );
  std::size_t source = 0;
  for ( std::size_t t = 0; t < cells; ++t )
  {
    table[t] = g.at( source );
    /* odometer increment of the target tuple, tracking the source index */
    for ( unsigned j = n; j-- > 0; )
    {
      if ( ++digits[j] < k )
      {
        source += weight[j];
        break;
      }
      digits[j] = 0;
      source -= ( k - 1 ) * weight[j];
    }
  }
  return finite_function( n, k, g.codomain_size(), std::move( table ) );
}

index_pair make_pair_index( unsigned i, unsigned j )
{
  if ( i == j )
  {
    throw index_error( "an identification pair needs two distinct indices" );
  }
  if ( i < 1 || j < 1 )
  {
    throw index_error( "argument indices are 1-based" );
  }
  return i < j ? index_pair{ i, j } : index_pair{ j, i };
}

std::vector<index_pair> index_pairs( unsigned n )
{
  std::vector<index_pair> pairs;
  for ( unsigned i = 1; i <= n; ++i )
  {
    for ( unsigned j = i + 1; j <= n; ++j )
    {
      pairs.push_back( { i, j } );
    }
  }
  return pairs;
}

std::vector<unsigned> identification_map( unsigned n, index_pair pair )
{
  if ( pair.lo < 1 || pair.lo >= pair.hi || pair.hi > n )
  {
    throw index_error( "pair {" + std::to_string( pair.lo ) + "," + std::to_string( pair.hi ) +
                       "} is not a 2-subset of 1.." + std::to_string( n ) );
  }
  std::vector<unsigned> delta( n );
  for ( unsigned i = 1; i <= n; ++i )
  {
    delta[i - 1] = i < pair.hi ? i : ( i == pair.hi ? pair.lo : i - 1 );
  }
  return delta;
}

finite_function identification_minor( const finite_function& f, index_pair pair )
{
  if ( f.arity() < 2 )
  {
    throw arity_error( "identification minors need arity at least 2" );
  }
  const auto delta = identification_map( f.arity(), pair );
  return minor_via_map( f, delta, f.arity() - 1 );
}

binary_op::binary_op( unsigned k, std::vector<value_t> table, kind_t kind, value_t identity )
    : k_( k ), table_( std::move( table ) ), kind_( kind ), identity_( identity )
{
  if ( k_ < 2 )
  {
    throw domain_error( "an operation needs at least two elements" );
  }
  if ( table_.size() != std::size_t{ k_ } * k_ )
  {
    throw table_size_error( "operation table must have k*k entries" );
  }
  for ( auto v : table_ )
  {
    if ( v >= k_ )
    {
      throw value_range_error( "operation value outside the domain" );
    }
  }
  for ( value_t x = 0; x < k_; ++x )
  {
    for ( value_t y = 0; y < k_; ++y )
    {
      for ( value_t z = 0; z < k_; ++z )
      {
        if ( apply( apply( x, y ), z ) != apply( x, apply( y, z ) ) )
        {
          throw kind_error( "operation is not associative" );
        }
      }
    }
  }
  if ( kind_ == kind_t::semilattice )
  {
    for ( value_t x = 0; x < k_; ++x )
    {
      if ( apply( x, x ) != x )
      {
        throw kind_error( "semilattice operation is not idempotent" );
      }
      for ( value_t y = 0; y < k_; ++y )
      {
        if ( apply( x, y ) != apply( y, x ) )
        {
          throw kind_error( "semilattice operation is not commutative" );
        }
      }
    }
  }
  else
  {
    if ( identity_ >= k_ )
    {
      throw kind_error( "group identity outside the domain" );
    }
    for ( value_t x = 0; x < k_; ++x )
    {
      if ( apply( x, identity_ ) != x || apply( identity_, x ) != x )
      {
        throw kind_error( "element is not a two-sided identity" );
      }
      if ( apply( x, x ) != identity_ )
      {
        throw kind_error( "x o x differs from the identity" );
      }
    }
  }
}

binary_op binary_op::semilattice( unsigned k, std::vector<value_t> table )
{
  return binary_op( k, std::move( table ), kind_t::semilattice, 0 );
}

binary_op binary_op::boolean_group( unsigned k, std::vector<value_t> table )
{
  if ( table.size() != std::size_t{ k } * k )
  {
    throw table_size_error( "operation table must have k*k entries" );
  }
  /* x o x = e pins the identity down as the value on the diagonal */
  const value_t identity = table.front();
  return binary_op( k, std::move( table ), kind_t::boolean_group, identity );
}

binary_op binary_op::meet()
{
  return semilattice( 2, { 0, 0, 0, 1 } );
}

binary_op binary_op::join()
{
  return semilattice( 2, { 0, 1, 1, 1 } );
}

binary_op binary_op::xor_group()
{
  return boolean_group( 2, { 0, 1, 1, 0 } );
}

finite_function iterated_op( const binary_op& op, unsigned ell, unsigned n )
{
  if ( ell > n )
  {
    throw range_error( "ell = " + std::to_string( ell ) + " exceeds the arity " + std::to_string( n ) );
  }
  if ( ell == 0 && op.kind() != binary_op::kind_t::boolean_group )
  {
    throw kind_error( "ell = 0 is defined for Boolean groups only" );
  }
  const auto k = op.domain_size();
  const auto cells = table_size( k, n );
  std::vector<value_t> table( cells );
  for ( std::size_t t = 0; t < cells; ++t )
  {
    const auto args = decode_index( t, n, k );
    value_t acc = ell == 0 ? op.identity() : args[0];
    for ( unsigned i = 1; i < ell; ++i )
    {
      acc = op.apply( acc, args[i] );
    }
    table[t] = acc;
  }
  return finite_function( n, k, k, std::move( table ) );
}

} // namespace minordeck
