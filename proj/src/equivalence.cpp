#include "minordeck/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace minordeck
{

namespace
{

void require_same_shape( const finite_function& f, const finite_function& g )
{
  if ( f.domain_size() != g.domain_size() || f.codomain_size() != g.codomain_size() )
  {
    throw domain_error( "functions over different domains or codomains are not comparable" );
  }
}

/* writes the table of a -> source(a perm) into out, perm 0-based */
void permuted_table( std::span<const value_t> source, unsigned arity, unsigned k, std::span<const unsigned> perm,
                     std::vector<value_t>& out )
{
  std::vector<std::size_t> weight( arity, 0 );
  std::size_t place = 1;
  for ( unsigned i = arity; i-- > 0; )
  {
    weight[perm[i]] += place;
    place *= k;
  }
  out.resize( source.size() );
  std::vector<value_t> digits( arity, 0 );
  std::size_t index = 0;
  for ( std::size_t t = 0; t < source.size(); ++t )
  {
    out[t] = source[index];
    for ( unsigned j = arity; j-- > 0; )
    {
      if ( ++digits[j] < k )
      {
        index += weight[j];
        break;
      }
      digits[j] = 0;
      index -= ( k - 1 ) * weight[j];
    }
  }
}

} // namespace

card::card( unsigned domain_size, unsigned codomain_size, unsigned essential_arity, std::vector<value_t> table )
    : k_( domain_size ), m_( codomain_size ), e_( essential_arity ), table_( std::move( table ) )
{
  if ( k_ < 2 || m_ < 2 )
  {
    throw domain_error( "card domain and codomain need at least two elements" );
  }
  if ( e_ < 1 )
  {
    throw arity_error( "card arity must be at least 1" );
  }
  if ( table_.size() != table_size( k_, e_ ) )
  {
    throw table_size_error( "card table length does not match k^e" );
  }
  if ( std::any_of( table_.begin(), table_.end(), [this]( auto v ) { return v >= m_; } ) )
  {
    throw value_range_error( "card value outside the codomain" );
  }
}

bool card::is_constant() const noexcept
{
  return std::all_of( table_.begin(), table_.end(), [this]( auto v ) { return v == table_.front(); } );
}

finite_function card::to_function() const
{
  return finite_function( e_, k_, m_, table_ );
}

finite_function remove_inessential( const finite_function& f )
{
  const auto essential = essential_args( f );
  const auto k = f.domain_size();
  if ( essential.empty() )
  {
    return finite_function( 1, k, f.codomain_size(), std::vector<value_t>( k, f.at( 0 ) ) );
  }
  if ( essential.size() == f.arity() )
  {
    return f;
  }
  /* evaluate with every inessential argument pinned to 0 */
  const auto n = f.arity();
  const auto e = static_cast<unsigned>( essential.size() );
  std::vector<std::size_t> place( e );
  for ( unsigned j = 0; j < e; ++j )
  {
    std::size_t p = 1;
    for ( unsigned i = essential[j]; i < n; ++i )
    {
      p *= k;
    }
    place[j] = p;
  }
  const auto cells = table_size( k, e );
  std::vector<value_t> table( cells );
  for ( std::size_t t = 0; t < cells; ++t )
  {
    auto rest = t;
    std::size_t source = 0;
    for ( unsigned j = e; j-- > 0; )
    {
      source += ( rest % k ) * place[j];
      rest /= k;
    }
    table[t] = f.at( source );
  }
  return finite_function( e, k, f.codomain_size(), std::move( table ) );
}

card canonical_form( const finite_function& f )
{
  const auto reduced = remove_inessential( f );
  const auto e = reduced.arity();
  const auto k = reduced.domain_size();
  std::vector<value_t> best( reduced.table().begin(), reduced.table().end() );
  if ( e > 1 && !reduced.is_constant() )
  {
    std::vector<unsigned> perm( e );
    std::iota( perm.begin(), perm.end(), 0u );
    std::vector<value_t> candidate;
    while ( std::next_permutation( perm.begin(), perm.end() ) )
    {
      permuted_table( reduced.table(), e, k, perm, candidate );
      if ( candidate < best )
      {
        best.swap( candidate );
      }
    }
  }
  return card( k, reduced.codomain_size(), e, std::move( best ) );
}

bool equivalent( const finite_function& f, const finite_function& g )
{
  require_same_shape( f, g );
  return canonical_form( f ) == canonical_form( g );
}

bool is_minor_of( const finite_function& f, const finite_function& g, std::size_t cell_budget )
{
  require_same_shape( f, g );
  const auto n = f.arity();
  const auto m = g.arity();

  /* essential arity never grows when passing to a minor */
  if ( essential_args( f ).size() > essential_args( g ).size() )
  {
    return false;
  }

  std::size_t maps = 1;
  for ( unsigned i = 0; i < m; ++i )
  {
    if ( maps > cell_budget / n )
    {
      throw budget_error( "minor search over " + std::to_string( n ) + "^" + std::to_string( m ) +
                          " maps exceeds the budget" );
    }
    maps *= n;
  }
  if ( maps > cell_budget / f.size() )
  {
    throw budget_error( "minor search exceeds the cell budget" );
  }

  std::vector<unsigned> sigma( m, 1 );
  for ( std::size_t attempt = 0; attempt < maps; ++attempt )
  {
    if ( minor_via_map( g, sigma, n ) == f )
    {
      return true;
    }
    for ( unsigned j = m; j-- > 0; )
    {
      if ( ++sigma[j] <= n )
      {
        break;
      }
      sigma[j] = 1;
    }
  }
  return false;
}

} // namespace minordeck

std::size_t std::hash<minordeck::card>::operator()( const minordeck::card& c ) const noexcept
{
  std::size_t h = c.domain_size() * 1000003u ^ c.codomain_size() * 7919u ^ c.essential_arity();
  for ( auto v : c.table() )
  {
    h = h * 1099511628211ull ^ v;
  }
  return h;
}
