#include "minordeck/classify.hpp"

#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "minordeck/anf.hpp"

namespace minordeck
{

namespace
{

void require_boolean( const finite_function& f )
{
  if ( !f.is_boolean() )
  {
    throw domain_error( "clone membership is decided for Boolean functions only" );
  }
}

/* f equals the conjunction (or disjunction) of its essential arguments */
bool is_semilattice_term( const finite_function& f, bool conjunction )
{
  require_boolean( f );
  if ( f.is_constant() )
  {
    return true;
  }
  const auto n = f.arity();
  std::size_t mask = 0; /* table-index bits of the essential arguments */
  for ( auto i : essential_args( f ) )
  {
    mask |= std::size_t{ 1 } << ( n - i );
  }
  for ( std::size_t t = 0; t < f.size(); ++t )
  {
    const auto expected = conjunction ? ( t & mask ) == mask : ( t & mask ) != 0;
    if ( f.at( t ) != static_cast<value_t>( expected ) )
    {
      return false;
    }
  }
  return true;
}

bool invariant_under( const finite_function& f, const std::vector<unsigned>& sigma )
{
  return minor_via_map( f, sigma, f.arity() ) == f;
}

/* f is constant on every class of tuples sharing key(tuple) */
template<typename Key>
bool determined_by( const finite_function& f, Key&& key )
{
  if ( f.domain_size() > 64 )
  {
    throw domain_error( "support predicates handle domains of at most 64 elements" );
  }
  std::unordered_map<std::uint64_t, value_t> seen;
  for ( std::size_t t = 0; t < f.size(); ++t )
  {
    const auto tuple = decode_index( t, f.arity(), f.domain_size() );
    const auto [it, inserted] = seen.emplace( key( tuple ), f.at( t ) );
    if ( !inserted && it->second != f.at( t ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace

bool in_lambda( const finite_function& f )
{
  return is_semilattice_term( f, true );
}

bool in_v( const finite_function& f )
{
  return is_semilattice_term( f, false );
}

bool in_l( const finite_function& f )
{
  require_boolean( f );
  return degree( to_anf( f ) ) <= 1;
}

bool in_clone_union( const finite_function& f )
{
  return in_lambda( f ) || in_v( f ) || in_l( f );
}

bool is_monotone( const finite_function& f )
{
  require_boolean( f );
  const auto n = f.arity();
  for ( std::size_t t = 0; t < f.size(); ++t )
  {
    for ( unsigned i = 0; i < n; ++i )
    {
      const auto bit = std::size_t{ 1 } << i;
      if ( !( t & bit ) && f.at( t ) > f.at( t | bit ) )
      {
        return false;
      }
    }
  }
  return true;
}

bool is_totally_symmetric( const finite_function& f )
{
  const auto n = f.arity();
  if ( n == 1 )
  {
    return true;
  }
  std::vector<unsigned> swap( n );
  std::iota( swap.begin(), swap.end(), 1u );
  std::swap( swap[0], swap[1] );
  std::vector<unsigned> cycle( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    cycle[i] = ( i + 1 ) % n + 1;
  }
  return invariant_under( f, swap ) && invariant_under( f, cycle );
}

bool is_essentially_unary( const finite_function& f )
{
  return essential_args( f ).size() == 1;
}

bool is_determined_by_supp( const finite_function& f )
{
  return determined_by( f, []( const std::vector<value_t>& tuple ) {
    std::uint64_t mask = 0;
    for ( auto a : tuple )
    {
      mask |= std::uint64_t{ 1 } << a;
    }
    return mask;
  } );
}

bool is_determined_by_oddsupp( const finite_function& f )
{
  return determined_by( f, []( const std::vector<value_t>& tuple ) {
    std::uint64_t mask = 0;
    for ( auto a : tuple )
    {
      mask ^= std::uint64_t{ 1 } << a;
    }
    return mask;
  } );
}

classification_report classify( const finite_function& f )
{
  require_boolean( f );
  classification_report r;
  r.in_lambda = in_lambda( f );
  r.in_v = in_v( f );
  r.in_l = in_l( f );
  r.is_monotone = is_monotone( f );
  r.is_totally_symmetric = is_totally_symmetric( f );
  r.essential_arity = static_cast<unsigned>( essential_args( f ).size() );
  r.is_essentially_unary = r.essential_arity == 1;
  r.determined_by_supp = is_determined_by_supp( f );
  r.determined_by_oddsupp = is_determined_by_oddsupp( f );
  if ( f.arity() >= 4 && ( r.in_lambda || r.in_v || r.in_l ) )
  {
    r.predicted_set_reconstructible = true;
  }
  return r;
}

namespace
{

nlohmann::ordered_json report_json( const classification_report& r )
{
  nlohmann::ordered_json j;
  j["in_lambda"] = r.in_lambda;
  j["in_v"] = r.in_v;
  j["in_l"] = r.in_l;
  j["is_monotone"] = r.is_monotone;
  j["is_totally_symmetric"] = r.is_totally_symmetric;
  j["is_essentially_unary"] = r.is_essentially_unary;
  j["determined_by_supp"] = r.determined_by_supp;
  j["determined_by_oddsupp"] = r.determined_by_oddsupp;
  j["essential_arity"] = r.essential_arity;
  if ( r.predicted_set_reconstructible )
  {
    j["predicted_set_reconstructible"] = *r.predicted_set_reconstructible;
  }
  else
  {
    j["predicted_set_reconstructible"] = "not-claimed";
  }
  return j;
}

} // namespace

std::string report_to_text( const classification_report& r )
{
  std::string out;
  const auto j = report_json( r );
  for ( const auto& [key, value] : j.items() )
  {
    out += key + "=" + ( value.is_string() ? value.get<std::string>() : value.dump() ) + "\n";
  }
  return out;
}

std::string report_to_json( const classification_report& r )
{
  return report_json( r ).dump( 2 );
}

} // namespace minordeck
