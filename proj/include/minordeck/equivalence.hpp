/*!
  \file equivalence.hpp
  \brief The minor quasiorder, the induced equivalence, and canonical
         representatives (cards) of equivalence classes.
*/

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "function.hpp"

namespace minordeck
{

/*! \brief Canonical representative of an equivalence class of functions.

  The represented function has every argument essential (constants are kept
  at arity 1) and its table is the lexicographically least one over all
  permutations of those arguments.  Two functions are equivalent exactly
  when their cards compare equal.
*/
class card
{
public:
  card( unsigned domain_size, unsigned codomain_size, unsigned essential_arity, std::vector<value_t> table );

  unsigned domain_size() const noexcept { return k_; }
  unsigned codomain_size() const noexcept { return m_; }
  unsigned essential_arity() const noexcept { return e_; }
  std::span<const value_t> table() const noexcept { return table_; }

  bool is_constant() const noexcept;
  finite_function to_function() const;

  bool operator==( const card& ) const = default;
  auto operator<=>( const card& ) const = default;

private:
  unsigned k_;
  unsigned m_;
  unsigned e_;
  std::vector<value_t> table_;
};

/*! \brief Drops inessential arguments; constants become arity-1 constants. */
finite_function remove_inessential( const finite_function& f );

card canonical_form( const finite_function& f );

/*! \throws domain_error when f and g live over different (k, m) */
bool equivalent( const finite_function& f, const finite_function& g );

/*! \brief Decides f <= g by trying every map sigma: {1..arity(g)} -> {1..arity(f)}.

  Throws budget_error when arity(f)^arity(g) * k^arity(f) exceeds
  `cell_budget`.
*/
bool is_minor_of( const finite_function& f, const finite_function& g, std::size_t cell_budget = default_cell_limit );

} // namespace minordeck

template<>
struct std::hash<minordeck::card>
{
  std::size_t operator()( const minordeck::card& c ) const noexcept;
};
