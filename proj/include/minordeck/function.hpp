/*!
  \file function.hpp
  \brief Finite functions A^n -> B stored as flat value tables, and the
         minor-forming and composition primitives on them.

  Elements of A and B are the integers 0..k-1 and 0..m-1.  The tuple
  (a_1, ..., a_n) lives at table index sum a_i * k^(n-i), so a_1 is the most
  significant base-k digit and tables enumerate tuples lexicographically.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "errors.hpp"

namespace minordeck
{

using value_t = std::uint32_t;

/*! \brief Largest table (in cells) built without an explicit override. */
inline constexpr std::size_t default_cell_limit = std::size_t{ 1 } << 24;

enum class cell_guard
{
  enforce,
  allow_large
};

/*! \brief Returns k^n, throwing budget_error if it exceeds the cell limit
           (unless the guard is lifted) or overflows. */
std::size_t table_size( unsigned k, unsigned n, cell_guard guard = cell_guard::enforce );

class finite_function
{
public:
  /* validates every invariant; see make_function */
  finite_function( unsigned arity, unsigned domain_size, unsigned codomain_size, std::vector<value_t> table,
                   cell_guard guard = cell_guard::enforce );

  unsigned arity() const noexcept { return arity_; }
  unsigned domain_size() const noexcept { return domain_size_; }
  unsigned codomain_size() const noexcept { return codomain_size_; }
  std::span<const value_t> table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }

  value_t at( std::size_t index ) const { return table_[index]; }
  value_t operator()( std::span<const value_t> args ) const;

  bool is_boolean() const noexcept { return domain_size_ == 2 && codomain_size_ == 2; }
  bool is_constant() const noexcept;

  bool operator==( const finite_function& ) const = default;

private:
  unsigned arity_;
  unsigned domain_size_;
  unsigned codomain_size_;
  std::vector<value_t> table_;
};

finite_function make_function( unsigned n, unsigned k, unsigned m, std::vector<value_t> table );

value_t eval( const finite_function& f, std::span<const value_t> args );

/*! \brief Splits a table index into its n base-k digits, a_1 first. */
std::vector<value_t> decode_index( std::size_t index, unsigned n, unsigned k );
std::size_t encode_tuple( std::span<const value_t> tuple, unsigned k );

/*! \brief The i-th n-ary projection on {0..k-1} (1-based i). */
finite_function projection( unsigned n, unsigned i, unsigned k = 2 );

/*! \brief h(a) = f(g_1(a), ..., g_n(a)). */
finite_function compose( const finite_function& f, std::span<const finite_function> gs );

bool is_essential( const finite_function& f, unsigned i );
std::vector<unsigned> essential_args( const finite_function& f );

/*! \brief The n-ary minor f(a) = g(a sigma), with sigma: {1..m} -> {1..n}
           given as the 1-based sequence (sigma(1), ..., sigma(m)). */
finite_function minor_via_map( const finite_function& g, std::span<const unsigned> sigma, unsigned n );

/*! \brief An unordered pair {lo, hi} of argument positions, lo < hi, 1-based. */
struct index_pair
{
  unsigned lo;
  unsigned hi;

  auto operator<=>( const index_pair& ) const = default;
};

index_pair make_pair_index( unsigned i, unsigned j );

/*! \brief All 2-subsets of {1..n} in lexicographic order. */
std::vector<index_pair> index_pairs( unsigned n );

/*! \brief The map delta_I : {1..n} -> {1..n-1} that sends max I onto min I. */
std::vector<unsigned> identification_map( unsigned n, index_pair pair );

finite_function identification_minor( const finite_function& f, index_pair pair );

/*! \brief A validated binary operation on {0..k-1}.

  Two kinds are supported: semilattices (associative, commutative,
  idempotent) and Boolean groups (associative, with identity e and
  x o x = e).  Validation is exhaustive over all triples.
*/
class binary_op
{
public:
  enum class kind_t
  {
    semilattice,
    boolean_group
  };

  static binary_op semilattice( unsigned k, std::vector<value_t> table );
  static binary_op boolean_group( unsigned k, std::vector<value_t> table );

  static binary_op meet();
  static binary_op join();
  static binary_op xor_group();

  unsigned domain_size() const noexcept { return k_; }
  kind_t kind() const noexcept { return kind_; }
  value_t identity() const noexcept { return identity_; }
  value_t apply( value_t x, value_t y ) const { return table_[x * k_ + y]; }
  std::span<const value_t> table() const noexcept { return table_; }

private:
  binary_op( unsigned k, std::vector<value_t> table, kind_t kind, value_t identity );

  unsigned k_;
  std::vector<value_t> table_;
  kind_t kind_;
  value_t identity_;
};

/*! \brief The n-ary operation (a_1..a_n) -> a_1 o ... o a_ell.

  ell = 0 is accepted for Boolean groups only and yields the constant e.
*/
finite_function iterated_op( const binary_op& op, unsigned ell, unsigned n );

} // namespace minordeck
