/*!
  \file anf.hpp
  \brief Zhegalkin polynomials (algebraic normal form) of Boolean functions.

  A monomial is a bitmask over the variables: bit i-1 stands for x_i, and
  the empty mask is the constant monomial 1.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "function.hpp"

namespace minordeck
{

using monomial = std::uint32_t;

class anf_poly
{
public:
  /* monomials are deduplicated mod 2 and kept sorted by mask */
  anf_poly( unsigned arity, std::vector<monomial> monomials );

  unsigned arity() const noexcept { return arity_; }
  const std::vector<monomial>& monomials() const noexcept { return monomials_; }
  bool contains( monomial mono ) const;

  bool operator==( const anf_poly& ) const = default;

private:
  unsigned arity_;
  std::vector<monomial> monomials_;
};

/*! \brief Mod-2 Moebius transform of the truth table. */
anf_poly to_anf( const finite_function& f );
finite_function from_anf( const anf_poly& p );

/*! \brief Largest monomial size; 0 for constants. */
unsigned degree( const anf_poly& p );

/*! \brief Renders highest degree first, e.g. `x1*x2 + x3 + 1`; "0" if empty. */
std::string print_anf( const anf_poly& p );
anf_poly parse_anf( std::string_view text, unsigned arity );

} // namespace minordeck
