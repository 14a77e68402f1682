/*!
  \file literal.hpp
  \brief Text forms of functions and cards.

  Boolean functions:  b<n>:<bits>            e.g. b2:0001 (AND)
  General functions:  f k=<k> m=<m> n=<n> v=<d>,<d>,...
  Cards:              card k=<k> m=<m> e=<e> v=<digits>

  Card values are written as contiguous digits when m <= 10 and comma
  separated otherwise.  Printing picks the b-form whenever k = m = 2.
*/

#pragma once

#include <string>
#include <string_view>

#include "equivalence.hpp"
#include "function.hpp"

namespace minordeck
{

finite_function parse_literal( std::string_view text );
std::string print_literal( const finite_function& f );

/*! \brief Parses a card and checks that it is in canonical form. */
card parse_card( std::string_view text );
std::string print_card( const card& c );

} // namespace minordeck
