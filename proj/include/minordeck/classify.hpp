/*!
  \file classify.hpp
  \brief Membership in the clones of conjunctions, disjunctions and affine
         functions, plus the structural predicates the reconstruction
         results are phrased in.

  Conjunctions and disjunctions include both constants; affine functions
  are the Boolean functions of Zhegalkin degree at most 1.
*/

#pragma once

#include <optional>
#include <string>

#include "function.hpp"

namespace minordeck
{

/* Boolean only (k = m = 2); throw domain_error otherwise */
bool in_lambda( const finite_function& f );
bool in_v( const finite_function& f );
bool in_l( const finite_function& f );
bool is_monotone( const finite_function& f );

bool is_totally_symmetric( const finite_function& f );
bool is_essentially_unary( const finite_function& f );
bool is_determined_by_supp( const finite_function& f );
bool is_determined_by_oddsupp( const finite_function& f );

/*! \brief in_lambda or in_v or in_l. */
bool in_clone_union( const finite_function& f );

struct classification_report
{
  bool in_lambda = false;
  bool in_v = false;
  bool in_l = false;
  bool is_monotone = false;
  bool is_totally_symmetric = false;
  bool is_essentially_unary = false;
  bool determined_by_supp = false;
  bool determined_by_oddsupp = false;
  unsigned essential_arity = 0;
  /* empty means not claimed */
  std::optional<bool> predicted_set_reconstructible;

  bool operator==( const classification_report& ) const = default;
};

classification_report classify( const finite_function& f );

std::string report_to_text( const classification_report& r );
std::string report_to_json( const classification_report& r );

} // namespace minordeck
