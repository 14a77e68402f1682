/*!
  \file deck.hpp
  \brief Decks and set-decks of identification minors, and hypomorphy.
*/

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equivalence.hpp"
#include "function.hpp"

namespace minordeck
{

struct deck_entry
{
  card c;
  unsigned multiplicity;

  bool operator==( const deck_entry& ) const = default;
};

/*! \brief Multiset of cards, sorted by card serialization. */
class deck
{
public:
  deck( unsigned source_arity, std::vector<card> cards );

  unsigned source_arity() const noexcept { return source_arity_; }
  const std::vector<deck_entry>& entries() const noexcept { return entries_; }
  unsigned total() const noexcept;

  bool operator==( const deck& ) const = default;

private:
  unsigned source_arity_;
  std::vector<deck_entry> entries_;
};

/*! \brief The support of a deck. */
class set_deck
{
public:
  set_deck( unsigned source_arity, std::vector<card> cards );
  explicit set_deck( const deck& d );

  unsigned source_arity() const noexcept { return source_arity_; }
  const std::vector<card>& cards() const noexcept { return cards_; }
  std::size_t size() const noexcept { return cards_.size(); }

  bool operator==( const set_deck& ) const = default;

private:
  unsigned source_arity_;
  std::vector<card> cards_;
};

struct labeled_card
{
  index_pair pair;
  card c;
};

/*! \brief f_I / == for every pair I, in index_pairs order. */
std::vector<labeled_card> labeled_deck_of( const finite_function& f );

deck deck_of( const finite_function& f );
set_deck set_deck_of( const finite_function& f );

bool hypomorphic( const finite_function& f, const finite_function& g );

/*! \brief f_I == g_I for every I, compared minor by minor. */
bool strongly_hypomorphic( const finite_function& f, const finite_function& g );

bool has_unique_identification_minor( const finite_function& f );

/* one line per entry, "<multiplicity>x <card>" */
std::string print_deck( const deck& d );
deck parse_deck( std::string_view text, unsigned source_arity );

std::string print_set_deck( const set_deck& s );
set_deck parse_set_deck( std::string_view text, unsigned source_arity );

} // namespace minordeck
