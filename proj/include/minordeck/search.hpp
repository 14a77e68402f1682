/*!
  \file search.hpp
  \brief Exhaustive and sampled search over spaces of finite functions.

  Functions of a given shape (n, k, m) are numbered by reading their table
  as a base-m numeral, table[0] most significant; b2:0001 is number 1.
  A search_budget restricts enumeration to one contiguous shard of that
  numbering.  Whole-universe engines (verification, mining,
  reconstruction queries) process every shard, one worker thread per
  shard, and merge the partial results in shard order.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "deck.hpp"
#include "equivalence.hpp"
#include "function.hpp"
#include "report.hpp"

namespace minordeck
{

struct search_budget
{
  std::size_t max_table_cells = default_cell_limit;
  std::size_t max_candidates = std::size_t{ 1 } << 20;
  unsigned shard_count = 1;
  unsigned shard_index = 0;

  void validate() const;
};

/*! \brief m^(k^n), or budget_error if it exceeds max_candidates or a
           single table (k^n cells) exceeds max_table_cells. */
std::size_t function_count( unsigned n, unsigned k, unsigned m, const search_budget& budget );

/*! \brief Half-open index range [first, second) of the budget's shard. */
std::pair<std::size_t, std::size_t> shard_range( std::size_t total, const search_budget& budget );

finite_function function_at( unsigned n, unsigned k, unsigned m, std::size_t index );
std::size_t index_of( const finite_function& f );

std::vector<finite_function> enumerate_functions( unsigned n, unsigned k, unsigned m, const search_budget& budget );

enum class class_filter
{
  none,
  lambda,
  v,
  l,
  monotone,
  clones /* lambda, v or l */
};

class_filter parse_filter( std::string_view name );
std::string filter_name( class_filter filter );
bool passes( class_filter filter, const finite_function& f );

using card_id = std::uint32_t;

/*! \brief Cards of every function of one shape, computed once.

  For each function the universe stores the card of the function itself
  and the card of every identification minor, as ids into a shared pool.
*/
class universe
{
public:
  /* every function of the shape, one worker per budget shard */
  static universe build( unsigned n, unsigned k, unsigned m, const search_budget& budget );
  /* only the budget's own shard */
  static universe build_shard( unsigned n, unsigned k, unsigned m, const search_budget& budget );

  unsigned arity() const noexcept { return n_; }
  unsigned domain_size() const noexcept { return k_; }
  unsigned codomain_size() const noexcept { return m_; }
  std::size_t first_index() const noexcept { return first_; }
  std::size_t size() const noexcept { return own_.size(); }
  std::size_t pair_count() const noexcept { return pairs_; }

  const card& card_at( card_id id ) const { return pool_[id]; }
  std::size_t card_count() const noexcept { return pool_.size(); }
  std::optional<card_id> find_card( const card& c ) const;

  /* positions are offsets 0..size()-1 within the universe */
  finite_function function( std::size_t position ) const;
  card_id class_of( std::size_t position ) const { return own_[position]; }
  std::span<const card_id> labeled( std::size_t position ) const;
  std::vector<card_id> deck_key( std::size_t position ) const;
  std::vector<card_id> set_deck_key( std::size_t position ) const;

private:
  universe() = default;
  static universe build_range( unsigned n, unsigned k, unsigned m, std::size_t first, std::size_t last,
                               unsigned workers );

  unsigned n_ = 0;
  unsigned k_ = 0;
  unsigned m_ = 0;
  std::size_t first_ = 0;
  std::size_t pairs_ = 0;
  std::vector<card> pool_;
  std::unordered_map<card, card_id> ids_;
  std::vector<card_id> own_;
  std::vector<card_id> labels_;
};

struct bucket_member
{
  card cls;
  std::size_t representative; /* smallest function number in the class */
  std::size_t functions;

  bool operator==( const bucket_member& ) const = default;
};

struct set_deck_bucket
{
  set_deck key;
  std::vector<bucket_member> members; /* sorted by card serialization */

  bool operator==( const set_deck_bucket& ) const = default;
};

/*! \brief Buckets sorted by set-deck serialization. */
struct set_deck_census
{
  unsigned n = 0;
  unsigned k = 0;
  unsigned m = 0;
  std::vector<set_deck_bucket> buckets;

  bool operator==( const set_deck_census& ) const = default;
};

/*! \brief Buckets the functions of the budget's shard by set-deck. */
set_deck_census group_by_set_deck( unsigned n, unsigned k, unsigned m, const search_budget& budget );
set_deck_census merge_censuses( std::span<const set_deck_census> parts );

/* versioned text form, header line "minor-deck-cache v1" */
std::string census_to_cache( const set_deck_census& census );
set_deck_census census_from_cache( std::string_view text, unsigned n );

/*! \brief Classes of same-arity functions sharing f's set-deck (resp. deck),
           f's own class included, sorted by card serialization. */
std::vector<card> find_set_reconstructions( const finite_function& f, const search_budget& budget,
                                            class_filter filter = class_filter::none );
std::vector<card> find_set_reconstructions( const universe& u, const finite_function& f,
                                            class_filter filter = class_filter::none );
std::vector<card> find_reconstructions( const finite_function& f, const search_budget& budget,
                                        class_filter filter = class_filter::none );
std::vector<card> find_reconstructions( const universe& u, const finite_function& f,
                                        class_filter filter = class_filter::none );

struct pair_report
{
  std::string f_literal;
  std::string g_literal;
  std::string relation;
  bool equivalent = false;
  classification_report f_flags;
  classification_report g_flags;
};

/*! \brief Unordered pairs of nonequivalent functions with f_I == g_I for all I,
           both members passing the filter.  Every pair is re-checked
           through strongly_hypomorphic and equivalent before it is kept. */
std::vector<pair_report> mine_strongly_hypomorphic_pairs( unsigned n, unsigned k, unsigned m, class_filter filter,
                                                          const search_budget& budget );
std::vector<pair_report> mine_strongly_hypomorphic_pairs( const universe& u, class_filter filter );

search_report verify_dichotomy( unsigned n, const search_budget& budget );
search_report verify_dichotomy( const universe& u );
search_report verify_gsl( unsigned n, const search_budget& budget );
search_report verify_gsl( const universe& u );
search_report verify_willard_property( unsigned n, unsigned k, std::size_t sample_count, std::uint64_t seed );
search_report verify_deck_counts( std::span<const unsigned> arities );
search_report verify_iterated_set_decks( const search_budget& budget );
search_report verify_iterated_set_decks( const universe& u );
search_report verify_within_class( unsigned n );

/* the report's counts and violations for one candidate, shared with tests */
struct willard_check
{
  bool depends_on_all = false;
  bool cards_symmetric = false;
  bool conclusion = false;

  bool hypothesis() const noexcept { return depends_on_all && cards_symmetric; }
  bool counterexample() const noexcept { return hypothesis() && !conclusion; }
};

willard_check check_willard( const finite_function& f );

/*! \brief All 2^(n+1) totally symmetric Boolean functions of arity n. */
std::vector<finite_function> totally_symmetric_functions( unsigned n );

/*! \brief The functions of Lambda, V and L of arity n, without duplicates,
           in function-number order. */
std::vector<finite_function> clone_members( unsigned n );

} // namespace minordeck
