#include "minordeck/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "minordeck/anf.hpp"
#include "minordeck/classify.hpp"
#include "minordeck/deck.hpp"
#include "minordeck/equivalence.hpp"
#include "minordeck/literal.hpp"
#include "minordeck/search.hpp"

namespace minordeck::cli
{

namespace
{

using json = nlohmann::ordered_json;

struct options
{
  std::vector<std::string> literals;
  std::string pair;
  bool labels = false;
  bool as_json = false;
  unsigned n = 4;
  unsigned k = 2;
  unsigned m = 2;
  std::string filter = "none";
  unsigned shards = 1;
  std::optional<unsigned> shard_index;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t budget_cells = default_cell_limit;
  std::string cache;
  std::vector<unsigned> arities{ 4, 5, 6 };
};

search_budget budget_of( const options& o )
{
  search_budget b;
  b.max_table_cells = o.budget_cells;
  b.shard_count = o.shards;
  b.shard_index = o.shard_index.value_or( 0 );
  b.validate();
  return b;
}

void add_shape( CLI::App* cmd, options& o )
{
  cmd->add_option( "--n", o.n, "arity" );
  cmd->add_option( "--k", o.k, "domain size" );
  cmd->add_option( "--m", o.m, "codomain size" );
}

void add_search_flags( CLI::App* cmd, options& o )
{
  cmd->add_option( "--shards", o.shards, "number of shards (worker threads)" )->check( CLI::PositiveNumber );
  cmd->add_option( "--shard-index", o.shard_index, "run only this shard" );
  cmd->add_option( "--budget-cells", o.budget_cells, "largest table size (cells) to enumerate" );
  cmd->add_flag( "--json", o.as_json, "emit JSON" );
}

json card_list( const std::vector<card>& cards )
{
  json out = json::array();
  for ( const auto& c : cards )
  {
    out.push_back( print_card( c ) );
  }
  return out;
}

int emit_report( const search_report& r, const options& o, std::ostream& out, int failure_code = 1 )
{
  out << ( o.as_json ? report_to_json( r ) + "\n" : report_to_text( r ) );
  return r.ok() ? 0 : failure_code;
}

template<typename Fn>
search_report timed( Fn&& fn )
{
  const auto start = std::chrono::steady_clock::now();
  auto r = fn();
  r.elapsed_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  return r;
}

/* ---------------------------------------------------------------------- */

int do_minor( const options& o, std::ostream& out )
{
  const auto f = parse_literal( o.literals.at( 0 ) );
  if ( o.literals.size() == 2 )
  {
    const auto g = parse_literal( o.literals[1] );
    const bool result = is_minor_of( f, g );
    if ( o.as_json )
    {
      out << json{ { "f", print_literal( f ) }, { "g", print_literal( g ) }, { "is_minor", result } }.dump( 2 ) << "\n";
    }
    else
    {
      out << "is minor: " << ( result ? "true" : "false" ) << "\n";
    }
    return 0;
  }
  std::vector<index_pair> pairs;
  if ( !o.pair.empty() )
  {
    const auto comma = o.pair.find( ',' );
    if ( comma == std::string::npos )
    {
      throw parse_error( "--pair expects i,j", 0 );
    }
    try
    {
      pairs.push_back( make_pair_index( std::stoi( o.pair.substr( 0, comma ) ), std::stoi( o.pair.substr( comma + 1 ) ) ) );
    }
    catch ( const std::logic_error& )
    {
      throw parse_error( "--pair expects two integers i,j", 0 );
    }
  }
  else
  {
    pairs = index_pairs( f.arity() );
  }
  json rows = json::array();
  for ( const auto& p : pairs )
  {
    const auto minor = identification_minor( f, p );
    const auto name = "{" + std::to_string( p.lo ) + "," + std::to_string( p.hi ) + "}";
    if ( o.as_json )
    {
      rows.push_back( { { "pair", { p.lo, p.hi } },
                        { "minor", print_literal( minor ) },
                        { "card", print_card( canonical_form( minor ) ) } } );
    }
    else
    {
      out << name << " " << print_literal( minor ) << "  " << print_card( canonical_form( minor ) ) << "\n";
    }
  }
  if ( o.as_json )
  {
    out << json{ { "function", print_literal( f ) }, { "minors", rows } }.dump( 2 ) << "\n";
  }
  return 0;
}

int do_deck( const options& o, std::ostream& out )
{
  const auto f = parse_literal( o.literals.at( 0 ) );
  const auto d = deck_of( f );
  if ( o.as_json )
  {
    json entries = json::array();
    for ( const auto& e : d.entries() )
    {
      entries.push_back( { { "multiplicity", e.multiplicity }, { "card", print_card( e.c ) } } );
    }
    json doc{ { "function", print_literal( f ) }, { "deck", entries } };
    if ( o.labels )
    {
      json labels = json::array();
      for ( const auto& lc : labeled_deck_of( f ) )
      {
        labels.push_back( { { "pair", { lc.pair.lo, lc.pair.hi } }, { "card", print_card( lc.c ) } } );
      }
      doc["labels"] = labels;
    }
    out << doc.dump( 2 ) << "\n";
    return 0;
  }
  out << print_deck( d );
  if ( o.labels )
  {
    for ( const auto& lc : labeled_deck_of( f ) )
    {
      out << "{" << lc.pair.lo << "," << lc.pair.hi << "} " << print_card( lc.c ) << "\n";
    }
  }
  return 0;
}

int do_setdeck( const options& o, std::ostream& out )
{
  const auto f = parse_literal( o.literals.at( 0 ) );
  const auto s = set_deck_of( f );
  if ( o.as_json )
  {
    out << json{ { "function", print_literal( f ) }, { "set_deck", card_list( s.cards() ) } }.dump( 2 ) << "\n";
  }
  else
  {
    out << print_set_deck( s );
  }
  return 0;
}

int do_equiv( const options& o, std::ostream& out )
{
  const auto f = parse_literal( o.literals.at( 0 ) );
  const auto g = parse_literal( o.literals.at( 1 ) );
  const bool result = equivalent( f, g );
  if ( o.as_json )
  {
    out << json{ { "equivalent", result },
                 { "f_card", print_card( canonical_form( f ) ) },
                 { "g_card", print_card( canonical_form( g ) ) } }
                   .dump( 2 )
        << "\n";
  }
  else
  {
    out << "equivalent: " << ( result ? "true" : "false" ) << "\n";
  }
  return 0;
}

int do_classify( const options& o, std::ostream& out )
{
  const auto r = classify( parse_literal( o.literals.at( 0 ) ) );
  out << ( o.as_json ? report_to_json( r ) + "\n" : report_to_text( r ) );
  return 0;
}

int do_anf( const options& o, std::ostream& out, bool arity_given )
{
  const auto& input = o.literals.at( 0 );
  std::optional<finite_function> f;
  try
  {
    f = parse_literal( input );
  }
  catch ( const parse_error& )
  {
    if ( !arity_given )
    {
      throw;
    }
  }
  if ( f )
  {
    const auto p = to_anf( *f );
    if ( o.as_json )
    {
      out << json{ { "function", print_literal( *f ) }, { "anf", print_anf( p ) }, { "degree", degree( p ) } }.dump( 2 )
          << "\n";
    }
    else
    {
      out << print_anf( p ) << "\n" << "degree: " << degree( p ) << "\n";
    }
    return 0;
  }
  const auto p = parse_anf( input, o.n );
  const auto g = from_anf( p );
  if ( o.as_json )
  {
    out << json{ { "anf", print_anf( p ) }, { "function", print_literal( g ) }, { "degree", degree( p ) } }.dump( 2 )
        << "\n";
  }
  else
  {
    out << print_literal( g ) << "\n";
  }
  return 0;
}

/* ---------------------------------------------------------------------- */

int do_enumerate( const options& o, std::ostream& out )
{
  auto b = budget_of( o );
  json items = json::array();
  const auto emit = [&]( const search_budget& part ) {
    for ( const auto& f : enumerate_functions( o.n, o.k, o.m, part ) )
    {
      if ( o.as_json )
      {
        items.push_back( print_literal( f ) );
      }
      else
      {
        out << print_literal( f ) << "\n";
      }
    }
  };
  if ( o.shard_index )
  {
    emit( b );
  }
  else
  {
    for ( unsigned s = 0; s < b.shard_count; ++s )
    {
      b.shard_index = s;
      emit( b );
    }
  }
  if ( o.as_json )
  {
    out << json{ { "command", "search-enumerate" }, { "functions", items } }.dump( 2 ) << "\n";
  }
  return 0;
}

int do_census( const options& o, std::ostream& out )
{
  auto b = budget_of( o );
  const auto r = timed( [&] {
    set_deck_census census;
    if ( o.shard_index )
    {
      census = group_by_set_deck( o.n, o.k, o.m, b );
    }
    else
    {
      std::vector<set_deck_census> parts;
      for ( unsigned s = 0; s < b.shard_count; ++s )
      {
        b.shard_index = s;
        parts.push_back( group_by_set_deck( o.n, o.k, o.m, b ) );
      }
      census = merge_censuses( parts );
    }
    if ( !o.cache.empty() )
    {
      std::ofstream file( o.cache );
      if ( !file )
      {
        throw error( "cannot write cache file " + o.cache );
      }
      file << census_to_cache( census );
    }
    search_report rep;
    rep.command = "search-census";
    rep.parameters["n"] = o.n;
    rep.parameters["k"] = o.k;
    rep.parameters["m"] = o.m;
    rep.parameters["shards"] = o.shards;
    if ( o.shard_index )
    {
      rep.parameters["shard_index"] = *o.shard_index;
    }
    std::size_t functions = 0;
    std::size_t largest = 0;
    std::map<std::size_t, std::size_t> histogram;
    json buckets = json::array();
    for ( const auto& bucket : census.buckets )
    {
      json members = json::array();
      for ( const auto& member : bucket.members )
      {
        functions += member.functions;
        members.push_back( { { "card", print_card( member.cls ) },
                             { "representative", print_literal( function_at( o.n, o.k, o.m, member.representative ) ) },
                             { "functions", member.functions } } );
      }
      largest = std::max( largest, bucket.members.size() );
      ++histogram[bucket.members.size()];
      buckets.push_back( { { "set_deck", card_list( bucket.key.cards() ) }, { "members", members } } );
    }
    rep.count( "functions", static_cast<std::int64_t>( functions ) );
    rep.count( "buckets", static_cast<std::int64_t>( census.buckets.size() ) );
    rep.count( "largest_bucket_classes", static_cast<std::int64_t>( largest ) );
    for ( const auto& [size, count] : histogram )
    {
      rep.count( "buckets_with_" + std::to_string( size ) + "_classes", static_cast<std::int64_t>( count ) );
    }
    rep.details["buckets"] = buckets;
    return rep;
  } );
  return emit_report( r, o, out );
}

int do_reconstructions( const options& o, std::ostream& out, bool set_version )
{
  const auto f = parse_literal( o.literals.at( 0 ) );
  const auto filter = parse_filter( o.filter );
  const auto r = timed( [&] {
    const auto classes = set_version ? find_set_reconstructions( f, budget_of( o ), filter )
                                     : find_reconstructions( f, budget_of( o ), filter );
    search_report rep;
    rep.command = set_version ? "search-set-reconstructions" : "search-reconstructions";
    rep.parameters["function"] = print_literal( f );
    rep.parameters["filter"] = filter_name( filter );
    rep.parameters["shards"] = o.shards;
    rep.count( "classes", static_cast<std::int64_t>( classes.size() ) );
    rep.details["classes"] = card_list( classes );
    return rep;
  } );
  if ( !o.as_json )
  {
    out << report_to_text( r );
    for ( const auto& c : r.details["classes"] )
    {
      out << "  " << c.get<std::string>() << "\n";
    }
    return 0;
  }
  return emit_report( r, o, out );
}

json flags_json( const classification_report& c )
{
  return json::parse( report_to_json( c ) );
}

int do_pairs( const options& o, std::ostream& out )
{
  const auto filter = parse_filter( o.filter );
  const auto r = timed( [&] {
    const auto pairs = mine_strongly_hypomorphic_pairs( o.n, o.k, o.m, filter, budget_of( o ) );
    search_report rep;
    rep.command = "search-pairs";
    rep.parameters["n"] = o.n;
    rep.parameters["k"] = o.k;
    rep.parameters["m"] = o.m;
    rep.parameters["filter"] = filter_name( filter );
    rep.parameters["shards"] = o.shards;
    const bool boolean = o.k == 2 && o.m == 2;
    json list = json::array();
    for ( const auto& p : pairs )
    {
      json item{ { "f", p.f_literal }, { "g", p.g_literal }, { "relation", p.relation }, { "equivalent", p.equivalent } };
      if ( boolean )
      {
        item["f_flags"] = flags_json( p.f_flags );
        item["g_flags"] = flags_json( p.g_flags );
        const auto in_clone = []( const classification_report& c ) { return c.in_lambda || c.in_v || c.in_l; };
        if ( o.n >= 4 && ( in_clone( p.f_flags ) || in_clone( p.g_flags ) ) )
        {
          rep.violations.push_back( "pair " + p.f_literal + ", " + p.g_literal + " has a member in Lambda, V or L" );
        }
      }
      list.push_back( item );
    }
    rep.count( "pairs", static_cast<std::int64_t>( pairs.size() ) );
    rep.details["pairs"] = list;
    return rep;
  } );
  if ( !o.as_json )
  {
    out << report_to_text( r );
    for ( const auto& p : r.details["pairs"] )
    {
      out << "  " << p["f"].get<std::string>() << " ~ " << p["g"].get<std::string>() << "\n";
    }
    return r.ok() ? 0 : 1;
  }
  return emit_report( r, o, out );
}

/* ---------------------------------------------------------------------- */

int dispatch( const std::map<std::string, CLI::App*>& cmds, options& o, std::ostream& out )
{
  const auto used = [&]( const char* name ) { return cmds.at( name )->parsed(); };
  if ( used( "minor" ) )
    return do_minor( o, out );
  if ( used( "deck" ) )
    return do_deck( o, out );
  if ( used( "setdeck" ) )
    return do_setdeck( o, out );
  if ( used( "equiv" ) )
    return do_equiv( o, out );
  if ( used( "classify" ) )
    return do_classify( o, out );
  if ( used( "anf" ) )
    return do_anf( o, out, cmds.at( "anf" )->count( "--n" ) > 0 );
  if ( used( "search enumerate" ) )
    return do_enumerate( o, out );
  if ( used( "search census" ) )
    return do_census( o, out );
  if ( used( "search set-reconstructions" ) )
    return do_reconstructions( o, out, true );
  if ( used( "search reconstructions" ) )
    return do_reconstructions( o, out, false );
  if ( used( "search pairs" ) )
    return do_pairs( o, out );
  if ( used( "verify dichotomy" ) )
    return emit_report( verify_dichotomy( o.n, budget_of( o ) ), o, out );
  if ( used( "verify gsl" ) )
    return emit_report( verify_gsl( o.n, budget_of( o ) ), o, out );
  if ( used( "verify willard" ) )
    return emit_report( verify_willard_property( o.n, o.k, o.samples, o.seed ), o, out );
  if ( used( "verify deck-counts" ) )
    return emit_report( verify_deck_counts( o.arities ), o, out );
  if ( used( "verify iterated-setdecks" ) )
    return emit_report( verify_iterated_set_decks( budget_of( o ) ), o, out );
  if ( used( "verify class-setdecks" ) )
    return emit_report( verify_within_class( o.n ), o, out );
  throw CLI::CallForHelp();
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  options o;
  CLI::App app{ "Identification minors, decks and set-decks of finite functions", "minor-deck" };
  app.require_subcommand( 1 );
  std::map<std::string, CLI::App*> cmds;

  auto* minor = app.add_subcommand( "minor", "list identification minors of F, or decide F <= G" );
  minor->add_option( "functions", o.literals, "F [G]" )->required()->expected( 1, 2 );
  minor->add_option( "--pair", o.pair, "only the pair i,j" );
  minor->add_flag( "--json", o.as_json );
  cmds["minor"] = minor;

  auto* deck_cmd = app.add_subcommand( "deck", "deck of F as a multiset of cards" );
  deck_cmd->add_option( "function", o.literals )->required()->expected( 1 );
  deck_cmd->add_flag( "--labels", o.labels, "also list the card of every pair" );
  deck_cmd->add_flag( "--json", o.as_json );
  cmds["deck"] = deck_cmd;

  auto* setdeck_cmd = app.add_subcommand( "setdeck", "set-deck of F" );
  setdeck_cmd->add_option( "function", o.literals )->required()->expected( 1 );
  setdeck_cmd->add_flag( "--json", o.as_json );
  cmds["setdeck"] = setdeck_cmd;

  auto* equiv_cmd = app.add_subcommand( "equiv", "decide F == G" );
  equiv_cmd->add_option( "functions", o.literals )->required()->expected( 2 );
  equiv_cmd->add_flag( "--json", o.as_json );
  cmds["equiv"] = equiv_cmd;

  auto* classify_cmd = app.add_subcommand( "classify", "clone membership and structural flags of F" );
  classify_cmd->add_option( "function", o.literals )->required()->expected( 1 );
  classify_cmd->add_flag( "--json", o.as_json );
  cmds["classify"] = classify_cmd;

  auto* anf_cmd = app.add_subcommand( "anf", "Zhegalkin polynomial of F, or the function of a polynomial (with --n)" );
  anf_cmd->add_option( "input", o.literals )->required()->expected( 1 );
  anf_cmd->add_option( "--n", o.n, "arity of a polynomial input" );
  anf_cmd->add_flag( "--json", o.as_json );
  cmds["anf"] = anf_cmd;

  auto* search = app.add_subcommand( "search", "exhaustive searches" );
  search->require_subcommand( 1 );
  {
    auto* c = search->add_subcommand( "enumerate", "list every function of a shape (or one shard)" );
    add_shape( c, o );
    add_search_flags( c, o );
    cmds["search enumerate"] = c;

    c = search->add_subcommand( "census", "bucket all functions of a shape by set-deck" );
    add_shape( c, o );
    add_search_flags( c, o );
    c->add_option( "--cache", o.cache, "write the census to this file" );
    cmds["search census"] = c;

    for ( const auto* name : { "set-reconstructions", "reconstructions" } )
    {
      c = search->add_subcommand( name, std::string( "classes sharing the " ) +
                                            ( name[0] == 's' ? "set-deck" : "deck" ) + " of F" );
      c->add_option( "function", o.literals )->required()->expected( 1 );
      c->add_option( "--filter", o.filter, "lambda|v|l|monotone|clones|none" );
      add_search_flags( c, o );
      cmds[std::string( "search " ) + name] = c;
    }

    c = search->add_subcommand( "pairs", "mine nonequivalent strongly hypomorphic pairs" );
    add_shape( c, o );
    add_search_flags( c, o );
    c->add_option( "--filter", o.filter, "lambda|v|l|monotone|clones|none" );
    cmds["search pairs"] = c;
  }

  auto* verify = app.add_subcommand( "verify", "desk-scale verifications" );
  verify->require_subcommand( 1 );
  {
    auto* c = verify->add_subcommand( "dichotomy", "set-deck buckets of clone members are single classes" );
    c->add_option( "--n", o.n, "arity (default 4)" );
    add_search_flags( c, o );
    cmds["verify dichotomy"] = c;

    c = verify->add_subcommand( "gsl", "essentially unary functions versus their cards" );
    c->add_option( "--n", o.n, "arity (default 4)" );
    add_search_flags( c, o );
    cmds["verify gsl"] = c;

    c = verify->add_subcommand( "willard", "symmetric cards force supp/oddsupp determination" );
    c->add_option( "--n", o.n, "arity (default 5)" );
    c->add_option( "--k", o.k, "domain size (2)" );
    c->add_option( "--seed", o.seed, "random seed" );
    c->add_option( "--samples", o.samples, "random functions to test" );
    c->add_flag( "--json", o.as_json );
    cmds["verify willard"] = c;

    c = verify->add_subcommand( "deck-counts", "deck multiplicities of iterated operations" );
    c->add_option( "--n", o.arities, "arities to check (default 4 5 6)" );
    c->add_flag( "--json", o.as_json );
    cmds["verify deck-counts"] = c;

    c = verify->add_subcommand( "iterated-setdecks", "no 4-ary set-reconstruction of o_2, o_3 depends on all arguments" );
    add_search_flags( c, o );
    cmds["verify iterated-setdecks"] = c;

    c = verify->add_subcommand( "class-setdecks", "clone members never share set-decks across classes" );
    c->add_option( "--n", o.n, "arity (default 5)" );
    c->add_flag( "--json", o.as_json );
    cmds["verify class-setdecks"] = c;
  }

  std::vector<std::string> reversed( args.rbegin(), args.rend() );
  try
  {
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? 0 : 2;
  }

  /* per-command arity defaults */
  if ( cmds["verify willard"]->parsed() && cmds["verify willard"]->count( "--n" ) == 0 )
  {
    o.n = 5;
  }
  if ( cmds["verify class-setdecks"]->parsed() && cmds["verify class-setdecks"]->count( "--n" ) == 0 )
  {
    o.n = 5;
  }

  try
  {
    return dispatch( cmds, o, out );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? 0 : 2;
  }
  catch ( const error& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace minordeck::cli
