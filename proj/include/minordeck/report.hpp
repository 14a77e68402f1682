#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace minordeck
{

/*! \brief Outcome of a search or verification run.

  `violations` lists every counterexample found; an empty list means the
  checked statement held on the whole search space.
*/
struct search_report
{
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::int64_t>> counts;
  std::vector<std::string> violations;
  /* command-specific payload (pairs, reconstructions, ...) */
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double elapsed_seconds = 0.0;

  void count( const std::string& key, std::int64_t value ) { counts.emplace_back( key, value ); }
  std::int64_t count_of( const std::string& key ) const;
  bool ok() const noexcept { return violations.empty(); }
};

nlohmann::ordered_json report_to_json_value( const search_report& r, bool with_elapsed = true );
std::string report_to_json( const search_report& r, bool with_elapsed = true );
std::string report_to_text( const search_report& r );

} // namespace minordeck
