#include "minordeck/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace minordeck
{

std::int64_t search_report::count_of( const std::string& key ) const
{
  for ( const auto& [name, value] : counts )
  {
    if ( name == key )
    {
      return value;
    }
  }
  throw std::out_of_range( "report has no count named " + key );
}

nlohmann::ordered_json report_to_json_value( const search_report& r, bool with_elapsed )
{
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  auto counts = nlohmann::ordered_json::object();
  for ( const auto& [key, value] : r.counts )
  {
    counts[key] = value;
  }
  j["counts"] = counts;
  j["violations"] = r.violations;
  if ( !r.details.empty() )
  {
    j["details"] = r.details;
  }
  if ( with_elapsed )
  {
    j["elapsed"] = r.elapsed_seconds;
  }
  return j;
}

std::string report_to_json( const search_report& r, bool with_elapsed )
{
  return report_to_json_value( r, with_elapsed ).dump( 2 );
}

std::string report_to_text( const search_report& r )
{
  std::string out = r.command + "\n";
  for ( const auto& [key, value] : r.parameters.items() )
  {
    out += "  " + key + ": " + ( value.is_string() ? value.get<std::string>() : value.dump() ) + "\n";
  }
  for ( const auto& [key, value] : r.counts )
  {
    out += "  " + key + " = " + std::to_string( value ) + "\n";
  }
  if ( r.violations.empty() )
  {
    out += "violations: none\n";
  }
  else
  {
    out += "violations: " + std::to_string( r.violations.size() ) + "\n";
    for ( const auto& v : r.violations )
    {
      out += "  " + v + "\n";
    }
  }
  char elapsed[64];
  std::snprintf( elapsed, sizeof elapsed, "elapsed: %.3f s\n", r.elapsed_seconds );
  out += elapsed;
  return out;
}

} // namespace minordeck
