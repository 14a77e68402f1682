#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minordeck::cli
{

/*! \brief Runs one `minor-deck` invocation; args exclude the program name.

  Returns 0 on success, 1 when a verification found violations, 2 on
  usage or input errors (reported on `err`).
*/
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace minordeck::cli
