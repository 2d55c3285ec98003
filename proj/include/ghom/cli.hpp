#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghom {

/* Command-line driver.  args excludes the program name.  Returns the process
   exit status: 0 when everything passed, 1 on a verification failure, 2 on
   an input error (bad flags, unparsable fixture, unknown module), 3 when
   bounds were exhausted and unknown outcomes remain. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ghom
