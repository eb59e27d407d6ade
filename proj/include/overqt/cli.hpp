#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overqt {

/* Parse and run one command line (program name excluded).  Returns the
 * process exit code: 0 on success or a verified property, 1 on a failed
 * verification or counterexample, 2 on a usage error. */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace overqt
