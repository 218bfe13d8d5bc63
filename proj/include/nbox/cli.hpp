#pragma once

#include <ostream>

namespace nbox {

/// Entry point of the nbox command-line tool. Returns 0 on success, 1 when
/// a verification fails and 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nbox
