// Command-line frontend. run_cli is the whole program as a pure function of
// its arguments and streams, so tests drive it directly.
//
// Exit codes: 0 success, 1 input validation failure, 2 internal invariant
// violation (a verified identity failed, which is a bug trap).

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace pvseq {

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace pvseq
