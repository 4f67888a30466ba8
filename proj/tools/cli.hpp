#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace summa::cli {

// Runs one job; args excludes the program name. Returns 0 on success, 2 on a
// NotFound/Failure verdict, 1 on errors (including parse errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace summa::cli
