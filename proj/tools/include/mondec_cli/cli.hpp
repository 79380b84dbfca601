#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mondec::cli {

/// Exit statuses: 0 decomposable (or success), 1 not decomposable, 2 error.
inline constexpr int exit_decomposable = 0;
inline constexpr int exit_not_decomposable = 1;
inline constexpr int exit_error = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mondec::cli
