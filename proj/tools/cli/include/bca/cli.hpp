#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bca/io.hpp"

namespace bca::cli {

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kInputError = 2;

/// Runs one command. `args` excludes the program name.
/// Returns 0 when the checked properties hold, 1 when one fails, 2 on usage
/// or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Reproduction {
  io::Report report;
  /// "key (expected X, got Y)" for the first published value that differs.
  std::optional<std::string> divergence;
};

/// Example ids: fig1, fig2, fig3, branch-<n>, independence, collapse.
std::vector<std::string> example_ids();

/// Builds the example and compares every published value. Throws
/// std::invalid_argument for an unknown id.
Reproduction reproduce(std::string_view id);

}  // namespace bca::cli
