#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcomb/numbers.hpp"

namespace qcomb {

/// Parses "a..b" (inclusive) or a single value "a". Both ends must be
/// non-negative and ordered; std::invalid_argument otherwise.
IntRange parse_range(const std::string& text);

/// Entry point of the qcomb tool. Tables and reports go to `out`,
/// diagnostics to `err`. Returns 0 on success or all-pass, 1 when a
/// verification finds a counterexample (or oracle-diff a mismatch), and 2 on
/// usage or capacity errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcomb
