// The bamin command-line tool, callable in-process for tests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bamin::cli {

/// Exit codes. `include` reports its verdict through 0/1/3.
enum ExitCode : int {
    ok = 0,
    included = 0,
    not_included = 1,
    failure = 2,
    unknown = 3,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A "from:to:step" range or a single value; endpoints are inclusive and the
/// number of points is computed by rounding, so 1.0:3.0:0.1 has 21 points.
std::vector<double> parse_range(const std::string& text);

/// Seed of one sweep sample. It does not depend on the method or lookahead,
/// so every configuration sees the same automata.
std::uint64_t sample_seed(std::uint64_t base, std::size_t td_index, std::size_t sample);

}  // namespace bamin::cli
