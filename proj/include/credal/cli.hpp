#ifndef CREDAL_CLI_HPP
#define CREDAL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credal/prob_interval.hpp"

namespace credal::cli {

// Entry point used by the binary and the tests. `args` excludes the program
// name. Returns 0 on success, 1 on malformed input, 2 when a module
// precondition fails; diagnostics go to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rounded decimal rendering: at most `max_places` digits (half-up), trailing
// zeros trimmed but never below `min_places`.
std::string format_decimal(const Rational& q, int min_places = 2, int max_places = 4);

// Aligned comparison table: approach, interval, width (recomputed), and
// whether the classical reference value lies inside.
void emit_comparison_table(std::ostream& out,
                           const std::vector<std::pair<std::string, ProbInterval>>& rows,
                           const std::optional<Rational>& classical);

}  // namespace credal::cli

#endif  // CREDAL_CLI_HPP
