#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seasonlen::cli {

/// Input or usage problem; maps to exit status 2.
class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One numeric column of a delimited file. A first row whose selected field
/// is not numeric is taken as the header. `column` is an index or a header
/// name; empty means the first column.
[[nodiscard]] std::vector<double> read_series_csv(const std::string& path, const std::string& column = "",
                                                  char delimiter = ',');

struct PassCheck {
    bool passed = false;
    std::optional<double> relative_error;
};

/// Passes when both sides are empty, or when the detection lies within
/// margin (relative) of any acceptable reference.
[[nodiscard]] PassCheck check_detection(std::optional<double> detected, const std::vector<double>& references,
                                        double margin);

/// Shortest decimal string that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

/// Entry point of the seasonlen tool: detect, eval and gen subcommands.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seasonlen::cli
