#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cograte::cli {

/// Parses a numeric flag value into a list:
///   "3.5"          one value
///   "0:0.5:20"     arithmetic range, stop included within half a step
///   "100:*2:6400"  geometric range, stop included within half a factor
///   "0.5,1,2"      explicit comma list
/// Throws std::invalid_argument on malformed input.
std::vector<double> parse_values(const std::string& text);

/// One resolved numeric parameter, possibly swept.
struct Param {
  std::string label;           // column label, e.g. "p_db" or "p"
  std::vector<double> values;  // linear-scale values used in computations
  std::vector<double> display; // values as given (dB numbers stay dB)

  bool swept() const { return values.size() > 1; }
  double scalar() const;  // single value; throws if swept
};

/// Resolves a --<name>-db / --<name>-linear flag pair. Exactly one spelling
/// may be supplied; both at once is an argument error. When neither is given,
/// `fallback_linear` is used if non-negative, otherwise the parameter is
/// required and an error is raised.
Param resolve_power(const std::string& name, const std::string& db_text,
                    const std::string& linear_text, double fallback_linear = -1.0);

/// Resolves a plain (already linear) flag.
Param resolve_plain(const std::string& name, const std::string& text,
                    double fallback = -1.0);

/// key = value configuration file: '#' starts a comment, keys map to long
/// option names with '_' in place of '-'. Returned in file order.
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path);

/// Expands a parsed config into an argv-style vector (without the program
/// name). The "command" key selects the subcommand; boolean keys (gnuplot)
/// become bare flags.
std::vector<std::string> config_to_args(
    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace cograte::cli
