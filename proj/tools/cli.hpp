#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace talbot::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs the `talbot` command line. `args` excludes the program name.
/// Returns the process exit code: 0 pass, 1 usage/input error, 2 failed check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses whitespace-separated "re,im" pairs, e.g. "5,0 0,3 -2,0".
/// Throws talbot::InvalidArgument on malformed input.
std::vector<std::complex<double>> parse_coords(const std::string& list);

/// One "re,im" pair per line; blank lines and lines starting with '#' are skipped.
std::vector<std::complex<double>> read_point_file(const std::string& path);

}  // namespace talbot::cli
