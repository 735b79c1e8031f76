#ifndef SYMPEXP_CLI_HPP
#define SYMPEXP_CLI_HPP

// Command implementations behind the `sympexp` executable. Every command
// writes results to `out`, diagnostics to `err`, and returns a process exit
// code.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sympexp/expmap.hpp"
#include "sympexp/squeeze.hpp"

namespace sympexp::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,        // unreadable file, malformed JSON, wrong shape
  kDomainError = 2,       // bad argument values, asymmetric a/c in strict mode
  kToleranceFailure = 3,  // a computed residual or deviation exceeds its tolerance
};

inline constexpr double kDefaultTol = 1e-9;

/// Malformed or unreadable input; maps to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// I/O helpers. Parsers throw InputError for malformed text and
// std::invalid_argument for well-formed but invalid values.

/// {"a": [[..],[..]], "b": ..., "c": ...}
Generator parse_generator_json(const std::string& text, Symmetry mode);
/// A bare 4x4 array of rows, or an object whose "matrix" key holds one.
Mat4 parse_matrix_json(const std::string& text);
std::string matrix_to_json(const Mat4& m, int indent = 0);
/// Header "t,q1,p1,q2,p2", one row per sample.
std::string trajectory_to_csv(const Trajectory& traj);
Trajectory parse_trajectory_csv(const std::string& text);
std::string read_file(const std::string& path);

struct ExpOptions {
  std::string input;
  std::string method = "closed";  // closed | series | both
  double tol = kDefaultTol;
  bool lenient = false;
};

struct VerifyOptions {
  std::string input;
  double tol = kDefaultTol;
};

struct SqueezeOptions {
  SqueezeParams params;
  bool compare_v2 = false;
  double tol = kDefaultTol;
};

struct TrajectoryOptions {
  SqueezeParams params;
  double q1 = 0.0;
  double p1 = 0.0;
  double q2 = 0.0;
  double p2 = 0.0;
  double t0 = 0.0;
  double t1 = 6.283185307;
  int steps = 256;
  std::string out;
};

struct FuzzOptions {
  std::int64_t seed = 0;
  std::int64_t count = 0;
  double norm_cap = 3.0;
};

int cmd_exp(const ExpOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_squeeze(const SqueezeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_trajectory(const TrajectoryOptions& opt, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympexp::cli

#endif  // SYMPEXP_CLI_HPP
