#include "sympexp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "sympexp/format.hpp"
#include "sympexp/oracle.hpp"

namespace sympexp::cli {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <std::size_t N>
Matrix<N> matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != N) throw InputError(what + ": expected " + std::to_string(N) + " rows");
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != N)
      throw InputError(what + ": row " + std::to_string(i) + " must hold " + std::to_string(N) + " numbers");
    for (std::size_t k = 0; k < N; ++k) {
      if (!row[k].is_number()) throw InputError(what + ": non-numeric entry");
      m(i, k) = row[k].get<double>();
    }
  }
  return m;
}

void require_tolerance(double tol) {
  if (!std::isfinite(tol) || tol <= 0.0) throw std::invalid_argument("tolerance must be finite and > 0");
}

// Runs body, mapping exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw InputError("failed writing '" + path + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Generator parse_generator_json(const std::string& text, Symmetry mode) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InputError("generator file must be a JSON object with keys a, b, c");
  for (const char* key : {"a", "b", "c"})
    if (!j.contains(key)) throw InputError(std::string("generator file is missing key '") + key + "'");
  return Generator(matrix_from_json<2>(j["a"], "a"), matrix_from_json<2>(j["b"], "b"),
                   matrix_from_json<2>(j["c"], "c"), mode);
}

Mat4 parse_matrix_json(const std::string& text) {
  const json j = parse_json(text);
  if (j.is_object()) {
    if (!j.contains("matrix")) throw InputError("matrix object is missing key 'matrix'");
    return matrix_from_json<4>(j["matrix"], "matrix");
  }
  return matrix_from_json<4>(j, "matrix");
}

std::string matrix_to_json(const Mat4& m, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string s = "[\n";
  for (std::size_t i = 0; i < 4; ++i) {
    s += pad + "  [";
    for (std::size_t k = 0; k < 4; ++k) {
      if (k) s += ", ";
      s += format_double(m(i, k));
    }
    s += i + 1 < 4 ? "],\n" : "]\n";
  }
  s += pad + "]";
  return s;
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string s = "t,q1,p1,q2,p2\n";
  for (const PhaseSample& p : traj.samples) {
    s += format_double(p.t) + ',' + format_double(p.q1) + ',' + format_double(p.p1) + ',' + format_double(p.q2) +
         ',' + format_double(p.p2) + '\n';
  }
  return s;
}

Trajectory parse_trajectory_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "t,q1,p1,q2,p2") throw InputError("trajectory CSV: bad header");
  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v[5];
    const char* cur = line.c_str();
    for (int k = 0; k < 5; ++k) {
      char* end = nullptr;
      v[k] = std::strtod(cur, &end);
      if (end == cur) throw InputError("trajectory CSV: bad number in '" + line + "'");
      const char expected = k < 4 ? ',' : '\0';
      if (*end != expected) throw InputError("trajectory CSV: expected 5 columns in '" + line + "'");
      cur = end + (k < 4 ? 1 : 0);
    }
    traj.samples.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  return traj;
}

int cmd_exp(const ExpOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_tolerance(opt.tol);
    if (opt.method != "closed" && opt.method != "series" && opt.method != "both")
      throw std::invalid_argument("method must be closed, series or both");
    const Generator g =
        parse_generator_json(read_file(opt.input), opt.lenient ? Symmetry::lenient : Symmetry::strict);

    if (opt.method == "closed") {
      out << matrix_to_json(exp_sp4(g)) << '\n';
      return int{kOk};
    }
    const Mat4 series = exp_series(lie_matrix(g));
    if (opt.method == "series") {
      out << matrix_to_json(series) << '\n';
      return int{kOk};
    }
    const Mat4 closed = exp_sp4(g);
    const double diff = max_abs_diff(closed, series);
    out << "{\n  \"matrix\": " << matrix_to_json(closed, 2) << ",\n  \"series\": " << matrix_to_json(series, 2)
        << ",\n  \"max_abs_diff\": " << format_double(diff) << "\n}\n";
    if (diff > opt.tol) {
      err << "closed form and series differ by " << format_double(diff) << " > " << format_double(opt.tol) << '\n';
      return int{kToleranceFailure};
    }
    return int{kOk};
  });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_tolerance(opt.tol);
    const Mat4 m = parse_matrix_json(read_file(opt.input));
    if (!all_finite(m)) throw std::invalid_argument("matrix has non-finite entries");
    const double residual = symplectic_residual(m);
    out << "residual=" << format_double(residual) << '\n';
    return residual <= opt.tol ? int{kOk} : int{kToleranceFailure};
  });
}

int cmd_squeeze(const SqueezeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_tolerance(opt.tol);
    opt.params.validate();
    const Mat4 ms = squeeze_matrix(opt.params);
    if (!opt.compare_v2) {
      out << matrix_to_json(ms) << '\n';
      return int{kOk};
    }
    // 4 V(r/2) against M_s(r, pi/2) at unit scales.
    const double residual = factor_two_check(0.5 * opt.params.r);
    out << "{\n  \"matrix\": " << matrix_to_json(ms, 2) << ",\n  \"factor_two_residual\": " << format_double(residual)
        << "\n}\n";
    return residual <= opt.tol ? int{kOk} : int{kToleranceFailure};
  });
}

int cmd_trajectory(const TrajectoryOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    opt.params.validate();
    if (opt.out.empty()) throw std::invalid_argument("--out is required");
    const Trajectory circle = circular_trajectory({opt.q1, opt.q2}, {opt.p1, opt.p2}, opt.t0, opt.t1, opt.steps);
    const Trajectory moved = transform_trajectory(circle, squeeze_matrix(opt.params));
    const std::string orig_path = opt.out + ".orig.csv";
    write_text_file(opt.out, trajectory_to_csv(moved));
    write_text_file(orig_path, trajectory_to_csv(circle));
    out << "samples=" << moved.samples.size() << '\n' << "out=" << opt.out << '\n' << "orig=" << orig_path << '\n';
    return int{kOk};
  });
}

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.count < 1) throw std::invalid_argument("--count must be >= 1");
    const FuzzReport report =
        fuzz_expmap(static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(opt.count), opt.norm_cap);
    out << report.to_text();
    return report.max_dev <= kDefaultTol ? int{kOk} : int{kToleranceFailure};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form exponential map sp(4,R) -> Sp(4,R) and the classical two-mode squeeze matrix",
               "sympexp"};
  app.require_subcommand(1);

  ExpOptions exp_opt;
  auto* exp = app.add_subcommand("exp", "Exponentiate a generator (a, b, c) read from JSON");
  exp->add_option("--input", exp_opt.input, "Generator JSON file")->required();
  exp->add_option("--method", exp_opt.method, "closed | series | both")
      ->check(CLI::IsMember({"closed", "series", "both"}));
  exp->add_option("--tol", exp_opt.tol, "Tolerance for --method both");
  exp->add_flag("--lenient", exp_opt.lenient, "Symmetrize a and c instead of rejecting them");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Symplectic residual of a 4x4 matrix read from JSON");
  verify->add_option("--input", verify_opt.input, "Matrix JSON file")->required();
  verify->add_option("--tol", verify_opt.tol, "Residual tolerance");

  SqueezeOptions squeeze_opt;
  auto* squeeze = app.add_subcommand("squeeze", "Print the classical squeeze matrix M_s(r, phi)");
  squeeze->add_option("--r", squeeze_opt.params.r, "Squeeze magnitude")->required();
  squeeze->add_option("--phi", squeeze_opt.params.phi, "Squeeze angle (radians)")->required();
  squeeze->add_option("--l1", squeeze_opt.params.l1, "Oscillator length of mode 1");
  squeeze->add_option("--l2", squeeze_opt.params.l2, "Oscillator length of mode 2");
  squeeze->add_option("--hbar", squeeze_opt.params.hbar, "Action unit");
  squeeze->add_flag("--compare-v2", squeeze_opt.compare_v2, "Also report ||4 V(r/2) - M_s(r, pi/2)||");
  squeeze->add_option("--tol", squeeze_opt.tol, "Tolerance for --compare-v2");

  TrajectoryOptions traj_opt;
  auto* traj = app.add_subcommand("trajectory", "Write a circular trajectory and its image under M_s as CSV");
  traj->add_option("--r", traj_opt.params.r, "Squeeze magnitude")->required();
  traj->add_option("--phi", traj_opt.params.phi, "Squeeze angle (radians)")->required();
  traj->add_option("--l1", traj_opt.params.l1, "Oscillator length of mode 1");
  traj->add_option("--l2", traj_opt.params.l2, "Oscillator length of mode 2");
  traj->add_option("--hbar", traj_opt.params.hbar, "Action unit");
  traj->add_option("--q1", traj_opt.q1, "Initial q1")->required();
  traj->add_option("--p1", traj_opt.p1, "Initial p1")->required();
  traj->add_option("--q2", traj_opt.q2, "Initial q2")->required();
  traj->add_option("--p2", traj_opt.p2, "Initial p2")->required();
  traj->add_option("--t0", traj_opt.t0, "Start time");
  traj->add_option("--t1", traj_opt.t1, "End time");
  traj->add_option("--steps", traj_opt.steps, "Number of samples (>= 2)");
  traj->add_option("--out", traj_opt.out, "Output CSV; the untransformed circle goes to <out>.orig.csv")
      ->required();

  FuzzOptions fuzz_opt;
  auto* fuzz = app.add_subcommand("fuzz", "Compare the closed form with the series exponential on random generators");
  fuzz->add_option("--seed", fuzz_opt.seed, "PRNG seed")->required();
  fuzz->add_option("--count", fuzz_opt.count, "Number of generators")->required();
  fuzz->add_option("--norm-cap", fuzz_opt.norm_cap, "Upper bound on ||m||_inf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kDomainError};
  }

  if (exp->parsed()) return cmd_exp(exp_opt, out, err);
  if (verify->parsed()) return cmd_verify(verify_opt, out, err);
  if (squeeze->parsed()) return cmd_squeeze(squeeze_opt, out, err);
  if (traj->parsed()) return cmd_trajectory(traj_opt, out, err);
  return cmd_fuzz(fuzz_opt, out, err);
}

}  // namespace sympexp::cli
