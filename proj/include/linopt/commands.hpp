// Copyright 2026 The linopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The command-line pipeline as plain functions. Each command returns the
// text for standard output, the files it wants written and an exit code; the
// executable writes files only after a command has fully succeeded.
//
// Exit codes: 0 success (feasible), 1 infeasible, 2 invalid arguments or
// input, 3 non-unitary / non-antihermitian input, 4 internal error.

#ifndef LINOPT_COMMANDS_HPP
#define LINOPT_COMMANDS_HPP

#include <chrono>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linopt/algebra.hpp"
#include "linopt/decompose.hpp"
#include "linopt/errors.hpp"
#include "linopt/fock.hpp"
#include "linopt/io.hpp"
#include "linopt/lift.hpp"
#include "linopt/synth.hpp"

namespace linopt::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitInvalid = 2,
  kExitNonUnitary = 3,
  kExitInternal = 4,
};

struct OutputFile {
  std::string path;
  std::string contents;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string stdout_text;
  std::string stderr_text;
  std::vector<OutputFile> files;
  io::Json report;  // null for commands without a report
};

/// Default feasibility tolerance: PHOTONIC_TOL when set, otherwise 1e-7.
inline double default_tolerance() {
  const char* env = std::getenv("PHOTONIC_TOL");
  if (env == nullptr || *env == '\0') return kDefaultFeasibilityTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw io::ParseError(std::string("PHOTONIC_TOL must be a positive number, got \"") + env + "\"");
  }
  return v;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NonUnitaryInput*>(&e) || dynamic_cast<const NotAntihermitian*>(&e))
    return kExitNonUnitary;
  if (dynamic_cast<const io::ParseError*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
      dynamic_cast<const OverflowError*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e) ||
      dynamic_cast<const nlohmann::json::exception*>(&e))
    return kExitInvalid;
  return kExitInternal;
}

/// Runs `body`, mapping exceptions to exit codes and dropping any files.
template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit_code = exit_code_for(e);
    r.stderr_text = std::string("error: ") + e.what() + "\n";
    return r;
  }
}

/// Resolves (m, n) from flags, falling back to file metadata; flags and
/// metadata must agree when both are present.
inline std::pair<int, int> resolve_shape(const io::MatrixFile& file, std::optional<int> modes,
                                         std::optional<int> photons) {
  auto pick = [](std::optional<int> flag, std::optional<int> meta, const char* name) {
    if (flag && meta && *flag != *meta) {
      throw io::ParseError(std::string("--") + name + " disagrees with the file metadata");
    }
    if (flag) return *flag;
    if (meta) return *meta;
    throw io::ParseError(std::string("--") + name + " is required (no metadata in input file)");
  };
  const int m = pick(modes, file.m, "modes");
  const int n = pick(photons, file.n, "photons");
  if (m < 1 || n < 1) throw io::ParseError("--modes and --photons must be positive");
  return {m, n};
}

inline const char* source_name(WitnessSource s) {
  return s == WitnessSource::kAdjointSystem ? "adjoint-system" : "verification";
}

// `basis` is given when the witness refers to a conjugated basis element.
inline io::Json witness_to_json(const Witness& w, const FockBasis& fock, const AlgebraBasis* basis,
                                const char* source) {
  io::Json j;
  j["source"] = source;
  if (basis) {
    j["basis_index"] = w.basis_index;
    j["generator"] = basis->labels[w.basis_index].str();
  }
  j["row"] = w.row;
  j["col"] = w.col;
  j["row_state"] = fock[static_cast<std::size_t>(w.row)].str();
  j["col_state"] = fock[static_cast<std::size_t>(w.col)].str();
  j["transfer_distance"] = w.transfer_distance;
  j["value"] = io::complex_to_json(w.value);
  return j;
}

inline io::Json report_header(const char* command, io::Json args) {
  io::Json r;
  r["command"] = command;
  r["arguments"] = std::move(args);
  return r;
}

inline void report_footer(io::Json& r, Clock::time_point start) {
  r["basis_order"] = io::kBasisOrder;
  r["index_base"] = 0;
  r["version"] = kVersion;
  r["wall_time_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace detail

inline CommandResult run_dim(int modes, int photons) {
  return detail::guarded([&] {
    if (modes < 1 || photons < 1) throw io::ParseError("--modes and --photons must be positive");
    CommandResult r;
    r.stdout_text = std::to_string(dim(modes, photons)) + "\n";
    return r;
  });
}

enum class LiftMethod { kExpand, kPermanent };

struct LiftArgs {
  std::string input;
  int photons = 0;
  LiftMethod method = LiftMethod::kExpand;
  std::optional<std::string> output;  // standard output when absent
};

inline CommandResult run_lift(const LiftArgs& args) {
  return detail::guarded([&] {
    if (args.photons < 1) throw io::ParseError("--photons must be positive");
    const io::MatrixFile file = io::read_matrix(args.input);
    require_square(file.data, "lift");
    const ComplexMatrix u = args.method == LiftMethod::kExpand ? lift_unitary(file.data, args.photons)
                                                               : lift_unitary_permanent(file.data, args.photons);
    const std::string text =
        io::dump(io::matrix_to_json(u, static_cast<int>(file.data.rows()), args.photons));
    CommandResult r;
    if (args.output) {
      r.files.push_back({*args.output, text});
    } else {
      r.stdout_text = text;
    }
    return r;
  });
}

struct CheckArgs {
  std::string input;
  std::optional<int> modes;
  std::optional<int> photons;
  std::optional<double> tol;
};

inline CommandResult run_check(const CheckArgs& args) {
  return detail::guarded([&] {
    const auto start = detail::Clock::now();
    const double tol = args.tol ? *args.tol : default_tolerance();
    const io::MatrixFile file = io::read_matrix(args.input);
    const auto [m, n] = detail::resolve_shape(file, args.modes, args.photons);
    SynthOptions opts;
    opts.feasibility_tol = tol;
    const Decision d = check_realizable(file.data, m, n, opts);

    io::Json a;
    a["input"] = args.input;
    a["modes"] = m;
    a["photons"] = n;
    a["tol"] = tol;
    io::Json r = detail::report_header("check", std::move(a));
    r["verdict"] = to_string(d.verdict);
    r["residual"] = d.residual;
    r["threshold"] = d.threshold;
    r["coefficients"] = io::real_matrix_to_json(d.x);
    if (d.witness) {
      const AlgebraBasis basis = build_basis(m);
      const bool adjoint = d.witness_source == WitnessSource::kAdjointSystem;
      r["witness"] = detail::witness_to_json(*d.witness, FockBasis(m, n), adjoint ? &basis : nullptr,
                                             detail::source_name(d.witness_source));
    }
    detail::report_footer(r, start);

    CommandResult out;
    out.exit_code = d.feasible() ? kExitOk : kExitInfeasible;
    out.report = r;
    out.stdout_text = io::dump(r);
    return out;
  });
}

struct InvertArgs {
  std::string input;
  std::optional<int> modes;
  std::optional<int> photons;
  std::optional<double> tol;
  bool decompose = false;
  std::optional<std::string> output_s;
  std::optional<std::string> output_elements;
};

inline CommandResult run_invert(const InvertArgs& args) {
  return detail::guarded([&] {
    const auto start = detail::Clock::now();
    const double tol = args.tol ? *args.tol : default_tolerance();
    const io::MatrixFile file = io::read_matrix(args.input);
    const auto [m, n] = detail::resolve_shape(file, args.modes, args.photons);
    SynthOptions opts;
    opts.feasibility_tol = tol;
    const Decision d = reconstruct_S(file.data, m, n, opts);

    io::Json a;
    a["input"] = args.input;
    a["modes"] = m;
    a["photons"] = n;
    a["tol"] = tol;
    a["decompose"] = args.decompose;
    io::Json r = detail::report_header("invert", std::move(a));
    r["verdict"] = to_string(d.verdict);
    r["residual"] = d.residual;
    r["threshold"] = d.threshold;
    if (d.verification_residual) r["verification_residual"] = *d.verification_residual;
    CommandResult out;
    if (d.feasible()) {
      r["pivot"] = io::Json::array({d.pivot_row, d.pivot_col});
      r["phase_convention"] = d.phase_convention;
      r["global_phase"] = *d.global_phase;
      const io::Json s_json = io::matrix_to_json(*d.scattering);
      r["S"] = s_json;
      if (args.output_s) out.files.push_back({*args.output_s, io::dump(s_json)});
      if (args.decompose) {
        const auto elements = reck_decompose(*d.scattering, opts.unitary_tol);
        const io::Json e_json = io::elements_to_json(elements, m);
        r["elements"] = e_json;
        r["decomposition_residual"] =
            (elements_to_matrix(elements, m) - *d.scattering).norm();
        if (args.output_elements) out.files.push_back({*args.output_elements, io::dump(e_json)});
      }
    } else if (d.witness) {
      const AlgebraBasis basis = build_basis(m);
      const bool adjoint = d.witness_source == WitnessSource::kAdjointSystem;
      r["witness"] = detail::witness_to_json(*d.witness, FockBasis(m, n), adjoint ? &basis : nullptr,
                                             detail::source_name(d.witness_source));
    }
    detail::report_footer(r, start);
    out.exit_code = d.feasible() ? kExitOk : kExitInfeasible;
    out.report = r;
    out.stdout_text = io::dump(r);
    return out;
  });
}

struct CheckHamiltonianArgs {
  std::string input;
  std::optional<int> modes;
  std::optional<int> photons;
  std::optional<double> tol;
  bool exponentiate = false;  // also report S = exp(iH_S)
  std::optional<std::string> output_hs;
  std::optional<std::string> output_s;
};

inline CommandResult run_check_hamiltonian(const CheckHamiltonianArgs& args) {
  return detail::guarded([&] {
    const auto start = detail::Clock::now();
    const double tol = args.tol ? *args.tol : default_tolerance();
    const io::MatrixFile file = io::read_matrix(args.input);
    const auto [m, n] = detail::resolve_shape(file, args.modes, args.photons);
    SynthOptions opts;
    opts.feasibility_tol = tol;
    const HamiltonianCheck h = check_hamiltonian(file.data, m, n, opts);

    io::Json a;
    a["input"] = args.input;
    a["modes"] = m;
    a["photons"] = n;
    a["tol"] = tol;
    a["exp"] = args.exponentiate || args.output_s.has_value();
    io::Json r = detail::report_header("check-h", std::move(a));
    r["verdict"] = h.feasible ? "feasible" : "infeasible";
    r["residual"] = h.residual;
    r["threshold"] = h.threshold;
    io::Json coeffs = io::Json::array();
    for (Eigen::Index i = 0; i < h.coefficients.size(); ++i) coeffs.push_back(h.coefficients(i));
    r["coefficients"] = std::move(coeffs);
    CommandResult out;
    if (h.feasible) {
      const io::Json hs_json = io::matrix_to_json(*h.hamiltonian_s);
      r["iH_S"] = hs_json;
      if (args.output_hs) out.files.push_back({*args.output_hs, io::dump(hs_json)});
      if (args.exponentiate || args.output_s) {
        const io::Json s_json = io::matrix_to_json(matrix_exp(*h.hamiltonian_s));
        r["S"] = s_json;
        if (args.output_s) out.files.push_back({*args.output_s, io::dump(s_json)});
      }
    } else if (h.witness) {
      r["witness"] = detail::witness_to_json(*h.witness, FockBasis(m, n), nullptr, "span-residual");
    }
    detail::report_footer(r, start);
    out.exit_code = h.feasible ? kExitOk : kExitInfeasible;
    out.report = r;
    out.stdout_text = io::dump(r);
    return out;
  });
}

}  // namespace linopt::cli

#endif  // LINOPT_COMMANDS_HPP
