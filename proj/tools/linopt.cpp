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

// linopt: decide and synthesize linear-optical multiphoton evolutions.
//
//   linopt dim     --modes m --photons n
//   linopt lift    --input S.json --photons n [--method expand|permanent] [--output U.json]
//   linopt check   --input U.json --modes m --photons n [--tol eps]
//   linopt invert  --input U.json --modes m --photons n [--tol eps] [--decompose]
//                  [--output-s S.json] [--output-elements elements.json]
//   linopt check-h --input H.json --modes m --photons n [--tol eps] [--exp]
//                  [--output-hs HS.json] [--output-s S.json]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "linopt/commands.hpp"

namespace {

namespace fs = std::filesystem;
using linopt::cli::CommandResult;

// All-or-nothing: every file is staged next to its target, then renamed.
bool write_files(const std::vector<linopt::cli::OutputFile>& files) {
  std::vector<std::pair<fs::path, fs::path>> staged;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& [tmp, _] : staged) fs::remove(tmp, ec);
  };
  for (const auto& f : files) {
    fs::path target(f.path);
    fs::path tmp = target;
    tmp += ".partial";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (out) out << f.contents;
    if (!out) {
      std::cerr << "error: cannot write " << f.path << "\n";
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      cleanup();
      return false;
    }
    staged.emplace_back(tmp, target);
  }
  for (const auto& [tmp, target] : staged) {
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      std::cerr << "error: cannot write " << target << ": " << ec.message() << "\n";
      cleanup();
      return false;
    }
  }
  return true;
}

int finish(const CommandResult& r) {
  if (r.exit_code <= linopt::cli::kExitInfeasible && !write_files(r.files)) {
    return linopt::cli::kExitInternal;
  }
  std::cout << r.stdout_text;
  std::cerr << r.stderr_text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether an n-photon evolution is realizable with linear optics and synthesize it"};
  app.set_version_flag("--version", linopt::cli::kVersion);
  app.require_subcommand(1);

  int dim_modes = 0, dim_photons = 0;
  auto* dim = app.add_subcommand("dim", "Print the dimension of the n-photon, m-mode Fock space");
  dim->add_option("--modes", dim_modes, "Number of modes m")->required();
  dim->add_option("--photons", dim_photons, "Number of photons n")->required();

  linopt::cli::LiftArgs lift_args;
  std::string lift_method = "expand";
  std::string lift_output;
  auto* lift = app.add_subcommand("lift", "Lift an m x m scattering matrix to the n-photon evolution");
  lift->add_option("--input", lift_args.input, "Scattering matrix JSON file")->required();
  lift->add_option("--photons", lift_args.photons, "Number of photons n")->required();
  lift->add_option("--method", lift_method, "expand (default) or permanent")
      ->check(CLI::IsMember({"expand", "permanent"}));
  lift->add_option("--output", lift_output, "Output JSON file (standard output if omitted)");

  auto add_common = [](CLI::App* sub, std::string& input, std::optional<int>& modes,
                       std::optional<int>& photons, std::optional<double>& tol) {
    sub->add_option("--input", input, "Input matrix JSON file")->required();
    sub->add_option("--modes", modes, "Number of modes m (defaults to file metadata)");
    sub->add_option("--photons", photons, "Number of photons n (defaults to file metadata)");
    sub->add_option("--tol", tol, "Feasibility tolerance (default $PHOTONIC_TOL or 1e-7)")
        ->check(CLI::PositiveNumber);
  };

  linopt::cli::CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide whether an M x M unitary is realizable with linear optics");
  add_common(check, check_args.input, check_args.modes, check_args.photons, check_args.tol);

  linopt::cli::InvertArgs invert_args;
  std::string invert_s, invert_elements;
  auto* invert = app.add_subcommand("invert", "Recover the scattering matrix of a realizable unitary");
  add_common(invert, invert_args.input, invert_args.modes, invert_args.photons, invert_args.tol);
  invert->add_flag("--decompose", invert_args.decompose, "Also factor S into beam splitters and phase shifters");
  invert->add_option("--output-s", invert_s, "Write S to this JSON file");
  invert->add_option("--output-elements", invert_elements, "Write the element list to this JSON file");

  linopt::cli::CheckHamiltonianArgs ham_args;
  std::string ham_hs, ham_s;
  auto* ham = app.add_subcommand("check-h", "Decide whether an M x M antihermitian generator is a lifted one");
  ham->alias("check_h");
  add_common(ham, ham_args.input, ham_args.modes, ham_args.photons, ham_args.tol);
  ham->add_flag("--exp", ham_args.exponentiate, "Also report S = exp(iH_S)");
  ham->add_option("--output-hs", ham_hs, "Write iH_S to this JSON file");
  ham->add_option("--output-s", ham_s, "Write S = exp(iH_S) to this JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : linopt::cli::kExitInvalid;
  }

  if (dim->parsed()) return finish(linopt::cli::run_dim(dim_modes, dim_photons));
  if (lift->parsed()) {
    lift_args.method = lift_method == "permanent" ? linopt::cli::LiftMethod::kPermanent
                                                  : linopt::cli::LiftMethod::kExpand;
    if (!lift_output.empty()) lift_args.output = lift_output;
    return finish(linopt::cli::run_lift(lift_args));
  }
  if (check->parsed()) return finish(linopt::cli::run_check(check_args));
  if (invert->parsed()) {
    if (!invert_s.empty()) invert_args.output_s = invert_s;
    if (!invert_elements.empty()) invert_args.output_elements = invert_elements;
    if (!invert_elements.empty()) invert_args.decompose = true;
    return finish(linopt::cli::run_invert(invert_args));
  }
  if (ham->parsed()) {
    if (!ham_hs.empty()) ham_args.output_hs = ham_hs;
    if (!ham_s.empty()) ham_args.output_s = ham_s;
    return finish(linopt::cli::run_check_hamiltonian(ham_args));
  }
  return linopt::cli::kExitInvalid;
}
