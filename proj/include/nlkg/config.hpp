// Run configuration: flat key = value text with [sections], one file per
// run; CLI flags override file values. Parsing is strict (unknown keys and
// malformed values are errors carrying the line and field) so a config
// attached to a bug report reproduces the run exactly.

#pragma once

#include "nlkg/evolution.hpp"
#include "nlkg/grid.hpp"
#include "nlkg/scattering.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nlkg {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProfileSpec {
  enum class Kind { Gaussian, Mode, Hermite, RandomDraw, File };
  Kind kind = Kind::Gaussian;
  double amplitude = 0.1;

  // gaussian: packet center (box coordinates; default mid-box), width,
  // velocity-like phase modulation exp(i v.x)
  std::optional<std::array<double, 3>> center;
  double width = 2.0;
  std::array<double, 3> velocity{0.0, 0.0, 0.0};

  // mode / hermite index
  std::array<int, 3> index{1, 0, 0};

  // random draw
  std::uint64_t seed = 1;
  double corr_length = 2.0;

  // file
  std::string path;
};

enum class Scenario { Evolve, Scatter, Kernel, Basis, Born, Verify };

struct RunConfig {
  // [grid]
  int dim = 1;
  int n = 512;
  double box_length = 64.0;
  double mass = 1.0;
  double coupling = 0.1;

  // [integrator]
  IntegratorParams integrator{};

  // [matching]
  double T = 20.0;
  bool cauchy_check = false;

  // [run]
  Scenario scenario = Scenario::Verify;
  std::string out_dir = "out";
  std::uint64_t seed = 20260811;
  int threads = 1;

  // [profile] / [profile2]
  ProfileSpec profile;
  ProfileSpec profile2;

  // [evolve]
  double t_final = 10.0;
  int snapshot_stride = 0;  // 0 = no snapshots

  // [scatter]
  double t_intertwine = 1.0;
  std::vector<double> lambda_sweep{0.025, 0.05, 0.1, 0.2};

  // [kernel]
  double t1 = 0.0, s1 = 0.0, t2 = 0.0, s2 = 0.0;
  std::string smear_path;

  // [born]
  std::vector<double> eps_list{0.05, 0.1, 0.2, 0.4};

  Grid grid() const { return make_grid(dim, n, box_length, mass, coupling); }
  MatchingParams matching() const { return {T, integrator, cauchy_check}; }
};

/// Parse and validate a config file; throws config_error with line/field
/// diagnostics.
RunConfig parse_config_file(const std::filesystem::path& path);

/// Parse the text form directly (used by tests and the file parser).
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");

/// Inline profile spec syntax for CLI arguments:
///   "gaussian:amplitude=0.1,width=2,velocity=0.5"
///   "mode:index=3,amplitude=0.05"
///   "hermite:index=2 1 0,amplitude=0.1"
///   "random:seed=7,amplitude=0.1,corr_length=2"
///   or a snapshot path.
ProfileSpec parse_profile_spec(const std::string& text);

std::string scenario_name(Scenario s);

}  // namespace nlkg
