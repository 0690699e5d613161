#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chordlab/analysis.hpp"
#include "chordlab/eigensolver.hpp"
#include "chordlab/hamiltonian.hpp"
#include "chordlab/lqec.hpp"
#include "chordlab/phasespace.hpp"

namespace chordlab {

struct SectionConfig {
  std::string name = "momentum";
  ChordPlane plane = ChordPlane::momentum();
  std::array<double, 2> half_width{3.0, 3.0};
  std::array<int, 2> resolution{128, 128};
  bool mc = false;
  bool bessel = true;
};

struct RunConfig {
  // hamiltonian
  std::string kind = "nelson";  // nelson | harmonic | box | polynomial
  std::vector<double> masses{1.0, 1.0};
  std::vector<double> omegas{1.0, 1.0};
  Box box{{0.0, 0.0}, {1.0, 1.0}};
  std::vector<PolynomialTerm> terms;
  double hbar = 1.0;

  // grid; an empty box selects the confining box at the highest requested level
  std::array<int, 2> grid_n{256, 256};
  std::optional<std::array<double, 2>> grid_lower, grid_upper;
  double tunnelling_margin = 18.0;
  SolveOptions solver;

  std::vector<int> states;
  std::vector<SectionConfig> sections;

  // lqec
  double sigma_fraction = 0.0025;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double quadrature_tolerance = 1e-4;
  int quadrature_max_nodes = 1024;
  bool export_sample = false;

  // analysis
  std::array<double, 2> axis{1.0, 0.0};
  double pattern_radius = 0.0;  // 0: planck_radius(hbar)
  std::vector<std::array<int, 2>> pairs;
  double delta = 0.0;           // 0: sqrt(hbar)
  std::vector<std::vector<double>> anchors;
  double correlation_max = 1.5;
  int correlation_points = 151;
  int correlation_angles = 16;
  int overlap_resolution = 48;

  std::filesystem::path output_dir = "out";
  std::filesystem::path cache_dir;  // empty: <output_dir>/cache
  std::string hash = "none";        // content hash of the config text and overrides

  HamiltonianSpec hamiltonian() const;
  std::filesystem::path cache() const { return cache_dir.empty() ? output_dir / "cache" : cache_dir; }
};

/// Parses and validates YAML text; ContractError on any problem.
RunConfig parse_config(const std::string& yaml_text);
RunConfig load_config(const std::filesystem::path& path);

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_dir;
};
/// Applies overrides and folds them into the config hash.
void apply_overrides(RunConfig& config, const Overrides& overrides);

/// Grid used for every state of the run.
GridSpec run_grid(const RunConfig& config);
std::filesystem::path state_path(const RunConfig& config, int index);
/// Loads a cached state, or throws MissingArtifactError naming the solve step.
Eigenpair load_state(const RunConfig& config, int index);

// Subcommands. Each writes into config.output_dir and returns the files it wrote.
std::vector<std::filesystem::path> cmd_solve(const RunConfig& config);
std::vector<std::filesystem::path> cmd_chord(const RunConfig& config,
                                             std::optional<int> only_state = std::nullopt);
std::vector<std::filesystem::path> cmd_spots(const RunConfig& config);
std::vector<std::filesystem::path> cmd_corr(const RunConfig& config);
std::vector<std::filesystem::path> cmd_compare(const RunConfig& config);
std::vector<std::filesystem::path> cmd_all(const RunConfig& config);

BlindSpotSet read_spots_csv(const std::filesystem::path& path);

/// Smallest quadrature level at which the chords agree with the next level
/// to the tolerance; used to evaluate whole sections on one smooth rule.
int settled_level(const ShellQuadrature& quad, const std::vector<Chord>& probes,
                  double tolerance, int initial, int max_nodes);

}  // namespace chordlab
