#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chordlab/errors.hpp"
#include "chordlab/grid.hpp"
#include "chordlab/hamiltonian.hpp"

namespace chordlab {

/// Matrix-free pseudospectral Hamiltonian on a periodic GridSpec: kinetic
/// energy applied in Fourier space, potential as a diagonal. The operator is
/// real symmetric.
class GridHamiltonian {
 public:
  GridHamiltonian(const HamiltonianSpec& spec, const GridSpec& grid);
  ~GridHamiltonian();
  GridHamiltonian(GridHamiltonian&&) noexcept;
  GridHamiltonian& operator=(GridHamiltonian&&) noexcept;

  const GridSpec& grid() const { return grid_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return grid_.size(); }
  const std::vector<double>& potential() const { return potential_; }

  /// y = H x for real vectors. Not thread-safe (shares an FFT workspace).
  void apply(std::span<const double> x, std::span<double> y) const;
  /// y = H x for complex vectors.
  void apply(std::span<const cplx> x, std::span<cplx> y) const;

  /// Guaranteed bounds on the spectrum: max kinetic + max potential above,
  /// min potential below.
  double upper_bound() const { return upper_bound_; }
  double lower_bound() const { return lower_bound_; }

 private:
  GridSpec grid_;
  std::string label_;
  std::vector<double> potential_;
  std::vector<double> kinetic_;  // r2c layout, already divided by N
  double upper_bound_ = 0.0;
  double lower_bound_ = 0.0;
  struct Workspace;
  std::unique_ptr<Workspace> work_;
};

/// Builds the operator. With a target energy the grid is checked first: the
/// classically allowed region must sit well inside the box (tunnelling
/// distance to the boundary) and the grid must resolve the largest local
/// momentum. Violations throw ContractError with a diagnostic.
GridHamiltonian discretize(const HamiltonianSpec& spec, const GridSpec& grid,
                           std::optional<double> target_energy = std::nullopt);

/// Smallest WKB tunnelling exponent, integral of sqrt(2 m (V-E))/hbar, from
/// {V < E} to the grid boundary. +inf when the allowed region is empty.
double boundary_tunnelling_exponent(const HamiltonianSpec& spec, const GridSpec& grid,
                                    double energy);

/// Box that holds every state up to target_energy to the confinement
/// tolerance: the set of points within the given tunnelling exponent of the
/// allowed region, padded to the grid cells.
Box confining_box(const HamiltonianSpec& spec, double target_energy, double hbar,
                  double tunnelling_margin = 18.0);

/// Point count per axis (power of two) that resolves momenta up to
/// sqrt(2 m (E - Vmin)) with the given safety factor.
std::array<int, 2> resolving_counts(const HamiltonianSpec& spec, const Box& box, double energy,
                                    double hbar, double factor = 2.0);

struct Eigenpair {
  double energy = 0.0;
  WavefunctionGrid state;
  double residual = 0.0;
};

struct IndexRange {
  int first = 0;
  int last = 0;  // inclusive
};

struct EnergyWindow {
  double lower = 0.0;
  double upper = 0.0;
};

struct SolveOptions {
  double tolerance = 1e-10;  // on ||H psi - E psi|| / ||psi||
  int max_iterations = 300;
  int guard = 0;             // extra block vectors, 0 = automatic
  int filter_degree = 0;     // Chebyshev degree, 0 = automatic
  std::uint64_t seed = 20240917;
  double degeneracy_tolerance = 1e-9;
  double confinement_tolerance = 1e-6;
  /// Approximate eigenstates (any grid over the same box, at most as fine)
  /// used as the leading starting vectors.
  std::span<const Eigenpair> warm_start;
};

/// Raised when the iteration cap is reached; carries the best residuals.
class SolverError : public NumericalError {
 public:
  SolverError(const std::string& message, std::vector<double> residuals)
      : NumericalError(message), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Lowest eigenpairs by Chebyshev-filtered subspace iteration. Results are
/// sorted ascending, normalised on the grid, real with the largest entry
/// positive; near-degenerate clusters are rotated to diagonalise q1^2 and
/// ordered by <q1^2>.
std::vector<Eigenpair> solve(const GridHamiltonian& op, int k, std::variant<IndexRange, EnergyWindow> which,
                             const SolveOptions& options = {});

/// Energy at which the phase-space volume {H < E} holds index + 1/2 states.
double weyl_energy(const HamiltonianSpec& spec, int index, double hbar);

/// Index range solve through a ladder of grids: counts are halved while the
/// coarser grid still resolves the momenta at the Weyl energy of `last`, the
/// coarsest level is solved from random vectors and every finer level starts
/// from the interpolated states of the level below.
std::vector<Eigenpair> solve_refined(const HamiltonianSpec& spec, const GridSpec& grid, int first,
                                     int last, const SolveOptions& options = {});

/// Convenience: solve(op, last-first+1, IndexRange{first,last}).
std::vector<Eigenpair> solve_range(const GridHamiltonian& op, int first, int last,
                                   const SolveOptions& options = {});

// ---- binary cache ------------------------------------------------------------

enum class ArtifactKind : std::uint32_t { eigenstate = 1, chord_section = 2, real_field = 3 };

/// Metadata shared by every binary artifact.
struct ArtifactHeader {
  ArtifactKind kind = ArtifactKind::eigenstate;
  std::uint32_t dimension = 2;
  std::uint32_t n0 = 0, n1 = 0;
  double lower0 = 0.0, lower1 = 0.0, upper0 = 0.0, upper1 = 0.0;
  double hbar = 1.0;
  double energy = 0.0;
  double residual = 0.0;
  std::int64_t index = -1;
  std::string label;
};

inline constexpr std::uint32_t kCacheFormatVersion = 1;

void write_artifact(const std::filesystem::path& path, const ArtifactHeader& header,
                    std::span<const cplx> payload);
/// Throws MissingArtifactError if absent, FormatError on bad magic, version,
/// size or checksum.
std::pair<ArtifactHeader, std::vector<cplx>> read_artifact(const std::filesystem::path& path);

/// Dirichlet eigenstates sin(n1 pi x1 / L1) sin(n2 pi x2 / L2) of the box
/// billiard, sampled on `grid` (which must contain the box) and zero outside.
/// Ordered by energy, ties by (n1, n2); residuals are 0.
std::vector<Eigenpair> billiard_states(const Box& box, const std::vector<double>& masses,
                                       const GridSpec& grid, int first, int last);

/// What the caller expects to find; unset fields are not checked.
struct CacheExpectation {
  std::optional<double> hbar;
  std::optional<int> index;
  std::optional<std::string> label;
  std::optional<GridSpec> grid;
};

void cache_store(const Eigenpair& pair, const std::filesystem::path& path);
/// Loads and checks metadata; mismatches throw FormatError naming the field.
Eigenpair cache_load(const std::filesystem::path& path, const CacheExpectation& expect = {});

}  // namespace chordlab
