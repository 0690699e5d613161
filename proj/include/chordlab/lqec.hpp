#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "chordlab/grid.hpp"
#include "chordlab/hamiltonian.hpp"
#include "chordlab/phasespace.hpp"

namespace chordlab {

// ---- radial kernel -----------------------------------------------------------

/// Bessel function of the first kind J_n(s) for integer n >= 0. Power series
/// below s = 8, Miller's backward recurrence above; absolute error ~1e-15.
double bessel_j(int order, double s);

struct FKernelQuery {
  int dimension = 2;
  double s = 0.0;
};

/// Gamma(D/2) J_{D/2-1}(s) / (s/2)^{D/2-1}: the average of exp(i s n.e) over
/// unit vectors n in D dimensions. F(0) = 1; D=1 gives cos, D=2 gives J_0,
/// D=3 gives sin(s)/s. Supported for 1 <= D <= 6.
double f_kernel(const FKernelQuery& query);
inline double f_kernel(int dimension, double s) { return f_kernel(FKernelQuery{dimension, s}); }

// ---- shell sampling -------------------------------------------------------------

struct SamplerOptions {
  double target_acceptance = 0.4;
  double burn_in_fraction = 0.1;  // of the kept length, discarded
  int thinning = 1;               // sweeps per kept sample
};

/// Phase-space points distributed as exp[-(H(x) - E)^2 / 2 sigma^2], stored
/// column-wise (q[j][i] is coordinate j of point i).
struct ShellSample {
  int dimension = 0;
  std::vector<std::vector<double>> q, p;
  double energy = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  double acceptance_rate = 0.0;
  /// Integrated autocorrelation time (in kept samples) of the slowest
  /// position coordinate.
  double autocorrelation_estimate = 1.0;
  std::vector<double> proposal_scale;  // tuned random-walk step per position coordinate

  std::size_t size() const { return q.empty() ? 0 : q[0].size(); }
  PhasePoint point(std::size_t i) const;
  double effective_size() const { return size() / std::max(1.0, autocorrelation_estimate); }
};

/// Markov chain on the Gaussian-smeared energy shell. Positions move by a
/// per-coordinate random walk (step tuned towards the target acceptance
/// during burn-in); the momentum modulus is drawn from its conditional
/// distribution at the proposed position and its direction uniformly, so the
/// chain never has to creep across the thin shell. Deterministic in seed.
/// Throws ContractError for E below min V, sigma <= 0 or N < 1000, and
/// NumericalError when tuning cannot bring the acceptance into (0.02, 0.98).
ShellSample sample_shell(const HamiltonianSpec& spec, double energy, double sigma, std::size_t n,
                         std::uint64_t seed, const SamplerOptions& options = {});

struct ChordEstimate {
  cplx value;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  double standard_error() const { return std::hypot(stderr_re, stderr_im); }
};

/// (1/N) sum_j exp(-i xi^x_j / hbar) with batch-means standard errors.
ChordEstimate chord_mc(const ShellSample& sample, const Chord& xi, double hbar, int batches = 50);

// ---- Bessel-kernel quadrature ---------------------------------------------------

struct QuadratureOptions {
  double tolerance = 1e-4;  // on the change under node doubling, relative to chi(0) = 1
  int initial_nodes = 32;   // per axis
  int max_nodes = 1024;
};

/// Shell chord function of a two-dimensional H = sum p^2/2m + V(q):
///   chi(xi) = (1/Omega) int_{V<E} dq exp(-i xi_p.q/hbar) F_2(r_E(q) |xi_q'| / hbar)
/// with r_E = sqrt(E - V) and xi_q' the mass-scaled position chord. Node
/// sets over the allowed region (outer sine substitution for the square-root
/// ends, inner Gauss-Legendre between bisected boundary points) are built
/// lazily and shared between evaluations.
class ShellQuadrature {
 public:
  ShellQuadrature(const HamiltonianSpec& spec, double energy, double hbar,
                  QuadratureOptions options = {});
  ~ShellQuadrature();
  ShellQuadrature(ShellQuadrature&&) noexcept;
  ShellQuadrature& operator=(ShellQuadrature&&) noexcept;

  /// Throws NumericalError if refinement does not converge.
  cplx operator()(const Chord& xi) const;
  /// Value at a fixed node count, without the convergence check.
  cplx at_level(const Chord& xi, int nodes_per_axis) const;

  double area() const;
  /// Classical mean and covariance of the microcanonical shell distribution.
  CovarianceMatrix shell_covariance() const;
  double energy() const;
  double hbar() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

cplx chord_bessel(const HamiltonianSpec& spec, double energy, const Chord& xi, double hbar,
                  const QuadratureOptions& options = {});

// ---- local nodal geometry -------------------------------------------------------

/// Q(xi) = xi^T J^T K J xi = <(xi^x)^2> - (xi^<x>)^2 and its level 2 hbar^2,
/// the short-chord estimate of the first nodal surface of Re chi.
struct EllipsoidPredictor {
  Eigen::Matrix4d form;
  double level = 2.0;

  double operator()(const Chord& xi) const;
  /// t > 0 with Q(t d) = level for a direction d; nullopt when Q(d) = 0.
  std::optional<double> radius_along(const Chord& direction) const;
};

EllipsoidPredictor ellipsoid_predictor(const CovarianceMatrix& k, double hbar);

/// {xi : xi ^ <x> = 0}, the short-chord nodal surface of Im chi. Degenerate
/// (every chord) when the mean vanishes.
struct NodalPlane {
  Eigen::Vector4d normal = Eigen::Vector4d::Zero();  // xi^<x> = normal . (xi_p, xi_q)
  bool degenerate = true;

  double operator()(const Chord& xi) const;
  bool contains(const Chord& xi, double tolerance = 1e-12) const;
};

NodalPlane imag_nodal_plane(const Eigen::Vector4d& mean, double tolerance = 1e-9);

}  // namespace chordlab
