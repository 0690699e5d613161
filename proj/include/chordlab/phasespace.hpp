#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "chordlab/grid.hpp"
#include "chordlab/hamiltonian.hpp"

namespace chordlab {

// Conventions used throughout:
//   T_xi psi(q) = exp[(i/hbar)(xi_p.q - xi_p.xi_q/2)] psi(q - xi_q)
//   chi(xi)     = <psi| T_{-xi} |psi> = int dq e^{-i xi_p.q/hbar} psi(q+xi_q/2) psi*(q-xi_q/2)
// so chi(0) = 1, chi(-xi) = chi(xi)^*, and chi(xi) = int dx W(x) e^{-i xi^x/hbar}.

enum class ChordAxis { xi_q1, xi_q2, xi_p1, xi_p2 };

std::string axis_name(ChordAxis axis);
bool is_position_axis(ChordAxis axis);

/// Axis-aligned plane in chord space: offset + u e_u + v e_v.
struct ChordPlane {
  ChordAxis u = ChordAxis::xi_p1;
  ChordAxis v = ChordAxis::xi_p2;
  Chord offset{{0.0, 0.0}, {0.0, 0.0}};

  /// The xi_q = 0 plane spanned by (xi_p1, xi_p2).
  static ChordPlane momentum();
  /// The xi_p = 0 plane spanned by (xi_q1, xi_q2).
  static ChordPlane position();

  Chord at(double cu, double cv) const;
  bool through_origin() const;
  std::string describe() const;
};

/// Nodes -h..h with count points, exactly antisymmetric (node i = -node n-1-i).
std::vector<double> symmetric_axis(double half_width, int count);

struct ChordSection {
  ChordPlane plane;
  std::vector<double> u, v;
  std::vector<cplx> values;  // values[i * v.size() + j] at (u[i], v[j])
  double hbar = 1.0;
  std::string source;

  std::size_t nu() const { return u.size(); }
  std::size_t nv() const { return v.size(); }
  const cplx& at(std::size_t i, std::size_t j) const { return values[i * v.size() + j]; }
  cplx& at(std::size_t i, std::size_t j) { return values[i * v.size() + j]; }
  double max_modulus() const;
  /// Largest |value(-xi) - conj(value(xi))| over mirrored node pairs; only
  /// meaningful for planes through the origin.
  double hermiticity_defect() const;
};

/// Section with the standard axes filled by an arbitrary evaluator.
ChordSection evaluate_section(const ChordPlane& plane, std::array<double, 2> half_widths,
                              std::array<int, 2> resolution, double hbar, std::string source,
                              const std::function<cplx(const Chord&)>& value);

WavefunctionGrid translate(const WavefunctionGrid& psi, const Chord& xi);

cplx chord_exact(const WavefunctionGrid& psi, const Chord& xi);

/// Dense exact section. Planes with fixed xi_q use one conjugate product and
/// a separable Fourier sum; the pure position plane uses the power spectrum.
ChordSection chord_section(const WavefunctionGrid& psi, const ChordPlane& plane,
                           std::array<double, 2> half_widths, std::array<int, 2> resolution);

/// (<c_xi>, -<s_xi>) with c = (T_xi + T_-xi)/2, s = (T_xi - T_-xi)/2i,
/// evaluated from translated copies; equals (Re chi, Im chi).
std::pair<double, double> cos_sin_expectations(const WavefunctionGrid& psi, const Chord& xi);

// ---- Wigner ---------------------------------------------------------------

/// W(q, .) at a grid node on the momentum lattice p_a = k * pi hbar / L_a,
/// k = -n_a/2 .. n_a/2 - 1 (zero momentum at index n_a/2).
struct WignerSlice {
  std::array<double, 2> q{};
  std::vector<double> p0, p1;
  std::vector<double> values;  // values[i * p1.size() + j]
};

WignerSlice wigner_slice(const WavefunctionGrid& psi, int i0, int i1);
/// Pointwise W(q, p) for any phase-space point.
double wigner_at(const WavefunctionGrid& psi, const PhasePoint& x);

struct WignerIntegrals {
  double total = 0.0;              // integral of W over phase space
  double max_marginal_error = 0.0;  // max_q |int W dp - |psi(q)|^2|
};
WignerIntegrals wigner_integrals(const WavefunctionGrid& psi);

/// (2 pi hbar)^D int W_a(x) W_b(x) dx from Wigner slices on every grid node.
double wigner_overlap(const WavefunctionGrid& a, const WavefunctionGrid& b);
/// (2 pi hbar)^D int W(x + xi) W(x) dx.
double wigner_autocorrelation(const WavefunctionGrid& psi, const Chord& xi);

// ---- Husimi, moments, covariance -----------------------------------------

/// |<X|psi>|^2 / (pi hbar)^D with minimum-uncertainty coherent states of
/// width sqrt(hbar) in every position coordinate.
double husimi(const WavefunctionGrid& psi, const PhasePoint& x);

/// Weyl-symmetrised expectation <M(q1^a q2^b p1^c p2^d)>, a+b+c+d <= 4.
double moment(const WavefunctionGrid& psi, std::array<int, 2> q_powers,
              std::array<int, 2> p_powers);

/// Phase-space ordering (p1, p2, q1, q2).
struct CovarianceMatrix {
  Eigen::Matrix4d K;
  Eigen::Vector4d mean;
};

CovarianceMatrix covariance(const WavefunctionGrid& psi);
/// Smallest eigenvalue of the Hermitian matrix K + (i hbar/2) J.
double uncertainty_margin(const CovarianceMatrix& c, double hbar);

/// Standard symplectic matrix for the (p, q) ordering: xi^eta = xi^T J eta.
Eigen::Matrix4d symplectic_matrix();
Eigen::Vector4d as_vector(const Chord& xi);
Eigen::Vector4d as_vector(const PhasePoint& x);

}  // namespace chordlab
