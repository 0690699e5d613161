#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chordlab {

/// x = (p, q).
struct PhasePoint {
  std::vector<double> q;
  std::vector<double> p;

  std::size_t dimension() const { return q.size(); }
};

/// Phase-space translation xi = (xi_p, xi_q).
struct Chord {
  std::vector<double> xi_q;
  std::vector<double> xi_p;

  std::size_t dimension() const { return xi_q.size(); }
  Chord operator-() const;
  double norm() const;
};

/// Symplectic product xi ^ x = xi_p . q - xi_q . p.
double wedge(const Chord& xi, const PhasePoint& x);
/// Same product between two chords, xi ^ eta = xi_p . eta_q - xi_q . eta_p.
double wedge(const Chord& xi, const Chord& eta);

struct Box {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// One monomial c * prod_j q_j^e_j of a user-defined potential.
struct PolynomialTerm {
  double coefficient = 0.0;
  std::vector<int> exponents;
};

using PotentialFn = std::function<double(std::span<const double>)>;
using GradientFn = std::function<void(std::span<const double>, std::span<double>)>;

/// H(p, q) = sum_j p_j^2 / (2 m_j) + V(q). Immutable once built; all
/// evaluation functions are pure.
struct HamiltonianSpec {
  int dimension = 0;
  std::vector<double> masses;
  PotentialFn potential;
  GradientFn potential_gradient;  // empty: finite differences
  std::string label;
  /// Optional: box guaranteed to contain {V(q) < E}.
  std::function<Box(double)> allowed_extent;
  /// Linear size of the region of interest; sets the finite-difference step.
  double length_scale = 1.0;
  /// Recorded for manifests when the potential is polynomial.
  std::vector<PolynomialTerm> polynomial;
};

/// Nelson Hamiltonian: (p1^2 + p2^2)/2 + q1^2/2 + (q2 - q1^2/2)^2.
HamiltonianSpec nelson();
/// sum_j p_j^2/(2 m_j) + m_j omega_j^2 q_j^2 / 2.
HamiltonianSpec harmonic(std::vector<double> omegas, std::vector<double> masses);
/// User polynomial potential with explicit masses.
HamiltonianSpec polynomial_potential(std::vector<PolynomialTerm> terms, std::vector<double> masses,
                                     std::string label);
/// V = 0 inside the box and +infinity outside (billiard).
HamiltonianSpec box_billiard(Box box, std::vector<double> masses);

double eval_potential(const HamiltonianSpec& spec, std::span<const double> q);
double eval_h(const HamiltonianSpec& spec, const PhasePoint& x);
/// Returns (dH/dp_1..D, dH/dq_1..D).
std::vector<double> grad_h(const HamiltonianSpec& spec, const PhasePoint& x);

/// Per-coordinate factors s_j = sqrt(2 m_j) of the symplectic map
/// q' = s q, p' = p / s that brings the kinetic term to p'^2.
struct MassScaling {
  std::vector<double> s;

  PhasePoint forward(const PhasePoint& x) const;
  PhasePoint inverse(const PhasePoint& x) const;
  Chord forward(const Chord& xi) const;
  bool identity() const;
};

MassScaling mass_scaling(const HamiltonianSpec& spec);
/// Spec in the H = p^2 + V convention. eval_h of the result at
/// mass_scaling(spec).forward(x) equals eval_h(spec, x).
HamiltonianSpec mass_rescale(const HamiltonianSpec& spec);

/// Bounding box of the classically allowed region {V(q) < E}.
Box allowed_box(const HamiltonianSpec& spec, double energy);
/// min V over a sampled box, with the minimising point.
std::pair<double, std::vector<double>> potential_minimum(const HamiltonianSpec& spec,
                                                         const Box& box, int samples_per_axis);

}  // namespace chordlab
