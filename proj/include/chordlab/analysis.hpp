#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordlab/hamiltonian.hpp"
#include "chordlab/phasespace.hpp"

namespace chordlab {

// ---- nodal lines ------------------------------------------------------------

enum class ChordPart { real, imaginary };

std::string part_name(ChordPart part);

/// Point in section coordinates (u, v).
using SectionPoint = std::array<double, 2>;

struct Polyline {
  std::vector<SectionPoint> points;
  bool closed = false;
};

struct NodalLineSet {
  ChordPart part = ChordPart::real;
  std::vector<Polyline> polylines;
  std::string source;
  /// The part vanishes on the whole section (e.g. Im chi of a symmetric
  /// state); no lines are reported.
  bool degenerate = false;
};

/// Marching-squares zero contours with linear edge interpolation. Saddle
/// cells are split according to the sign of the cell-centre average.
/// Requires at least 64 nodes per axis and uniform axes.
NodalLineSet nodal_lines(const ChordSection& section, ChordPart part);

/// Bilinear interpolation of the section at (u, v); throws outside the axes.
cplx interpolate(const ChordSection& section, const SectionPoint& at);

// ---- blind spots ------------------------------------------------------------

struct BlindSpot {
  SectionPoint position{};
  Chord chord;
  /// max(|Re chi|, |Im chi|) / max modulus at the refined point.
  double residual = 0.0;
  /// Distance to the nearest section node, in section coordinates.
  double node_distance = 0.0;
};

struct BlindSpotSet {
  std::vector<BlindSpot> spots;
  std::string source;
};

/// Re-evaluates the chord function at trial points during refinement.
using ChordEvaluator = std::function<cplx(const Chord&)>;

struct SpotOptions {
  int max_newton_steps = 50;
  double residual_tolerance = 1e-8;  // relative to the section max modulus
};

/// Crossings of real and imaginary nodal lines refined by 2D Newton on
/// (Re, Im): on the bilinear interpolant, or on `evaluator` when given.
/// Candidates that do not converge or leave the section are dropped.
/// Requires a non-degenerate imaginary set from the same section.
BlindSpotSet blind_spots(const NodalLineSet& real_lines, const NodalLineSet& imag_lines,
                         const ChordSection& section, const ChordEvaluator& evaluator = {},
                         const SpotOptions& options = {});

/// Smallest |position| among spots within `tolerance_deg` of the line
/// through the origin along `direction` (either sense); nullopt if none.
std::optional<double> first_spot_on_axis(const BlindSpotSet& spots, SectionPoint direction,
                                         double tolerance_deg = 3.0);

/// sqrt(2 pi hbar), the radius used for pattern comparisons near the origin.
double planck_radius(double hbar);

/// Symmetric Hausdorff distance between the spots with |position| <= radius,
/// divided by radius. Both empty gives 0, exactly one empty gives 1.
double pattern_distance(const BlindSpotSet& a, const BlindSpotSet& b, double radius);

// ---- wave-function correlations ----------------------------------------------

struct CorrelationCurve {
  std::vector<double> anchor;               // Q
  double delta = 0.0;                       // window width; 0 for the kernel form
  std::vector<std::vector<double>> xi_q;    // position chords
  std::vector<double> distance;             // |xi_q|
  std::vector<cplx> values;                 // C(xi_q), C(0) = 1

  /// First sign change of Re C along the list, linearly interpolated in
  /// distance; assumes the chords are ordered by distance.
  std::optional<double> first_zero() const;
};

/// Chords t * direction for each t in radii.
std::vector<std::vector<double>> radial_chords(const std::vector<double>& direction,
                                               const std::vector<double>& radii);

/// (1/N) int dq w(q - Q) psi(q + xi/2) psi*(q - xi/2) with the normalised
/// Gaussian window w of width delta and N fixing C(0) = 1. Throws when the
/// window (4 delta) or a shifted copy reaches outside the grid box.
CorrelationCurve correlation_exact(const WavefunctionGrid& psi, const std::vector<double>& anchor,
                                   double delta, const std::vector<std::vector<double>>& xi_q);

/// Re C averaged over `angles` equally spaced directions at each radius.
CorrelationCurve correlation_exact_averaged(const WavefunctionGrid& psi,
                                            const std::vector<double>& anchor, double delta,
                                            const std::vector<double>& radii, int angles = 16);

/// F_D(r_E(Q) |xi_q'| / hbar) with the mass-scaled chord xi_q'. Throws
/// ContractError where V(Q) >= E.
CorrelationCurve correlation_lqec(const HamiltonianSpec& spec, double energy,
                                  const std::vector<double>& anchor,
                                  const std::vector<std::vector<double>>& xi_q, double hbar);

// ---- overlap decomposition ------------------------------------------------------

struct OverlapOptions {
  double radius = 0.0;   // 0 selects planck_radius(hbar)
  int resolution = 48;   // nodes per chord axis across the ball diameter
};

struct OverlapDecomposition {
  double radius = 0.0;
  cplx inner;   // (2 pi hbar)^-D int_{|xi| <= radius} chi_a chi_b^* dxi
  cplx total;   // the same over all chords
  cplx outer;   // total - inner
};

/// Chord-space overlap of two states split at a ball around the origin.
/// The total uses the doubled-step chord lattice of the grid; the inner
/// part sums fixed-xi_q momentum sections over the ball.
OverlapDecomposition overlap_decomposition(const WavefunctionGrid& a, const WavefunctionGrid& b,
                                           const OverlapOptions& options = {});

}  // namespace chordlab
