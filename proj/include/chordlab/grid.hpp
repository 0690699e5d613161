#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace chordlab {

using cplx = std::complex<double>;

/// Uniform periodic position grid. Node j on axis a sits at
/// lower[a] + j * (upper[a] - lower[a]) / n[a]; upper itself is the periodic
/// image of lower.
struct GridSpec {
  std::array<double, 2> lower{0.0, 0.0};
  std::array<double, 2> upper{1.0, 1.0};
  std::array<int, 2> n{64, 64};
  double hbar = 1.0;

  double length(int axis) const { return upper[axis] - lower[axis]; }
  double spacing(int axis) const { return length(axis) / n[axis]; }
  double cell_area() const { return spacing(0) * spacing(1); }
  std::size_t size() const { return static_cast<std::size_t>(n[0]) * n[1]; }
  double coordinate(int axis, int j) const { return lower[axis] + j * spacing(axis); }
  /// Angular wavenumber of FFT bin j (standard FFT ordering).
  double wavenumber(int axis, int j) const;
  std::vector<double> axis_nodes(int axis) const;

  /// Throws ContractError on an unusable grid (odd counts, empty box, hbar <= 0).
  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

struct WavefunctionGrid {
  GridSpec grid;
  std::vector<cplx> values;  // row-major, values[i0 * n1 + i1]
  double energy = 0.0;
  int index = -1;
  std::string hamiltonian_label;

  cplx& at(int i0, int i1) { return values[static_cast<std::size_t>(i0) * grid.n[1] + i1]; }
  const cplx& at(int i0, int i1) const {
    return values[static_cast<std::size_t>(i0) * grid.n[1] + i1];
  }
  /// sum |psi|^2 dA
  double norm2() const;
  void normalize();
  /// max |psi| over the outermost rows and columns relative to max |psi|.
  double boundary_ratio() const;
};

/// <a|b> = sum conj(a) b dA on a shared grid.
cplx inner_product(const WavefunctionGrid& a, const WavefunctionGrid& b);

/// In-place complex 2D FFT on row-major n0 x n1 data. forward is the
/// unnormalised e^{-i k x} sum, backward includes the 1/N factor.
class Fft2 {
 public:
  Fft2(int n0, int n1);
  ~Fft2();
  Fft2(const Fft2&) = delete;
  Fft2& operator=(const Fft2&) = delete;

  void forward(std::span<cplx> data) const;
  void backward(std::span<cplx> data) const;
  int n0() const { return n0_; }
  int n1() const { return n1_; }

 private:
  int n0_, n1_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Batched 1D complex FFTs of length n along contiguous rows.
class Fft1 {
 public:
  explicit Fft1(int n);
  ~Fft1();
  Fft1(const Fft1&) = delete;
  Fft1& operator=(const Fft1&) = delete;

  void forward(cplx* data) const;
  void backward(cplx* data) const;  // includes 1/n
  int size() const { return n_; }

 private:
  int n_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Real-to-complex 2D transform pair with an internal work buffer; the
/// spectrum has n0 x (n1/2 + 1) entries.
class RealFft2 {
 public:
  RealFft2(int n0, int n1);
  ~RealFft2();
  RealFft2(const RealFft2&) = delete;
  RealFft2& operator=(const RealFft2&) = delete;

  std::size_t spectrum_size() const { return static_cast<std::size_t>(n0_) * (n1_ / 2 + 1); }
  /// Copies x in, leaves its spectrum in spectrum().
  void forward(const double* x);
  /// Inverse of the current spectrum() into y (unnormalised).
  void backward(double* y);
  cplx* spectrum() { return spectrum_.data(); }

 private:
  int n0_, n1_;
  std::vector<double> real_;
  std::vector<cplx> spectrum_;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

/// Band-limited shift: returns f(q + shift) sampled on the same nodes. The
/// Nyquist bin is treated as a cosine so real data stays real.
std::vector<cplx> fourier_shift(std::span<const cplx> values, const GridSpec& grid,
                                std::array<double, 2> shift);

/// Band-limited resampling between two grids over the same box. Refining
/// zero-pads the spectrum (Nyquist split evenly); coarsening truncates it.
std::vector<cplx> fourier_resample(std::span<const cplx> values, const GridSpec& from,
                                   const GridSpec& to);

}  // namespace chordlab
