#pragma once

// Data-parallel inner loops shared by the eigensolver, the exact chord
// transforms and the semiclassical estimators. Every kernel has a scalar
// reference implementation; vector variants are chosen once at runtime and
// must agree with the reference (see tests/unit/test_simd.cpp).

#include <complex>
#include <cstddef>
#include <string_view>

namespace chordlab::simd {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

/// Up to four coordinate columns combined linearly into a phase:
/// theta_i = sum_c coef[c] * col[c][i].
struct PhaseColumns {
  static constexpr int kMax = 4;
  const double* col[kMax] = {nullptr, nullptr, nullptr, nullptr};
  double coef[kMax] = {0.0, 0.0, 0.0, 0.0};
  int count = 0;

  void add(const double* column, double coefficient) {
    col[count] = column;
    coef[count] = coefficient;
    ++count;
  }
};

struct KernelTable {
  Backend backend;
  // x[i] *= d[i]
  void (*scale_real)(double* x, const double* d, std::size_t n);
  // z[i] *= d[i] for complex z and real d
  void (*scale_complex)(cplx* z, const double* d, std::size_t n);
  // y[i] += d[i] * x[i]
  void (*axpy_diag)(double* y, const double* d, const double* x, std::size_t n);
  // out[i] = a*hx[i] + b*x[i] + c*prev[i]; out may alias prev
  void (*combine3)(double* out, const double* hx, const double* x, const double* prev, double a,
                   double b, double c, std::size_t n);
  // out[i] = a[i] * conj(b[i])
  void (*conj_product)(cplx* out, const cplx* a, const cplx* b, std::size_t n);
  // sum_i a[i] * b[i]  (no conjugation)
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  // sum_i w[i] * exp(i * theta_i); w == nullptr means unit weights.
  // Exact symmetries: negating all coefficients conjugates the result, and a
  // zero phase returns the plain weight sum.
  cplx (*phase_sum)(const PhaseColumns& cols, const double* w, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// Process-wide active table. Initialised from CPU detection, overridable by
/// the CHORDLAB_SIMD environment variable ("scalar" or "avx2").
const KernelTable& active();
/// Returns false if the backend is unavailable on this machine.
bool select(Backend backend);

std::string_view backend_name(Backend backend);

}  // namespace chordlab::simd
