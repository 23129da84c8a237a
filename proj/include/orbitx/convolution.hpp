#pragma once

#include <string>

#include "orbitx/transforms.hpp"

namespace orbitx {

/// How a kernel is scaled before use. Sum-preserving kernels map constant
/// signals to themselves (DC preservation); difference kernels are used raw.
enum class KernelNorm { SumPreserving, None };

/// Convolution kernel: a discrete function supported near the origin grid
/// point, plus its normalization mode.
struct Kernel {
  DiscreteFunction fn;
  std::string name;
  KernelNorm mode = KernelNorm::SumPreserving;
};

/// Orbit convolution by its definition: (f*g)(u) = sum_x eps(x) sum_w
/// f(x) g(u - w(x)), with g extended to the whole lattice by (even-)affine
/// Weyl invariance. Differences land exactly on grid points (integer fold).
DiscreteFunction convolve_spatial(const DiscreteFunction& f, const DiscreteFunction& g);

/// Convolution-theorem form: coefficient-wise c |group| M^2 h_l F_l G_l,
/// evaluated back on the grid. Agrees with convolve_spatial to roundoff.
DiscreteFunction convolve_spectral(const DiscreteFunction& f, const DiscreteFunction& g);

/// Residual |Phi_l(x) conj(Phi_l(y)) - sum_w Phi_l(x - w(y))| of the
/// product identity underlying the convolution theorem.
double product_identity_residual(const LabelPoint& lambda, const GridPoint& x,
                                 const GridPoint& y);

/// Sum-preserving mode rescales so convolving the constant function returns
/// it unchanged; throws std::runtime_error when the weighted kernel sum
/// vanishes. Mode None returns the kernel as is.
Kernel normalize_kernel(const Kernel& k);

/// Kernels of the paper's spatial filters, supported on the origin grid
/// point and its two neighbors along w1-check/M and w2-check/M. Raw
/// weights (center, n1, n2): mean (1/3, 1/3, 1/3), sharpen (5, -1, 0),
/// edge (3, -1, 0), identity (1, 0, 0); mean/sharpen/identity are
/// normalized sum-preserving, edge is used raw.
Kernel builtin_kernel(const std::string& name, AlgebraId algebra, std::int64_t M,
                      GridKind kind = GridKind::C);

}  // namespace orbitx
