#include "orbitx/convolution.hpp"

#include <cmath>
#include <stdexcept>

#include "orbitx/parallel.hpp"

namespace orbitx {

namespace {

void check_pair(const DiscreteFunction& f, const DiscreteFunction& g) {
  if (f.algebra != g.algebra || f.M != g.M || f.kind != g.kind)
    throw std::invalid_argument("convolve: operands live on different grids");
}

}  // namespace

DiscreteFunction convolve_spatial(const DiscreteFunction& f, const DiscreteFunction& g) {
  check_pair(f, g);
  const auto plan = Plan::get(f.algebra, f.M, f.kind);
  plan->check(f);
  plan->check(g);
  const std::size_t n = plan->size();
  const std::size_t nw = plan->group_size();

  DiscreteFunction out{f.algebra, f.M, f.kind, std::vector<Complex>(n)};
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t ui = begin; ui < end; ++ui) {
      const Vec2l u = plan->point_num(ui);
      Complex acc = 0.0;
      for (std::size_t xi = 0; xi < n; ++xi) {
        const Vec2l x = plan->point_num(xi);
        Complex shifts = 0.0;
        for (std::size_t w = 0; w < nw; ++w) {
          const Vec2l wx = plan->apply_point(w, x);
          shifts += g.values[plan->fold_index({u[0] - wx[0], u[1] - wx[1]})];
        }
        acc += plan->eps()[xi] * f.values[xi] * shifts;
      }
      out.values[ui] = acc;
    }
  });
  return out;
}

DiscreteFunction convolve_spectral(const DiscreteFunction& f, const DiscreteFunction& g) {
  check_pair(f, g);
  const auto plan = Plan::get(f.algebra, f.M, f.kind);
  Spectrum fs = plan->forward(f);
  const Spectrum gs = plan->forward(g);
  for (std::size_t i = 0; i < fs.coeffs.size(); ++i)
    fs.coeffs[i] *= plan->norm_constant(i) * gs.coeffs[i];
  return plan->inverse_on_grid(fs);
}

double product_identity_residual(const LabelPoint& lambda, const GridPoint& x,
                                 const GridPoint& y) {
  if (lambda.algebra != x.algebra || x.algebra != y.algebra || lambda.M != x.M || x.M != y.M)
    throw std::invalid_argument("product_identity_residual: mixed grids");
  const auto plan = Plan::get(lambda.algebra, lambda.M, GridKind::C);
  // locate the label's row
  std::size_t li = plan->size();
  for (std::size_t i = 0; i < plan->size(); ++i) {
    if (plan->labels()[i].base.t == lambda.t) { li = i; break; }
  }
  if (li == plan->size()) throw std::invalid_argument("label not in Lambda_M");

  const Vec2l xs = x.coords_num();
  const Vec2l ys = y.coords_num();
  const Complex lhs = plan->basis_at(li, xs) * std::conj(plan->basis_at(li, ys));
  Complex rhs = 0.0;
  for (std::size_t w = 0; w < plan->group_size(); ++w) {
    const Vec2l wy = plan->apply_point(w, ys);
    rhs += plan->basis_at(li, Vec2l{xs[0] - wy[0], xs[1] - wy[1]});
  }
  return std::abs(lhs - rhs);
}

Kernel normalize_kernel(const Kernel& k) {
  if (k.mode == KernelNorm::None) return k;
  const auto plan = Plan::get(k.fn.algebra, k.fn.M, k.fn.kind);
  plan->check(k.fn);
  Complex weighted = 0.0;
  double mass = 0.0;
  for (std::size_t j = 0; j < plan->size(); ++j) {
    weighted += plan->eps()[j] * k.fn.values[j];
    mass += plan->eps()[j] * std::abs(k.fn.values[j]);
  }
  if (std::abs(weighted) <= 1e-12 * std::max(mass, 1e-300))
    throw std::runtime_error("normalize_kernel: weighted kernel sum is zero");
  // (1 * g)(u) == |group| * sum_x eps(x) g(x) for constant input, so this
  // scale makes the kernel DC-preserving.
  const Complex scale = 1.0 / (static_cast<double>(plan->group_size()) * weighted);
  Kernel out = k;
  for (auto& v : out.fn.values) v *= scale;
  return out;
}

Kernel builtin_kernel(const std::string& name, AlgebraId algebra, std::int64_t M,
                      GridKind kind) {
  const AlgebraData& d = algebra_data(algebra);
  const std::int64_t need = std::max<std::int64_t>(2, std::max(d.marks[0], d.marks[1]));
  if (M < need)
    throw std::invalid_argument("builtin_kernel: M too small for the origin neighbors");

  double center = 0.0, n1 = 0.0, n2 = 0.0;
  KernelNorm mode = KernelNorm::SumPreserving;
  if (name == "mean") {
    center = n1 = n2 = 1.0 / 3.0;
  } else if (name == "sharpen") {
    center = 5.0; n1 = -1.0;
  } else if (name == "edge") {
    center = 3.0; n1 = -1.0;
    mode = KernelNorm::None;
  } else if (name == "identity") {
    center = 1.0;
  } else {
    throw std::invalid_argument("builtin_kernel: unknown kernel '" + name + "'");
  }

  const auto plan = Plan::get(algebra, M, kind);
  Kernel k{DiscreteFunction{algebra, M, kind, std::vector<Complex>(plan->size())}, name, mode};
  k.fn.values[plan->fold_index({0, 0})] = center;
  k.fn.values[plan->fold_index({1, 0})] = n1;
  k.fn.values[plan->fold_index({0, 1})] = n2;
  return normalize_kernel(k);
}

}  // namespace orbitx
