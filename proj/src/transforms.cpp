#include "orbitx/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "orbitx/parallel.hpp"

namespace orbitx {

namespace {

constexpr std::size_t kTableCapEntries = std::size_t{1} << 24;

const std::vector<WeylElement>& cached_group(AlgebraId id) {
  static const std::vector<WeylElement> groups[3] = {
      generate_weyl_group(algebra_data(AlgebraId::A2)),
      generate_weyl_group(algebra_data(AlgebraId::C2)),
      generate_weyl_group(algebra_data(AlgebraId::G2)),
  };
  return groups[static_cast<int>(id)];
}

inline Complex unit_phase(std::int64_t num, std::int64_t den) {
  const std::int64_t r = ((num % den) + den) % den;
  const double a = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(a), std::sin(a)};
}

Complex orbit_sum(const std::vector<WeylElement>& group, const WeightCoords& lambda,
                  const PointCoords& x, const AlgebraData& data) {
  Complex acc = 0.0;
  for (const auto& w : group) {
    const WeightCoords wl = w.apply(lambda);
    const double ph = 2.0 * std::numbers::pi * pairing(wl, x, data);
    acc += Complex{std::cos(ph), std::sin(ph)};
  }
  return acc;
}

}  // namespace

Complex c_function(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data) {
  return orbit_sum(cached_group(data.id), lambda, x, data);
}

Complex e_function(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data) {
  static const std::vector<WeylElement> evens[3] = {
      even_subgroup(cached_group(AlgebraId::A2)),
      even_subgroup(cached_group(AlgebraId::C2)),
      even_subgroup(cached_group(AlgebraId::G2)),
  };
  return orbit_sum(evens[static_cast<int>(data.id)], lambda, x, data);
}

Plan::Plan(AlgebraId algebra, std::int64_t M, GridKind kind)
    : data_(&algebra_data(algebra)), M_(M), kind_(kind), index_(algebra, M) {
  if (M < 1) throw std::invalid_argument("Plan: M must be >= 1");
  if (kind == GridKind::C) {
    for (const auto& p : enumerate_points(algebra, M)) points_.push_back({p, false, 1});
    for (const auto& l : enumerate_labels(algebra, M)) labels_.push_back({l, false, 1});
  } else {
    points_ = enumerate_points_even(algebra, M);
    labels_ = enumerate_labels_even(algebra, M);
  }
  if (points_.size() != labels_.size())
    throw std::runtime_error("Plan: point and label grids have different cardinality");

  point_num_.reserve(points_.size());
  eps_.reserve(points_.size());
  for (const auto& p : points_) {
    point_num_.push_back(p.coords_num());
    eps_.push_back(kind == GridKind::C ? epsilon(p.base) : epsilon_even(p));
  }
  label_num_.reserve(labels_.size());
  h_.reserve(labels_.size());
  for (const auto& l : labels_) {
    label_num_.push_back(l.coords_num());
    h_.push_back(kind == GridKind::C ? h_dual(l.base) : h_dual_even(l));
  }

  const auto& group = cached_group(algebra);
  for (const auto& w : group) {
    if (kind == GridKind::E && w.det != 1) continue;
    phase_mats_.push_back(w.weight_action.transpose() * data_->cartan_adj);
    point_action_.push_back(w.point_action);
  }
  norm_base_ = static_cast<double>(data_->cartan_det) * static_cast<double>(phase_mats_.size()) *
               static_cast<double>(M) * static_cast<double>(M);
  phase_den_ = static_cast<std::int64_t>(data_->cartan_det) * M;
  table_fits_ = points_.size() * points_.size() <= kTableCapEntries;
}

std::shared_ptr<const Plan> Plan::get(AlgebraId algebra, std::int64_t M, GridKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::int64_t, int>, std::shared_ptr<const Plan>> cache;
  const auto key = std::make_tuple(static_cast<int>(algebra), M, static_cast<int>(kind));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto plan = std::make_shared<const Plan>(algebra, M, kind);
  cache.emplace(key, plan);
  return plan;
}

void Plan::compute_row(std::size_t i, Complex* out) const {
  const Vec2l tau = label_num_[i];
  const std::size_t n = point_num_.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec2l sig = point_num_[j];
    Complex acc = 0.0;
    for (const auto& b : phase_mats_) {
      const std::int64_t num = tau[0] * (b.m00 * sig[0] + b.m01 * sig[1]) +
                               tau[1] * (b.m10 * sig[0] + b.m11 * sig[1]);
      acc += unit_phase(num, phase_den_);
    }
    out[j] = acc;
  }
}

void Plan::build_table() const {
  const std::size_t n = size();
  table_.resize(n * n);
  parallel_for(n, [this, n](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) compute_row(i, table_.data() + i * n);
  });
}

const Complex* Plan::table_row(std::size_t i, std::vector<Complex>& scratch) const {
  if (table_fits_) {
    std::call_once(table_once_, [this] { build_table(); });
    return table_.data() + i * size();
  }
  scratch.resize(size());
  compute_row(i, scratch.data());
  return scratch.data();
}

Complex Plan::basis(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * size() + j];
  return basis_at(i, point_num_[j]);
}

Complex Plan::basis_at(std::size_t i, Vec2l sig) const {
  const Vec2l tau = label_num_[i];
  Complex acc = 0.0;
  for (const auto& b : phase_mats_) {
    const std::int64_t num = tau[0] * (b.m00 * sig[0] + b.m01 * sig[1]) +
                             tau[1] * (b.m10 * sig[0] + b.m11 * sig[1]);
    acc += unit_phase(num, phase_den_);
  }
  return acc;
}

Complex Plan::basis_at(std::size_t i, const PointCoords& x) const {
  const Vec2l tau = label_num_[i];
  const double c = data_->cartan_det;
  Complex acc = 0.0;
  for (const auto& b : phase_mats_) {
    const double num = tau[0] * (b.m00 * x.x1 + b.m01 * x.x2) +
                       tau[1] * (b.m10 * x.x1 + b.m11 * x.x2);
    const double ph = 2.0 * std::numbers::pi * num / c;
    acc += Complex{std::cos(ph), std::sin(ph)};
  }
  return acc;
}

std::size_t Plan::fold_index(Vec2l num) const {
  const FoldedPoint f = fold_lattice_point(num, M_, *data_);
  const std::uint32_t base = index_.index_of(f.coords);
  if (base == PointIndex::npos)
    throw std::runtime_error("fold_index: folded point missed the grid");
  if (kind_ == GridKind::C || f.det_sign > 0) return base;
  // Odd folding element: boundary points are their own even representative,
  // interior ones live in the reflected sector.
  const std::uint32_t rank = index_.interior_rank(base);
  if (rank == PointIndex::npos) return base;
  return index_.size() + rank;
}

void Plan::check(const DiscreteFunction& f) const {
  if (f.algebra != data_->id || f.M != M_ || f.kind != kind_ || f.values.size() != size())
    throw std::invalid_argument("discrete function does not match grid dimensions");
}

void Plan::check(const Spectrum& s) const {
  if (s.algebra != data_->id || s.M != M_ || s.kind != kind_ || s.coeffs.size() != size())
    throw std::invalid_argument("spectrum does not match grid dimensions");
}

Spectrum Plan::forward(const DiscreteFunction& f) const {
  check(f);
  const std::size_t n = size();
  Spectrum out{data_->id, M_, kind_, std::vector<Complex>(n)};
  parallel_for(n, [this, n, &f, &out](std::size_t begin, std::size_t end) {
    std::vector<Complex> scratch;
    for (std::size_t i = begin; i < end; ++i) {
      const Complex* row = table_row(i, scratch);
      Complex acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += eps_[j] * f.values[j] * std::conj(row[j]);
      out.coeffs[i] = acc / norm_constant(i);
    }
  });
  return out;
}

DiscreteFunction Plan::inverse_on_grid(const Spectrum& s) const {
  check(s);
  const std::size_t n = size();
  DiscreteFunction out{data_->id, M_, kind_, std::vector<Complex>(n)};
  if (table_fits_) {
    std::call_once(table_once_, [this] { build_table(); });
    parallel_for(n, [this, n, &s, &out](std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += s.coeffs[i] * table_[i * n + j];
        out.values[j] = acc;
      }
    });
  } else {
    parallel_for(n, [this, n, &s, &out](std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += s.coeffs[i] * basis_at(i, point_num_[j]);
        out.values[j] = acc;
      }
    });
  }
  return out;
}

Complex Plan::inverse_at(const Spectrum& s, const PointCoords& x) const {
  check(s);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < size(); ++i) acc += s.coeffs[i] * basis_at(i, x);
  return acc;
}

Complex Plan::scalar_product(const DiscreteFunction& f, const DiscreteFunction& g) const {
  check(f);
  check(g);
  Complex acc = 0.0;
  for (std::size_t j = 0; j < size(); ++j)
    acc += eps_[j] * f.values[j] * std::conj(g.values[j]);
  return acc;
}

OrthogonalityReport Plan::verify() const {
  const std::size_t n = size();
  OrthogonalityReport rep;
  rep.algebra = data_->id;
  rep.M = M_;
  rep.kind = kind_;
  rep.offdiag_bound = 1e-8 * norm_base_;
  std::mutex mu;
  parallel_for(n, [this, n, &rep, &mu](std::size_t begin, std::size_t end) {
    std::vector<Complex> scratch_i, scratch_k;
    double offdiag = 0.0, diag_err = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const Complex* row_i = table_row(i, scratch_i);
      for (std::size_t k = 0; k <= i; ++k) {
        const Complex* row_k = table_row(k, scratch_k);
        Complex acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          acc += eps_[j] * row_i[j] * std::conj(row_k[j]);
        if (k == i) {
          diag_err = std::max(diag_err, std::abs(acc - norm_constant(i)) / norm_constant(i));
        } else {
          offdiag = std::max(offdiag, std::abs(acc));
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    rep.max_offdiag = std::max(rep.max_offdiag, offdiag);
    rep.max_diag_rel_err = std::max(rep.max_diag_rel_err, diag_err);
  });
  return rep;
}

Spectrum forward(const DiscreteFunction& f) {
  return Plan::get(f.algebra, f.M, f.kind)->forward(f);
}

DiscreteFunction inverse_on_grid(const Spectrum& s) {
  return Plan::get(s.algebra, s.M, s.kind)->inverse_on_grid(s);
}

Complex inverse_at(const Spectrum& s, const PointCoords& x) {
  return Plan::get(s.algebra, s.M, s.kind)->inverse_at(s, x);
}

Complex scalar_product(const DiscreteFunction& f, const DiscreteFunction& g) {
  if (f.algebra != g.algebra || f.M != g.M || f.kind != g.kind)
    throw std::invalid_argument("scalar_product: mismatched grids");
  return Plan::get(f.algebra, f.M, f.kind)->scalar_product(f, g);
}

OrthogonalityReport verify_orthogonality(AlgebraId algebra, std::int64_t M, GridKind kind) {
  return Plan::get(algebra, M, kind)->verify();
}

}  // namespace orbitx
