#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "orbitx/algebra.hpp"
#include "orbitx/grids.hpp"

namespace orbitx {

using Complex = std::complex<double>;

/// Which orbit-function family a sampled function or spectrum belongs to:
/// C-functions over F_M / Lambda_M, or E-functions over F^e_M / Lambda^e_M.
enum class GridKind { C, E };

/// Complex values on the grid of (algebra, M, kind), aligned with the
/// enumeration order of enumerate_points / enumerate_points_even.
struct DiscreteFunction {
  AlgebraId algebra{};
  std::int64_t M = 1;
  GridKind kind = GridKind::C;
  std::vector<Complex> values;
};

/// Transform coefficients aligned with the label enumeration order.
struct Spectrum {
  AlgebraId algebra{};
  std::int64_t M = 1;
  GridKind kind = GridKind::C;
  std::vector<Complex> coeffs;
};

/// C-function: sum over the Weyl group of exp(2 pi i <w lambda, x>).
Complex c_function(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data);

/// E-function: same sum restricted to the even Weyl group.
Complex e_function(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data);

struct OrthogonalityReport {
  AlgebraId algebra{};
  std::int64_t M = 1;
  GridKind kind = GridKind::C;
  double max_offdiag = 0.0;        // max |<Phi_l, Phi_l'>| over l != l'
  double max_diag_rel_err = 0.0;   // vs c |W| M^2 h (even constants for E)
  double offdiag_bound = 0.0;      // 1e-8 * c |group| M^2
  double diag_rel_bound = 1e-10;

  bool pass() const {
    return max_offdiag < offdiag_bound && max_diag_rel_err < diag_rel_bound;
  }
};

/// Precomputed machinery for one (algebra, M, kind): grids, weights,
/// norm constants, group phase matrices and (when it fits in memory) the
/// full table of basis values. Built once, read-only afterwards; safe to
/// share across threads.
class Plan {
 public:
  static std::shared_ptr<const Plan> get(AlgebraId algebra, std::int64_t M, GridKind kind);

  AlgebraId algebra() const { return data_->id; }
  std::int64_t m() const { return M_; }
  GridKind kind() const { return kind_; }
  const AlgebraData& data() const { return *data_; }

  /// Grid cardinality; equals the label count.
  std::size_t size() const { return point_num_.size(); }
  std::size_t group_size() const { return phase_mats_.size(); }

  const std::vector<double>& eps() const { return eps_; }
  const std::vector<double>& h() const { return h_; }
  /// Diagonal norm c |group| M^2 h_i of basis function i.
  double norm_constant(std::size_t i) const { return norm_base_ * h_[i]; }

  Vec2l point_num(std::size_t j) const { return point_num_[j]; }
  Vec2l label_num(std::size_t i) const { return label_num_[i]; }
  /// Triple (s0,s1,s2) / (t0,t1,t2) plus reflected flag for row exports.
  const std::vector<EvenGridPoint>& points() const { return points_; }
  const std::vector<EvenLabelPoint>& labels() const { return labels_; }

  /// Basis value Phi_{lambda_i}(x_j) (Xi for kind E), exact rational phases.
  Complex basis(std::size_t i, std::size_t j) const;
  /// Basis value of label i at an arbitrary lattice point given by integer
  /// numerators (x = num / M).
  Complex basis_at(std::size_t i, Vec2l point_numerators) const;
  /// Basis value of label i at an arbitrary real point.
  Complex basis_at(std::size_t i, const PointCoords& x) const;

  /// Grid index of the fold of the lattice point num/M (even-domain fold
  /// with sector tracking for kind E).
  std::size_t fold_index(Vec2l point_numerators) const;

  /// Point action of group element w on integer point numerators.
  Vec2l apply_point(std::size_t w, Vec2l num) const { return point_action_[w].apply(num); }

  Spectrum forward(const DiscreteFunction& f) const;
  DiscreteFunction inverse_on_grid(const Spectrum& s) const;
  Complex inverse_at(const Spectrum& s, const PointCoords& x) const;
  Complex scalar_product(const DiscreteFunction& f, const DiscreteFunction& g) const;
  OrthogonalityReport verify() const;

  /// Throws std::invalid_argument unless f matches this plan's grid.
  void check(const DiscreteFunction& f) const;
  void check(const Spectrum& s) const;

  Plan(AlgebraId algebra, std::int64_t M, GridKind kind);  // prefer Plan::get

 private:
  const Complex* table_row(std::size_t i, std::vector<Complex>& scratch) const;
  void build_table() const;
  void compute_row(std::size_t i, Complex* out) const;

  const AlgebraData* data_;
  std::int64_t M_;
  GridKind kind_;
  std::vector<EvenGridPoint> points_;
  std::vector<EvenLabelPoint> labels_;
  std::vector<Vec2l> point_num_;
  std::vector<Vec2l> label_num_;
  std::vector<double> eps_;
  std::vector<double> h_;
  double norm_base_ = 0.0;  // c |group| M^2
  std::int64_t phase_den_ = 1;  // c M
  std::vector<Mat2l> phase_mats_;   // per group element: R_w^T adj(C)
  std::vector<Mat2l> point_action_; // per group element: point-side matrix
  PointIndex index_;
  bool table_fits_ = false;
  mutable std::vector<Complex> table_;
  mutable std::once_flag table_once_;
};

/// Spec-shaped entry points; each resolves the cached Plan and dispatches
/// on the function's kind.
Spectrum forward(const DiscreteFunction& f);
DiscreteFunction inverse_on_grid(const Spectrum& s);
Complex inverse_at(const Spectrum& s, const PointCoords& x);
Complex scalar_product(const DiscreteFunction& f, const DiscreteFunction& g);
OrthogonalityReport verify_orthogonality(AlgebraId algebra, std::int64_t M, GridKind kind);

}  // namespace orbitx
