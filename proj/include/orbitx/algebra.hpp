#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace orbitx {

/// Coordinates of a weight in the omega (fundamental weight) basis.
struct WeightCoords {
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Coordinates of a point of the plane in the omega-check (coweight) basis.
struct PointCoords {
  double x1 = 0.0;
  double x2 = 0.0;
};

using Vec2l = std::array<std::int64_t, 2>;

/// 2x2 integer matrix, row major.
struct Mat2l {
  std::int64_t m00 = 1, m01 = 0;
  std::int64_t m10 = 0, m11 = 1;

  static Mat2l identity() { return {}; }

  Vec2l apply(const Vec2l& v) const {
    return {m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
  }
  std::array<double, 2> apply(const std::array<double, 2>& v) const {
    return {m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]};
  }
  Mat2l operator*(const Mat2l& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
  bool operator==(const Mat2l& o) const = default;
  std::int64_t det() const { return m00 * m11 - m01 * m10; }
  Mat2l transpose() const { return {m00, m10, m01, m11}; }
  /// Adjugate: M * adj(M) == det(M) * I.
  Mat2l adjugate() const { return {m11, -m01, -m10, m00}; }
};

/// The three rank-2 simple Lie algebras handled by this library.
enum class AlgebraId { A2, C2, G2 };

/// Static root-system data of one algebra. All entries are integers or
/// integer matrices; the inverse Cartan matrix is carried exactly as
/// adjugate / determinant.
struct AlgebraData {
  AlgebraId id{};
  Mat2l cartan;              // C, acting on omega coordinates by rows
  Mat2l cartan_adj;          // adj(C); C^{-1} = cartan_adj / cartan_det
  int cartan_det = 0;        // c
  std::array<int, 2> marks{};       // xi = m1 a1 + m2 a2
  std::array<int, 2> dual_marks{};  // eta = m1v a1v + m2v a2v
  int weyl_order = 0;        // |W|
  int even_order = 0;        // |W^e|
  Vec2l highest_coroot{};    // xi-check = 2 xi / <xi,xi> in omega-check coordinates

  // Simple reflections r_1, r_2 as matrices. Weight side acts on omega
  // coordinates, point side on omega-check coordinates (contragredient;
  // same construction from the transposed Cartan matrix).
  std::array<Mat2l, 2> weight_reflection{};
  std::array<Mat2l, 2> point_reflection{};
};

/// Descriptor lookup; total over the enumeration.
const AlgebraData& algebra_data(AlgebraId id);

const char* algebra_name(AlgebraId id);

/// One Weyl group element with its action on both coordinate systems.
/// The point action is the contragredient of the weight action, so
/// pairing(w.lambda, w.x) == pairing(lambda, x) for all lambda, x.
struct WeylElement {
  Mat2l weight_action;
  Mat2l point_action;
  int det = 1;

  WeightCoords apply(const WeightCoords& l) const {
    auto r = weight_action.apply(std::array<double, 2>{l.l1, l.l2});
    return {r[0], r[1]};
  }
  PointCoords apply(const PointCoords& p) const {
    auto r = point_action.apply(std::array<double, 2>{p.x1, p.x2});
    return {r[0], r[1]};
  }
};

/// r_i lambda = lambda - lambda_i * (row i of the Cartan matrix); i in {1,2}.
WeightCoords simple_reflection(int i, const WeightCoords& lambda, const AlgebraData& data);

/// Closure of {r1, r2} under composition, identity first. Size equals
/// data.weyl_order; throws std::runtime_error if closure is not reached
/// within weyl_order^2 compositions (wrong Cartan convention).
std::vector<WeylElement> generate_weyl_group(const AlgebraData& data);

/// Elements of determinant +1; size weyl_order / 2.
std::vector<WeylElement> even_subgroup(const std::vector<WeylElement>& group);

/// <lambda, x> = lambda^T C^{-1} x for lambda in omega and x in omega-check
/// coordinates.
double pairing(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data);

/// Barycentric coordinates of x relative to the fundamental domain F:
/// (1 - m1 x1 - m2 x2, x1, x2). x lies in F iff all three are >= 0.
std::array<double, 3> barycentric(const PointCoords& x, const AlgebraData& data);

bool in_fundamental_domain(const PointCoords& x, const AlgebraData& data, double tol = 1e-12);

/// Representative of the affine Weyl orbit of x inside F. Idempotent;
/// throws std::runtime_error if the reflection loop fails to settle
/// within 10^4 steps.
PointCoords fold_to_fundamental(const PointCoords& x, const AlgebraData& data);

/// Exact fold of a lattice point of (1/M) P-check given by its integer
/// numerator pair (x = coords / M). det_sign is the determinant of the
/// linear part of the folding element; it tells apart the two even-Weyl
/// orbits inside one full orbit.
struct FoldedPoint {
  Vec2l coords;   // folded numerators: both >= 0, m1*c0 + m2*c1 <= M
  int det_sign;   // +1 or -1
};
FoldedPoint fold_lattice_point(Vec2l coords, std::int64_t M, const AlgebraData& data);

}  // namespace orbitx
