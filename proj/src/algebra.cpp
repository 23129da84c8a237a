#include "orbitx/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace orbitx {

namespace {

Mat2l weight_refl(const Mat2l& cartan, int i) {
  // lambda -> lambda - lambda_i * (row i of C)
  if (i == 0) return Mat2l{1 - cartan.m00, 0, -cartan.m01, 1};
  return Mat2l{1, -cartan.m10, 0, 1 - cartan.m11};
}

AlgebraData make(AlgebraId id, Mat2l cartan, std::array<int, 2> marks,
                 std::array<int, 2> dual_marks, int weyl_order, Vec2l highest_coroot) {
  AlgebraData d;
  d.id = id;
  d.cartan = cartan;
  d.cartan_adj = cartan.adjugate();
  d.cartan_det = static_cast<int>(cartan.det());
  d.marks = marks;
  d.dual_marks = dual_marks;
  d.weyl_order = weyl_order;
  d.even_order = weyl_order / 2;
  d.highest_coroot = highest_coroot;
  const Mat2l ct = cartan.transpose();
  for (int i = 0; i < 2; ++i) {
    d.weight_reflection[i] = weight_refl(cartan, i);
    d.point_reflection[i] = weight_refl(ct, i);
  }
  return d;
}

// Cartan matrices are pinned by the marks and determinant constraints:
// the highest root xi = m1 a1 + m2 a2 must carry marks (1,1)/(2,1)/(2,3)
// and det C must equal 3/2/1. This fixes which simple root is long:
// C2 has a1 short, G2 has a1 long. The highest-coroot coordinates come
// from xi-check = 2 xi / <xi,xi> expressed in the omega-check basis.
const AlgebraData kA2 = make(AlgebraId::A2, Mat2l{2, -1, -1, 2}, {1, 1}, {1, 1}, 6, {1, 1});
const AlgebraData kC2 = make(AlgebraId::C2, Mat2l{2, -1, -2, 2}, {2, 1}, {1, 2}, 8, {1, 0});
const AlgebraData kG2 = make(AlgebraId::G2, Mat2l{2, -3, -1, 2}, {2, 3}, {3, 2}, 12, {1, 0});

}  // namespace

const AlgebraData& algebra_data(AlgebraId id) {
  switch (id) {
    case AlgebraId::A2: return kA2;
    case AlgebraId::C2: return kC2;
    case AlgebraId::G2: return kG2;
  }
  throw std::invalid_argument("unknown algebra id");
}

const char* algebra_name(AlgebraId id) {
  switch (id) {
    case AlgebraId::A2: return "A2";
    case AlgebraId::C2: return "C2";
    case AlgebraId::G2: return "G2";
  }
  return "?";
}

WeightCoords simple_reflection(int i, const WeightCoords& lambda, const AlgebraData& data) {
  if (i != 1 && i != 2) throw std::invalid_argument("simple_reflection: i must be 1 or 2");
  const Mat2l& r = data.weight_reflection[i - 1];
  auto v = r.apply(std::array<double, 2>{lambda.l1, lambda.l2});
  return {v[0], v[1]};
}

std::vector<WeylElement> generate_weyl_group(const AlgebraData& data) {
  std::vector<WeylElement> elems;
  elems.push_back(WeylElement{Mat2l::identity(), Mat2l::identity(), 1});
  std::size_t compositions = 0;
  const std::size_t cap = static_cast<std::size_t>(data.weyl_order) * data.weyl_order;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int i = 0; i < 2; ++i) {
      const WeylElement cur = elems[head];  // copy: push_back may reallocate
      WeylElement next;
      next.weight_action = data.weight_reflection[i] * cur.weight_action;
      next.point_action = data.point_reflection[i] * cur.point_action;
      next.det = -cur.det;
      if (++compositions > cap)
        throw std::runtime_error("weyl group closure not reached: wrong Cartan convention?");
      bool known = false;
      for (const auto& e : elems)
        if (e.weight_action == next.weight_action) { known = true; break; }
      if (!known) elems.push_back(next);
    }
  }
  if (elems.size() != static_cast<std::size_t>(data.weyl_order))
    throw std::runtime_error("weyl group has unexpected order " + std::to_string(elems.size()));
  return elems;
}

std::vector<WeylElement> even_subgroup(const std::vector<WeylElement>& group) {
  std::vector<WeylElement> even;
  for (const auto& e : group)
    if (e.det == 1) even.push_back(e);
  return even;
}

double pairing(const WeightCoords& lambda, const PointCoords& x, const AlgebraData& data) {
  const Mat2l& a = data.cartan_adj;
  const double y1 = a.m00 * x.x1 + a.m01 * x.x2;
  const double y2 = a.m10 * x.x1 + a.m11 * x.x2;
  return (lambda.l1 * y1 + lambda.l2 * y2) / data.cartan_det;
}

std::array<double, 3> barycentric(const PointCoords& x, const AlgebraData& data) {
  return {1.0 - data.marks[0] * x.x1 - data.marks[1] * x.x2, x.x1, x.x2};
}

bool in_fundamental_domain(const PointCoords& x, const AlgebraData& data, double tol) {
  auto b = barycentric(x, data);
  return b[0] >= -tol && b[1] >= -tol && b[2] >= -tol;
}

PointCoords fold_to_fundamental(const PointCoords& x0, const AlgebraData& data) {
  PointCoords x = x0;
  const double scale = 1.0 + std::fabs(x.x1) + std::fabs(x.x2);
  const double tol = 1e-13 * scale;
  for (int iter = 0; iter < 10000; ++iter) {
    const auto b = barycentric(x, data);
    int worst = 0;
    for (int k = 1; k < 3; ++k)
      if (b[k] < b[worst]) worst = k;
    if (b[worst] >= -tol) return x;
    if (worst == 0) {
      // affine reflection r_0: x -> x - (<xi,x> - 1) xi-check
      const double excess = -b[0];
      x.x1 -= excess * data.highest_coroot[0];
      x.x2 -= excess * data.highest_coroot[1];
    } else {
      const Mat2l& s = data.point_reflection[worst - 1];
      auto v = s.apply(std::array<double, 2>{x.x1, x.x2});
      x = {v[0], v[1]};
    }
  }
  throw std::runtime_error("fold_to_fundamental: reflection loop did not settle");
}

FoldedPoint fold_lattice_point(Vec2l coords, std::int64_t M, const AlgebraData& data) {
  int sign = 1;
  const std::int64_t m1 = data.marks[0], m2 = data.marks[1];
  for (int iter = 0; iter < 10000; ++iter) {
    const std::int64_t b0 = M - m1 * coords[0] - m2 * coords[1];
    std::int64_t bmin = b0;
    int worst = 0;
    if (coords[0] < bmin) { bmin = coords[0]; worst = 1; }
    if (coords[1] < bmin) { bmin = coords[1]; worst = 2; }
    if (bmin >= 0) return {coords, sign};
    if (worst == 0) {
      coords[0] += b0 * data.highest_coroot[0];
      coords[1] += b0 * data.highest_coroot[1];
    } else {
      coords = data.point_reflection[worst - 1].apply(coords);
    }
    sign = -sign;
  }
  throw std::runtime_error("fold_lattice_point: reflection loop did not settle");
}

}  // namespace orbitx
