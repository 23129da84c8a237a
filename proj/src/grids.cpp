#include "orbitx/grids.hpp"

#include <stdexcept>

namespace orbitx {

namespace {

int zero_pattern(const std::array<std::int64_t, 3>& v) {
  return (v[0] != 0 ? 4 : 0) | (v[1] != 0 ? 2 : 0) | (v[2] != 0 ? 1 : 0);
}

// Weight tables keyed on the zero pattern, index (s0!=0)<<2 | (s1!=0)<<1 |
// (s2!=0). Entry 0 is unreachable (M >= 1). Values are the orbit sizes /
// stabilizer orders of the torus action; the cross-check against the
// brute-force orbit-stabilizer count is part of the test suite.
constexpr int kEps[3][8] = {
    {0, 1, 1, 3, 1, 3, 3, 6},      // A2
    {0, 1, 2, 4, 1, 4, 4, 8},      // C2
    {0, 2, 3, 6, 1, 6, 6, 12},     // G2
};
constexpr int kEpsEven[3][8] = {
    {0, 1, 1, 3, 1, 3, 3, 3},
    {0, 1, 2, 4, 1, 4, 4, 4},
    {0, 2, 3, 6, 1, 6, 6, 6},
};
constexpr int kH[3][8] = {
    {0, 6, 6, 2, 6, 2, 2, 1},
    {0, 4, 8, 2, 8, 2, 2, 1},
    {0, 4, 6, 2, 12, 2, 2, 1},
};
constexpr int kHEven[3][8] = {
    {0, 3, 3, 1, 3, 1, 1, 1},
    {0, 2, 4, 1, 4, 1, 1, 1},
    {0, 2, 3, 1, 6, 1, 1, 1},
};

void check_reflection_index(int reflection) {
  if (reflection != 1 && reflection != 2)
    throw std::invalid_argument("reflection index must be 1 or 2");
}

// v in M * L Z^2 for the integer column lattice L?
bool in_scaled_lattice(const Vec2l& v, const Mat2l& lattice, std::int64_t M) {
  const Mat2l adj = lattice.adjugate();
  const std::int64_t q = lattice.det() * M;
  const Vec2l w = adj.apply(v);
  return w[0] % q == 0 && w[1] % q == 0;
}

}  // namespace

std::vector<GridPoint> enumerate_points(AlgebraId algebra, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("enumerate_points: M must be >= 1");
  const AlgebraData& d = algebra_data(algebra);
  std::vector<GridPoint> out;
  for (std::int64_t s1 = 0; s1 * d.marks[0] <= M; ++s1)
    for (std::int64_t s2 = 0; s1 * d.marks[0] + s2 * d.marks[1] <= M; ++s2)
      out.push_back({{M - s1 * d.marks[0] - s2 * d.marks[1], s1, s2}, M, algebra});
  return out;
}

std::vector<LabelPoint> enumerate_labels(AlgebraId algebra, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("enumerate_labels: M must be >= 1");
  const AlgebraData& d = algebra_data(algebra);
  std::vector<LabelPoint> out;
  for (std::int64_t t1 = 0; t1 * d.dual_marks[0] <= M; ++t1)
    for (std::int64_t t2 = 0; t1 * d.dual_marks[0] + t2 * d.dual_marks[1] <= M; ++t2)
      out.push_back({{M - t1 * d.dual_marks[0] - t2 * d.dual_marks[1], t1, t2}, M, algebra});
  return out;
}

Vec2l EvenGridPoint::coords_num() const {
  Vec2l c{base.s[1], base.s[2]};
  if (!reflected) return c;
  return algebra_data(base.algebra).point_reflection[reflection - 1].apply(c);
}

Vec2l EvenLabelPoint::coords_num() const {
  Vec2l c{base.t[1], base.t[2]};
  if (!reflected) return c;
  return algebra_data(base.algebra).weight_reflection[reflection - 1].apply(c);
}

std::vector<EvenGridPoint> enumerate_points_even(AlgebraId algebra, std::int64_t M,
                                                 int reflection) {
  check_reflection_index(reflection);
  auto pts = enumerate_points(algebra, M);
  std::vector<EvenGridPoint> out;
  out.reserve(pts.size() * 2);
  for (const auto& p : pts) out.push_back({p, false, reflection});
  for (const auto& p : pts)
    if (p.interior()) out.push_back({p, true, reflection});
  return out;
}

std::vector<EvenLabelPoint> enumerate_labels_even(AlgebraId algebra, std::int64_t M,
                                                  int reflection) {
  check_reflection_index(reflection);
  auto lbs = enumerate_labels(algebra, M);
  std::vector<EvenLabelPoint> out;
  out.reserve(lbs.size() * 2);
  for (const auto& l : lbs) out.push_back({l, false, reflection});
  for (const auto& l : lbs)
    if (l.interior()) out.push_back({l, true, reflection});
  return out;
}

int epsilon(const GridPoint& p) {
  return kEps[static_cast<int>(p.algebra)][zero_pattern(p.s)];
}

int h_dual(const LabelPoint& l) {
  return kH[static_cast<int>(l.algebra)][zero_pattern(l.t)];
}

int epsilon_even(const EvenGridPoint& p) {
  if (p.reflected) return algebra_data(p.base.algebra).even_order;
  return kEpsEven[static_cast<int>(p.base.algebra)][zero_pattern(p.base.s)];
}

int h_dual_even(const EvenLabelPoint& l) {
  if (l.reflected) return 1;
  return kHEven[static_cast<int>(l.base.algebra)][zero_pattern(l.base.t)];
}

OrbitStabilizer point_orbit_stabilizer(Vec2l coords_num, std::int64_t M,
                                       const std::vector<WeylElement>& group,
                                       const AlgebraData& data) {
  // Q-check in omega-check coordinates has the columns of the Cartan matrix
  // as a basis.
  int stab = 0;
  for (const auto& w : group) {
    const Vec2l img = w.point_action.apply(coords_num);
    if (in_scaled_lattice({img[0] - coords_num[0], img[1] - coords_num[1]}, data.cartan, M))
      ++stab;
  }
  return {static_cast<int>(group.size()) / stab, stab};
}

OrbitStabilizer label_orbit_stabilizer(Vec2l coords_num, std::int64_t M,
                                       const std::vector<WeylElement>& group,
                                       const AlgebraData& data) {
  // Q in omega coordinates: columns of the transposed Cartan matrix.
  const Mat2l lattice = data.cartan.transpose();
  int stab = 0;
  for (const auto& w : group) {
    const Vec2l img = w.weight_action.apply(coords_num);
    if (in_scaled_lattice({img[0] - coords_num[0], img[1] - coords_num[1]}, lattice, M))
      ++stab;
  }
  return {static_cast<int>(group.size()) / stab, stab};
}

PointIndex::PointIndex(AlgebraId algebra, std::int64_t M) {
  const AlgebraData& d = algebra_data(algebra);
  const std::int64_t dim1 = M / d.marks[0] + 1;
  dim2_ = M / d.marks[1] + 1;
  flat_.assign(static_cast<std::size_t>(dim1 * dim2_), npos);
  const auto pts = enumerate_points(algebra, M);
  count_ = pts.size();
  interior_rank_.assign(count_, npos);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    flat_[static_cast<std::size_t>(pts[i].s[1] * dim2_ + pts[i].s[2])] =
        static_cast<std::uint32_t>(i);
    if (pts[i].interior())
      interior_rank_[i] = static_cast<std::uint32_t>(interior_count_++);
  }
}

std::uint32_t PointIndex::index_of(Vec2l folded_coords) const {
  const std::size_t slot = static_cast<std::size_t>(folded_coords[0] * dim2_ + folded_coords[1]);
  if (slot >= flat_.size()) return npos;
  return flat_[slot];
}

}  // namespace orbitx
