#pragma once

#include <cstdint>
#include <vector>

#include "orbitx/algebra.hpp"

namespace orbitx {

/// Point of F_M in barycentric-style integers: s0 + m1 s1 + m2 s2 == M.
/// The point itself is (s1/M) w1-check + (s2/M) w2-check.
struct GridPoint {
  std::array<std::int64_t, 3> s{};
  std::int64_t M = 1;
  AlgebraId algebra{};

  PointCoords point_coords() const {
    return {static_cast<double>(s[1]) / M, static_cast<double>(s[2]) / M};
  }
  Vec2l coords_num() const { return {s[1], s[2]}; }
  bool interior() const { return s[0] > 0 && s[1] > 0 && s[2] > 0; }
  bool operator==(const GridPoint&) const = default;
};

/// Label of Lambda_M: t0 + m1v t1 + m2v t2 == M; the weight is t1 w1 + t2 w2.
struct LabelPoint {
  std::array<std::int64_t, 3> t{};
  std::int64_t M = 1;
  AlgebraId algebra{};

  WeightCoords label_coords() const {
    return {static_cast<double>(t[1]), static_cast<double>(t[2])};
  }
  Vec2l coords_num() const { return {t[1], t[2]}; }
  bool interior() const { return t[0] > 0 && t[1] > 0 && t[2] > 0; }
  bool operator==(const LabelPoint&) const = default;
};

/// Point of F^e_M = F_M plus the r_i-image of the interior of F_M.
/// Reflected entries keep the interior base point; their actual
/// coordinates are r_i applied to the base.
struct EvenGridPoint {
  GridPoint base;
  bool reflected = false;
  int reflection = 1;  // which simple reflection builds the second sector

  Vec2l coords_num() const;
  PointCoords point_coords() const {
    auto c = coords_num();
    return {static_cast<double>(c[0]) / base.M, static_cast<double>(c[1]) / base.M};
  }
};

/// Label of Lambda^e_M, mirror of EvenGridPoint on the weight side.
struct EvenLabelPoint {
  LabelPoint base;
  bool reflected = false;
  int reflection = 1;

  Vec2l coords_num() const;
  WeightCoords label_coords() const {
    auto c = coords_num();
    return {static_cast<double>(c[0]), static_cast<double>(c[1])};
  }
};

/// All solutions of s0 + m1 s1 + m2 s2 == M, lexicographic in (s1, s2).
std::vector<GridPoint> enumerate_points(AlgebraId algebra, std::int64_t M);

/// All solutions of t0 + m1v t1 + m2v t2 == M, lexicographic in (t1, t2).
std::vector<LabelPoint> enumerate_labels(AlgebraId algebra, std::int64_t M);

/// F_M in enumeration order followed by the r_i images of its interior.
std::vector<EvenGridPoint> enumerate_points_even(AlgebraId algebra, std::int64_t M,
                                                 int reflection = 1);
std::vector<EvenLabelPoint> enumerate_labels_even(AlgebraId algebra, std::int64_t M,
                                                  int reflection = 1);

/// Orbit-size weight epsilon(x) = |W| / |stab_W(x)|, keyed on the zero
/// pattern of (s0, s1, s2).
int epsilon(const GridPoint& p);

/// Stabilizer order h_lambda-check of the label mod MQ, keyed on the zero
/// pattern of (t0, t1, t2).
int h_dual(const LabelPoint& l);

/// Even-orbit weight: |W^e| on the reflected sector, pattern lookup on F.
int epsilon_even(const EvenGridPoint& p);

/// Even stabilizer order: 1 on the reflected sector, pattern lookup otherwise.
int h_dual_even(const EvenLabelPoint& l);

struct OrbitStabilizer {
  int orbit_size = 0;
  int stabilizer_order = 0;
};

/// Brute force over the given group: stabilizer of the point coords/M in
/// (1/M) P-check / Q-check (group elements act through point_action, images
/// compared modulo M Q-check).
OrbitStabilizer point_orbit_stabilizer(Vec2l coords_num, std::int64_t M,
                                       const std::vector<WeylElement>& group,
                                       const AlgebraData& data);

/// Same on the label side: stabilizer of the weight in P / MQ
/// (weight_action, images compared modulo MQ).
OrbitStabilizer label_orbit_stabilizer(Vec2l coords_num, std::int64_t M,
                                       const std::vector<WeylElement>& group,
                                       const AlgebraData& data);

/// O(1) lookup from folded lattice numerators to the enumeration index of
/// F_M (and, for the even grid, from an interior index to its rank among
/// interior points).
class PointIndex {
 public:
  PointIndex(AlgebraId algebra, std::int64_t M);

  static constexpr std::uint32_t npos = 0xffffffffu;

  /// Index in enumerate_points order; coords must satisfy the F_M constraints.
  std::uint32_t index_of(Vec2l folded_coords) const;
  /// Rank among interior points, npos if the point is not interior.
  std::uint32_t interior_rank(std::uint32_t point_index) const { return interior_rank_[point_index]; }
  std::size_t size() const { return count_; }
  std::size_t interior_count() const { return interior_count_; }

 private:
  std::int64_t dim2_ = 0;
  std::vector<std::uint32_t> flat_;
  std::vector<std::uint32_t> interior_rank_;
  std::size_t count_ = 0;
  std::size_t interior_count_ = 0;
};

}  // namespace orbitx
