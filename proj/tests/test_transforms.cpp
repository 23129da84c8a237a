#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "orbitx/transforms.hpp"

using namespace orbitx;

namespace {

constexpr AlgebraId kAll[] = {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2};

DiscreteFunction random_function(AlgebraId id, std::int64_t M, GridKind kind, unsigned seed) {
  const auto plan = Plan::get(id, M, kind);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DiscreteFunction f{id, M, kind, std::vector<Complex>(plan->size())};
  for (auto& v : f.values) v = {u(rng), u(rng)};
  return f;
}

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<Complex>& a) {
  double m = 0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

// Dense complex solve (partial pivoting); test-only oracle independent of
// the normalization constants used by forward().
std::vector<Complex> solve_dense(std::vector<std::vector<Complex>> A, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Complex acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("orbit functions at zero weight or zero point give the group order") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (AlgebraId id : kAll) {
    const AlgebraData& d = algebra_data(id);
    for (int trial = 0; trial < 20; ++trial) {
      const PointCoords x{u(rng), u(rng)};
      const WeightCoords l{u(rng), u(rng)};
      CHECK(std::abs(c_function({0, 0}, x, d) - Complex(d.weyl_order)) < 1e-12);
      CHECK(std::abs(c_function(l, {0, 0}, d) - Complex(d.weyl_order)) < 1e-12);
      CHECK(std::abs(e_function({0, 0}, x, d) - Complex(d.even_order)) < 1e-12);
      CHECK(std::abs(c_function(l, x, d)) <= d.weyl_order + 1e-12);
      CHECK(std::abs(e_function(l, x, d)) <= d.even_order + 1e-12);
    }
  }
}

TEST_CASE("C2 and G2 orbit functions are real (-1 lies in W and W^e)") {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (AlgebraId id : {AlgebraId::C2, AlgebraId::G2}) {
    const AlgebraData& d = algebra_data(id);
    for (int trial = 0; trial < 50; ++trial) {
      const WeightCoords l{u(rng), u(rng)};
      const PointCoords x{u(rng), u(rng)};
      CHECK(std::abs(c_function(l, x, d).imag()) < 1e-12);
      CHECK(std::abs(e_function(l, x, d).imag()) < 1e-12);
    }
  }
}

TEST_CASE("A2 C-functions are periodic along the coroot lattice") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> li(-4, 4);
  const AlgebraData& d = algebra_data(AlgebraId::A2);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightCoords l{static_cast<double>(li(rng)), static_cast<double>(li(rng))};
    const PointCoords x{u(rng), u(rng)};
    const int a = li(rng), b = li(rng);
    const PointCoords shifted{x.x1 + d.cartan.m00 * a + d.cartan.m01 * b,
                              x.x2 + d.cartan.m10 * a + d.cartan.m11 * b};
    CHECK(std::abs(c_function(l, x, d) - c_function(l, shifted, d)) < 1e-12 * d.weyl_order);
  }
}

TEST_CASE("C splits into the even orbit sum plus the odd coset sum") {
  std::mt19937 rng(24);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (AlgebraId id : kAll) {
    const AlgebraData& d = algebra_data(id);
    const auto W = generate_weyl_group(d);
    for (int trial = 0; trial < 20; ++trial) {
      const WeightCoords l{u(rng), u(rng)};
      const PointCoords x{u(rng), u(rng)};
      Complex odd = 0;
      for (const auto& w : W) {
        if (w.det != -1) continue;
        const WeightCoords wl = w.apply(l);
        const double ph = 2 * std::acos(-1.0) * pairing(wl, x, d);
        odd += Complex{std::cos(ph), std::sin(ph)};
      }
      CHECK(std::abs(c_function(l, x, d) - (e_function(l, x, d) + odd)) < 1e-12);
    }
  }
}

TEST_CASE("E-functions are invariant under even Weyl images of the point") {
  std::mt19937 rng(25);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (AlgebraId id : kAll) {
    const AlgebraData& d = algebra_data(id);
    for (const auto& w : even_subgroup(generate_weyl_group(d))) {
      const WeightCoords l{u(rng), u(rng)};
      const PointCoords x{u(rng), u(rng)};
      CHECK(std::abs(e_function(l, x, d) - e_function(l, w.apply(x), d)) < 1e-12 * d.weyl_order);
    }
  }
}

TEST_CASE("conjugation and Weyl-orbit symmetry of C-functions") {
  std::mt19937 rng(26);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (AlgebraId id : kAll) {
    const AlgebraData& d = algebra_data(id);
    for (int trial = 0; trial < 20; ++trial) {
      const WeightCoords l{u(rng), u(rng)};
      const PointCoords x{u(rng), u(rng)};
      CHECK(std::abs(c_function(l, {-x.x1, -x.x2}, d) - std::conj(c_function(l, x, d))) < 1e-12);
      for (const auto& w : generate_weyl_group(d))
        CHECK(std::abs(c_function(w.apply(l), x, d) - c_function(l, x, d)) < 1e-12 * d.weyl_order);
    }
  }
}

TEST_CASE("discrete scalar product: diagonal norms and orthogonality") {
  // A2, M=3, interior label (1,1,1): c |W| M^2 h = 3*6*9*1 = 162
  const auto plan = Plan::get(AlgebraId::A2, 3, GridKind::C);
  const std::size_t n = plan->size();
  std::size_t interior = n;
  for (std::size_t i = 0; i < n; ++i)
    if (plan->labels()[i].base.t == std::array<std::int64_t, 3>{1, 1, 1}) interior = i;
  REQUIRE(interior < n);

  auto basis_fn = [&](std::size_t i) {
    DiscreteFunction f{AlgebraId::A2, 3, GridKind::C, std::vector<Complex>(n)};
    for (std::size_t j = 0; j < n; ++j) f.values[j] = plan->basis(i, j);
    return f;
  };
  const auto phi_int = basis_fn(interior);
  CHECK(std::abs(scalar_product(phi_int, phi_int) - Complex(162.0)) < 1e-9);

  for (std::size_t i = 0; i < n; ++i) {
    const auto phi_i = basis_fn(i);
    const Complex diag = scalar_product(phi_i, phi_i);
    CHECK(diag.real() > 0.0);
    CHECK(std::abs(diag.imag()) < 1e-9);
    CHECK(std::abs(diag - Complex(plan->norm_constant(i))) < 1e-9 * plan->norm_constant(i));
    for (std::size_t k = 0; k < i; ++k)
      CHECK(std::abs(scalar_product(phi_i, basis_fn(k))) < 1e-8 * plan->norm_constant(i));
  }

  // <f,f> >= 0 for random f
  const auto f = random_function(AlgebraId::A2, 3, GridKind::C, 301);
  const Complex ff = scalar_product(f, f);
  CHECK(ff.real() >= 0.0);
  CHECK(std::abs(ff.imag()) < 1e-12 * ff.real());

  // mismatched grids are a dimension error
  const auto g = random_function(AlgebraId::A2, 4, GridKind::C, 302);
  CHECK_THROWS_AS((void)scalar_product(f, g), std::invalid_argument);
  const auto h = random_function(AlgebraId::C2, 3, GridKind::C, 303);
  CHECK_THROWS_AS((void)scalar_product(f, h), std::invalid_argument);
}

TEST_CASE("forward transform of a constant: single DC coefficient k/|group|") {
  for (AlgebraId id : kAll) {
    const AlgebraData& d = algebra_data(id);
    for (GridKind kind : {GridKind::C, GridKind::E}) {
      const std::int64_t M = 5;
      const auto plan = Plan::get(id, M, kind);
      const double k = 0.8125;
      DiscreteFunction f{id, M, kind, std::vector<Complex>(plan->size(), Complex(k))};
      const Spectrum s = plan->forward(f);

      // direct-summation oracle for the DC coefficient, straight from the
      // sums (no Plan machinery): F_0 = sum eps k conj(group order) / norm
      const double group = kind == GridKind::C ? d.weyl_order : d.even_order;
      double eps_total = 0;
      for (std::size_t j = 0; j < plan->size(); ++j) eps_total += plan->eps()[j];
      const double expected_dc =
          eps_total * k * group / (d.cartan_det * group * M * M * group);
      CHECK(expected_dc == doctest::Approx(k / group).epsilon(1e-12));

      for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const bool dc = plan->label_num(i) == Vec2l{0, 0};
        if (dc)
          CHECK(std::abs(s.coeffs[i] - Complex(k / group)) < 1e-10 * k);
        else
          CHECK(std::abs(s.coeffs[i]) < 1e-10 * k);
      }
    }
  }
}

TEST_CASE("forward transform of a sampled basis function is a unit vector") {
  for (AlgebraId id : kAll) {
    for (GridKind kind : {GridKind::C, GridKind::E}) {
      const std::int64_t M = 4;
      const auto plan = Plan::get(id, M, kind);
      const std::size_t mu = plan->size() / 2;
      DiscreteFunction f{id, M, kind, std::vector<Complex>(plan->size())};
      for (std::size_t j = 0; j < plan->size(); ++j) f.values[j] = plan->basis(mu, j);
      const Spectrum s = plan->forward(f);
      for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        CHECK(std::abs(s.coeffs[i] - (i == mu ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("forward is linear") {
  const auto f = random_function(AlgebraId::C2, 5, GridKind::C, 311);
  const auto g = random_function(AlgebraId::C2, 5, GridKind::C, 312);
  const Complex a{1.5, -0.5}, b{-0.25, 2.0};
  DiscreteFunction combo = f;
  for (std::size_t j = 0; j < combo.values.size(); ++j)
    combo.values[j] = a * f.values[j] + b * g.values[j];
  const Spectrum sf = forward(f), sg = forward(g), sc = forward(combo);
  for (std::size_t i = 0; i < sc.coeffs.size(); ++i)
    CHECK(std::abs(sc.coeffs[i] - (a * sf.coeffs[i] + b * sg.coeffs[i])) < 1e-12);
}

TEST_CASE("zero spectrum inverts to zero everywhere") {
  const auto plan = Plan::get(AlgebraId::G2, 4, GridKind::C);
  const Spectrum zero{AlgebraId::G2, 4, GridKind::C, std::vector<Complex>(plan->size())};
  const DiscreteFunction f = inverse_on_grid(zero);
  CHECK(max_abs(f.values) == 0.0);
  CHECK(std::abs(inverse_at(zero, {0.123, 0.071})) == 0.0);
}

TEST_CASE("round trip inverse(forward(f)) == f at grid points") {
  for (AlgebraId id : kAll) {
    for (GridKind kind : {GridKind::C, GridKind::E}) {
      for (std::int64_t M : {1, 3, 5}) {
        const auto f = random_function(id, M, kind, 400 + static_cast<unsigned>(M));
        const DiscreteFunction back = inverse_on_grid(forward(f));
        CHECK(max_abs_diff(back.values, f.values) < 1e-10 * max_abs(f.values));
      }
    }
  }
}

TEST_CASE("interpolation is affine-Weyl invariant between grid points") {
  std::mt19937 rng(27);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto f = random_function(AlgebraId::C2, 4, GridKind::C, 410);
  const Spectrum s = forward(f);
  const AlgebraData& d = algebra_data(AlgebraId::C2);
  for (int trial = 0; trial < 25; ++trial) {
    const PointCoords x{u(rng), u(rng)};
    const Complex a = inverse_at(s, x);
    const Complex b = inverse_at(s, fold_to_fundamental(x, d));
    CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("E coefficients agree with a direct linear solve (oracle)") {
  // interiors are nonempty from M = 3 (A2), 4 (C2), 6 (G2): reflected
  // sectors genuinely exercised
  const std::pair<AlgebraId, std::int64_t> cases[] = {
      {AlgebraId::A2, 4}, {AlgebraId::C2, 4}, {AlgebraId::G2, 6}};
  for (const auto& [id, M] : cases) {
    const auto plan = Plan::get(id, M, GridKind::E);
    const std::size_t n = plan->size();
    REQUIRE(n > enumerate_points(id, M).size());  // has a reflected sector
    const auto f = random_function(id, M, GridKind::E, 420);
    const Spectrum s = plan->forward(f);

    std::vector<std::vector<Complex>> A(n, std::vector<Complex>(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) A[j][i] = plan->basis(i, j);
    const auto solved = solve_dense(std::move(A), f.values);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(s.coeffs[i] - solved[i]) < 1e-8 * (1.0 + std::abs(solved[i])));
  }
}

TEST_CASE("Parseval identity for both families") {
  for (AlgebraId id : kAll) {
    for (GridKind kind : {GridKind::C, GridKind::E}) {
      const std::int64_t M = 6;
      const auto plan = Plan::get(id, M, kind);
      const auto f = random_function(id, M, kind, 430);
      const Spectrum s = plan->forward(f);
      double lhs = 0, rhs = 0;
      for (std::size_t j = 0; j < plan->size(); ++j)
        lhs += plan->eps()[j] * std::norm(f.values[j]);
      for (std::size_t i = 0; i < plan->size(); ++i)
        rhs += plan->norm_constant(i) * std::norm(s.coeffs[i]);
      CHECK(std::abs(lhs - rhs) < 1e-9 * lhs);
    }
  }
}

TEST_CASE("verify_orthogonality meets the documented bounds") {
  const auto a2 = verify_orthogonality(AlgebraId::A2, 4, GridKind::C);
  CHECK(a2.pass());
  CHECK(a2.max_offdiag < 1e-8 * 3 * 6 * 16);
  CHECK(a2.max_diag_rel_err < 1e-10);

  const auto c2 = verify_orthogonality(AlgebraId::C2, 5, GridKind::C);
  CHECK(c2.pass());

  const auto g2 = verify_orthogonality(AlgebraId::G2, 6, GridKind::E);
  CHECK(g2.pass());
  CHECK(g2.max_offdiag < 1e-8 * 1 * 6 * 36);
}

TEST_CASE("basis values on the grid are real for C2 and G2") {
  for (AlgebraId id : {AlgebraId::C2, AlgebraId::G2}) {
    const auto plan = Plan::get(id, 5, GridKind::C);
    for (std::size_t i = 0; i < plan->size(); ++i)
      for (std::size_t j = 0; j < plan->size(); ++j)
        CHECK(std::abs(plan->basis(i, j).imag()) < 1e-12);
  }
}

TEST_CASE("plan rejects mismatched operands") {
  const auto plan = Plan::get(AlgebraId::A2, 4, GridKind::C);
  DiscreteFunction wrong{AlgebraId::A2, 4, GridKind::C, std::vector<Complex>(3)};
  CHECK_THROWS_AS((void)plan->forward(wrong), std::invalid_argument);
  Spectrum wrong_kind{AlgebraId::A2, 4, GridKind::E, std::vector<Complex>(plan->size())};
  CHECK_THROWS_AS((void)plan->inverse_on_grid(wrong_kind), std::invalid_argument);
}

TEST_SUITE_END();
