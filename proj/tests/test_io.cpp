#include <doctest.h>

#include <random>
#include <sstream>

#include "orbitx/io.hpp"

using namespace orbitx;

namespace {

DiscreteFunction random_function(AlgebraId id, std::int64_t M, GridKind kind, unsigned seed) {
  const auto plan = Plan::get(id, M, kind);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  DiscreteFunction f{id, M, kind, std::vector<Complex>(plan->size())};
  for (auto& v : f.values) v = {u(rng), u(rng)};
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("name round trips") {
  for (AlgebraId id : {AlgebraId::A2, AlgebraId::C2, AlgebraId::G2})
    CHECK(algebra_from_string(to_string(id)) == id);
  for (GridKind k : {GridKind::C, GridKind::E})
    CHECK(kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(algebra_from_string("b2"), std::runtime_error);
  CHECK_THROWS_AS(kind_from_string("s"), std::runtime_error);
}

TEST_CASE("function and spectrum CSV round trips, both kinds") {
  for (GridKind kind : {GridKind::C, GridKind::E}) {
    const auto f = random_function(AlgebraId::C2, 4, kind, 601);
    std::stringstream buf;
    write_function_csv(buf, f);
    const DiscreteFunction back = read_function_csv(buf);
    CHECK(back.algebra == f.algebra);
    CHECK(back.M == f.M);
    CHECK(back.kind == f.kind);
    REQUIRE(back.values.size() == f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
      CHECK(back.values[i] == f.values[i]);  // %.17g survives bit for bit

    const Spectrum s = forward(f);
    std::stringstream sbuf;
    write_spectrum_csv(sbuf, s);
    const Spectrum sback = read_spectrum_csv(sbuf);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) CHECK(sback.coeffs[i] == s.coeffs[i]);
  }
}

TEST_CASE("json round trips") {
  const auto f = random_function(AlgebraId::G2, 5, GridKind::C, 602);
  std::stringstream buf;
  write_function_json(buf, f);
  CHECK(buf.str().front() == '{');
  const DiscreteFunction back = read_function_any(buf);
  for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == f.values[i]);

  const Spectrum s = forward(f);
  std::stringstream sbuf;
  write_spectrum_json(sbuf, s);
  const Spectrum sback = read_spectrum_any(sbuf);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) CHECK(sback.coeffs[i] == s.coeffs[i]);
}

TEST_CASE("kernel CSV carries name and normalization mode") {
  const Kernel k = builtin_kernel("edge", AlgebraId::A2, 4);
  std::stringstream buf;
  write_kernel_csv(buf, k);
  const Kernel back = read_kernel_csv(buf);
  CHECK(back.name == "edge");
  CHECK(back.mode == KernelNorm::None);
  for (std::size_t i = 0; i < k.fn.values.size(); ++i)
    CHECK(back.fn.values[i] == k.fn.values[i]);
}

TEST_CASE("malformed documents are rejected") {
  std::istringstream empty("");
  CHECK_THROWS_AS((void)read_function_csv(empty), std::runtime_error);

  std::istringstream nometa("s0,s1,s2,re,im\n4,0,0,1,0\n");
  CHECK_THROWS_AS((void)read_function_csv(nometa), std::runtime_error);

  // header fine, but rows out of enumeration order
  const auto f = random_function(AlgebraId::A2, 2, GridKind::C, 603);
  std::stringstream buf;
  write_function_csv(buf, f);
  std::string text = buf.str();
  const auto a = text.find("\n2,0,0"), b = text.find("\n1,0,1");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  std::string swapped = text.substr(0, a) + text.substr(b, text.find('\n', b + 1) - b) +
                        text.substr(a, b - a) + text.substr(text.find('\n', b + 1));
  std::istringstream bad(swapped);
  CHECK_THROWS_AS((void)read_function_csv(bad), std::runtime_error);

  // wrong document type
  std::stringstream sbuf;
  write_spectrum_csv(sbuf, forward(f));
  CHECK_THROWS_AS((void)read_function_csv(sbuf), std::runtime_error);

  std::istringstream short_rows("# orbitx function algebra=a2 m=2 kind=c\ns0,s1,s2,re,im\n");
  CHECK_THROWS_AS((void)read_function_csv(short_rows), std::runtime_error);
}

TEST_CASE("grid CSV export lists every entry with its weight") {
  std::stringstream buf;
  write_grid_csv(buf, AlgebraId::A2, 3, GridKind::C, false);
  std::string line;
  std::getline(buf, line);
  CHECK(line == "algebra,m,kind,s0,s1,s2,sector,epsilon,x1,x2");
  std::size_t rows = 0;
  while (std::getline(buf, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 10);  // |F_3| for A2

  std::stringstream lbuf;
  write_grid_csv(lbuf, AlgebraId::G2, 2, GridKind::C, true);
  std::getline(lbuf, line);
  CHECK(line == "algebra,m,kind,t0,t1,t2,sector,h_dual,l1,l2");
  rows = 0;
  while (std::getline(lbuf, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
}

TEST_SUITE_END();
