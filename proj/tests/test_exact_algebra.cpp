#include <random>

#include "doctest.h"
#include "kci/errors.hpp"
#include "kci/ideal.hpp"
#include "kci/linalg.hpp"
#include "kci/ring.hpp"
#include "oracle.hpp"

using namespace kci;

namespace {

GradedRing qxy() { return GradedRing::polynomial({"x", "y"}); }

std::vector<Poly> polys(const GradedRing& r, std::initializer_list<const char*> s) {
  std::vector<Poly> out;
  for (auto* t : s) out.push_back(r.parse(t));
  return out;
}

GradedMatrix row_matrix(const GradedRing& r, std::initializer_list<const char*> entries) {
  return oracle::ideal_matrix(r.prime(), polys(r, entries));
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  const Coeff p = kDefaultPrime;
  for (Coeff a = 1; a < 500; ++a) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
  FieldScalar a(-3, 7);
  CHECK(a.value() == 4);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(symmetric_rep(p - 1, p) == -1);
}

TEST_CASE("make_graded_ring validates its input") {
  auto q = GradedRing::make(32003, {"x", "y"}, {1, 1}, std::vector<Poly>{});
  CHECK(q.is_polynomial_ring());
  auto r = GradedRing::make(2, {"x"}, {1}, std::vector<std::string>{"x^2"});
  CHECK(r.relations().size() == 1);
  CHECK_THROWS_AS(GradedRing::make(6, {"x"}, {1}, std::vector<Poly>{}), Error);
  try {
    GradedRing::make(32003, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "x + y^2"});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InhomogeneousRelation);
    CHECK(std::string(e.what()).find("relation 2") != std::string::npos);
  }
}

TEST_CASE("polynomial parsing and printing round-trip") {
  auto q = GradedRing::polynomial({"x", "y", "z"});
  for (const char* s : {"x^2 - y^2", "3*x*y*z + 1", "-x", "0", "x^3 - 2*x^2*y + 5*z^3", "-16001*x"}) {
    Poly f = q.parse(s);
    CHECK(q.to_string(f) == s);
    CHECK(q.parse(q.to_string(f)) == f);
  }
  CHECK(q.to_string(q.parse("(x+y)*(x-y)")) == "x^2 - y^2");
  try {
    q.parse("x + w^2", 4, 10);
    FAIL("expected an error");
  } catch (const ParseFailure& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(e.line() == 4);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(q.parse("x +"), ParseFailure);
  CHECK_THROWS_AS(q.parse("x y"), ParseFailure);
}

TEST_CASE("groebner_basis examples") {
  auto q = qxy();
  auto gb = groebner_basis(q.prime(), q.degrees(), polys(q, {"x^2", "x*y"}));
  auto b = basis_polys(gb);
  REQUIRE(b.size() == 2);
  CHECK(q.to_string(b[0]) == "x*y");
  CHECK(q.to_string(b[1]) == "x^2");

  // Hand Buchberger run: S(x^2 - y^2, xy) = y*(x^2-y^2) - x*(xy) = -y^3.
  auto gb2 = groebner_basis(q.prime(), q.degrees(), polys(q, {"x^2 - y^2", "x*y"}));
  auto b2 = basis_polys(gb2);
  REQUIRE(b2.size() == 3);
  CHECK(q.to_string(b2[0]) == "x*y");
  CHECK(q.to_string(b2[1]) == "x^2 - y^2");
  CHECK(q.to_string(b2[2]) == "y^3");

  auto gb0 = groebner_basis(q.prime(), q.degrees(), {});
  CHECK(gb0.elements().empty());
}

TEST_CASE("normal_form examples") {
  auto q = qxy();
  auto g1 = groebner_basis(q.prime(), q.degrees(), polys(q, {"x^2"}));
  CHECK(q.to_string(normal_form(q.parse("x^2 + y"), g1)) == "y");
  auto g2 = groebner_basis(q.prime(), q.degrees(), polys(q, {"x^2", "x*y"}));
  CHECK(normal_form(q.parse("x^2*y"), g2).is_zero());
  auto g3 = groebner_basis(q.prime(), q.degrees(), polys(q, {"x^2 - y^2", "x*y"}));
  CHECK(normal_form(q.parse("y^3 + x*y"), g3).is_zero());
}

TEST_CASE("syzygy_kernel examples") {
  auto qx = GradedRing::polynomial({"x"});
  CHECK(syzygy_kernel(qx, row_matrix(qx, {"x"})).cols() == 0);
  auto q = qxy();
  auto k = syzygy_kernel(q, row_matrix(q, {"x^2", "x*y"}));
  REQUIRE(k.cols() == 1);
  CHECK(k.col_twists()[0] == 3);
  Poly a = k.at(0, 0), b = k.at(1, 0);
  CHECK((q.parse("x^2") * a + q.parse("x*y") * b).is_zero());
  CHECK(q.to_string(a) == "y");
  CHECK(q.to_string(b) == "-x");
  CHECK(syzygy_kernel(q, GradedMatrix::identity(q.prime(), {0, 0})).cols() == 0);
}

TEST_CASE("syzygy_kernel over a quotient ring") {
  auto r = GradedRing::make(kDefaultPrime, {"x"}, {1}, std::vector<std::string>{"x^2"});
  auto k = syzygy_kernel(r, row_matrix(r, {"x"}));
  REQUIRE(k.cols() == 1);
  CHECK(r.to_string(k.at(0, 0)) == "x");
}

TEST_CASE("krull_dimension examples") {
  auto q = qxy();
  CHECK(krull_dimension(q, polys(q, {"x^2", "y^2"})) == 0);
  CHECK(krull_dimension(q, polys(q, {"x^2", "x*y"})) == 1);
  CHECK(krull_dimension(q, {}) == 2);
  CHECK(krull_dimension(q, polys(q, {"1"})) == -1);
}

TEST_CASE("minimal_generators examples") {
  auto q = qxy();
  auto m = minimal_generators(q, polys(q, {"x^2", "x*y", "x^2 + x*y"}));
  REQUIRE(m.size() == 2);
  CHECK(q.to_string(m[0]) == "x^2");
  CHECK(q.to_string(m[1]) == "x*y");
  CHECK(minimal_generators(q, polys(q, {"x", "x^2"})).size() == 1);
  CHECK(minimal_generators(q, polys(q, {"x^2 - y^2", "x*y", "y^3"})).size() == 2);
}

TEST_CASE("annihilator examples") {
  auto q = qxy();
  auto a1 = annihilator(q, row_matrix(q, {"x^2"}));
  REQUIRE(a1.size() == 1);
  CHECK(q.to_string(a1[0]) == "x^2");
  CHECK(annihilator(q, free_presentation(q.prime(), {0, 0})).empty());
  std::vector<Vec> cols{Vec::from_poly(q.parse("x"), 0), Vec::from_poly(q.parse("y"), 1)};
  auto p = GradedMatrix::from_columns(q.prime(), {0, 0}, {1, 1}, cols);
  auto a3 = annihilator(q, p);
  REQUIRE(a3.size() == 1);
  CHECK(q.to_string(a3[0]) == "x*y");
  // Elementwise oracle: a in degree d annihilates iff a*e_i lies in im p.
  for (int d = 0; d <= 4; ++d)
    for (auto& mono : monomials_of_degree(d, q.degrees())) {
      Poly a = Poly::monomial(q.prime(), mono);
      bool ann = oracle::member(q, p, Vec::from_poly(a, 0), d) && oracle::member(q, p, Vec::from_poly(a, 1), d);
      bool ours = normal_form(a, groebner_basis(q.prime(), q.degrees(), a3)).is_zero();
      CHECK(ann == ours);
    }
}

TEST_CASE("hilbert_function examples") {
  auto qx = GradedRing::polynomial({"x"});
  CHECK(hilbert_function(qx, row_matrix(qx, {"x^2"}), 3) == std::vector<long>{1, 1, 0, 0});
  auto q = qxy();
  CHECK(hilbert_function(q, free_presentation(q.prime(), {0}), 2) == std::vector<long>{1, 2, 3});
  CHECK(hilbert_function(q, row_matrix(q, {"x^2", "x*y"}), 3) == std::vector<long>{1, 2, 1, 1});
}

TEST_CASE("radical tests") {
  auto q = qxy();
  CHECK(in_radical(q, polys(q, {"x^2", "x*y"}), q.parse("x")));
  CHECK_FALSE(in_radical(q, polys(q, {"x^2", "x*y"}), q.parse("y")));
  CHECK(same_radical(q, polys(q, {"x^3"}), polys(q, {"x"})));
  // V(x) in Proj k[x,y] is one point; V(x*y) contains it.
  CHECK(proj_contained(q, polys(q, {"x"}), polys(q, {"x*y"})));
  CHECK_FALSE(proj_contained(q, polys(q, {"x*y"}), polys(q, {"x"})));
  // The irrelevant ideal cuts out nothing.
  CHECK(proj_contained(q, polys(q, {"x", "y"}), polys(q, {"1"})));
  auto i = intersect(q, polys(q, {"x"}), polys(q, {"y"}));
  REQUIRE(i.size() == 1);
  CHECK(q.to_string(i[0]) == "x*y");
}

TEST_CASE("normal form is additive and GB is idempotent") {
  auto q = GradedRing::polynomial({"x", "y", "z"});
  std::mt19937 rng(7);
  auto random_poly = [&](int d) {
    std::vector<Term> t;
    for (auto& m : monomials_of_degree(d, q.degrees()))
      if (rng() % 3 == 0) t.push_back({m, static_cast<Coeff>(rng() % q.prime())});
    return Poly::from_terms(q.prime(), t);
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens{random_poly(2), random_poly(2), random_poly(3)};
    auto gb = groebner_basis(q.prime(), q.degrees(), gens);
    auto again = groebner_basis(q.prime(), q.degrees(), basis_polys(gb));
    CHECK(basis_polys(again) == basis_polys(gb));
    Poly f = random_poly(4), g = random_poly(4);
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
    // every input reduces to zero
    for (auto& h : gens) CHECK(normal_form(h, gb).is_zero());
  }
}

TEST_CASE("syzygies agree with per-degree kernels") {
  auto q = GradedRing::polynomial({"x", "y", "z"});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Vec> cols;
    std::vector<int> ctw;
    const std::vector<int> rtw{0, 1};
    for (int j = 0; j < 3; ++j) {
      const int deg = 2 + static_cast<int>(rng() % 2);
      std::vector<VTerm> t;
      for (int i = 0; i < 2; ++i)
        for (auto& m : monomials_of_degree(deg - rtw[i], q.degrees()))
          if (rng() % 4 == 0) t.push_back({m, i, static_cast<Coeff>(1 + rng() % 50)});
      cols.push_back(Vec::from_terms(q.prime(), t));
      ctw.push_back(deg);
    }
    auto m = GradedMatrix::from_columns(q.prime(), rtw, ctw, cols);
    auto k = syzygy_kernel(q, m);
    auto prod = m * k;
    CHECK(prod.is_zero());
    for (int d = 0; d <= 6; ++d)
      for (auto& v : oracle::kernel_in_degree(q, m, d)) CHECK(oracle::member(q, k, v, d));
  }
}

TEST_CASE("krull_dimension matches the Hilbert growth oracle on monomial ideals") {
  auto q = GradedRing::polynomial({"x", "y", "z"});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Poly> gens;
    const int ngens = static_cast<int>(rng() % 5);
    for (int g = 0; g < ngens; ++g) {
      std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      if (e == std::vector<int>{0, 0, 0}) e[rng() % 3] = 1;
      gens.push_back(Poly::monomial(q.prime(), q.monomial(e)));
    }
    CHECK(krull_dimension(q, gens) == oracle::krull_from_growth(q, gens, 8));
  }
  CHECK(krull_dimension(q, {}) == 3);
}

TEST_CASE("minimal generator count is invariant under change of generators") {
  auto q = qxy();
  auto gens = polys(q, {"x^2", "x*y", "y^2", "x^2 + y^2"});
  auto base = minimal_generators(q, gens).size();
  CHECK(base == 3);
  // invertible homogeneous change within degree 2
  std::vector<Poly> mixed{gens[0] + gens[1], gens[1].scaled(5), gens[2] - gens[0], gens[3] + gens[1]};
  CHECK(minimal_generators(q, mixed).size() == base);
}

TEST_CASE("prune_presentation removes unit relations") {
  auto q = qxy();
  // coker [[1, x],[0, y]] with rows twists 0, 0 is Q/(y) after pruning; the
  // second column rewrites to (0, y).
  std::vector<Vec> cols{Vec::from_poly(q.one(), 0),
                        Vec::from_poly(q.parse("x"), 0) + Vec::from_poly(q.parse("y"), 1)};
  auto p = GradedMatrix::from_columns(q.prime(), {0, 0}, {0, 1}, cols);
  auto pruned = prune_presentation(q, p);
  CHECK(pruned.rows() == 1);
  CHECK(pruned.cols() == 1);
  CHECK(q.to_string(pruned.at(0, 0)) == "y");
  CHECK(hilbert_function(q, pruned, 3) == hilbert_function(q, p, 3));
}

TEST_CASE("dense linear algebra") {
  DenseMatrix m(7, 2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (auto& v : ns) CHECK(m.apply(v) == std::vector<Coeff>{0, 0});
  CHECK(solve(m, {1, 2}).has_value());
  CHECK_FALSE(solve(m, {1, 3}).has_value());
  Span s(7, 3);
  CHECK(s.insert({1, 2, 3}));
  CHECK_FALSE(s.insert({2, 4, 6}));
  CHECK(s.contains({3, 6, 2}));
}
