#include "doctest.h"
#include "kci/complex.hpp"
#include "kci/errors.hpp"
#include "kci/ideal.hpp"
#include "random_complex.hpp"

using namespace kci;

namespace {

std::vector<Poly> polys(const GradedRing& r, std::initializer_list<const char*> s) {
  std::vector<Poly> out;
  for (auto* t : s) out.push_back(r.parse(t));
  return out;
}

bool all_homology_zero(const FreeComplex& c) {
  for (int s = c.lo(); s <= c.hi(); ++s)
    if (!complex_homology(c, s).is_zero()) return false;
  return true;
}

std::vector<long> ranks(const FreeComplex& c, int d_max) {
  // total dimension of H_s in degrees <= d_max, per s
  std::vector<long> out;
  for (int s = c.lo(); s <= c.hi(); ++s) {
    long t = 0;
    for (long v : homology_hilbert(c, s, d_max)) t += v;
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("koszul_complex examples") {
  auto qx = GradedRing::polynomial({"x"});
  auto k = koszul_complex(qx, polys(qx, {"x"}));
  CHECK(k.rank(0) == 1);
  CHECK(k.rank(1) == 1);
  CHECK(k.twists(1) == std::vector<int>{1});
  CHECK(homology_hilbert(k, 0, 3) == std::vector<long>{1, 0, 0, 0});
  CHECK(complex_homology(k, 1).is_zero());

  auto q = GradedRing::polynomial({"x", "y"});
  auto k2 = koszul_complex(q, polys(q, {"x^2", "x*y"}));
  auto h1 = complex_homology(k2, 1);
  CHECK_FALSE(h1.is_zero());
  REQUIRE(h1.cycles.cols() == 1);
  CHECK(q.to_string(h1.cycles.at(0, 0)) == "y");
  CHECK(q.to_string(h1.cycles.at(1, 0)) == "-x");

  auto k0 = koszul_complex(q, {});
  CHECK(k0.lo() == 0);
  CHECK(k0.hi() == 0);
  CHECK(k0.rank(0) == 1);
}

TEST_CASE("koszul differential signs") {
  auto q = GradedRing::polynomial({"x", "y", "z"});
  auto k = koszul_complex(q, polys(q, {"x", "y", "z"}));
  CHECK(k.rank(2) == 3);
  CHECK_FALSE(k.first_d2_failure().has_value());
  // d(xi_0 xi_1) = x xi_1 - y xi_0
  auto d2 = k.d(2);
  CHECK(q.to_string(d2.at(0, 0)) == "-y");
  CHECK(q.to_string(d2.at(1, 0)) == "x");
  for (int s = 1; s <= 3; ++s) CHECK(complex_homology(k, s).is_zero());
}

TEST_CASE("shift_complex") {
  auto q = GradedRing::polynomial({"x", "y"});
  auto k = koszul_complex(q, polys(q, {"x^2", "x*y"}));
  CHECK(shift_complex(shift_complex(k, 1), 1) == shift_complex(k, 2));
  CHECK(shift_complex(k, 0) == k);
  auto s = shift_complex(k, 3);
  for (int i = 0; i <= 2; ++i)
    CHECK(homology_hilbert(s, i + 3, 6) == homology_hilbert(k, i, 6));
}

TEST_CASE("mapping_cone") {
  auto q = GradedRing::polynomial({"x", "y"});
  auto k = koszul_complex(q, polys(q, {"x^2", "x*y"}));
  CHECK(all_homology_zero(mapping_cone(identity_map(k))));

  auto c0 = mapping_cone(zero_map(k, k, 0));
  auto sum = direct_sum(k, shift_complex(k, 1));
  for (int s = -1; s <= 4; ++s) CHECK(homology_hilbert(c0, s, 6) == homology_hilbert(sum, s, 6));

  auto qx = GradedRing::polynomial({"x"});
  auto kx = koszul_complex(qx, polys(qx, {"x"}));
  auto cone = mapping_cone(scalar_map(kx, qx.parse("x")));
  auto kxx = koszul_complex(qx, polys(qx, {"x", "x"}));
  CHECK(ranks(cone, 8) == ranks(kxx, 8));

  // a non-chain map is rejected
  ChainMap bad = zero_map(kx, kx, 0);
  bad.components[0].set(0, 0, qx.one());
  try {
    mapping_cone(bad);
    FAIL("expected NotAChainMap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAChainMap);
  }
}

TEST_CASE("tensor_koszul") {
  auto r = GradedRing::make(kDefaultPrime, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "x*y"});
  auto c = FreeComplex::single(r, 0, {0});
  auto t = tensor_koszul(c, polys(r, {"x", "y"}));
  auto supp = complex_support(t);
  CHECK(supp.dimension == 0);
  CHECK(same_radical(r.ambient(), supp.ideal, polys(r, {"x", "y"})));
  CHECK(tensor_koszul(c, {}) == c);

  auto q = GradedRing::polynomial({"x", "y", "z"});
  auto k = koszul_complex(q, polys(q, {"x^2", "y*z"}));
  for (int n = 0; n <= 3; ++n) {
    auto all = polys(q, {"x", "y", "z"});
    std::vector<Poly> x(all.begin(), all.begin() + n);
    auto tk = tensor_koszul(k, x);
    for (int s = 0; s <= k.hi() + n; ++s) {
      int expect = 0;
      for (int i = 0; i <= n; ++i) {
        int binom = 1;
        for (int j = 0; j < i; ++j) binom = binom * (n - j) / (j + 1);
        expect += k.rank(s - i) * binom;
      }
      CHECK(tk.rank(s) == expect);
    }
  }
}

TEST_CASE("complex_homology examples") {
  auto q = GradedRing::polynomial({"x", "y"});
  auto k = koszul_complex(q, polys(q, {"x^2", "y^2"}));
  CHECK(homology_hilbert(k, 0, 4) == std::vector<long>{1, 2, 1, 0, 0});
  CHECK(complex_homology(k, 1).is_zero());
  CHECK(complex_homology(k, 2).is_zero());
  CHECK(all_homology_zero(FreeComplex::zero(q)));
  CHECK(default_degree_cap(k) == 14);
}

TEST_CASE("complex_support examples") {
  auto r = GradedRing::make(kDefaultPrime, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "x*y"});
  auto whole = complex_support(FreeComplex::single(r, 0, {0}));
  CHECK(whole.dimension == 1);
  CHECK(same_radical(r.ambient(), whole.ideal, polys(r, {"x"})));
  auto q = GradedRing::polynomial({"x", "y"});
  auto exact = complex_support(mapping_cone(identity_map(koszul_complex(q, polys(q, {"x"})))));
  CHECK(exact.empty());
}

TEST_CASE("cone support invariance on random chain maps") {
  for (int which = 0; which < 2; ++which) {
    auto ring = which == 0 ? testing_support::ring_x2() : testing_support::ring_x2_xy();
    for (int seed = 0; seed < 4; ++seed) {
      auto sample = testing_support::random_cone_case(ring, static_cast<unsigned>(100 * which + seed));
      auto base = complex_support(sample.map.source);
      auto cone = complex_support(mapping_cone(sample.map));
      CHECK(same_support(ring, base, cone));
    }
  }
}

TEST_CASE("triangle subset for degree-zero maps") {
  auto ring = testing_support::ring_x2_xy();
  for (int seed = 0; seed < 3; ++seed) {
    auto c = testing_support::random_window(ring, static_cast<unsigned>(seed), 3);
    auto f = scalar_map(c, ring.parse("y"));
    auto cone = complex_support(mapping_cone(f));
    auto src = complex_support(c);
    CHECK(support_contained(ring, cone, src));
  }
}
