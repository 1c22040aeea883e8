#include "doctest.h"
#include "kci/ci.hpp"
#include "kci/errors.hpp"
#include "kci/ideal.hpp"

using namespace kci;

namespace {

std::vector<Poly> polys(const GradedRing& r, std::initializer_list<const char*> s) {
  std::vector<Poly> out;
  for (auto* t : s) out.push_back(r.parse(t));
  return out;
}

GradedMatrix residue_field(const GradedRing& q) {
  GradedMatrix m(q.prime(), {0}, std::vector<int>(q.nvars(), 1));
  for (int i = 0; i < q.nvars(); ++i) m.set(0, i, q.var(i));
  return m;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolated;
}

/// d~_{s-1} d~_s == sum_j f_j t~_j over Q in every degree.
bool operator_identity(const EisenbudOperators& ops) {
  const FreeComplex& g = ops.window;
  for (int s = g.lo(); s <= g.hi(); ++s) {
    if (g.rank(s - 2) == 0) continue;
    GradedMatrix lhs = g.d(s - 1) * g.d(s);
    GradedMatrix rhs(lhs.modulus(), lhs.row_twists(), lhs.col_twists());
    for (std::size_t j = 0; j < ops.f.size(); ++j) {
      const GradedMatrix& t = ops.lifted[j][s - g.lo()];
      for (int a = 0; a < t.rows(); ++a)
        for (int b = 0; b < t.cols(); ++b) rhs.add_to(a, b, t.at(a, b) * ops.f[j]);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ci_check examples") {
  auto q = GradedRing::polynomial({"x", "y"});
  auto ci = ci_check(q, polys(q, {"x^2", "y^2"}));
  CHECK(ci.oracle_ci);
  CHECK(ci.variety_ci);
  CHECK(ci.agree());
  CHECK(ci.stable);
  CHECK(ci.krull == 0);

  auto non = ci_check(q, polys(q, {"x^2", "x*y"}));
  CHECK_FALSE(non.oracle_ci);
  CHECK_FALSE(non.variety_ci);
  CHECK(non.agree());
  CHECK(non.krull == 1);

  auto qx = GradedRing::polynomial({"x"});
  CHECK(ci_check(qx, polys(qx, {"x^2"})).variety_ci);

  // minimization happens first: x^2*y is redundant
  auto red = ci_check(q, polys(q, {"x^2", "y^2", "x^2*y"}));
  CHECK(red.mu == 2);
  CHECK(code_of([&] { ci_check(q, polys(q, {"x", "y^2"})); }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("eisenbud_operators") {
  auto rx = GradedRing::make(kDefaultPrime, {"x"}, {1}, std::vector<std::string>{"x^2"});
  auto ops = eisenbud_operators(rx, residue_field(rx.ambient()), 5);
  CHECK(operator_identity(ops));
  for (int s = 2; s <= 5; ++s) CHECK(ops.t[0].at(s).at(0, 0) == rx.one());

  auto r = GradedRing::make(kDefaultPrime, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "y^2"});
  auto ops2 = eisenbud_operators(r, residue_field(r.ambient()), 5);
  CHECK(ops2.t.size() == 2);
  CHECK(operator_identity(ops2));
  for (auto& t : ops2.t) CHECK_FALSE(t.first_failure().has_value());

  auto free = eisenbud_operators(r, GradedMatrix(r.prime(), {0}, {}), 4);
  CHECK(free.window.hi() == 0);
  for (auto& t : free.t)
    for (auto& m : t.components) CHECK(m.is_zero());

  auto non = GradedRing::make(kDefaultPrime, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "x*y"});
  CHECK(code_of([&] { eisenbud_operators(non, residue_field(non.ambient()), 4); }) == ErrorCode::NotCertifiedCI);
  CHECK(code_of([&] { eisenbud_operators(r, residue_field(r.ambient()), 1); }) == ErrorCode::WindowTooSmall);
}

TEST_CASE("proxy witnesses and fault detection") {
  auto rx = GradedRing::make(kDefaultPrime, {"x"}, {1}, std::vector<std::string>{"x^2"});
  auto r2 = GradedRing::make(kDefaultPrime, {"x", "y"}, {1, 1}, std::vector<std::string>{"x^2", "y^2"});
  for (const auto& r : {rx, r2}) {
    auto w = proxy_witness(r, residue_field(r.ambient()), default_smax(r));
    CHECK(w.trace.size() == r.relations().size());
    CHECK_FALSE(w.perfect.is_zero());
    auto rep = verify_witness(w);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? std::string() : rep.failures.front()));
    CHECK(same_support(r, w.module_support, w.perfect_support));

    auto trivial = w;
    trivial.perfect = FreeComplex::zero(r);
    CHECK_FALSE(verify_witness(trivial).ok);

    auto cut = w;
    cut.trace.erase(cut.trace.begin());
    CHECK_FALSE(verify_witness(cut).ok);

    auto wrong = w;
    wrong.perfect_support.ideal = {r.ambient().one()};
    wrong.perfect_support.dimension = -1;
    CHECK_FALSE(verify_witness(wrong).ok);
  }
  auto w = proxy_witness(r2, GradedMatrix(r2.prime(), {0}, {}), default_smax(r2));
  CHECK(w.trace.empty());
  CHECK(w.perfect == FreeComplex::single(r2, 0, {0}));
  CHECK(verify_witness(w).ok);
}

TEST_CASE("non_ci_probe") {
  auto q = GradedRing::polynomial({"x", "y"});
  auto a = chi_ring(2);
  auto ci = non_ci_probe(q, polys(q, {"x^2", "y^2"}), {a.var(0), a.var(1)});
  CHECK(ci.ve_r.empty());
  CHECK(ci.contained_in_all);
  CHECK(ci.ve_k.dimension == 1);
  for (std::size_t i = 0; i < 2; ++i) CHECK(same_variety(ci.ve_cones[i], variety_of_elements(a, {a.var(static_cast<int>(i))})));

  auto non = non_ci_probe(q, polys(q, {"x^2", "x*y"}), {a.var(0), a.var(1)});
  CHECK_FALSE(non.ve_r.empty());
  CHECK_FALSE(non.contained_in_all);
  CHECK_FALSE(non.escaping.empty());

  auto bare = non_ci_probe(q, polys(q, {"x^2", "x*y"}), {});
  CHECK_FALSE(bare.contained_in_all);
}

TEST_CASE("operator identities on every complete intersection of the suite") {
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> suite{
      {{"x"}, {"x^2"}},           {{"x"}, {"x^3"}},           {{"x", "y"}, {"x^2", "y^2"}},
      {{"x", "y"}, {"x^2", "y^3"}}, {{"x", "y"}, {"x^2", "x*y"}}, {{"x", "y"}, {"x^2", "x*y", "y^2"}},
      {{"x", "y"}, {"x*y"}},        {{"x", "y"}, {"x^2 - y^2", "x*y"}},
  };
  int certified = 0;
  for (auto& [vars, rel] : suite) {
    auto r = GradedRing::make(kDefaultPrime, vars, std::vector<int>(vars.size(), 1), rel);
    auto q = r.ambient();
    if (krull_dimension(q, r.relations()) != q.nvars() - static_cast<int>(rel.size())) {
      CHECK(code_of([&] { eisenbud_operators(r, residue_field(q), 4); }) == ErrorCode::NotCertifiedCI);
      continue;
    }
    ++certified;
    auto ops = eisenbud_operators(r, residue_field(q), 6);
    CHECK(operator_identity(ops));
    for (auto& t : ops.t) CHECK_FALSE(t.first_failure().has_value());
    auto w = proxy_witness(r, residue_field(q), default_smax(r));
    CHECK(verify_witness(w).ok);
  }
  CHECK(certified == 6);
}
