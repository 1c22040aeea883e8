#include "kci/ci.hpp"

#include "kci/dg.hpp"
#include "kci/errors.hpp"
#include "kci/ideal.hpp"

namespace kci {

namespace {

std::vector<int> plus(std::vector<int> v, int w) {
  for (auto& x : v) x += w;
  return v;
}

GradedMatrix residue_field(const GradedRing& q) {
  GradedMatrix m(q.prime(), {0}, std::vector<int>(q.nvars(), 1));
  for (int i = 0; i < q.nvars(); ++i) m.set(0, i, q.var(i));
  return m;
}

/// Minimal generators of the relations, checked to form a regular sequence.
std::vector<Poly> certified_sequence(const GradedRing& r) {
  const GradedRing q = r.ambient();
  auto f = minimal_generators(q, r.relations());
  if (krull_dimension(q, f) != q.nvars() - static_cast<int>(f.size()))
    throw Error(ErrorCode::NotCertifiedCI, "the relations do not form a regular sequence");
  return f;
}

/// The complex in degrees lo..cut-1.
FreeComplex below(const FreeComplex& c, int cut) {
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  for (int s = c.lo(); s < cut; ++s) {
    tw.push_back(c.twists(s));
    ds.push_back(s == c.lo() ? GradedMatrix(c.ring().prime(), {}, c.twists(s)) : c.d(s));
  }
  return FreeComplex(c.ring(), c.lo(), std::move(tw), std::move(ds));
}

/// Lowest degree above lo with a zero component, if it is at most limit.
std::optional<int> first_gap(const FreeComplex& c, int limit) {
  for (int s = c.lo() + 1; s <= limit; ++s)
    if (c.rank(s) == 0) return s;
  return std::nullopt;
}

bool has_homology(const FreeComplex& c) {
  for (int s = c.lo(); s <= c.hi(); ++s)
    if (!complex_homology(c, s).is_zero()) return true;
  return false;
}

struct Build {
  FreeComplex start;
  std::vector<ConeStep> trace;
  FreeComplex perfect;
  int cut = 0;
};

Build build_witness(const GradedRing& r, const GradedMatrix& presentation, int s_max) {
  EisenbudOperators ops = eisenbud_operators(r, presentation, s_max);
  Build b;
  b.start = ops.window;
  FreeComplex cur = ops.window;
  if (auto gap = first_gap(cur, s_max)) {
    b.cut = *gap;
    b.perfect = below(cur, b.cut);
    return b;
  }
  for (std::size_t j = 0; j < ops.f.size(); ++j) {
    EisenbudOperators here = complex_operators(r, ops.f, cur);
    cur = minimize_complex(mapping_cone(here.t[j]));
    b.trace.push_back({static_cast<int>(j), 2, cur});
  }
  auto gap = first_gap(cur, s_max);
  if (!gap)
    throw Error(ErrorCode::NotPerfectAtBound,
                "no zero component below degree " + std::to_string(s_max) + " after coning every operator");
  b.cut = *gap;
  b.perfect = below(cur, b.cut);
  return b;
}

}  // namespace

CIVerdict ci_check(const GradedRing& qin, const std::vector<Poly>& f, int n_bound) {
  const GradedRing q = qin.ambient();
  for (auto& g : f)
    if (g.is_zero() || !g.is_homogeneous())
      throw Error(ErrorCode::InhomogeneousInput, "relations must be nonzero and homogeneous");
  CIVerdict v;
  v.q = q;
  v.f = minimal_generators(q, f);
  v.mu = static_cast<int>(v.f.size());
  KoszulAlgebra e(q, v.f);
  if (!e.in_n_squared()) throw Error(ErrorCode::HypothesisViolated, "every minimal relation must lie in n^2");
  v.krull = krull_dimension(q, v.f);
  v.oracle_ci = v.krull == q.nvars() - v.mu;
  auto s = stable_support(e, GradedMatrix(q.prime(), {0}, {}), n_bound);
  v.variety = s.variety;
  v.variety_ci = s.variety.empty();
  v.bound = n_bound;
  v.stable = s.stable;
  return v;
}

EisenbudOperators complex_operators(const GradedRing& r, const std::vector<Poly>& f, const FreeComplex& g) {
  const GradedRing q = r.ambient();
  const Coeff p = r.prime();
  EisenbudOperators out;
  out.r = r;
  out.f = f;
  out.window = g;
  const int n = static_cast<int>(f.size());
  out.lifted.resize(n);
  for (int s = g.lo(); s <= g.hi(); ++s) {
    std::vector<GradedMatrix> ts;
    for (int j = 0; j < n; ++j) ts.emplace_back(p, g.twists(s - 2), plus(g.twists(s), -f[j].degree()));
    if (g.rank(s - 2) > 0) {
      GradedMatrix sq = g.d(s - 1) * g.d(s);
      for (int a = 0; a < sq.rows(); ++a)
        for (int b = 0; b < sq.cols(); ++b) {
          if (sq.at(a, b).is_zero()) continue;
          auto w = division_witnesses(q, {sq.at(a, b)}, f);
          for (int j = 0; j < n; ++j) ts[j].set(a, b, w[0][j]);
        }
    }
    for (int j = 0; j < n; ++j) out.lifted[j].push_back(std::move(ts[j]));
  }
  for (int j = 0; j < n; ++j) {
    ChainMap t{g, g, -2, -f[j].degree(), {}};
    for (auto& m : out.lifted[j]) {
      GradedMatrix red(p, m.row_twists(), m.col_twists());
      for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b) red.set(a, b, r.reduce(m.at(a, b)));
      t.components.push_back(std::move(red));
    }
    if (auto s = t.first_failure())
      throw Error(ErrorCode::InvariantViolated,
                  "operator " + std::to_string(j + 1) + " is not a chain map at degree " + std::to_string(*s));
    out.t.push_back(std::move(t));
  }
  return out;
}

EisenbudOperators eisenbud_operators(const GradedRing& r, const GradedMatrix& presentation, int s_max) {
  if (s_max < 2) throw Error(ErrorCode::WindowTooSmall, "a degree -2 operator needs s_max >= 2");
  auto f = certified_sequence(r);
  FreeComplex window = resolution_window(r, presentation, s_max);
  return complex_operators(r, f, window);
}

int default_smax(const GradedRing& r) { return 2 * r.nvars() + 4; }

ProxyWitness proxy_witness(const GradedRing& r, const GradedMatrix& presentation, int s_max) {
  Build b = build_witness(r, presentation, s_max);
  Build again = build_witness(r, presentation, s_max + 2);
  if (!(again.perfect == b.perfect))
    throw Error(ErrorCode::NotPerfectAtBound,
                "the perfect piece changes between s_max = " + std::to_string(s_max) + " and " +
                    std::to_string(s_max + 2));
  ProxyWitness w;
  w.r = r;
  w.module = presentation;
  w.s_max = s_max;
  w.start = std::move(b.start);
  w.trace = std::move(b.trace);
  w.perfect = std::move(b.perfect);
  w.cut = b.cut;
  w.module_support = module_support(r, presentation);
  w.perfect_support = complex_support(w.perfect);
  return w;
}

WitnessReport verify_witness(const ProxyWitness& w) {
  WitnessReport rep;
  auto fail = [&](std::string m) {
    rep.ok = false;
    rep.failures.push_back(std::move(m));
  };
  try {
    EisenbudOperators ops = eisenbud_operators(w.r, w.module, w.s_max);
    if (!(ops.window == w.start)) fail("start does not match the resolution window");
    FreeComplex cur = w.start;
    const bool bounded = first_gap(w.start, w.s_max).has_value();
    if (!bounded && w.trace.size() != ops.f.size()) fail("trace does not cone every operator");
    for (std::size_t i = 0; i < w.trace.size(); ++i) {
      const ConeStep& st = w.trace[i];
      if (st.op != static_cast<int>(i) || st.shift != 2) {
        fail("step " + std::to_string(i + 1) + " uses the wrong operator");
        break;
      }
      EisenbudOperators here = complex_operators(w.r, ops.f, cur);
      FreeComplex next = minimize_complex(mapping_cone(here.t[st.op]));
      if (!(next == st.complex)) fail("step " + std::to_string(i + 1) + " does not replay");
      cur = st.complex;
    }
    if (cur.rank(w.cut) != 0 || w.cut <= cur.lo()) fail("the cut is not at a zero component");
    if (!(below(cur, w.cut) == w.perfect)) fail("the perfect complex is not the piece below the cut");
  } catch (const Error& e) {
    fail(std::string("replay raised ") + e.what());
  }
  if (w.perfect.is_zero() || !has_homology(w.perfect)) fail("the perfect complex is trivial");
  const SupportSet ms = module_support(w.r, w.module);
  const SupportSet ps = complex_support(w.perfect);
  if (!same_support(w.r, ms, w.module_support)) fail("module support certificate is wrong");
  if (!same_support(w.r, ps, w.perfect_support)) fail("perfect support certificate is wrong");
  if (!same_support(w.r, ms, ps)) fail("supports differ");
  return rep;
}

ProbeReport non_ci_probe(const GradedRing& qin, const std::vector<Poly>& f, const std::vector<Poly>& g,
                         int n_bound) {
  const GradedRing q = qin.ambient();
  auto fm = minimal_generators(q, f);
  KoszulAlgebra e(q, fm);
  if (!e.in_n_squared()) throw Error(ErrorCode::HypothesisViolated, "every minimal relation must lie in n^2");
  ProbeReport rep;
  rep.ve_r = support_variety(ext_module(e, GradedMatrix(q.prime(), {0}, {}), n_bound));
  rep.ve_k = support_variety(ext_module(e, residue_field(q), n_bound));
  if (g.empty()) {
    rep.contained_in_all = rep.ve_r.empty();
    return rep;
  }
  std::vector<Poly> vars;
  for (int i = 0; i < q.nvars(); ++i) vars.push_back(q.var(i));
  auto u = u_construction(koszul_action(e, vars), n_bound);
  const GradedRing a = chi_ring(e.n(), q.prime());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto c = c_tilde(u, a, g[i]);
    rep.ve_cones.push_back(support_variety(ext_from_collapse(collapse(c), n_bound - 2)));
    if (!variety_contained(rep.ve_r, variety_of_elements(a, {g[i]}))) {
      rep.contained_in_all = false;
      rep.escaping.push_back(static_cast<int>(i));
    }
  }
  return rep;
}

}  // namespace kci
