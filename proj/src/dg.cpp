#include "kci/dg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "kci/errors.hpp"
#include "kci/ideal.hpp"

namespace kci {

namespace {

using Column = std::vector<std::pair<int, Poly>>;

GradedMatrix assemble(Coeff p, std::vector<int> rows, std::vector<int> cols, const std::vector<Column>& entries) {
  GradedMatrix m(p, std::move(rows), std::move(cols));
  for (std::size_t j = 0; j < entries.size(); ++j)
    for (auto& [i, f] : entries[j]) m.add_to(i, static_cast<int>(j), f);
  return m;
}

std::vector<int> plus(std::vector<int> v, int w) {
  for (auto& x : v) x += w;
  return v;
}

Coeff sign(int k, Coeff p) { return (k % 2 == 0) ? 1 : p - 1; }

Coeff sign_of(int s, Coeff p) { return s > 0 ? 1 : p - 1; }

/// Sign of d xi_S at j: (-1)^{#{k in S : k < j}}.
int position_sign(unsigned subset, int j) { return (std::popcount(subset & ((1u << j) - 1u)) % 2 == 0) ? 1 : -1; }

bool is_zero_matrix(const GradedMatrix& m) { return m.is_zero(); }

bool equals_scalar(const GradedMatrix& m, const Poly& f) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& e = m.at(i, j);
      if (i == j ? !(e == f) : !e.is_zero()) return false;
    }
  return true;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

}  // namespace

// ---------------------------------------------------------------- algebra

KoszulAlgebra::KoszulAlgebra(GradedRing q, std::vector<Poly> f) : q_(std::move(q)), f_(std::move(f)) {
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].is_zero() || !f_[i].is_homogeneous())
      throw Error(ErrorCode::InhomogeneousInput, "f" + std::to_string(i + 1) + " must be nonzero and homogeneous");
    degs_.push_back(f_[i].degree());
  }
}

int KoszulAlgebra::twist(unsigned subset) const {
  int t = 0;
  for (int j = 0; j < n(); ++j)
    if ((subset >> j) & 1u) t += degs_[j];
  return t;
}

FreeComplex KoszulAlgebra::complex() const { return koszul_complex(q_, f_); }

bool KoszulAlgebra::in_n_squared() const {
  for (auto& g : f_)
    for (auto& t : g.terms())
      if (t.m.total_exponent() < 2) return false;
  return true;
}

bool KoszulAlgebra::is_minimal() const { return minimal_generators(q_, f_).size() == f_.size(); }

int exterior_sign(unsigned s, unsigned t) {
  if (s & t) return 0;
  int inv = 0;
  for (unsigned rest = s; rest; rest &= rest - 1) {
    const int a = std::countr_zero(rest);
    inv += std::popcount(t & ((1u << a) - 1u));
  }
  return inv % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- modules

DGEModule::DGEModule(FreeComplex complex, std::vector<Poly> f, std::vector<std::vector<GradedMatrix>> lambda)
    : c_(std::move(complex)), f_(std::move(f)), lambda_(std::move(lambda)) {
  lambda_.resize(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) {
    auto& li = lambda_[i];
    if (li.size() > static_cast<std::size_t>(c_.hi() - c_.lo() + 1))
      throw Error(ErrorCode::DimensionMismatch, "too many action components");
    for (std::size_t k = 0; k < li.size(); ++k) {
      const int s = c_.lo() + static_cast<int>(k);
      if (li[k].row_twists() != c_.twists(s + 1) || li[k].col_twists() != plus(c_.twists(s), f_[i].degree()))
        throw Error(ErrorCode::DimensionMismatch,
                    "action " + std::to_string(i + 1) + " in degree " + std::to_string(s) + " has the wrong shape");
    }
  }
}

DGEModule DGEModule::zero(const KoszulAlgebra& e) { return DGEModule(FreeComplex::zero(e.base()), e.f(), {}); }

GradedMatrix DGEModule::lambda(int i, int s) const {
  const int k = s - c_.lo();
  if (k >= 0 && k < static_cast<int>(lambda_[i].size())) return lambda_[i][k];
  return GradedMatrix(c_.ring().prime(), c_.twists(s + 1), plus(c_.twists(s), f_[i].degree()));
}

std::string DGReport::message() const {
  if (ok) return "ok";
  std::string m = identity + " fails in degree " + std::to_string(degree);
  if (i >= 0) m += " for action " + std::to_string(i + 1);
  if (j >= 0) m += " and " + std::to_string(j + 1);
  return m;
}

DGReport dg_module_verify(const DGEModule& x) {
  const FreeComplex& c = x.complex();
  if (auto s = c.first_d2_failure()) return {false, "d^2", *s, -1, -1};
  const int n = x.n();
  for (int s = c.lo(); s <= c.hi(); ++s)
    for (int i = 0; i < n; ++i) {
      GradedMatrix a = c.d(s + 1) * x.lambda(i, s);
      GradedMatrix b = x.lambda(i, s - 1) * c.d(s);
      if (!equals_scalar(a + b, x.f()[i])) return {false, "Leibniz", s, i, -1};
    }
  for (int s = c.lo(); s <= c.hi(); ++s)
    for (int i = 0; i < n; ++i) {
      if (!is_zero_matrix(x.lambda(i, s + 1) * x.lambda(i, s))) return {false, "lambda^2", s, i, -1};
      for (int j = i + 1; j < n; ++j) {
        GradedMatrix a = x.lambda(i, s + 1) * x.lambda(j, s);
        GradedMatrix b = x.lambda(j, s + 1) * x.lambda(i, s);
        if (!is_zero_matrix(a + b)) return {false, "anticommutation", s, i, j};
      }
    }
  return {};
}

std::vector<std::vector<Poly>> division_witnesses(const GradedRing& q, const std::vector<Poly>& f,
                                                  const std::vector<Poly>& g) {
  const Coeff p = q.prime();
  std::vector<std::vector<Poly>> out;
  for (const Poly& fi : f) {
    std::vector<Poly> a(g.size(), q.zero());
    Poly r = fi;
    bool clean = true;
    while (!r.is_zero()) {
      const Term lt = r.lead();
      std::size_t j = 0;
      while (j < g.size() && !(!g[j].is_zero() && divides(g[j].lead().m, lt.m))) ++j;
      if (j == g.size()) {
        clean = false;
        break;
      }
      const Coeff c = mul_mod(lt.c, inv_mod(g[j].lead().c, p), p);
      const Poly t = Poly::monomial(p, quotient(lt.m, g[j].lead().m), c);
      a[j] += t;
      r -= t * g[j];
    }
    if (!clean) {
      std::vector<int> cols;
      for (auto& gj : g) cols.push_back(gj.degree());
      GradedMatrix row(p, {0}, cols);
      for (std::size_t j = 0; j < g.size(); ++j) row.set(0, static_cast<int>(j), g[j]);
      auto y = lift(q, row, Vec::from_poly(fi, 0));
      if (!y) {
        const Poly nf = normal_form(fi, groebner_basis(p, q.degrees(), g));
        throw Error(ErrorCode::NotInIdeal, q.to_string(fi) + " has normal form " + q.to_string(nf));
      }
      for (std::size_t j = 0; j < g.size(); ++j) a[j] = y->component(static_cast<int>(j));
    }
    out.push_back(std::move(a));
  }
  return out;
}

DGEModule koszul_action(const KoszulAlgebra& e, const std::vector<Poly>& target) {
  const GradedRing& q = e.base();
  const Coeff p = q.prime();
  const auto a = division_witnesses(q, e.f(), target);
  FreeComplex k = koszul_complex(q, target);
  const int m = static_cast<int>(target.size());
  std::vector<std::vector<GradedMatrix>> lambda(e.n());
  for (int i = 0; i < e.n(); ++i)
    for (int s = 0; s <= m; ++s) {
      std::vector<Column> cols;
      for (unsigned S : koszul_subsets(m, s)) {
        Column col;
        for (int j = 0; j < m; ++j) {
          if (((S >> j) & 1u) || a[i][j].is_zero()) continue;
          const int sg = exterior_sign(1u << j, S);
          col.emplace_back(koszul_index(m, S | (1u << j)), a[i][j].scaled(sign_of(sg, p)));
        }
        cols.push_back(std::move(col));
      }
      lambda[i].push_back(assemble(p, k.twists(s + 1), plus(k.twists(s), e.degrees()[i]), cols));
    }
  return DGEModule(std::move(k), e.f(), std::move(lambda));
}

DGEModule dg_tensor_koszul(const DGEModule& x, const std::vector<Poly>& elems) {
  const FreeComplex& c = x.complex();
  FreeComplex t = tensor_koszul(c, elems);
  const Coeff p = x.ring().prime();
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<unsigned>> subs;
  for (int i = 0; i <= m; ++i) subs.push_back(koszul_subsets(m, i));
  // Offset of the (|S|, S) block inside total degree s, as in tensor_koszul.
  auto offset = [&](int s, int i, int k) {
    int o = 0;
    for (int i2 = 0; i2 < i; ++i2) o += static_cast<int>(subs[i2].size()) * c.rank(s - i2);
    return o + k * c.rank(s - i);
  };
  std::vector<std::vector<GradedMatrix>> lambda(x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int s = t.lo(); s <= t.hi(); ++s) {
      GradedMatrix l(p, t.twists(s + 1), plus(t.twists(s), x.f()[i].degree()));
      for (int a = 0; a <= m; ++a)
        for (std::size_t k = 0; k < subs[a].size(); ++k) {
          const GradedMatrix li = x.lambda(i, s - a);
          const int r0 = offset(s + 1, a, static_cast<int>(k));
          const int c0 = offset(s, a, static_cast<int>(k));
          for (int r = 0; r < li.rows(); ++r)
            for (int cc = 0; cc < li.cols(); ++cc)
              if (!li.at(r, cc).is_zero()) l.set(r0 + r, c0 + cc, li.at(r, cc));
        }
      lambda[i].push_back(std::move(l));
    }
  return DGEModule(std::move(t), x.f(), std::move(lambda));
}

// ---------------------------------------------------------------- E-free resolutions

namespace {

/// Basis of E (x) V in each homological degree: blocks ordered by |S|, then
/// S, then the generator.
struct FreeLayout {
  int n = 0;
  const KoszulAlgebra* e = nullptr;
  const std::vector<std::vector<int>>* v = nullptr;

  struct Cell {
    unsigned subset;
    int t;
    int v;
  };

  int rank_v(int t) const {
    return (t >= 0 && t < static_cast<int>(v->size())) ? static_cast<int>((*v)[t].size()) : 0;
  }
  int index(unsigned subset, int t, int gen) const {
    const int i = std::popcount(subset);
    const int s = i + t;
    int o = 0;
    for (int i2 = 0; i2 < i; ++i2) o += binomial(n, i2) * rank_v(s - i2);
    return o + koszul_index(n, subset) * rank_v(t) + gen;
  }
  std::vector<Cell> cells(int s) const {
    std::vector<Cell> out;
    for (int i = 0; i <= n; ++i)
      for (unsigned S : koszul_subsets(n, i))
        for (int g = 0; g < rank_v(s - i); ++g) out.push_back({S, s - i, g});
    return out;
  }
  std::vector<int> twists(int s) const {
    std::vector<int> out;
    for (auto& c : cells(s)) out.push_back(e->twist(c.subset) + (*v)[c.t][c.v]);
    return out;
  }
};

/// Boundary of xi_S (x) v in E (x) V.
Column boundary(const FreeLayout& lay, const std::vector<std::vector<Vec>>& images, const FreeLayout::Cell& cell) {
  const KoszulAlgebra& e = *lay.e;
  const Coeff p = e.base().prime();
  Column col;
  const unsigned S = cell.subset;
  for (int j = 0; j < lay.n; ++j) {
    if (!((S >> j) & 1u)) continue;
    col.emplace_back(lay.index(S & ~(1u << j), cell.t, cell.v), e.f()[j].scaled(sign_of(position_sign(S, j), p)));
  }
  if (cell.t == 0) return col;
  const Vec& dv = images[cell.t][cell.v];
  const auto below = lay.cells(cell.t - 1);
  const Coeff outer = sign(std::popcount(S), p);
  for (int k = 0; k <= dv.max_component(); ++k) {
    Poly c = dv.component(k);
    if (c.is_zero()) continue;
    const auto& b = below[k];
    const int sg = exterior_sign(S, b.subset);
    if (sg == 0) continue;
    col.emplace_back(lay.index(S | b.subset, b.t, b.v), c.scaled(mul_mod(outer, sign_of(sg, p), p)));
  }
  return col;
}

}  // namespace

int EFreeResolution::index(unsigned subset, int t, int v) const {
  FreeLayout lay{algebra.n(), &algebra, &generators, };
  return lay.index(subset, t, v);
}

EFreeResolution e_free_resolution(const KoszulAlgebra& e, const GradedMatrix& presentation, int bound) {
  if (bound < 1) throw Error(ErrorCode::TruncationTooSmall, "the resolution bound must be at least 1");
  const GradedRing& q = e.base();
  const Coeff p = q.prime();
  const GradedRing r = e.quotient();
  EFreeResolution out;
  out.algebra = e;
  out.bound = bound;
  out.target = prune_presentation(r, presentation);
  if (out.target.rows() == 0) {
    out.module = DGEModule::zero(e);
    return out;
  }
  out.generators.push_back(out.target.row_twists());
  out.images.emplace_back(out.target.rows());
  FreeLayout lay{e.n(), &e, &out.generators};

  auto differential = [&](int s) {
    std::vector<Column> cols;
    for (auto& cell : lay.cells(s)) cols.push_back(boundary(lay, out.images, cell));
    return assemble(p, s == 0 ? std::vector<int>{} : lay.twists(s - 1), lay.twists(s), cols);
  };

  for (int s = 1; s < bound; ++s) {
    const auto prev = lay.twists(s - 1);
    std::vector<Vec> inputs;
    for (auto& cell : lay.cells(s)) {
      if (cell.subset == 0) continue;
      Column col = boundary(lay, out.images, cell);
      Vec v(p);
      for (auto& [i, f] : col) v = v + Vec::from_poly(f, i);
      inputs.push_back(v);
    }
    const std::size_t nb = inputs.size();
    std::vector<Vec> z;
    if (s == 1) {
      z = out.target.columns();
    } else {
      z = syzygy_kernel(q, differential(s - 1)).columns();
    }
    for (auto& v : z) inputs.push_back(v);
    std::vector<std::pair<int, Vec>> fresh;
    std::optional<Submodule> bmod;
    if (nb > 0) {
      std::vector<Vec> bs(inputs.begin(), inputs.begin() + static_cast<long>(nb));
      std::vector<int> bt;
      for (auto& b : bs) bt.push_back(b.degree(prev));
      bmod.emplace(q, GradedMatrix::from_columns(p, prev, bt, bs));
    }
    for (std::size_t k : minimal_subset(q, prev, inputs)) {
      if (k < nb) continue;
      Vec v = bmod ? bmod->normal_form(inputs[k]) : inputs[k];
      fresh.emplace_back(inputs[k].degree(prev), v.monic());
    }
    std::stable_sort(fresh.begin(), fresh.end(), [](auto& a, auto& b) { return a.first < b.first; });
    out.generators.emplace_back();
    out.images.emplace_back();
    for (auto& [d, v] : fresh) {
      out.generators.back().push_back(d);
      out.images.back().push_back(v);
    }
  }

  const int top = bound - 1 + e.n();
  std::vector<std::vector<int>> tws;
  std::vector<GradedMatrix> ds;
  for (int s = 0; s <= top; ++s) {
    tws.push_back(lay.twists(s));
    ds.push_back(differential(s));
  }
  FreeComplex c(q, 0, std::move(tws), std::move(ds));
  std::vector<std::vector<GradedMatrix>> lambda(e.n());
  for (int i = 0; i < e.n(); ++i)
    for (int s = 0; s <= top; ++s) {
      std::vector<Column> cols;
      for (auto& cell : lay.cells(s)) {
        Column col;
        const int sg = exterior_sign(1u << i, cell.subset);
        if (sg != 0) col.emplace_back(lay.index(cell.subset | (1u << i), cell.t, cell.v), q.constant(sg));
        cols.push_back(std::move(col));
      }
      lambda[i].push_back(assemble(p, s + 1 <= top ? lay.twists(s + 1) : std::vector<int>{},
                                   plus(lay.twists(s), e.degrees()[i]), cols));
    }
  out.module = DGEModule(std::move(c), e.f(), std::move(lambda));
  return out;
}

// ---------------------------------------------------------------- U construction

int DividedPowerIndex::weight() const {
  int w = 0;
  for (int x : h) w += x;
  return w;
}

std::optional<DividedPowerIndex> DividedPowerIndex::chi(int i) const {
  if (h[i] == 0) return std::nullopt;
  DividedPowerIndex r = *this;
  --r.h[i];
  return r;
}

std::vector<DividedPowerIndex> divided_powers(int n, int j) {
  std::vector<DividedPowerIndex> out;
  if (n == 0) {
    if (j == 0) out.push_back({});
    return out;
  }
  DividedPowerIndex cur{std::vector<int>(n, 0)};
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur.h[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur.h[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, j);
  return out;
}

namespace {

using UKey = std::tuple<unsigned, std::vector<int>, int, int>;

struct ULayout {
  std::vector<std::vector<UCell>> cells;
  std::vector<std::vector<int>> twists;
  std::map<UKey, int> index;
  int lo = 0;

  int find(unsigned s, const DividedPowerIndex& h, int pd, int pi) const {
    return index.at(UKey{s, h.h, pd, pi});
  }
};

ULayout u_layout(const DGEModule& pm, int gamma) {
  const int n = pm.n();
  const FreeComplex& pc = pm.complex();
  ULayout lay;
  lay.lo = pc.lo();
  const int hi = pc.hi() + n + 2 * gamma;
  for (int s = lay.lo; s <= hi; ++s) {
    std::vector<UCell> cs;
    std::vector<int> tw;
    for (int i = 0; i <= n; ++i)
      for (unsigned S : koszul_subsets(n, i))
        for (int j = 0; j <= gamma; ++j)
          for (auto& h : divided_powers(n, j)) {
            const int pd = s - i - 2 * j;
            int base = 0;
            for (int k = 0; k < n; ++k) {
              if ((S >> k) & 1u) base += pm.f()[k].degree();
              base += h.h[k] * pm.f()[k].degree();
            }
            for (int pi = 0; pi < pc.rank(pd); ++pi) {
              lay.index.emplace(UKey{S, h.h, pd, pi}, static_cast<int>(cs.size()));
              cs.push_back({S, h, pd, pi});
              tw.push_back(base + pc.twists(pd)[pi]);
            }
          }
    lay.cells.push_back(std::move(cs));
    lay.twists.push_back(std::move(tw));
  }
  return lay;
}

}  // namespace

UConstruction u_construction(const DGEModule& pm, int bound) {
  if (bound < 1) throw Error(ErrorCode::TruncationTooSmall, "the bound must be at least 1");
  const DGReport rep = dg_module_verify(pm);
  if (!rep.ok) throw Error(ErrorCode::NotKoszulResolution, rep.message());
  const int n = pm.n();
  const Coeff p = pm.ring().prime();
  const GradedRing& q = pm.ring();
  const FreeComplex& pc = pm.complex();
  const int gamma = bound / 2;
  ULayout lay = u_layout(pm, gamma);
  const int count = static_cast<int>(lay.cells.size());
  auto tw = [&](int s) {
    const int k = s - lay.lo;
    return (k >= 0 && k < count) ? lay.twists[k] : std::vector<int>{};
  };

  std::vector<GradedMatrix> ds;
  for (int k = 0; k < count; ++k) {
    const int s = lay.lo + k;
    std::vector<Column> cols;
    for (auto& cell : lay.cells[k]) {
      Column col;
      const unsigned S = cell.subset;
      for (int j = 0; j < n; ++j)
        if ((S >> j) & 1u)
          col.emplace_back(lay.find(S & ~(1u << j), cell.power, cell.p_degree, cell.p_index),
                           pm.f()[j].scaled(sign_of(position_sign(S, j), p)));
      const Coeff outer = sign(std::popcount(S), p);
      const GradedMatrix dp = pc.d(cell.p_degree);
      for (int r = 0; r < dp.rows(); ++r)
        if (!dp.at(r, cell.p_index).is_zero())
          col.emplace_back(lay.find(S, cell.power, cell.p_degree - 1, r), dp.at(r, cell.p_index).scaled(outer));
      for (int i = 0; i < n; ++i) {
        auto lower = cell.power.chi(i);
        if (!lower) continue;
        const GradedMatrix li = pm.lambda(i, cell.p_degree);
        for (int r = 0; r < li.rows(); ++r)
          if (!li.at(r, cell.p_index).is_zero())
            col.emplace_back(lay.find(S, *lower, cell.p_degree + 1, r), li.at(r, cell.p_index).scaled(outer));
        const int sg = exterior_sign(1u << i, S);
        if (sg != 0)
          col.emplace_back(lay.find(S | (1u << i), *lower, cell.p_degree, cell.p_index), q.constant(-sg));
      }
      cols.push_back(std::move(col));
    }
    ds.push_back(assemble(p, tw(s - 1), tw(s), cols));
  }
  std::vector<std::vector<GradedMatrix>> lambda(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < count; ++k) {
      const int s = lay.lo + k;
      std::vector<Column> cols;
      for (auto& cell : lay.cells[k]) {
        Column col;
        const int sg = exterior_sign(1u << i, cell.subset);
        if (sg != 0)
          col.emplace_back(lay.find(cell.subset | (1u << i), cell.power, cell.p_degree, cell.p_index),
                           q.constant(sg));
        cols.push_back(std::move(col));
      }
      lambda[i].push_back(assemble(p, tw(s + 1), plus(tw(s), pm.f()[i].degree()), cols));
    }
  FreeComplex c(q, lay.lo, lay.twists, std::move(ds));
  c.verify();
  UConstruction u;
  u.module = DGEModule(std::move(c), pm.f(), std::move(lambda));
  u.gamma = gamma;
  u.bound = bound;
  u.cells = std::move(lay.cells);
  return u;
}

ChainMap UConstruction::action(const GradedRing& a, const Poly& g) const {
  const int n = module.n();
  const FreeComplex& c = module.complex();
  const Coeff p = c.ring().prime();
  if (g.is_zero() || !g.is_homogeneous())
    throw Error(ErrorCode::InhomogeneousElement, a.to_string(g) + " is not a nonzero homogeneous element");
  std::optional<int> internal;
  for (auto& t : g.terms()) {
    int w = 0;
    for (int k = 0; k < n; ++k) w -= t.m.exp[k] * module.f()[k].degree();
    if (internal && *internal != w)
      throw Error(ErrorCode::InhomogeneousElement, a.to_string(g) + " mixes internal degrees");
    internal = w;
  }
  const int degree = -2 * g.terms().front().m.total_exponent();
  std::map<UKey, int> index;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (std::size_t j = 0; j < cells[k].size(); ++j) {
      const UCell& u = cells[k][j];
      index.emplace(UKey{u.subset, u.power.h, u.p_degree, u.p_index}, static_cast<int>(j));
    }
  ChainMap f{c, c, degree, *internal, {}};
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int s = c.lo() + static_cast<int>(k);
    std::vector<Column> cols;
    for (const UCell& u : cells[k]) {
      Column col;
      for (auto& t : g.terms()) {
        DividedPowerIndex h = u.power;
        bool ok = true;
        for (int v = 0; v < n; ++v) {
          h.h[v] -= t.m.exp[v];
          ok = ok && h.h[v] >= 0;
        }
        if (!ok) continue;
        col.emplace_back(index.at(UKey{u.subset, h.h, u.p_degree, u.p_index}), Poly::constant(p, t.c));
      }
      cols.push_back(std::move(col));
    }
    f.components.push_back(assemble(p, c.twists(s + degree), plus(c.twists(s), *internal), cols));
  }
  return f;
}

ChainMap UConstruction::chi(int i) const {
  const GradedRing a = chi_ring(module.n(), module.ring().prime());
  return action(a, a.var(i));
}

GradedRing chi_ring(int n, Coeff p) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("chi" + std::to_string(i));
  return GradedRing::make(p, vars, std::vector<int>(n, 2));
}

DGEModule c_tilde(const UConstruction& u, const GradedRing& a, const Poly& g) {
  ChainMap f = u.action(a, g);
  FreeComplex cone = mapping_cone(f);
  const DGEModule& um = u.module;
  const Coeff p = um.ring().prime();
  const int d = f.degree;
  std::vector<std::vector<GradedMatrix>> lambda(um.n());
  for (int i = 0; i < um.n(); ++i)
    for (int s = cone.lo(); s <= cone.hi(); ++s) {
      GradedMatrix l(p, cone.twists(s + 1), plus(cone.twists(s), um.f()[i].degree()));
      const GradedMatrix top = um.lambda(i, s + d);
      const GradedMatrix bottom = um.lambda(i, s - 1);
      for (int r = 0; r < top.rows(); ++r)
        for (int c = 0; c < top.cols(); ++c)
          if (!top.at(r, c).is_zero()) l.set(r, c, top.at(r, c));
      const int r0 = um.complex().rank(s + 1 + d);
      const int c0 = um.complex().rank(s + d);
      for (int r = 0; r < bottom.rows(); ++r)
        for (int c = 0; c < bottom.cols(); ++c)
          if (!bottom.at(r, c).is_zero()) l.set(r0 + r, c0 + c, -bottom.at(r, c));
      lambda[i].push_back(std::move(l));
    }
  return DGEModule(std::move(cone), um.f(), std::move(lambda));
}

}  // namespace kci
