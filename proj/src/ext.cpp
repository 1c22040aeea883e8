#include "kci/ext.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "kci/errors.hpp"
#include "kci/ideal.hpp"

namespace kci {

namespace {

DenseMatrix constant_part(const GradedMatrix& m) {
  DenseMatrix out(m.modulus(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).constant_term();
  return out;
}

bool product_vanishes(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() == 0 || a.rows() == 0 || b.cols() == 0) return true;
  return (a * b).is_zero();
}

}  // namespace

int CollapsedComplex::rank(int s) const {
  const int k = s - lo;
  return (k >= 0 && k < static_cast<int>(twists.size())) ? static_cast<int>(twists[k].size()) : 0;
}

GradedMatrix CollapsedComplex::differential(const GradedRing& a) const {
  std::vector<int> rows, cols, offset;
  for (int s = lo; s <= hi(); ++s) {
    offset.push_back(static_cast<int>(rows.size()));
    for (int k = 0; k < rank(s); ++k) {
      rows.push_back(s);
      cols.push_back(s + 1);
    }
  }
  GradedMatrix m(p, rows, cols);
  for (int s = lo; s <= hi(); ++s)
    for (int j = 0; j < rank(s); ++j) {
      const int col = offset[s - lo] + j;
      if (s + 1 <= hi()) {
        const DenseMatrix& dq = d[s + 1 - lo];
        for (int q = 0; q < rank(s + 1); ++q)
          if (dq(j, q)) m.set(offset[s + 1 - lo] + q, col, Poly::constant(p, dq(j, q)));
      }
      if (s - 1 >= lo)
        for (int i = 0; i < n(); ++i) {
          const DenseMatrix& lq = lambda[i][s - 1 - lo];
          for (int q = 0; q < rank(s - 1); ++q)
            if (lq(j, q)) m.add_to(offset[s - 1 - lo] + q, col, a.var(i).scaled(lq(j, q)));
        }
    }
  return m;
}

bool CollapsedComplex::differential_is_zero() const {
  for (auto& m : d)
    if (!m.is_zero()) return false;
  for (auto& li : lambda)
    for (auto& m : li)
      if (!m.is_zero()) return false;
  return true;
}

CollapsedComplex collapse(const DGEModule& pm) {
  const FreeComplex& c = pm.complex();
  CollapsedComplex out;
  out.p = pm.ring().prime();
  for (auto& g : pm.f()) out.f_degrees.push_back(g.degree());
  out.lo = c.lo();
  out.lambda.resize(pm.n());
  for (int s = c.lo(); s <= c.hi(); ++s) {
    out.twists.push_back(c.twists(s));
    out.d.push_back(constant_part(c.d(s)));
    for (int i = 0; i < pm.n(); ++i) out.lambda[i].push_back(constant_part(pm.lambda(i, s)));
  }
  // D^2 = 0 amounts to these identities modulo n.
  auto fail = [](const std::string& what, int s) {
    throw Error(ErrorCode::NotSemiprojective, what + " fails modulo n in degree " + std::to_string(s));
  };
  for (int s = c.lo() + 1; s < c.hi(); ++s)
    if (!product_vanishes(out.d[s - out.lo], out.d[s + 1 - out.lo])) fail("d^2 = 0", s);
  for (int i = 0; i < pm.n(); ++i)
    for (int s = c.lo(); s < c.hi(); ++s) {
      const int k = s - out.lo;
      DenseMatrix a = (s + 1 <= c.hi()) ? out.d[k + 1] * out.lambda[i][k] : DenseMatrix(out.p, out.rank(s), out.rank(s));
      if (s > c.lo()) a = a + out.lambda[i][k - 1] * out.d[k];
      if (!a.is_zero()) fail("Leibniz", s);
      for (int j = i; j < pm.n(); ++j) {
        DenseMatrix b = out.lambda[i][k + 1] * out.lambda[j][k] + out.lambda[j][k + 1] * out.lambda[i][k];
        if (!b.is_zero()) fail("strictness", s);
      }
    }
  return out;
}

long GradedAModule::dim(int m) const {
  const int k = m - lo;
  return (k >= 0 && k < static_cast<int>(dims.size())) ? dims[k] : 0;
}

// ---------------------------------------------------------------- Ext engine

namespace {

using Exps = std::vector<int>;
using CellKey = std::tuple<Exps, int, int>;  // chi exponents, homological degree, index

struct Piece {
  std::vector<CellKey> cells;
  std::map<CellKey, int> pos;
  void add(CellKey k) {
    pos.emplace(k, static_cast<int>(cells.size()));
    cells.push_back(std::move(k));
  }
};

/// One (cohomological degree, internal degree) slot of Ext: cocycle
/// representatives and a way to read off coordinates.
struct Slot {
  int size = 0;            // cells of L in this slot
  DenseMatrix boundaries;  // columns spanning the coboundaries
  std::vector<std::vector<Coeff>> reps;
  int dim() const { return static_cast<int>(reps.size()); }
};

class ExtEngine {
 public:
  ExtEngine(const CollapsedComplex& c, int bound) : c_(c), bound_(bound), p_(c.p) {
    for (int m = c.lo; m <= bound + 1; ++m) build_level(m);
    for (int m = c.lo; m <= bound; ++m)
      for (auto& [w, piece] : levels_[m]) compute_slot(m, w);
  }

  int lo() const { return c_.lo; }
  const std::map<int, Slot>& slots(int m) const {
    static const std::map<int, Slot> kNone;
    auto it = slots_.find(m);
    return it == slots_.end() ? kNone : it->second;
  }
  const Slot* slot(int m, int w) const {
    auto it = slots_.find(m);
    if (it == slots_.end()) return nullptr;
    auto jt = it->second.find(w);
    return jt == it->second.end() ? nullptr : &jt->second;
  }

  /// chi_i applied to a class of Ext^{m,w}, in coordinates of Ext^{m+2,w-deg f_i}.
  std::vector<Coeff> chi(int i, int m, int w, const std::vector<Coeff>& coords) const {
    const int w2 = w - c_.f_degrees[i];
    const Slot* to = slot(m + 2, w2);
    if (!to) return {};
    const Slot& from = *slot(m, w);
    const Piece& src = levels_.at(m).at(w);
    const Piece& dst = levels_.at(m + 2).at(w2);
    std::vector<Coeff> v(dst.cells.size(), 0);
    for (int k = 0; k < from.dim(); ++k) {
      if (!coords[k]) continue;
      for (std::size_t cell = 0; cell < src.cells.size(); ++cell) {
        const Coeff x = from.reps[k][cell];
        if (!x) continue;
        auto [j, s, idx] = src.cells[cell];
        ++j[i];
        const int t = dst.pos.at(CellKey{j, s, idx});
        v[t] = add_mod(v[t], mul_mod(x, coords[k], p_), p_);
      }
    }
    return coordinates(*to, v);
  }

 private:
  void build_level(int m) {
    auto& level = levels_[m];
    const int n = c_.n();
    for (int s = c_.lo; s <= std::min(m, c_.hi()); ++s) {
      if ((m - s) % 2 != 0) continue;
      for (auto& h : divided_powers(n, (m - s) / 2)) {
        int shift = 0;
        for (int i = 0; i < n; ++i) shift += h.h[i] * c_.f_degrees[i];
        for (int idx = 0; idx < c_.rank(s); ++idx) {
          const int w = -c_.twists[s - c_.lo][idx] - shift;
          level[w].add(CellKey{h.h, s, idx});
        }
      }
    }
  }

  /// D on the (m, w) slot as a dense matrix into the (m+1, w) slot.
  DenseMatrix differential(int m, int w) const {
    const Piece& src = levels_.at(m).at(w);
    static const Piece kEmpty;
    auto lit = levels_.find(m + 1);
    const Piece* dst = &kEmpty;
    if (lit != levels_.end()) {
      auto jt = lit->second.find(w);
      if (jt != lit->second.end()) dst = &jt->second;
    }
    DenseMatrix out(p_, static_cast<int>(dst->cells.size()), static_cast<int>(src.cells.size()));
    for (std::size_t col = 0; col < src.cells.size(); ++col) {
      const auto& [j, s, idx] = src.cells[col];
      if (s + 1 <= c_.hi()) {
        const DenseMatrix& dq = c_.d[s + 1 - c_.lo];
        for (int q = 0; q < c_.rank(s + 1); ++q)
          if (dq(idx, q)) {
            auto it = dst->pos.find(CellKey{j, s + 1, q});
            if (it == dst->pos.end())
              throw Error(ErrorCode::InvariantViolated, "collapsed differential leaves its internal degree");
            out(it->second, static_cast<int>(col)) = add_mod(out(it->second, static_cast<int>(col)), dq(idx, q), p_);
          }
      }
      if (s - 1 >= c_.lo)
        for (int i = 0; i < c_.n(); ++i) {
          const DenseMatrix& lq = c_.lambda[i][s - 1 - c_.lo];
          for (int q = 0; q < c_.rank(s - 1); ++q)
            if (lq(idx, q)) {
              Exps j2 = j;
              ++j2[i];
              auto it = dst->pos.find(CellKey{j2, s - 1, q});
              if (it == dst->pos.end())
                throw Error(ErrorCode::InvariantViolated, "collapsed differential leaves its internal degree");
              out(it->second, static_cast<int>(col)) = add_mod(out(it->second, static_cast<int>(col)), lq(idx, q), p_);
            }
        }
    }
    return out;
  }

  void compute_slot(int m, int w) {
    const Piece& piece = levels_.at(m).at(w);
    Slot slot;
    slot.size = static_cast<int>(piece.cells.size());
    const DenseMatrix dm = differential(m, w);
    auto cycles = nullspace(dm);
    auto prev = levels_.find(m - 1);
    if (prev != levels_.end() && prev->second.count(w)) {
      slot.boundaries = differential(m - 1, w);
    } else {
      slot.boundaries = DenseMatrix(p_, slot.size, 0);
    }
    Span span(p_, slot.size);
    for (int j = 0; j < slot.boundaries.cols(); ++j) span.insert(slot.boundaries.column(j));
    for (auto& z : cycles)
      if (span.insert(z)) slot.reps.push_back(z);
    if (slot.dim() > 0) slots_[m][w] = std::move(slot);
  }

  std::vector<Coeff> coordinates(const Slot& s, const std::vector<Coeff>& v) const {
    std::vector<std::vector<Coeff>> cols;
    for (int j = 0; j < s.boundaries.cols(); ++j) cols.push_back(s.boundaries.column(j));
    for (auto& r : s.reps) cols.push_back(r);
    auto x = solve(DenseMatrix::from_columns(p_, s.size, cols), v);
    if (!x) throw Error(ErrorCode::InvariantViolated, "the chi action leaves the cocycles");
    return std::vector<Coeff>(x->end() - s.dim(), x->end());
  }

  const CollapsedComplex& c_;
  int bound_;
  Coeff p_;
  std::map<int, std::map<int, Piece>> levels_;
  std::map<int, std::map<int, Slot>> slots_;
};

struct Generator {
  int m;
  int w;
  std::vector<Coeff> coords;
};

}  // namespace

GradedAModule ext_from_collapse(const CollapsedComplex& c, int bound) {
  const Coeff p = c.p;
  const int n = c.n();
  ExtEngine eng(c, bound);
  GradedAModule out;
  out.a = chi_ring(n, p);
  out.bound = bound;
  out.lo = std::min(c.lo, 0);
  for (int m = out.lo; m <= bound; ++m) {
    long d = 0;
    for (auto& [w, s] : eng.slots(m)) d += s.dim();
    out.dims.push_back(d);
  }

  // Minimal generators: complements of the chi-images degree by degree.
  std::vector<Generator> gens;
  for (int m = c.lo; m <= bound; ++m)
    for (auto& [w, slot] : eng.slots(m)) {
      Span span(p, slot.dim());
      for (int i = 0; i < n; ++i) {
        const Slot* from = eng.slot(m - 2, w + c.f_degrees[i]);
        if (!from) continue;
        for (int k = 0; k < from->dim(); ++k) {
          std::vector<Coeff> e(from->dim(), 0);
          e[k] = 1;
          span.insert(eng.chi(i, m - 2, w + c.f_degrees[i], e));
        }
      }
      for (int k = 0; k < slot.dim(); ++k) {
        std::vector<Coeff> e(slot.dim(), 0);
        e[k] = 1;
        if (span.insert(e)) gens.push_back({m, w, e});
      }
    }

  // Images of chi^J g, memoized.
  std::map<std::pair<Exps, int>, std::vector<Coeff>> memo;
  auto image = [&](auto&& self, const Exps& j, int g) -> std::vector<Coeff> {
    auto key = std::make_pair(j, g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Coeff> v;
    int i = 0;
    while (i < n && j[i] == 0) ++i;
    if (i == n) {
      v = gens[g].coords;
    } else {
      Exps lower = j;
      --lower[i];
      int m = gens[g].m, w = gens[g].w;
      for (int k = 0; k < n; ++k) {
        m += 2 * lower[k];
        w -= lower[k] * c.f_degrees[k];
      }
      auto prev = self(self, lower, g);
      v = prev.empty() || !eng.slot(m, w) ? std::vector<Coeff>{} : eng.chi(i, m, w, prev);
    }
    memo.emplace(key, v);
    return v;
  };

  // Relations: kernels of A (x) G -> Ext, minus the chi-multiples of lower ones.
  using FreeCell = std::pair<Exps, int>;
  std::map<std::pair<int, int>, std::vector<std::vector<Coeff>>> kernels;
  std::map<std::pair<int, int>, std::vector<FreeCell>> free_cells;
  std::vector<int> rel_twists;
  std::vector<std::vector<std::pair<int, Poly>>> rel_cols;
  for (int m = c.lo; m <= bound; ++m) {
    std::map<int, std::vector<FreeCell>> by_w;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int diff = m - gens[g].m;
      if (diff < 0 || diff % 2 != 0) continue;
      for (auto& h : divided_powers(n, diff / 2)) {
        int w = gens[g].w;
        for (int k = 0; k < n; ++k) w -= h.h[k] * c.f_degrees[k];
        by_w[w].push_back({h.h, static_cast<int>(g)});
      }
    }
    for (auto& [w, cells] : by_w) {
      const Slot* slot = eng.slot(m, w);
      const int dim = slot ? slot->dim() : 0;
      DenseMatrix phi(p, dim, static_cast<int>(cells.size()));
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto v = image(image, cells[k].first, cells[k].second);
        for (int r = 0; r < static_cast<int>(v.size()) && r < dim; ++r) phi(r, static_cast<int>(k)) = v[r];
      }
      auto ker = nullspace(phi);
      std::map<FreeCell, int> pos;
      for (std::size_t k = 0; k < cells.size(); ++k) pos[cells[k]] = static_cast<int>(k);
      Span span(p, static_cast<int>(cells.size()));
      for (int i = 0; i < n; ++i) {
        auto lower = kernels.find({m - 2, w + c.f_degrees[i]});
        if (lower == kernels.end()) continue;
        const auto& lcells = free_cells[{m - 2, w + c.f_degrees[i]}];
        for (auto& kv : lower->second) {
          std::vector<Coeff> up(cells.size(), 0);
          for (std::size_t t = 0; t < kv.size(); ++t) {
            if (!kv[t]) continue;
            Exps j = lcells[t].first;
            ++j[i];
            up[pos.at({j, lcells[t].second})] = kv[t];
          }
          span.insert(up);
        }
      }
      for (auto& kv : ker)
        if (span.insert(kv)) {
          std::vector<std::pair<int, Poly>> col;
          std::map<int, Poly> entries;
          for (std::size_t t = 0; t < kv.size(); ++t) {
            if (!kv[t]) continue;
            Poly term = Poly::monomial(p, out.a.monomial(cells[t].first), kv[t]);
            auto it = entries.find(cells[t].second);
            if (it == entries.end())
              entries.emplace(cells[t].second, term);
            else
              it->second += term;
          }
          for (auto& [g, f] : entries) col.emplace_back(g, f);
          rel_cols.push_back(std::move(col));
          rel_twists.push_back(m);
        }
      kernels[{m, w}] = std::move(ker);
      free_cells[{m, w}] = cells;
    }
  }
  std::vector<int> gen_twists;
  for (auto& g : gens) gen_twists.push_back(g.m);
  GradedMatrix pres(p, gen_twists, rel_twists);
  for (std::size_t j = 0; j < rel_cols.size(); ++j)
    for (auto& [g, f] : rel_cols[j]) pres.set(g, static_cast<int>(j), f);
  out.presentation = std::move(pres);
  return out;
}

GradedAModule ext_module(const KoszulAlgebra& e, const GradedMatrix& presentation, int n_bound) {
  auto f = e_free_resolution(e, presentation, n_bound);
  return ext_from_collapse(collapse(f.module), n_bound - 2);
}

GradedAModule ext_kk_closed_form(const KoszulAlgebra& e, int bound) {
  if (!e.in_n_squared()) throw Error(ErrorCode::HypothesisViolated, "the closed form needs every f_i in n^2");
  const int ev = e.base().nvars();
  const Coeff p = e.base().prime();
  GradedAModule out;
  out.a = chi_ring(e.n(), p);
  out.bound = bound;
  out.lo = 0;
  std::vector<int> gens;
  long binom = 1;
  for (int i = 0; i <= ev; ++i) {
    for (long k = 0; k < binom; ++k) gens.push_back(i);
    binom = binom * (ev - i) / (i + 1);
  }
  out.presentation = GradedMatrix(p, gens, {});
  for (int m = 0; m <= bound; ++m) {
    long d = 0;
    for (int g : gens)
      if (m >= g && (m - g) % 2 == 0) d += static_cast<long>(divided_powers(e.n(), (m - g) / 2).size());
    out.dims.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------- varieties

std::string SupportVariety::to_string() const {
  if (empty()) return "empty";
  std::string s = "V(";
  if (ideal.empty()) return "Proj A";
  bool all_zero = true;
  for (auto& g : ideal) all_zero = all_zero && g.is_zero();
  if (all_zero) return "Proj A";
  bool first = true;
  for (auto& g : ideal) {
    if (g.is_zero()) continue;
    if (!first) s += ", ";
    s += a.to_string(g);
    first = false;
  }
  return s + ")";
}

SupportVariety support_variety(const GradedAModule& x) {
  SupportVariety v;
  v.a = x.a;
  if (x.presentation.rows() == 0) {
    v.ideal = {x.a.one()};
    v.dimension = -1;
    return v;
  }
  auto ann = annihilator(x.a, x.presentation);
  v.ideal = basis_polys(groebner_basis(x.a.prime(), x.a.degrees(), ann));
  v.dimension = krull_dimension(x.a, v.ideal) - 1;
  if (v.dimension < 0) v.dimension = -1;
  return v;
}

SupportVariety variety_of_elements(const GradedRing& a, const std::vector<Poly>& g) {
  for (auto& x : g)
    if (!x.is_zero() && !x.is_homogeneous())
      throw Error(ErrorCode::InhomogeneousElement, a.to_string(x) + " is not homogeneous");
  SupportVariety v;
  v.a = a;
  v.ideal = basis_polys(groebner_basis(a.prime(), a.degrees(), g));
  v.dimension = krull_dimension(a, v.ideal) - 1;
  if (v.dimension < 0) v.dimension = -1;
  return v;
}

bool variety_contained(const SupportVariety& x, const SupportVariety& y) {
  if (x.empty()) return true;
  if (y.empty()) return false;
  return proj_contained(x.a, x.ideal, y.ideal);
}

bool same_variety(const SupportVariety& x, const SupportVariety& y) {
  return variety_contained(x, y) && variety_contained(y, x);
}

StableSupport stable_support(const KoszulAlgebra& e, const GradedMatrix& presentation, int n_bound) {
  StableSupport out;
  out.bound = n_bound;
  out.ext = ext_module(e, presentation, n_bound);
  out.variety = support_variety(out.ext);
  auto later = support_variety(ext_module(e, presentation, n_bound + 2));
  out.stable = same_variety(out.variety, later) &&
               same_radical(out.ext.a, out.variety.ideal, later.ideal);
  return out;
}

SesReport ses_koszul_check(const DGEModule& m, const Poly& x, int bound) {
  SesReport rep;
  auto em = ext_from_collapse(collapse(m), bound);
  auto emx = ext_from_collapse(collapse(dg_tensor_koszul(m, {x})), bound);
  const int lo = std::min(em.lo, emx.lo);
  for (int k = lo; k <= bound; ++k) {
    rep.dims_m.push_back(em.dim(k));
    rep.dims_mx.push_back(emx.dim(k));
    if (emx.dim(k) != em.dim(k) + em.dim(k - 1)) {
      rep.additive = false;
      if (rep.message.empty()) rep.message = "dimensions differ in degree " + std::to_string(k);
    }
  }
  const GradedRing& a = em.a;
  auto ann_m = em.presentation.rows() == 0 ? std::vector<Poly>{a.one()} : annihilator(a, em.presentation);
  auto ann_mx = emx.presentation.rows() == 0 ? std::vector<Poly>{a.one()} : annihilator(a, emx.presentation);
  auto gb_mx = groebner_basis(a.prime(), a.degrees(), ann_mx);
  for (auto& g : ann_m)
    for (auto& h : ann_m)
      if (!normal_form(g * h, gb_mx).is_zero()) rep.annihilators = false;
  for (auto& g : ann_mx)
    if (!in_radical(a, ann_m, g)) rep.annihilators = false;
  if (!rep.annihilators && rep.message.empty()) rep.message = "annihilator containments fail";
  rep.ok = rep.additive && rep.annihilators;
  return rep;
}

}  // namespace kci
