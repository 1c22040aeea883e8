#include "kci/ideal.hpp"

#include <algorithm>

#include "kci/errors.hpp"

namespace kci {

namespace {

void append_relations(const GradedRing& ring, int rows, std::vector<Vec>& out) {
  for (auto& f : ring.relations())
    for (int i = 0; i < rows; ++i) out.push_back(Vec::from_poly(f, i));
}

}  // namespace

Submodule::Submodule(const GradedRing& ring, const GradedMatrix& m, bool track)
    : ring_(ring), rows_(m.rows()), cols_(m.cols()), track_(track) {
  std::vector<int> twists = m.row_twists();
  if (track) twists.insert(twists.end(), m.col_twists().begin(), m.col_twists().end());
  std::vector<Vec> gens;
  append_relations(ring, rows_, gens);
  for (int j = 0; j < cols_; ++j) {
    Vec c = m.column(j);
    if (track) c = c + Vec::unit(ring.prime(), rows_ + j);
    gens.push_back(std::move(c));
  }
  gb_ = GroebnerBasis(ModuleContext{ring.prime(), ring.degrees(), std::move(twists)}, gens);
}

Vec Submodule::normal_form(const Vec& v) const {
  if (!track_) return gb_.normal_form(v);
  return gb_.normal_form(v).slice(0, rows_);
}

std::optional<Vec> Submodule::lift(const Vec& v) const {
  if (!track_) throw Error(ErrorCode::InvariantViolated, "lift requires a tracked submodule");
  Vec nf = gb_.normal_form(v);
  if (!nf.slice(0, rows_).is_zero()) return std::nullopt;
  return nf.slice(rows_, rows_ + cols_).scaled(ring_.prime() - 1);
}

std::vector<Vec> Submodule::syzygies() const {
  if (!track_) throw Error(ErrorCode::InvariantViolated, "syzygies require a tracked submodule");
  std::vector<Vec> out;
  for (auto& g : gb_.elements())
    if (g.lead().comp >= rows_) out.push_back(g.slice(rows_, rows_ + cols_));
  return out;
}

std::vector<std::size_t> minimal_subset(const GradedRing& ring, const std::vector<int>& twists,
                                        const std::vector<Vec>& vecs) {
  std::vector<Vec> gens;
  append_relations(ring, static_cast<int>(twists.size()), gens);
  const std::size_t nrel = gens.size();
  gens.insert(gens.end(), vecs.begin(), vecs.end());
  GroebnerBasis gb(ModuleContext{ring.prime(), ring.degrees(), twists}, gens);
  std::vector<std::size_t> out;
  for (std::size_t i : gb.minimal_input())
    if (i >= nrel) out.push_back(i - nrel);
  return out;
}

namespace {

Vec reduce_entries(const GradedRing& ring, const Vec& v, int rank) {
  if (ring.is_polynomial_ring()) return v;
  Vec out(ring.prime());
  for (int i = 0; i < rank; ++i) {
    Poly f = v.component(i);
    if (!f.is_zero()) out = out + Vec::from_poly(ring.reduce(f), i);
  }
  return out;
}

}  // namespace

GradedMatrix syzygy_kernel(const GradedRing& ring, const GradedMatrix& m) {
  Submodule s(ring, m, true);
  std::vector<Vec> syz;
  for (auto& v : s.syzygies()) {
    Vec r = reduce_entries(ring, v, m.cols());
    if (!r.is_zero()) syz.push_back(r.monic());
  }
  std::vector<Vec> cols;
  std::vector<int> twists;
  for (std::size_t i : minimal_subset(ring, m.col_twists(), syz)) {
    cols.push_back(syz[i]);
    twists.push_back(syz[i].degree(m.col_twists()));
  }
  return GradedMatrix::from_columns(ring.prime(), m.col_twists(), twists, cols);
}

std::optional<Vec> lift(const GradedRing& ring, const GradedMatrix& m, const Vec& v) {
  return Submodule(ring, m, true).lift(v);
}

GradedMatrix minimal_columns(const GradedRing& ring, const GradedMatrix& m) {
  std::vector<Vec> cols = m.columns();
  std::vector<int> keep;
  for (std::size_t i : minimal_subset(ring, m.row_twists(), cols)) keep.push_back(static_cast<int>(i));
  std::vector<int> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  return m.submatrix(rows, keep);
}

std::vector<Poly> minimal_generators(const GradedRing& ring, const std::vector<Poly>& gens) {
  std::vector<Vec> v;
  for (auto& g : gens) {
    if (!g.is_homogeneous()) throw Error(ErrorCode::InhomogeneousInput, "minimal generators need homogeneous input");
    v.push_back(Vec::from_poly(g, 0));
  }
  std::vector<Poly> out;
  for (std::size_t i : minimal_subset(ring, {0}, v)) out.push_back(gens[i]);
  return out;
}

GradedMatrix prune_presentation(const GradedRing& ring, const GradedMatrix& p) {
  GradedMatrix m = p;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, ring.reduce(m.at(i, j)));
  for (;;) {
    int pi = -1, pj = -1;
    for (int j = 0; j < m.cols() && pi < 0; ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, j).is_zero() && m.at(i, j).is_constant()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    const Coeff inv = inv_mod(m.at(pi, pj).constant_term(), ring.prime());
    for (int k = 0; k < m.cols(); ++k) {
      if (k == pj || m.at(pi, k).is_zero()) continue;
      const Poly factor = m.at(pi, k).scaled(inv);
      for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, pj).is_zero()) m.set(i, k, ring.reduce(m.at(i, k) - factor * m.at(i, pj)));
    }
    std::vector<int> rows, cols;
    for (int i = 0; i < m.rows(); ++i)
      if (i != pi) rows.push_back(i);
    for (int j = 0; j < m.cols(); ++j)
      if (j != pj) cols.push_back(j);
    m = m.submatrix(rows, cols);
  }
  std::vector<int> rows(m.rows()), nonzero;
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  for (int j = 0; j < m.cols(); ++j) {
    bool z = true;
    for (int i = 0; i < m.rows() && z; ++i) z = m.at(i, j).is_zero();
    if (!z) nonzero.push_back(j);
  }
  return minimal_columns(ring, m.submatrix(rows, nonzero));
}

int krull_dimension(const GradedRing& q, const std::vector<Poly>& ideal) {
  GroebnerBasis gb = groebner_basis(q.prime(), q.degrees(), ideal);
  if (gb.is_unit()) return -1;
  std::vector<unsigned> supports;
  for (auto& g : gb.elements()) {
    unsigned s = 0;
    for (int i = 0; i < q.nvars(); ++i)
      if (g.lead().m.exp[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << q.nvars()); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](unsigned s) { return (s & ~mask) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::vector<Poly> annihilator(const GradedRing& ring, const GradedMatrix& p) {
  const int r = p.rows();
  const Coeff pr = ring.prime();
  if (r == 0) return {ring.one()};
  // Block b holds a copy of the target in which e_b has degree 0; the last
  // component records the multiplier a in a*e_b = P*y_b for every b.
  std::vector<int> twists;
  for (int b = 0; b < r; ++b)
    for (int i = 0; i < r; ++i) twists.push_back(p.row_twists()[i] - p.row_twists()[b]);
  const int tracker = r * r;
  twists.push_back(0);
  std::vector<Vec> gens;
  for (auto& f : ring.relations())
    for (int k = 0; k < r * r; ++k) gens.push_back(Vec::from_poly(f, k));
  for (int b = 0; b < r; ++b)
    for (int j = 0; j < p.cols(); ++j) gens.push_back(p.column(j).offset(b * r));
  Vec stacked = Vec::unit(pr, tracker);
  for (int b = 0; b < r; ++b) stacked = stacked + Vec::unit(pr, b * r + b);
  gens.push_back(stacked);
  GroebnerBasis gb(ModuleContext{pr, ring.degrees(), twists}, gens);
  std::vector<Poly> out;
  for (auto& g : gb.elements())
    if (g.lead().comp == tracker) out.push_back(g.component(tracker));
  return out;
}

std::vector<long> hilbert_function(const GradedRing& ring, const GradedMatrix& p, int d_max) {
  return hilbert_function(ring, p, 0, d_max);
}

std::vector<long> hilbert_function(const GradedRing& ring, const GradedMatrix& p, int d_min, int d_max) {
  Submodule s(ring, p);
  std::vector<std::vector<Monomial>> leads(p.rows());
  for (auto& g : s.basis().elements()) leads[g.lead().comp].push_back(g.lead().m);
  std::vector<long> out;
  for (int d = d_min; d <= d_max; ++d) {
    long count = 0;
    for (int i = 0; i < p.rows(); ++i)
      for (auto& m : monomials_of_degree(d - p.row_twists()[i], ring.degrees()))
        if (std::none_of(leads[i].begin(), leads[i].end(), [&](const Monomial& l) { return divides(l, m); })) ++count;
    out.push_back(count);
  }
  return out;
}

std::vector<Poly> intersect(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Vec> cols;
  std::vector<int> twists;
  for (auto& f : a) {
    cols.push_back(Vec::from_poly(f, 0));
    twists.push_back(f.degree());
  }
  for (auto& f : b) {
    cols.push_back(Vec::from_poly(f, 1));
    twists.push_back(f.degree());
  }
  return annihilator(q, GradedMatrix::from_columns(q.prime(), {0, 0}, twists, cols));
}

bool in_radical(const GradedRing& q, const std::vector<Poly>& ideal, const Poly& g) {
  if (g.is_zero()) return true;
  const int e = q.nvars();
  if (e + 1 > kMaxVars) throw Error(ErrorCode::TooManyVariables, "radical test needs one spare variable");
  std::vector<int> weights = q.degrees();
  weights.push_back(1);
  const Monomial t = Monomial::variable(e, weights);
  std::vector<Poly> gens = ideal;
  gens.push_back(Poly::constant(q.prime(), 1) - g.times(t, 1));
  return groebner_basis(q.prime(), weights, gens).is_unit();
}

bool same_radical(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  for (auto& g : a)
    if (!in_radical(q, b, g)) return false;
  for (auto& g : b)
    if (!in_radical(q, a, g)) return false;
  return true;
}

bool proj_contained(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  for (auto& g : b) {
    if (in_radical(q, a, g)) continue;
    for (int i = 0; i < q.nvars(); ++i)
      if (!in_radical(q, a, g * q.var(i))) return false;
  }
  return true;
}

GradedMatrix free_presentation(Coeff p, const std::vector<int>& twists) { return GradedMatrix(p, twists, {}); }

}  // namespace kci
