#include "kci/complex.hpp"

#include <algorithm>

#include "kci/errors.hpp"
#include "kci/ideal.hpp"

namespace kci {

namespace {

const std::vector<int> kEmpty;

bool zero_mod(const GradedRing& ring, const GradedMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!ring.reduce(m.at(i, j)).is_zero()) return false;
  return true;
}

bool equal_mod(const GradedRing& ring, const GradedMatrix& a, const GradedMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!ring.reduce(a.at(i, j) - b.at(i, j)).is_zero()) return false;
  return true;
}

std::vector<int> plus(std::vector<int> v, int w) {
  for (auto& x : v) x += w;
  return v;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Writes m into r at the given offset.
void place(GradedMatrix& r, int i0, int j0, const GradedMatrix& m, Coeff scale = 1) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.set(i0 + i, j0 + j, scale == 1 ? m.at(i, j) : m.at(i, j).scaled(scale));
}

Coeff sign(int k, Coeff p) { return (k % 2 == 0) ? 1 : p - 1; }

}  // namespace

FreeComplex::FreeComplex(GradedRing ring, int lo, std::vector<std::vector<int>> twists, std::vector<GradedMatrix> diffs)
    : ring_(std::move(ring)), lo_(lo), twists_(std::move(twists)), diffs_(std::move(diffs)) {
  if (diffs_.size() != twists_.size()) throw Error(ErrorCode::DimensionMismatch, "one differential per component");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const auto& below = k == 0 ? kEmpty : twists_[k - 1];
    if (diffs_[k].col_twists() != twists_[k] || diffs_[k].row_twists() != below)
      throw Error(ErrorCode::DimensionMismatch,
                  "differential out of degree " + std::to_string(lo_ + static_cast<int>(k)) + " has the wrong shape");
  }
}

FreeComplex FreeComplex::single(GradedRing ring, int s, std::vector<int> twists) {
  GradedMatrix d(ring.prime(), {}, twists);
  return FreeComplex(std::move(ring), s, {std::move(twists)}, {std::move(d)});
}

FreeComplex FreeComplex::zero(GradedRing ring) { return FreeComplex(std::move(ring), 0, {}, {}); }

const std::vector<int>& FreeComplex::twists(int s) const {
  if (s < lo_ || s > hi()) return kEmpty;
  return twists_[s - lo_];
}

GradedMatrix FreeComplex::d(int s) const {
  if (s >= lo_ && s <= hi()) return diffs_[s - lo_];
  return GradedMatrix(ring_.prime(), twists(s - 1), twists(s));
}

bool FreeComplex::is_zero() const {
  return std::all_of(twists_.begin(), twists_.end(), [](const std::vector<int>& t) { return t.empty(); });
}

std::optional<int> FreeComplex::first_d2_failure() const {
  for (int s = lo_ + 1; s <= hi(); ++s) {
    if (rank(s) == 0 || rank(s - 2) == 0) continue;
    if (!zero_mod(ring_, d(s - 1) * d(s))) return s;
  }
  return std::nullopt;
}

void FreeComplex::verify() const {
  if (auto s = first_d2_failure())
    throw Error(ErrorCode::InvariantViolated, "d^2 != 0 out of degree " + std::to_string(*s));
}

FreeComplex FreeComplex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && rank(a) == 0) ++a;
  while (b >= a && rank(b) == 0) --b;
  if (a > b) return zero(ring_);
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  for (int s = a; s <= b; ++s) {
    tw.push_back(twists(s));
    ds.push_back(s == a ? GradedMatrix(ring_.prime(), {}, twists(s)) : d(s));
  }
  return FreeComplex(ring_, a, std::move(tw), std::move(ds));
}

bool FreeComplex::operator==(const FreeComplex& o) const {
  FreeComplex a = trimmed(), b = o.trimmed();
  return a.lo_ == b.lo_ && a.twists_ == b.twists_ && a.diffs_ == b.diffs_;
}

GradedMatrix ChainMap::at(int s) const {
  if (s >= source.lo() && s - source.lo() < static_cast<int>(components.size())) return components[s - source.lo()];
  return GradedMatrix(source.ring().prime(), target.twists(s + degree), plus(source.twists(s), internal));
}

std::optional<int> ChainMap::first_failure() const {
  const GradedRing& ring = source.ring();
  const Coeff sg = sign(degree, ring.prime());
  for (int s = source.lo(); s <= source.hi() + 1; ++s) {
    if (source.rank(s) == 0) continue;
    if (target.rank(s + degree - 1) == 0) continue;
    GradedMatrix lhs = (target.d(s + degree) * at(s)).scaled(sg);
    GradedMatrix rhs = at(s - 1) * source.d(s);
    if (!equal_mod(ring, lhs, rhs)) return s;
  }
  return std::nullopt;
}

ChainMap identity_map(const FreeComplex& c) {
  ChainMap f{c, c, 0, 0, {}};
  for (int s = c.lo(); s <= c.hi(); ++s) f.components.push_back(GradedMatrix::identity(c.ring().prime(), c.twists(s)));
  return f;
}

ChainMap zero_map(const FreeComplex& source, const FreeComplex& target, int degree, int internal) {
  ChainMap f{source, target, degree, internal, {}};
  for (int s = source.lo(); s <= source.hi(); ++s)
    f.components.emplace_back(source.ring().prime(), target.twists(s + degree), plus(source.twists(s), internal));
  return f;
}

ChainMap scalar_map(const FreeComplex& c, const Poly& a) {
  if (!a.is_homogeneous()) throw Error(ErrorCode::InhomogeneousElement, "scalar map needs a homogeneous element");
  const int w = a.is_zero() ? 0 : a.degree();
  ChainMap f{c, c, 0, w, {}};
  for (int s = c.lo(); s <= c.hi(); ++s) {
    GradedMatrix m(c.ring().prime(), c.twists(s), plus(c.twists(s), w));
    for (int i = 0; i < m.rows(); ++i) m.set(i, i, a);
    f.components.push_back(std::move(m));
  }
  return f;
}

std::vector<unsigned> koszul_subsets(int n, int i) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (__builtin_popcount(s) == i) out.push_back(s);
  // lexicographic on the sorted element lists
  std::sort(out.begin(), out.end(), [n](unsigned a, unsigned b) {
    for (int k = 0; k < n; ++k) {
      const bool ia = (a >> k) & 1u, ib = (b >> k) & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });
  return out;
}

int koszul_index(int n, unsigned subset) {
  auto subs = koszul_subsets(n, __builtin_popcount(subset));
  return static_cast<int>(std::find(subs.begin(), subs.end(), subset) - subs.begin());
}

FreeComplex koszul_complex(const GradedRing& ring, const std::vector<Poly>& f) {
  const int n = static_cast<int>(f.size());
  for (int j = 0; j < n; ++j)
    if (f[j].is_zero() || !f[j].is_homogeneous())
      throw Error(ErrorCode::InhomogeneousInput, "Koszul element " + std::to_string(j + 1) + " is not homogeneous");
  auto twist = [&](unsigned s) {
    int t = 0;
    for (int j = 0; j < n; ++j)
      if ((s >> j) & 1u) t += f[j].degree();
    return t;
  };
  std::vector<std::vector<int>> tw;
  std::vector<std::vector<unsigned>> subs;
  for (int i = 0; i <= n; ++i) {
    subs.push_back(koszul_subsets(n, i));
    std::vector<int> t;
    for (unsigned s : subs.back()) t.push_back(twist(s));
    tw.push_back(std::move(t));
  }
  std::vector<GradedMatrix> ds;
  ds.emplace_back(ring.prime(), std::vector<int>{}, tw[0]);
  for (int i = 1; i <= n; ++i) {
    GradedMatrix m(ring.prime(), tw[i - 1], tw[i]);
    for (int c = 0; c < static_cast<int>(subs[i].size()); ++c) {
      const unsigned s = subs[i][c];
      int pos = 0;
      for (int j = 0; j < n; ++j) {
        if (!((s >> j) & 1u)) continue;
        const unsigned rest = s & ~(1u << j);
        const int r = static_cast<int>(std::find(subs[i - 1].begin(), subs[i - 1].end(), rest) - subs[i - 1].begin());
        m.set(r, c, f[j].scaled(sign(pos, ring.prime())));
        ++pos;
      }
    }
    ds.push_back(std::move(m));
  }
  FreeComplex k(ring, 0, std::move(tw), std::move(ds));
  k.verify();
  return k;
}

FreeComplex shift_complex(const FreeComplex& c, int i) {
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  const Coeff sg = sign(i < 0 ? -i : i, c.ring().prime());
  for (int s = c.lo(); s <= c.hi(); ++s) {
    tw.push_back(c.twists(s));
    ds.push_back(c.d(s).scaled(sg));
  }
  return FreeComplex(c.ring(), c.lo() + i, std::move(tw), std::move(ds));
}

FreeComplex mapping_cone(const ChainMap& f) {
  if (auto s = f.first_failure())
    throw Error(ErrorCode::NotAChainMap, "square at source degree " + std::to_string(*s) + " does not commute");
  const FreeComplex& x = f.source;
  const FreeComplex& y = f.target;
  const GradedRing& ring = x.ring();
  const Coeff p = ring.prime();
  const int d = f.degree;
  auto xt = [&](int s) { return plus(x.twists(s), f.internal); };
  const int lo = std::min(y.lo() - d, x.lo() + 1);
  const int hi = std::max(y.hi() - d, x.hi() + 1);
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  for (int s = lo; s <= hi; ++s) {
    const auto top = concat(y.twists(s + d), xt(s - 1));
    const auto below = s == lo ? std::vector<int>{} : concat(y.twists(s - 1 + d), xt(s - 2));
    GradedMatrix m(p, below, top);
    if (s != lo) {
      const int ny = y.rank(s - 1 + d);
      place(m, 0, 0, y.d(s + d), sign(d < 0 ? -d : d, p));
      place(m, 0, y.rank(s + d), f.at(s - 1));
      place(m, ny, y.rank(s + d), x.d(s - 1), p - 1);
    }
    tw.push_back(top);
    ds.push_back(std::move(m));
  }
  FreeComplex c(ring, lo, std::move(tw), std::move(ds));
  c.verify();
  return c;
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  const Coeff p = a.ring().prime();
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  for (int s = lo; s <= hi; ++s) {
    auto top = concat(a.twists(s), b.twists(s));
    auto below = s == lo ? std::vector<int>{} : concat(a.twists(s - 1), b.twists(s - 1));
    GradedMatrix m(p, below, top);
    if (s != lo) {
      place(m, 0, 0, a.d(s));
      place(m, a.rank(s - 1), a.rank(s), b.d(s));
    }
    tw.push_back(std::move(top));
    ds.push_back(std::move(m));
  }
  return FreeComplex(a.ring(), lo, std::move(tw), std::move(ds));
}

FreeComplex tensor_koszul(const FreeComplex& c, const std::vector<Poly>& x) {
  const int n = static_cast<int>(x.size());
  const GradedRing& ring = c.ring();
  const Coeff p = ring.prime();
  for (auto& g : x)
    if (!g.is_homogeneous() || g.is_zero())
      throw Error(ErrorCode::InhomogeneousInput, "Koszul elements must be nonzero and homogeneous");
  std::vector<std::vector<unsigned>> subs;
  for (int i = 0; i <= n; ++i) subs.push_back(koszul_subsets(n, i));
  auto twist = [&](unsigned s) {
    int t = 0;
    for (int j = 0; j < n; ++j)
      if ((s >> j) & 1u) t += x[j].degree();
    return t;
  };
  // Offsets of the (i, S) blocks inside total degree s.
  auto layout = [&](int s) {
    std::vector<int> tw;
    std::vector<std::vector<int>> offset(n + 1);
    for (int i = 0; i <= n; ++i)
      for (unsigned S : subs[i]) {
        offset[i].push_back(static_cast<int>(tw.size()));
        for (int t : c.twists(s - i)) tw.push_back(t + twist(S));
      }
    return std::make_pair(tw, offset);
  };
  const int lo = c.lo();
  const int hi = c.hi() + n;
  std::vector<std::vector<int>> tws;
  std::vector<GradedMatrix> ds;
  for (int s = lo; s <= hi; ++s) {
    auto [top, off] = layout(s);
    auto [below, offb] = layout(s - 1);
    if (s == lo) below.clear();
    GradedMatrix m(p, below, top);
    if (s != lo) {
      for (int i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < subs[i].size(); ++k) {
          const unsigned S = subs[i][k];
          place(m, offb[i][k], off[i][k], c.d(s - i));
          const Coeff sg = sign(s - i, p);
          int pos = 0;
          for (int j = 0; j < n; ++j) {
            if (!((S >> j) & 1u)) continue;
            const unsigned rest = S & ~(1u << j);
            const int r = koszul_index(n, rest);
            const Poly coeff = x[j].scaled(mul_mod(sg, sign(pos, p), p));
            for (int e = 0; e < c.rank(s - i); ++e) m.set(offb[i - 1][r] + e, off[i][k] + e, coeff);
            ++pos;
          }
        }
    }
    tws.push_back(top);
    ds.push_back(std::move(m));
  }
  FreeComplex t(ring, lo, std::move(tws), std::move(ds));
  t.verify();
  return t;
}

Homology complex_homology(const FreeComplex& c, int s) {
  const GradedRing& ring = c.ring();
  const Coeff p = ring.prime();
  Homology h;
  h.degree = s;
  if (c.rank(s) == 0) {
    h.cycles = GradedMatrix(p, {}, {});
    h.relations = h.presentation = GradedMatrix(p, {}, {});
    return h;
  }
  h.cycles = syzygy_kernel(ring, c.d(s));
  const int z = h.cycles.cols();
  GradedMatrix both = h.cycles.hconcat(c.d(s + 1));
  GradedMatrix k = syzygy_kernel(ring, both);
  std::vector<int> rows(z), cols(k.cols());
  for (int i = 0; i < z; ++i) rows[i] = i;
  for (int j = 0; j < k.cols(); ++j) cols[j] = j;
  h.relations = k.submatrix(rows, cols);
  h.presentation = prune_presentation(ring, h.relations);
  return h;
}

std::vector<Homology> complex_homology(const FreeComplex& c, int lo, int hi) {
  std::vector<Homology> out;
  for (int s = lo; s <= hi; ++s) out.push_back(complex_homology(c, s));
  return out;
}

std::vector<long> homology_hilbert(const FreeComplex& c, int s, int d_max) {
  return hilbert_function(c.ring(), complex_homology(c, s).presentation, d_max);
}

int default_degree_cap(const FreeComplex& c) {
  int m = 0;
  for (int s = c.lo(); s <= c.hi(); ++s)
    for (int t : c.twists(s)) m = std::max(m, t);
  return 2 * m + 6;
}

SupportSet module_support(const GradedRing& ring, const GradedMatrix& presentation) {
  SupportSet out;
  out.ideal = annihilator(ring, presentation);
  out.dimension = krull_dimension(ring.ambient(), out.ideal);
  return out;
}

SupportSet complex_support(const FreeComplex& c) { return complex_support(c, c.lo(), c.hi()); }

SupportSet complex_support(const FreeComplex& c, int lo, int hi) {
  const GradedRing q = c.ring().ambient();
  std::vector<Poly> ann{q.one()};
  bool first = true;
  for (int s = std::max(lo, c.lo()); s <= std::min(hi, c.hi()); ++s) {
    Homology h = complex_homology(c, s);
    if (h.is_zero()) continue;
    auto a = annihilator(c.ring(), h.presentation);
    ann = first ? a : intersect(q, ann, a);
    first = false;
  }
  SupportSet out;
  out.ideal = first ? std::vector<Poly>{q.one()} : minimal_generators(q, ann);
  out.dimension = krull_dimension(q, out.ideal);
  return out;
}

bool same_support(const GradedRing& ring, const SupportSet& a, const SupportSet& b) {
  return same_radical(ring.ambient(), a.ideal, b.ideal);
}

bool support_contained(const GradedRing& ring, const SupportSet& a, const SupportSet& b) {
  const GradedRing q = ring.ambient();
  for (auto& g : b.ideal)
    if (!in_radical(q, a.ideal, g)) return false;
  return true;
}

FreeComplex resolution_window(const GradedRing& ring, const GradedMatrix& presentation, int top) {
  GradedMatrix p = prune_presentation(ring, presentation);
  std::vector<std::vector<int>> tw{p.row_twists()};
  std::vector<GradedMatrix> ds{GradedMatrix(ring.prime(), {}, p.row_twists())};
  GradedMatrix cur = p;
  for (int s = 1; s <= top; ++s) {
    if (cur.cols() == 0) break;
    tw.push_back(cur.col_twists());
    ds.push_back(cur);
    if (s < top) cur = syzygy_kernel(ring, cur);
  }
  return FreeComplex(ring, 0, std::move(tw), std::move(ds)).trimmed();
}

GradedMatrix block_sum(const std::vector<GradedMatrix>& blocks, Coeff p) {
  std::vector<int> rt, ct;
  for (auto& b : blocks) {
    rt = concat(rt, b.row_twists());
    ct = concat(ct, b.col_twists());
  }
  GradedMatrix m(p, rt, ct);
  int i0 = 0, j0 = 0;
  for (auto& b : blocks) {
    place(m, i0, j0, b);
    i0 += b.rows();
    j0 += b.cols();
  }
  return m;
}

}  // namespace kci

namespace kci {

FreeComplex minimize_complex(const FreeComplex& c) {
  const GradedRing& ring = c.ring();
  const Coeff p = ring.prime();
  const int lo = c.lo();
  std::vector<std::vector<int>> tw;
  std::vector<GradedMatrix> ds;
  for (int s = lo; s <= c.hi(); ++s) {
    tw.push_back(c.twists(s));
    GradedMatrix d = c.d(s);
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) d.set(i, j, ring.reduce(d.at(i, j)));
    ds.push_back(std::move(d));
  }
  auto keep_except = [](int n, int skip) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (i != skip) v.push_back(i);
    return v;
  };
  auto all = [](int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  };
  for (std::size_t k = 1; k < ds.size();) {
    GradedMatrix& d = ds[k];
    int pi = -1, pj = -1;
    for (int j = 0; j < d.cols() && pj < 0; ++j)
      for (int i = 0; i < d.rows(); ++i)
        if (!d.at(i, j).is_zero() && d.at(i, j).is_constant()) {
          pi = i;
          pj = j;
          break;
        }
    if (pj < 0) {
      ++k;
      continue;
    }
    // Split off R e_j -> R e_i and correct the remaining block.
    const Coeff inv = inv_mod(d.at(pi, pj).constant_term(), p);
    GradedMatrix nd(p, [&] {
      auto t = d.row_twists();
      t.erase(t.begin() + pi);
      return t;
    }(), [&] {
      auto t = d.col_twists();
      t.erase(t.begin() + pj);
      return t;
    }());
    const auto rows = keep_except(d.rows(), pi);
    const auto cols = keep_except(d.cols(), pj);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) {
        Poly e = d.at(rows[a], cols[b]);
        if (!d.at(rows[a], pj).is_zero() && !d.at(pi, cols[b]).is_zero())
          e -= (d.at(rows[a], pj) * d.at(pi, cols[b])).scaled(inv);
        nd.set(static_cast<int>(a), static_cast<int>(b), ring.reduce(e));
      }
    if (k + 1 < ds.size()) ds[k + 1] = ds[k + 1].submatrix(keep_except(ds[k + 1].rows(), pj), all(ds[k + 1].cols()));
    ds[k - 1] = ds[k - 1].submatrix(all(ds[k - 1].rows()), keep_except(ds[k - 1].cols(), pi));
    tw[k].erase(tw[k].begin() + pj);
    tw[k - 1].erase(tw[k - 1].begin() + pi);
    d = std::move(nd);
    if (k > 1) --k;
  }
  return FreeComplex(ring, lo, std::move(tw), std::move(ds)).trimmed();
}

}  // namespace kci
