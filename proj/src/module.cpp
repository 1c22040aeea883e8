#include "kci/module.hpp"

#include <algorithm>

#include "kci/errors.hpp"

namespace kci {

Vec Vec::from_terms(Coeff p, std::vector<VTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const VTerm& a, const VTerm& b) { return compare_pot(a.m, a.comp, b.m, b.comp) > 0; });
  Vec r(p);
  for (auto& t : terms) {
    Coeff c = t.c % p;
    if (!r.terms_.empty() && r.terms_.back().comp == t.comp && r.terms_.back().m == t.m) {
      r.terms_.back().c = add_mod(r.terms_.back().c, c, p);
      if (r.terms_.back().c == 0) r.terms_.pop_back();
    } else if (c != 0) {
      r.terms_.push_back({t.m, t.comp, c});
    }
  }
  return r;
}

Vec Vec::from_poly(const Poly& f, int comp) {
  Vec r(f.modulus());
  r.terms_.reserve(f.size());
  for (auto& t : f.terms()) r.terms_.push_back({t.m, comp, t.c});
  return r;
}

Vec Vec::unit(Coeff p, int comp) {
  Vec r(p);
  r.terms_.push_back({Monomial{}, comp, 1});
  return r;
}

Poly Vec::component(int comp) const {
  std::vector<Term> t;
  for (auto& v : terms_)
    if (v.comp == comp) t.push_back({v.m, v.c});
  // already sorted within a component
  Poly r = Poly::from_terms(p_, std::move(t));
  return r;
}

int Vec::max_component() const {
  int m = -1;
  for (auto& t : terms_) m = std::max(m, t.comp);
  return m;
}

Vec Vec::operator+(const Vec& o) const {
  Vec r(p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[j];
    int c = compare_pot(a.m, a.comp, b.m, b.comp);
    if (c > 0) {
      r.terms_.push_back(a);
      ++i;
    } else if (c < 0) {
      r.terms_.push_back(b);
      ++j;
    } else {
      Coeff s = add_mod(a.c, b.c, p_);
      if (s != 0) r.terms_.push_back({a.m, a.comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + o.scaled(p_ - 1); }

Vec Vec::scaled(Coeff c) const {
  c %= p_;
  Vec r(p_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = mul_mod(t.c, c, p_);
  return r;
}

Vec Vec::times(const Monomial& m, Coeff c) const {
  c %= p_;
  Vec r(p_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, t.comp, mul_mod(t.c, c, p_)});
  return r;
}

Vec Vec::times(const Poly& f) const {
  Vec acc(p_);
  for (auto& t : f.terms()) acc = acc + times(t.m, t.c);
  return acc;
}

Vec Vec::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead().c, p_));
}

Vec Vec::tail() const {
  Vec r(p_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Vec Vec::slice(int lo, int hi) const {
  Vec r(p_);
  for (auto& t : terms_)
    if (t.comp >= lo && t.comp < hi) r.terms_.push_back({t.m, t.comp - lo, t.c});
  return r;
}

Vec Vec::offset(int off) const {
  Vec r = *this;
  for (auto& t : r.terms_) t.comp += off;
  return r;
}

int Vec::degree(const std::vector<int>& twists) const {
  if (terms_.empty()) return -1;
  return terms_.front().m.deg + twists[terms_.front().comp];
}

bool Vec::is_homogeneous(const std::vector<int>& twists) const {
  if (terms_.empty()) return true;
  int d = degree(twists);
  for (auto& t : terms_)
    if (t.m.deg + twists[t.comp] != d) return false;
  return true;
}

bool Vec::operator==(const Vec& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.comp != b.comp || !(a.m == b.m) || a.c != b.c) return false;
  }
  return true;
}

// ---------------------------------------------------------------- matrices

GradedMatrix::GradedMatrix(Coeff p, std::vector<int> row_twists, std::vector<int> col_twists)
    : p_(p), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)) {
  entries_.assign(row_twists_.size() * col_twists_.size(), Poly(p_));
}

GradedMatrix GradedMatrix::from_columns(Coeff p, std::vector<int> row_twists, std::vector<int> col_twists,
                                        const std::vector<Vec>& columns) {
  GradedMatrix m(p, std::move(row_twists), std::move(col_twists));
  if (static_cast<int>(columns.size()) != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "column count does not match column twists");
  for (int j = 0; j < m.cols(); ++j) {
    if (columns[j].max_component() >= m.rows())
      throw Error(ErrorCode::DimensionMismatch, "column has a component beyond the row count");
    for (int i = 0; i < m.rows(); ++i) m.set(i, j, columns[j].component(i));
  }
  return m;
}

GradedMatrix GradedMatrix::identity(Coeff p, const std::vector<int>& twists) {
  GradedMatrix m(p, twists, twists);
  for (int i = 0; i < m.rows(); ++i) m.set(i, i, Poly::constant(p, 1));
  return m;
}

void GradedMatrix::add_to(int i, int j, const Poly& f) {
  auto& e = entries_[static_cast<std::size_t>(i) * cols() + j];
  e = e + f;
}

Vec GradedMatrix::column(int j) const {
  std::vector<VTerm> t;
  for (int i = 0; i < rows(); ++i)
    for (auto& term : at(i, j).terms()) t.push_back({term.m, i, term.c});
  return Vec::from_terms(p_, std::move(t));
}

std::vector<Vec> GradedMatrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols());
  for (int j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& f) { return f.is_zero(); });
}

std::pair<int, int> GradedMatrix::first_inhomogeneous() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Poly& f = at(i, j);
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != col_twists_[j] - row_twists_[i]) return {i, j};
    }
  return {-1, -1};
}

bool GradedMatrix::is_homogeneous() const { return first_inhomogeneous().first < 0; }

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  if (cols() != o.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  GradedMatrix r(p_, row_twists_, o.col_twists_);
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) {
        const Poly& b = o.at(k, j);
        if (!b.is_zero()) r.add_to(i, j, a * b);
      }
    }
  return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  GradedMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const { return *this + o.scaled(p_ - 1); }

GradedMatrix GradedMatrix::scaled(Coeff c) const {
  GradedMatrix r = *this;
  for (auto& e : r.entries_) e = e.scaled(c);
  return r;
}

GradedMatrix GradedMatrix::times(const Poly& f) const {
  GradedMatrix r = *this;
  for (auto& e : r.entries_) e = e * f;
  return r;
}

GradedMatrix GradedMatrix::hconcat(const GradedMatrix& o) const {
  if (rows() != o.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  std::vector<int> ct = col_twists_;
  ct.insert(ct.end(), o.col_twists_.begin(), o.col_twists_.end());
  GradedMatrix r(p_, row_twists_, ct);
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < o.cols(); ++j) r.set(i, cols() + j, o.at(i, j));
  }
  return r;
}

GradedMatrix GradedMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
  std::vector<int> rt, ct;
  for (int i : rs) rt.push_back(row_twists_[i]);
  for (int j : cs) ct.push_back(col_twists_[j]);
  GradedMatrix r(p_, rt, ct);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) r.set(static_cast<int>(a), static_cast<int>(b), at(rs[a], cs[b]));
  return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return row_twists_ == o.row_twists_ && col_twists_ == o.col_twists_ && entries_ == o.entries_;
}

}  // namespace kci
