#include "kci/linalg.hpp"

#include <algorithm>

#include "kci/errors.hpp"

namespace kci {

DenseMatrix DenseMatrix::identity(Coeff p, int n) {
  DenseMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Coeff> DenseMatrix::row(int i) const {
  return {a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_};
}

std::vector<Coeff> DenseMatrix::column(int j) const {
  std::vector<Coeff> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "dense product shape mismatch");
  DenseMatrix r(p_, rows_, o.cols_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      const Coeff a = (*this)(i, k);
      if (a == 0) continue;
      const Coeff* b = &o.a_[std::size_t(k) * o.cols_];
      for (int j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + std::uint64_t(a) * b[j]) % p_;
    }
    for (int j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Coeff>(acc[j]);
  }
  return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "dense sum shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = add_mod(a_[k], o.a_[k], p_);
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const { return *this + o.scaled(p_ - 1); }

DenseMatrix DenseMatrix::scaled(Coeff c) const {
  DenseMatrix r = *this;
  for (auto& x : r.a_) x = mul_mod(x, c, p_);
  return r;
}

std::vector<Coeff> DenseMatrix::apply(const std::vector<Coeff>& x) const {
  std::vector<Coeff> y(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (int j = 0; j < cols_; ++j) s = (s + std::uint64_t((*this)(i, j)) * x[j]) % p_;
    y[i] = static_cast<Coeff>(s);
  }
  return y;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Coeff c) { return c == 0; });
}

DenseMatrix DenseMatrix::from_columns(Coeff p, int rows, const std::vector<std::vector<Coeff>>& cols) {
  DenseMatrix m(p, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

DenseMatrix DenseMatrix::hconcat(const DenseMatrix& o) const {
  if (rows_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "dense hconcat row mismatch");
  DenseMatrix r(p_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

std::vector<int> rref(DenseMatrix& m) {
  const Coeff p = m.modulus();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Coeff inv = inv_mod(m(r, c), p);
    for (int j = c; j < m.cols(); ++j) m(r, j) = mul_mod(m(r, j), inv, p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Coeff f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = sub_mod(m(i, j), mul_mod(f, m(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(DenseMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Coeff>> nullspace(const DenseMatrix& m) {
  DenseMatrix r = m;
  const std::vector<int> piv = rref(r);
  const Coeff p = m.modulus();
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Coeff>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = neg_mod(r(static_cast<int>(k), f), p);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Coeff>> solve(const DenseMatrix& m, const std::vector<Coeff>& b) {
  DenseMatrix aug(m.modulus(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Coeff> x(m.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(static_cast<int>(k), m.cols());
  return x;
}

std::vector<Coeff> Span::reduce(std::vector<Coeff> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Coeff f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& r = rows_[k];
    for (int j = 0; j < dim_; ++j)
      if (r[j] != 0) v[j] = sub_mod(v[j], mul_mod(f, r[j], p_), p_);
  }
  return v;
}

bool Span::contains(const std::vector<Coeff>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool Span::insert(std::vector<Coeff> v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const Coeff inv = inv_mod(v[piv], p_);
  for (auto& c : v) c = mul_mod(c, inv, p_);
  for (auto& r : rows_) {
    const Coeff f = r[piv];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j)
      if (v[j] != 0) r[j] = sub_mod(r[j], mul_mod(f, v[j], p_), p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace kci
