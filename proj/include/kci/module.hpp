#pragma once

#include <vector>

#include "kci/polynomial.hpp"

namespace kci {

struct VTerm {
  Monomial m;
  int comp;
  Coeff c;
};

/// Position-over-term: a lower component index ranks higher, then degrevlex.
inline int compare_pot(const Monomial& am, int ac, const Monomial& bm, int bc) {
  if (ac != bc) return ac < bc ? 1 : -1;
  return compare_degrevlex(am, bm);
}

/// Element of a free module, terms strictly descending in position-over-term.
class Vec {
 public:
  Vec() = default;
  explicit Vec(Coeff p) : p_(p) {}

  static Vec from_terms(Coeff p, std::vector<VTerm> terms);
  static Vec from_poly(const Poly& f, int comp);
  static Vec unit(Coeff p, int comp);

  Coeff modulus() const { return p_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& lead() const { return terms_.front(); }

  Poly component(int comp) const;
  /// Largest component index in use, -1 for zero.
  int max_component() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(Coeff c) const;
  Vec times(const Monomial& m, Coeff c) const;
  Vec times(const Poly& f) const;
  Vec monic() const;
  /// Drops the lead term.
  Vec tail() const;
  /// Keeps components in [lo, hi) and renumbers them to start at 0.
  Vec slice(int lo, int hi) const;
  /// Renumbers every component by +offset.
  Vec offset(int offset) const;

  /// Weighted degree of the lead term including its component twist.
  int degree(const std::vector<int>& twists) const;
  bool is_homogeneous(const std::vector<int>& twists) const;

  bool operator==(const Vec& o) const;

 private:
  Coeff p_ = kDefaultPrime;
  std::vector<VTerm> terms_;
};

/// Matrix of polynomials between graded free modules. Column j is the image of
/// the j-th basis element of the source (twist col_twists[j]) in the target
/// (twists row_twists); a homogeneous entry (i,j) has degree
/// col_twists[j] - row_twists[i].
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(Coeff p, std::vector<int> row_twists, std::vector<int> col_twists);

  static GradedMatrix from_columns(Coeff p, std::vector<int> row_twists, std::vector<int> col_twists,
                                   const std::vector<Vec>& columns);
  static GradedMatrix identity(Coeff p, const std::vector<int>& twists);

  Coeff modulus() const { return p_; }
  int rows() const { return static_cast<int>(row_twists_.size()); }
  int cols() const { return static_cast<int>(col_twists_.size()); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }

  const Poly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols() + j]; }
  void set(int i, int j, Poly f) { entries_[static_cast<std::size_t>(i) * cols() + j] = std::move(f); }
  void add_to(int i, int j, const Poly& f);

  Vec column(int j) const;
  std::vector<Vec> columns() const;

  bool is_zero() const;
  bool is_homogeneous() const;
  /// First (row, col) with an inhomogeneous or wrongly-graded entry, or (-1,-1).
  std::pair<int, int> first_inhomogeneous() const;

  /// Composition: (*this) after o, i.e. the product this * o.
  GradedMatrix operator*(const GradedMatrix& o) const;
  GradedMatrix operator+(const GradedMatrix& o) const;
  GradedMatrix operator-(const GradedMatrix& o) const;
  GradedMatrix scaled(Coeff c) const;
  GradedMatrix times(const Poly& f) const;

  /// Columns of *this followed by columns of o (same rows).
  GradedMatrix hconcat(const GradedMatrix& o) const;
  GradedMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  bool operator==(const GradedMatrix& o) const;

 private:
  Coeff p_ = kDefaultPrime;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
  std::vector<Poly> entries_;
};

}  // namespace kci
