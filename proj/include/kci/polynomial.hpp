#pragma once

#include <vector>

#include "kci/field.hpp"
#include "kci/monomial.hpp"

namespace kci {

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse polynomial over F_p. Terms are kept strictly descending in weighted
/// degrevlex with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Coeff p) : p_(p) {}

  static Poly constant(Coeff p, std::int64_t c);
  static Poly monomial(Coeff p, const Monomial& m, Coeff c = 1);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(Coeff p, std::vector<Term> terms);

  Coeff modulus() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Highest weighted degree, -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  int min_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  /// Coefficient of the constant monomial.
  Coeff constant_term() const;
  Coeff coefficient(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly scaled(Coeff c) const;
  Poly times(const Monomial& m, Coeff c) const;
  /// Homogeneous component of weighted degree d.
  Poly component(int d) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;

 private:
  Coeff p_ = kDefaultPrime;
  std::vector<Term> terms_;
};

}  // namespace kci
