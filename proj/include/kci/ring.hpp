#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kci/groebner.hpp"
#include "kci/polynomial.hpp"

namespace kci {

/// A standard graded polynomial ring k[x_1..x_e] over F_p, optionally with a
/// homogeneous ideal of relations (then the value models R = Q/I). Immutable
/// and cheap to copy; the relation Groebner basis is shared.
class GradedRing {
 public:
  GradedRing() = default;

  /// Validates: p prime, positive degrees, homogeneous relations.
  static GradedRing make(Coeff p, std::vector<std::string> vars, std::vector<int> degs,
                         std::vector<Poly> relations = {});
  /// Relations as strings in the ring's own variables.
  static GradedRing make(Coeff p, std::vector<std::string> vars, std::vector<int> degs,
                         const std::vector<std::string>& relations);
  /// k[vars] with all degrees 1 and default prime.
  static GradedRing polynomial(std::vector<std::string> vars, Coeff p = kDefaultPrime);

  Coeff prime() const { return p_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& degrees() const { return degs_; }
  const std::vector<Poly>& relations() const { return relations_; }
  bool is_polynomial_ring() const { return relations_.empty(); }

  /// Same variables, no relations.
  GradedRing ambient() const;
  /// Same variables, the given relations.
  GradedRing quotient(std::vector<Poly> relations) const;

  Poly zero() const { return Poly(p_); }
  Poly one() const { return Poly::constant(p_, 1); }
  Poly constant(std::int64_t c) const { return Poly::constant(p_, c); }
  Poly var(int i) const;
  Poly var(const std::string& name) const;
  Monomial monomial(std::span<const int> exps) const { return Monomial::from_exponents(exps, degs_); }

  /// Normal form modulo the relations (identity on a polynomial ring).
  Poly reduce(const Poly& f) const;
  const GroebnerBasis& relation_basis() const { return *relation_gb_; }

  /// Parses "3*x^2*y - y^3 + 1"; throws ParseFailure (column is 1-based
  /// within text, line as given).
  Poly parse(const std::string& text, int line = 1, int column_offset = 0) const;
  /// Canonical form: degrevlex terms, "*" products, "^" powers, symmetric
  /// coefficients with a leading "-" for negative ones.
  std::string to_string(const Poly& f) const;

  ModuleContext context(std::vector<int> twists = {0}) const { return ModuleContext{p_, degs_, std::move(twists)}; }

  bool operator==(const GradedRing& o) const;

 private:
  Coeff p_ = kDefaultPrime;
  std::vector<std::string> vars_;
  std::vector<int> degs_;
  std::vector<Poly> relations_;
  std::shared_ptr<const GroebnerBasis> relation_gb_;
};

}  // namespace kci
