#pragma once

#include <cstddef>
#include <vector>

#include "kci/module.hpp"

namespace kci {

/// Everything the Buchberger kernel needs to know about the ambient free
/// module: the prime, variable weights and per-component twists. Ideals are
/// the rank-one case with twist 0.
struct ModuleContext {
  Coeff p = kDefaultPrime;
  std::vector<int> weights;
  std::vector<int> twists{0};

  int nvars() const { return static_cast<int>(weights.size()); }
  int rank() const { return static_cast<int>(twists.size()); }
};

/// Reduced Groebner basis for position-over-term degrevlex, computed by
/// Buchberger's algorithm with Gebauer-Moeller pair elimination. Work is
/// processed by (sugar) degree, S-pairs before inputs, so for homogeneous
/// input the inputs that survive reduction form a graded-Nakayama minimal
/// generating set.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(ModuleContext ctx, const std::vector<Vec>& generators);

  const ModuleContext& context() const { return ctx_; }
  /// Monic, fully reduced, ascending by lead term.
  const std::vector<Vec>& elements() const { return basis_; }
  bool homogeneous() const { return homogeneous_; }
  bool is_unit() const;

  Vec normal_form(const Vec& f) const;
  bool contains(const Vec& f) const { return normal_form(f).is_zero(); }

  /// Indices into the input list of a minimal generating subset, ascending.
  const std::vector<std::size_t>& minimal_input() const { return minimal_input_; }

  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  ModuleContext ctx_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> minimal_input_;
  bool homogeneous_ = true;
  std::size_t pairs_reduced_ = 0;
};

/// Ideal helpers: polynomials are rank-one module elements.
GroebnerBasis groebner_basis(Coeff p, const std::vector<int>& weights, const std::vector<Poly>& gens);
std::vector<Poly> basis_polys(const GroebnerBasis& gb);
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

}  // namespace kci
