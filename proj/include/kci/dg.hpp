#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kci/complex.hpp"
#include "kci/module.hpp"
#include "kci/ring.hpp"

namespace kci {

/// E = Kos^Q(f) on homogeneous f_1..f_n over a polynomial ring Q, with
/// exterior basis xi_S indexed by bitmasks.
class KoszulAlgebra {
 public:
  KoszulAlgebra() = default;
  /// Throws InhomogeneousInput for zero or inhomogeneous f_i.
  KoszulAlgebra(GradedRing q, std::vector<Poly> f);

  const GradedRing& base() const { return q_; }
  const std::vector<Poly>& f() const { return f_; }
  int n() const { return static_cast<int>(f_.size()); }
  const std::vector<int>& degrees() const { return degs_; }
  /// Internal degree of xi_S.
  int twist(unsigned subset) const;
  FreeComplex complex() const;
  /// R = Q/(f).
  GradedRing quotient() const { return q_.quotient(f_); }

  /// Every f_i has all terms of degree >= 2 in the variables.
  bool in_n_squared() const;
  /// f minimally generates (f).
  bool is_minimal() const;

 private:
  GradedRing q_;
  std::vector<Poly> f_;
  std::vector<int> degs_;
};

/// xi_S xi_T = sign * xi_{S|T}; 0 when S and T meet.
int exterior_sign(unsigned s, unsigned t);

/// A strict DG E-module whose underlying complex is Q-free: lambda_i is left
/// multiplication by xi_i, a map C_s -> C_{s+1} raising internal degree by
/// deg f_i (column twists are the C_s twists plus deg f_i).
class DGEModule {
 public:
  DGEModule() = default;
  /// lambda[i][k] belongs to source degree complex.lo() + k.
  DGEModule(FreeComplex complex, std::vector<Poly> f, std::vector<std::vector<GradedMatrix>> lambda);
  static DGEModule zero(const KoszulAlgebra& e);

  const FreeComplex& complex() const { return c_; }
  const GradedRing& ring() const { return c_.ring(); }
  const std::vector<Poly>& f() const { return f_; }
  int n() const { return static_cast<int>(f_.size()); }
  int lo() const { return c_.lo(); }
  int hi() const { return c_.hi(); }
  /// lambda_i : C_s -> C_{s+1}, correctly shaped for every s.
  GradedMatrix lambda(int i, int s) const;

 private:
  FreeComplex c_;
  std::vector<Poly> f_;
  std::vector<std::vector<GradedMatrix>> lambda_;
};

struct DGReport {
  bool ok = true;
  /// "d^2", "Leibniz", "lambda^2" or "anticommutation".
  std::string identity;
  int degree = 0;
  int i = -1;
  int j = -1;
  std::string message() const;
};

DGReport dg_module_verify(const DGEModule& x);

/// a with f_i = sum_j a_ij g_j: greedy division by g in order, falling back
/// to a Groebner lift when the remainder is nonzero. Throws NotInIdeal.
std::vector<std::vector<Poly>> division_witnesses(const GradedRing& q, const std::vector<Poly>& f,
                                                  const std::vector<Poly>& g);

/// Kos^Q(target) as a DG E-module, lambda_i = left multiplication by
/// sum_j a_ij xi'_j.
DGEModule koszul_action(const KoszulAlgebra& e, const std::vector<Poly>& target);

/// X (x) Kos^Q(x) with lambda_i acting on the first factor; the basis matches
/// tensor_koszul.
DGEModule dg_tensor_koszul(const DGEModule& x, const std::vector<Poly>& elems);

/// Minimal semifree resolution E (x) V -> M of M = coker(presentation) over
/// R = Q/(f), with generators in homological degrees 0..bound-1. E (x) V_{<bound}
/// is itself a DG E-module; it agrees with a full resolution in degrees
/// <= bound-1 and its augmentation is a quasi-isomorphism below bound-1.
struct EFreeResolution {
  KoszulAlgebra algebra;
  int bound = 0;
  /// Pruned presentation of M over R; its rows are V_0.
  GradedMatrix target;
  /// generators[t]: internal twists of V_t.
  std::vector<std::vector<int>> generators;
  /// images[t][v]: the boundary of generator v of V_t, in F_{t-1}.
  std::vector<std::vector<Vec>> images;
  DGEModule module;

  int rank(int t) const { return t < static_cast<int>(generators.size()) ? static_cast<int>(generators[t].size()) : 0; }
  /// Position of xi_S (x) v (v the index within V_t) inside F_{|S|+t}.
  int index(unsigned subset, int t, int v) const;
};

EFreeResolution e_free_resolution(const KoszulAlgebra& e, const GradedMatrix& presentation, int bound);

/// Multi-index H of the divided power y^(H), homological degree 2|H|.
struct DividedPowerIndex {
  std::vector<int> h;

  int weight() const;
  /// chi_i y^(H): lowers h_i, or nothing when h_i = 0.
  std::optional<DividedPowerIndex> chi(int i) const;
  bool operator==(const DividedPowerIndex&) const = default;
};

/// All H with |H| = j in n variables, lexicographically descending.
std::vector<DividedPowerIndex> divided_powers(int n, int j);

/// One basis element xi_S (x) y^(H) (x) p of U_E(P).
struct UCell {
  unsigned subset = 0;
  DividedPowerIndex power;
  int p_degree = 0;
  int p_index = 0;
};

/// U_E(P) truncated to |H| <= gamma, with its S-action.
struct UConstruction {
  DGEModule module;
  int gamma = 0;
  int bound = 0;
  /// cells[k]: basis of U in degree module.lo() + k.
  std::vector<std::vector<UCell>> cells;
  /// Degrees where the truncation agrees with U_E(P).
  int authoritative_below() const { return 2 * gamma + 2; }
  /// The S-action by chi_i, a chain map of degree -2 and internal shift
  /// -deg f_i.
  ChainMap chi(int i) const;
  /// Action of a homogeneous g in k[chi] (variables chi1..chin).
  ChainMap action(const GradedRing& a, const Poly& g) const;
};

/// U_E(P) with |H| <= bound/2. Throws NotKoszulResolution when P fails a
/// DG-module identity.
UConstruction u_construction(const DGEModule& p, int bound);

/// A = k[chi_1..chi_n] with every chi in cohomological degree 2.
GradedRing chi_ring(int n, Coeff p = kDefaultPrime);

/// cone(U --g--> U) as a DG E-module, lambda = diag(lambda, -lambda).
/// Throws InhomogeneousElement.
DGEModule c_tilde(const UConstruction& u, const GradedRing& a, const Poly& g);

}  // namespace kci
