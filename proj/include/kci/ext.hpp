#pragma once

#include <string>
#include <vector>

#include "kci/dg.hpp"
#include "kci/linalg.hpp"
#include "kci/ring.hpp"

namespace kci {

/// Hom_E(U_E(P), k) for a Koszul resolution P: the free A-module on the
/// duals p* of a basis of P (x) k, p* in cohomological degree |p|, with
/// differential D(p*) = sum_q (d mod n)(q,p) q* + sum_i chi_i (lambda_i mod n)(q,p) q*.
struct CollapsedComplex {
  Coeff p = kDefaultPrime;
  std::vector<int> f_degrees;
  int lo = 0;
  /// twists[k]: internal twists of P in homological degree lo + k.
  std::vector<std::vector<int>> twists;
  /// d[k]: constant part of d_{lo+k}, rows P_{lo+k-1}, columns P_{lo+k}.
  std::vector<DenseMatrix> d;
  /// lambda[i][k]: constant part of lambda_i on P_{lo+k}, rows P_{lo+k+1}.
  std::vector<std::vector<DenseMatrix>> lambda;

  int n() const { return static_cast<int>(f_degrees.size()); }
  int hi() const { return lo + static_cast<int>(twists.size()) - 1; }
  int rank(int s) const;
  /// The differential as one square matrix over A (rows and columns are all
  /// p*, ordered by degree then index; row twists |q|, column twists |p|+1).
  GradedMatrix differential(const GradedRing& a) const;
  bool differential_is_zero() const;
};

/// Throws NotSemiprojective when D^2 != 0.
CollapsedComplex collapse(const DGEModule& p);

/// Finitely generated graded module over A = k[chi_1..chi_n] (every chi in
/// cohomological degree 2), known in cohomological degrees <= bound.
struct GradedAModule {
  GradedRing a;
  /// Rows are generators (twist = cohomological degree), columns relations.
  GradedMatrix presentation;
  int bound = 0;
  /// dims[k] = dim_k of the degree lo + k piece, for lo + k <= bound.
  int lo = 0;
  std::vector<long> dims;

  std::vector<int> generator_degrees() const { return presentation.row_twists(); }
  long dim(int m) const;
};

/// Ext_E^*(P, k) as a graded A-module from the collapsed complex, with
/// generators and relations in cohomological degrees <= bound.
GradedAModule ext_from_collapse(const CollapsedComplex& c, int bound);

/// Ext_E^*(M, k) for M = coker(presentation) over Q/(f), through the minimal
/// E-free resolution truncated at N; authoritative in degrees <= N - 2.
GradedAModule ext_module(const KoszulAlgebra& e, const GradedMatrix& presentation, int n_bound);

/// The free A-module on C(e, i) generators of degree i. Throws
/// HypothesisViolated unless every f_i lies in n^2.
GradedAModule ext_kk_closed_form(const KoszulAlgebra& e, int bound);

/// V(Ann X) in Proj A, kept as the annihilator ideal (compare through
/// radicals); dimension is the projective dimension, -1 when empty.
struct SupportVariety {
  GradedRing a;
  std::vector<Poly> ideal;
  int dimension = -1;
  bool empty() const { return dimension < 0; }
  std::string to_string() const;
};

SupportVariety support_variety(const GradedAModule& x);
/// V(g_1..g_m); throws InhomogeneousElement.
SupportVariety variety_of_elements(const GradedRing& a, const std::vector<Poly>& g);
bool same_variety(const SupportVariety& x, const SupportVariety& y);
/// V(x) is contained in V(y).
bool variety_contained(const SupportVariety& x, const SupportVariety& y);

/// Support of M computed at bounds N and N + 2; stable when both agree.
struct StableSupport {
  SupportVariety variety;
  GradedAModule ext;
  int bound = 0;
  bool stable = false;
};
StableSupport stable_support(const KoszulAlgebra& e, const GradedMatrix& presentation, int n_bound);

struct SesReport {
  bool ok = true;
  bool additive = true;
  bool annihilators = true;
  std::vector<long> dims_m;
  std::vector<long> dims_mx;
  std::string message;
};

/// Checks the Koszul-tensor exact sequence for Ext of the DG module m and
/// m (x) Kos(x) in degrees lo..bound: additivity of dimensions and
/// Ann(Ext M)^2 in Ann(Ext M (x) Kos x) in rad Ann(Ext M).
SesReport ses_koszul_check(const DGEModule& m, const Poly& x, int bound);

}  // namespace kci
