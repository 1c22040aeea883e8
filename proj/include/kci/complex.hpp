#pragma once

#include <optional>
#include <vector>

#include "kci/module.hpp"
#include "kci/ring.hpp"

namespace kci {

/// Finite complex of graded free modules over a ring (Q or Q/I), homological
/// grading, differential of degree -1. Components live in degrees lo..hi;
/// everything outside is zero.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// twists[k] and diffs[k] belong to homological degree lo + k; diffs[k]
  /// maps C_{lo+k} to C_{lo+k-1}. Shapes are validated, d^2 = 0 is not.
  FreeComplex(GradedRing ring, int lo, std::vector<std::vector<int>> twists, std::vector<GradedMatrix> diffs);
  /// The complex with one free module in degree s.
  static FreeComplex single(GradedRing ring, int s, std::vector<int> twists);
  static FreeComplex zero(GradedRing ring);

  const GradedRing& ring() const { return ring_; }
  int lo() const { return lo_; }
  /// Highest degree with storage; lo - 1 when empty.
  int hi() const { return lo_ + static_cast<int>(twists_.size()) - 1; }
  int rank(int s) const { return static_cast<int>(twists(s).size()); }
  const std::vector<int>& twists(int s) const;
  /// d_s : C_s -> C_{s-1}, correctly shaped (possibly empty) for every s.
  GradedMatrix d(int s) const;
  bool is_zero() const;

  /// First s with d_{s-1} d_s != 0 over the ring, or nothing.
  std::optional<int> first_d2_failure() const;
  /// Throws InvariantViolated if d^2 != 0.
  void verify() const;

  /// Drops zero components at both ends.
  FreeComplex trimmed() const;

  bool operator==(const FreeComplex& o) const;

 private:
  GradedRing ring_;
  int lo_ = 0;
  std::vector<std::vector<int>> twists_;
  std::vector<GradedMatrix> diffs_;
};

/// Homogeneous chain map X_s -> Y_{s+degree}. The component matrices have
/// column twists equal to the source twists plus `internal`, so they are
/// ordinary degree-preserving graded matrices.
struct ChainMap {
  FreeComplex source;
  FreeComplex target;
  int degree = 0;
  int internal = 0;
  /// components[k] belongs to source degree source.lo() + k.
  std::vector<GradedMatrix> components;

  GradedMatrix at(int s) const;
  /// First s where (-1)^degree d^Y f_s - f_{s-1} d^X fails, or nothing.
  std::optional<int> first_failure() const;
};

ChainMap identity_map(const FreeComplex& c);
ChainMap zero_map(const FreeComplex& source, const FreeComplex& target, int degree, int internal = 0);
/// Multiplication by a homogeneous ring element, a degree-0 self-map.
ChainMap scalar_map(const FreeComplex& c, const Poly& a);

/// Subsets of {0..n-1} of size i in lexicographic order, as bitmasks.
std::vector<unsigned> koszul_subsets(int n, int i);
/// Position of a subset within koszul_subsets(n, popcount).
int koszul_index(int n, unsigned subset);

/// Koszul complex on f with basis xi_S in degree |S|.
FreeComplex koszul_complex(const GradedRing& ring, const std::vector<Poly>& f);

/// Sigma^i C: (Sigma^i C)_s = C_{s-i}, differential (-1)^i d.
FreeComplex shift_complex(const FreeComplex& c, int i);

/// cone_s = Y_{s+d} + X_{s-1}, differential [[(-1)^d dY, f], [0, -dX]].
/// Throws NotAChainMap naming the first failing square.
FreeComplex mapping_cone(const ChainMap& f);

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

/// Total complex C (x) Kos(x) with basis c (x) xi_S ordered by |S|, then S,
/// then c; d(c (x) xi_S) = dc (x) xi_S + (-1)^|c| c (x) d xi_S.
FreeComplex tensor_koszul(const FreeComplex& c, const std::vector<Poly>& x);

struct Homology {
  int degree = 0;
  /// Minimal generators of the cycles, as columns in C_s.
  GradedMatrix cycles;
  /// Relations among the cycle generators: boundaries and I-multiples.
  GradedMatrix relations;
  /// A minimal presentation of the same module.
  GradedMatrix presentation;

  bool is_zero() const { return presentation.rows() == 0; }
};

Homology complex_homology(const FreeComplex& c, int s);
std::vector<Homology> complex_homology(const FreeComplex& c, int lo, int hi);
/// dim_k H_s(C)_d for d in 0..d_max.
std::vector<long> homology_hilbert(const FreeComplex& c, int s, int d_max);
/// Internal-degree cap used when none is given: 2 * (max twist) + 6.
int default_degree_cap(const FreeComplex& c);

/// V(Ann H(C)) as the annihilator ideal (in the ambient polynomial ring,
/// containing the relations) and the Krull dimension of its quotient; -1
/// means empty support.
struct SupportSet {
  std::vector<Poly> ideal;
  int dimension = -1;
  bool empty() const { return dimension < 0; }
};

SupportSet complex_support(const FreeComplex& c);
/// Support of the homology in degrees lo..hi only.
SupportSet complex_support(const FreeComplex& c, int lo, int hi);
SupportSet module_support(const GradedRing& ring, const GradedMatrix& presentation);
bool same_support(const GradedRing& ring, const SupportSet& a, const SupportSet& b);
/// Supp a is contained in Supp b (as subsets of Spec).
bool support_contained(const GradedRing& ring, const SupportSet& a, const SupportSet& b);

/// Minimal free resolution of coker(presentation) over the ring in
/// homological degrees 0..top (the presentation is pruned first).
FreeComplex resolution_window(const GradedRing& ring, const GradedMatrix& presentation, int top);

/// Splits off every R e -> R e' summand joined by a unit entry (lowest
/// degree, first column, first row first); the result is homotopy
/// equivalent and has no unit entries.
FreeComplex minimize_complex(const FreeComplex& c);

/// Block-diagonal sum of presentations.
GradedMatrix block_sum(const std::vector<GradedMatrix>& blocks, Coeff p);

}  // namespace kci
