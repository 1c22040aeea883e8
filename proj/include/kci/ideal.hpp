#pragma once

#include <optional>
#include <vector>

#include "kci/groebner.hpp"
#include "kci/module.hpp"
#include "kci/ring.hpp"

namespace kci {

/// The column span of a graded matrix inside its target free module, over the
/// ring R = Q/I of `ring`. Work happens over Q with I*F appended. With
/// tracking on, each basis element remembers how it was built from the
/// columns, which gives lifts and syzygies.
class Submodule {
 public:
  Submodule(const GradedRing& ring, const GradedMatrix& m, bool track = false);

  const GradedRing& ring() const { return ring_; }
  int rank() const { return rows_; }
  const GroebnerBasis& basis() const { return gb_; }

  /// Normal form modulo the submodule and I*F.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }
  /// y with m*y = v modulo I*F; requires tracking.
  std::optional<Vec> lift(const Vec& v) const;
  /// Generators (not necessarily minimal) of the kernel of m over R, lifted
  /// to Q; requires tracking.
  std::vector<Vec> syzygies() const;

 private:
  GradedRing ring_;
  int rows_;
  int cols_;
  bool track_;
  GroebnerBasis gb_;
};

/// Graded-Nakayama minimal subset of homogeneous vectors over R, returned as
/// indices in ascending order.
std::vector<std::size_t> minimal_subset(const GradedRing& ring, const std::vector<int>& twists,
                                        const std::vector<Vec>& vecs);

/// Minimal homogeneous generators of ker(m) over the ring, as the columns of
/// a matrix whose rows are indexed by the columns of m.
GradedMatrix syzygy_kernel(const GradedRing& ring, const GradedMatrix& m);

/// Some y with m*y = v over the ring, or nothing.
std::optional<Vec> lift(const GradedRing& ring, const GradedMatrix& m, const Vec& v);

/// Columns of m forming a minimal generating set of its span.
GradedMatrix minimal_columns(const GradedRing& ring, const GradedMatrix& m);

/// Minimal generators of an ideal of the ring (input order breaks ties).
std::vector<Poly> minimal_generators(const GradedRing& ring, const std::vector<Poly>& gens);

/// Drops generator/relation pairs joined by a unit entry and removes
/// redundant relations, giving a minimal presentation of the same cokernel.
GradedMatrix prune_presentation(const GradedRing& ring, const GradedMatrix& p);

/// Krull dimension of Q/I for the polynomial ring Q; -1 for the unit ideal.
int krull_dimension(const GradedRing& q, const std::vector<Poly>& ideal);

/// Ann_R(coker p), generators in Q (they include I).
std::vector<Poly> annihilator(const GradedRing& ring, const GradedMatrix& p);

/// dim_k of coker(p) in internal degrees 0..d_max.
std::vector<long> hilbert_function(const GradedRing& ring, const GradedMatrix& p, int d_max);
/// Same, starting at internal degree d_min.
std::vector<long> hilbert_function(const GradedRing& ring, const GradedMatrix& p, int d_min, int d_max);

/// Intersection of two ideals of the polynomial ring.
std::vector<Poly> intersect(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b);

/// g lies in the radical of the ideal (Rabinowitsch trick).
bool in_radical(const GradedRing& q, const std::vector<Poly>& ideal, const Poly& g);
bool same_radical(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b);
/// V(a) is contained in V(b) as subsets of Proj, i.e. every g in b times
/// every variable lies in rad(a).
bool proj_contained(const GradedRing& q, const std::vector<Poly>& a, const std::vector<Poly>& b);

/// The free module F with the given twists, presented with no relations.
GradedMatrix free_presentation(Coeff p, const std::vector<int>& twists);

}  // namespace kci
