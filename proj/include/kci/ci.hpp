#pragma once

#include <string>
#include <vector>

#include "kci/complex.hpp"
#include "kci/ext.hpp"
#include "kci/ring.hpp"

namespace kci {

inline constexpr int kDefaultVarietyBound = 8;

struct CIVerdict {
  GradedRing q;
  /// Minimal generators of (f).
  std::vector<Poly> f;
  int mu = 0;
  int krull = 0;
  /// dim Q/(f) = e - mu.
  bool oracle_ci = false;
  /// V_E(R) is empty.
  bool variety_ci = false;
  SupportVariety variety;
  int bound = 0;
  bool stable = false;
  bool agree() const { return oracle_ci == variety_ci; }
};

/// Throws HypothesisViolated unless every minimal generator lies in n^2.
CIVerdict ci_check(const GradedRing& q, const std::vector<Poly>& f, int n_bound = kDefaultVarietyBound);

/// Degree -2 chain maps t_j over R on a complex G of free R-modules, from a
/// lift d~ of its differential to Q with d~^2 = sum_j f_j t~_j.
struct EisenbudOperators {
  GradedRing r;
  std::vector<Poly> f;
  FreeComplex window;
  /// lifted[j][k] = t~_j on G_{lo+k}, over Q.
  std::vector<std::vector<GradedMatrix>> lifted;
  std::vector<ChainMap> t;
};

/// Operators on an arbitrary complex over R = Q/(f) with f regular.
EisenbudOperators complex_operators(const GradedRing& r, const std::vector<Poly>& f, const FreeComplex& g);

/// Operators on the minimal resolution of coker(presentation) in degrees
/// 0..s_max. Throws NotCertifiedCI or WindowTooSmall.
EisenbudOperators eisenbud_operators(const GradedRing& r, const GradedMatrix& presentation, int s_max);

struct ConeStep {
  int op = 0;
  int shift = 2;
  /// The minimized cone of t_op on the previous complex.
  FreeComplex complex;
};

struct ProxyWitness {
  GradedRing r;
  GradedMatrix module;
  int s_max = 0;
  FreeComplex start;
  std::vector<ConeStep> trace;
  /// The last complex below its first zero component: a perfect complex.
  FreeComplex perfect;
  int cut = 0;
  SupportSet module_support;
  SupportSet perfect_support;
};

/// Default s_max = 2e + 4.
int default_smax(const GradedRing& r);

/// Cones every Eisenbud operator in turn, minimizing after each step.
/// Throws NotPerfectAtBound if the result does not split off a bounded piece
/// inside the window, or if that piece changes at s_max + 2.
ProxyWitness proxy_witness(const GradedRing& r, const GradedMatrix& presentation, int s_max);

struct WitnessReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Replays the trace and checks perfectness, nontriviality and support.
WitnessReport verify_witness(const ProxyWitness& w);

struct ProbeReport {
  SupportVariety ve_r;
  SupportVariety ve_k;
  std::vector<SupportVariety> ve_cones;
  /// V_E(R) lies in every V(g).
  bool contained_in_all = true;
  /// Indices g with V_E(R) not inside V(g).
  std::vector<int> escaping;
};

ProbeReport non_ci_probe(const GradedRing& q, const std::vector<Poly>& f, const std::vector<Poly>& g,
                         int n_bound = kDefaultVarietyBound);

}  // namespace kci
