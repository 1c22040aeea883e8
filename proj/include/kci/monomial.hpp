#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace kci {

inline constexpr int kMaxVars = 12;

/// Exponent vector with its cached weighted degree. Unused trailing slots are
/// zero, so comparisons never need to know the number of variables.
struct Monomial {
  std::array<std::int16_t, kMaxVars> exp{};
  std::int32_t deg = 0;

  static Monomial from_exponents(std::span<const int> e, std::span<const int> weights);
  static Monomial variable(int i, std::span<const int> weights);

  bool is_one() const { return deg == 0 && exp == std::array<std::int16_t, kMaxVars>{}; }
  int total_exponent() const;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::int16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::int16_t>(b.exp[i] - a.exp[i]);
  r.deg = b.deg - a.deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

/// Weighted degree-reverse-lexicographic comparison: -1, 0, 1.
inline int compare_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

/// All monomials of weighted degree d in nvars variables, in descending
/// degrevlex order.
std::vector<Monomial> monomials_of_degree(int d, std::span<const int> weights);

}  // namespace kci
