#pragma once

#include <cstdint>

namespace kci {

/// Residues modulo a prime p < 2^31 are stored as plain 32-bit words.
using Coeff = std::uint32_t;

inline constexpr Coeff kDefaultPrime = 32003;

bool is_prime(std::uint64_t n);

inline Coeff add_mod(Coeff a, Coeff b, Coeff p) {
  Coeff s = a + b;
  return s >= p ? s - p : s;
}

inline Coeff sub_mod(Coeff a, Coeff b, Coeff p) { return a >= b ? a - b : a + (p - b); }

inline Coeff neg_mod(Coeff a, Coeff p) { return a == 0 ? 0 : p - a; }

inline Coeff mul_mod(Coeff a, Coeff b, Coeff p) {
  return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p);
}

/// Inverse of a nonzero residue; throws std::domain_error on zero.
Coeff inv_mod(Coeff a, Coeff p);

Coeff from_int(std::int64_t v, Coeff p);

/// Representative in (-p/2, p/2].
std::int64_t symmetric_rep(Coeff a, Coeff p);

/// A prime-field scalar with its modulus; used at API boundaries, the kernels
/// work on raw residues.
class FieldScalar {
 public:
  FieldScalar(std::int64_t value, Coeff modulus) : value_(from_int(value, modulus)), modulus_(modulus) {}

  Coeff value() const { return value_; }
  Coeff modulus() const { return modulus_; }

  FieldScalar operator+(FieldScalar o) const { return raw(add_mod(value_, o.value_, modulus_)); }
  FieldScalar operator-(FieldScalar o) const { return raw(sub_mod(value_, o.value_, modulus_)); }
  FieldScalar operator*(FieldScalar o) const { return raw(mul_mod(value_, o.value_, modulus_)); }
  FieldScalar operator-() const { return raw(neg_mod(value_, modulus_)); }
  FieldScalar inverse() const { return raw(inv_mod(value_, modulus_)); }

  bool operator==(const FieldScalar&) const = default;

 private:
  FieldScalar raw(Coeff v) const {
    FieldScalar s(0, modulus_);
    s.value_ = v;
    return s;
  }

  Coeff value_;
  Coeff modulus_;
};

}  // namespace kci
