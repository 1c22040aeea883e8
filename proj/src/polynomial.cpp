#include "kci/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "kci/errors.hpp"

namespace kci {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::InhomogeneousElement: return "InhomogeneousElement";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NotKoszulResolution: return "NotKoszulResolution";
    case ErrorCode::NotSemiprojective: return "NotSemiprojective";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotCertifiedCI: return "NotCertifiedCI";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotPerfectAtBound: return "NotPerfectAtBound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InhomogeneousEntry: return "InhomogeneousEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coeff inv_mod(Coeff a, Coeff p) {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<Coeff>(t);
}

Coeff from_int(std::int64_t v, Coeff p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

std::int64_t symmetric_rep(Coeff a, Coeff p) {
  return a > p / 2 ? static_cast<std::int64_t>(a) - p : static_cast<std::int64_t>(a);
}

// ---------------------------------------------------------------- monomials

Monomial Monomial::from_exponents(std::span<const int> e, std::span<const int> weights) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw Error(ErrorCode::TooManyVariables, "exponent vector too long");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    m.exp[i] = static_cast<std::int16_t>(e[i]);
    m.deg += e[i] * weights[i];
  }
  return m;
}

Monomial Monomial::variable(int i, std::span<const int> weights) {
  Monomial m;
  m.exp[i] = 1;
  m.deg = weights[i];
  return m;
}

int Monomial::total_exponent() const {
  int s = 0;
  for (auto e : exp) s += e;
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial r;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.deg += r.exp[i] * weights[i];
  }
  return r;
}

namespace {

void monomials_rec(std::size_t var, int remaining, std::span<const int> weights, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == weights.size()) {
    if (remaining % weights[var] != 0) return;
    cur.exp[var] = static_cast<std::int16_t>(remaining / weights[var]);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int k = remaining / weights[var]; k >= 0; --k) {
    cur.exp[var] = static_cast<std::int16_t>(k);
    monomials_rec(var + 1, remaining - k * weights[var], weights, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int d, std::span<const int> weights) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (weights.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  cur.deg = d;
  monomials_rec(0, d, weights, cur, out);
  for (auto& m : out) m.deg = d;
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------- polynomials

Poly Poly::constant(Coeff p, std::int64_t c) {
  Poly r(p);
  Coeff v = from_int(c, p);
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

Poly Poly::monomial(Coeff p, const Monomial& m, Coeff c) {
  Poly r(p);
  c %= p;
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::from_terms(Coeff p, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_degrevlex(a.m, b.m) > 0; });
  Poly r(p);
  for (auto& t : terms) {
    Coeff c = t.c % p;
    if (!r.terms_.empty() && r.terms_.back().m == t.m) {
      r.terms_.back().c = add_mod(r.terms_.back().c, c, p);
      if (r.terms_.back().c == 0) r.terms_.pop_back();
    } else if (c != 0) {
      r.terms_.push_back({t.m, c});
    }
  }
  return r;
}

int Poly::min_degree() const {
  int d = -1;
  for (auto& t : terms_)
    if (d < 0 || t.m.deg < d) d = t.m.deg;
  return d;
}

bool Poly::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

Coeff Poly::coefficient(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare_degrevlex(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = add_mod(terms_[i].c, o.terms_[j].c, p_);
      if (s != 0) r.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const { return scaled(p_ - 1); }

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(p_);
  Poly acc(p_);
  for (auto& t : o.terms_) acc = acc + times(t.m, t.c);
  return acc;
}

Poly Poly::scaled(Coeff c) const {
  c %= p_;
  Poly r(p_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = mul_mod(t.c, c, p_);
  return r;
}

Poly Poly::times(const Monomial& m, Coeff c) const {
  c %= p_;
  Poly r(p_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, mul_mod(t.c, c, p_)});
  return r;
}

Poly Poly::component(int d) const {
  Poly r(p_);
  for (auto& t : terms_)
    if (t.m.deg == d) r.terms_.push_back(t);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead().c, p_));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

}  // namespace kci
