#include "kci/ring.hpp"

#include <cctype>

#include "kci/errors.hpp"

namespace kci {

namespace {

class PolyParser {
 public:
  PolyParser(const GradedRing& ring, const std::string& text, int line, int column_offset)
      : ring_(ring), s_(text), line_(line), col0_(column_offset) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    return sum_until('\0');
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::ParseError) const {
    throw ParseFailure(code, line_, col0_ + static_cast<int>(pos_) + 1, msg);
  }

  std::int64_t integer() {
    std::int64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Poly factor() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      int idx = -1;
      for (int i = 0; i < ring_.nvars(); ++i)
        if (ring_.variables()[i] == name) idx = i;
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'", ErrorCode::UnknownVariable);
      }
      skip_ws();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = static_cast<int>(integer());
        if (e > 1000) fail("exponent too large");
      }
      std::vector<int> exps(ring_.nvars(), 0);
      exps[idx] = e;
      return Poly::monomial(ring_.prime(), ring_.monomial(exps));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum_until(')');
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Poly sum_until(char close) {
    Poly acc = ring_.zero();
    skip_ws();
    bool first = true;
    while (peek() != close) {
      if (close != '\0' && peek() == '\0') fail(std::string("expected '") + close + "'");
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip_ws();
    }
    return acc;
  }

  Poly term() {
    Poly t = factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      t = t * factor();
      skip_ws();
    }
    return t;
  }

  const GradedRing& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

}  // namespace

GradedRing GradedRing::make(Coeff p, std::vector<std::string> vars, std::vector<int> degs,
                            std::vector<Poly> relations) {
  if (!is_prime(p) || p >= (Coeff{1} << 31))
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not a prime below 2^31");
  if (vars.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorCode::TooManyVariables, "at most 12 variables supported");
  if (degs.empty()) degs.assign(vars.size(), 1);
  if (degs.size() != vars.size()) throw Error(ErrorCode::DimensionMismatch, "one degree per variable required");
  for (int d : degs)
    if (d <= 0) throw Error(ErrorCode::DimensionMismatch, "variable degrees must be positive");
  GradedRing r;
  r.p_ = p;
  r.vars_ = std::move(vars);
  r.degs_ = std::move(degs);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].is_zero()) continue;
    if (!relations[i].is_homogeneous())
      throw Error(ErrorCode::InhomogeneousRelation,
                  "relation " + std::to_string(i + 1) + " (" + r.to_string(relations[i]) + ") is not homogeneous");
    r.relations_.push_back(relations[i]);
  }
  r.relation_gb_ = std::make_shared<const GroebnerBasis>(groebner_basis(p, r.degs_, r.relations_));
  return r;
}

GradedRing GradedRing::make(Coeff p, std::vector<std::string> vars, std::vector<int> degs,
                            const std::vector<std::string>& relations) {
  GradedRing base = make(p, vars, degs, std::vector<Poly>{});
  std::vector<Poly> rels;
  for (auto& s : relations) rels.push_back(base.parse(s));
  return make(p, std::move(vars), std::move(degs), std::move(rels));
}

GradedRing GradedRing::polynomial(std::vector<std::string> vars, Coeff p) {
  std::vector<int> degs(vars.size(), 1);
  return make(p, std::move(vars), std::move(degs), std::vector<Poly>{});
}

GradedRing GradedRing::ambient() const { return make(p_, vars_, degs_, std::vector<Poly>{}); }

GradedRing GradedRing::quotient(std::vector<Poly> relations) const {
  return make(p_, vars_, degs_, std::move(relations));
}

Poly GradedRing::var(int i) const { return Poly::monomial(p_, Monomial::variable(i, degs_)); }

Poly GradedRing::var(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return var(i);
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
}

Poly GradedRing::reduce(const Poly& f) const {
  if (relations_.empty()) return f;
  return normal_form(f, *relation_gb_);
}

Poly GradedRing::parse(const std::string& text, int line, int column_offset) const {
  return PolyParser(*this, text, line, column_offset).parse();
}

std::string GradedRing::to_string(const Poly& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : f.terms()) {
    std::int64_t c = symmetric_rep(t.c, p_);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mon;
    for (int i = 0; i < nvars(); ++i) {
      if (t.m.exp[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += vars_[i];
      if (t.m.exp[i] > 1) mon += "^" + std::to_string(t.m.exp[i]);
    }
    if (mon.empty()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += mon;
    }
  }
  return out;
}

bool GradedRing::operator==(const GradedRing& o) const {
  return p_ == o.p_ && vars_ == o.vars_ && degs_ == o.degs_ && relations_ == o.relations_;
}

}  // namespace kci
