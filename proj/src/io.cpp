#include "kci/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"
#include "kci/ci.hpp"
#include "kci/complex.hpp"
#include "kci/dg.hpp"
#include "kci/ext.hpp"
#include "kci/ideal.hpp"

namespace kci {

using json = nlohmann::json;

namespace {

/// A value or list item with its 1-based source position.
struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

[[noreturn]] void parse_fail(ErrorCode code, int line, int column, const std::string& msg) {
  throw ParseFailure(code, line, column, msg);
}

[[noreturn]] void parse_fail(const Token& t, const std::string& msg) {
  parse_fail(ErrorCode::ParseError, t.line, t.column, msg);
}

Token trimmed(const std::string& s, int line, int column) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return {s.substr(a, b - a), line, column + static_cast<int>(a)};
}

/// Splits on sep; an empty value is the empty list.
std::vector<Token> split(const Token& t, char sep) {
  std::vector<Token> out;
  if (t.text.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.text.size(); ++i) {
    if (i == t.text.size() || t.text[i] == sep) {
      Token item = trimmed(t.text.substr(start, i - start), t.line, t.column + static_cast<int>(start));
      if (item.text.empty()) parse_fail(item, "empty list item");
      out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

int to_int(const Token& t) {
  int v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || t.text.empty()) parse_fail(t, "expected an integer, got '" + t.text + "'");
  return v;
}

std::vector<int> to_ints(const Token& t) {
  std::vector<int> out;
  for (auto& item : split(t, ',')) out.push_back(to_int(item));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return join(s, ", ");
}

Poly parse_poly(const GradedRing& r, const Token& t) { return r.parse(t.text, t.line, t.column - 1); }

const std::map<std::string, std::vector<std::string>>& section_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"ring", {"p", "vars", "degs", "relations"}},
      {"module", {"matrix", "row_twists", "col_twists"}},
      {"params", {"N", "smax", "g", "order"}},
  };
  return keys;
}

}  // namespace

JobSpec parse_input(const std::string& text) {
  std::map<std::string, std::map<std::string, Token>> raw;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Token t = trimmed(line, lineno, 1);
    if (t.text.empty() || t.text[0] == '#') continue;
    if (t.text.front() == '[') {
      if (t.text.back() != ']') parse_fail(t, "unterminated section header");
      section = t.text.substr(1, t.text.size() - 2);
      if (!section_keys().count(section)) parse_fail(t, "unknown section [" + section + "]");
      if (raw.count(section)) parse_fail(t, "duplicate section [" + section + "]");
      raw[section];
      continue;
    }
    if (section.empty()) parse_fail(t, "key outside a section");
    auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(t, "expected 'key = value'");
    Token key = trimmed(line.substr(0, eq), lineno, 1);
    Token value = trimmed(line.substr(eq + 1), lineno, static_cast<int>(eq) + 2);
    const auto& allowed = section_keys().at(section);
    if (std::find(allowed.begin(), allowed.end(), key.text) == allowed.end())
      parse_fail(key, "unknown key '" + key.text + "' in [" + section + "]");
    if (raw[section].count(key.text)) parse_fail(key, "duplicate key '" + key.text + "'");
    raw[section][key.text] = value;
  }

  auto get = [&](const std::string& sec, const std::string& key) -> const Token* {
    auto s = raw.find(sec);
    if (s == raw.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };

  JobSpec job;
  if (!raw.count("ring")) parse_fail(ErrorCode::ParseError, lineno + 1, 1, "missing [ring] section");
  const Token* vars = get("ring", "vars");
  if (!vars) parse_fail(ErrorCode::ParseError, lineno + 1, 1, "[ring] needs vars");
  for (auto& v : split(*vars, ',')) {
    bool ok = std::isalpha(static_cast<unsigned char>(v.text[0])) != 0;
    for (char c : v.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) parse_fail(v, "invalid variable name '" + v.text + "'");
    if (std::find(job.vars.begin(), job.vars.end(), v.text) != job.vars.end())
      parse_fail(v, "duplicate variable '" + v.text + "'");
    job.vars.push_back(v.text);
  }
  if (job.vars.empty()) parse_fail(*vars, "at least one variable is required");
  if (const Token* p = get("ring", "p")) job.p = static_cast<Coeff>(to_int(*p));
  if (const Token* d = get("ring", "degs")) {
    job.degs = to_ints(*d);
    if (job.degs.size() != job.vars.size()) parse_fail(*d, "degs and vars differ in length");
    for (auto& item : split(*d, ','))
      if (to_int(item) <= 0) parse_fail(item, "degrees must be positive");
  } else {
    job.degs.assign(job.vars.size(), 1);
  }
  const GradedRing q = GradedRing::make(job.p, job.vars, job.degs);

  std::vector<Poly> rel;
  if (const Token* r = get("ring", "relations")) {
    for (auto& item : split(*r, ',')) {
      Poly f = parse_poly(q, item);
      if (f.is_zero()) parse_fail(item, "relations must be nonzero");
      if (!f.is_homogeneous())
        parse_fail(ErrorCode::InhomogeneousEntry, item.line, item.column, "relation '" + item.text + "' is not homogeneous");
      rel.push_back(f);
      job.relations.push_back(q.to_string(f));
    }
  }

  if (raw.count("module")) {
    job.has_module = true;
    const Token* m = get("module", "matrix");
    const Token* rt = get("module", "row_twists");
    const Token* ct = get("module", "col_twists");
    std::vector<std::vector<Token>> cells;
    if (m && !m->text.empty())
      for (auto& row : split(*m, ';')) cells.push_back(split(row, ','));
    if (rt) job.row_twists = to_ints(*rt);
    if (cells.empty() && !rt)
      parse_fail(ErrorCode::ParseError, lineno + 1, 1, "[module] needs a matrix or row_twists");
    const int rows = cells.empty() ? static_cast<int>(job.row_twists.size()) : static_cast<int>(cells.size());
    const int cols = cells.empty() ? 0 : static_cast<int>(cells[0].size());
    for (auto& row : cells)
      if (static_cast<int>(row.size()) != cols) parse_fail(row.front(), "matrix rows differ in length");
    if (!rt) job.row_twists.assign(rows, 0);
    if (static_cast<int>(job.row_twists.size()) != rows) parse_fail(*rt, "row_twists does not match the matrix");
    std::vector<std::vector<Poly>> entries(rows, std::vector<Poly>(cols));
    for (int i = 0; i < rows && !cells.empty(); ++i)
      for (int j = 0; j < cols; ++j) entries[i][j] = parse_poly(q, cells[i][j]);
    if (ct) {
      job.col_twists = to_ints(*ct);
      if (static_cast<int>(job.col_twists.size()) != cols) parse_fail(*ct, "col_twists does not match the matrix");
    } else {
      for (int j = 0; j < cols; ++j) {
        std::optional<int> tw;
        for (int i = 0; i < rows && !tw; ++i)
          if (!entries[i][j].is_zero()) tw = entries[i][j].degree() + job.row_twists[i];
        if (!tw) parse_fail(cells[0][j], "zero column needs explicit col_twists");
        job.col_twists.push_back(*tw);
      }
    }
    for (int i = 0; i < rows; ++i) {
      std::vector<std::string> row;
      for (int j = 0; j < cols; ++j) {
        const Poly& e = entries[i][j];
        if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != job.col_twists[j] - job.row_twists[i]))
          parse_fail(ErrorCode::InhomogeneousEntry, cells[i][j].line, cells[i][j].column,
                     "entry '" + cells[i][j].text + "' should have degree " +
                         std::to_string(job.col_twists[j] - job.row_twists[i]));
        row.push_back(q.to_string(e));
      }
      job.matrix.push_back(row);
    }
  }

  if (const Token* n = get("params", "N")) job.n_bound = to_int(*n);
  if (const Token* s = get("params", "smax")) job.smax = to_int(*s);
  if (const Token* o = get("params", "order")) {
    if (o->text != "degrevlex") parse_fail(*o, "only degrevlex is supported");
    job.order = o->text;
  }
  if (const Token* g = get("params", "g")) {
    const int n = static_cast<int>(minimal_generators(q, rel).size());
    const GradedRing a = chi_ring(n, job.p);
    for (auto& item : split(*g, ',')) {
      if (n == 0) parse_fail(ErrorCode::UnknownVariable, item.line, item.column, "no chi variables without relations");
      Poly x = parse_poly(a, item);
      if (x.is_zero() || !x.is_homogeneous())
        parse_fail(ErrorCode::InhomogeneousEntry, item.line, item.column, "g must be nonzero and homogeneous");
      job.g.push_back(a.to_string(x));
    }
  }
  return job;
}

std::string print_job(const JobSpec& job) {
  std::ostringstream out;
  out << "[ring]\n";
  out << "p = " << job.p << "\n";
  out << "vars = " << join(job.vars, ", ") << "\n";
  out << "degs = " << join_ints(job.degs) << "\n";
  out << "relations = " << join(job.relations, ", ") << "\n";
  if (job.has_module) {
    std::vector<std::string> rows;
    for (auto& r : job.matrix) rows.push_back(join(r, ", "));
    out << "[module]\n";
    const bool no_columns = job.col_twists.empty();
    out << "matrix = " << (no_columns ? "" : join(rows, "; ")) << "\n";
    out << "row_twists = " << join_ints(job.row_twists) << "\n";
    out << "col_twists = " << join_ints(job.col_twists) << "\n";
  }
  if (job.n_bound || job.smax || !job.g.empty() || job.order != "degrevlex") {
    out << "[params]\n";
    if (job.n_bound) out << "N = " << *job.n_bound << "\n";
    if (job.smax) out << "smax = " << *job.smax << "\n";
    if (!job.g.empty()) out << "g = " << join(job.g, ", ") << "\n";
    if (job.order != "degrevlex") out << "order = " << job.order << "\n";
  }
  return out.str();
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InhomogeneousEntry: return 2;
    case ErrorCode::HypothesisViolated: return 3;
    case ErrorCode::NotPerfectAtBound: return 4;
    default: return 1;
  }
}

namespace {

/// The job materialized as algebra objects.
struct Context {
  GradedRing q;
  std::vector<Poly> f;
  GradedRing r;
  GradedMatrix module;
  int n_bound = kDefaultVarietyBound;
};

GradedMatrix residue_field(const GradedRing& q) {
  GradedMatrix m(q.prime(), {0}, q.degrees());
  for (int i = 0; i < q.nvars(); ++i) m.set(0, i, q.var(i));
  return m;
}

Context materialize(const JobSpec& job) {
  Context c;
  c.q = GradedRing::make(job.p, job.vars, job.degs);
  for (auto& s : job.relations) c.f.push_back(c.q.parse(s));
  c.r = c.q.quotient(c.f);
  if (job.has_module) {
    c.module = GradedMatrix(job.p, job.row_twists, job.col_twists);
    for (std::size_t i = 0; i < job.matrix.size(); ++i)
      for (std::size_t j = 0; j < job.matrix[i].size(); ++j)
        c.module.set(static_cast<int>(i), static_cast<int>(j), c.q.parse(job.matrix[i][j]));
  } else {
    c.module = residue_field(c.q);
  }
  if (job.n_bound) c.n_bound = *job.n_bound;
  return c;
}

KoszulAlgebra algebra(const Context& c) { return KoszulAlgebra(c.q, minimal_generators(c.q, c.f)); }

json strings(const GradedRing& r, const std::vector<Poly>& v) {
  json out = json::array();
  for (auto& p : v) out.push_back(r.to_string(p));
  return out;
}

std::string ideal_string(const GradedRing& r, const std::vector<Poly>& v) {
  std::vector<std::string> s;
  for (auto& p : v) s.push_back(r.to_string(p));
  return "(" + join(s, ", ") + ")";
}

json variety_json(const SupportVariety& v) {
  return {{"dimension", v.dimension},
          {"empty", v.empty()},
          {"ideal", ideal_string(v.a, v.ideal)},
          {"variety", v.to_string()}};
}

json ext_json(const GradedAModule& x) {
  json rel = json::array();
  for (int j = 0; j < x.presentation.cols(); ++j) {
    json col = json::array();
    for (int i = 0; i < x.presentation.rows(); ++i) col.push_back(x.a.to_string(x.presentation.at(i, j)));
    rel.push_back(col);
  }
  std::vector<long> dims;
  for (int m = 0; m <= x.bound; ++m) dims.push_back(x.dim(m));
  return {{"bound", x.bound},
          {"generator_degrees", x.generator_degrees()},
          {"hilbert", dims},
          {"rank", x.presentation.rows()},
          {"relations", rel}};
}

json complex_json(const FreeComplex& c) {
  json ranks = json::array(), twists = json::array();
  for (int s = c.lo(); s <= c.hi(); ++s) {
    ranks.push_back(c.rank(s));
    twists.push_back(c.twists(s));
  }
  return {{"lo", c.lo()}, {"ranks", ranks}, {"twists", twists}};
}

json support_json(const GradedRing& r, const SupportSet& s) {
  return {{"dimension", s.dimension}, {"ideal", ideal_string(r.ambient(), s.ideal)}};
}

struct Outcome {
  json result;
  json stable;
  json smax;
};

Outcome ci_check_cmd(const Context& c) {
  auto v = ci_check(c.q, c.f, c.n_bound);
  json result{{"agreement", v.agree()},
              {"krull_dimension", v.krull},
              {"minimal_relations", strings(c.q, v.f)},
              {"mu", v.mu},
              {"oracle_route", {{"ci", v.oracle_ci}, {"criterion", "dim Q/(f) = e - mu"}}},
              {"variety_route", {{"bound", v.bound}, {"ci", v.variety_ci}, {"stable", v.stable}, {"variety", variety_json(v.variety)}}},
              {"verdict", v.oracle_ci ? "CI" : "not CI"}};
  return {result, v.stable, nullptr};
}

Outcome koszul_homology_cmd(const Context& c) {
  FreeComplex k = koszul_complex(c.q, c.f);
  const int cap = default_degree_cap(k);
  json hs = json::array();
  bool regular = true;
  for (int s = k.lo(); s <= k.hi(); ++s) {
    auto h = homology_hilbert(k, s, cap);
    bool zero = std::all_of(h.begin(), h.end(), [](long x) { return x == 0; });
    if (s >= 1 && !zero) regular = false;
    hs.push_back({{"degree", s}, {"hilbert", h}, {"zero", zero}});
  }
  return {{{"degree_cap", cap}, {"homology", hs}, {"regular_sequence", regular}}, nullptr, nullptr};
}

Outcome ext_kk_cmd(const Context& c) {
  KoszulAlgebra e = algebra(c);
  auto closed = ext_kk_closed_form(e, c.n_bound - 2);
  auto via = ext_module(e, residue_field(c.q), c.n_bound);
  bool agree = true;
  for (int m = 0; m <= c.n_bound - 2; ++m) agree = agree && closed.dim(m) == via.dim(m);
  agree = agree && same_radical(closed.a, support_variety(closed).ideal, support_variety(via).ideal);
  return {{{"agreement", agree}, {"closed_form", ext_json(closed)}, {"resolution", ext_json(via)}}, nullptr, nullptr};
}

Outcome ext_module_cmd(const Context& c) {
  auto x = ext_module(algebra(c), c.module, c.n_bound);
  return {{{"ext", ext_json(x)}}, nullptr, nullptr};
}

Outcome support_variety_cmd(const Context& c) {
  auto s = stable_support(algebra(c), c.module, c.n_bound);
  return {{{"bound", s.bound}, {"ext", ext_json(s.ext)}, {"stable", s.stable}, {"variety", variety_json(s.variety)}},
          s.stable, nullptr};
}

Outcome c_tilde_cmd(const Context& c, const JobSpec& job) {
  if (job.g.empty()) throw Error(ErrorCode::HypothesisViolated, "c-tilde-variety needs g in [params]");
  KoszulAlgebra e = algebra(c);
  if (!e.in_n_squared()) throw Error(ErrorCode::HypothesisViolated, "every minimal relation must lie in n^2");
  std::vector<Poly> vars;
  for (int i = 0; i < c.q.nvars(); ++i) vars.push_back(c.q.var(i));
  const GradedRing a = chi_ring(e.n(), c.q.prime());
  auto u = u_construction(koszul_action(e, vars), c.n_bound);
  auto u2 = u_construction(koszul_action(e, vars), c.n_bound + 2);
  json out = json::array();
  bool stable = true;
  for (auto& gs : job.g) {
    Poly g = a.parse(gs);
    auto v = support_variety(ext_from_collapse(collapse(c_tilde(u, a, g)), c.n_bound - 2));
    auto v2 = support_variety(ext_from_collapse(collapse(c_tilde(u2, a, g)), c.n_bound));
    const bool st = same_variety(v, v2);
    stable = stable && st;
    json item = variety_json(v);
    item["g"] = gs;
    item["equals_V_g"] = same_variety(v, variety_of_elements(a, {g}));
    item["stable"] = st;
    out.push_back(item);
  }
  return {{{"cones", out}}, stable, nullptr};
}

int smax_for(const Context& c, const JobSpec& job) { return job.smax ? *job.smax : default_smax(c.r); }

json witness_json(const ProxyWitness& w) {
  json trace = json::array();
  for (auto& st : w.trace) {
    json step = complex_json(st.complex);
    step["operator"] = st.op + 1;
    step["shift"] = st.shift;
    trace.push_back(step);
  }
  return {{"cut", w.cut},
          {"module_support", support_json(w.r, w.module_support)},
          {"perfect", complex_json(w.perfect)},
          {"perfect_support", support_json(w.r, w.perfect_support)},
          {"start", complex_json(w.start)},
          {"supports_equal", same_support(w.r, w.module_support, w.perfect_support)},
          {"trace", trace}};
}

Outcome proxy_witness_cmd(const Context& c, const JobSpec& job) {
  const int smax = smax_for(c, job);
  auto w = proxy_witness(c.r, c.module, smax);
  return {{{"witness", witness_json(w)}}, true, smax};
}

Outcome verify_witness_cmd(const Context& c, const JobSpec& job) {
  const int smax = smax_for(c, job);
  auto w = proxy_witness(c.r, c.module, smax);
  auto rep = verify_witness(w);
  json faults;
  auto trivial = w;
  trivial.perfect = FreeComplex::zero(c.r);
  faults["trivial_perfect"] = !verify_witness(trivial).ok;
  auto wrong = w;
  wrong.perfect_support.ideal = {c.q.one()};
  wrong.perfect_support.dimension = -1;
  faults["support_mismatch"] = !verify_witness(wrong).ok;
  if (w.trace.empty()) {
    faults["deleted_step"] = nullptr;
  } else {
    auto cut = w;
    cut.trace.erase(cut.trace.begin());
    faults["deleted_step"] = !verify_witness(cut).ok;
  }
  return {{{"failures", rep.failures}, {"faults_detected", faults}, {"ok", rep.ok}, {"witness", witness_json(w)}},
          true, smax};
}

Outcome selftest_cmd(const Context& c, const JobSpec& job) {
  json checks;
  auto run = [&](const std::string& name, auto&& f) {
    try {
      checks[name] = static_cast<bool>(f());
    } catch (const Error& e) {
      checks[name] = std::string(e.what());
    }
  };
  run("koszul_d_squared", [&] { return !koszul_complex(c.q, c.f).first_d2_failure().has_value(); });
  run("relations_reduce_to_zero", [&] {
    return std::all_of(c.f.begin(), c.f.end(), [&](const Poly& f) { return c.r.reduce(f).is_zero(); });
  });
  KoszulAlgebra e = algebra(c);
  if (e.n() > 0 && e.in_n_squared()) {
    std::vector<Poly> vars;
    for (int i = 0; i < c.q.nvars(); ++i) vars.push_back(c.q.var(i));
    run("koszul_resolution_is_dg_module", [&] { return dg_module_verify(koszul_action(e, vars)).ok; });
    run("u_construction_valid", [&] {
      auto u = u_construction(koszul_action(e, vars), 6);
      return !u.module.complex().first_d2_failure().has_value() && dg_module_verify(u.module).ok;
    });
    run("ci_routes_agree", [&] { return ci_check(c.q, c.f, c.n_bound).agree(); });
    if (krull_dimension(c.q, e.f()) == c.q.nvars() - e.n()) {
      run("eisenbud_operator_identity", [&] {
        eisenbud_operators(c.r, c.module, smax_for(c, job));
        return true;
      });
      run("witness_verifies", [&] { return verify_witness(proxy_witness(c.r, c.module, smax_for(c, job))).ok; });
    }
  }
  bool ok = true;
  for (auto& [k, v] : checks.items()) ok = ok && v.is_boolean() && v.get<bool>();
  return {{{"checks", checks}, {"ok", ok}}, nullptr, nullptr};
}

}  // namespace

std::string run_command(const JobSpec& job) {
  const Context c = materialize(job);
  Outcome o;
  const std::string& cmd = job.command;
  if (cmd == "ci-check") o = ci_check_cmd(c);
  else if (cmd == "koszul-homology") o = koszul_homology_cmd(c);
  else if (cmd == "ext-kk") o = ext_kk_cmd(c);
  else if (cmd == "ext-module") o = ext_module_cmd(c);
  else if (cmd == "support-variety") o = support_variety_cmd(c);
  else if (cmd == "c-tilde-variety") o = c_tilde_cmd(c, job);
  else if (cmd == "proxy-witness") o = proxy_witness_cmd(c, job);
  else if (cmd == "verify-witness") o = verify_witness_cmd(c, job);
  else if (cmd == "selftest") o = selftest_cmd(c, job);
  else throw Error(ErrorCode::ParseError, "unknown command '" + cmd + "'");

  json report{{"command", cmd},
              {"input_echo", print_job(job)},
              {"result", o.result},
              {"provenance",
               {{"N", c.n_bound}, {"smax", o.smax}, {"stable", o.stable}, {"order", job.order}, {"version", kVersion}}}};
  return report.dump(2) + "\n";
}

namespace {

void render(const json& v, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  for (auto& [k, x] : v.items()) {
    const bool nested = x.is_object() || (x.is_array() && std::any_of(x.begin(), x.end(), [](const json& y) {
                                            return y.is_object() || y.is_array();
                                          }));
    if (k == "input_echo") continue;
    if (!nested) {
      out << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
    } else {
      out << pad << k << ":\n";
      render(x, indent + 2, out);
    }
  }
}

}  // namespace

std::string report_as_text(const std::string& json_report) {
  std::ostringstream out;
  render(json::parse(json_report), 0, out);
  return out.str();
}

}  // namespace kci
