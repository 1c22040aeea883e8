#include "kci/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "kci/errors.hpp"

namespace kci {

namespace {

struct Element {
  Vec v;
  int sugar;
  bool active;
};

struct Task {
  int sugar;
  int kind;  // 0 = S-pair, 1 = input
  Monomial lcm;
  int comp;
  int i;
  int j;
};

struct TaskLess {
  bool operator()(const Task& a, const Task& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.kind != b.kind) return a.kind < b.kind;
    int c = compare_pot(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

class Buchberger {
 public:
  explicit Buchberger(const ModuleContext& ctx) : ctx_(ctx), by_comp_(ctx.rank()) {}

  int sugar_of(const Vec& v) const {
    int s = 0;
    for (auto& t : v.terms()) s = std::max(s, t.m.deg + ctx_.twists[t.comp]);
    return s;
  }

  const Element* find_reducer(const Monomial& m, int comp) const {
    for (int idx : by_comp_[comp]) {
      const Element& e = elems_[idx];
      if (e.active && divides(e.v.lead().m, m)) return &e;
    }
    return nullptr;
  }

  /// Top-reduces f; if full, keeps reducing the tail as well.
  Vec reduce(Vec f, bool full) const {
    const Coeff p = ctx_.p;
    std::vector<VTerm> done;
    while (!f.is_zero()) {
      const VTerm lt = f.lead();
      const Element* g = find_reducer(lt.m, lt.comp);
      if (g != nullptr) {
        f = f - g->v.times(quotient(lt.m, g->v.lead().m), lt.c);
        continue;
      }
      if (!full) break;
      done.push_back(lt);
      f = f.tail();
    }
    if (done.empty()) return f;
    for (auto& t : f.terms()) done.push_back(t);
    return Vec::from_terms(p, std::move(done));
  }

  void add_element(Vec h, int sugar) {
    h = h.monic();
    const int k = static_cast<int>(elems_.size());
    const VTerm& lh = h.lead();
    const bool ideal = ctx_.rank() == 1;

    struct Cand {
      int i;
      Monomial lcm;
      bool disjoint;
    };
    std::vector<Cand> cands;
    for (int i : by_comp_[lh.comp]) {
      const Element& g = elems_[i];
      if (!g.active) continue;
      const Monomial& lg = g.v.lead().m;
      cands.push_back({i, lcm(lg, lh.m, ctx_.weights), ideal && coprime(lg, lh.m)});
    }

    // Gebauer-Moeller: drop new pairs whose lcm is a proper multiple of
    // another new pair's lcm; among equal lcms keep one, and drop the whole
    // class if any member is coprime (ideals only).
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
        if (a == b) continue;
        if (divides(cands[b].lcm, cands[a].lcm) && !(cands[b].lcm == cands[a].lcm)) drop = true;
      }
      if (drop) continue;
      bool class_disjoint = false;
      bool first_of_class = true;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (!(cands[b].lcm == cands[a].lcm)) continue;
        if (cands[b].disjoint) class_disjoint = true;
        if (b < a) first_of_class = false;
      }
      if (class_disjoint || !first_of_class) continue;
      kept.push_back(cands[a]);
    }

    // Chain criterion on existing pairs.
    for (auto it = queue_.begin(); it != queue_.end();) {
      const Task& t = *it;
      if (t.kind == 0 && t.comp == lh.comp && divides(lh.m, t.lcm)) {
        const Monomial l1 = lcm(elems_[t.i].v.lead().m, lh.m, ctx_.weights);
        const Monomial l2 = lcm(elems_[t.j].v.lead().m, lh.m, ctx_.weights);
        if (!(l1 == t.lcm) && !(l2 == t.lcm)) {
          it = queue_.erase(it);
          continue;
        }
      }
      ++it;
    }

    for (int i : by_comp_[lh.comp]) {
      Element& g = elems_[i];
      if (g.active && divides(lh.m, g.v.lead().m)) g.active = false;
    }

    for (auto& c : kept) {
      const Element& g = elems_[c.i];
      const int twist = ctx_.twists[lh.comp];
      int s = std::max(g.sugar + c.lcm.deg - g.v.lead().m.deg, sugar + c.lcm.deg - lh.m.deg);
      (void)twist;
      queue_.insert(Task{s, 0, c.lcm, lh.comp, c.i, k});
    }
    elems_.push_back({std::move(h), sugar, true});
    by_comp_[lh.comp].push_back(k);
  }

  Vec spoly(int i, int j, const Monomial& l) const {
    const Vec& a = elems_[i].v;
    const Vec& b = elems_[j].v;
    return a.times(quotient(l, a.lead().m), 1) - b.times(quotient(l, b.lead().m), 1);
  }

  void run(const std::vector<Vec>& gens, std::vector<std::size_t>& minimal, std::size_t& npairs) {
    for (std::size_t n = 0; n < gens.size(); ++n) {
      if (gens[n].is_zero()) continue;
      queue_.insert(Task{sugar_of(gens[n]), 1, Monomial{}, 0, static_cast<int>(n), -1});
    }
    while (!queue_.empty()) {
      Task t = *queue_.begin();
      queue_.erase(queue_.begin());
      if (t.kind == 1) {
        Vec h = reduce(gens[t.i], false);
        if (!h.is_zero()) {
          minimal.push_back(static_cast<std::size_t>(t.i));
          add_element(std::move(h), t.sugar);
        }
      } else {
        ++npairs;
        Vec h = reduce(spoly(t.i, t.j, t.lcm), false);
        if (!h.is_zero()) add_element(std::move(h), t.sugar);
      }
    }
    std::sort(minimal.begin(), minimal.end());
  }

  std::vector<Vec> reduced_basis() {
    std::vector<int> act;
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i)
      if (elems_[i].active) act.push_back(i);
    std::vector<Vec> out;
    for (int i : act) {
      // tail-reduce against the other active elements; leads are pairwise
      // non-divisible so the lead survives
      Vec v = elems_[i].v;
      elems_[i].active = false;
      Vec r = reduce(v, true);
      elems_[i].active = true;
      out.push_back(r.monic());
    }
    for (std::size_t n = 0; n < act.size(); ++n) elems_[act[n]].v = out[n];
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
      return compare_pot(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
    });
    return out;
  }

 private:
  const ModuleContext& ctx_;
  std::vector<Element> elems_;
  std::vector<std::vector<int>> by_comp_;
  std::set<Task, TaskLess> queue_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(ModuleContext ctx, const std::vector<Vec>& generators) : ctx_(std::move(ctx)) {
  if (ctx_.nvars() > kMaxVars) throw Error(ErrorCode::TooManyVariables, "at most 12 variables supported");
  for (auto& g : generators) {
    if (g.max_component() >= ctx_.rank()) throw Error(ErrorCode::DimensionMismatch, "generator outside module rank");
    if (!g.is_homogeneous(ctx_.twists)) homogeneous_ = false;
  }
  Buchberger b(ctx_);
  b.run(generators, minimal_input_, pairs_reduced_);
  basis_ = b.reduced_basis();
}

bool GroebnerBasis::is_unit() const {
  // every component generated by a constant
  std::vector<bool> hit(ctx_.rank(), false);
  for (auto& g : basis_)
    if (g.lead().m.is_one()) hit[g.lead().comp] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Vec GroebnerBasis::normal_form(const Vec& f) const {
  const Coeff p = ctx_.p;
  std::vector<VTerm> done;
  Vec cur = f;
  while (!cur.is_zero()) {
    const VTerm lt = cur.lead();
    const Vec* g = nullptr;
    for (auto& b : basis_) {
      if (b.lead().comp == lt.comp && divides(b.lead().m, lt.m)) {
        g = &b;
        break;
      }
    }
    if (g != nullptr) {
      cur = cur - g->times(quotient(lt.m, g->lead().m), lt.c);
    } else {
      done.push_back(lt);
      cur = cur.tail();
    }
  }
  return Vec::from_terms(p, std::move(done));
}

GroebnerBasis groebner_basis(Coeff p, const std::vector<int>& weights, const std::vector<Poly>& gens) {
  std::vector<Vec> v;
  v.reserve(gens.size());
  for (auto& g : gens) v.push_back(Vec::from_poly(g, 0));
  return GroebnerBasis(ModuleContext{p, weights, {0}}, v);
}

std::vector<Poly> basis_polys(const GroebnerBasis& gb) {
  std::vector<Poly> out;
  for (auto& v : gb.elements()) out.push_back(v.component(0));
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) { return gb.normal_form(Vec::from_poly(f, 0)).component(0); }

}  // namespace kci
