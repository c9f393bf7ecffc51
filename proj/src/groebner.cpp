#include "rfd/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <tuple>
#include <sstream>

namespace rfd {

// ---------------------------------------------------------------------------
// FreeElement

FreeElement FreeElement::zero(const PolyRingPtr& ring, std::size_t rank) {
  return FreeElement(std::vector<Polynomial>(rank, Polynomial(ring)));
}

FreeElement FreeElement::unit(const PolyRingPtr& ring, std::size_t rank, std::size_t i) {
  FreeElement e = zero(ring, rank);
  e.coords[i] = Polynomial::constant(ring, Coeff(1));
  return e;
}

bool FreeElement::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](const Polynomial& p) { return p.is_zero(); });
}

FreeElement FreeElement::scaled(const Polynomial& f) const {
  FreeElement r;
  r.coords.reserve(coords.size());
  for (const auto& c : coords) r.coords.push_back(c * f);
  return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("free element rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  if (other.rank() != rank()) throw InputError("free element rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

std::string FreeElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Budget and self-check switches

namespace {

thread_local Budget* g_budget = nullptr;
thread_local bool g_self_check = false;
thread_local std::size_t g_self_check_count = 0;

Budget& active_budget() {
  // Without a scope only the per-computation pair limit applies.
  thread_local Budget fallback{"computation", std::numeric_limits<std::size_t>::max(), Budget{}.max_pairs, 0};
  return g_budget ? *g_budget : fallback;
}

void charge_reduction() {
  Budget& b = active_budget();
  if (++b.reductions > b.max_reductions)
    throw BudgetExceeded("reduction budget of " + std::to_string(b.max_reductions) + " exhausted in " + b.label);
}

}  // namespace

BudgetScope::BudgetScope(Budget& b) : previous_(g_budget) { g_budget = &b; }
BudgetScope::~BudgetScope() { g_budget = previous_; }

bool set_groebner_self_check(bool enabled) {
  bool prev = g_self_check;
  g_self_check = enabled;
  return prev;
}

std::size_t groebner_self_check_count() { return g_self_check_count; }

// ---------------------------------------------------------------------------
// Term-vector engine. A vector is a list of (position, monomial, coefficient)
// sorted decreasing under position-over-term; for rank 1 this is just a
// polynomial.

namespace {

struct VTerm {
  std::uint32_t pos;
  Monomial mon;
  Coeff coeff;
};

using TermVector = std::vector<VTerm>;

class Engine {
 public:
  explicit Engine(const PolyRingPtr& ring) : ring_(ring), k_(ring->field()) {}

  std::strong_ordering cmp(std::uint32_t pa, const Monomial& a, std::uint32_t pb, const Monomial& b) const {
    if (pa != pb) return pb <=> pa;
    return ring_->compare(a, b);
  }

  // a[from..] - c * m * g
  TermVector sub_mul(TermVector&& a, std::size_t from, const Coeff& c, const Monomial& m, const TermVector& g) const {
    TermVector out;
    out.reserve(a.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < a.size() && j < g.size()) {
      Monomial gm = g[j].mon * m;
      auto o = cmp(a[i].pos, a[i].mon, g[j].pos, gm);
      if (o > 0) {
        out.push_back(std::move(a[i++]));
      } else if (o < 0) {
        out.push_back({g[j].pos, gm, k_.neg(k_.mul(c, g[j].coeff))});
        ++j;
      } else {
        Coeff s = k_.sub(a[i].coeff, k_.mul(c, g[j].coeff));
        if (s != 0) out.push_back({a[i].pos, std::move(a[i].mon), std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < g.size(); ++j) out.push_back({g[j].pos, g[j].mon * m, k_.neg(k_.mul(c, g[j].coeff))});
    return out;
  }

  void make_monic(TermVector& v) const {
    if (v.empty() || v.front().coeff == 1) return;
    Coeff inv = k_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = k_.mul(t.coeff, inv);
  }

  TermVector spair(const TermVector& f, const TermVector& g) const {
    Monomial l = lcm(f.front().mon, g.front().mon);
    TermVector s;
    s.reserve(f.size());
    Monomial mf = l / f.front().mon;
    Coeff cf = k_.inv(f.front().coeff);
    for (const auto& t : f) s.push_back({t.pos, t.mon * mf, k_.mul(t.coeff, cf)});
    Coeff cg = k_.inv(g.front().coeff);
    return sub_mul(std::move(s), 0, cg, l / g.front().mon, g);
  }

  const PolyRingPtr& ring() const { return ring_; }
  const Field& field() const { return k_; }

 private:
  PolyRingPtr ring_;
  const Field& k_;
};

/// Index over a set of basis vectors for divisor lookup by leading term.
class ReducerSet {
 public:
  void add(const TermVector* v) {
    std::uint32_t p = v->front().pos;
    if (by_pos_.size() <= p) by_pos_.resize(p + 1);
    by_pos_[p].push_back(v);
  }

  const TermVector* find(std::uint32_t pos, const Monomial& m) const {
    if (pos >= by_pos_.size()) return nullptr;
    for (const TermVector* v : by_pos_[pos])
      if (divides(v->front().mon, m)) return v;
    return nullptr;
  }

 private:
  std::vector<std::vector<const TermVector*>> by_pos_;
};

TermVector full_reduce(const Engine& eng, TermVector v, const ReducerSet& basis) {
  TermVector result;
  std::size_t head = 0;
  while (head < v.size()) {
    const VTerm& lead = v[head];
    const TermVector* g = basis.find(lead.pos, lead.mon);
    if (!g) {
      result.push_back(std::move(v[head++]));
      continue;
    }
    charge_reduction();
    Coeff c = eng.field().div(lead.coeff, g->front().coeff);
    Monomial m = lead.mon / g->front().mon;
    v = eng.sub_mul(std::move(v), head, c, m, *g);
    head = 0;
  }
  return result;
}

TermVector to_terms(const Polynomial& f, std::uint32_t pos = 0) {
  TermVector v;
  v.reserve(f.terms().size());
  for (const auto& t : f.terms()) v.push_back({pos, t.monomial, t.coeff});
  return v;
}

TermVector to_terms(const FreeElement& f, std::uint32_t offset = 0) {
  TermVector v;
  for (std::size_t i = 0; i < f.rank(); ++i)
    for (const auto& t : f.coords[i].terms()) v.push_back({static_cast<std::uint32_t>(i + offset), t.monomial, t.coeff});
  return v;
}

Polynomial to_polynomial(const TermVector& v, const PolyRingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mon, t.coeff});
  return Polynomial(ring, std::move(terms));
}

FreeElement to_free(const TermVector& v, const PolyRingPtr& ring, std::size_t rank, std::uint32_t offset = 0) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts[t.pos - offset].push_back({t.mon, t.coeff});
  FreeElement f;
  f.coords.reserve(rank);
  for (auto& p : parts) f.coords.emplace_back(ring, std::move(p));
  return f;
}

struct Pair {
  std::size_t i, j;
  std::uint32_t pos;
  Monomial lcm;
};

/// Buchberger with the Gebauer-Möller installation of criteria. The coprime
/// criterion is only valid for rank one and is disabled otherwise.
class GroebnerRun {
 public:
  GroebnerRun(const Engine& eng, std::size_t rank) : eng_(eng), rank_one_(rank == 1) {}

  std::vector<TermVector> run(std::vector<TermVector> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      eng_.make_monic(f);
      polys_.push_back(std::move(f));
      active_.push_back(0);
      update(polys_.size() - 1);
    }
    const Budget& budget = active_budget();
    while (!pairs_.empty()) {
      if (pairs_.size() > budget.max_pairs)
        throw BudgetExceeded("pair queue exceeded " + std::to_string(budget.max_pairs) + " in " + budget.label);
      std::size_t best = select();
      Pair p = pairs_[best];
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      TermVector s = eng_.spair(polys_[p.i], polys_[p.j]);
      TermVector h = full_reduce(eng_, std::move(s), reducers());
      if (h.empty()) continue;
      eng_.make_monic(h);
      polys_.push_back(std::move(h));
      active_.push_back(0);
      update(polys_.size() - 1);
    }
    return finish();
  }

 private:
  const Monomial& lm(std::size_t i) const { return polys_[i].front().mon; }
  std::uint32_t lp(std::size_t i) const { return polys_[i].front().pos; }

  ReducerSet reducers() const {
    ReducerSet rs;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) rs.add(&polys_[i]);
    return rs;
  }

  // Normal selection: smallest lcm degree, then smallest (pos, lcm).
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto o = eng_.cmp(a.pos, a.lcm, b.pos, b.lcm);
      if (o < 0 || (o == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  void update(std::size_t h) {
    const Monomial& mh = lm(h);
    const std::uint32_t ph = lp(h);

    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lp(g) == ph) c.push_back({g, h, ph, lcm(lm(g), mh)});

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = rank_one_ && coprime(lm(p.i), mh);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (divides(c[l].lcm, p.lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (divides(d[l].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      bool drop = p.pos == ph && divides(mh, p.lcm) && !(lcm(lm(p.i), mh) == p.lcm) && !(lcm(lm(p.j), mh) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!(rank_one_ && coprime(lm(p.i), mh))) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lp(g) == ph && divides(mh, lm(g))) active_[g] = 0;
    active_[h] = 1;
  }

  std::vector<TermVector> finish() {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) idx.push_back(i);
    std::vector<std::size_t> minimal;
    for (std::size_t a : idx) {
      bool redundant = false;
      for (std::size_t b : idx) {
        if (a == b || lp(a) != lp(b) || !divides(lm(b), lm(a))) continue;
        if (!(lm(a) == lm(b)) || b < a) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<TermVector> out;
    out.reserve(minimal.size());
    for (std::size_t a : minimal) {
      ReducerSet others;
      for (std::size_t b : minimal)
        if (b != a) others.add(&polys_[b]);
      TermVector r = full_reduce(eng_, polys_[a], others);
      eng_.make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const TermVector& x, const TermVector& y) {
      return eng_.cmp(x.front().pos, x.front().mon, y.front().pos, y.front().mon) > 0;
    });
    return out;
  }

  const Engine& eng_;
  bool rank_one_;
  std::vector<TermVector> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

bool spairs_reduce_to_zero(const Engine& eng, const std::vector<TermVector>& basis) {
  ReducerSet rs;
  for (const auto& b : basis) rs.add(&b);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].front().pos != basis[j].front().pos) continue;
      if (!full_reduce(eng, eng.spair(basis[i], basis[j]), rs).empty()) return false;
    }
  return true;
}

std::vector<TermVector> groebner(const Engine& eng, std::vector<TermVector> input, std::size_t rank) {
  auto gb = GroebnerRun(eng, rank).run(std::move(input));
  if (g_self_check) {
    ++g_self_check_count;
    if (!spairs_reduce_to_zero(eng, gb)) throw InternalInconsistency("computed basis failed S-pair certification");
  }
  return gb;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public GB API

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring) {
  Engine eng(ring);
  std::vector<TermVector> in;
  for (const auto& g : gens) {
    if (g.ring() && !(*g.ring() == *ring)) throw InputError("generator from a different ring");
    in.push_back(to_terms(g));
  }
  std::vector<Polynomial> out;
  for (const auto& v : groebner(eng, std::move(in), 1)) out.push_back(to_polynomial(v, ring));
  return out;
}

std::vector<FreeElement> buchberger(std::span<const FreeElement> gens, const PolyRingPtr& ring, std::size_t rank) {
  Engine eng(ring);
  std::vector<TermVector> in;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw InputError("module generator has rank " + std::to_string(g.rank()) + ", expected " + std::to_string(rank));
    in.push_back(to_terms(g));
  }
  std::vector<FreeElement> out;
  for (const auto& v : groebner(eng, std::move(in), rank)) out.push_back(to_free(v, ring, rank));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero() || basis.empty()) return f;
  Engine eng(f.ring());
  std::vector<TermVector> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(to_terms(g));
  ReducerSet rs;
  for (const auto& v : b)
    if (!v.empty()) rs.add(&v);
  return to_polynomial(full_reduce(eng, to_terms(f), rs), f.ring());
}

FreeElement normal_form(const FreeElement& f, std::span<const FreeElement> basis, const PolyRingPtr& ring) {
  Engine eng(ring);
  std::vector<TermVector> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(to_terms(g));
  ReducerSet rs;
  for (const auto& v : b)
    if (!v.empty()) rs.add(&v);
  return to_free(full_reduce(eng, to_terms(f), rs), ring, f.rank());
}

bool is_groebner_basis(std::span<const FreeElement> basis, const PolyRingPtr& ring, std::size_t) {
  Engine eng(ring);
  std::vector<TermVector> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(to_terms(g));
  return spairs_reduce_to_zero(eng, b);
}

bool is_groebner_basis(std::span<const Polynomial> basis, const PolyRingPtr& ring) {
  Engine eng(ring);
  std::vector<TermVector> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(to_terms(g));
  return spairs_reduce_to_zero(eng, b);
}

std::vector<FreeElement> syzygies_modulo(std::span<const FreeElement> tagged, std::span<const FreeElement> untagged,
                                         const PolyRingPtr& ring, std::size_t rank,
                                         std::span<const Polynomial> tag_ideal) {
  const std::size_t t = tagged.size();
  if (t == 0) return {};
  Engine eng(ring);
  std::vector<TermVector> in;
  in.reserve(t + untagged.size() + t * tag_ideal.size());
  for (std::size_t j = 0; j < t; ++j) {
    if (tagged[j].rank() != rank) throw InputError("tagged element has the wrong rank");
    TermVector v = to_terms(tagged[j]);
    v.push_back({static_cast<std::uint32_t>(rank + j), Monomial(ring->nvars()), Coeff(1)});
    in.push_back(std::move(v));
  }
  for (const auto& u : untagged) {
    if (u.rank() != rank) throw InputError("untagged element has the wrong rank");
    TermVector v = to_terms(u);
    if (!v.empty()) in.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < t; ++j)
    for (const auto& g : tag_ideal) in.push_back(to_terms(g, static_cast<std::uint32_t>(rank + j)));

  auto gb = groebner(eng, std::move(in), rank + t);
  std::vector<FreeElement> out;
  for (const auto& v : gb) {
    if (v.front().pos < rank) continue;
    FreeElement f = to_free(v, ring, t, static_cast<std::uint32_t>(rank));
    if (!tag_ideal.empty())
      for (auto& c : f.coords) c = normal_form(c, tag_ideal);
    if (f.is_zero()) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(PolyRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.ring() && !(*g.ring() == *ring_)) throw InputError("ideal generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  if (!cache_) throw std::logic_error("default-constructed Ideal");
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(gens_, ring_); });
  return cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner_basis()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_monomial() const {
  const auto& gb = groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Polynomial& g) { return g.is_term(); });
}

Polynomial Ideal::reduce(const Polynomial& f) const { return normal_form(f, groebner_basis()); }

std::string Ideal::key() const {
  std::string out;
  for (const auto& g : groebner_basis()) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return "(" + out + ")";
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return "(" + out + ")";
}

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back(a * b);
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  const auto& ring = I.ring();
  auto one = Polynomial::constant(ring, Coeff(1));
  std::vector<FreeElement> tagged{FreeElement({one, one})};
  std::vector<FreeElement> untagged;
  for (const auto& g : I.groebner_basis()) untagged.push_back(FreeElement({g, Polynomial(ring)}));
  for (const auto& h : J.groebner_basis()) untagged.push_back(FreeElement({Polynomial(ring), h}));
  std::vector<Polynomial> gens;
  for (auto& s : syzygies_modulo(tagged, untagged, ring, 2)) gens.push_back(std::move(s.coords[0]));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  const auto& ring = I.ring();
  std::vector<FreeElement> untagged;
  for (const auto& g : I.groebner_basis()) untagged.push_back(FreeElement({g}));
  Ideal acc(ring, {Polynomial::constant(ring, Coeff(1))});
  for (const auto& f : J.generators()) {
    std::vector<FreeElement> tagged{FreeElement({f})};
    std::vector<Polynomial> gens;
    for (auto& s : syzygies_modulo(tagged, untagged, ring, 1)) gens.push_back(std::move(s.coords[0]));
    acc = ideal_intersection(acc, Ideal(ring, std::move(gens)));
  }
  return Ideal(ring, acc.groebner_basis());
}

ExtendedInt krull_dimension(const Ideal& I) {
  if (I.is_unit()) return ExtendedInt::neg_inf();
  const std::size_t n = I.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.groebner_basis()) {
    std::uint32_t s = 0;
    const Monomial& m = g.leading_term().monomial;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  long best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    bool independent = std::none_of(supports.begin(), supports.end(), [u](std::uint32_t s) { return (s & ~u) == 0; });
    if (independent) best = std::max<long>(best, std::popcount(u));
  }
  return ExtendedInt(best);
}

}  // namespace rfd
