#include "rfd/invariants.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rfd/errors.hpp"

namespace rfd {

namespace {

bool is_variable(const Polynomial& g) { return g.is_term() && g.leading_term().monomial.degree() == 1; }

std::size_t variable_of(const Polynomial& g) {
  const Monomial& m = g.leading_term().monomial;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) return i;
  return 0;
}

bool homogeneous_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  return std::all_of(gb.begin(), gb.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

ExtendedInt sup(ExtendedInt acc, const ExtendedInt& v) { return max(acc, v); }

}  // namespace

// ---------------------------------------------------------------------------
// Prime candidates

std::string PrimeCandidate::to_string() const {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    out += g.to_string();
  }
  return "(" + out + ")";
}

PrimeCandidate monomial_prime(const RingPtr& ring, std::uint32_t mask, std::string name) {
  PrimeCandidate p;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (mask & (1u << i)) p.gens.push_back(Polynomial::variable(ring->ambient(), i));
  p.ideal = ring->ideal(p.gens);
  p.monomial = true;
  p.variables = mask;
  p.name = name.empty() ? p.to_string() : std::move(name);
  return p;
}

PrimeCandidate listed_prime(const RingPtr& ring, std::string name, std::vector<Polynomial> gens,
                            std::optional<long> height) {
  PrimeCandidate p;
  p.gens = std::move(gens);
  p.ideal = ring->ideal(p.gens);
  p.monomial = std::all_of(p.gens.begin(), p.gens.end(), is_variable);
  if (p.monomial)
    for (const auto& g : p.gens) p.variables |= 1u << variable_of(g);
  p.height = height;
  p.name = name.empty() ? p.to_string() : std::move(name);
  if (p.ideal.is_unit()) throw InputError("prime " + p.name + " is the unit ideal");
  return p;
}

std::string to_string(PrimeMode mode) { return mode == PrimeMode::monomial ? "monomial" : "listed"; }

const PrimeCandidate* PrimeSet::find(const std::string& name) const {
  for (const auto& c : candidates)
    if (c.name == name) return &c;
  return nullptr;
}

PrimeSet candidate_primes(const RingPtr& ring, PrimeMode mode, std::vector<PrimeCandidate> extra) {
  PrimeSet set;
  set.mode = mode;
  const std::size_t n = ring->nvars();
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  std::set<std::string> seen;
  auto add = [&](PrimeCandidate p) {
    if (seen.insert(p.ideal.key()).second) set.candidates.push_back(std::move(p));
  };
  auto named = [&](PrimeCandidate p) {
    for (auto& e : extra)
      if (e.ideal == p.ideal) {
        e.variables = p.variables;
        e.monomial = true;
        return e;
      }
    return p;
  };

  if (mode == PrimeMode::monomial) {
    if (!ring->is_monomial()) throw InputError("monomial prime mode needs monomial relations");
    for (const auto& e : extra)
      if (!e.monomial) throw InputError("prime " + e.name + " is not generated by variables (monomial mode)");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      bool contains = true;
      for (const auto& g : ring->relation_basis()) {
        const Monomial& m = g.leading_term().monomial;
        bool hit = false;
        for (std::size_t i = 0; i < n && !hit; ++i) hit = (mask & (1u << i)) && m[i] > 0;
        if (!hit) {
          contains = false;
          break;
        }
      }
      if (contains) masks.push_back(mask);
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::uint32_t mask : masks) add(named(monomial_prime(ring, mask, mask == all ? "m" : "")));
  } else {
    for (auto& e : extra) add(e);
    const Ideal m = ring->maximal_ideal();
    if (!m.is_unit() && m.contains(ring->relations())) add(named(monomial_prime(ring, all, "m")));
  }
  const Ideal m = ring->maximal_ideal();
  for (std::size_t k = 0; k < set.candidates.size(); ++k)
    if (set.candidates[k].ideal == m) set.maximal = k;
  return set;
}

bool contained_in(const PrimeCandidate& q, const PrimeCandidate& p) {
  if (q.monomial && p.monomial) return (q.variables & ~p.variables) == 0;
  return p.ideal.contains(q.ideal);
}

std::vector<PrimeCandidate> min_primes(const PrimeSet& primes) {
  if (!primes.exhaustive()) throw InputError("minimal primes are only computed in monomial mode");
  std::vector<PrimeCandidate> out;
  for (const auto& p : primes.candidates) {
    bool minimal = true;
    for (const auto& q : primes.candidates)
      if (q.variables != p.variables && contained_in(q, p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<Ideal> ideal_battery(const RingPtr& ring, const PrimeSet& primes, const std::vector<Ideal>& extras) {
  std::vector<Ideal> out;
  std::set<std::string> seen;
  auto add = [&](std::vector<Polynomial> gens) {
    Ideal I = ring->ideal(std::move(gens));
    if (I.is_unit()) return;
    if (seen.insert(I.key()).second) out.push_back(std::move(I));
  };
  const auto& c = primes.candidates;
  for (const auto& p : c) add(p.gens);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto g = c[i].gens;
      g.insert(g.end(), c[j].gens.begin(), c[j].gens.end());
      add(std::move(g));
    }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) {
      std::vector<Polynomial> g;
      for (const auto& a : c[i].gens)
        for (const auto& b : c[j].gens) g.push_back(a * b);
      add(std::move(g));
    }
  for (const auto& e : extras) add(e.generators());
  return out;
}

std::string to_string(Tribool t) {
  switch (t) {
    case Tribool::yes: return "yes";
    case Tribool::no: return "no";
    default: return "unknown";
  }
}

// ---------------------------------------------------------------------------
// Analyzer: grade and depth

Analyzer::Analyzer(RingPtr ring, PrimeSet primes, std::vector<Ideal> battery, AnalyzerOptions options)
    : ring_(std::move(ring)),
      primes_(std::move(primes)),
      battery_(std::move(battery)),
      R_(ModulePresentation::free(ring_, 1)),
      cap_(options.max_homological_degree ? options.max_homological_degree : ring_->nvars() + 2),
      window_(options.resolution_window ? options.resolution_window : ring_->nvars() + 2) {}

std::shared_ptr<Resolution> Analyzer::resolution_of(const Ideal& I) {
  auto& slot = resolutions_[I.key()];
  if (!slot) slot = std::make_shared<Resolution>(free_resolution(ModulePresentation::cyclic(ring_, I.generators()), 0));
  return slot;
}

Analyzer::ExtProfile& Analyzer::profile(const Ideal& I, const ModulePresentation& M) {
  const std::string key = I.key() + "#" + M.key();
  auto it = profiles_.find(key);
  if (it == profiles_.end()) it = profiles_.emplace(key, ExtProfile{resolution_of(I), M, {}}).first;
  return it->second;
}

const Ideal& Analyzer::ext_annihilator(const Ideal& I, const ModulePresentation& M, std::size_t i) {
  ExtProfile& pr = profile(I, M);
  while (pr.annihilators.size() <= i) {
    const std::size_t k = pr.annihilators.size();
    extend_resolution(*pr.resolution, k + 1);
    pr.annihilators.push_back(annihilator(ext(k, *pr.resolution, pr.module)));
  }
  return pr.annihilators[i];
}

const Ideal& Analyzer::top_annihilator(const Ideal& I, const ModulePresentation& M) {
  const std::string key = I.key() + "#" + M.key();
  auto it = tops_.find(key);
  if (it == tops_.end()) it = tops_.emplace(key, annihilator(quotient_by_ideal(M, I))).first;
  return it->second;
}

void Analyzer::scan_exhausted(const Ideal& I, const ModulePresentation& M) const {
  throw InternalInconsistency("Ext scan up to degree " + std::to_string(cap_) + " found no nonzero Ext for I = " +
                              I.to_string() + " and M = " + M.to_string() + " although M != IM");
}

ExtendedInt Analyzer::grade(const Ideal& I, const ModulePresentation& M) {
  if (top_annihilator(I, M).is_unit()) return ExtendedInt::pos_inf();
  for (std::size_t i = 0; i <= cap_; ++i)
    if (!ext_annihilator(I, M, i).is_unit()) return static_cast<long>(i);
  scan_exhausted(I, M);
}

ExtendedInt Analyzer::grade_at_prime(const Ideal& I, const ModulePresentation& M, const PrimeCandidate& p) {
  if (!p.ideal.contains(top_annihilator(I, M))) return ExtendedInt::pos_inf();
  for (std::size_t i = 0; i <= cap_; ++i)
    if (p.ideal.contains(ext_annihilator(I, M, i))) return static_cast<long>(i);
  scan_exhausted(I, M);
}

ExtendedInt Analyzer::depth_at_prime(const ModulePresentation& M, const PrimeCandidate& p) {
  return grade_at_prime(p.ideal, M, p);
}

std::optional<ExtendedInt> Analyzer::dim_at_prime(const PrimeCandidate& p) {
  if (primes_.exhaustive() && p.monomial) {
    ExtendedInt best = ExtendedInt::neg_inf();
    for (const auto& q : min_primes(primes_))
      if (contained_in(q, p)) best = max(best, static_cast<long>(std::popcount(p.variables) - std::popcount(q.variables)));
    return best;
  }
  if (p.height) return *p.height;
  if (graded_local() && maximal() && p.ideal == maximal()->ideal) return krull_dimension(ring_->relations());
  return std::nullopt;
}

std::optional<ExtendedInt> Analyzer::cmd_at_prime(const PrimeCandidate& p) {
  auto d = dim_at_prime(p);
  if (!d) return std::nullopt;
  return *d - depth_at_prime(R_, p);
}

std::vector<const PrimeCandidate*> Analyzer::generalizations(const PrimeCandidate& p) const {
  std::vector<const PrimeCandidate*> out;
  for (const auto& q : primes_.candidates)
    if (contained_in(q, p)) out.push_back(&q);
  return out;
}

// ---------------------------------------------------------------------------
// Restricted flat dimensions

ExtendedInt Analyzer::Rfd_at_prime(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto* q : generalizations(p)) acc = sup(acc, depth_at_prime(R_, *q) - depth_at_prime(M, *q));
  return acc;
}

ExtendedInt Analyzer::rfd_at_prime_over_primes(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto* q : generalizations(p))
    acc = sup(acc, grade_at_prime(q->ideal, R_, p) - grade_at_prime(q->ideal, M, p));
  return acc;
}

ExtendedInt Analyzer::rfd_at_prime_over_battery(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& I : battery_)
    if (p.ideal.contains(I)) acc = sup(acc, grade_at_prime(I, R_, p) - grade_at_prime(I, M, p));
  return acc;
}

ExtendedInt Analyzer::rfd_at_prime(const ModulePresentation& M, const PrimeCandidate& p) {
  return max(rfd_at_prime_over_primes(M, p), rfd_at_prime_over_battery(M, p));
}

ExtendedInt Analyzer::Rfdprime_at_prime(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto* q : generalizations(p)) acc = sup(acc, depth_at_prime(R_, *q) - grade_at_prime(q->ideal, M, p));
  return acc;
}

ExtendedInt Analyzer::xi(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto* q : generalizations(p)) acc = sup(acc, grade(q->ideal, R_) - grade_at_prime(q->ideal, M, p));
  return acc;
}

ExtendedInt Analyzer::xi_dual(const ModulePresentation& M, const PrimeCandidate& p) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto* q : generalizations(p)) acc = sup(acc, grade(q->ideal, R_) - depth_at_prime(M, *q));
  return acc;
}

ExtendedInt Analyzer::Rfd(const ModulePresentation& M) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& q : primes_.candidates) acc = sup(acc, depth_at_prime(R_, q) - depth_at_prime(M, q));
  return acc;
}

ExtendedInt Analyzer::rfd_over_primes(const ModulePresentation& M) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& q : primes_.candidates) acc = sup(acc, grade(q.ideal, R_) - grade(q.ideal, M));
  return acc;
}

ExtendedInt Analyzer::rfd_over_battery(const ModulePresentation& M) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& I : battery_) acc = sup(acc, grade(I, R_) - grade(I, M));
  return acc;
}

ExtendedInt Analyzer::rfd(const ModulePresentation& M) { return max(rfd_over_primes(M), rfd_over_battery(M)); }

ExtendedInt Analyzer::Rfdprime(const ModulePresentation& M) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& q : primes_.candidates) acc = sup(acc, depth_at_prime(R_, q) - grade(q.ideal, M));
  return acc;
}

ExtendedInt Analyzer::rfd_dual(const ModulePresentation& M) {
  ExtendedInt acc = ExtendedInt::neg_inf();
  for (const auto& q : primes_.candidates) acc = sup(acc, grade(q.ideal, R_) - depth_at_prime(M, q));
  return acc;
}

// ---------------------------------------------------------------------------
// Structural predicates

bool Analyzer::is_associated(const ModulePresentation& M, const PrimeCandidate& p) {
  return depth_at_prime(M, p) == 0;
}

std::optional<bool> Analyzer::is_minimal(const PrimeCandidate& p) {
  if (primes_.exhaustive()) {
    for (const auto& q : primes_.candidates)
      if (contained_in(q, p) && !contained_in(p, q)) return false;
    return true;
  }
  if (p.height) return *p.height == 0;
  return std::nullopt;
}

const PrimeCandidate* Analyzer::maximal() const {
  return primes_.maximal ? &primes_.candidates[*primes_.maximal] : nullptr;
}

bool Analyzer::graded_local() const {
  if (!maximal() || !ring_->is_homogeneous()) return false;
  return std::all_of(primes_.candidates.begin(), primes_.candidates.end(),
                     [](const PrimeCandidate& p) { return homogeneous_ideal(p.ideal); });
}

bool Analyzer::finite_projective_dimension(const ModulePresentation& M) {
  auto it = finite_pd_.find(M.key());
  if (it == finite_pd_.end()) it = finite_pd_.emplace(M.key(), free_resolution(M, window_).terminated).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Conditions

ConditionReport Analyzer::evaluate_conditions(const ModulePresentation& M, const PrimeCandidate& p) {
  ConditionReport r;
  r.prime = p.name;
  r.Rfdprime = Rfdprime_at_prime(M, p);
  r.Rfd = Rfd_at_prime(M, p);
  r.rfd = rfd_at_prime(M, p);
  r.xi = xi(M, p);
  r.Lprime = r.Rfdprime <= 0;
  r.L = r.Rfd <= 0;
  r.s = r.rfd <= 0;
  r.G = r.xi <= 0;

  auto decide = [&](Tribool y, std::string why) {
    r.Y = y;
    r.justification = std::move(why);
    return r;
  };
  if (r.L) return decide(Tribool::yes, "L implies Y");
  if (!r.G) return decide(Tribool::no, "Y implies G, and G fails");

  if (graded_local()) {
    const PrimeCandidate* m = maximal();
    if (p.ideal == m->ideal) return decide(Tribool::yes, "at the maximal ideal of a local ring, G is equivalent to Y");
    if (depth_at_prime(R_, *m) == 0) return decide(Tribool::yes, "depth R_m = 0, so every module lies in R(p)");
    auto d = dim_at_prime(*m);
    if (r.s && d && *d <= 2) return decide(Tribool::yes, "local ring of dimension at most 2, and s holds");
  }
  if (primes_.exhaustive()) {
    bool hyp = true;
    for (const auto* q : generalizations(p))
      if (grade(q->ideal, R_) != depth_at_prime(R_, *q)) {
        hyp = false;
        break;
      }
    if (hyp) return decide(Tribool::yes, "grade(q,R) = depth R_q on U(p), so all five conditions agree");
  }
  auto cmd = cmd_at_prime(p);
  const bool finite_cd = (cmd && *cmd == 0) || finite_projective_dimension(M);
  if (finite_cd && grade(p.ideal, R_) == depth_at_prime(R_, p))
    return decide(Tribool::yes, "finite CM-dimension and grade(p,R) = depth R_p, so G implies L");
  return decide(Tribool::unknown, "G holds but no criterion deciding Y applies");
}

}  // namespace rfd
