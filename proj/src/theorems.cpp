#include "rfd/theorems.hpp"

#include <algorithm>

#include "rfd/errors.hpp"

namespace rfd {

namespace {

std::string str(const ExtendedInt& v) { return v.to_string(); }
std::string str(bool b) { return b ? "true" : "false"; }

CheckResult make(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult r = make(std::move(name));
  r.status = CheckStatus::skipped;
  r.notes = std::move(why);
  return r;
}

void fail(CheckResult& r, std::string why) {
  if (r.status != CheckStatus::fail) r.notes = std::move(why);
  r.status = CheckStatus::fail;
}

// grade(I, M) + k, with +inf absorbing.
ExtendedInt shifted(const ExtendedInt& g, long k) { return g + ExtendedInt(k); }

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    default: return "SKIPPED";
  }
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::always: return "ALWAYS";
    case CellStatus::refuted: return "REFUTED";
    default: return "OPEN";
  }
}

// ---------------------------------------------------------------------------
// rfd through ideals

CheckResult check_rfd_via_ideals(Analyzer& A, const std::string& name, const ModulePresentation& M) {
  CheckResult r = make("lemma.rfd_via_ideals");
  r.witness["module"] = name;
  const bool exact = A.primes().exhaustive();
  auto compare = [&](const ExtendedInt& primes, const ExtendedInt& battery) {
    return exact ? primes == battery : battery >= primes;
  };

  const ExtendedInt over_primes = A.rfd_over_primes(M);
  ExtendedInt battery_max = ExtendedInt::neg_inf();
  std::string argmax = "none";
  for (const auto& I : A.battery()) {
    ExtendedInt v = A.grade(I, A.ring_module()) - A.grade(I, M);
    if (v > battery_max) {
      battery_max = v;
      argmax = I.to_string();
    }
  }
  r.witness["rfd_over_primes"] = str(over_primes);
  r.witness["battery_max"] = str(battery_max);
  r.witness["maximizing_ideal"] = argmax;
  if (!compare(over_primes, battery_max)) fail(r, "global rfd differs from the battery maximum");

  for (const auto& p : A.primes().candidates) {
    ExtendedInt a = A.rfd_at_prime_over_primes(M, p), b = A.rfd_at_prime_over_battery(M, p);
    if (!compare(a, b)) {
      r.witness["prime"] = p.name;
      r.witness["local_over_primes"] = str(a);
      r.witness["local_battery_max"] = str(b);
      fail(r, "localized rfd differs from the battery maximum at " + p.name);
    }
  }
  r.notes = r.status == CheckStatus::fail ? r.notes : (exact ? "equality over all monomial primes" : "battery >= candidates-only value");
  return r;
}

// ---------------------------------------------------------------------------
// Syzygies gain grade

CheckResult check_syzygy_grade_lift(Analyzer& A, const std::string& name, const ModulePresentation& M) {
  CheckResult r = make("syzygy.grade_lift");
  r.witness["module"] = name;
  if (is_zero(M)) return skipped(r.name, "module is zero");
  const ExtendedInt s = A.rfd(M);
  r.witness["s"] = str(s);
  const ModulePresentation syz_s = syzygy(M, static_cast<unsigned>(s.value()));
  const ModulePresentation syz_1 = syzygy(M);
  const auto& R = A.ring_module();
  for (const auto& I : A.battery()) {
    const ExtendedInt gR = A.grade(I, R);
    const ExtendedInt gs = A.grade(I, syz_s);
    if (gs < gR) {
      r.witness["ideal"] = I.to_string();
      r.witness["grade_R"] = str(gR);
      r.witness["grade_syz_s"] = str(gs);
      fail(r, "grade(I, syz^s M) < grade(I, R)");
    }
    const ExtendedInt g1 = A.grade(I, syz_1);
    const ExtendedInt bound = min(gR, shifted(A.grade(I, M), 1));
    if (g1 < bound) {
      r.witness["ideal"] = I.to_string();
      r.witness["grade_syz_1"] = str(g1);
      r.witness["step_bound"] = str(bound);
      fail(r, "grade(I, syz^1 M) < min(grade(I,R), grade(I,M) + 1)");
    }
  }
  if (r.status == CheckStatus::pass)
    r.notes = "checked over " + std::to_string(A.battery().size()) + " battery ideals";
  return r;
}

// ---------------------------------------------------------------------------
// Five conditions at a prime

std::vector<CheckResult> check_five_conditions(Analyzer& A, const std::string& name, const ModulePresentation& M,
                                            const PrimeCandidate& p) {
  std::vector<CheckResult> out;
  const bool exact = A.primes().exhaustive();
  const ConditionReport c = A.evaluate_conditions(M, p);
  const auto& R = A.ring_module();
  auto base = [&](std::string id) {
    CheckResult r = make("main." + std::move(id));
    r.witness["module"] = name;
    r.witness["prime"] = p.name;
    return r;
  };
  auto put_conditions = [&](CheckResult& r) {
    r.witness["Lprime"] = str(c.Lprime);
    r.witness["L"] = str(c.L);
    r.witness["s"] = str(c.s);
    r.witness["G"] = str(c.G);
    r.witness["Y"] = to_string(c.Y);
  };
  auto skip = [&](std::string id, std::string why) {
    CheckResult r = base(std::move(id));
    r.status = CheckStatus::skipped;
    r.notes = std::move(why);
    out.push_back(std::move(r));
  };

  {
    CheckResult r = base("chain");
    r.witness["Rfdprime"] = str(c.Rfdprime);
    r.witness["Rfd"] = str(c.Rfd);
    r.witness["rfd"] = str(c.rfd);
    r.witness["xi"] = str(c.xi);
    if (!(c.Rfdprime >= c.Rfd && c.Rfd >= c.rfd && c.rfd >= c.xi)) fail(r, "Rfd' >= Rfd >= rfd >= xi violated");
    out.push_back(std::move(r));
  }
  {
    // (s) iff grade(IR_p, M_p) >= grade(IR_p, R_p) for all I.
    CheckResult r = base("s_iff_local_grade_bound");
    bool all = true;
    for (const auto& I : A.battery()) {
      if (!p.ideal.contains(I)) continue;
      if (A.grade_at_prime(I, M, p) < A.grade_at_prime(I, R, p)) {
        all = false;
        r.witness["ideal"] = I.to_string();
        break;
      }
    }
    r.witness["s"] = str(c.s);
    r.witness["bound_holds"] = str(all);
    if (all != c.s) fail(r, "(s) disagrees with the local grade bound over the battery");
    out.push_back(std::move(r));
  }
  {
    // (G) iff grade(IR_p, M_p) >= grade(I, R) for all I.
    CheckResult r = base("G_iff_global_grade_bound");
    bool all = true;
    for (const auto& I : A.battery()) {
      if (A.grade_at_prime(I, M, p) < A.grade(I, R)) {
        all = false;
        r.witness["ideal"] = I.to_string();
        break;
      }
    }
    r.witness["G"] = str(c.G);
    r.witness["bound_holds"] = str(all);
    if (exact ? all != c.G : (all && !c.G)) fail(r, "(G) disagrees with the global grade bound over the battery");
    if (!exact) r.notes = "listed mode: only bound => (G) is asserted";
    out.push_back(std::move(r));
  }
  {
    CheckResult r = base("implications");
    put_conditions(r);
    if (c.Lprime && !c.L) fail(r, "L' without L");
    if (c.L && !c.s) fail(r, "L without s");
    if (c.s && !c.G) fail(r, "s without G");
    if (c.L && c.Y != Tribool::yes) fail(r, "L without Y");
    if (c.Y == Tribool::yes && !c.G) fail(r, "Y without G");
    r.witness["justification"] = c.justification;
    out.push_back(std::move(r));
  }

  // Special primes.
  if (auto minimal = A.is_minimal(p); !minimal) {
    skip("minimal_prime_gives_Lprime", "minimality of p not decidable over the candidates");
  } else if (!*minimal) {
    skip("minimal_prime_gives_Lprime", "p is not minimal");
  } else {
    CheckResult r = base("minimal_prime_gives_Lprime");
    r.witness["Rfdprime"] = str(c.Rfdprime);
    if (!c.Lprime) fail(r, "p is minimal but Rfd' > 0");
    out.push_back(std::move(r));
  }
  if (!A.is_associated(R, p)) {
    skip("associated_prime_gives_s", "p is not associated to R");
  } else {
    CheckResult r = base("associated_prime_gives_s");
    r.witness["rfd"] = str(c.rfd);
    if (!c.s) fail(r, "p is associated to R but rfd > 0");
    out.push_back(std::move(r));
  }
  const ExtendedInt grade_pR = A.grade(p.ideal, R);
  const ExtendedInt depth_Rp = A.depth_at_prime(R, p);
  const ExtendedInt depth_Mp = A.depth_at_prime(M, p);
  if (grade_pR != 0) {
    skip("grade_zero_gives_G", "grade(p, R) = " + str(grade_pR));
  } else {
    CheckResult r = base("grade_zero_gives_G");
    r.witness["xi"] = str(c.xi);
    if (!c.G) fail(r, "grade(p, R) = 0 but xi > 0");
    out.push_back(std::move(r));
  }

  // Finite CM-dimension, via CM local ring or finite projective dimension.
  const auto cmd = A.cmd_at_prime(p);
  const bool cm = cmd && *cmd == 0;
  const bool fpd = A.finite_projective_dimension(M);
  const bool finite_cd = cm || fpd;
  const std::string cd_reason = cm ? "R_p is Cohen-Macaulay" : "M has a finite free resolution";
  if (!finite_cd) {
    skip("finite_cd_L_iff_s", "no sufficient condition for finite CM-dimension holds");
  } else {
    CheckResult r = base("finite_cd_L_iff_s");
    const ExtendedInt diff = depth_Rp - depth_Mp;
    r.witness["Rfd"] = str(c.Rfd);
    r.witness["rfd"] = str(c.rfd);
    r.witness["depth_difference"] = str(diff);
    r.notes = cd_reason;
    if (c.L != c.s) fail(r, "L and s differ although cd is finite");
    if (c.Rfd != diff || c.rfd != diff) fail(r, "Rfd, rfd and depth R_p - depth M_p differ although cd is finite");
    out.push_back(std::move(r));
  }
  if (!cmd) {
    skip("small_cmd_equalities", "dim R_p unknown");
  } else if (*cmd > 1) {
    skip("small_cmd_equalities", "cmd R_p = " + str(*cmd));
  } else {
    CheckResult r = base("small_cmd_equalities");
    r.witness["cmd"] = str(*cmd);
    r.witness["Rfdprime"] = str(c.Rfdprime);
    r.witness["Rfd"] = str(c.Rfd);
    r.witness["rfd"] = str(c.rfd);
    if (c.Lprime != c.L || c.L != c.s) fail(r, "L', L, s not equivalent although cmd R_p <= 1");
    if (exact) {
      if (c.Rfdprime != c.Rfd || c.Rfd != c.rfd) fail(r, "Rfd', Rfd, rfd differ although cmd R_p <= 1");
    } else {
      const ExtendedInt over_primes = A.rfd_at_prime_over_primes(M, p);
      r.witness["rfd_over_candidates"] = str(over_primes);
      if (c.Rfdprime != over_primes) fail(r, "Rfd' differs from rfd over the candidates although cmd R_p <= 1");
      r.notes = "listed mode: termwise equality over the candidates";
    }
    out.push_back(std::move(r));
  }
  if (!finite_cd || grade_pR != depth_Rp) {
    skip("finite_cd_G_implies_L", !finite_cd ? "no sufficient condition for finite CM-dimension holds"
                                             : "grade(p,R) != depth R_p");
  } else {
    CheckResult r = base("finite_cd_G_implies_L");
    put_conditions(r);
    r.notes = cd_reason;
    if (c.G && !c.L) fail(r, "G without L");
    if ((c.Y == Tribool::yes) != c.G || c.Y == Tribool::unknown) fail(r, "Y not decided as G");
    out.push_back(std::move(r));
  }

  bool grade_localizes = true, grade_is_depth = true;
  for (const auto* q : A.generalizations(p)) {
    const ExtendedInt g = A.grade(q->ideal, R);
    if (g != A.grade_at_prime(q->ideal, R, p)) grade_localizes = false;
    if (g != A.depth_at_prime(R, *q)) grade_is_depth = false;
  }
  if (!grade_localizes) {
    skip("grade_localizes_rfd_equals_xi", "grade(q,R) != grade(qR_p,R_p) for some candidate q in U(p)");
  } else {
    CheckResult r = base("grade_localizes_rfd_equals_xi");
    const ExtendedInt over_primes = A.rfd_at_prime_over_primes(M, p);
    r.witness["rfd"] = str(c.rfd);
    r.witness["xi"] = str(c.xi);
    if (over_primes != c.xi) fail(r, "rfd over the candidates differs from xi");
    if (exact && (c.rfd != c.xi || c.s != c.G)) fail(r, "rfd differs from xi");
    out.push_back(std::move(r));
  }
  if (!exact) {
    skip("grade_equals_depth_all_agree", "hypothesis ranges over all of U(p); listed mode only sees candidates");
  } else if (!grade_is_depth) {
    skip("grade_equals_depth_all_agree", "grade(q,R) != depth R_q for some q in U(p)");
  } else {
    CheckResult r = base("grade_equals_depth_all_agree");
    put_conditions(r);
    if (!(c.Rfdprime == c.Rfd && c.Rfd == c.rfd && c.rfd == c.xi)) fail(r, "Rfd', Rfd, rfd, xi differ");
    if (c.Y == Tribool::unknown || (c.Y == Tribool::yes) != c.G) fail(r, "Y not decided as G");
    out.push_back(std::move(r));
  }

  // Local-ring statements, at the designated maximal ideal.
  const PrimeCandidate* m = A.maximal();
  if (!A.graded_local()) {
    skip("maximal_s_iff_G_iff_Y", "instance is not graded-local");
    skip("low_dimension_s_implies_Y", "instance is not graded-local");
    return out;
  }
  if (!(p.ideal == m->ideal)) {
    skip("maximal_s_iff_G_iff_Y", "p is not the maximal ideal");
  } else {
    CheckResult r = base("maximal_s_iff_G_iff_Y");
    put_conditions(r);
    if (c.s != c.G) fail(r, "s and G differ at the maximal ideal");
    if (c.Y == Tribool::unknown || (c.Y == Tribool::yes) != c.G) fail(r, "Y differs from G at the maximal ideal");
    out.push_back(std::move(r));
  }
  const auto dim_m = A.dim_at_prime(*m);
  if (!dim_m || *dim_m > 2) {
    skip("low_dimension_s_implies_Y", dim_m ? "dim R_m = " + str(*dim_m) : "dim R_m unknown");
  } else {
    CheckResult r = base("low_dimension_s_implies_Y");
    put_conditions(r);
    if (c.s && c.Y != Tribool::yes) fail(r, "s holds but Y is not established");
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Depth forms of rfd and xi

CheckResult check_dual_formulas(Analyzer& A, const std::string& name, const ModulePresentation& M) {
  CheckResult r = make("dual.grade_minus_depth");
  r.witness["module"] = name;
  const bool exact = A.primes().exhaustive();
  auto agree = [&](const ExtendedInt& value, const ExtendedInt& dual) { return exact ? value == dual : dual <= value; };
  const ExtendedInt rfd = A.rfd(M), rfd_dual = A.rfd_dual(M);
  r.witness["rfd"] = str(rfd);
  r.witness["rfd_dual"] = str(rfd_dual);
  if (!agree(rfd, rfd_dual)) fail(r, "rfd differs from sup grade(q,R) - depth M_q");
  for (const auto& p : A.primes().candidates) {
    const ExtendedInt x = A.xi(M, p), xd = A.xi_dual(M, p);
    if (!agree(x, xd)) {
      r.witness["prime"] = p.name;
      r.witness["xi"] = str(x);
      r.witness["xi_dual"] = str(xd);
      fail(r, "xi differs from its depth form at " + p.name);
    }
  }
  if (r.status == CheckStatus::pass) r.notes = exact ? "equalities at every candidate" : "depth forms bounded by the grade forms";
  return r;
}

// ---------------------------------------------------------------------------
// Depth-zero local rings

CheckResult check_depth_zero_family(Analyzer& A) {
  CheckResult r = make("counterexample.depth_zero_family");
  if (!A.graded_local()) return skipped(r.name, "instance is not graded-local");
  const PrimeCandidate& m = *A.maximal();
  const auto& R = A.ring_module();
  const ExtendedInt depth_m = A.depth_at_prime(R, m);
  const auto dim_m = A.dim_at_prime(m);
  if (depth_m != 0) return skipped(r.name, "depth R_m = " + str(depth_m));
  if (!dim_m || *dim_m < 2) return skipped(r.name, dim_m ? "dim R_m = " + str(*dim_m) : "dim R_m unknown");

  // A prime of maximal positive local depth.
  const PrimeCandidate* p = nullptr;
  ExtendedInt best = 0;
  for (const auto& q : A.primes().candidates) {
    const ExtendedInt d = A.depth_at_prime(R, q);
    if (d > best) {
      best = d;
      p = &q;
    }
  }
  r.witness["dim_R"] = str(*dim_m);
  if (!p) {
    fail(r, "no candidate prime with depth R_p > 0");
    return r;
  }
  r.witness["prime"] = p->name;
  r.witness["depth_R_p"] = str(best);
  if (A.primes().exhaustive() && best != *dim_m - 1) fail(r, "max depth R_p differs from dim R - 1");

  const ModulePresentation M = ModulePresentation::cyclic(A.ring(), p->gens);
  r.witness["module"] = "R/" + p->to_string();

  for (const auto* target : {&m, p})
    for (const auto* N : {&R, &M}) {
      const auto c = A.evaluate_conditions(*N, *target);
      if (c.Y != Tribool::yes) fail(r, "Y is not established at " + target->name);
    }

  const ExtendedInt rfd_p = A.rfd_at_prime(M, *p);
  r.witness["rfd_at_p"] = str(rfd_p);
  if (!(rfd_p > 0)) fail(r, "rfd_{R_p} M_p is not positive");
  const auto at_p = A.evaluate_conditions(M, *p);
  if (at_p.s || at_p.Y != Tribool::yes) fail(r, "(Y) without (s) not realized at p");

  const ExtendedInt Rfd_M = A.Rfd_at_prime(M, m), rfd_M = A.rfd_at_prime(M, m);
  r.witness["Rfd_M"] = str(Rfd_M);
  r.witness["rfd_M"] = str(rfd_M);
  if (!(Rfd_M > 0 && rfd_M == 0)) fail(r, "Rfd M > 0 = rfd M fails");

  const ExtendedInt Rfdp_R = A.Rfdprime_at_prime(R, m), Rfd_R = A.Rfd_at_prime(R, m);
  r.witness["Rfdprime_R"] = str(Rfdp_R);
  r.witness["Rfd_R"] = str(Rfd_R);
  if (!(Rfdp_R > 0 && Rfd_R == 0)) fail(r, "Rfd' R > 0 = Rfd R fails");
  return r;
}

// ---------------------------------------------------------------------------
// Annihilators of local cohomology

CheckResult check_annihilator_bounds(Analyzer& A, const std::string& name, const ModulePresentation& M,
                                  const PrimeCandidate& p) {
  CheckResult r = make("annihilator.uniform_element");
  r.witness["module"] = name;
  r.witness["prime"] = p.name;
  const ExtendedInt rr = A.Rfd_at_prime(M, p);
  r.witness["r"] = str(rr);

  if (rr.is_neg_inf()) {
    const Ideal ann = annihilator(M);
    for (const auto& g : ann.groebner_basis()) {
      if (p.ideal.contains(g)) continue;
      const Polynomial s = A.ring()->reduce(g);
      r.witness["s"] = s.to_string();
      if (!annihilates(M, s)) fail(r, "candidate s does not annihilate M");
      r.notes = "M_p = 0: s lies outside p and kills M";
      return r;
    }
    fail(r, "Rfd is -inf but Ann(M) lies in p");
    return r;
  }

  const auto& R = A.ring_module();
  const long depth = rr.value();
  std::vector<ModulePresentation> stages{M};
  for (long j = 1; j <= depth; ++j) stages.push_back(syzygy(stages.back()));
  for (long j = 1; j <= depth; ++j) {
    const ExtendedInt expected = rr - ExtendedInt(j);
    const ExtendedInt got = A.Rfd_at_prime(stages[j], p);
    if (got != expected) {
      r.witness["stage"] = std::to_string(j);
      r.witness["Rfd_syz"] = str(got);
      fail(r, "Rfd of the syzygy does not drop by one");
    }
  }
  for (const auto& I : A.battery()) {
    const ExtendedInt gR = A.grade(I, R);
    for (long j = 1; j <= depth; ++j) {
      const ExtendedInt bound = min(gR, shifted(A.grade(I, stages[j - 1]), 1));
      if (A.grade(I, stages[j]) < bound) {
        r.witness["ideal"] = I.to_string();
        r.witness["stage"] = std::to_string(j);
        fail(r, "grade lemma bound fails along the syzygies");
      }
    }
    const ExtendedInt final_bound = min(gR, shifted(A.grade(I, M), depth));
    const ExtendedInt g = A.grade(I, stages.back());
    if (g < final_bound) {
      r.witness["ideal"] = I.to_string();
      r.witness["grade_syz_r"] = str(g);
      r.witness["bound"] = str(final_bound);
      fail(r, "grade(I, syz^r M) < min(grade(I,R), grade(I,M) + r)");
    }
  }
  if (r.status == CheckStatus::pass)
    r.notes = depth == 0 ? "r = 0: M itself meets the bound" : "bounds hold at every syzygy stage";
  return r;
}

// ---------------------------------------------------------------------------
// Implication table

const std::array<std::array<CellClaim, 5>, 5>& known_implications() {
  using C = CellClaim;
  static const std::array<std::array<CellClaim, 5>, 5> table{{
      {C::holds, C::holds, C::holds, C::holds, C::holds},
      {C::fails, C::holds, C::holds, C::holds, C::holds},
      {C::fails, C::fails, C::holds, C::holds, C::unknown},
      {C::fails, C::fails, C::fails, C::holds, C::unknown_follows},
      {C::fails, C::fails, C::fails, C::holds, C::holds},
  }};
  return table;
}

int condition_value(const ConditionReport& r, std::size_t index) {
  switch (index) {
    case 0: return r.Lprime;
    case 1: return r.L;
    case 2: return r.s;
    case 3: return r.G;
    default: return r.Y == Tribool::unknown ? -1 : (r.Y == Tribool::yes ? 1 : 0);
  }
}

TableReport build_table(const std::vector<Observation>& observations) {
  TableReport t;
  t.observations = observations.size();
  const auto& known = known_implications();
  std::array<std::array<bool, 5>, 5> refuted{};
  for (const auto& o : observations)
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        if (refuted[i][j]) continue;
        if (condition_value(o.report, i) == 1 && condition_value(o.report, j) == 0) {
          refuted[i][j] = true;
          auto& w = t.cells[i][j].witness;
          w["instance"] = o.instance;
          w["module"] = o.module;
          w["prime"] = o.prime;
          w["row"] = kConditions[i];
          w["column"] = kConditions[j];
        }
      }

  CheckResult proven = make("table.proven_cells_unrefuted");
  CheckResult witnessed = make("table.failures_witnessed");
  CheckResult open = make("table.open_cells");
  std::size_t refuted_count = 0, missing = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      auto& cell = t.cells[i][j];
      const std::string label = std::string(kConditions[i]) + "=>" + kConditions[j];
      if (refuted[i][j]) {
        cell.status = CellStatus::refuted;
        ++refuted_count;
      } else if (known[i][j] == CellClaim::holds && !observations.empty()) {
        cell.status = CellStatus::always;
      } else {
        cell.status = CellStatus::open;
      }
      if (known[i][j] == CellClaim::holds && refuted[i][j]) {
        proven.witness[label] = cell.witness.at("instance") + " " + cell.witness.at("module") + "@" +
                                cell.witness.at("prime");
        fail(proven, "a proven implication was refuted");
      }
      if (known[i][j] == CellClaim::fails && !refuted[i][j]) {
        ++missing;
        witnessed.witness[label] = "no witness";
        fail(witnessed, "a failing implication has no witness in the corpus");
      }
      if (known[i][j] == CellClaim::unknown || known[i][j] == CellClaim::unknown_follows)
        open.witness[label] = to_string(cell.status);
    }
  if (observations.empty()) {
    for (auto* c : {&proven, &witnessed, &open}) {
      c->status = CheckStatus::skipped;
      c->notes = "empty corpus";
    }
  } else {
    if (proven.status == CheckStatus::pass) proven.notes = "no proven cell refuted";
    if (witnessed.status == CheckStatus::pass)
      witnessed.notes = std::to_string(refuted_count) + " refuted cells, every failing implication witnessed";
    else
      witnessed.notes += " (" + std::to_string(missing) + " missing)";
    open.notes = "undecided cells are reported, never asserted";
  }
  t.checks = {proven, witnessed, open};
  return t;
}

bool verify_witness(Analyzer& A, const ModulePresentation& M, const PrimeCandidate& p, std::size_t row,
                    std::size_t col) {
  const auto c = A.evaluate_conditions(M, p);
  return condition_value(c, row) == 1 && condition_value(c, col) == 0;
}

}  // namespace rfd
