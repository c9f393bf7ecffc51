#pragma once

// Grade, depth and dimension at primes, the restricted flat dimensions
// Rfd, rfd, Rfd' and xi, and the evaluation of conditions (L)', (L), (s),
// (G), (Y) at a prime.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rfd/extended_int.hpp"
#include "rfd/homalg.hpp"

namespace rfd {

struct PrimeCandidate {
  std::string name;
  /// Generators together with J.
  Ideal ideal;
  /// Generators as given (without J).
  std::vector<Polynomial> gens;
  /// All generators are single variables; `variables` is then their bitmask.
  bool monomial = false;
  std::uint32_t variables = 0;
  /// User-asserted height, used for dim R_p outside monomial mode.
  std::optional<long> height;

  std::string to_string() const;
};

/// The prime generated by the variables in `mask`, plus J.
PrimeCandidate monomial_prime(const RingPtr& ring, std::uint32_t mask, std::string name = {});
/// A user prime. Marked monomial when every generator is a variable.
PrimeCandidate listed_prime(const RingPtr& ring, std::string name, std::vector<Polynomial> gens,
                            std::optional<long> height = std::nullopt);

enum class PrimeMode { monomial, listed };

std::string to_string(PrimeMode mode);

/// Finite stand-in for Spec R.
struct PrimeSet {
  PrimeMode mode = PrimeMode::monomial;
  std::vector<PrimeCandidate> candidates;

  /// Index of the candidate generated by all variables, if present.
  std::optional<std::size_t> maximal;

  const PrimeCandidate* find(const std::string& name) const;
  bool exhaustive() const noexcept { return mode == PrimeMode::monomial; }
};

/// Monomial mode: every variable subset whose ideal contains J (J must be
/// monomial, else InputError). Listed mode: `extra` plus m = (all variables)
/// when m contains J. Candidates with equal ideals are merged, first name wins.
PrimeSet candidate_primes(const RingPtr& ring, PrimeMode mode, std::vector<PrimeCandidate> extra = {});

/// Candidate q lies in U(p), i.e. q ⊆ p.
bool contained_in(const PrimeCandidate& q, const PrimeCandidate& p);

/// Minimal primes of R. Only available in monomial mode (InputError otherwise).
std::vector<PrimeCandidate> min_primes(const PrimeSet& primes);

/// Candidate ideals, their pairwise sums and products and `extras`, each
/// with J added; deduplicated and without the unit ideal.
std::vector<Ideal> ideal_battery(const RingPtr& ring, const PrimeSet& primes, const std::vector<Ideal>& extras = {});

enum class Tribool { no, yes, unknown };
std::string to_string(Tribool t);

struct ConditionReport {
  std::string prime;
  bool Lprime = false;
  bool L = false;
  bool s = false;
  bool G = false;
  Tribool Y = Tribool::unknown;
  std::string justification;
  ExtendedInt Rfdprime, Rfd, rfd, xi;
};

struct AnalyzerOptions {
  /// Ext scans stop here; 0 means n + 2.
  std::size_t max_homological_degree = 0;
  /// Window for the finite projective dimension test.
  std::size_t resolution_window = 0;
};

/// Computes invariants of modules over one ring, caching resolutions of R/I
/// and annihilators of Ext^i(R/I, M). Not thread-safe: use one Analyzer per
/// thread.
class Analyzer {
 public:
  Analyzer(RingPtr ring, PrimeSet primes, std::vector<Ideal> battery, AnalyzerOptions options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeSet& primes() const noexcept { return primes_; }
  const std::vector<Ideal>& battery() const noexcept { return battery_; }
  const ModulePresentation& ring_module() const noexcept { return R_; }
  std::size_t max_homological_degree() const noexcept { return cap_; }

  /// +inf iff M = IM; else least i with Ext^i(R/I, M) != 0.
  ExtendedInt grade(const Ideal& I, const ModulePresentation& M);
  /// grade(IR_p, M_p).
  ExtendedInt grade_at_prime(const Ideal& I, const ModulePresentation& M, const PrimeCandidate& p);
  /// depth M_p = grade(pR_p, M_p); +inf iff M_p = 0.
  ExtendedInt depth_at_prime(const ModulePresentation& M, const PrimeCandidate& p);
  /// dim R_p; nullopt when not determinable.
  std::optional<ExtendedInt> dim_at_prime(const PrimeCandidate& p);
  std::optional<ExtendedInt> cmd_at_prime(const PrimeCandidate& p);

  /// Candidates q with q ⊆ p.
  std::vector<const PrimeCandidate*> generalizations(const PrimeCandidate& p) const;

  ExtendedInt Rfd_at_prime(const ModulePresentation& M, const PrimeCandidate& p);
  /// max of the prime form and the ideal-battery form.
  ExtendedInt rfd_at_prime(const ModulePresentation& M, const PrimeCandidate& p);
  ExtendedInt rfd_at_prime_over_primes(const ModulePresentation& M, const PrimeCandidate& p);
  ExtendedInt rfd_at_prime_over_battery(const ModulePresentation& M, const PrimeCandidate& p);
  ExtendedInt Rfdprime_at_prime(const ModulePresentation& M, const PrimeCandidate& p);
  ExtendedInt xi(const ModulePresentation& M, const PrimeCandidate& p);
  /// sup_{q ⊆ p} grade(q, R) - depth M_q.
  ExtendedInt xi_dual(const ModulePresentation& M, const PrimeCandidate& p);

  ExtendedInt Rfd(const ModulePresentation& M);
  ExtendedInt rfd(const ModulePresentation& M);
  ExtendedInt rfd_over_primes(const ModulePresentation& M);
  ExtendedInt rfd_over_battery(const ModulePresentation& M);
  ExtendedInt Rfdprime(const ModulePresentation& M);
  /// sup_q grade(q, R) - depth M_q.
  ExtendedInt rfd_dual(const ModulePresentation& M);

  /// depth M_p = 0.
  bool is_associated(const ModulePresentation& M, const PrimeCandidate& p);
  /// p ∈ Min R; nullopt when undecidable (listed mode without height).
  std::optional<bool> is_minimal(const PrimeCandidate& p);

  /// J and every candidate are homogeneous and m is a candidate. Such an
  /// instance stands for the local ring R_m.
  bool graded_local() const;
  const PrimeCandidate* maximal() const;

  /// M has a finite free resolution inside the resolution window.
  bool finite_projective_dimension(const ModulePresentation& M);

  ConditionReport evaluate_conditions(const ModulePresentation& M, const PrimeCandidate& p);

 private:
  struct ExtProfile {
    std::shared_ptr<Resolution> resolution;
    ModulePresentation module;
    std::vector<Ideal> annihilators;
  };

  std::shared_ptr<Resolution> resolution_of(const Ideal& I);
  ExtProfile& profile(const Ideal& I, const ModulePresentation& M);
  const Ideal& ext_annihilator(const Ideal& I, const ModulePresentation& M, std::size_t i);
  const Ideal& top_annihilator(const Ideal& I, const ModulePresentation& M);
  [[noreturn]] void scan_exhausted(const Ideal& I, const ModulePresentation& M) const;

  RingPtr ring_;
  PrimeSet primes_;
  std::vector<Ideal> battery_;
  ModulePresentation R_;
  std::size_t cap_;
  std::size_t window_;
  std::map<std::string, std::shared_ptr<Resolution>> resolutions_;
  std::map<std::string, ExtProfile> profiles_;
  std::map<std::string, Ideal> tops_;
  std::map<std::string, bool> finite_pd_;
};

}  // namespace rfd
