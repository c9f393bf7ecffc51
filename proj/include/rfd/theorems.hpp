#pragma once

// Mechanical checks of the statements relating grade, depth and the
// restricted flat dimensions, and the implication table among the five
// conditions.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rfd/invariants.hpp"

namespace rfd {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  /// Instance data backing the verdict: module, prime, ideal, numbers.
  std::map<std::string, std::string> witness;
  std::string notes;
};

/// rfd over candidate primes against the battery maximum of
/// grade(I,R) - grade(I,M), globally and at every candidate.
CheckResult check_rfd_via_ideals(Analyzer& A, const std::string& name, const ModulePresentation& M);

/// With s = rfd M: grade(I, syz^s M) >= grade(I, R), and the one-step bound
/// grade(I, syz^1 M) >= min(grade(I,R), grade(I,M) + 1), over the battery.
CheckResult check_syzygy_grade_lift(Analyzer& A, const std::string& name, const ModulePresentation& M);

/// One result per statement about (L)', (L), (s), (G), (Y) at p.
std::vector<CheckResult> check_five_conditions(Analyzer& A, const std::string& name, const ModulePresentation& M,
                                            const PrimeCandidate& p);

/// rfd and xi against their depth forms sup grade(q,R) - depth M_q.
CheckResult check_dual_formulas(Analyzer& A, const std::string& name, const ModulePresentation& M);

/// The depth-zero family: needs a graded-local instance with depth R_m = 0
/// and dim R_m >= 2, otherwise SKIPPED.
CheckResult check_depth_zero_family(Analyzer& A);

/// r = Rfd_{R_p} M_p. For r = -inf produces s outside p with sM = 0; for
/// r >= 0 checks the grade bounds along syz^1 .. syz^r M.
CheckResult check_annihilator_bounds(Analyzer& A, const std::string& name, const ModulePresentation& M,
                                  const PrimeCandidate& p);

inline constexpr std::array<const char*, 5> kConditions{"L'", "L", "s", "G", "Y"};

enum class CellStatus { always, refuted, open };
std::string to_string(CellStatus s);

/// What is known about "row implies column".
enum class CellClaim { holds, fails, unknown, unknown_follows };

/// The known relations among the five conditions; [row][col].
const std::array<std::array<CellClaim, 5>, 5>& known_implications();

/// One evaluated (instance, module, prime).
struct Observation {
  std::string instance;
  std::string module;
  std::string prime;
  ConditionReport report;
};

struct TableCell {
  CellStatus status = CellStatus::open;
  std::map<std::string, std::string> witness;
};

struct TableReport {
  std::array<std::array<TableCell, 5>, 5> cells;
  std::size_t observations = 0;
  std::vector<CheckResult> checks;
};

/// Value of a condition in a report: 1 true, 0 false, -1 undecided.
int condition_value(const ConditionReport& r, std::size_t index);

/// Folds observations in the given order; the first refuting observation of
/// a cell is its witness.
TableReport build_table(const std::vector<Observation>& observations);

/// Recomputes the conditions and confirms that row holds and column fails.
bool verify_witness(Analyzer& A, const ModulePresentation& M, const PrimeCandidate& p, std::size_t row,
                    std::size_t col);

}  // namespace rfd
