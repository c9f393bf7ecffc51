#pragma once

// Instance files: a ring, named modules, named primes, extra ideals and
// options, in a line-oriented INI-like format.
//
//   [ring]
//   field = Q            # or: F 2
//   vars = x y z
//   order = grevlex      # or: lex
//   relations = x^2, x*y
//
//   [module M]
//   presentation = cyclic: x, y
//   # presentation = cokernel: rank=2; rows = [x, y], [0, x^2]
//
//   [prime p]
//   gens = x, y
//   height = 1           # optional; used outside monomial mode
//
//   [ideals]
//   I: x, y^2
//
//   [options]
//   max_homological_degree = 5
//   prime_mode = monomial   # or: listed
//   budget_reductions = 1000000
//
// The module R and, when the variables generate a proper ideal over J, the
// prime m are always present.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfd/invariants.hpp"

namespace rfd {

struct NamedModule {
  std::string name;
  std::string source;
  ModulePresentation module;
};

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};

struct InstanceOptions {
  std::optional<std::size_t> max_homological_degree;
  std::optional<PrimeMode> prime_mode;
  std::optional<std::size_t> budget_reductions;
};

struct InstanceSpec {
  std::string name;
  RingPtr ring;
  /// R first, then file order.
  std::vector<NamedModule> modules;
  PrimeSet primes;
  std::vector<NamedIdeal> ideals;
  InstanceOptions options;
  std::vector<std::string> warnings;

  const NamedModule* module(std::string_view name) const;
  /// Analyzer over the candidates and the ideal battery; `max_ext` overrides
  /// the file's max_homological_degree.
  Analyzer analyzer(std::optional<std::size_t> max_ext = std::nullopt) const;
  /// Budget for one unit of work, or the library default.
  Budget budget(std::string label) const;
};

/// Throws InputError with a "line N:" prefix on malformed or inconsistent
/// input; `name` becomes InstanceSpec::name.
InstanceSpec parse_instance(std::string_view text, std::string name);
InstanceSpec load_instance(const std::filesystem::path& path);

}  // namespace rfd
