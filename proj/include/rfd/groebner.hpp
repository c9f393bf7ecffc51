#pragma once

// Buchberger's algorithm for ideals of S and submodules of free S-modules,
// normal forms, ideal operations and Krull dimension.

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "rfd/extended_int.hpp"
#include "rfd/ring.hpp"

namespace rfd {

/// An element of the free module S^rank, stored densely by coordinate.
struct FreeElement {
  std::vector<Polynomial> coords;

  FreeElement() = default;
  explicit FreeElement(std::vector<Polynomial> c) : coords(std::move(c)) {}

  static FreeElement zero(const PolyRingPtr& ring, std::size_t rank);
  static FreeElement unit(const PolyRingPtr& ring, std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords[i]; }
  Polynomial& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const noexcept;

  FreeElement scaled(const Polynomial& f) const;
  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);

  std::string to_string() const;

  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.coords == b.coords; }
};

/// Accounting for Gröbner work. Installed per thread with BudgetScope; an
/// exhausted budget throws BudgetExceeded naming `label`.
struct Budget {
  std::string label = "computation";
  std::size_t max_reductions = 50'000'000;
  std::size_t max_pairs = 200'000;
  std::size_t reductions = 0;
};

class BudgetScope {
 public:
  explicit BudgetScope(Budget& b);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  Budget* previous_;
};

/// When enabled, every Gröbner basis computed on this thread is certified by
/// reducing all of its S-pairs to zero; a failure throws
/// InternalInconsistency. Returns the previous setting.
bool set_groebner_self_check(bool enabled);
std::size_t groebner_self_check_count();

/// Reduced Gröbner basis of an ideal of S, sorted by decreasing leading term.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const PolyRingPtr& ring);

/// Reduced Gröbner basis of a submodule of S^rank under position-over-term
/// order (lower position is larger), sorted by decreasing leading term.
std::vector<FreeElement> buchberger(std::span<const FreeElement> gens, const PolyRingPtr& ring, std::size_t rank);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
FreeElement normal_form(const FreeElement& f, std::span<const FreeElement> basis, const PolyRingPtr& ring);

/// True iff every S-pair of `basis` reduces to zero.
bool is_groebner_basis(std::span<const FreeElement> basis, const PolyRingPtr& ring, std::size_t rank);
bool is_groebner_basis(std::span<const Polynomial> basis, const PolyRingPtr& ring);

/// Generators of { c in S^t : sum_j c_j tagged_j lies in span(untagged) }.
/// Computed by a position-over-term elimination in S^(rank + t). Each
/// polynomial in `tag_ideal` is added to every tag coordinate, and output
/// entries are reduced modulo it (pass a Gröbner basis, or nothing).
std::vector<FreeElement> syzygies_modulo(std::span<const FreeElement> tagged, std::span<const FreeElement> untagged,
                                         const PolyRingPtr& ring, std::size_t rank,
                                         std::span<const Polynomial> tag_ideal = {});

class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr ring, std::vector<Polynomial> gens);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// Reduced Gröbner basis, computed once on first use.
  const std::vector<Polynomial>& groebner_basis() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return groebner_basis().empty(); }
  /// All reduced Gröbner basis elements are single terms.
  bool is_monomial() const;
  Polynomial reduce(const Polynomial& f) const;

  /// Canonical text of the reduced Gröbner basis.
  std::string key() const;
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.key() == b.key(); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };
  PolyRingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& I);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// I : J = { f : f J ⊆ I }.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// dim S/I from the leading-term ideal: the largest variable subset U with
/// LT(I) ∩ k[U] = 0; -inf for I = (1).
ExtendedInt krull_dimension(const Ideal& I);

}  // namespace rfd
