#pragma once

// Finitely presented R-modules: syzygies, free resolutions, Ext, annihilators
// and support tests.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rfd/groebner.hpp"
#include "rfd/quotient_ring.hpp"

namespace rfd {

/// A map of free R-modules R^cols -> R^rows, stored by columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::vector<FreeElement> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<FreeElement>& columns() const noexcept { return columns_; }
  const FreeElement& column(std::size_t j) const { return columns_[j]; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }

  std::string to_string() const;

 private:
  friend class ResolutionBuilder;
  std::size_t rows_ = 0;
  std::vector<FreeElement> columns_;
};

/// M = coker(A : R^m -> R^rank), A given by its columns (the relations).
/// Relations are stored as S-representatives; J·e_i is appended internally.
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(RingPtr ring, std::size_t rank, std::vector<FreeElement> relations);

  static ModulePresentation free(RingPtr ring, std::size_t rank);
  /// R/(gens).
  static ModulePresentation cyclic(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeElement>& relations() const noexcept { return relations_; }

  /// Relations together with g·e_i for every g in the basis of J.
  std::vector<FreeElement> lifted_relations() const;
  /// Reduced Gröbner basis of the lifted relations (cached).
  const std::vector<FreeElement>& relation_basis() const;

  /// Every relation column consists of terms and admits a consistent Z^n
  /// grading of the generators.
  bool is_multigraded() const;

  /// Canonical text used as a cache key.
  std::string key() const;
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<FreeElement> basis;
  };
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeElement> relations_;
  std::shared_ptr<Cache> cache_;
};

/// F_0 <- F_1 <- F_2 <- ... ; maps[k] is d_{k+1} : F_{k+1} -> F_k.
struct Resolution {
  RingPtr ring;
  std::size_t rank0 = 0;
  std::vector<Matrix> maps;
  /// Some syzygy module inside the computed window is zero.
  bool terminated = false;

  /// rank of F_k; zero beyond the end of a terminated resolution.
  std::size_t rank(std::size_t k) const;
  std::size_t length() const noexcept { return maps.size(); }
};

/// Smaller presentation of the same module: zero relations dropped and unit
/// pivots eliminated.
ModulePresentation minimize(const ModulePresentation& M);

/// syz^1 M, the kernel of the free cover of the minimized presentation.
ModulePresentation syzygy(const ModulePresentation& M);
ModulePresentation syzygy(const ModulePresentation& M, unsigned n);

/// Resolution with maps d_1 .. d_{max_length+1} (fewer when it terminates).
Resolution free_resolution(const ModulePresentation& M, std::size_t max_length);
/// Extends `res` in place until it has `maps` maps or terminates.
void extend_resolution(Resolution& res, std::size_t maps);

struct ResolutionCheck {
  bool complex = true;
  bool exact = true;
};
/// d_k ∘ d_{k+1} = 0 over R, and ker d_k ⊆ im d_{k+1} by module membership.
ResolutionCheck verify_resolution(const Resolution& res);

/// Ext^i_R(N, M) as a presented module.
ModulePresentation ext(std::size_t i, const ModulePresentation& N, const ModulePresentation& M);
/// Same, from a resolution of N with at least i+1 maps (or terminated).
ModulePresentation ext(std::size_t i, const Resolution& resN, const ModulePresentation& M);

/// (Im K + Im B) / Im B for K, B in S^rank (B should contain J·basis).
ModulePresentation subquotient(const RingPtr& ring, std::size_t rank, const std::vector<FreeElement>& gens,
                               const std::vector<FreeElement>& rels);

/// ker(phi : M -> N) where images[j] is a representative of phi(e_j).
ModulePresentation kernel_of_map(const ModulePresentation& source, const ModulePresentation& target,
                                 const std::vector<FreeElement>& images);

/// Ann_R(M) as an S-ideal containing J.
Ideal annihilator(const ModulePresentation& M);
bool is_zero(const ModulePresentation& M);
/// M / IM.
ModulePresentation quotient_by_ideal(const ModulePresentation& M, const Ideal& I);
/// (0 :_M I).
ModulePresentation annihilated_submodule(const ModulePresentation& M, const Ideal& I);
ModulePresentation direct_sum(const ModulePresentation& M, const ModulePresentation& N);
/// M_p != 0, i.e. Ann(M) ⊆ p. `p` is an S-ideal containing J.
bool support_contains(const ModulePresentation& M, const Ideal& p);
/// r·e_i lies in the relation span for every generator.
bool annihilates(const ModulePresentation& M, const Polynomial& r);

}  // namespace rfd
