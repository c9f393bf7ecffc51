#pragma once

#include <string>
#include <vector>

#include "rfd/homalg.hpp"
#include "rfd/quotient_ring.hpp"

namespace rfd::testing {

inline RingPtr qring(std::vector<std::string> vars, std::vector<std::string> rels = {},
                     MonomialOrder order = MonomialOrder::grevlex) {
  return make_ring(Field::rationals(), std::move(vars), std::move(rels), order);
}

inline Polynomial P(const RingPtr& R, const std::string& text) { return R->parse(text); }

inline std::vector<Polynomial> Ps(const RingPtr& R, const std::string& text) {
  return parse_polynomial_list(text, R->ambient());
}

inline Ideal ideal(const RingPtr& R, const std::string& gens) { return R->ideal(Ps(R, gens)); }

inline ModulePresentation cyclic(const RingPtr& R, const std::string& gens) {
  return ModulePresentation::cyclic(R, Ps(R, gens));
}

inline FreeElement vec(const RingPtr& R, const std::string& entries) { return FreeElement(Ps(R, entries)); }

}  // namespace rfd::testing

namespace rfd::testing {

/// dim_k M counted from standard monomials of the relation basis, or -1 when
/// standard monomials persist up to degree `bound` (infinite length).
inline long vector_dimension(const ModulePresentation& M, unsigned bound = 12) {
  const std::size_t n = M.ring()->nvars();
  std::vector<std::pair<std::size_t, Monomial>> leads;
  for (const auto& g : M.relation_basis())
    for (std::size_t i = 0; i < g.rank(); ++i)
      if (!g[i].is_zero()) {
        leads.emplace_back(i, g[i].leading_term().monomial);
        break;
      }
  long count = 0;
  bool top = false;
  std::vector<unsigned> e(n, 0);
  // Enumerate exponent vectors of total degree <= bound.
  auto visit = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v == n) {
      Monomial m{std::span<const unsigned>(e)};
      for (std::size_t pos = 0; pos < M.rank(); ++pos) {
        bool standard = true;
        for (const auto& [i, lm] : leads)
          if (i == pos && divides(lm, m)) {
            standard = false;
            break;
          }
        if (standard) {
          ++count;
          if (m.degree() == bound) top = true;
        }
      }
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  visit(visit, 0, bound);
  return top ? -1 : count;
}

}  // namespace rfd::testing
