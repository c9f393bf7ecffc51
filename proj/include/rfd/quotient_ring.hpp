#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rfd/groebner.hpp"
#include "rfd/ring.hpp"

namespace rfd {

/// R = S/J. Every computation on R happens on representatives in S, with J
/// carried along as extra relations.
class Ring {
 public:
  /// Throws InputError("zero ring") when 1 lies in J.
  Ring(PolyRingPtr ambient, std::vector<Polynomial> relations);

  const PolyRingPtr& ambient() const noexcept { return ambient_; }
  std::size_t nvars() const noexcept { return ambient_->nvars(); }
  const Ideal& relations() const noexcept { return relations_; }
  const std::vector<Polynomial>& relation_basis() const { return relations_.groebner_basis(); }

  Polynomial reduce(const Polynomial& f) const { return relations_.reduce(f); }
  FreeElement reduce(const FreeElement& f) const;

  /// The S-ideal I + J, i.e. the preimage of the R-ideal generated by `gens`.
  Ideal ideal(std::vector<Polynomial> gens) const;
  /// (x_1, ..., x_n) + J.
  Ideal maximal_ideal() const;

  /// J is generated by monomials.
  bool is_monomial() const { return relations_.is_monomial(); }
  /// J is generated by forms (standard grading).
  bool is_homogeneous() const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, ambient_); }
  Polynomial one() const { return Polynomial::constant(ambient_, Coeff(1)); }
  Polynomial zero() const { return Polynomial(ambient_); }

  std::string to_string() const;

 private:
  PolyRingPtr ambient_;
  Ideal relations_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field field, std::vector<std::string> vars, std::vector<std::string> relations = {},
                         MonomialOrder order = MonomialOrder::grevlex) {
  auto s = std::make_shared<const PolyRing>(field, std::move(vars), order);
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(r, s));
  return std::make_shared<const Ring>(s, std::move(rel));
}

}  // namespace rfd
