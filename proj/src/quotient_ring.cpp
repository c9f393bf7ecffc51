#include "rfd/quotient_ring.hpp"

namespace rfd {

Ring::Ring(PolyRingPtr ambient, std::vector<Polynomial> relations)
    : ambient_(std::move(ambient)), relations_(ambient_, std::move(relations)) {
  if (relations_.is_unit()) throw InputError("relations generate the unit ideal (zero ring)");
}

FreeElement Ring::reduce(const FreeElement& f) const {
  FreeElement r;
  r.coords.reserve(f.rank());
  for (const auto& c : f.coords) r.coords.push_back(reduce(c));
  return r;
}

Ideal Ring::ideal(std::vector<Polynomial> gens) const {
  for (const auto& g : relations_.generators()) gens.push_back(g);
  return Ideal(ambient_, std::move(gens));
}

Ideal Ring::maximal_ideal() const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars(); ++i) gens.push_back(Polynomial::variable(ambient_, i));
  return ideal(std::move(gens));
}

bool Ring::is_homogeneous() const {
  for (const auto& g : relation_basis())
    if (!g.is_homogeneous()) return false;
  return true;
}

std::string Ring::to_string() const {
  std::string out = ambient_->field().to_string() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) out += ",";
    out += ambient_->variables()[i];
  }
  out += "]";
  if (!relations_.generators().empty()) out += "/" + relations_.to_string();
  return out;
}

}  // namespace rfd
