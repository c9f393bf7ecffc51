#pragma once

// Exact coefficient fields, monomials, monomial orders and polynomials over
// an ambient polynomial ring S = k[x_1..x_n].

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rfd/errors.hpp"

namespace rfd {

using Coeff = mpq_class;

enum class FieldKind { rationals, prime };

/// Coefficient field: Q with gcd-normalized rationals, or F_p with
/// representatives in [0, p).
class Field {
 public:
  static Field rationals() { return Field(FieldKind::rationals, 0); }
  static Field prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Coeff normalize(const Coeff& c) const;
  Coeff from_integer(long v) const { return normalize(Coeff(v)); }
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of fixed capacity; `size()` is the variable count of the
/// ring it was built for.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::vector<unsigned> exponents() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

bool divides(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b) noexcept;

enum class MonomialOrder { grevlex, lex };

/// Total, multiplicative order with 1 as minimum. Throws InputError on a
/// length mismatch.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

std::string to_string(MonomialOrder order);

/// The ambient ring S: field, ordered variable names, monomial order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex);

  const Field& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order_);
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial monomial;
  Coeff coeff;
};

/// Sparse polynomial; terms are sorted strictly decreasing under the ring's
/// order and no stored coefficient is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts, merges and drops zeros.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const Coeff& c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial term(PolyRingPtr ring, Monomial m, const Coeff& c);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Exactly one term.
  bool is_term() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;
  const Term& leading_term() const { return terms_.front(); }
  unsigned total_degree() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scaled(const Coeff& c) const;
  Polynomial shifted(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, mul };

/// Exact ring arithmetic on two polynomials; InputError on ring mismatch.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// Grammar: signed integer coefficients, variable names, `*` (optional before
/// a variable), `^` with positive integer exponents, `+`, `-`, parentheses.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

/// Comma-separated list of polynomials; an empty or blank string yields an
/// empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr& ring);

std::string to_string(const Monomial& m, const PolyRing& ring);

}  // namespace rfd
