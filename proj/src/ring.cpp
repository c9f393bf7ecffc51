#include "rfd/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace rfd {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > std::numeric_limits<std::uint32_t>::max()) throw InputError("field characteristic too large");
  return Field(FieldKind::prime, p);
}

Coeff Field::normalize(const Coeff& c) const {
  if (kind_ == FieldKind::rationals) {
    Coeff r(c);
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw InputError("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Coeff(num);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::rationals) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= static_cast<unsigned long>(p_)) r -= static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::rationals) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::rationals) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == FieldKind::rationals) return -a;
  if (a == 0) return a;
  return Coeff(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (kind_ == FieldKind::rationals) return 1 / a;
  mpz_class r;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string Field::to_string() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "F " + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool divides(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.size() != b.size()) throw InputError("monomial length mismatch");
  const std::size_t n = a.size();
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Reverse-lex tie-break: the smaller exponent in the last differing
  // variable is the larger monomial.
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::lex ? "lex" : "grevlex"; }

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.size() > kMaxVariables) throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("invalid variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) throw InputError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j] == v) throw InputError("duplicate variable '" + v + "'");
  }
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() == g.ring()) return;
  if (!f.ring() || !g.ring() || !(*f.ring() == *g.ring())) throw InputError("polynomials belong to different rings");
}

// Merge `a + sign*b` for sorted term lists.
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, subtract ? k.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const PolyRing& r = *ring_;
  for (auto& t : terms) {
    if (t.monomial.size() != r.nvars()) throw InputError("monomial length does not match the ring");
    t.coeff = r.field().normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = r.field().add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Coeff& c) {
  Monomial one(ring->nvars());
  return term(std::move(ring), one, c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return term(std::move(ring), m, Coeff(1));
}

Polynomial Polynomial::term(PolyRingPtr ring, Monomial m, const Coeff& c) {
  std::vector<Term> t;
  t.push_back({std::move(m), c});
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.is_zero()) return *this;
  if (!ring_) ring_ = g.ring_;
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.is_zero()) return *this;
  if (!ring_) ring_ = g.ring_;
  require_same_ring(*this, g);
  terms_ = merge(*ring_, terms_, g.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring() ? f.ring() : g.ring());
  require_same_ring(f, g);
  Polynomial acc(f.ring());
  for (const auto& t : g.terms()) acc += f.shifted(t.monomial).scaled(t.coeff);
  return acc;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Coeff(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].monomial == g.terms_[i].monomial) || f.terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (t.monomial.is_one()) {
      out << c.get_str();
    } else {
      if (!unit) out << c.get_str() << '*';
      out << rfd::to_string(t.monomial, *ring_);
    }
  }
  return out.str();
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  require_same_ring(f, g);
  return op == ArithOp::add ? f + g : f * g;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expression();
    skip_ws();
    if (!at_end()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Position of the last token successfully read; reported for errors hit
  // at end of input.
  [[noreturn]] void fail_at_end(const std::string& what) { throw ParseError(what, last_token_); }

  Polynomial expression() {
    Polynomial acc(ring_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      last_token_ = pos_++;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      last_token_ = pos_++;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        last_token_ = pos_++;
        acc = acc * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        acc = acc * factor();
      } else if (c == '/') {
        throw ParseError("division is not supported", pos_);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      last_token_ = pos_++;
      skip_ws();
      if (at_end()) fail_at_end("missing exponent");
      std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("malformed exponent", pos_);
      unsigned long e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + unsigned(text_[pos_] - '0');
        if (e > 65535) throw ParseError("exponent too large", start);
        ++pos_;
      }
      last_token_ = start;
      if (e == 0) throw ParseError("malformed exponent (must be positive)", start);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (at_end()) fail_at_end("unexpected end of input");
    char c = peek();
    if (c == '(') {
      last_token_ = pos_++;
      Polynomial inner = expression();
      skip_ws();
      if (at_end()) fail_at_end("unbalanced '('");
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      last_token_ = pos_++;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '.') throw ParseError("floating-point literals are not supported", pos_);
      if (peek() == '/') throw ParseError("division is not supported", pos_);
      last_token_ = start;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Coeff(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      last_token_ = start;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '/') throw ParseError("division is not supported", pos_);
    if (c == ')') throw ParseError("unbalanced ')'", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
  std::size_t last_token_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) { return PolyParser(text, ring).parse(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr& ring) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (c != ',' || (depth != 0 && i < text.size())) continue;
    std::string_view item = text.substr(start, i - start);
    if (item.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty list item", start);
    try {
      out.push_back(parse_polynomial(item, ring));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      throw ParseError(msg.substr(0, msg.rfind(" at offset")), start + e.offset());
    }
    start = i + 1;
  }
  return out;
}

}  // namespace rfd
