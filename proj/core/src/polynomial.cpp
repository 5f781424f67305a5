#include "ngit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ngit {

namespace {

const MonomialOrder& grevlex_order() {
  static const MonomialOrder ord = MonomialOrder::grevlex();
  return ord;
}

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("Polynomial: ring mismatch") {}
};

}  // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial::unit(p.arity()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw std::invalid_argument("Polynomial: variable index out of range");
  Polynomial p = zero(std::move(ring));
  p.terms_.push_back({Monomial::variable(p.arity(), i), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
  if (m.arity() != ring->size()) throw std::invalid_argument("Polynomial: monomial arity mismatch");
  Polynomial p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p = zero(std::move(ring));
  for (const Term& t : terms)
    if (t.mono.arity() != p.arity())
      throw std::invalid_argument("Polynomial: monomial arity mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return grevlex_order().greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
  return terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
  return terms_[0];
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
  const Term* best = &terms_[0];
  for (const Term& t : terms_)
    if (ord.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    int c = grevlex_order().compare(t.mono, m);
    if (c == 0) return t.coeff;
    if (c < 0) break;
  }
  return Rational(0);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::weighted_degree(std::span<const std::uint64_t> weights) const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.weighted_degree(weights));
  return d;
}

bool Polynomial::is_homogeneous(std::span<const std::uint64_t> weights) const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_[0].mono.weighted_degree(weights);
  for (const Term& t : terms_)
    if (t.mono.weighted_degree(weights) != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merges two descending-sorted term lists, scaling the second by c.
std::vector<Term> merge_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               const Rational& c) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const MonomialOrder& ord = MonomialOrder::grevlex();
  while (i < a.size() && j < b.size()) {
    int cmp = ord.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Rational v = b[j].coeff * c;
      if (!v.is_zero()) out.push_back({b[j].mono, std::move(v)});
      ++j;
    } else {
      Rational v = a[i].coeff + b[j].coeff * c;
      if (!v.is_zero()) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Rational v = b[j].coeff * c;
    if (!v.is_zero()) out.push_back({b[j].mono, std::move(v)});
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge_scaled(terms_, o.terms_, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge_scaled(terms_, o.terms_, Rational(-1));
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial r = Polynomial::zero(a.ring());
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_)
    for (const Term& tb : b.terms_) products.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return Polynomial::from_terms(a.ring(), std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial p = zero(ring_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != arity())
    throw std::invalid_argument("Polynomial: substitution image count mismatch");
  for (const Polynomial& img : images)
    if (!same_ring(img.ring(), target)) throw RingMismatch();
  Polynomial acc = Polynomial::zero(target);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < arity(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e > 0) prod *= images[i].pow(e);
    }
    acc += prod;
  }
  return acc;
}

Polynomial Polynomial::map_ring(const RingPtr& target, const std::vector<int>& var_map) const {
  if (var_map.size() != arity())
    throw std::invalid_argument("Polynomial: variable map size mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> exps(target->size(), 0);
    for (std::size_t i = 0; i < arity(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (var_map[i] < 0)
        throw std::invalid_argument("Polynomial: variable '" + ring_->name(i) +
                                    "' must not occur");
      exps.at(static_cast<std::size_t>(var_map[i])) += e;
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

std::pair<Rational, Polynomial> Polynomial::primitive_decomposition() const {
  if (terms_.empty()) return {Rational(0), *this};
  Integer den(1);
  for (const Term& t : terms_) den = lcm(den, t.coeff.denominator());
  Integer num(0);
  for (const Term& t : terms_) num = gcd(num, t.coeff.numerator() * (den / t.coeff.denominator()));
  Rational content{num, den};
  if (terms_[0].coeff.sign() < 0) content = -content;
  Polynomial prim = *this * content.inverse();
  return {std::move(content), std::move(prim)};
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (terms_.empty()) return *this;
  return *this * leading_term(ord).coeff.inverse();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    bool unit_mono = t.mono.is_unit();
    if (!c.is_one() || unit_mono) {
      os << c.str();
      if (!unit_mono) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& ord = grevlex_order();
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ord.compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) return std::nullopt;
  Polynomial r = f;
  Polynomial q = Polynomial::zero(f.ring());
  const Term& gl = g.leading_term();
  while (!r.is_zero()) {
    const Term& rl = r.leading_term();
    if (!gl.mono.divides(rl.mono)) return std::nullopt;
    Polynomial t = Polynomial::term(f.ring(), rl.mono.quotient(gl.mono), rl.coeff / gl.coeff);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      Polynomial rhs = term();
      acc = (c == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  // A sign binds looser than '^': "-x^2" is -(x^2), while "(-x)^2" squares.
  Polynomial factor() {
    skip_space();
    char c = peek();
    if (c == '+' || c == '-') {
      advance();
      Polynomial p = factor();
      return c == '-' ? -p : p;
    }
    Polynomial base = atom();
    skip_space();
    if (peek() == '^') {
      advance();
      base = base.pow(exponent_literal());
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      advance();
      Polynomial p = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return p;
    }
    if (is_digit(c)) return Polynomial::constant(ring_, rational_literal());
    if (is_name_start(c)) {
      std::string name = name_literal();
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  Rational rational_literal() {
    std::string digits = digit_run();
    std::size_t mark = pos_;
    skip_space();
    if (peek() == '/') {
      advance();
      skip_space();
      if (!is_digit(peek())) fail("expected denominator digits after '/'");
      return Rational::from_string(digits + "/" + digit_run());
    }
    pos_ = mark;
    return Rational::from_string(digits);
  }

  std::uint32_t exponent_literal() {
    skip_space();
    if (!is_digit(peek())) fail("expected exponent digits after '^'");
    std::string digits = digit_run();
    unsigned long long value = 0;
    for (char d : digits) {
      value = value * 10 + static_cast<unsigned long long>(d - '0');
      if (value > 0xffffffffULL) fail("exponent out of range");
    }
    return static_cast<std::uint32_t>(value);
  }

  std::string digit_run() {
    std::size_t start = pos_;
    while (is_digit(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

  std::string name_literal() {
    std::size_t start = pos_;
    advance();
    while (is_name_char(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_name_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '\''; }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " +
                                std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  RingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  if (!ring) throw std::invalid_argument("parse_polynomial: null ring");
  return ExprParser(ring, text).run();
}

}  // namespace ngit
