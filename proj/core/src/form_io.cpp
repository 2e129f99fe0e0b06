#include "focal/form_io.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "focal/errors.hpp"

namespace focal {
namespace {

// Scalar part plus dx and dy coefficients. A parsed form has a zero scalar part.
struct Value {
  Polynomial s;
  Polynomial p;
  Polynomial q;

  explicit Value(const PrimeField& f) : s(f), p(f), q(f) {}
  bool differential() const { return !p.is_zero() || !q.is_zero(); }
};

class Parser {
 public:
  Parser(const PrimeField& field, std::string_view text) : field_(field), text_(text) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)) {
      ++pos_;
    }
  }

  // U+2212 MINUS SIGN is accepted as '-'.
  bool at_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') return true;
    return text_.substr(pos_, 3) == "\xE2\x88\x92";
  }
  void eat_minus() { pos_ += text_[pos_] == '-' ? 1 : 3; }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'x' || c == 'y' ||
           c == 'z' || c == 'd' || c == '(';
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (peek() == '+') {
        ++pos_;
        add(v, term(), false);
      } else if (at_minus()) {
        eat_minus();
        add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  static void add(Value& a, const Value& b, bool subtract) {
    if (subtract) {
      a.s -= b.s;
      a.p -= b.p;
      a.q -= b.q;
    } else {
      a.s += b.s;
      a.p += b.p;
      a.q += b.q;
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = multiply(v, factor());
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const Value d = factor();
        if (d.differential() || !d.s.is_constant() || d.s.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        const FieldElement inv = field_.inv(d.s.coeff(Monomial{}));
        v.s = v.s.scaled(inv);
        v.p = v.p.scaled(inv);
        v.q = v.q.scaled(inv);
      } else if (starts_primary()) {
        v = multiply(v, factor());
      } else {
        return v;
      }
    }
  }

  Value multiply(const Value& a, const Value& b) {
    if (a.differential() && b.differential()) fail("product of two differentials");
    Value r(field_);
    r.s = a.s * b.s;
    r.p = a.s * b.p + a.p * b.s;
    r.q = a.s * b.q + a.q * b.s;
    return r;
  }

  Value factor() {
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    if (at_minus()) {
      eat_minus();
      Value v = factor();
      v.s = -v.s;
      v.p = -v.p;
      v.q = -v.q;
      return v;
    }
    Value base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const std::uint64_t e = integer_literal(false);
      if (e > 64) {
        pos_ = at;
        fail("exponent too large");
      }
      if (base.differential()) fail("power of a differential");
      base.s = base.s.power(static_cast<int>(e));
    }
    return base;
  }

  // Reads decimal digits; with reduce the value is taken mod p.
  std::uint64_t integer_literal(bool reduce) {
    if (pos_ >= text_.size() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
      fail("expected an integer");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (reduce) {
        v = field_.add(field_.mul(field_.from_uint(v), field_.from_uint(10)),
                       field_.from_uint(digit))
                .value();
      } else {
        if (v > 1'000'000) fail("integer too large");
        v = v * 10 + digit;
      }
      ++pos_;
    }
    return v;
  }

  Value primary() {
    Value v(field_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      v.s = Polynomial::constant(field_, field_.from_uint(integer_literal(true)));
      return v;
    }
    if (c == '(') {
      ++pos_;
      v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      v.s = Polynomial::variable(field_, c == 'x' ? Var::X : c == 'y' ? Var::Y : Var::Z);
      return v;
    }
    if (c == 'd' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'y')) {
      const Polynomial one = Polynomial::constant(field_, field_.one());
      (text_[pos_ + 1] == 'x' ? v.p : v.q) = one;
      pos_ += 2;
      return v;
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  const PrimeField& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_term(std::string& out, const PrimeField& field, FieldElement c, Monomial m) {
  std::int64_t v = field.symmetric(c);
  const bool negative = v < 0;
  if (negative) v = -v;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (v != 1 || m.degree() == 0) out += std::to_string(v);
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  for (int i = 0; i < 3; ++i) {
    if (m.exp[i] == 0) continue;
    out += kNames[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
}

}  // namespace

DiffForm parse_form(const PrimeField& field, std::string_view text, ParseOptions options) {
  const Value v = Parser(field, text).parse();
  if (!v.s.is_zero()) throw ParseError("term without dx or dy", 0);
  Polynomial p = v.p;
  Polynomial q = v.q;
  int degree = std::max({p.degree(), q.degree(), 1});
  if (p.uses(Var::Z) || q.uses(Var::Z)) {
    const bool ok = p.is_homogeneous() && q.is_homogeneous() &&
                    (p.is_zero() || q.is_zero() || p.degree() == q.degree());
    if (!ok) throw ParseError("P and Q must be homogeneous of one degree when z is used", 0);
    p = p.specialize(Var::Z, field.one());
    q = q.specialize(Var::Z, field.one());
  }
  if (options.degree) {
    if (*options.degree < degree) {
      throw NormalizationError("form has degree " + std::to_string(degree) + ", more than " +
                               std::to_string(*options.degree));
    }
    degree = *options.degree;
  }
  DiffForm form = from_polynomials(p, q, degree);
  if (options.strict && !is_poincare(field, form)) {
    throw NormalizationError("linear part is not x dx + y dy");
  }
  return form;
}

Polynomial parse_polynomial(const PrimeField& field, std::string_view text) {
  const Value v = Parser(field, text).parse();
  if (v.differential()) throw ParseError("unexpected dx or dy in a polynomial", 0);
  return v.s;
}

std::string format_polynomial(const PrimeField& field, const Polynomial& poly) {
  std::vector<std::pair<Monomial, FieldElement>> terms(poly.terms().begin(), poly.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) append_term(out, field, c, m);
  return out.empty() ? "0" : out;
}

std::string format_form(const PrimeField& field, const DiffForm& form) {
  const auto [p, q] = to_polynomials(field, form);
  return "(" + format_polynomial(field, p) + ")dx + (" + format_polynomial(field, q) + ")dy";
}

}  // namespace focal
