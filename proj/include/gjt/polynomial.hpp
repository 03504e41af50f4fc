#pragma once

// Sparse multivariate polynomials over exact rationals, the differentiation
// action of the operator ring on dual forms, and the text grammar used to
// enter generators and linear forms.

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gjt {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial; length equals the variable count.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Which side of the apolarity pairing a polynomial lives on.  Lowercase
/// variables (x1, x2, ...) are differential operators; uppercase (X1, X2, ...)
/// are the dual forms they act on.
enum class Ring { Operator, Dual };

/// Graded lexicographic order, x1 > x2 > ... > xn, larger monomials first.
/// Fixed once; matrix row/column indexing and canonical printing all use it.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + message),
        position(position) {}
  std::size_t position;
};

/// All C(n+j-1, j) exponent vectors of total degree j in n variables, in
/// graded lexicographic order with x1 > x2 > ... > xn.  Deterministic.
inline std::vector<Exponents> monomial_basis(int num_vars, int degree) {
  if (num_vars < 1) throw std::invalid_argument("monomial_basis: need at least one variable");
  if (degree < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(num_vars), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == num_vars - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  explicit Polynomial(int num_vars, Ring ring = Ring::Dual)
      : num_vars_(num_vars), ring_(ring) {
    if (num_vars < 1) throw std::invalid_argument("polynomial: need at least one variable");
  }

  static Polynomial monomial(Exponents e, Rational coeff, Ring ring) {
    Polynomial p(static_cast<int>(e.size()), ring);
    p.add_term(std::move(e), std::move(coeff));
    return p;
  }

  static Polynomial constant(int num_vars, Rational value, Ring ring = Ring::Dual) {
    Polynomial p(num_vars, ring);
    p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), std::move(value));
    return p;
  }

  int num_vars() const { return num_vars_; }
  Ring ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// A polynomial with no variables is compatible with either ring.
  bool variable_free() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Merge a term in; zero results are dropped so no stored coefficient is 0.
  void add_term(Exponents e, Rational coeff) {
    if (static_cast<int>(e.size()) != num_vars_)
      throw std::invalid_argument("polynomial: exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_shape(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_same_shape(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_shape(b);
    if (!a.variable_free() && !b.variable_free() && a.ring_ != b.ring_)
      throw std::invalid_argument("polynomial: cannot multiply across rings");
    Polynomial out(a.num_vars_, a.variable_free() ? b.ring_ : a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  Polynomial pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("polynomial: negative power");
    Polynomial out = constant(num_vars_, 1, ring_);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  /// Mathematical equality; the ring tag is presentation metadata.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical form: terms in graded-lex descending order, explicit `^`
  /// and `*`, indexed variable names.  parse(to_string()) round-trips.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      Rational mag = abs(c);
      if (total_degree(e) == 0) {
        os << mag.get_str();
      } else {
        bool need_star = false;
        if (mag != 1) {
          os << mag.get_str();
          need_star = true;
        }
        for (int i = 0; i < num_vars_; ++i) {
          if (e[i] == 0) continue;
          if (need_star) os << '*';
          os << (ring_ == Ring::Operator ? 'x' : 'X') << (i + 1);
          if (e[i] > 1) os << '^' << e[i];
          need_star = true;
        }
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
  }

 private:
  void require_same_shape(const Polynomial& other) const {
    if (num_vars_ != other.num_vars_)
      throw std::invalid_argument("polynomial: variable count mismatch");
  }

  int num_vars_;
  Ring ring_;
  TermMap terms_;
};

/// A linear operator form, ell = c1*x1 + ... + cn*xn.  The zero form is
/// representable; a non-zero form has degree exactly one.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("linear form: no variables");
  }

  static LinearForm zero(int num_vars) {
    return LinearForm(std::vector<Rational>(static_cast<std::size_t>(num_vars), Rational(0)));
  }

  int num_vars() const { return static_cast<int>(coeffs_.size()); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial to_polynomial() const {
    Polynomial p(num_vars(), Ring::Operator);
    for (int i = 0; i < num_vars(); ++i) {
      if (coeffs_[i] == 0) continue;
      Exponents e(coeffs_.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), coeffs_[i]);
    }
    return p;
  }

  std::string to_string() const { return to_polynomial().to_string(); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// op acts on target by differentiation: each monomial x^a is the iterated
/// partial derivative d^|a|/dX^a, extended bilinearly.  Requires an operator
/// on the left and a dual form on the right (variable-free polynomials are
/// compatible with both sides).
inline Polynomial apply_operator(const Polynomial& op, const Polynomial& target) {
  if (op.num_vars() != target.num_vars())
    throw std::invalid_argument("apply_operator: variable count mismatch");
  if (op.ring() != Ring::Operator && !op.variable_free())
    throw std::invalid_argument("apply_operator: left argument is not an operator-ring polynomial");
  if (target.ring() != Ring::Dual && !target.variable_free())
    throw std::invalid_argument("apply_operator: right argument is not a dual-ring polynomial");

  const int n = target.num_vars();
  Polynomial out(n, Ring::Dual);
  for (const auto& [a, ca] : op.terms()) {
    for (const auto& [b, cb] : target.terms()) {
      bool divides = true;
      for (int i = 0; i < n; ++i) {
        if (b[i] < a[i]) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      // d^a X^b = (prod_i b_i!/(b_i-a_i)!) X^(b-a)
      Integer scale = 1;
      Exponents e(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        e[i] = b[i] - a[i];
        for (int k = b[i]; k > b[i] - a[i]; --k) scale *= k;
      }
      out.add_term(std::move(e), ca * cb * Rational(scale));
    }
  }
  return out;
}

/// ell^k applied to f; ell^0 is the identity.  Vanishes whenever k exceeds
/// deg(f), so large k short-circuits to zero.
inline Polynomial linear_power_derivative(const LinearForm& ell, int k, const Polynomial& f) {
  if (k < 0) throw std::invalid_argument("linear_power_derivative: negative power");
  if (k > f.degree() + 1) return Polynomial(f.num_vars(), Ring::Dual);
  Polynomial out = f;
  const Polynomial op = ell.to_polynomial();
  for (int i = 0; i < k && !out.is_zero(); ++i) out = apply_operator(op, out);
  return out;
}

namespace detail {

/// Recursive-descent parser for the term grammar.  Terms are joined by + or
/// -; a term is an optional rational coefficient (p or p/q) followed by
/// *-joined variable powers v^e.  Variables are x1..xn (operators) or
/// X1..Xn (dual forms); x,y,z / X,Y,Z are aliases when n = 3.  Case and
/// naming style must be consistent across the whole input.
class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, int num_vars)
      : text_(text), num_vars_(num_vars) {}

  Polynomial parse() {
    enum class Style { Unknown, Indexed, Alias };
    Style style = Style::Unknown;
    bool saw_lower = false, saw_upper = false;

    // Terms accumulate here; the ring tag is settled once a variable is seen.
    std::vector<std::pair<Exponents, Rational>> terms;

    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = (peek() == '-');
      ++pos_;
    }
    while (true) {
      skip_ws();
      Rational coeff = negative ? Rational(-1) : Rational(1);
      Exponents exps(static_cast<std::size_t>(num_vars_), 0);
      bool saw_factor = false;

      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_rational();
        saw_factor = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
        } else if (!at_end() && is_name_char(peek())) {
          throw ParseError("expected '*' between coefficient and variable", pos_);
        }
      }

      while (!at_end() && is_name_char(peek())) {
        const std::size_t var_pos = pos_;
        auto [index, upper, indexed] = parse_variable();
        if (upper) saw_upper = true; else saw_lower = true;
        if (saw_upper && saw_lower)
          throw ParseError("mixed-case variables", var_pos);
        const Style s = indexed ? Style::Indexed : Style::Alias;
        if (style == Style::Unknown) style = s;
        else if (style != s)
          throw ParseError("mixed indexed and alias variable names", var_pos);

        int exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          exponent = parse_int("exponent");
        }
        exps[static_cast<std::size_t>(index)] += exponent;
        saw_factor = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (at_end() || !is_name_char(peek()))
            throw ParseError("expected variable after '*'", pos_);
        } else {
          break;
        }
      }

      if (!saw_factor) throw ParseError("expected a term", pos_);
      terms.emplace_back(std::move(exps), std::move(coeff));

      skip_ws();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = (peek() == '-');
        ++pos_;
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
    }

    Polynomial out(num_vars_, saw_lower ? Ring::Operator : Ring::Dual);
    for (auto& [e, c] : terms) out.add_term(std::move(e), std::move(c));
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool is_name_char(char c) {
    return std::isalpha(static_cast<unsigned char>(c));
  }

  int parse_int(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    try {
      return std::stoi(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ParseError(std::string(what) + " out of range", start);
    }
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer num(text_.substr(start, pos_ - start));
    Integer den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator", pos_);
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      den = Integer(text_.substr(dstart, pos_ - dstart));
      if (den == 0) throw ParseError("zero denominator", dstart);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  /// Returns (zero-based variable index, is_uppercase, is_indexed).
  std::tuple<int, bool, bool> parse_variable() {
    const std::size_t start = pos_;
    const char head = peek();
    ++pos_;
    const bool upper = std::isupper(static_cast<unsigned char>(head));
    const char base = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (base != 'x')
        throw ParseError(std::string("unknown variable '") + head + "'", start);
      const int index = parse_int("variable index");
      if (index < 1 || index > num_vars_)
        throw ParseError("variable index " + std::to_string(index) +
                             " out of range for " + std::to_string(num_vars_) +
                             " variables",
                         start);
      return {index - 1, upper, true};
    }
    if (base == 'x' || base == 'y' || base == 'z') {
      if (num_vars_ != 3)
        throw ParseError(std::string("alias variable '") + head +
                             "' requires exactly three variables",
                         start);
      return {base - 'x', upper, false};
    }
    throw ParseError(std::string("unknown variable '") + head + "'", start);
  }

  const std::string& text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a polynomial in the text grammar; like terms are merged and zero
/// terms dropped, so the result is canonical.
inline Polynomial parse_polynomial(const std::string& text, int num_vars) {
  return detail::PolynomialParser(text, num_vars).parse();
}

/// Parse a linear operator form.  Accepts the zero polynomial; anything else
/// must be homogeneous of degree one in lowercase variables.
inline LinearForm parse_linear_form(const std::string& text, int num_vars) {
  const Polynomial p = parse_polynomial(text, num_vars);
  if (p.ring() != Ring::Operator && !p.variable_free())
    throw ParseError("linear form must use lowercase operator variables", 0);
  std::vector<Rational> coeffs(static_cast<std::size_t>(num_vars), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != 1)
      throw ParseError("not a linear form: term of degree " +
                           std::to_string(total_degree(e)),
                       0);
    for (int i = 0; i < num_vars; ++i)
      if (e[static_cast<std::size_t>(i)] == 1) coeffs[static_cast<std::size_t>(i)] = c;
  }
  return LinearForm(std::move(coeffs));
}

}  // namespace gjt
