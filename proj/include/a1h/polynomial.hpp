#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/ring.hpp"
#include "a1h/scalar.hpp"

namespace a1h {

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial with rational coefficients. Terms are stored in
/// strictly descending monomial order with no zero coefficients, so equal
/// polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::string_view name) {
    Monomial m;
    m.exp[ring->require_index(name)] = 1;
    return term(std::move(ring), m, Scalar(1));
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  /// Coefficient of the all-zero exponent monomial.
  Scalar constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Scalar(0);
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp[var]);
    return d;
  }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Removes the leading term; no-op on zero.
  void drop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return add_scaled(o, Scalar(1), Monomial{}); }
  Polynomial& operator-=(const Polynomial& o) { return add_scaled(o, Scalar(-1), Monomial{}); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Polynomial& big = a.size() >= b.size() ? a : b;
    const Polynomial& small = a.size() >= b.size() ? b : a;
    Polynomial acc(a.ring_);
    for (const auto& t : small.terms_) acc.add_scaled(big, t.coeff, t.mono);
    return acc;
  }

  /// this += c * m * o, in one merge pass.
  Polynomial& add_scaled(const Polynomial& o, const Scalar& c, const Monomial& m) {
    check_ring(o);
    if (c.is_zero() || o.is_zero()) return *this;
    const bool shift = !m.is_one();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const Ring& R = *ring_;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial mj = shift ? o.terms_[j].mono * m : o.terms_[j].mono;
      if (i == terms_.size()) {
        out.push_back({mj, o.terms_[j++].coeff * c});
        continue;
      }
      const int cmp = R.compare(terms_[i].mono, mj);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({mj, o.terms_[j++].coeff * c});
      } else {
        Scalar s = terms_[i].coeff + o.terms_[j].coeff * c;
        if (!s.is_zero()) out.push_back({mj, std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Polynomial scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  Polynomial shifted(const Monomial& m, const Scalar& c = Scalar(1)) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coeff *= c;
    }
    return r;
  }
  /// Scaled to leading coefficient 1; zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, Scalar(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical text: descending monomial order, reduced fractions,
  /// e.g. "x^2 + x*y^2 - 3/4". Re-parses to an equal polynomial.
  std::string to_string() const;

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials from different rings combined");
  }

 private:
  void canonicalize() {
    const Ring& R = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {

inline std::string monomial_text(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar mag = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff.sign() < 0) s += '-';
    } else {
      s += t.coeff.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = detail::monomial_text(*ring_, t.mono);
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + '*' + mono;
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Coefficient of the constant monomial, i.e. the value at the origin.
/// Defined on base-ring polynomials only.
inline Scalar eval_origin(const Polynomial& f) {
  if (!f.ring()->is_base())
    throw DomainError("eval_origin is defined on base-ring polynomials only");
  return f.constant_term();
}

/// Re-expresses `f` in `target`, matching variables by name.
inline Polynomial embed(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) return f;
  const Ring& src = *f.ring();
  std::vector<std::optional<std::size_t>> map(src.arity());
  for (std::size_t i = 0; i < src.arity(); ++i) map[i] = target->index_of(src.variables()[i]);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!map[i])
        throw DomainError("variable '" + src.variables()[i] + "' missing from target ring");
      m.exp[*map[i]] = t.mono.exp[i];
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

/// Substitutes a polynomial for variable `var` (which must exist in f's ring);
/// `value` lives in f's ring.
inline Polynomial compose(const Polynomial& f, std::size_t var, const Polynomial& value) {
  f.check_ring(value);
  std::vector<Polynomial> powers{Polynomial::constant(f.ring(), Scalar(1))};
  Polynomial out(f.ring());
  for (const auto& t : f.terms()) {
    const auto e = t.mono.exp[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.mono;
    rest.exp[var] = 0;
    out.add_scaled(powers[e], t.coeff, rest);
  }
  return out;
}

/// T -> value, returning a base-ring polynomial.
inline Polynomial substitute_T(const Polynomial& f, const Scalar& value) {
  const Ring& R = *f.ring();
  auto ti = R.index_of(kHomotopyVar);
  if (!ti || R.kind(*ti) != VarKind::kHomotopy)
    throw DomainError("substitute_T requires a ring containing T");
  RingPtr target = R.without(kHomotopyVar);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Scalar c = t.coeff;
    for (std::uint32_t k = 0; k < t.mono.exp[*ti]; ++k) c *= value;
    if (c.is_zero()) continue;
    Monomial m;
    std::size_t j = 0;
    for (std::size_t i = 0; i < R.arity(); ++i) {
      if (i == *ti) continue;
      m.exp[j++] = t.mono.exp[i];
    }
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

/// f(1 - T).
inline Polynomial reverse_T(const Polynomial& f) {
  const std::size_t ti = f.ring()->require_index(kHomotopyVar);
  Polynomial one_minus_t = Polynomial::constant(f.ring(), Scalar(1)) -
                           Polynomial::variable(f.ring(), kHomotopyVar);
  return compose(f, ti, one_minus_t);
}

inline Polynomial partial_derivative(const Polynomial& f, std::string_view var) {
  const std::size_t v = f.ring()->require_index(var);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono.exp[v] == 0) continue;
    Monomial m = t.mono;
    Scalar c = t.coeff * Scalar(static_cast<long>(m.exp[v]));
    m.exp[v] -= 1;
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

}  // namespace a1h
