#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/ideal.hpp"

namespace a1h {

/// Element num/den of the local ring R = k[x̄] localized at the origin.
/// Invariants: den(0) ≠ 0, den has constant term 1, gcd(num, den) = 1.
class LocalElement {
 public:
  explicit LocalElement(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.ring(), 1)) {
    require_base(num_);
  }
  LocalElement(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    require_base(num_);
    num_.check_ring(den_);
    normalize();
  }

  static LocalElement constant(const RingPtr& ring, const Scalar& c) {
    return LocalElement(Polynomial::constant(ring, c));
  }

  const RingPtr& ring() const { return num_.ring(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  LocalElement operator-() const { return LocalElement(-num_, den_, Normalized{}); }
  friend LocalElement operator+(const LocalElement& a, const LocalElement& b) {
    if (a.den_ == b.den_) return LocalElement(a.num_ + b.num_, a.den_);
    return LocalElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LocalElement operator-(const LocalElement& a, const LocalElement& b) { return a + (-b); }
  friend LocalElement operator*(const LocalElement& a, const LocalElement& b) {
    if (a.den_.is_one() && b.den_.is_one()) return LocalElement(a.num_ * b.num_);
    return LocalElement(a.num_ * b.num_, a.den_ * b.den_);
  }
  /// Division by a unit of R.
  friend LocalElement operator/(const LocalElement& a, const LocalElement& b) {
    if (b.num_.constant_term().is_zero()) throw DomainError("division by a non-unit of the local ring");
    return LocalElement(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const LocalElement& a, const LocalElement& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct Normalized {};
  LocalElement(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  static void require_base(const Polynomial& p) {
    if (!p.ring()->is_base()) throw DomainError("local elements live in the base ring");
  }

  void normalize() {
    const Scalar d0 = den_.constant_term();
    if (d0.is_zero()) throw DomainError("denominator " + den_.to_string() + " is not a unit at the origin");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(num_.ring(), 1);
      return;
    }
    if (!den_.is_constant()) {
      Polynomial g = poly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
      }
    }
    const Scalar inv = den_.constant_term().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Polynomial num_;
  Polynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const LocalElement& e) { return os << e.to_string(); }

/// Ideal of R given by local generators; interpreted through their numerators.
struct LocalIdeal {
  RingPtr ring;
  std::vector<LocalElement> gens;

  Ideal polynomial_ideal() const {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(g.num());
    return Ideal(ring, std::move(ps));
  }
};

/// J ⊄ m, i.e. 1 ∈ J + ⟨x̄⟩. Any generating set decides this.
inline bool escapes_origin(const Ideal& J) {
  for (const auto& g : J.generators())
    if (!g.constant_term().is_zero()) return true;
  return false;
}

inline bool is_unit(const LocalElement& e) { return !e.num().constant_term().is_zero(); }

/// f | g in R.
inline bool local_divides(const LocalElement& f, const LocalElement& g) {
  if (f.is_zero()) throw DomainError("local_divides: zero divisor");
  if (g.is_zero() || is_unit(f)) return true;
  if (exact_divide(g.num(), f.num())) return true;
  return escapes_origin(ideal_quotient(principal(f.num()), g.num()));
}

/// g / f in R, assuming f | g there. Throws DomainError otherwise.
inline LocalElement local_quotient(const LocalElement& g, const LocalElement& f) {
  if (f.is_zero()) throw DomainError("local_quotient: zero divisor");
  if (g.is_zero()) return g;
  if (is_unit(f)) return g / f;
  if (auto h = exact_divide(g.num(), f.num())) return LocalElement(*h * f.den(), g.den());
  // c*num_g = h*num_f with c(0) != 0.
  const Ideal colon = ideal_quotient(principal(f.num()), g.num());
  for (const auto& c : colon.groebner()) {
    if (c.constant_term().is_zero()) continue;
    auto h = exact_divide(c * g.num(), f.num());
    if (!h) throw InternalError("local_quotient: colon element does not clear the divisor");
    return LocalElement(*h * f.den(), c * g.den());
  }
  throw DomainError("local_quotient: " + f.to_string() + " does not divide " + g.to_string());
}

/// f ∈ I·R.
inline bool local_member(const LocalElement& f, const LocalIdeal& I) {
  if (f.is_zero()) return true;
  Ideal P = I.polynomial_ideal();
  if (P.is_zero()) return false;
  return escapes_origin(ideal_quotient(P, f.num()));
}

/// δ with f = Σ δ_i·gens_i exactly in R. Throws DomainError if f ∉ ⟨gens⟩·R.
inline std::vector<LocalElement> local_member_with_cofactors(const LocalElement& f,
                                                             const std::vector<LocalElement>& gens) {
  const RingPtr& R = f.ring();
  std::vector<LocalElement> delta(gens.size(), LocalElement::constant(R, 0));
  if (f.is_zero()) return delta;

  std::vector<Polynomial> nums;
  std::vector<std::size_t> where;  // nonzero generator -> index in gens
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    nums.push_back(gens[i].num());
    where.push_back(i);
  }
  if (nums.empty()) throw DomainError("local_member_with_cofactors: element not in the zero ideal");
  Ideal P(R, nums);
  Ideal colon = ideal_quotient(P, f.num());
  std::optional<Polynomial> g;
  for (const auto& b : colon.groebner())
    if (!b.constant_term().is_zero()) {
      g = b;
      break;
    }
  if (!g) throw DomainError("local_member_with_cofactors: " + f.to_string() + " is not in the ideal");

  // g*num_f = Σ q_k B_k = Σ_k q_k Σ_i C_ki nums_i.
  const ReducedBasis& B = P.basis();
  Reduction red = normal_form(*g * f.num(), B);
  if (!red.remainder.is_zero()) throw InternalError("local_member_with_cofactors: colon element not in ideal");
  std::vector<Polynomial> c(nums.size(), Polynomial(R));
  for (std::size_t k = 0; k < B.elements.size(); ++k)
    for (std::size_t i = 0; i < nums.size(); ++i) c[i] += red.quotients[k] * B.cofactors[k][i];

  // f = Σ c_i den_i / (g den_f) · gens_i.
  const Polynomial scale = *g * f.den();
  for (std::size_t i = 0; i < nums.size(); ++i)
    delta[where[i]] = LocalElement(c[i] * gens[where[i]].den(), scale);

  LocalElement check = LocalElement::constant(R, 0);
  for (std::size_t i = 0; i < gens.size(); ++i) check = check + delta[i] * gens[i];
  if (!(check == f)) throw InternalError("local_member_with_cofactors: cofactor identity failed");
  return delta;
}

/// Generator of ⟨u, v⟩·R when that ideal is principal.
inline std::optional<LocalElement> is_principal_local(const LocalElement& u, const LocalElement& v) {
  if (u.is_zero() && v.is_zero()) throw DomainError("is_principal_local: both generators zero");
  if (v.is_zero()) return u;
  if (u.is_zero()) return v;
  if (local_divides(u, v)) return u;
  if (local_divides(v, u)) return v;
  return std::nullopt;
}

/// Generator of √⟨f⟩: the squarefree part of the numerator.
inline LocalElement radical_principal(const LocalElement& f) {
  if (f.is_zero()) throw DomainError("radical_principal of zero");
  if (is_unit(f)) return LocalElement::constant(f.ring(), 1);
  return LocalElement(squarefree_part(f.num()));
}

/// t ∈ √⟨a⟩ + √⟨b⟩ in R.
inline bool radical_sum_member(const LocalElement& t, const LocalElement& a, const LocalElement& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("radical_sum_member: zero generator");
  return local_member(t, LocalIdeal{t.ring(), {radical_principal(a), radical_principal(b)}});
}

/// K·R[extra vars] is the unit ideal, where K lives in k[x̄][extra vars]:
/// the elimination ideal K ∩ k[x̄] must escape the origin.
inline bool is_unit_ideal_RT(const Ideal& J) {
  const RingPtr& S = J.ring();
  std::vector<std::string> extra;
  std::vector<std::size_t> extra_idx;
  for (std::size_t i = 0; i < S->arity(); ++i)
    if (S->kind(i) != VarKind::kBase) {
      extra.push_back(S->variables()[i]);
      extra_idx.push_back(i);
    }
  for (const auto& g : J.generators()) {
    bool free = true;
    for (auto i : extra_idx) free = free && !g.involves(i);
    if (free && !g.constant_term().is_zero()) return true;
  }
  if (J.is_zero()) return false;
  if (extra.empty()) return escapes_origin(J);
  return escapes_origin(elimination_ideal(J, extra));
}

/// g ∈ J·R[T].
inline bool member_RT(const Polynomial& g, const Ideal& J) {
  if (g.is_zero()) return true;
  if (J.is_zero()) return false;
  return is_unit_ideal_RT(ideal_quotient(J, g));
}

/// ⟨u, v⟩ is locally principal on Spec R[T]: (⟨u⟩:v) + (⟨v⟩:u) is the unit ideal.
inline bool is_locally_principal_RT(const Polynomial& u, const Polynomial& v) {
  u.check_ring(v);
  if (u.is_zero() && v.is_zero()) throw DomainError("is_locally_principal_RT: both generators zero");
  if (u.is_zero() || v.is_zero()) return true;
  if (exact_divide(v, u) || exact_divide(u, v)) return true;
  // ⟨u⟩:v = ⟨lcm/v⟩ and ⟨v⟩:u = ⟨lcm/u⟩.
  const Polynomial l = poly_lcm(u, v);
  auto a = exact_divide(l, v);
  auto b = exact_divide(l, u);
  if (!a || !b) throw InternalError("is_locally_principal_RT: lcm not divisible by its inputs");
  return is_unit_ideal_RT(Ideal(u.ring(), {*a, *b}));
}

/// Auxiliary variable name for the Rabinowitsch trick.
inline constexpr const char* kRabinowitschVar = "_z";

/// t ∈ √(⟨gens⟩·R), decided by 1 ∈ ⟨gens, 1 − z·t⟩ over R[z].
inline bool local_radical_member(const LocalElement& t, const std::vector<LocalElement>& gens) {
  if (t.is_zero()) return true;
  const RingPtr& R = t.ring();
  RingPtr S = R->adjoin(kRabinowitschVar, VarKind::kAuxiliary);
  std::vector<Polynomial> ps;
  for (const auto& g : gens)
    if (!g.is_zero()) ps.push_back(embed(g.num(), S));
  const Polynomial z = Polynomial::variable(S, kRabinowitschVar);
  ps.push_back(Polynomial::constant(S, 1) - z * embed(t.num(), S));
  return is_unit_ideal_RT(Ideal(S, std::move(ps)));
}

}  // namespace a1h
