#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/groebner.hpp"

namespace a1h {

inline constexpr int kDefaultSaturationCap = 64;

/// Name of the tag variable used for intersections.
inline constexpr const char* kTagVar = "_t";

inline bool ideal_member(const Polynomial& f, const Ideal& I) {
  if (!same_ring(f.ring(), I.ring())) throw RingMismatch("ideal_member: ring mismatch");
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  return reduce(f, I.groebner()).is_zero();
}

/// I is contained in J.
inline bool ideal_contains(const Ideal& J, const Ideal& I) {
  for (const auto& g : I.generators())
    if (!ideal_member(g, J)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideal_sum: ring mismatch");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

/// I ∩ k[remaining variables], expressed in the ring without `vars`.
inline Ideal elimination_ideal(const Ideal& I, const std::vector<std::string>& vars) {
  const RingPtr& R = I.ring();
  RingPtr S = R->eliminating(vars);
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(R->require_index(v));
  RingPtr target = R;
  for (const auto& v : vars) target = target->without(v);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, S));
  const auto basis = reduced_basis(S, gens, /*track_cofactors=*/false);
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements) {
    bool free = true;
    for (auto i : idx) free = free && !g.involves(i);
    if (free) kept.push_back(embed(g, target));
  }
  return Ideal(target, std::move(kept));
}

inline Ideal elimination_ideal(const Ideal& I, const std::string& var) {
  return elimination_ideal(I, std::vector<std::string>{var});
}

/// Tag-variable construction: (t*I + (1-t)*J) ∩ R.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideal_intersect: ring mismatch");
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R);
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  RingPtr S = R->adjoin(kTagVar, VarKind::kAuxiliary);
  const Polynomial t = Polynomial::variable(S, kTagVar);
  const Polynomial one_minus_t = Polynomial::constant(S, Scalar(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * embed(g, S));
  for (const auto& h : J.generators()) gens.push_back(one_minus_t * embed(h, S));
  Ideal E = elimination_ideal(Ideal(S, std::move(gens)), kTagVar);
  std::vector<Polynomial> back;
  for (const auto& g : E.generators()) back.push_back(embed(g, R));
  return Ideal(R, std::move(back));
}

/// f / g when g divides f exactly in the polynomial ring.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (g.is_zero()) throw DomainError("exact_divide: division by zero polynomial");
  if (f.is_zero()) return Polynomial(f.ring());
  std::vector<const Polynomial*> divs{&g};
  std::vector<Polynomial> q{Polynomial(f.ring())};
  Polynomial rem = detail::reduce_full(f, divs, nullptr, nullptr, &q);
  if (!rem.is_zero()) return std::nullopt;
  return q[0];
}

/// {g : g*f ∈ I}.
inline Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (!same_ring(I.ring(), f.ring())) throw RingMismatch("ideal_quotient: ring mismatch");
  if (f.is_zero()) throw DomainError("ideal_quotient: quotient by zero polynomial");
  const RingPtr& R = I.ring();
  if (I.is_zero()) return Ideal(R);
  if (ideal_member(f, I)) return Ideal(R, {Polynomial::constant(R, Scalar(1))});
  if (I.generators().size() == 1)
    if (auto h = exact_divide(I.generators()[0], f)) return Ideal(R, {*h});
  Ideal meet = ideal_intersect(I, principal(f));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = exact_divide(g, f);
    if (!q) throw InternalError("ideal_quotient: intersection element not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(R, std::move(gens));
}

/// I : f^∞ by iterated quotients.
inline Ideal ideal_saturate(const Ideal& I, const Polynomial& f, int cap = kDefaultSaturationCap) {
  if (f.is_zero()) throw DomainError("ideal_saturate: saturation by zero polynomial");
  Ideal cur = I;
  for (int k = 0; k < cap; ++k) {
    Ideal next = ideal_quotient(cur, f);
    if (ideal_contains(cur, next)) return cur;
    cur = std::move(next);
  }
  throw SaturationCapExceeded("ideal_saturate: no fixed point after " + std::to_string(cap) +
                              " quotients");
}

/// Monic generator of <f> ∩ <g>.
inline Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (exact_divide(f, g)) return f.monic();
  if (exact_divide(g, f)) return g.monic();
  Ideal meet = ideal_intersect(principal(f), principal(g));
  const auto& G = meet.groebner();
  if (G.size() != 1) throw InternalError("poly_lcm: intersection of principal ideals not principal");
  return G[0];
}

/// Monic gcd, via f*g / lcm(f, g).
inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (f.ring()->has_homotopy()) throw DomainError("poly_gcd is defined on base-ring polynomials only");
  if (f.is_zero() && g.is_zero()) throw DomainError("poly_gcd: both inputs are zero");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), Scalar(1));
  if (exact_divide(g, f)) return f.monic();
  if (exact_divide(f, g)) return g.monic();
  auto q = exact_divide(f * g, poly_lcm(f, g));
  if (!q) throw InternalError("poly_gcd: lcm does not divide the product");
  return q->monic();
}

/// Product of the distinct irreducible factors of f (monic): f / gcd(f, ∂f).
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree_part of zero polynomial");
  if (f.ring()->has_homotopy())
    throw DomainError("squarefree_part is defined on base-ring polynomials only");
  if (f.is_constant()) return Polynomial::constant(f.ring(), Scalar(1));
  Polynomial g = f;
  for (const auto& v : f.ring()->variables()) {
    Polynomial d = partial_derivative(f, v);
    if (d.is_zero()) continue;
    g = poly_gcd(g, d);
    if (g.is_constant()) break;
  }
  auto s = exact_divide(f, g);
  if (!s) throw InternalError("squarefree_part: gcd does not divide f");
  return s->monic();
}

}  // namespace a1h
