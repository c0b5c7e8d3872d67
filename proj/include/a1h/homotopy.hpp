#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/local_algebra.hpp"
#include "a1h/nodal_blowup.hpp"

namespace a1h {

inline RingPtr homotopy_ring(const RingPtr& base) {
  if (!base->is_base()) throw DomainError("homotopy_ring: expected a base ring");
  return Ring::with_homotopy(base->variables());
}

/// Map A^1_U -> P^1_U, [Y:Z] = [p:q], p and q in R[T]. When `reversed` the
/// link is traversed T -> 1 - T; `p` and `q` keep the constructed form.
struct HomotopyLink {
  Polynomial p, q;
  bool reversed = false;

  Polynomial eff_p() const { return reversed ? reverse_T(p) : p; }
  Polynomial eff_q() const { return reversed ? reverse_T(q) : q; }
  /// (Y, Z) at T = t in the chain direction, as base-ring polynomials.
  std::pair<Polynomial, Polynomial> at(long t) const {
    return {substitute_T(eff_p(), Scalar(t)), substitute_T(eff_q(), Scalar(t))};
  }
};

struct Witness {
  std::vector<HomotopyLink> links;
  Section start, end;
};

/// Σ coeffs[i]·T^i over a common base denominator: (numerator in R[T], den).
inline std::pair<Polynomial, Polynomial> clear_T(const std::vector<LocalElement>& coeffs, const RingPtr& RT) {
  if (coeffs.empty()) throw DomainError("clear_T: no coefficients");
  const RingPtr& R = coeffs.front().ring();
  Polynomial den = Polynomial::constant(R, 1);
  for (const auto& c : coeffs)
    if (!exact_divide(den, c.den())) den = poly_lcm(den, c.den());
  den = den.scaled(den.constant_term().inverse());
  const Polynomial T = Polynomial::variable(RT, kHomotopyVar);
  Polynomial num(RT), Tk = Polynomial::constant(RT, 1);
  for (const auto& c : coeffs) {
    num += embed(c.num() * *exact_divide(den, c.den()), RT) * Tk;
    Tk = Tk * T;
  }
  return {num, den};
}

/// The link [P : Q] for local R[T]-coefficient lists of P and Q.
inline HomotopyLink make_link(const std::vector<LocalElement>& P, const std::vector<LocalElement>& Q,
                              bool reversed = false) {
  RingPtr RT = homotopy_ring(P.front().ring());
  auto [pn, pd] = clear_T(P, RT);
  auto [qn, qd] = clear_T(Q, RT);
  return {pn * embed(qd, RT), qn * embed(pd, RT), reversed};
}

inline Witness build_straightline_witness(const Section& s1, const Section& s2, const LocalElement& r0) {
  const FamilyTag f1 = classify_section(s1, r0).tag, f2 = classify_section(s2, r0).tag;
  if (f1 != f2 || f1 == FamilyTag::kMiddle)
    throw DomainError("straight-line witness needs two unit-family or two full-family sections");
  const LocalElement one = LocalElement::constant(r0.ring(), 1);
  const LocalElement &a = s1.value(), &b = s2.value();
  // Unit family: Y = 1, Z = a(1-T) + bT. Full family: Y = a(1-T) + bT, Z = 1.
  HomotopyLink l = f1 == FamilyTag::kUnit ? make_link({one}, {a, b - a}) : make_link({a, b - a}, {one});
  return {{l}, s1, s2};
}

struct TwoStepData {
  LocalElement s1, sp, delta1, deltap, r3;
};

/// Middle-family pair with r2/r1 - 1 ∈ ⟨sqfree(r1), sqfree(r0/r1)⟩.
inline Witness build_two_step_witness(const LocalElement& r0, const LocalElement& r1, const LocalElement& r2,
                                      TwoStepData* data = nullptr) {
  require_nondegenerate(r0);
  const LocalElement one = LocalElement::constant(r0.ring(), 1);
  const LocalElement s1 = radical_principal(r1);
  const LocalElement sp = radical_principal(local_quotient(r0, r1));
  const LocalElement t = local_quotient(r2, r1) - one;
  auto d = local_member_with_cofactors(t, {s1, sp});
  const LocalElement r3 = r1 * (one + s1 * d[0]);
  // r3 / (1 + s1 δ1 T) runs r3 -> r1; reversed it starts at r1.
  HomotopyLink h1 = make_link({r3}, {one, s1 * d[0]}, /*reversed=*/true);
  HomotopyLink h2 = make_link({r3, r1 * sp * d[1]}, {one});
  if (data) *data = {s1, sp, d[0], d[1], r3};
  return {{h1, h2}, Section::beta(r1), Section::beta(r2)};
}

/// Homogenized pullback of ⟨x^a, y^b⟩ along the link: ⟨r0^a q^b, p^b⟩ : q^∞.
inline Ideal pullback_factor_ideal(const HomotopyLink& link, const BlowupPair& pair, const LocalElement& r0) {
  const RingPtr& RT = link.p.ring();
  const Polynomial q = link.eff_q(), p = link.eff_p();
  const Polynomial u = embed(r0.num(), RT).pow(static_cast<unsigned>(pair.a)) * q.pow(static_cast<unsigned>(pair.b));
  const Polynomial v = p.pow(static_cast<unsigned>(pair.b));
  if (q.is_zero()) return Ideal(RT, {u, v});
  return ideal_saturate(Ideal(RT, {u, v}), q);
}

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const VerificationCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

namespace detail {

inline bool same_point(const std::pair<LocalElement, LocalElement>& a, const std::pair<LocalElement, LocalElement>& b) {
  return a.first * b.second == b.first * a.second;
}

inline std::pair<LocalElement, LocalElement> as_point(const std::pair<Polynomial, Polynomial>& yz) {
  return {LocalElement(yz.first), LocalElement(yz.second)};
}

inline std::string point_text(const std::pair<Polynomial, Polynomial>& yz) {
  return "[" + yz.first.to_string() + " : " + yz.second.to_string() + "]";
}

}  // namespace detail

/// Total check of a witness: unimodularity, factor-wise local principality of
/// the pullbacks, and endpoint chaining from `start` to `end`.
inline VerificationReport verify_witness(const Witness& w, const LocalElement& r0, const BlowupSpec& spec,
                                         const Section& start, const Section& end) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("start_section", w.start == start, w.start.to_string() + " vs " + start.to_string());
  add("end_section", w.end == end, w.end.to_string() + " vs " + end.to_string());
  if (w.links.empty()) {
    add("chain", start == end, "empty chain between " + start.to_string() + " and " + end.to_string());
    return rep;
  }
  const RingPtr RT = homotopy_ring(r0.ring());
  std::optional<std::pair<Polynomial, Polynomial>> prev_end;
  for (std::size_t i = 0; i < w.links.size(); ++i) {
    const HomotopyLink& l = w.links[i];
    const std::string tag = "link" + std::to_string(i);
    if (!same_ring(l.p.ring(), RT) || !same_ring(l.q.ring(), RT)) {
      add(tag + ".ring", false, "link is not over R[T] for the instance ring");
      continue;
    }
    const Polynomial p = l.eff_p(), q = l.eff_q();
    const bool unimodular = !(p.is_zero() && q.is_zero()) && is_unit_ideal_RT(Ideal(RT, {p, q}));
    add(tag + ".unimodular", unimodular,
        unimodular ? "" : "<" + p.to_string() + ", " + q.to_string() + "> is not the unit ideal of R[T]");
    if (!unimodular) continue;
    for (const auto& pair : spec.pairs()) {
      const Polynomial u = embed(r0.num(), RT).pow(static_cast<unsigned>(pair.a)) * q.pow(static_cast<unsigned>(pair.b));
      const Polynomial v = p.pow(static_cast<unsigned>(pair.b));
      const bool lp = is_locally_principal_RT(u, v);
      add(tag + ".locally_principal" + to_string(pair), lp,
          lp ? "" : "<" + u.to_string() + ", " + v.to_string() + "> is not locally principal");
    }
    auto e0 = l.at(0), e1 = l.at(1);
    for (auto* e : {&e0, &e1})
      if (e->first.constant_term().is_zero() && e->second.constant_term().is_zero())
        add(tag + ".endpoint_defined", false, detail::point_text(*e) + " vanishes at the origin");
    if (i == 0) {
      const bool ok = detail::same_point(detail::as_point(e0), start.point());
      add(tag + ".starts_at_start", ok, detail::point_text(e0) + " vs " + start.to_string());
    } else if (prev_end) {
      const bool ok = detail::same_point(detail::as_point(*prev_end), detail::as_point(e0));
      add(tag + ".chained", ok, detail::point_text(*prev_end) + " vs " + detail::point_text(e0));
    }
    if (i + 1 == w.links.size()) {
      const bool ok = detail::same_point(detail::as_point(e1), end.point());
      add(tag + ".ends_at_end", ok, detail::point_text(e1) + " vs " + end.to_string());
    }
    prev_end = e1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Decision

enum class VerdictKind { kHomotopic, kNotHomotopic, kAllSectionsEquivalent };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kHomotopic: return "homotopic";
    case VerdictKind::kNotHomotopic: return "not_homotopic";
    case VerdictKind::kAllSectionsEquivalent: return "all_sections_equivalent";
  }
  return "unknown";
}

enum class FailureReason { kFamilyMismatch, kNonUnitRatio, kRadicalSumNonMember };

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::kFamilyMismatch: return "family_mismatch";
    case FailureReason::kNonUnitRatio: return "non_unit_ratio";
    case FailureReason::kRadicalSumNonMember: return "radical_sum_non_member";
  }
  return "unknown";
}

/// Why two sections are not homotopic. For kRadicalSumNonMember: the tested
/// element, the criterion generators, their reduced polynomial basis, the
/// (nonzero) normal form of the element's numerator, and a basis of the
/// colon ideal ⟨gens⟩ : element, all of whose members vanish at the origin.
struct Certificate {
  FailureReason reason;
  std::string message;
  std::string family1, family2;
  std::optional<LocalElement> element;
  std::vector<LocalElement> generators;
  std::vector<Polynomial> basis;
  std::optional<Polynomial> normal_form;
  std::vector<Polynomial> colon_basis;
};

struct Verdict {
  VerdictKind kind;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  std::string reason;  // AllSectionsEquivalent only

  bool homotopic() const { return kind != VerdictKind::kNotHomotopic; }
};

/// Ideal against which r2/r1 - 1 is tested. kSumOfRadicals: ⟨sqfree(r1),
/// sqfree(r')⟩. kRadicalOfSum: the radical of ⟨r1, r'⟩, supported in one
/// variable where it is ⟨sqfree(gcd(r1, r'))⟩.
enum class Criterion { kSumOfRadicals, kRadicalOfSum };

inline std::vector<LocalElement> criterion_generators(const LocalElement& r1, const LocalElement& rp, Criterion c) {
  if (c == Criterion::kSumOfRadicals) return {radical_principal(r1), radical_principal(rp)};
  if (r1.ring()->arity() != 1) throw DomainError("radical-of-sum criterion is implemented for one variable only");
  return {radical_principal(LocalElement(poly_gcd(r1.num(), rp.num())))};
}

namespace detail {

inline Verdict not_homotopic(Certificate c) { return {VerdictKind::kNotHomotopic, std::nullopt, std::move(c), {}}; }

inline Verdict verified(Witness w, const LocalElement& r0, const BlowupSpec& spec) {
  VerificationReport rep = verify_witness(w, r0, spec, w.start, w.end);
  if (!rep.ok()) throw InternalError("constructed witness failed " + rep.first_failure()->name + ": " + rep.first_failure()->detail);
  return {VerdictKind::kHomotopic, std::move(w), std::nullopt, {}};
}

}  // namespace detail

inline Verdict decide(const LocalElement& r0, const Section& s1, const Section& s2, const BlowupSpec& spec,
                      Criterion criterion = Criterion::kSumOfRadicals) {
  if (!same_ring(r0.ring(), s1.ring()) || !same_ring(r0.ring(), s2.ring()))
    throw RingMismatch("decide: sections and r0 live in different rings");
  if (r0.is_zero() || is_unit(r0))
    return {VerdictKind::kAllSectionsEquivalent, std::nullopt, std::nullopt, "degenerate r0: zero or a unit"};
  if (spec.empty())
    return {VerdictKind::kAllSectionsEquivalent, std::nullopt, std::nullopt, "no blowup centers"};
  for (const Section* s : {&s1, &s2})
    if (!lifts_to_blowup(*s, r0, spec))
      throw UnliftableSection("section " + s->to_string() + " does not lift to the blowup");
  if (s1 == s2) return detail::verified({{}, s1, s2}, r0, spec);

  const Family f1 = classify_section(s1, r0), f2 = classify_section(s2, r0);
  if (f1.tag != f2.tag) {
    Certificate c{FailureReason::kFamilyMismatch, "sections lie in different families", f1.to_string(), f2.to_string(),
                  {}, {}, {}, {}, {}};
    return detail::not_homotopic(std::move(c));
  }
  if (f1.tag != FamilyTag::kMiddle) return detail::verified(build_straightline_witness(s1, s2, r0), r0, spec);

  const LocalElement &r1 = s1.value(), &r2 = s2.value();
  if (!local_divides(r1, r2) || !is_unit(local_quotient(r2, r1))) {
    Certificate c{FailureReason::kNonUnitRatio, "r2/r1 is not a unit of R", f1.to_string(), f2.to_string(),
                  {}, {}, {}, {}, {}};
    return detail::not_homotopic(std::move(c));
  }
  const LocalElement rp = local_quotient(r0, r1);
  const LocalElement t = local_quotient(r2, r1) - LocalElement::constant(r0.ring(), 1);
  std::vector<LocalElement> gens = criterion_generators(r1, rp, criterion);
  if (local_member(t, LocalIdeal{r0.ring(), gens})) {
    if (criterion == Criterion::kRadicalOfSum && !radical_sum_member(t, r1, rp))
      throw InternalError("radical-of-sum member is not a sum-of-radicals member");
    return detail::verified(build_two_step_witness(r0, r1, r2), r0, spec);
  }
  Certificate c{FailureReason::kRadicalSumNonMember, "r2/r1 - 1 is not in the criterion ideal", f1.to_string(),
                f2.to_string(), t, gens, {}, {}, {}};
  const Ideal P = LocalIdeal{r0.ring(), gens}.polynomial_ideal();
  c.basis = P.groebner();
  c.normal_form = reduce(t.num(), c.basis);
  const Ideal colon = ideal_quotient(P, t.num());
  c.colon_basis = colon.groebner();
  return detail::not_homotopic(std::move(c));
}

/// ⟨sqfree(r1), sqfree(r')⟩ = ⟨sqfree(gcd(r1, r'))⟩ in R, one variable.
inline bool dvr_identity_holds(const LocalElement& r1, const LocalElement& rp) {
  const auto a = criterion_generators(r1, rp, Criterion::kSumOfRadicals);
  const auto b = criterion_generators(r1, rp, Criterion::kRadicalOfSum);
  const LocalIdeal A{r1.ring(), a}, B{r1.ring(), b};
  for (const auto& g : a)
    if (!local_member(g, B)) return false;
  for (const auto& g : b)
    if (!local_member(g, A)) return false;
  return true;
}

/// decide over a one-variable base, cross-checking both criteria.
inline Verdict dvr_decide(const LocalElement& r0, const Section& s1, const Section& s2, const BlowupSpec& spec) {
  if (r0.ring()->arity() != 1) throw DomainError("dvr_decide needs a one-variable base ring");
  if (!r0.is_zero() && !is_unit(r0) && !spec.empty() && s1.kind() == SectionKind::kBeta &&
      s2.kind() == SectionKind::kBeta) {
    const Family f1 = classify_section(s1, r0);
    if (f1.tag == FamilyTag::kMiddle && !dvr_identity_holds(s1.value(), local_quotient(r0, s1.value())))
      throw InternalError("radical identity fails in one variable");
  }
  Verdict a = decide(r0, s1, s2, spec, Criterion::kSumOfRadicals);
  Verdict b = decide(r0, s1, s2, spec, Criterion::kRadicalOfSum);
  if (a.kind != b.kind) throw InternalError("criteria disagree in one variable");
  return a;
}

// ---------------------------------------------------------------------------
// Cross-checks

namespace detail {

/// f = m · w with m the gcd monomial of f's terms and w free of T with
/// nonzero constant term; returns m's exponents.
inline std::optional<Monomial> monomial_part(const Polynomial& f) {
  Monomial m = f.terms().front().mono;
  for (const auto& t : f.terms()) m = m.gcd(t.mono);
  const auto T = f.ring()->index_of(kHomotopyVar);
  bool has_const = false;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono / m;
    if (T && rest.exp[*T] != 0) return std::nullopt;
    has_const = has_const || rest.is_one();
  }
  if (!has_const) return std::nullopt;
  return m;
}

}  // namespace detail

/// Local principality of ⟨u, v⟩ for monomial-times-unit inputs, by checking
/// componentwise comparability of exponents at every monomial prime.
inline bool monomial_stalk_oracle(const Polynomial& u, const Polynomial& v) {
  u.check_ring(v);
  if (u.is_zero() || v.is_zero()) return true;
  auto mu = detail::monomial_part(u), mv = detail::monomial_part(v);
  if (!mu || !mv) throw DomainError("monomial_stalk_oracle: inputs must be monomials times units");
  const std::size_t n = u.ring()->arity();
  for (std::size_t S = 1; S < (std::size_t{1} << n); ++S) {
    bool u_le = true, v_le = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(S >> i & 1)) continue;
      u_le = u_le && mu->exp[i] <= mv->exp[i];
      v_le = v_le && mv->exp[i] <= mu->exp[i];
    }
    if (!u_le && !v_le) return false;
  }
  return true;
}

/// Single links [r1(1 + B + G T Q) : Q] with Q = 1 + B(1 - T), G = r2/r1 - 1 - B, for B
/// drawn from `candidates`. Every such link starts at β_r1 and ends at β_r2;
/// returns the first B whose link verifies.
inline std::optional<HomotopyLink> probe_single_link(const LocalElement& r0, const LocalElement& r1,
                                                     const LocalElement& r2, const BlowupSpec& spec,
                                                     const std::vector<LocalElement>& candidates,
                                                     std::optional<LocalElement>* found_b = nullptr) {
  const LocalElement one = LocalElement::constant(r0.ring(), 1);
  const LocalElement rho = local_quotient(r2, r1);
  for (const auto& B : candidates) {
    const LocalElement G = rho - one - B;
    // P = r1(1+B) + r1 G (1+B) T - r1 G B T^2, Q = (1+B) - B T
    HomotopyLink l = make_link({r1 * (one + B), r1 * G * (one + B), -(r1 * G * B)}, {one + B, -B});
    Witness w{{l}, Section::beta(r1), Section::beta(r2)};
    if (verify_witness(w, r0, spec, w.start, w.end).ok()) {
      if (found_b) *found_b = B;
      return l;
    }
  }
  return std::nullopt;
}

/// B = Σ ±m over at most `max_terms` distinct monomials m of degree 1..max_deg
/// (plus B = 0).
inline std::vector<LocalElement> probe_candidates(const RingPtr& R, unsigned max_deg, unsigned max_terms = 2) {
  std::vector<Polynomial> monos;
  std::function<void(std::size_t, Monomial, unsigned)> gen = [&](std::size_t i, Monomial m, unsigned left) {
    if (i == R->arity()) {
      if (!m.is_one()) monos.push_back(Polynomial::term(R, m, Scalar(1)));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      Monomial next = m;
      next.exp[i] = e;
      gen(i + 1, next, left - e);
    }
  };
  gen(0, Monomial{}, max_deg);
  std::vector<LocalElement> out{LocalElement::constant(R, 0)};
  std::function<void(std::size_t, Polynomial, unsigned)> pick = [&](std::size_t from, Polynomial acc, unsigned k) {
    if (k == 0) return;
    for (std::size_t j = from; j < monos.size(); ++j)
      for (int s : {1, -1}) {
        Polynomial next = acc + monos[j].scaled(Scalar(s));
        out.emplace_back(next);
        pick(j + 1, next, k - 1);
      }
  };
  pick(0, Polynomial(R), max_terms);
  return out;
}

}  // namespace a1h
