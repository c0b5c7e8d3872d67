// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "a1h/a1h.hpp"
#include "random_poly.hpp"
#include "stern_brocot.hpp"

#ifndef A1H_FIXTURES_DIR
#error "A1H_FIXTURES_DIR must be defined"
#endif

namespace {

using namespace a1h;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

LocalElement L(const char* s, const RingPtr& R) { return parse_local(s, R); }
Section B(const LocalElement& v) { return Section::beta(v); }

// Single point counterexample.
Outcome c1() {
  Outcome o;
  RingPtr R = Ring::base({"x", "y"});
  Verdict v = decide(L("x*(y^2+x)", R), B(L("x", R)), B(L("x*(1+y)", R)), BlowupSpec::from_pairs({{1, 1}}));
  if (v.kind != VerdictKind::kNotHomotopic) return o.fail("verdict " + std::string(to_string(v.kind))), o;
  const Certificate& c = *v.certificate;
  if (c.reason != FailureReason::kRadicalSumNonMember) o.fail("wrong certificate reason");
  else if (!(*c.element == L("y", R))) o.fail("offending element " + c.element->to_string());
  else if (c.basis != std::vector<Polynomial>{poly_parse("x", R), poly_parse("y^2", R)})
    o.fail("basis " + to_string(c.basis));
  else if (c.normal_form->is_zero()) o.fail("zero normal form");
  if (o.pass) o.detail = "basis {x, y^2}, element y, normal form " + c.normal_form->to_string();
  return o;
}

// Nodal counterexample, b1 = 2.
Outcome c2() {
  Outcome o;
  RingPtr R = Ring::base({"x", "y"});
  const BlowupSpec spec = BlowupSpec::from_pairs({{1, 2}, {1, 1}});
  const LocalElement r0 = L("x^2*(y^2+x)", R);
  const Section s1 = B(L("x", R)), s2 = B(L("x*(1+y)", R));
  if (!lifts_to_blowup(s1, r0, spec) || !lifts_to_blowup(s2, r0, spec)) return o.fail("a section does not lift"), o;
  Verdict v = decide(r0, s1, s2, spec);
  if (v.kind != VerdictKind::kNotHomotopic) o.fail("verdict " + std::string(to_string(v.kind)));
  else o.detail = "both lift; not_homotopic (" + std::string(to_string(v.certificate->reason)) + ")";
  return o;
}

// Irreducible non-units used to assemble r1 and r'.
std::vector<Polynomial> factor_pool(const RingPtr& R) {
  std::vector<Polynomial> out;
  const bool two = R->arity() == 2;
  const std::vector<const char*> texts =
      two ? std::vector<const char*>{"x", "y", "x+y", "y^2+x", "x-y^2", "x+y+x*y", "y+x^2", "x-2*y"}
          : std::vector<const char*>{"x", "x+x^2", "2*x-x^3"};
  for (auto t : texts) out.push_back(poly_parse(t, R));
  return out;
}

Polynomial random_product(std::mt19937& rng, const std::vector<Polynomial>& pool, int max_factors, unsigned max_deg) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, max_factors);
  for (;;) {
    Polynomial p = Polynomial::constant(pool.front().ring(), 1);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) p = p * pool[pick(rng)];
    if (p.total_degree() <= max_deg) return p;
  }
}

LocalElement random_unit(std::mt19937& rng, const RingPtr& R) {
  Polynomial n = testing::random_poly(rng, R, 2, 1, 2);
  n += Polynomial::constant(R, n.constant_term().is_zero() ? 1 : 0);
  return LocalElement(n);
}

// Witness round trip on middle-family instances satisfying the criterion.
Outcome c3() {
  Outcome o;
  std::mt19937 rng(31337);
  RingPtr R2 = Ring::base({"x", "y"}), R1 = Ring::base({"x"});
  const BlowupSpec single = BlowupSpec::from_pairs({{1, 1}});
  const BlowupSpec nodal = BlowupSpec::from_pairs({{1, 2}, {1, 1}});
  int done = 0, nodal_count = 0, links = 0;
  while (done < 200) {
    const RingPtr& R = done % 4 == 3 ? R1 : R2;
    const auto pool = factor_pool(R);
    const Polynomial a = random_product(rng, pool, 2, 2), b = random_product(rng, pool, 2, 2);
    if (a.total_degree() + b.total_degree() > 4) continue;
    const LocalElement r0(a * b);
    const LocalElement r1 = LocalElement(a) * random_unit(rng, R);
    if (local_divides(r0, r1)) continue;  // e.g. b constant: not middle
    const LocalElement s1 = radical_principal(r1), sp = radical_principal(local_quotient(r0, r1));
    const LocalElement d1(testing::random_poly(rng, R, 2, 2, 2)), dp(testing::random_poly(rng, R, 2, 2, 2));
    const LocalElement r2 = r1 * (LocalElement::constant(R, 1) + s1 * d1 + sp * dp);
    if (r1.num().total_degree() > 4 || r2.num().total_degree() > 4 || r2.den().total_degree() > 4) continue;
    const Section sec1 = B(r1), sec2 = B(r2);
    const bool use_nodal = lifts_to_blowup(sec1, r0, nodal) && lifts_to_blowup(sec2, r0, nodal);
    const BlowupSpec& spec = use_nodal ? nodal : single;
    try {
      Verdict v = decide(r0, sec1, sec2, spec);
      if (v.kind != VerdictKind::kHomotopic) {
        o.fail("not homotopic: r0=" + r0.to_string() + " r1=" + r1.to_string() + " r2=" + r2.to_string());
      } else {
        VerificationReport rep = verify_witness(*v.witness, r0, spec, sec1, sec2);
        if (!rep.ok()) o.fail("verification failed (" + rep.first_failure()->name + ") for r2=" + r2.to_string());
        links += static_cast<int>(v.witness->links.size());
      }
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    nodal_count += use_nodal;
    ++done;
  }
  if (o.pass)
    o.detail = "200/200 verified (" + std::to_string(nodal_count) + " on [(1,2),(1,1)], " + std::to_string(links) +
               " links)";
  return o;
}

// One-variable collapse of the two radical ideals.
Outcome c4() {
  Outcome o;
  std::mt19937 rng(4);
  RingPtr R = Ring::base({"x"});
  const Polynomial x = Polynomial::variable(R, "x");
  const BlowupSpec spec = BlowupSpec::from_pairs({{1, 1}});
  int memberships = 0, decisions = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    const LocalElement r0(x.pow(n));
    std::vector<LocalElement> values;
    for (unsigned i = 0; i <= n + 1; ++i)
      for (long c : {0L, 1L, -1L, 2L})
        values.emplace_back(x.pow(i) * (Polynomial::constant(R, 1) + x.scaled(Scalar(c))));
    for (const auto& r1 : values) {
      if (is_unit(r1) || local_divides(r0, r1)) continue;
      const LocalElement rp = local_quotient(r0, r1);
      const LocalIdeal sum{R, criterion_generators(r1, rp, Criterion::kSumOfRadicals)};
      const LocalIdeal rad{R, criterion_generators(r1, rp, Criterion::kRadicalOfSum)};
      for (int k = 0; k < 100; ++k) {
        const LocalElement t(testing::random_poly(rng, R, 3, 6, 3));
        ++memberships;
        if (local_member(t, sum) != local_member(t, rad)) o.fail("membership differs for " + t.to_string());
      }
    }
    for (const auto& a : values)
      for (const auto& b : values) {
        const Verdict v1 = decide(r0, B(a), B(b), spec, Criterion::kSumOfRadicals);
        const Verdict v2 = decide(r0, B(a), B(b), spec, Criterion::kRadicalOfSum);
        ++decisions;
        if (v1.kind != v2.kind) o.fail("verdicts differ for " + a.to_string() + ", " + b.to_string());
      }
  }
  if (o.pass)
    o.detail = std::to_string(memberships) + " memberships, " + std::to_string(decisions) + " decisions agree";
  return o;
}

// Unit and full families are each one class; families never mix.
Outcome c5() {
  Outcome o;
  std::mt19937 rng(55);
  RingPtr R = Ring::base({"x", "y"});
  const auto pool = factor_pool(R);
  const BlowupSpec specs[] = {BlowupSpec::from_pairs({{1, 1}}), BlowupSpec::from_pairs({{1, 2}, {1, 1}})};
  auto unit_section = [&]() -> Section {
    if (rng() % 2) return Section::alpha(LocalElement(testing::random_poly(rng, R, 3, 2, 3)));
    return B(random_unit(rng, R));
  };
  auto full_section = [&](const LocalElement& r0) {
    return B(r0 * LocalElement(testing::random_poly(rng, R, 3, 2, 3)));
  };
  int same = 0, cross = 0;
  for (int k = 0; k < 100; ++k) {
    const LocalElement r0(random_product(rng, pool, 2, 4));
    const BlowupSpec& spec = specs[k % 2];
    const bool unit = k < 50;
    const Section s1 = unit ? unit_section() : full_section(r0), s2 = unit ? unit_section() : full_section(r0);
    Verdict v = decide(r0, s1, s2, spec);
    if (v.kind != VerdictKind::kHomotopic) o.fail("same-family pair not homotopic: " + s1.to_string());
    else if (!(s1 == s2) && v.witness->links.size() != 1) o.fail("witness is not a single link");
    else if (!verify_witness(*v.witness, r0, spec, s1, s2).ok()) o.fail("straight line failed verification");
    ++same;
  }
  for (int k = 0; k < 60; ++k) {
    const Polynomial a = random_product(rng, pool, 1, 2), b = random_product(rng, pool, 1, 2);
    const LocalElement r0(a * b);
    const Section mid = B(LocalElement(a) * random_unit(rng, R));
    const Section u = unit_section(), f = full_section(r0);
    const std::pair<Section, Section> pairs[] = {{u, f}, {f, u}, {u, mid}, {mid, f}};
    const auto& [s1, s2] = pairs[k % 4];
    Verdict v = decide(r0, s1, s2, specs[0]);
    if (v.kind != VerdictKind::kNotHomotopic || v.certificate->reason != FailureReason::kFamilyMismatch)
      o.fail("cross-family pair not rejected: " + s1.to_string() + ", " + s2.to_string());
    ++cross;
  }
  if (o.pass) o.detail = std::to_string(same) + " same-family homotopic, " + std::to_string(cross) + " cross-family rejected";
  return o;
}

// Groebner soundness on random ideals.
Outcome c6() {
  Outcome o;
  std::mt19937 rng(6);
  const RingPtr rings[] = {Ring::base({"x"}), Ring::base({"x", "y"}), Ring::base({"x", "y", "z"})};
  int spolys = 0;
  for (int k = 0; k < 500; ++k) {
    const RingPtr& R = rings[k % 3];
    std::uniform_int_distribution<int> ng(1, 3);
    std::vector<Polynomial> gens;
    for (int g = ng(rng); g > 0; --g) gens.push_back(testing::random_nonzero(rng, R, 3, 4, 3));
    const ReducedBasis b = reduced_basis(R, gens, true);
    const auto& G = b.elements;
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        const Monomial l = G[i].leading_monomial().lcm(G[j].leading_monomial());
        Polynomial s = G[i].shifted(l / G[i].leading_monomial(), G[i].leading_coeff().inverse()) -
                       G[j].shifted(l / G[j].leading_monomial(), G[j].leading_coeff().inverse());
        ++spolys;
        if (!reduce(s, G).is_zero()) o.fail("S-polynomial does not reduce to zero");
      }
    for (std::size_t i = 0; i < G.size(); ++i) {
      Polynomial acc(R);
      for (std::size_t g = 0; g < b.generators.size(); ++g) acc += b.cofactors[i][g] * b.generators[g];
      if (!(acc == G[i])) o.fail("cofactor identity fails");
    }
    for (const auto& g : gens)
      if (!reduce(g, G).is_zero()) o.fail("generator not in the basis ideal");
  }
  if (o.pass) o.detail = "500 ideals, " + std::to_string(spolys) + " S-polynomials reduce to 0, cofactors exact";
  return o;
}

// Local principality against the monomial stalk oracle.
Outcome c7() {
  Outcome o;
  RingPtr RT = homotopy_ring(Ring::base({"x", "y"}));
  std::vector<Polynomial> monos;
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t b = 0; b <= 3; ++b)
      for (std::uint32_t c = 0; c <= 3; ++c) {
        Monomial m;
        m.exp[0] = a;
        m.exp[1] = b;
        m.exp[2] = c;
        monos.push_back(Polynomial::term(RT, m, Scalar(1)));
      }
  int pairs = 0, principal = 0;
  for (const auto& u : monos)
    for (const auto& v : monos) {
      const bool got = is_locally_principal_RT(u, v);
      ++pairs;
      principal += got;
      if (got != monomial_stalk_oracle(u, v)) o.fail("disagreement on " + u.to_string() + ", " + v.to_string());
    }
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs agree (" + std::to_string(principal) + " principal)";
  return o;
}

// Bounded single-link search.
Outcome c8() {
  Outcome o;
  RingPtr R = Ring::base({"x", "y"});
  const LocalElement r0 = L("x*(y^2+x)", R);
  const BlowupSpec spec = BlowupSpec::from_pairs({{1, 1}});
  const auto cands = probe_candidates(R, 3);
  if (probe_single_link(r0, L("x", R), L("x*(1+y)", R), spec, cands)) o.fail("found a link for the counterexample");
  std::optional<LocalElement> b;
  if (!probe_single_link(r0, L("x", R), L("x*(1+y^2)", R), spec, cands, &b)) o.fail("no link for the sibling x(1+y^2)");
  if (o.pass)
    o.detail = std::to_string(cands.size()) + " candidates: none for x(1+y), B = " + b->to_string() + " for x(1+y^2)";
  return o;
}

// Blowup validator.
Outcome c9() {
  Outcome o;
  const auto seqs = testing::realizable_sequences(5);
  for (const auto& s : seqs) {
    std::vector<BlowupPair> pairs;
    for (auto [a, b] : s) pairs.push_back({a, b});
    if (!validate_blowup(pairs).ok()) o.fail("rejected a realizable sequence of length " + std::to_string(s.size()));
  }
  const std::pair<const char*, BlowupViolation> bad[] = {{"invalid_non_coprime.json", BlowupViolation::kNotCoprime},
                                                         {"invalid_missing_one_one.json", BlowupViolation::kMissingOneOne},
                                                         {"invalid_unrealizable.json", BlowupViolation::kUnrealizable}};
  for (const auto& [file, why] : bad) {
    std::ifstream in(std::string(A1H_FIXTURES_DIR) + "/" + file);
    if (!in) {
      o.fail(std::string("missing fixture ") + file);
      continue;
    }
    const BlowupValidation v = resolve(instance_from_json(Json::parse(in))).blowup;
    if (v.ok() || v.violation != why) o.fail(std::string(file) + " not rejected as " + to_string(why));
  }
  if (o.pass) o.detail = std::to_string(seqs.size()) + " realizable sequences accepted, 3 fixtures rejected";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no limit
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "single-point counterexample", 1.0, c1},
      {2, "nodal counterexample", 5.0, c2},
      {3, "witness round trip (200 instances)", 120.0, c3},
      {4, "one-variable radical collapse", 0.0, c4},
      {5, "unit/full families", 0.0, c5},
      {6, "Groebner soundness (500 ideals)", 0.0, c6},
      {7, "local principality vs stalk oracle", 120.0, c7},
      {8, "bounded single-link probe", 0.0, c8},
      {9, "blowup validator", 0.0, c9},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      std::ostringstream m;
      m << "took " << secs << " s, limit " << c.limit_s << " s";
      o.fail(m.str());
    }
    failures += !o.pass;
    std::printf("criterion %d: %s  %-38s %8.3f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
