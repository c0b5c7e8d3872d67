#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/local_algebra.hpp"

namespace a1h {

/// Blowup parameter (a, b): the center ⟨x^a, y^b⟩, slope a/b.
struct BlowupPair {
  std::int64_t a = 0;
  std::int64_t b = 1;
  friend bool operator==(const BlowupPair&, const BlowupPair&) = default;
};

/// a/b < c/d, by cross-multiplication (b, d ≥ 0).
inline bool slope_less(const BlowupPair& p, const BlowupPair& q) { return p.a * q.b < q.a * p.b; }

/// det((c,d) over (a,b)) for the lower pair (a,b) and upper pair (c,d): c*b - d*a.
inline std::int64_t slope_det(const BlowupPair& lower, const BlowupPair& upper) {
  return upper.a * lower.b - upper.b * lower.a;
}

inline std::string to_string(const BlowupPair& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

enum class BlowupViolation {
  kNone,
  kInvalidPair,    // a < 0 or b <= 0
  kNotCoprime,
  kNotNormalized,  // a > b
  kMissingOneOne,
  kUnrealizable,
};

inline const char* to_string(BlowupViolation v) {
  switch (v) {
    case BlowupViolation::kNone: return "none";
    case BlowupViolation::kInvalidPair: return "invalid_pair";
    case BlowupViolation::kNotCoprime: return "not_coprime";
    case BlowupViolation::kNotNormalized: return "not_normalized";
    case BlowupViolation::kMissingOneOne: return "missing_one_one";
    case BlowupViolation::kUnrealizable: return "unrealizable";
  }
  return "unknown";
}

class BlowupSpec;
struct BlowupValidation;
BlowupValidation validate_blowup(std::vector<BlowupPair> pairs);

/// Validated, normalized nodal blowup data: pairs sorted by increasing slope.
/// Only `validate_blowup` constructs one.
class BlowupSpec {
 public:
  const std::vector<BlowupPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool is_single_point() const { return pairs_.size() == 1 && pairs_[0] == BlowupPair{1, 1}; }
  friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;

  /// Validates or throws DomainError naming the violation.
  static BlowupSpec from_pairs(std::vector<BlowupPair> pairs);

 private:
  friend BlowupValidation validate_blowup(std::vector<BlowupPair> pairs);
  explicit BlowupSpec(std::vector<BlowupPair> p) : pairs_(std::move(p)) {}
  std::vector<BlowupPair> pairs_;
};

struct BlowupValidation {
  std::optional<BlowupSpec> spec;
  BlowupViolation violation = BlowupViolation::kNone;
  std::optional<BlowupPair> offending;
  std::string message;
  bool ok() const { return spec.has_value(); }
};

namespace detail {

/// Greedy Stern-Brocot insertion from the seeds (0,1), (1,0). Returns the
/// first target that could not be reached, if any. `targets` is sorted.
inline std::optional<BlowupPair> first_unrealizable(const std::vector<BlowupPair>& targets) {
  std::vector<BlowupPair> chain{{0, 1}, {1, 0}};
  std::vector<bool> placed(targets.size(), false);
  std::size_t remaining = targets.size();
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const BlowupPair med{chain[k].a + chain[k + 1].a, chain[k].b + chain[k + 1].b};
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (placed[t] || !(targets[t] == med)) continue;
        chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(k) + 1, med);
        placed[t] = true;
        --remaining;
        progress = true;
        break;
      }
    }
  }
  for (std::size_t t = 0; t < targets.size(); ++t)
    if (!placed[t]) return targets[t];
  return std::nullopt;
}

}  // namespace detail

/// Checks, in order: b > 0 and a ≥ 0; gcd(a, b) = 1; a ≤ b; (1,1) present;
/// mediant realizability. The empty list (no blowup) is accepted.
inline BlowupValidation validate_blowup(std::vector<BlowupPair> pairs) {
  BlowupValidation out;
  auto reject = [&](BlowupViolation v, std::optional<BlowupPair> p, std::string msg) {
    out.violation = v;
    out.offending = p;
    out.message = std::move(msg);
    return out;
  };
  for (const auto& p : pairs)
    if (p.a < 0 || p.b <= 0)
      return reject(BlowupViolation::kInvalidPair, p, "pair " + to_string(p) + " needs a >= 0 and b > 0");
  for (const auto& p : pairs)
    if (std::gcd(p.a, p.b) != 1)
      return reject(BlowupViolation::kNotCoprime, p, "pair " + to_string(p) + " is not coprime");
  for (const auto& p : pairs)
    if (p.a > p.b)
      return reject(BlowupViolation::kNotNormalized, p, "pair " + to_string(p) + " has a > b");
  std::stable_sort(pairs.begin(), pairs.end(), slope_less);
  if (!pairs.empty() && std::find(pairs.begin(), pairs.end(), BlowupPair{1, 1}) == pairs.end())
    return reject(BlowupViolation::kMissingOneOne, std::nullopt, "pair (1,1) is missing");
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1])
      return reject(BlowupViolation::kUnrealizable, pairs[i], "pair " + to_string(pairs[i]) + " repeated");
  if (auto bad = detail::first_unrealizable(pairs))
    return reject(BlowupViolation::kUnrealizable, bad,
                  "pair " + to_string(*bad) + " is not a mediant of adjacent pairs");

  // Adjacent slopes of the completed chain are unimodular.
  BlowupPair prev{0, 1};
  for (std::size_t i = 0; i <= pairs.size(); ++i) {
    const BlowupPair cur = i < pairs.size() ? pairs[i] : BlowupPair{1, 0};
    if (slope_det(prev, cur) != 1)
      throw InternalError("validate_blowup: determinant condition fails at " + to_string(cur));
    prev = cur;
  }
  out.spec = BlowupSpec(std::move(pairs));
  return out;
}

inline BlowupSpec BlowupSpec::from_pairs(std::vector<BlowupPair> pairs) {
  auto v = validate_blowup(std::move(pairs));
  if (!v.ok()) throw DomainError("invalid blowup: " + v.message);
  return *v.spec;
}

/// Curve in the closed fiber configuration, indexed by slope.
struct ConfigLine {
  std::string label;         // "l_-inf", "l_0", "l_1/2", "l_inf"
  std::optional<BlowupPair> slope;  // empty for l_-inf; (1,0) for l_inf
  bool pseudo_line = true;   // l_-inf (the pole divisor of y) is not one
};

/// Meeting point of two slope-neighbors. A node when both are pseudo-lines;
/// its maximal ideal is ⟨x^{upper.a}/y^{upper.b}, y^{lower.b}/x^{lower.a}⟩.
struct ConfigIntersection {
  std::size_t lower = 0, upper = 0;  // indices into lines
  bool is_node = false;
  BlowupPair lower_exp, upper_exp;
  std::string ideal_text() const;
};

struct Configuration {
  std::vector<ConfigLine> lines;
  std::vector<ConfigIntersection> intersections;

  std::size_t pseudo_line_count() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const ConfigLine& l) { return l.pseudo_line; }));
  }
  std::size_t node_count() const {
    return static_cast<std::size_t>(std::count_if(intersections.begin(), intersections.end(),
                                                  [](const ConfigIntersection& i) { return i.is_node; }));
  }
  /// Dual graph: lines as vertices, intersections as edges (dashed if not a node).
  std::string to_dot() const;
};

namespace detail {

inline std::string power(const char* v, std::int64_t e) {
  if (e == 0) return "1";
  if (e == 1) return v;
  return std::string(v) + "^" + std::to_string(e);
}

}  // namespace detail

inline std::string ConfigIntersection::ideal_text() const {
  if (!is_node) return "";
  auto frac = [](const std::string& n, const std::string& d) { return d == "1" ? n : n + "/" + d; };
  return "<" + frac(detail::power("x", upper_exp.a), detail::power("y", upper_exp.b)) + ", " +
         frac(detail::power("y", lower_exp.b), detail::power("x", lower_exp.a)) + ">";
}

inline std::string Configuration::to_dot() const {
  std::string s = "graph configuration {\n";
  for (std::size_t i = 0; i < lines.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + lines[i].label + "\"" +
         (lines[i].pseudo_line ? "" : ", style=dashed") + "];\n";
  for (const auto& e : intersections) {
    s += "  n" + std::to_string(e.lower) + " -- n" + std::to_string(e.upper);
    if (e.is_node) s += " [label=\"" + e.ideal_text() + "\"]";
    else s += " [style=dashed]";
    s += ";\n";
  }
  return s + "}\n";
}

inline Configuration configuration(const BlowupSpec& spec) {
  Configuration c;
  c.lines.push_back({"l_-inf", std::nullopt, false});
  auto label = [](const BlowupPair& p) {
    if (p.b == 0) return std::string("l_inf");
    if (p.b == 1) return "l_" + std::to_string(p.a);
    return "l_" + std::to_string(p.a) + "/" + std::to_string(p.b);
  };
  std::vector<BlowupPair> chain{{0, 1}};
  chain.insert(chain.end(), spec.pairs().begin(), spec.pairs().end());
  chain.push_back({1, 0});
  for (const auto& p : chain) c.lines.push_back({label(p), p, true});
  for (std::size_t i = 0; i + 1 < c.lines.size(); ++i) {
    ConfigIntersection e;
    e.lower = i;
    e.upper = i + 1;
    e.is_node = c.lines[i].pseudo_line && c.lines[i + 1].pseudo_line;
    if (e.is_node) {
      e.lower_exp = *c.lines[i].slope;
      e.upper_exp = *c.lines[i + 1].slope;
      if (slope_det(e.lower_exp, e.upper_exp) != 1)
        throw InternalError("configuration: adjacent pseudo-lines fail the determinant condition");
    }
    c.intersections.push_back(e);
  }
  return c;
}

/// One factor ⟨r0^a, y^b⟩ of the pulled-back center, y kept formal.
struct CenterFactor {
  BlowupPair exponents;
  LocalElement r0_power;  // r0^a
  std::string to_string() const {
    return "<" + r0_power.to_string() + ", " + detail::power("y", exponents.b) + ">";
  }
};

inline LocalElement local_pow(const LocalElement& e, std::int64_t n) {
  LocalElement r = LocalElement::constant(e.ring(), 1);
  for (std::int64_t k = 0; k < n; ++k) r = r * e;
  return r;
}

inline void require_nondegenerate(const LocalElement& r0) {
  if (r0.is_zero() || is_unit(r0))
    throw DomainError("r0 must be a nonzero non-unit, got " + r0.to_string());
}

inline std::vector<CenterFactor> center_ideal(const BlowupSpec& spec, const LocalElement& r0) {
  require_nondegenerate(r0);
  std::vector<CenterFactor> out;
  for (const auto& p : spec.pairs()) out.push_back({p, local_pow(r0, p.a)});
  return out;
}

enum class SectionKind { kAlpha, kBeta };

/// Section of P^1 over the local base: Beta(r) is [Y:Z] = [r:1], Alpha(r) is
/// [Y:Z] = [1:r]. Beta of a unit is stored as Alpha of its inverse.
class Section {
 public:
  static Section alpha(LocalElement v) { return Section(SectionKind::kAlpha, std::move(v)); }
  static Section beta(LocalElement v) {
    if (is_unit(v)) return Section(SectionKind::kAlpha, LocalElement::constant(v.ring(), 1) / v);
    return Section(SectionKind::kBeta, std::move(v));
  }

  SectionKind kind() const { return kind_; }
  const LocalElement& value() const { return value_; }
  const RingPtr& ring() const { return value_.ring(); }

  /// Homogeneous coordinates (Y, Z).
  std::pair<LocalElement, LocalElement> point() const {
    LocalElement one = LocalElement::constant(ring(), 1);
    if (kind_ == SectionKind::kBeta) return {value_, one};
    return {one, value_};
  }

  /// Projective equality Y1*Z2 = Y2*Z1.
  friend bool operator==(const Section& s, const Section& t) {
    auto [y1, z1] = s.point();
    auto [y2, z2] = t.point();
    return y1 * z2 == y2 * z1;
  }

  std::string to_string() const {
    return std::string(kind_ == SectionKind::kAlpha ? "alpha(" : "beta(") + value_.to_string() + ")";
  }

 private:
  Section(SectionKind k, LocalElement v) : kind_(k), value_(std::move(v)) {}
  SectionKind kind_;
  LocalElement value_;
};

enum class FamilyTag { kUnit, kFull, kMiddle };

inline const char* to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::kUnit: return "unit";
    case FamilyTag::kFull: return "full";
    case FamilyTag::kMiddle: return "middle";
  }
  return "unknown";
}

struct Family {
  FamilyTag tag;
  std::optional<LocalElement> generator;  // MiddleFamily only

  std::string to_string() const {
    if (tag == FamilyTag::kMiddle) return "middle(" + generator->to_string() + ")";
    return a1h::to_string(tag);
  }
};

/// Family of a section relative to r0, read off the factor ⟨r0, y⟩.
inline Family classify_section(const Section& s, const LocalElement& r0) {
  require_nondegenerate(r0);
  if (s.kind() == SectionKind::kAlpha) return {FamilyTag::kUnit, std::nullopt};
  const LocalElement& r = s.value();
  if (local_divides(r0, r)) return {FamilyTag::kFull, std::nullopt};
  if (!r.is_zero() && local_divides(r, r0)) return {FamilyTag::kMiddle, r};
  throw UnliftableSection("section " + s.to_string() + " does not lift: <" + r0.to_string() + ", " +
                          r.to_string() + "> is not principal");
}

inline bool lifts_to_blowup(const Section& s, const LocalElement& r0, const BlowupSpec& spec) {
  require_nondegenerate(r0);
  if (s.kind() == SectionKind::kAlpha) return true;
  for (const auto& p : spec.pairs())
    if (!is_principal_local(local_pow(r0, p.a), local_pow(s.value(), p.b))) return false;
  return true;
}

enum class ClosedPointLocation { kL1MinusL2, kL2MinusL1, kL1CapL2 };

inline const char* to_string(ClosedPointLocation l) {
  switch (l) {
    case ClosedPointLocation::kL1MinusL2: return "L1\\L2";
    case ClosedPointLocation::kL2MinusL1: return "L2\\L1";
    case ClosedPointLocation::kL1CapL2: return "L1&L2";
  }
  return "unknown";
}

/// Where the lifted section sends the closed point, for the single-point
/// blowup only. L1 is the proper transform of the fiber, L2 the exceptional line.
inline ClosedPointLocation locate_closed_point(const Section& s, const LocalElement& r0,
                                               const BlowupSpec& spec) {
  if (!spec.is_single_point()) throw DomainError("locate_closed_point needs the single-point blowup [(1,1)]");
  switch (classify_section(s, r0).tag) {
    case FamilyTag::kUnit: return ClosedPointLocation::kL1MinusL2;
    case FamilyTag::kFull: return ClosedPointLocation::kL2MinusL1;
    case FamilyTag::kMiddle: return ClosedPointLocation::kL1CapL2;
  }
  throw InternalError("locate_closed_point: unknown family");
}

}  // namespace a1h
