#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "a1h/errors.hpp"
#include "a1h/homotopy.hpp"
#include "a1h/parse.hpp"

namespace a1h {

using Json = nlohmann::json;

/// "num" or "(num)/(den)" with den a unit at the origin.
inline LocalElement parse_local(std::string_view text, const RingPtr& R) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != '/' || depth != 0) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == '(')
      return LocalElement(poly_parse(text.substr(0, i), R), poly_parse(text.substr(j), R));
  }
  return LocalElement(poly_parse(text, R));
}

struct SectionSpec {
  std::string kind;  // "alpha" | "beta"
  std::string value;
  friend bool operator==(const SectionSpec&, const SectionSpec&) = default;
};

/// On-disk problem instance; expressions are kept as text.
struct ProblemInstance {
  std::vector<std::string> variables;
  std::vector<BlowupPair> pairs;
  std::string r0;
  std::vector<SectionSpec> sections;
  Json options = Json::object();
  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

namespace detail {

inline const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(where) + ": missing field '" + key + "'", 0);
  return j.at(key);
}

inline std::string string_field(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw ParseError(std::string(where) + ": field '" + key + "' must be a string", 0);
  return v.get<std::string>();
}

}  // namespace detail

inline ProblemInstance instance_from_json(const Json& j) {
  ProblemInstance in;
  const Json& vars = detail::field(detail::field(j, "ring", "instance"), "variables", "ring");
  if (!vars.is_array() || vars.empty()) throw ParseError("ring.variables must be a non-empty array", 0);
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("ring.variables entries must be strings", 0);
    in.variables.push_back(v.get<std::string>());
  }
  const Json& pairs = detail::field(detail::field(j, "blowup", "instance"), "pairs", "blowup");
  if (!pairs.is_array()) throw ParseError("blowup.pairs must be an array", 0);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ParseError("blowup.pairs entries must be [a, b] integer pairs", 0);
    in.pairs.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
  in.r0 = detail::string_field(j, "r0", "instance");
  if (j.contains("sections")) {
    if (!j["sections"].is_array()) throw ParseError("sections must be an array", 0);
    for (const auto& s : j["sections"]) {
      SectionSpec sp{detail::string_field(s, "kind", "section"), detail::string_field(s, "value", "section")};
      if (sp.kind != "alpha" && sp.kind != "beta") throw ParseError("section kind must be 'alpha' or 'beta'", 0);
      in.sections.push_back(std::move(sp));
    }
  }
  if (j.contains("options")) {
    if (!j["options"].is_object()) throw ParseError("options must be an object", 0);
    in.options = j["options"];
  }
  return in;
}

inline Json to_json(const ProblemInstance& in) {
  Json pairs = Json::array();
  for (const auto& p : in.pairs) pairs.push_back({p.a, p.b});
  Json sections = Json::array();
  for (const auto& s : in.sections) sections.push_back({{"kind", s.kind}, {"value", s.value}});
  Json j = {{"ring", {{"variables", in.variables}}}, {"blowup", {{"pairs", pairs}}}, {"r0", in.r0}, {"sections", sections}};
  if (!in.options.empty()) j["options"] = in.options;
  return j;
}

inline Json to_json(const Section& s) {
  return {{"kind", s.kind() == SectionKind::kAlpha ? "alpha" : "beta"}, {"value", s.value().to_string()}};
}

/// Parsed instance. The blowup is kept as a validation result so callers
/// can report the violation.
struct ResolvedInstance {
  RingPtr ring;
  BlowupValidation blowup;
  LocalElement r0;
  std::vector<Section> sections;

  const BlowupSpec& spec() const {
    if (!blowup.ok()) throw DomainError("invalid blowup: " + blowup.message);
    return *blowup.spec;
  }
};

inline Section section_from(const SectionSpec& s, const RingPtr& R) {
  LocalElement v = parse_local(s.value, R);
  return s.kind == "alpha" ? Section::alpha(std::move(v)) : Section::beta(std::move(v));
}

inline ResolvedInstance resolve(const ProblemInstance& in) {
  for (const auto& v : in.variables)
    if (v == kHomotopyVar || v.empty() || v[0] == '_') throw DomainError("reserved variable name '" + v + "'");
  RingPtr R = Ring::base(in.variables);
  ResolvedInstance out{R, validate_blowup(in.pairs), parse_local(in.r0, R), {}};
  for (const auto& s : in.sections) out.sections.push_back(section_from(s, R));
  return out;
}

inline ProblemInstance canonical(const ProblemInstance& in) {
  ResolvedInstance r = resolve(in);
  ProblemInstance out = in;
  out.r0 = r.r0.to_string();
  for (std::size_t i = 0; i < r.sections.size(); ++i) {
    out.sections[i].value = r.sections[i].value().to_string();
    out.sections[i].kind = r.sections[i].kind() == SectionKind::kAlpha ? "alpha" : "beta";
  }
  return out;
}

inline Json to_json(const HomotopyLink& l) {
  return {{"p", l.p.to_string()}, {"q", l.q.to_string()}, {"reversed", l.reversed}};
}

inline Json links_to_json(const Witness& w) {
  Json a = Json::array();
  for (const auto& l : w.links) a.push_back(to_json(l));
  return a;
}

/// Accepts a bare link array, or an object with a "witness" array (a verdict).
inline std::vector<HomotopyLink> links_from_json(const Json& j, const RingPtr& base) {
  const Json* arr = &j;
  if (j.is_object()) arr = &detail::field(j, "witness", "witness file");
  if (!arr->is_array()) throw ParseError("witness must be an array of links", 0);
  RingPtr RT = homotopy_ring(base);
  std::vector<HomotopyLink> out;
  for (const auto& l : *arr) {
    HomotopyLink h{poly_parse(detail::string_field(l, "p", "link"), RT),
                   poly_parse(detail::string_field(l, "q", "link"), RT), false};
    if (l.contains("reversed")) {
      if (!l["reversed"].is_boolean()) throw ParseError("link.reversed must be a boolean", 0);
      h.reversed = l["reversed"].get<bool>();
    }
    out.push_back(std::move(h));
  }
  return out;
}

inline Json to_json(const Certificate& c) {
  auto strs = [](const auto& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
  };
  Json j = {{"reason", to_string(c.reason)}, {"message", c.message}, {"family1", c.family1}, {"family2", c.family2}};
  if (c.element) {
    j["element"] = c.element->to_string();
    j["generators"] = strs(c.generators);
    j["basis"] = strs(c.basis);
    j["normal_form"] = c.normal_form->to_string();
    j["colon_basis"] = strs(c.colon_basis);
  }
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j = {{"verdict", to_string(v.kind)}};
  if (v.witness) j["witness"] = links_to_json(*v.witness);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.kind == VerdictKind::kAllSectionsEquivalent) j["reason"] = v.reason;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["detail"] = c.detail;
    checks.push_back(e);
  }
  Json j = {{"ok", r.ok()}, {"checks", checks}};
  if (auto f = r.first_failure()) j["first_failure"] = f->name;
  return j;
}

inline Json to_json(const BlowupValidation& v) {
  Json j = {{"valid", v.ok()}};
  if (v.ok()) {
    Json pairs = Json::array();
    for (const auto& p : v.spec->pairs()) pairs.push_back({p.a, p.b});
    j["pairs"] = pairs;
  } else {
    j["violation"] = to_string(v.violation);
    j["message"] = v.message;
    if (v.offending) j["offending"] = {v.offending->a, v.offending->b};
  }
  return j;
}

inline Json to_json(const Configuration& c) {
  Json lines = Json::array();
  for (const auto& l : c.lines) lines.push_back({{"label", l.label}, {"pseudo_line", l.pseudo_line}});
  Json nodes = Json::array();
  for (const auto& i : c.intersections) {
    Json e = {{"lower", c.lines[i.lower].label}, {"upper", c.lines[i.upper].label}, {"is_node", i.is_node}};
    if (i.is_node) e["ideal"] = i.ideal_text();
    nodes.push_back(e);
  }
  return {{"lines", lines},
          {"intersections", nodes},
          {"pseudo_line_count", c.pseudo_line_count()},
          {"node_count", c.node_count()}};
}

}  // namespace a1h
