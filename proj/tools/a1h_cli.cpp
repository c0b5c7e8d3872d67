// Command-line front end: reads JSON instances, prints verdicts and reports.
// Exit codes: 0 success (any verdict), 1 invalid input, 2 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "a1h/a1h.hpp"

namespace {

using namespace a1h;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance, witness, demo;
  bool json = false, dvr = false;
};

Json read_json_file(const std::string& path, const char* what) {
  if (path.empty()) throw InvalidInput(std::string("missing --") + what + " <path>");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + std::string(what) + " file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int error_out(const std::string& type, const std::string& msg, int code) {
  emit({{"error", {{"type", type}, {"message", msg}}}});
  return code;
}

ResolvedInstance load(const Options& o) { return resolve(instance_from_json(read_json_file(o.instance, "instance"))); }

void need_two_sections(const ResolvedInstance& r) {
  if (r.sections.size() != 2) throw InvalidInput("instance needs exactly 2 sections, found " + std::to_string(r.sections.size()));
}

bool use_dvr(const Options& o, const ProblemInstance& in) {
  return o.dvr || (in.options.contains("dvr") && in.options["dvr"].is_boolean() && in.options["dvr"].get<bool>());
}

Verdict run_decide(const Options& o, const ProblemInstance& in, const ResolvedInstance& r) {
  r.spec();
  need_two_sections(r);
  if (use_dvr(o, in)) return dvr_decide(r.r0, r.sections[0], r.sections[1], r.spec());
  return decide(r.r0, r.sections[0], r.sections[1], r.spec());
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  ResolvedInstance r = load(o);
  Json j = to_json(r.blowup);
  if (r.blowup.ok()) j["configuration"] = to_json(configuration(*r.blowup.spec));
  if (o.json) {
    emit(j);
  } else if (r.blowup.ok()) {
    const Configuration c = configuration(*r.blowup.spec);
    std::cout << "valid: " << c.pseudo_line_count() << " pseudo-lines, " << c.node_count() << " nodes\n";
    for (const auto& i : c.intersections)
      if (i.is_node) std::cout << "  node " << c.lines[i.lower].label << " & " << c.lines[i.upper].label << ": " << i.ideal_text() << "\n";
  } else {
    std::cout << "invalid (" << to_string(r.blowup.violation) << "): " << r.blowup.message << "\n";
  }
  return r.blowup.ok() ? 0 : 1;
}

int cmd_configuration(const Options& o) {
  ResolvedInstance r = load(o);
  const Configuration c = configuration(r.spec());
  if (o.json) emit(to_json(c));
  else std::cout << c.to_dot();
  return 0;
}

int cmd_classify(const Options& o) {
  ResolvedInstance r = load(o);
  Json out = Json::array();
  for (const auto& s : r.sections) {
    Json e = {{"section", s.to_string()}};
    try {
      e["family"] = classify_section(s, r.r0).to_string();
    } catch (const UnliftableSection& ex) {
      e["family"] = nullptr;
      e["error"] = ex.what();
    }
    if (r.blowup.ok() && r.blowup.spec->is_single_point() && !e["family"].is_null())
      e["closed_point"] = to_string(locate_closed_point(s, r.r0, *r.blowup.spec));
    out.push_back(e);
  }
  if (o.json) {
    emit({{"sections", out}});
  } else {
    for (const auto& e : out)
      std::cout << e["section"].get<std::string>() << ": "
                << (e["family"].is_null() ? "unliftable" : e["family"].get<std::string>())
                << (e.contains("closed_point") ? "  (closed point in " + e["closed_point"].get<std::string>() + ")" : "")
                << "\n";
  }
  return 0;
}

int cmd_lift_check(const Options& o) {
  ResolvedInstance r = load(o);
  Json out = Json::array();
  bool all = true;
  for (const auto& s : r.sections) {
    const bool ok = lifts_to_blowup(s, r.r0, r.spec());
    all = all && ok;
    out.push_back({{"section", s.to_string()}, {"lifts", ok}});
  }
  if (o.json) {
    emit({{"sections", out}, {"all_lift", all}});
  } else {
    for (const auto& e : out)
      std::cout << e["section"].get<std::string>() << ": " << (e["lifts"].get<bool>() ? "lifts" : "does not lift") << "\n";
  }
  return 0;
}

int cmd_decide(const Options& o) {
  ProblemInstance in = instance_from_json(read_json_file(o.instance, "instance"));
  ResolvedInstance r = resolve(in);
  emit(to_json(run_decide(o, in, r)));
  return 0;
}

int cmd_witness(const Options& o) {
  ProblemInstance in = instance_from_json(read_json_file(o.instance, "instance"));
  ResolvedInstance r = resolve(in);
  Verdict v = run_decide(o, in, r);
  emit(to_json(v));
  return v.kind == VerdictKind::kHomotopic ? 0 : 1;
}

int cmd_verify(const Options& o) {
  ResolvedInstance r = load(o);
  r.spec();
  need_two_sections(r);
  Witness w{links_from_json(read_json_file(o.witness, "witness"), r.ring), r.sections[0], r.sections[1]};
  VerificationReport rep = verify_witness(w, r.r0, r.spec(), r.sections[0], r.sections[1]);
  emit(to_json(rep));
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Demos

const char* kSinglePoint = R"json({"ring":{"variables":["x","y"]},"blowup":{"pairs":[[1,1]]},"r0":"x*(y^2+x)",
  "sections":[{"kind":"beta","value":"x"},{"kind":"beta","value":"x*(1+y)"}]})json";
const char* kNodal = R"json({"ring":{"variables":["x","y"]},"blowup":{"pairs":[[1,2],[1,1]]},"r0":"x^2*(y^2+x)",
  "sections":[{"kind":"beta","value":"x"},{"kind":"beta","value":"x*(1+y)"}]})json";

std::string ideal_text(const std::vector<Polynomial>& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
  return s + ">";
}

int demo_counterexample(const char* text, const Options& o) {
  ResolvedInstance r = resolve(instance_from_json(Json::parse(text)));
  const Section &s1 = r.sections[0], &s2 = r.sections[1];
  Verdict v = decide(r.r0, s1, s2, r.spec());
  const LocalElement rp = local_quotient(r.r0, s1.value());
  // Variables in √⟨r1, r'⟩; all of them means it is the maximal ideal.
  std::vector<Polynomial> in_radical;
  for (const auto& name : r.ring->variables()) {
    LocalElement var(Polynomial::variable(r.ring, name));
    if (local_radical_member(var, {s1.value(), rp})) in_radical.push_back(var.num());
  }
  if (o.json) {
    Json j = to_json(v);
    j["lifts"] = {lifts_to_blowup(s1, r.r0, r.spec()), lifts_to_blowup(s2, r.r0, r.spec())};
    j["radical_of_sum_contains"] = Json::array();
    for (const auto& p : in_radical) j["radical_of_sum_contains"].push_back(p.to_string());
    emit(j);
    return 0;
  }
  std::cout << "r0 = " << r.r0 << ", blowup " << to_json(r.blowup)["pairs"].dump() << "\n"
            << "sections " << s1.to_string() << ", " << s2.to_string() << " lift: "
            << (lifts_to_blowup(s1, r.r0, r.spec()) && lifts_to_blowup(s2, r.r0, r.spec()) ? "yes" : "no") << "\n"
            << "r' = r0/r1 = " << rp << "\n"
            << "verdict: " << to_string(v.kind) << "\n";
  if (v.certificate && v.certificate->element) {
    const Certificate& c = *v.certificate;
    std::cout << "  tested r2/r1 - 1 = " << *c.element << "\n"
              << "  sqrt<r1> + sqrt<r'> = " << ideal_text(c.basis) << "\n"
              << "  normal form of " << *c.element << ": " << *c.normal_form << " (nonzero)\n"
              << (in_radical.size() == r.ring->arity() ? "  sqrt<r1, r'> = " + ideal_text(in_radical) + " (maximal ideal)"
                                                       : "  sqrt<r1, r'> contains " + ideal_text(in_radical))
              << "\n";
  }
  return 0;
}

int demo_dvr(const Options& o) {
  RingPtr R = Ring::base({"x"});
  const Polynomial x = Polynomial::variable(R, "x");
  const BlowupSpec spec = BlowupSpec::from_pairs({{1, 1}});
  int instances = 0, identity_ok = 0, verdicts = 0, homotopic = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    const LocalElement r0(x.pow(n));
    for (unsigned i = 1; i < n; ++i) {
      const LocalElement r1(x.pow(i));
      identity_ok += dvr_identity_holds(r1, local_quotient(r0, r1));
      ++instances;
      for (long c : {0L, 1L, -1L, 2L}) {
        const LocalElement r2(x.pow(i) * (Polynomial::constant(R, 1) + x.scaled(Scalar(c))));
        Verdict v = dvr_decide(r0, Section::beta(r1), Section::beta(r2), spec);
        ++verdicts;
        homotopic += v.kind == VerdictKind::kHomotopic;
      }
    }
  }
  if (o.json) {
    emit({{"instances", instances}, {"identity_holds", identity_ok}, {"verdicts", verdicts}, {"homotopic", homotopic}});
  } else {
    std::cout << "sqrt<r1> + sqrt<r'> = sqrt<r1, r'> held on " << identity_ok << "/" << instances
              << " pairs r1 | r0 = x^n (n <= 6)\n"
              << "both criteria agreed on " << verdicts << "/" << verdicts << " decisions (" << homotopic
              << " homotopic)\n";
  }
  return identity_ok == instances ? 0 : 2;
}

int cmd_demo(const Options& o) {
  if (o.demo == "single-point-counterexample") return demo_counterexample(kSinglePoint, o);
  if (o.demo == "nodal-counterexample") return demo_counterexample(kNodal, o);
  if (o.demo == "dvr-collapse") return demo_dvr(o);
  throw InvalidInput("unknown demo '" + o.demo +
                     "' (expected single-point-counterexample, nodal-counterexample, dvr-collapse)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide naive A1-chain homotopy of sections over nodal blowups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--instance", o.instance, "problem instance (JSON)");
  app.add_option("--witness", o.witness, "witness file (JSON)");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--dvr", o.dvr, "one-variable mode: cross-check both radical criteria");

  std::function<int(const Options&)> run;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    return app.add_subcommand(name, help)->callback([&run, fn] { run = fn; });
  };
  sub("validate", "check the blowup data and print the configuration", cmd_validate);
  sub("configuration", "print the fiber configuration (DOT, or JSON with --json)", cmd_configuration);
  sub("classify", "family of each section", cmd_classify);
  sub("lift-check", "whether each section lifts to the blowup", cmd_lift_check);
  sub("decide", "verdict for the two sections (JSON)", cmd_decide);
  sub("witness", "homotopy witness, or exit 1 with the certificate", cmd_witness);
  sub("verify", "check a witness file against the instance", cmd_verify);
  sub("demo", "run a canned example", cmd_demo)->add_option("name", o.demo, "demo name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return run(o);
  } catch (const InvalidInput& e) {
    return error_out("invalid_input", e.what(), 1);
  } catch (const ParseError& e) {
    return error_out("parse_error", e.what(), 1);
  } catch (const UnliftableSection& e) {
    return error_out("unliftable_section", e.what(), 1);
  } catch (const InternalError& e) {
    return error_out("internal_error", e.what(), 2);
  } catch (const a1h::Error& e) {
    return error_out("domain_error", e.what(), 1);
  } catch (const std::exception& e) {
    return error_out("internal_error", e.what(), 2);
  }
}
