#include "gompf/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "gompf/battery.hpp"
#include "gompf/combing.hpp"
#include "gompf/document.hpp"
#include "gompf/errors.hpp"
#include "gompf/framed.hpp"
#include "gompf/image.hpp"
#include "gompf/modification.hpp"
#include "gompf/surgery.hpp"
#include "gompf/theta.hpp"

namespace gompf::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::size_t cap = 10000;
  std::size_t box = 8;
  std::uint64_t seed = 0;
  int sign = 1;
  std::string c0 = "1";
  std::string kind;
  int eta = 1;
  std::string lk_euler = "0";
  std::string lk_par = "0";
  std::string r = "0";
  std::string k = "0";
  std::string p1;
};

const std::vector<std::string> kCommands = {
    "homology",     "linking-form", "theta-g",     "p1",         "spinc-equal",   "combing-equal",
    "orbit-modulus", "hf-grading",  "image-p1",    "parity",     "framed-total",  "framed-class",
    "pontrjagin-p1", "stabilize",   "modify",      "theta",      "verify",
};

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
}

Integer integer_flag(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
}

const CombingEntry& need_combing(const std::optional<CombingEntry>& c, const char* key) {
  if (!c) throw ParseError(std::string("document: command needs '") + key + "'");
  return *c;
}

CombingSpec to_spec(const SurgeryPresentation& p, const CombingEntry& e) {
  return CombingSpec{p, e.c, e.gamma};
}

FramedLinkData to_framed(const Document& doc) {
  if (!doc.framed) throw ParseError("document: command needs 'framed'");
  return FramedLinkData{doc.framed->lambda_matrix, doc.framed->classes};
}

Rational p1_input(const Options& opt, const Document& doc, const SurgeryPresentation& p) {
  if (!opt.p1.empty()) return rational_flag("p1", opt.p1);
  return p1(to_spec(p, need_combing(doc.combing, "combing"))).value;
}

Modification modification_from(const Options& opt) {
  if (opt.kind == "D")
    return DModification{opt.eta, rational_flag("lk-euler", opt.lk_euler), rational_flag("lk-par", opt.lk_par)};
  if (opt.kind == "global-Z") return GlobalZModification{rational_flag("lk-par", opt.lk_par)};
  if (opt.kind == "r-twist") return RTwistModification{integer_flag("r", opt.r), opt.eta};
  if (opt.kind == "half-twist") return HalfTwistModification{integer_flag("k", opt.k)};
  throw ParseError("--kind must be one of D, global-Z, r-twist, half-twist");
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Returns the text to print. Throws ParseError / DomainError.
std::string execute(const Options& opt, std::istream& in, int& exit_code) {
  exit_code = kOk;
  if (opt.command == "verify") {
    json checks = json::array();
    std::size_t passed = 0, failed = 0;
    for (const auto& t : run_battery(opt.seed)) {
      checks.push_back(json{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
      passed += t.passed;
      failed += t.failed;
    }
    if (failed != 0) exit_code = kVerifyFailed;
    return json{{"seed", opt.seed}, {"checks", checks}, {"passed", passed}, {"failed", failed}}.dump(2) + "\n";
  }

  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(opt.input);
    if (!file) throw ParseError("cannot open input file '" + opt.input + "'");
    text = read_all(file);
  }
  const Document doc = parse_document(text);
  const SurgeryPresentation pres(doc.linking_matrix);
  json out;

  if (opt.command == "homology") {
    const HomologySummary h = homology_summary(pres);
    json kernel = json::array();
    for (const auto& z : h.kernel_basis) kernel.push_back(vector_json(z));
    out = json{{"invariant_factors", vector_json(h.invariant_factors)},
               {"betti_1", h.betti_1},
               {"dim_h1_mod2", h.dim_h1_mod2},
               {"torsion_order", integer_json(h.torsion_order)},
               {"kernel_basis", kernel}};
  } else if (opt.command == "linking-form") {
    if (doc.meridian_class) {
      const MeridianClass v{*doc.meridian_class};
      out = json{{"class", vector_json(v.v)},
                 {"pairing", to_string(meridian_pairing(pres, v, v))},
                 {"linking_form", linking_form(pres, v).to_string()}};
    } else {
      json rows = json::array();
      for (const auto& [v, ell] : enumerate_torsion(pres, opt.cap))
        rows.push_back(json{{"class", vector_json(v.v)}, {"linking_form", ell.to_string()}});
      out = json{{"torsion", rows}};
    }
  } else if (opt.command == "theta-g") {
    out = json{{"theta_g", to_string(theta_g(pres, need_combing(doc.combing, "combing").c))}};
  } else if (opt.command == "p1") {
    out = json{{"p1", to_string(p1(to_spec(pres, need_combing(doc.combing, "combing"))).value)}};
  } else if (opt.command == "spinc-equal") {
    out = json{{"spin_c_equal", spin_c_equal(pres, need_combing(doc.combing, "combing").c,
                                             need_combing(doc.second_combing, "second_combing").c)}};
  } else if (opt.command == "combing-equal") {
    out = json{{"combing_equal",
                combing_equal(to_spec(pres, need_combing(doc.combing, "combing")),
                              to_spec(pres, need_combing(doc.second_combing, "second_combing")))}};
  } else if (opt.command == "orbit-modulus") {
    out = json{{"orbit_modulus",
                integer_json(gamma_orbit_modulus(pres, need_combing(doc.combing, "combing").c))}};
  } else if (opt.command == "hf-grading") {
    out = json{{"hf_grading", to_string(hf_grading(to_spec(pres, need_combing(doc.combing, "combing"))))}};
  } else if (opt.command == "image-p1") {
    const P1ImageReport r = p1_image(pres, opt.cap, opt.box);
    json formula = json::array(), enumerated = json::array();
    for (const auto& m : r.formula_side) formula.push_back(m.to_string());
    for (const auto& m : r.enumeration_side) enumerated.push_back(m.to_string());
    out = json{{"formula_side", formula},
               {"enumeration_side", enumerated},
               {"check", r.status()},
               {"threshold_reached", r.threshold_reached},
               {"box", opt.box},
               {"vectors_enumerated", r.vectors_enumerated}};
  } else if (opt.command == "parity") {
    const CombingSpec ref = reference_parallelization(pres);
    out = json{{"parity", parity_check(pres)},
               {"reference_c", vector_json(ref.c)},
               {"p1_reference", to_string(p1(ref).value)}};
  } else if (opt.command == "framed-total") {
    const FramedLinkData f = to_framed(doc);
    validate_framed(f);
    out = json{{"total_self_linking", to_string(total_self_linking(f))}};
  } else if (opt.command == "framed-class") {
    const FramedCobordismClass cls = cobordism_class(to_framed(doc), pres);
    out = json{{"homology", vector_json(cls.homology.v)}, {"total", to_string(cls.total)}};
  } else if (opt.command == "pontrjagin-p1") {
    const Rational tau =
        opt.p1.empty() ? p1(reference_parallelization(pres)).value : rational_flag("p1", opt.p1);
    out = json{{"p1_tau", to_string(tau)}, {"p1", to_string(pontrjagin_p1(tau, to_framed(doc), pres))}};
  } else if (opt.command == "stabilize") {
    const CombingSpec x = to_spec(pres, need_combing(doc.combing, "combing"));
    const CombingSpec y = stabilize(x, opt.sign, integer_flag("c0", opt.c0));
    Document next;
    next.linking_matrix = y.presentation.linking_matrix();
    next.combing = CombingEntry{y.c, y.gamma_offset};
    return emit_document(next);
  } else if (opt.command == "modify") {
    const Modification m = modification_from(opt);
    const P1Value before{p1_input(opt, doc, pres)};
    out = json{{"kind", opt.kind},
               {"p1_before", to_string(before.value)},
               {"p1_after", to_string(apply_modification(before, m).value)}};
  } else if (opt.command == "theta") {
    if (!doc.lambda) throw ParseError("document: command needs 'lambda'");
    const Rational p = p1_input(opt, doc, pres);
    out = json{{"lambda", to_string(*doc.lambda)},
               {"p1", to_string(p)},
               {"theta", to_string(theta_invariant({*doc.lambda, p}))}};
  }
  return out.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Homotopy invariants of combings of surgered 3-manifolds", "gompf"};
  app.add_option("command", opt.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--input", opt.input, "Input document (default: stdin)");
  app.add_option("--output", opt.output, "Output file (default: stdout)");
  app.add_option("--cap", opt.cap, "Largest torsion subgroup to enumerate")->capture_default_str();
  app.add_option("--box", opt.box, "Coefficient bound |c_i| for image-p1 enumeration")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for verify")->capture_default_str();
  app.add_option("--sign", opt.sign, "Framing of the stabilizing unknot (+1/-1)")->capture_default_str();
  app.add_option("--c0", opt.c0, "Odd c-coefficient on the stabilizing unknot")->capture_default_str();
  app.add_option("--kind", opt.kind, "Modification: D, global-Z, r-twist, half-twist");
  app.add_option("--eta", opt.eta, "Orientation sign η")->capture_default_str();
  app.add_option("--lk-euler", opt.lk_euler, "lk(L, L(Z ⊂ X⊥)) for kind D")->capture_default_str();
  app.add_option("--lk-par", opt.lk_par, "lk(L, L∥) for kinds D and global-Z")->capture_default_str();
  app.add_option("--r", opt.r, "Twist count for r-twist")->capture_default_str();
  app.add_option("--k", opt.k, "Half-twist count")->capture_default_str();
  app.add_option("--p1", opt.p1, "Use this p_1 instead of the document's combing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kOk : kParseError;
  }

  try {
    int code = kOk;
    const std::string text = execute(opt, in, code);
    if (opt.output.empty() || opt.output == "-") {
      out << text;
    } else {
      std::ofstream file(opt.output);
      if (!file) throw ParseError("cannot open output file '" + opt.output + "'");
      file << text;
    }
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << to_string(e.kind());
    if (e.index()) err << " at index " << *e.index();
    err << ": " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace gompf::cli
