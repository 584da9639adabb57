#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bolkit/catalog.hpp"
#include "bolkit/classification.hpp"
#include "bolkit/loops.hpp"
#include "bolkit/suites.hpp"

using namespace bolkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
  double tol = 0.0;
  std::string format = "text";
  std::string catalog_file;
  std::string out_file;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Report bodies depend only on the configuration; the timestamp lives in the
// header line alone.
int emit(const std::vector<VerificationReport>& reports, const Options& opt, const nlohmann::json& header_fields,
         const std::vector<std::string>& preface = {}) {
  const bool ok = all_pass(reports);
  if (opt.format == "json") {
    nlohmann::json header = header_fields;
    header["type"] = "header";
    header["timestamp"] = utc_timestamp();
    std::cout << header.dump() << '\n' << to_jsonl(reports);
  } else {
    for (const auto& line : preface) std::cout << line << '\n';
    int failed = 0;
    for (const auto& r : reports) {
      std::cout << to_text(r) << '\n';
      failed += r.pass ? 0 : 1;
    }
    std::cout << reports.size() << " checks, " << failed << " failed\n";
  }
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file, std::ios::app);
    if (!f) throw InputError("cannot open " + opt.out_file + " for appending");
    f << to_jsonl(reports);
  }
  return ok ? kExitPass : kExitFail;
}

nlohmann::json base_header(const Options& opt, const std::string& command) {
  nlohmann::json h;
  h["command"] = command;
  h["seed"] = opt.seed;
  h["samples"] = opt.samples;
  h["tolerance_override"] = opt.tol > 0 ? nlohmann::json(opt.tol) : nlohmann::json(nullptr);
  h["catalog"] = opt.catalog_file.empty() ? nlohmann::json("builtin") : nlohmann::json(opt.catalog_file);
  return h;
}

Catalog load_catalog(const Options& opt) {
  Catalog cat = Catalog::builtin();
  if (opt.catalog_file.empty()) return cat;
  std::ifstream in(opt.catalog_file);
  if (!in) throw InputError("cannot read catalog file " + opt.catalog_file);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("catalog file is not valid JSON: ") + e.what());
  }
  cat.merge_json(doc);
  return cat;
}

SuiteConfig make_config(const Options& opt, const Catalog& cat) {
  SuiteConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  if (opt.tol > 0) cfg.tol = opt.tol;
  cfg.catalog = &cat;
  return cfg;
}

Rational need(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(flag) + " expects p/q, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

int cmd_catalog_list(const Options& opt, bool as_json) {
  const Catalog cat = load_catalog(opt);
  if (as_json) {
    std::cout << cat.to_json().dump(2) << '\n';
    return kExitPass;
  }
  for (const auto& e : cat.list()) {
    std::cout << e.id << '\t' << to_string(e.kind);
    if (!e.algebra.empty()) std::cout << '\t' << e.algebra;
    std::cout << '\t' << e.tag << '\n';
  }
  return kExitPass;
}

struct ClassifyArgs {
  std::string family;
  std::string a, d, b3, c3, c2, m, h;
};

int cmd_classify(const ClassifyArgs& args, const Options& opt) {
  const Catalog cat = load_catalog(opt);
  std::vector<VerificationReport> reports;
  std::vector<std::string> lines;
  nlohmann::json header = base_header(opt, "classify " + args.family);

  auto report = [](std::string ctx, std::string check, bool pass, std::string detail, std::string tag) {
    VerificationReport r;
    r.context = std::move(ctx);
    r.check = std::move(check);
    r.samples = 1;
    r.pass = pass;
    r.max_residual = pass ? 0.0 : 1.0;
    r.tag = std::move(tag);
    r.detail = std::move(detail);
    return r;
  };

  if (args.family == "iso-psl2c") {
    const Rational a = need(args.a, "--a");
    const std::string ctx = "iso-psl2c(a=" + to_string(a) + ")";
    nlohmann::json sols = nlohmann::json::array();
    bool exact = true;
    lines.push_back("iso-psl2c a=" + to_string(a));
    for (const auto& s : solve_iso_psl2c(a)) {
      bool zero = true;
      for (const auto& r : s.residuals) zero = zero && r == 0;
      exact = exact && zero;
      std::ostringstream os;
      os << "b=" << to_string(s.b) << (s.admissible ? "  admissible" : "  excluded (|b| >= 1)") << "  witness (c1,c2,d1,d2)=("
         << to_string(s.witness[0]) << "," << to_string(s.witness[1]) << "," << to_string(s.witness[2]) << ","
         << to_string(s.witness[3]) << ")";
      lines.push_back(os.str());
      sols.push_back({{"b", to_string(s.b)},
                      {"admissible", s.admissible},
                      {"witness", {to_string(s.witness[0]), to_string(s.witness[1]), to_string(s.witness[2]),
                                   to_string(s.witness[3])}}});
    }
    auto r = report(ctx, "equation_system_solutions", exact, "back-substitution into all nine equations",
                    "isomorphism-systems");
    r.invariant = nlohmann::json{{"a", to_string(a)}, {"solutions", sols}};
    reports.push_back(r);
  } else if (args.family == "iso-semidirect") {
    const Rational b3 = need(args.b3, "--b3"), c3 = need(args.c3, "--c3"), c2 = need(args.c2, "--c2");
    auto s = solve_iso_semidirect(b3, c3, c2);
    const std::string d = s.d_exact ? to_string(*s.d_exact) : std::to_string(s.d);
    lines.push_back("representative m_(d,0,0) with d=" + d);
    auto r = report("iso-semidirect(" + to_string(b3) + "," + to_string(c3) + "," + to_string(c2) + ")",
                    "representative", s.gamma_verified && s.alpha_verified,
                    std::string(s.exact ? "exact" : "floating-point") + " verification of gamma and alpha",
                    "isomorphism-systems");
    r.max_residual = s.defect;
    r.invariant = nlohmann::json{{"d", d},
                                 {"d_exact", s.d_exact.has_value()},
                                 {"alpha_b2_b4", {s.alpha_b2_b4[0], s.alpha_b2_b4[1]}}};
    reports.push_back(r);
  } else if (args.family == "m_a" || args.family == "m_d") {
    const bool fam_a = args.family == "m_a";
    const Rational p = need(fam_a ? args.a : args.d, fam_a ? "--a" : "--d");
    const Subspace m = cat.bol_family(args.family, {p});
    const Subspace h = cat.subspace("h_sec4");
    const std::string ctx = args.family + "(" + to_string(p) + ")";
    auto v = test_complement(m, h);
    reports.push_back(report(ctx, "bol_complement", v.bol(), format_subspace(m), "semisimple-families"));
    auto c = compactness_check(derived_space(m));
    auto r = report(ctx, "derived_space_compact", true,
                    c.compact ? "compact: global loop" : "not compact: no global loop", "semisimple-families");
    r.invariant = nlohmann::json{{"compact", c.compact},
                                 {"inertia", {c.inertia.positive, c.inertia.negative, c.inertia.zero}}};
    if (c.witness) (*r.invariant)["witness"] = format_vector(*m.algebra(), *c.witness);
    reports.push_back(r);
    auto inv = angle_invariant(m, cat.bol_family("m_a", {Rational(0)}));
    auto ri = report(ctx, "angle_invariant_vs_m_a(0)", true, "", "semisimple-families");
    ri.invariant = inv.to_json();
    reports.push_back(ri);
  } else if (args.family == "m_b3c3c2") {
    const Rational b3 = need(args.b3, "--b3"), c3 = need(args.c3, "--c3"), c2 = need(args.c2, "--c2");
    const Subspace m = cat.bol_family("m_b3c3c2", {b3, c3, c2});
    const std::string ctx = "m_b3c3c2(" + to_string(b3) + "," + to_string(c3) + "," + to_string(c2) + ")";
    auto v = test_complement(m, cat.subspace("h_sec7_f"));
    reports.push_back(report(ctx, "bol_complement", v.bol(), format_subspace(m), "semidirect-family"));
    const bool inside = b3 * b3 + c3 * c3 < 1;
    reports.push_back(report(ctx, "globality", true,
                             inside ? "b3^2 + c3^2 < 1: global loop" : "b3^2 + c3^2 > 1: local loop only",
                             "semidirect-family"));
    if (inside) {
      auto s = solve_iso_semidirect(b3, c3, c2);
      const std::string d = s.d_exact ? to_string(*s.d_exact) : std::to_string(s.d);
      lines.push_back("isomorphic to m_(d,0,0) with d=" + d);
      reports.push_back(report(ctx, "representative", s.gamma_verified && s.alpha_verified, "d=" + d,
                               "isomorphism-systems"));
    }
    auto inv = angle_invariant(m, cat.bol_family("m_b3c3c2", {Rational(0), Rational(0), Rational(0)}));
    auto ri = report(ctx, "angle_invariant_vs_m000", true, "", "semidirect-family");
    ri.invariant = inv.to_json();
    reports.push_back(ri);
  } else if (args.family == "lemma3" || args.family == "grading") {
    if (args.m.empty() || args.h.empty()) throw InputError("--m and --h are required");
    const Subspace m = cat.subspace(args.m), h = cat.subspace(args.h);
    const std::string ctx = args.m + " vs " + args.h;
    if (args.family == "lemma3") {
      auto v = lemma3_obstruction(m, h);
      std::string detail = v.conflict ? "conflict " + v.signature + ": " + format_vector(*m.algebra(), *v.witness_m) +
                                            " in m, " + format_vector(*m.algebra(), *v.witness_h) + " in h"
                                      : "no conflict found";
      auto r = report(ctx, "conjugacy_obstruction", true, detail, "conjugacy-obstruction");
      r.invariant = nlohmann::json{{"conflict", v.conflict}};
      reports.push_back(r);
    } else {
      auto g = bruck_grading(m, h);
      auto r = report(ctx, "bruck_grading", true, g.all() ? "graded" : "not graded", "bruck-left-a");
      r.invariant = nlohmann::json{{"hh_in_h", g.hh_in_h}, {"hm_in_m", g.hm_in_m}, {"mm_in_h", g.mm_in_h}};
      if (g.witness)
        (*r.invariant)["witness"] = "[" + format_vector(*m.algebra(), g.witness->left) + ", " +
                                    format_vector(*m.algebra(), g.witness->right) +
                                    "] = " + format_vector(*m.algebra(), g.witness->bracket);
      reports.push_back(r);
    }
  } else {
    throw LookupError("unknown classification family '" + args.family + "'");
  }
  return emit(reports, opt, header, lines);
}

int cmd_report(const std::vector<std::string>& paths, const Options& opt) {
  std::vector<VerificationReport> reports;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        auto j = nlohmann::json::parse(line);
        if (j.value("type", "") == "header") continue;
        reports.push_back(report_from_json(j));
      } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  Options quiet = opt;
  quiet.out_file.clear();
  return emit(reports, quiet, base_header(opt, "report"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bol loop and Lie triple system verification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "Random seed")->envname("BOLKIT_SEED");
  app.add_option("--samples", opt.samples, "Samples per sampled check")->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "Tolerance override for numerical checks")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--catalog", opt.catalog_file, "Custom catalog JSON merged into the built-in one")
      ->check(CLI::ExistingFile);
  app.add_option("--out", opt.out_file, "Append JSONL reports to this file");

  auto* catalog = app.add_subcommand("catalog", "Catalog operations");
  catalog->require_subcommand(1);
  bool list_json = false;
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  list->add_flag("--json", list_json, "Emit JSON");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Verify one catalog entry or loop");
  verify->add_option("target", target, "Catalog id or loop id (L0, scheerer, pseudo-euclidean, nonbol)")->required();

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "Classification helpers");
  classify->set_help_flag("--help", "Print this help message and exit");
  classify
      ->add_option("family", cls.family,
                   "iso-psl2c, iso-semidirect, m_a, m_d, m_b3c3c2, lemma3 or grading")
      ->required();
  classify->add_option("--a", cls.a);
  classify->add_option("--d", cls.d);
  classify->add_option("--b3", cls.b3);
  classify->add_option("--c3", cls.c3);
  classify->add_option("--c2", cls.c2);
  classify->add_option("--m", cls.m, "Triple system id");
  classify->add_option("--h", cls.h, "Stabilizer id");

  std::string suite_id;
  auto* suite = app.add_subcommand("suite", "Run a verification suite");
  suite->add_option("id", suite_id, "Suite id")->required();

  std::vector<std::string> paths;
  auto* report = app.add_subcommand("report", "Summarise JSONL report files");
  report->add_option("paths", paths, "Report files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) return cmd_catalog_list(opt, list_json);
    if (*verify) {
      const Catalog cat = load_catalog(opt);
      return emit(verify_target(target, make_config(opt, cat)), opt, base_header(opt, "verify " + target));
    }
    if (*classify) return cmd_classify(cls, opt);
    if (*suite) {
      if (!has_suite(suite_id)) throw LookupError("unknown suite '" + suite_id + "'");
      const Catalog cat = load_catalog(opt);
      nlohmann::json header = base_header(opt, "suite " + suite_id);
      header["suite"] = suite_id;
      return emit(run_suite(suite_id, make_config(opt, cat)), opt, header);
    }
    if (*report) return cmd_report(paths, opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
