// negabent: analyze, construct and verify negabent / bent-negabent Boolean functions.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "negabent/boolfun.hpp"
#include "negabent/bridge.hpp"
#include "negabent/io.hpp"
#include "negabent/mm.hpp"
#include "negabent/monomials.hpp"
#include "negabent/spectra.hpp"
#include "negabent/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace negabent;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string field;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  std::string format = "json";
  std::string command_line;
};

ordered_json report_header(const Globals& g, const std::string& command) {
  ordered_json j;
  j["report_v"] = 1;
  j["command"] = command;
  j["argv"] = g.command_line;
  j["seed"] = g.seed;
  return j;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty())
    std::cout << text;
  else
    write_text_file(g.out, text);
}

FieldCtx field_for(const Globals& g, std::optional<int> degree) {
  if (!g.field.empty()) {
    const FieldSpec spec = FieldSpec::parse(g.field);
    if (degree && spec.n != *degree)
      throw UsageError("--field " + g.field + " has degree " + std::to_string(spec.n) + ", expected " +
                       std::to_string(*degree));
    return FieldCtx::make(spec);
  }
  if (!degree) throw UsageError("a field is required (--field or a size flag)");
  return FieldCtx::make(*degree);
}

ordered_json function_summary(const BooleanFunction& f) {
  const WalshSpectrum w = walsh(f);
  const NegaSpectrum h = nega(f);
  const bool bent = f.num_vars() % 2 == 0 && flatness_violations(w).empty();
  const bool negabent = flatness_violations(h).empty();
  ordered_json j;
  j["n"] = f.num_vars();
  j["weight"] = f.weight();
  j["degree"] = f.is_constant() && f.weight() == 0 ? ordered_json(nullptr) : ordered_json(degree(f));
  j["balanced"] = f.is_balanced();
  j["bent"] = bent;
  j["negabent"] = negabent;
  j["bent_negabent"] = bent && negabent;
  j["walsh_max_abs_sq"] = max_abs_sq(w);
  j["walsh_flatness_violations"] = flatness_violations(w).size();
  j["nega_max_norm"] = max_abs_sq(h);
  j["nega_flatness_violations"] = flatness_violations(h).size();
  return j;
}

std::string csv_bool(bool b) { return b ? "1" : "0"; }

// ---------------------------------------------------------------------------

int cmd_analyze(const Globals& g, const std::string& path, const std::string& spectra) {
  const TruthTableFile file = parse_truth_table(read_text_file(path));
  if (!g.field.empty()) {
    const FieldSpec want = FieldSpec::parse(g.field);
    if (!(want.n == file.field.n && want.modulus == file.field.modulus))
      throw FormatError("file field " + file.field.to_string() + " differs from --field " + want.to_string());
  }
  FieldCtx::make(file.field);  // rejects reducible moduli in the header

  ordered_json j = report_header(g, "analyze");
  j["input"] = path;
  j["field"] = file.field.to_string();
  j["function"] = function_summary(file.f);
  if (spectra == "csv") {
    const std::string base = g.out.empty() ? path : g.out;
    write_text_file(base + ".walsh.csv", spectrum_csv(walsh(file.f)));
    write_text_file(base + ".nega.csv", spectrum_csv(nega(file.f)));
    j["spectra"] = {{"walsh", base + ".walsh.csv"}, {"nega", base + ".nega.csv"}};
  }
  if (g.format == "csv") {
    const auto& s = j["function"];
    std::ostringstream os;
    os << "n,weight,degree,bent,negabent\n"
       << s["n"] << ',' << s["weight"] << ',' << (s["degree"].is_null() ? std::string("-inf") : s["degree"].dump())
       << ',' << csv_bool(s["bent"]) << ',' << csv_bool(s["negabent"]) << '\n';
    if (spectra == "csv")
      std::cout << os.str();
    else
      emit(g, os.str());
  } else if (spectra == "csv") {
    std::cout << j.dump(2) << '\n';
  } else {
    emit(g, j.dump(2) + "\n");
  }
  return kExitPass;
}

int cmd_sweep(const Globals& g, std::optional<int> n, int k) {
  const FieldCtx ctx = field_for(g, n);
  if (ctx.degree() % 2 != 0) throw UsageError("sweep-monomial needs an even field degree");
  if (k < 1 || k >= ctx.degree()) throw UsageError("--k must lie in [1, n)");
  const MonomialClass cls(ctx, k);
  const auto rows = cls.sweep();
  bool consistent = true;
  for (const auto& r : rows)
    if (r.lambda != 0 && (r.negabent != !r.zt_zero || r.bent != !r.in_power_image)) consistent = false;

  if (g.format == "csv") {
    std::ostringstream os;
    os << "lambda,bent,negabent,zt_zero,in_power_image\n";
    for (const auto& r : rows)
      os << r.lambda << ',' << csv_bool(r.bent) << ',' << csv_bool(r.negabent) << ',' << csv_bool(r.zt_zero) << ','
         << csv_bool(r.in_power_image) << '\n';
    emit(g, os.str());
  } else {
    ordered_json j = report_header(g, "sweep-monomial");
    j["field"] = ctx.spec().to_string();
    j["k"] = k;
    j["consistent"] = consistent;
    ordered_json arr = ordered_json::array();
    std::size_t nb = 0, nn = 0, nz = 0, nbn = 0;
    for (const auto& r : rows) {
      arr.push_back({{"lambda", r.lambda},
                     {"bent", r.bent},
                     {"negabent", r.negabent},
                     {"zt_zero", r.zt_zero},
                     {"in_power_image", r.in_power_image}});
      if (r.lambda == 0) continue;
      nb += r.bent;
      nn += r.negabent;
      nz += r.zt_zero;
      nbn += r.bent && r.negabent;
    }
    j["counts"] = {{"bent", nb}, {"negabent", nn}, {"zt_zero", nz}, {"bent_negabent", nbn}};
    j["rows"] = std::move(arr);
    emit(g, j.dump(2) + "\n");
  }
  return consistent ? kExitPass : kExitCheckFailed;
}

int cmd_mm_build(const Globals& g, int t, const std::string& pi_text, const std::string& h_text) {
  const FieldCtx ctx = field_for(g, t);
  const PermSpec pi = PermSpec::from_poly(ctx, UnivariatePoly::parse(pi_text, ctx));
  const UnivariatePoly h = UnivariatePoly::parse(h_text, ctx);
  if (!pi.is_bijective()) throw UsageError("pi is not a permutation of " + ctx.spec().to_string());
  const MMFunction m = mm_build(pi, h);
  const bool criterion = mm_negabent_test(m);
  const FieldSpec spec_n = FieldCtx::make(2 * t).spec();

  ordered_json j = report_header(g, "mm-build");
  j["field"] = ctx.spec().to_string();
  j["pi"] = pi_text;
  j["h"] = h_text;
  j["function"] = function_summary(m.f);
  j["criterion_negabent"] = criterion;
  j["criterion_agrees"] = criterion == j["function"]["negabent"].get<bool>();
  j["truth_table"] = format_truth_table(m.f, spec_n);
  emit(g, j.dump(2) + "\n");
  return j["criterion_agrees"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int cmd_cm_verify(const Globals& g, int t, const std::string& pi_text) {
  const FieldCtx ctx = field_for(g, t);
  const PermSpec pi = PermSpec::from_poly(ctx, UnivariatePoly::parse(pi_text, ctx));
  const bool bij = pi.is_bijective();
  const bool plus = pi.plus_identity().is_bijective();
  ordered_json j = report_header(g, "cm-verify");
  j["field"] = ctx.spec().to_string();
  j["pi"] = pi_text;
  j["permutation"] = bij;
  j["plus_identity_permutation"] = plus;
  j["complete_mapping"] = bij && plus;
  emit(g, j.dump(2) + "\n");
  return bij && plus ? kExitPass : kExitCheckFailed;
}

int cmd_construct(const Globals& g, int n, const std::string& source, const std::string& h_text) {
  if (n % 2 != 0) throw UsageError("construct needs even n, got " + std::to_string(n));
  if (n < 4 || n > kMaxFieldDegree) throw UsageError("construct needs 4 <= n <= " + std::to_string(kMaxFieldDegree));
  const CmSource src = parse_cm_source(source);
  const auto start = std::chrono::steady_clock::now();
  Construction c;
  if (h_text.empty()) {
    c = optimal_degree_construction(n, src, g.seed);
  } else {
    const FieldCtx ctx_t = FieldCtx::make(n / 2);
    std::string desc;
    const PermSpec pi = resolve_complete_mapping(ctx_t, src, g.seed, &desc);
    c = construct_F(pi, UnivariatePoly::parse(h_text, ctx_t));
    c.pi_source = desc;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const FieldSpec spec = FieldCtx::make(n).spec();
  const std::string table = format_truth_table(c.F, spec);

  ordered_json j = report_header(g, "construct");
  j["field"] = spec.to_string();
  j["source"] = to_string(src);
  j["pi"] = c.pi_source;
  j["h"] = h_text.empty() ? "x^" + std::to_string((1u << (n / 2)) - 1) : h_text;
  j["bent"] = c.bent;
  j["negabent"] = c.negabent;
  j["degree"] = c.degree;
  j["degree_optimal"] = c.degree == n / 2;
  j["transform_used"] = {{"A", c.transform.A.row_masks()},
                         {"b", c.transform.b},
                         {"l", c.transform.l},
                         {"c", c.transform.c},
                         {"maps", "G o T = Q"}};
  j["q_shift_bent"] = c.q_shift_bent;
  j["q_shift_matches"] = c.q_shift_matches;
  j["seconds"] = secs;
  if (g.out.empty()) {
    j["truth_table"] = table;
  } else {
    write_text_file(g.out, table);
    j["truth_table_file"] = g.out;
  }
  std::cout << j.dump(2) << '\n';
  return c.bent && c.negabent ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const Globals& g, const std::string& suite, const VerifyOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const SuiteReport r = run_suite(suite, opts);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "check,passed,cases,detail\n";
    for (const auto& c : r.checks) os << c.name << ',' << csv_bool(c.passed) << ',' << c.cases << ",\"" << c.detail << "\"\n";
    emit(g, os.str());
  } else {
    ordered_json j = report_header(g, "verify");
    j["suite"] = r.suite;
    j["options"] = {{"n_max", opts.n_max},
                    {"n", opts.n},
                    {"exhaustive_quadratics", opts.exhaustive_quadratics},
                    {"samples", opts.samples}};
    j["passed"] = r.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json e = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}};
      if (!c.passed) e["reproducer"] = c.reproducer;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["seconds"] = r.seconds;
    emit(g, j.dump(2) + "\n");
  }
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of negabent Boolean functions"};
  app.require_subcommand(1);
  Globals g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(argv[i]);

  app.add_option("--field", g.field, "field spec gf2_<n>:<modulus hex>");
  app.add_option("--seed", g.seed, "seed for randomized searches");
  app.add_option("--threads", g.threads, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "output path");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  // Globals may also follow the subcommand name.
  app.fallthrough();

  std::function<int()> run;

  auto* analyze = app.add_subcommand("analyze", "verdicts and spectra of a truth-table file");
  std::string path, spectra;
  analyze->add_option("path", path, "btf1/anf1 file")->required();
  analyze->add_option("--spectra", spectra, "export spectra")->check(CLI::IsMember({"csv"}));
  analyze->callback([&] { run = [&] { return cmd_analyze(g, path, spectra); }; });

  auto* sweep = app.add_subcommand("sweep-monomial", "all lambda verdicts of Tr(lambda x^(2^k+1))");
  std::optional<int> sweep_n;
  int sweep_k = 1;
  sweep->add_option("--n", sweep_n, "field degree (default modulus)");
  sweep->add_option("--k", sweep_k, "Gold exponent parameter")->required();
  sweep->callback([&] {
    if (g.format == "json" && !sweep->get_parent()->get_option("--format")->count()) g.format = "csv";
    run = [&] { return cmd_sweep(g, sweep_n, sweep_k); };
  });

  auto* mm = app.add_subcommand("mm-build", "Maiorana-McFarland function Tr(x pi(y)) + Tr(h(y))");
  int mm_t = 0;
  std::string mm_pi, mm_h = "0";
  mm->add_option("--t", mm_t, "half dimension")->required()->check(CLI::Range(1, kMaxFieldDegree / 2));
  mm->add_option("--pi", mm_pi, "permutation polynomial")->required();
  mm->set_help_flag("--help", "Print this help message and exit");
  mm->add_option("--h", mm_h, "polynomial h");
  mm->callback([&] { run = [&] { return cmd_mm_build(g, mm_t, mm_pi, mm_h); }; });

  auto* cm = app.add_subcommand("cm-verify", "complete mapping check");
  int cm_t = 0;
  std::string cm_pi;
  cm->add_option("--t", cm_t, "field degree")->required()->check(CLI::Range(1, kMaxFieldDegree));
  cm->add_option("--pi", cm_pi, "polynomial")->required();
  cm->callback([&] { run = [&] { return cmd_cm_verify(g, cm_t, cm_pi); }; });

  auto* construct = app.add_subcommand("construct", "bent-negabent function of degree n/2");
  int con_n = 0;
  std::string con_source = "search", con_h;
  construct->add_option("--n", con_n, "number of variables")->required();
  construct->add_option("--source", con_source, "complete mapping source")
      ->check(CLI::IsMember({"yann1", "yann2", "search"}));
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("--h", con_h, "polynomial h over GF(2^(n/2))");
  construct->callback([&] { run = [&] { return cmd_construct(g, con_n, con_source, con_h); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vopts;
  verify->add_option("suite", suite, "field-core | monomial-grid | mm | transport | construction")->required();
  verify->add_option("--n-max", vopts.n_max, "largest n")->check(CLI::Range(1, kMaxFieldDegree));
  verify->add_option("--n", vopts.n, "n for the transport suite")->check(CLI::Range(2, kMaxFieldDegree));
  verify->add_flag("--exhaustive-quadratics", vopts.exhaustive_quadratics, "enumerate every quadratic");
  verify->add_option("--samples", vopts.samples, "random cases per family")->check(CLI::NonNegativeNumber);
  verify->callback([&] {
    vopts.seed = g.seed;
    run = [&] { return cmd_verify(g, suite, vopts); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  set_threads(g.threads);
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
