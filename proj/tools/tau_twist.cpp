// tau_twist: command-line front end. Reports are JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 1 failed check (illegal move, failing criterion),
// 2 bad input or parameters, 3 enumeration budget exceeded, 4 inconclusive witness.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautwist/abelian.hpp"
#include "tautwist/acceptance.hpp"
#include "tautwist/builders.hpp"
#include "tautwist/enumeration.hpp"
#include "tautwist/knot_invariants.hpp"
#include "tautwist/recognition.hpp"
#include "tautwist/script_io.hpp"

#ifndef TAUTWIST_VERSION
#define TAUTWIST_VERSION "0.0.0"
#endif

using nlohmann::json;
using namespace tautwist;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInconclusive = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::size_t default_budget() {
  if (const char* env = std::getenv("TAU_TWIST_BUDGET"); env && *env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("TAU_TWIST_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return 100'000;
}

json abelian_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& d : a.torsion) torsion.push_back(d.get_str());
  return {{"torsion", torsion}, {"free_rank", a.free_rank}, {"text", render_abelian(a)}};
}

json recognition_json(const RecognitionResult& r) {
  switch (r.kind) {
    case RecognitionResult::Kind::Dihedral:
      return {{"type", "dihedral"}, {"m", r.m}, {"order", r.order()}};
    case RecognitionResult::Kind::Cyclic:
      return {{"type", "cyclic"}, {"m", r.m}, {"order", r.order()}};
    case RecognitionResult::Kind::OtherFinite:
      break;
  }
  return {{"type", "other_finite"}, {"order", r.order()}};
}

json fingerprint_json(const GroupFingerprint& fp) {
  json counts = json::array();
  for (const auto& c : fp.counts) counts.push_back({c.total, c.surjective});
  return {{"version", fp.version}, {"targets", fp.targets}, {"counts", counts}};
}

json poly_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
  return {{"min_exp", p.min_exp()}, {"coeffs", coeffs}, {"text", render(p)}};
}

json stats_json(const EnumerationOutcome& out) {
  if (const auto* c = std::get_if<Completed>(&out))
    return {{"max_live", c->stats.max_live}, {"total_defined", c->stats.total_defined}};
  const auto& b = std::get<BudgetExceeded>(out);
  return {{"max_live", b.max_live_reached}, {"total_defined", b.total_defined}};
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& text) {
  // "m1,n1;m2,n2"
  std::vector<std::pair<long, long>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    long m = 0, n = 0;
    char comma = 0;
    std::istringstream is(item);
    if (!(is >> m >> comma >> n) || comma != ',' || !(is >> std::ws).eof())
      throw UsageError("band must look like 'm1,n1;m2,n2', got '" + text + "'");
    out.emplace_back(m, n);
  }
  if (out.empty()) throw UsageError("band needs at least one pair");
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

CoxeterLabel parse_label(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return std::nullopt;
  auto v = parse_longs(text);
  if (v.size() != 1) throw UsageError("Coxeter label must be an integer or 'inf'");
  return v[0];
}

Index2Spec parse_parity(const std::string& text, const Presentation& p) {
  Index2Spec spec{std::vector<int>(p.ngens(), 0)};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("subgroup spec must look like 'x1=1,x2=0'");
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    auto it = std::find(p.names().begin(), p.names().end(), name);
    if (it == p.names().end()) throw UsageError("unknown generator '" + name + "' in subgroup spec");
    if (value != "0" && value != "1") throw UsageError("parity must be 0 or 1");
    spec.parity[static_cast<std::size_t>(it - p.names().begin())] = value == "1";
  }
  return spec;
}

struct Context {
  std::vector<std::string> argv;
  bool json_out = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& input, const json& result) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    json report = {{"command", argv},
                   {"input_hash", fnv1a(input)},
                   {"result", result},
                   {"version", TAUTWIST_VERSION},
                   {"elapsed_ms", ms.count()}};
    std::cout << report.dump(2) << "\n";
  }
};

struct InputOptions {
  std::string path;
  std::string fixture_name;

  void add(CLI::App* cmd) {
    cmd->add_option("input", path, "presentation file, '-' or omitted for stdin");
    cmd->add_option("--fixture", fixture_name, "use a registered fixture instead of a file");
  }

  std::pair<Presentation, std::string> load() const {
    if (!fixture_name.empty()) {
      Presentation p = fixture(fixture_name);
      return {p, render_presentation(p)};
    }
    std::string text = read_input(path);
    return {parse_presentation(text), text};
  }
};

int run_build(const Context& ctx, const std::string& family, const std::map<std::string, std::string>& opt) {
  auto get = [&](const char* key) -> std::string {
    auto it = opt.find(key);
    if (it == opt.end() || it->second.empty())
      throw UsageError("build " + family + " needs --" + key);
    return it->second;
  };
  auto num = [&](const char* key) {
    auto v = parse_longs(get(key));
    if (v.size() != 1) throw UsageError(std::string("--") + key + " takes one integer");
    return v[0];
  };
  Presentation p;
  if (family == "dihedral") {
    p = dihedral(num("m"));
  } else if (family == "cyclic") {
    p = cyclic(num("m"));
  } else if (family == "coxeter") {
    p = coxeter(parse_label(get("m1")), parse_label(get("m2")), parse_label(get("m3")));
  } else if (family == "torus2") {
    p = tau_torus2(num("n")).base;
  } else if (family == "torus") {
    p = tau_torus(num("p"), num("q")).base;
  } else if (family == "one-fusion") {
    p = tau_one_fusion(BandSpec{parse_pairs(get("band"))}).base;
  } else if (family == "fixture") {
    p = fixture(get("name"));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  std::string text = render_presentation(p);
  if (ctx.json_out) {
    ctx.emit(family, {{"family", family}, {"presentation", text}, {"tau_shape", is_tau_shape(p)}});
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int run_enumerate(const Context& ctx, const InputOptions& in, std::size_t budget, const std::string& subgroup) {
  auto [p, text] = in.load();
  std::optional<Index2Spec> spec;
  if (!subgroup.empty()) spec = parse_parity(subgroup, p);
  EnumerationOutcome out = todd_coxeter(p, spec, budget);
  json result = {{"budget", budget}, {"stats", stats_json(out)}};
  if (spec) result["subgroup"] = subgroup;
  if (const auto* c = std::get_if<Completed>(&out)) {
    result["status"] = "completed";
    result["order"] = c->order;
  } else {
    result["status"] = "budget_exceeded";
    result["order"] = nullptr;
  }
  ctx.emit(text, result);
  return std::holds_alternative<Completed>(out) ? 0 : kExitBudget;
}

int run_recognize(const Context& ctx, const InputOptions& in, std::size_t budget) {
  auto [p, text] = in.load();
  EnumerationOutcome out = todd_coxeter(p, std::nullopt, budget);
  if (!std::holds_alternative<Completed>(out)) {
    ctx.emit(text, {{"status", "budget_exceeded"}, {"budget", budget}, {"stats", stats_json(out)}});
    return kExitBudget;
  }
  json result = recognition_json(recognize_finite(multiplication_table(out)));
  result["status"] = "completed";
  result["abelianization"] = abelian_json(abelianization(p));
  ctx.emit(text, result);
  return 0;
}

int run_fingerprint(const Context& ctx, const InputOptions& in, const std::string& targets) {
  auto [p, text] = in.load();
  std::vector<std::string> names;
  if (targets.empty()) {
    for (const auto& t : builtin_targets()) names.push_back(t.name());
  } else {
    std::stringstream ss(targets);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    for (const auto& n : names) target_by_name(n);
  }
  ctx.emit(text, fingerprint_json(fingerprint(p, names)));
  return 0;
}

int run_witness(const Context& ctx, const InputOptions& in, std::size_t budget,
                const std::vector<std::string>& extra) {
  auto [p, text] = in.load();
  std::vector<Word> words;
  for (const auto& e : extra) words.push_back(parse_word(e, p));
  WitnessReport w = nondihedral_quotient_witness(p, words, budget);
  json result = {{"status", w.status == WitnessReport::Status::Witness ? "witness" : "inconclusive"},
                 {"extra", extra},
                 {"reason", w.reason}};
  result["quotient_order"] = w.quotient_order ? json(*w.quotient_order) : json(nullptr);
  result["recognition"] = w.recognition ? recognition_json(*w.recognition) : json(nullptr);
  ctx.emit(text, result);
  return w.status == WitnessReport::Status::Witness ? 0 : kExitInconclusive;
}

int run_invariant(const Context& ctx, const std::string& kind, const std::map<std::string, std::string>& opt) {
  auto get = [&](const char* key) -> std::string {
    auto it = opt.find(key);
    if (it == opt.end() || it->second.empty()) throw UsageError("invariant " + kind + " needs --" + key);
    return it->second;
  };
  auto num = [&](const char* key) {
    auto v = parse_longs(get(key));
    if (v.size() != 1) throw UsageError(std::string("--") + key + " takes one integer");
    return v[0];
  };
  auto has = [&](const char* key) { return opt.count(key) && !opt.at(key).empty(); };
  json result = {{"invariant", kind}};
  if (kind == "alexander" || kind == "f-poly") {
    BandSpec band{parse_pairs(get("band"))};
    LaurentPoly poly = kind == "alexander" ? alexander_one_fusion(band) : f_poly(band);
    result["polynomial"] = poly_json(poly);
    result["determinant"] = determinant(poly).get_str();
  } else if (kind == "det2bridge") {
    ConwayCode code;
    if (has("family")) {
      long fam = num("family");
      if (fam < 0 || fam > 2) throw UsageError("--family must be 0, 1 or 2");
      auto family = static_cast<RibbonFamily>(fam);
      std::vector<long> params = family == RibbonFamily::Zero ? parse_longs(get("a"))
                                                              : std::vector<long>{num("a"), num("b")};
      code = family_code(family, params);
      if (family != RibbonFamily::Zero) result["closed_form"] = family_dets(family, params[0], params[1]).get_str();
    } else {
      code.entries = parse_longs(get("conway"));
    }
    auto [p, q] = continued_fraction(code);
    result["conway"] = code.entries;
    result["determinant"] = det_2bridge(code).get_str();
    result["continued_fraction"] = {{"p", p.get_str()}, {"q", q.get_str()}};
  } else if (kind == "pretzel") {
    result["determinant"] = det_pretzel(num("p"), num("q"), num("r")).get_str();
  } else if (kind == "pochette-h1") {
    HomologyProfile h = pochette_h1(num("p"), num("q"), num("ell"));
    json groups = json::array();
    for (const auto& g : h.groups) groups.push_back(abelian_json(g));
    result["homology"] = groups;
    result["h1"] = render_abelian(h.groups[1]);
  } else {
    throw UsageError("unknown invariant '" + kind + "'");
  }
  std::string echo;
  for (const auto& [k, v] : opt) echo += k + "=" + v + ";";
  ctx.emit(kind + ":" + echo, result);
  return 0;
}

int run_replay(const Context& ctx, const std::string& path) {
  std::string text = read_input(path);
  MoveScript script = parse_script(text);
  json result = {{"name", script.name}, {"initial", render_presentation(script.initial)}};
  try {
    ReplayResult r = replay(script);
    result["status"] = "ok";
    result["moves_applied"] = r.moves_applied;
    result["final"] = render_presentation(r.final);
    result["matches_expected"] = r.matches_expected ? json(*r.matches_expected) : json(nullptr);
    ctx.emit(text, result);
    return r.matches_expected.value_or(true) ? 0 : kExitFailed;
  } catch (const ReplayError& e) {
    result["status"] = "illegal_move";
    result["move_index"] = e.index();
    result["reason"] = e.reason();
    ctx.emit(text, result);
    std::cerr << "replay stopped: " << e.what() << "\n";
    return kExitFailed;
  }
}

int run_accept(const Context& ctx, std::size_t budget, const std::string& script_dir) {
  AcceptanceConfig config{script_dir.empty() ? default_script_dir() : script_dir, budget};
  auto results = run_acceptance(config);
  const CriterionResult* first_fail = nullptr;
  json rows = json::array();
  for (const auto& r : results) {
    if (!r.passed && !first_fail) first_fail = &r;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (ctx.json_out) {
    ctx.emit("accept", {{"criteria", rows}, {"all_passed", first_fail == nullptr}});
  } else {
    for (const auto& r : results)
      std::cout << std::setw(3) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << std::left
                << std::setw(24) << r.title << std::right << r.detail << "\n";
  }
  if (first_fail) {
    std::cerr << "first failing criterion: " << first_fail->id << " (" << first_fail->title << ")\n";
    return kExitFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Price-twist group presentations: build, enumerate, recognize, replay"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TAUTWIST_VERSION);

  Context ctx;
  for (int i = 1; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

  std::size_t budget = 0;
  bool budget_given = false;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option_function<std::size_t>(
           "--max-cosets",
           [&](const std::size_t& v) {
             budget = v;
             budget_given = true;
           },
           "live coset budget (default 100000, or TAU_TWIST_BUDGET)")
        ->check(CLI::PositiveNumber);
  };
  app.add_flag("--json", ctx.json_out, "JSON report for build and accept");

  std::map<std::string, std::string> params;
  const std::map<std::string, std::string> param_help{
      {"m", "dihedral/cyclic order"},
      {"n", "torus2 twist parameter"},
      {"p", "torus p, pretzel p, or pochette p"},
      {"q", "torus q, pretzel q, or pochette q"},
      {"r", "pretzel r"},
      {"m1", "Coxeter label of x1x2 (integer or inf)"},
      {"m2", "Coxeter label of x2x3 (integer or inf)"},
      {"m3", "Coxeter label of x3x1 (integer or inf)"},
      {"band", "twist boxes, e.g. 1,1;2,-1"},
      {"name", "fixture name"},
      {"conway", "Conway code, e.g. 2,2,2,-2,-2,2"},
      {"family", "ribbon family 0, 1 or 2"},
      {"a", "family parameter a (or a1,..,an for family 0)"},
      {"b", "family parameter b"},
      {"ell", "pochette linking number"},
  };
  auto add_params = [&](CLI::App* cmd, std::initializer_list<const char*> keys) {
    for (const char* k : keys) cmd->add_option(std::string("--") + k, params[k], param_help.at(k));
  };

  std::string family;
  auto* build = app.add_subcommand("build", "print a builder presentation");
  build->add_option("family", family, "dihedral, cyclic, coxeter, torus2, torus, one-fusion, fixture")
      ->required();
  add_params(build, {"m", "n", "p", "q", "m1", "m2", "m3", "band", "name"});
  build->add_flag("--json", ctx.json_out);

  InputOptions input;
  std::string subgroup, targets, script_path, script_dir, invariant_kind;
  std::vector<std::string> extra;

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  input.add(enumerate);
  add_budget(enumerate);
  enumerate->add_option("--subgroup", subgroup, "index-2 parity kernel, e.g. x1=1,x2=1");

  auto* recognize = app.add_subcommand("recognize", "enumerate and recognize a finite group");
  input.add(recognize);
  add_budget(recognize);

  auto* fp = app.add_subcommand("fingerprint", "homomorphism counts into small groups");
  input.add(fp);
  fp->add_option("--targets", targets, "comma-separated target groups");

  auto* witness = app.add_subcommand("witness", "search a non-dihedral finite quotient");
  input.add(witness);
  add_budget(witness);
  witness->add_option("--extra", extra, "extra relator (repeatable)")->required()->allow_extra_args(false);

  auto* invariant = app.add_subcommand("invariant", "knot invariants");
  invariant->add_option("kind", invariant_kind, "alexander, f-poly, det2bridge, pretzel, pochette-h1")
      ->required();
  add_params(invariant, {"band", "conway", "family", "a", "b", "p", "q", "r", "ell"});

  auto* replay_cmd = app.add_subcommand("replay", "replay a move script");
  replay_cmd->add_option("script", script_path, "script JSON, '-' for stdin")->required();

  auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
  add_budget(accept);
  accept->add_option("--scripts", script_dir, "directory of shipped scripts");
  accept->add_flag("--json", ctx.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!budget_given) budget = default_budget();
    if (*build) return run_build(ctx, family, params);
    if (*enumerate) return run_enumerate(ctx, input, budget, subgroup);
    if (*recognize) return run_recognize(ctx, input, budget);
    if (*fp) return run_fingerprint(ctx, input, targets);
    if (*witness) return run_witness(ctx, input, budget, extra);
    if (*invariant) return run_invariant(ctx, invariant_kind, params);
    if (*replay_cmd) return run_replay(ctx, script_path);
    if (*accept) return run_accept(ctx, budget, script_dir);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScriptFormatError& e) {
    std::cerr << "script error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotTauShape& e) {
    std::cerr << "not a tau presentation: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
