#include "tautwist/acceptance.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "tautwist/abelian.hpp"
#include "tautwist/builders.hpp"
#include "tautwist/enumeration.hpp"
#include "tautwist/knot_invariants.hpp"
#include "tautwist/recognition.hpp"
#include "tautwist/script_io.hpp"

#ifndef TAUTWIST_SCRIPT_DIR
#define TAUTWIST_SCRIPT_DIR "data/scripts"
#endif

namespace tautwist {

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::optional<std::size_t> order_of(const Presentation& p, std::size_t budget) {
  auto out = todd_coxeter(p, std::nullopt, budget);
  if (const auto* c = std::get_if<Completed>(&out)) return c->order;
  return std::nullopt;
}

RecognitionResult recognize(const Presentation& p, std::size_t budget) {
  auto out = todd_coxeter(p, std::nullopt, budget);
  require(std::holds_alternative<Completed>(out), "enumeration of " + render_presentation(p) +
                                                       " exceeded the budget");
  return recognize_finite(multiplication_table(out));
}

/// Replays a shipped script after checking that it starts from `initial`.
Presentation replay_from(const AcceptanceConfig& cfg, const std::string& name,
                         const Presentation& initial) {
  MoveScript script = load_script(cfg.script_dir + "/" + name + ".json");
  require(script.initial.same_structure(initial), name + ": script does not start from the builder output");
  return replay(script).final;
}

const AbelianInvariants kZ2{{2}, 0};

bool separated_from_odd_dihedrals(const GroupFingerprint& fp, long max_m) {
  for (long m = 1; m <= max_m; m += 2)
    if (fingerprints_equal(fp, fingerprint(dihedral(m)))) return false;
  return true;
}

std::string show(const GroupFingerprint& fp) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fp.targets.size(); ++i)
    out << (i ? " " : "") << fp.targets[i] << ":" << fp.counts[i].total << "/" << fp.counts[i].surjective;
  return out.str();
}

std::string criterion_1(const AcceptanceConfig& cfg) {
  for (long n = 0; n <= 5; ++n) {
    const Presentation p = tau_torus2(n).base;
    auto order = order_of(p, cfg.budget);
    require(order && *order == static_cast<std::size_t>(4 * n + 2),
            "tau_torus2(" + std::to_string(n) + ") has the wrong order");
    RecognitionResult r = recognize(p, cfg.budget);
    RecognitionResult want = n == 0 ? RecognitionResult{RecognitionResult::Kind::Cyclic, 2}
                                    : RecognitionResult{RecognitionResult::Kind::Dihedral,
                                                        static_cast<std::size_t>(2 * n + 1)};
    require(r == want, "tau_torus2(" + std::to_string(n) + ") recognized as " + describe(r));
  }
  return "orders 2, 6, 10, 14, 18, 22; Z2, D3, D5, D7, D9, D11";
}

std::string criterion_2(const AcceptanceConfig& cfg) {
  std::size_t moves = 0;
  for (long n = 1; n <= 5; ++n) {
    const std::string name = "thm_pi1_n" + std::to_string(n);
    MoveScript script = load_script(cfg.script_dir + "/" + name + ".json");
    require(script.initial.same_structure(tau_torus2(n).base), name + ": wrong initial presentation");
    ReplayResult r = replay(script);
    moves += r.moves_applied;
    require(equal_up_to_relabeling(r.final, dihedral(2 * n + 1)), name + ": final presentation " +
                                                                        render_presentation(r.final));
  }
  return std::to_string(moves) + " legal moves across n = 1..5";
}

std::string criterion_3(const AcceptanceConfig& cfg) {
  std::vector<Presentation> corpus;
  for (const auto& name : fixture_names()) corpus.push_back(fixture(name));
  for (long n = 0; n <= 5; ++n) {
    corpus.push_back(tau_torus2(n).base);
    corpus.push_back(tau_torus(2, 2 * n + 3).base);
    corpus.push_back(dihedral(2 * n + 1));
  }
  corpus.push_back(tau_torus(3, 4).base);
  corpus.push_back(tau_torus(3, 5).base);
  corpus.push_back(coxeter(3, 3, std::nullopt));
  corpus.push_back(coxeter(3, 5, std::nullopt));
  corpus.push_back(tau_one_fusion({{{1, 1}, {2, -1}}}).base);
  for (const char* name : {"irregular_12n553", "fusion2_12a427_D2", "fusion2_12a990"}) {
    MoveScript script = load_script(cfg.script_dir + "/" + name + ".json");
    corpus.push_back(replay(script).final);
  }
  for (const auto& p : corpus)
    require(abelianization(p) == kZ2, render_presentation(p) + " has abelianization " +
                                           render_abelian(abelianization(p)));
  require(pochette_h1(2, 1, 0).groups[1] == kZ2, "pochette_h1(2,1,0) disagrees");
  return std::to_string(corpus.size()) + " presentations, all Z2; pochette H1 = Z2";
}

std::string criterion_4(const AcceptanceConfig& cfg) {
  const Presentation common = fixture("irregular_common");
  const GroupFingerprint common_fp = fingerprint(common);
  const std::pair<const char*, const char*> quartet[] = {
      {"12n553", "irregular_12n553"},
      {"12n556", "irregular_12n556"},
      {"3_1#6_1#3_1*", "irregular_3_1_6_1_3_1m"},
      {"3_1#3_1#3_1*#3_1*", "irregular_3_1_3_1_3_1m_3_1m"},
  };
  for (const auto& [fixture_name, script] : quartet) {
    Presentation final = replay_from(cfg, script, fixture(fixture_name));
    require(final.same_structure(common), std::string(script) + " ends at " + render_presentation(final));
    require(fingerprints_equal(fingerprint(fixture(fixture_name)), common_fp),
            std::string("fingerprint of ") + fixture_name + " differs");
  }
  return "all four end at irregular_common; fingerprint " + show(common_fp);
}

std::string criterion_5(const AcceptanceConfig& cfg) {
  const Presentation common = fixture("irregular_common");
  WitnessReport w = nondihedral_quotient_witness(common, {parse_word("(x1*x3)^2", common)}, cfg.budget);
  require(w.status == WitnessReport::Status::Witness && w.quotient_order == 24u &&
              w.recognition && w.recognition->kind == RecognitionResult::Kind::OtherFinite,
          "witness on irregular_common failed: " + w.reason);
  require(separated_from_odd_dihedrals(fingerprint(common), 99),
          "fingerprint of irregular_common matches a dihedral group");
  return "quotient of order 24 (not dihedral); fingerprint differs from D1..D99";
}

std::string criterion_6(const AcceptanceConfig& cfg) {
  const Presentation target = coxeter(3, 5, std::nullopt);
  Presentation final = replay_from(cfg, "fusion2_12a427_D2", fixture("12a427_D2"));
  require(equal_up_to_relabeling(final, target), "replay ends at " + render_presentation(final));
  WitnessReport w = nondihedral_quotient_witness(target, {parse_word("(x3*x1)^2", target)}, cfg.budget);
  require(w.status == WitnessReport::Status::Witness && w.quotient_order == 120u &&
              w.recognition && w.recognition->kind == RecognitionResult::Kind::OtherFinite,
          "witness on W(3,5,inf) failed: " + w.reason);
  return "replay reaches W(3,5,inf); quotient by (x3*x1)^2 has order 120";
}

std::string criterion_7(const AcceptanceConfig& cfg) {
  Presentation a = replay_from(cfg, "fusion2_12a990", fixture("12a990"));
  Presentation b = replay_from(cfg, "fusion2_12a1225_D2", fixture("12a1225_D2"));
  require(canonical_form(a) == canonical_form(b), "replays end at different presentations");
  GroupFingerprint fa = fingerprint(fixture("12a990"));
  require(fingerprints_equal(fa, fingerprint(fixture("12a1225_D2"))), "fingerprints differ");
  require(separated_from_odd_dihedrals(fa, 99), "fingerprint matches a dihedral group");
  return "common presentation " + render_presentation(a) + "; fingerprint " + show(fa);
}

std::string criterion_8(const AcceptanceConfig& cfg) {
  for (long n = 1; n <= 5; ++n) {
    const Presentation p = tau_torus2(n).base;
    Presentation kernel = reidemeister_schreier_index2(p, Index2Spec{std::vector<int>(p.ngens(), 1)});
    RecognitionResult r = recognize(kernel, cfg.budget);
    require(r == RecognitionResult{RecognitionResult::Kind::Cyclic, static_cast<std::size_t>(2 * n + 1)},
            "kernel for n = " + std::to_string(n) + " recognized as " + describe(r));
  }
  return "kernels are Z3, Z5, Z7, Z9, Z11";
}

std::string criterion_9(const AcceptanceConfig& cfg) {
  for (long p : {3, 5, 7, 9}) {
    BandSpec band{std::vector<std::pair<long, long>>(static_cast<std::size_t>((p - 1) / 2), {1, 1})};
    require(determinant(alexander_one_fusion(band)) == p, "det for p = " + std::to_string(p));
  }
  std::size_t checked = 0;
  std::function<void(BandSpec&, std::size_t)> sweep = [&](BandSpec& band, std::size_t s) {
    if (band.twists.size() == s) {
      mpz_class d = determinant(alexander_one_fusion(band));
      if (mpz_odd_p(d.get_mpz_t()) == 0) return;
      auto order = order_of(tau_one_fusion(band).base, cfg.budget);
      require(order && mpz_class(static_cast<unsigned long>(*order)) == 2 * d, "order mismatch");
      ++checked;
      return;
    }
    for (long m = -2; m <= 2; ++m)
      for (long n = -2; n <= 2; ++n) {
        band.twists.emplace_back(m, n);
        sweep(band, s);
        band.twists.pop_back();
      }
  };
  for (std::size_t s = 1; s <= 2; ++s) {
    BandSpec band;
    sweep(band, s);
  }
  return "det = p for p = 3, 5, 7, 9; order 2d for " + std::to_string(checked) + " bands";
}

std::string criterion_10(const AcceptanceConfig&) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<long> len(1, 3), entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    BandSpec band;
    for (long k = len(rng); k > 0; --k) band.twists.emplace_back(entry(rng), entry(rng));
    LaurentPoly f = f_poly(band), delta = alexander_one_fusion(band);
    require(dot_equal(f * f.mirrored(), delta * delta.mirrored()),
            "factorization fails at trial " + std::to_string(trial));
  }
  return "200 random bands";
}

std::string criterion_11(const AcceptanceConfig&) {
  for (RibbonFamily fam : {RibbonFamily::One, RibbonFamily::Two})
    for (long a : {-2, -1, 1, 2})
      for (long b : {-2, -1, 1, 2})
        require(det_2bridge(family_code(fam, {a, b})) == family_dets(fam, a, b),
                "closed form fails at a = " + std::to_string(a) + ", b = " + std::to_string(b));
  std::size_t squares = 0;
  std::function<void(std::vector<long>&, std::size_t)> sweep = [&](std::vector<long>& as, std::size_t n) {
    if (as.size() == n) {
      mpz_class d = det_2bridge(family_code(RibbonFamily::Zero, as));
      require(mpz_perfect_square_p(d.get_mpz_t()) != 0, "Family 0 determinant is not a square");
      ++squares;
      return;
    }
    for (long a = 1; a <= 3; ++a) {
      as.push_back(a);
      sweep(as, n);
      as.pop_back();
    }
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<long> as;
    sweep(as, n);
  }
  return "Families 1, 2 match over a, b in {+-1, +-2}; " + std::to_string(squares) +
         " Family 0 determinants are squares";
}

std::string criterion_12(const AcceptanceConfig&) {
  for (long n = 1; n <= 5; ++n)
    require(equal_up_to_relabeling(tau_torus(2, 2 * n + 1).base, tau_torus2(n).base),
            "tau_torus(2, " + std::to_string(2 * n + 1) + ") differs from tau_torus2");
  std::ostringstream out;
  for (auto [p, q] : {std::pair{3L, 4L}, std::pair{3L, 5L}}) {
    const Presentation pres = tau_torus(p, q).base;
    require(is_tau_shape(pres), "tau_torus(3," + std::to_string(q) + ") is not tau-shaped");
    require(abelianization(pres) == kZ2, "tau_torus(3," + std::to_string(q) + ") abelianization");
    GroupFingerprint fp = fingerprint(pres);
    require(fingerprints_equal(fp, fingerprint(pres)), "fingerprint is not deterministic");
    out << "T(" << p << "," << q << ") " << show(fp) << "; ";
  }
  return out.str() + "torus(2,2n+1) = torus2(n)";
}

std::string criterion_13(const AcceptanceConfig&) {
  const Presentation w = coxeter(3, 3, std::nullopt);
  require(!order_of(w, 10'000), "W(3,3,inf) completed within 10^4 cosets");
  require(abelianization(w) == kZ2, "W(3,3,inf) abelianization is " + render_abelian(abelianization(w)));
  return "budget exceeded at 10^4 (inconclusive); abelianization Z2";
}

struct Entry {
  const char* title;
  std::string (*run)(const AcceptanceConfig&);
};

const Entry kCriteria[kCriterionCount] = {
    {"dihedral theorem", criterion_1},
    {"proof replay", criterion_2},
    {"homology", criterion_3},
    {"irregular quartet", criterion_4},
    {"Coxeter separation", criterion_5},
    {"W(3,5,inf) case", criterion_6},
    {"12a990/12a1225", criterion_7},
    {"double cover", criterion_8},
    {"determinant chain", criterion_9},
    {"f-factorization", criterion_10},
    {"2-bridge closed forms", criterion_11},
    {"torus consistency", criterion_12},
    {"budget behavior", criterion_13},
};

}  // namespace

std::string default_script_dir() {
  if (const char* env = std::getenv("TAU_TWIST_SCRIPTS"); env && *env) return env;
  return TAUTWIST_SCRIPT_DIR;
}

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const Entry& e = kCriteria[id - 1];
  CriterionResult r{id, e.title, false, {}};
  try {
    r.detail = e.run(config);
    r.passed = true;
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, config));
  return out;
}

}  // namespace tautwist
