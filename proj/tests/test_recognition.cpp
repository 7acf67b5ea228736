#include <doctest.h>

#include <set>

#include "tautwist/builders.hpp"
#include "tautwist/recognition.hpp"

using namespace tautwist;

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation identity(std::size_t n) {
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint8_t>(i);
  return id;
}

std::size_t closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{identity(degree)};
  std::vector<Permutation> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens)
        if (auto y = compose(x, g); seen.insert(y).second) next.push_back(y);
    frontier = std::move(next);
  }
  return seen.size();
}

// Oracle: every assignment of generators, relators evaluated on raw permutations.
HomCount brute_force(const Presentation& p, const TargetGroup& t) {
  const auto& elems = t.elements();
  const std::size_t n = p.ngens();
  std::vector<std::size_t> idx(n, 0);
  HomCount out;
  for (;;) {
    std::vector<Permutation> images;
    for (std::size_t i : idx) images.push_back(elems[i]);
    bool ok = true;
    for (const Word& r : p.relators()) {
      Permutation x = identity(t.degree());
      for (Letter l : r.letters()) x = compose(x, l.sign > 0 ? images[l.gen] : inverse(images[l.gen]));
      if (x != identity(t.degree())) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++out.total;
      if (closure(images, t.degree()) == t.order()) ++out.surjective;
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

RecognitionResult recognize(const Presentation& p) {
  return recognize_finite(multiplication_table(todd_coxeter(p, std::nullopt, 100'000)));
}

}  // namespace

TEST_CASE("target groups have the expected orders") {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"S3", 6}, {"D4", 8}, {"D5", 10}, {"A4", 12}, {"S4", 24}, {"D7", 14}, {"A5", 60}};
  REQUIRE(builtin_targets().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const TargetGroup& t = builtin_targets()[i];
    CHECK(t.name() == expected[i].first);
    CHECK(t.order() == expected[i].second);
    CHECK(closure(t.generators(), t.degree()) == t.order());
    for (std::uint32_t a = 0; a < t.order(); ++a) CHECK(t.mul(a, t.inverse(a)) == t.identity());
  }
  CHECK(&target_by_name("A4") == &builtin_targets()[3]);
  CHECK_THROWS(target_by_name("Q8"));
}

TEST_CASE("hom counts agree with exhaustive assignment") {
  const std::vector<Presentation> sources{dihedral(3), dihedral(4), dihedral(5), cyclic(6),
                                          tau_torus2(2).base, coxeter(3, 3, std::nullopt),
                                          fixture("12n553")};
  for (const Presentation& p : sources)
    for (const char* name : {"S3", "D4", "D5", "A4", "S4"}) {
      const TargetGroup& t = target_by_name(name);
      INFO(render_presentation(p), " -> ", name);
      CHECK(count_homs(p, t) == brute_force(p, t));
    }
  for (const Presentation& p : {dihedral(5), tau_torus2(2).base, dihedral(3)})
    CHECK(count_homs(p, target_by_name("A5")) == brute_force(p, target_by_name("A5")));
}

TEST_CASE("known hom counts") {
  // Homs from D_m to S3: trivial, 3 onto Z2, and 6 onto S3 when 3 | m.
  CHECK(count_homs(dihedral(3), target_by_name("S3")) == HomCount{10, 6});
  CHECK(count_homs(dihedral(5), target_by_name("S3")) == HomCount{4, 0});
  CHECK(count_homs(cyclic(5), target_by_name("A5")).total == 25);
}

TEST_CASE("search cap") {
  CHECK_THROWS_AS(count_homs(fixture("12a990"), target_by_name("A5"), 10), SearchCapExceeded);
}

TEST_CASE("fingerprints separate and identify") {
  GroupFingerprint a = fingerprint(fixture("12n553"));
  GroupFingerprint b = fingerprint(fixture("12n556"));
  CHECK(a.version == kFingerprintVersion);
  CHECK(a.targets.size() == 7);
  CHECK(fingerprints_equal(a, b));
  CHECK_FALSE(fingerprints_equal(fingerprint(dihedral(3)), fingerprint(dihedral(5))));
  CHECK_FALSE(fingerprints_equal(fingerprint(dihedral(3)), fingerprint(dihedral(3), {"S3", "D4"})));
  GroupFingerprint trivial = fingerprint(parse_presentation("< a | a >"));
  for (const HomCount& c : trivial.counts) CHECK(c == HomCount{1, 0});
}

TEST_CASE("recognition of dihedral and cyclic groups") {
  for (long m = 1; m <= 20; ++m) {
    RecognitionResult d = recognize(dihedral(m));
    CHECK(d.order() == static_cast<std::size_t>(2 * m));
    CHECK(same_type(d, RecognitionResult{RecognitionResult::Kind::Dihedral, static_cast<std::size_t>(m)}));
    RecognitionResult c = recognize(cyclic(m));
    CHECK(c == RecognitionResult{RecognitionResult::Kind::Cyclic, static_cast<std::size_t>(m)});
  }
  CHECK(same_type(RecognitionResult{RecognitionResult::Kind::Dihedral, 1},
                  RecognitionResult{RecognitionResult::Kind::Cyclic, 2}));
  CHECK(recognize(coxeter(2, 2, 2)) == RecognitionResult{RecognitionResult::Kind::OtherFinite, 8});
  CHECK(recognize(fixture("12a990")) == RecognitionResult{RecognitionResult::Kind::OtherFinite, 240});
  CHECK(recognize(coxeter(3, 3, 2)).order() == 24);
  CHECK_FALSE(describe(recognize(dihedral(7))).empty());
}

TEST_CASE("non-dihedral quotient witnesses") {
  Presentation common = fixture("irregular_common");
  WitnessReport w = nondihedral_quotient_witness(common, {parse_word("(x1*x3)^2", common)}, 100'000);
  CHECK(w.status == WitnessReport::Status::Witness);
  CHECK(w.quotient_order == 24u);

  Presentation w35 = coxeter(3, 5, std::nullopt);
  WitnessReport a5 = nondihedral_quotient_witness(w35, {parse_word("(x3*x1)^2", w35)}, 100'000);
  CHECK(a5.status == WitnessReport::Status::Witness);
  CHECK(a5.quotient_order == 120u);

  // A dihedral quotient proves nothing.
  WitnessReport d = nondihedral_quotient_witness(w35, {parse_word("(x3*x1)^1", w35)}, 100'000);
  CHECK(d.status == WitnessReport::Status::Inconclusive);
  WitnessReport inf = nondihedral_quotient_witness(w35, {}, 1000);
  CHECK(inf.status == WitnessReport::Status::Inconclusive);
  CHECK_FALSE(inf.quotient_order.has_value());
}
