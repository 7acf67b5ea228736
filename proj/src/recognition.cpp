#include "tautwist/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tautwist {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // Apply a, then b.
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

// Cycles are 1-based, as printed in the usual cycle notation.
Permutation from_cycles(std::size_t degree, std::initializer_list<std::vector<int>> cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      p[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
  return p;
}

TargetGroup dihedral_target(const std::string& name, int n) {
  std::vector<int> rotation(n);
  std::iota(rotation.begin(), rotation.end(), 1);
  Permutation reflection(n);
  for (int i = 0; i < n; ++i) reflection[i] = static_cast<std::uint8_t>((n - i) % n);
  return TargetGroup(name, n, {from_cycles(n, {rotation}), reflection});
}

}  // namespace

TargetGroup::TargetGroup(std::string name, std::size_t degree, std::vector<Permutation> generators)
    : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  elements_.push_back(id);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& g : generators_) {
      Permutation next = compose(elements_[k], g);
      if (index.emplace(next, static_cast<std::uint32_t>(elements_.size())).second)
        elements_.push_back(std::move(next));
    }
  }
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t c = index.at(compose(elements_[a], elements_[b]));
      table_[a * n + b] = c;
      if (c == 0) inverse_[a] = static_cast<std::uint32_t>(b);
    }
}

std::size_t TargetGroup::generated_order(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<std::uint32_t> found{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < found.size(); ++k)
    for (std::uint32_t g : gens) {
      std::uint32_t next = mul(found[k], g);
      if (!seen[next]) {
        seen[next] = 1;
        found.push_back(next);
      }
    }
  return found.size();
}

const std::vector<TargetGroup>& builtin_targets() {
  static const std::vector<TargetGroup> targets = [] {
    std::vector<TargetGroup> t;
    t.emplace_back("S3", 3, std::vector<Permutation>{from_cycles(3, {{1, 2}}), from_cycles(3, {{1, 2, 3}})});
    t.push_back(dihedral_target("D4", 4));
    t.push_back(dihedral_target("D5", 5));
    t.emplace_back("A4", 4,
                   std::vector<Permutation>{from_cycles(4, {{1, 2, 3}}), from_cycles(4, {{1, 2}, {3, 4}})});
    t.emplace_back("S4", 4,
                   std::vector<Permutation>{from_cycles(4, {{1, 2}}), from_cycles(4, {{1, 2, 3, 4}})});
    t.push_back(dihedral_target("D7", 7));
    t.emplace_back("A5", 5,
                   std::vector<Permutation>{from_cycles(5, {{1, 2, 3, 4, 5}}), from_cycles(5, {{1, 2, 3}})});
    return t;
  }();
  return targets;
}

const TargetGroup& target_by_name(const std::string& name) {
  for (const auto& t : builtin_targets())
    if (t.name() == name) return t;
  throw std::invalid_argument("unknown target group '" + name + "'");
}

HomCount count_homs(const Presentation& p, const TargetGroup& t, std::uint64_t cap) {
  const std::size_t n = t.order();
  const std::uint32_t k = p.ngens();
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    space *= n;
    if (space > cap)
      throw SearchCapExceeded("hom search space " + std::to_string(n) + "^" + std::to_string(k) +
                              " exceeds the cap");
  }
  std::vector<std::uint32_t> images(k, 0), inverse_images(k, 0);
  HomCount out;
  for (std::uint64_t step = 0; step < space; ++step) {
    for (std::uint32_t g = 0; g < k; ++g) inverse_images[g] = t.inverse(images[g]);
    bool ok = true;
    for (const Word& r : p.relators()) {
      std::uint32_t acc = 0;
      for (Letter l : r.letters()) acc = t.mul(acc, l.sign > 0 ? images[l.gen] : inverse_images[l.gen]);
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++out.total;
      if (t.generated_order(images) == n) ++out.surjective;
    }
    // Mixed-radix increment, lowest generator fastest.
    for (std::uint32_t g = 0; g < k; ++g) {
      if (++images[g] < n) break;
      images[g] = 0;
    }
  }
  return out;
}

GroupFingerprint fingerprint(const Presentation& p, const std::vector<std::string>& targets,
                             std::uint64_t cap) {
  GroupFingerprint f;
  for (const auto& name : targets) {
    f.targets.push_back(name);
    f.counts.push_back(count_homs(p, target_by_name(name), cap));
  }
  return f;
}

GroupFingerprint fingerprint(const Presentation& p) {
  std::vector<std::string> names;
  for (const auto& t : builtin_targets()) names.push_back(t.name());
  return fingerprint(p, names);
}

bool fingerprints_equal(const GroupFingerprint& a, const GroupFingerprint& b) {
  return a.version == b.version && a.targets == b.targets && a.counts == b.counts;
}

bool same_type(const RecognitionResult& a, const RecognitionResult& b) {
  auto normal = [](RecognitionResult r) {
    if (r.kind == RecognitionResult::Kind::Dihedral && r.m == 1)
      return RecognitionResult{RecognitionResult::Kind::Cyclic, 2};
    return r;
  };
  return normal(a) == normal(b);
}

std::string describe(const RecognitionResult& r) {
  switch (r.kind) {
    case RecognitionResult::Kind::Dihedral:
      return "D" + std::to_string(r.m);
    case RecognitionResult::Kind::Cyclic:
      return "Z" + std::to_string(r.m);
    case RecognitionResult::Kind::OtherFinite:
      break;
  }
  return "finite of order " + std::to_string(r.m);
}

RecognitionResult recognize_finite(const GroupTable& g, std::size_t cap) {
  using Kind = RecognitionResult::Kind;
  const std::size_t n = g.order;
  if (n > cap) throw SearchCapExceeded("group order " + std::to_string(n) + " exceeds the cap");
  if (n <= 2) return {Kind::Cyclic, n};

  std::vector<std::size_t> orders(n);
  for (std::uint32_t a = 0; a < n; ++a) orders[a] = g.element_order(a);

  if (n % 2 == 0) {
    const std::size_t m = n / 2;
    for (std::uint32_t r = 0; r < n; ++r) {
      if (orders[r] != m) continue;
      std::vector<char> in_r(n, 0);
      for (std::uint32_t x = 0;;) {
        in_r[x] = 1;
        x = g(x, r);
        if (x == 0) break;
      }
      const std::uint32_t r_inv = g.inverse(r);
      for (std::uint32_t s = 0; s < n; ++s)
        if (orders[s] == 2 && !in_r[s] && g(g(s, r), s) == r_inv) return {Kind::Dihedral, m};
    }
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (orders[a] == n) return {Kind::Cyclic, n};
  return {Kind::OtherFinite, n};
}

WitnessReport nondihedral_quotient_witness(const Presentation& p, const std::vector<Word>& extra,
                                           std::size_t budget) {
  std::vector<Word> rels = p.relators();
  rels.insert(rels.end(), extra.begin(), extra.end());
  Presentation quotient(p.names(), std::move(rels), p.label());
  WitnessReport report;
  EnumerationOutcome outcome = todd_coxeter(quotient, std::nullopt, budget);
  const auto* done = std::get_if<Completed>(&outcome);
  if (!done) {
    report.reason = "quotient enumeration exceeded the budget";
    return report;
  }
  report.quotient_order = done->order;
  RecognitionResult r = recognize_finite(multiplication_table(outcome));
  report.recognition = r;
  if (r.kind == RecognitionResult::Kind::OtherFinite) {
    report.status = WitnessReport::Status::Witness;
    report.reason = "finite quotient is neither cyclic nor dihedral";
  } else {
    report.reason = "quotient is " + describe(r) + ", which says nothing about p";
  }
  return report;
}

}  // namespace tautwist
