#include "tautwist/builders.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace tautwist {

Presentation dihedral(long m) {
  if (m <= 0) throw std::invalid_argument("dihedral: m must be positive");
  Word a = Word::generator(0), b = Word::generator(1);
  return Presentation({"a", "b"}, {power(a, 2), power(a * b, 2), power(b, m)},
                      "D" + std::to_string(m));
}

Presentation cyclic(long m) {
  if (m <= 0) throw std::invalid_argument("cyclic: m must be positive");
  return Presentation(1, {Word::generator(0, static_cast<int>(m))}, "Z" + std::to_string(m));
}

Presentation coxeter(CoxeterLabel m1, CoxeterLabel m2, CoxeterLabel m3) {
  std::array<CoxeterLabel, 3> labels{m1, m2, m3};
  std::string label = "W(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (labels[i] && *labels[i] < 2)
      throw std::invalid_argument("coxeter: labels must be >= 2 or infinity");
    label += (i ? "," : "") + (labels[i] ? std::to_string(*labels[i]) : std::string("inf"));
  }
  label += ")";
  std::vector<Word> rels;
  for (std::uint32_t g = 0; g < 3; ++g) rels.push_back(Word::generator(g, 2));
  for (std::uint32_t i = 0; i < 3; ++i) {
    if (!labels[i]) continue;
    Word pair = Word::generator(i) * Word::generator((i + 1) % 3);
    rels.push_back(power(pair, *labels[i]));
  }
  return Presentation(3, std::move(rels), label);
}

TauPresentation tau_torus2(long n) {
  long m = n >= 0 ? n : -n - 1;
  Word x1 = Word::generator(0), x2 = Word::generator(1);
  Word w = power(x2 * x1, m);
  Presentation p(2, {power(x1, 2), x1 * w * x2 * invert(w)},
                 "tau S(T_{2," + std::to_string(2 * n + 1) + "})");
  return certify_tau(p);
}

TauPresentation tau_torus(long p, long q) {
  if (!(1 < p && p < q)) throw std::invalid_argument("tau_torus: need 1 < p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("tau_torus: p and q must be coprime");
  const long quotient = q / p;
  const long remainder = q % p;
  // a_i with i taken modulo p into 1..p; generator index is i-1.
  auto a = [p](long i) {
    long r = ((i - 1) % p + p) % p;
    return Word::generator(static_cast<std::uint32_t>(r));
  };
  std::vector<Word> rels{power(a(1), 2)};
  for (long k = 1; k <= p - 1; ++k) {
    Word cycle;
    for (long i = 1; i <= p; ++i) cycle *= a(i + k);
    Word w = power(cycle, quotient);
    for (long j = 1; j <= remainder - 1; ++j) w *= a(k + j);
    rels.push_back(a(k) * w * a(k + remainder) * invert(w));
  }
  std::vector<std::string> names;
  for (long i = 1; i <= p; ++i) names.push_back("a" + std::to_string(i));
  Presentation pres(std::move(names), std::move(rels),
                    "tau S(T_{" + std::to_string(p) + "," + std::to_string(q) + "})");
  return certify_tau(pres);
}

long one_fusion_collapsed_n(const BandSpec& band) {
  if (band.twists.empty()) throw std::invalid_argument("band needs at least one twist pair");
  // Boxes read from the tail: n_s, m_s, n_{s-1}, ..., n_1, m_1.
  long value = 1;
  long parity = 0;
  int sign = 1;
  for (auto it = band.twists.rbegin(); it != band.twists.rend(); ++it) {
    for (long box : {it->second, it->first}) {
      parity = (parity + std::labs(box) % 2) % 2;
      sign = -sign;
      value += sign * (parity ? -1 : 1);
    }
  }
  return (std::labs(value) - 1) / 2;
}

TauPresentation tau_one_fusion(const BandSpec& band) {
  return tau_torus2(one_fusion_collapsed_n(band));
}

namespace {

struct FixtureEntry {
  const char* name;
  const char* text;
};

// Relators copied from the τ-handle diagrams, before any simplification.
constexpr FixtureEntry kFixtures[] = {
    {"12n553",
     "< x1, x2, x3 | x1^2,"
     " x1*(x2*x1^-1*x2*x3^-1*x2^-1)*x3*(x2*x1^-1*x2*x3^-1*x2^-1)^-1,"
     " x2*(x3*x2^-1*x1*x2^-1*x1^-1*x2*x1^-1*x2)*x3*(x3*x2^-1*x1*x2^-1*x1^-1*x2*x1^-1*x2)^-1 >"},
    {"12n556",
     "< x1, x2, x3 | x1^2,"
     " x1*(x2^-1*x1^-1*x2*x3^-1*x2^-1)*x3*(x2^-1*x1^-1*x2*x3^-1*x2^-1)^-1,"
     " x2*(x3*x2^-1*x1*x2*x1*x2^-1*x1^-1*x2)*x3*(x3*x2^-1*x1*x2*x1*x2^-1*x1^-1*x2)^-1 >"},
    {"3_1#6_1#3_1*",
     "< x1, x2, x3 | x1^2,"
     " x1*(x2^-1*x1^-1*x3*x2)*x3*(x2^-1*x1^-1*x3*x2)^-1,"
     " x2*(x3^-1*x1*x2*x1*x2^-1*x1^-1)*x3*(x3^-1*x1*x2*x1*x2^-1*x1^-1)^-1 >"},
    {"3_1#3_1#3_1*#3_1*",
     "< x1, x2, x3 | x1^2,"
     " x2*(x3^-1*x2)*x3*(x3^-1*x2)^-1,"
     " x1*(x3*x2^-1*x3^-1*x2*x3^-1*x1)*x2*(x3*x2^-1*x3^-1*x2*x3^-1*x1)^-1 >"},
    {"12a990",
     "< x1, x2, x3 | x1^2,"
     " x1*(x3^-1*x1*x3^-1)*x3*(x3^-1*x1*x3^-1)^-1,"
     " x2*(x1^-1*x2^-1*x3^-1*x2)*x3*(x1^-1*x2^-1*x3^-1*x2)^-1 >"},
    {"10_99_D2",
     "< x1, x2, x3 | x1^2,"
     " x1*(x2*x1)*x2*(x2*x1)^-1,"
     " x2*(x3^-1*x2^-1)*x3*(x3^-1*x2^-1)^-1 >"},
    {"12a427_D2",
     "< x1, x2, x3 | x1^2,"
     " x1*(x3^-1*x2*x1*x2*x1^-1*x2^-1*x3*x1^-1)*x3*(x3^-1*x2*x1*x2*x1^-1*x2^-1*x3*x1^-1)^-1,"
     " x2*(x1^-1*x2^-1*x3*x1^-1*x3^-1*x2*x1*x2*x1^-1*x2^-1)*x3"
     "*(x1^-1*x2^-1*x3*x1^-1*x3^-1*x2*x1*x2*x1^-1*x2^-1)^-1 >"},
    {"12a1225_D2",
     "< x1, x2, x3 | x1^2,"
     " x1*(x3^-1*x1^-1*x3^-1)*x3*(x3^-1*x1^-1*x3^-1)^-1,"
     " x2*(x1^-1*x2^-1*x3^-1*x2)*x3*(x1^-1*x2^-1*x3^-1*x2)^-1 >"},
    {"irregular_common",
     "< x1, x2, x3 | x1^2,"
     " x1*(x2*x1)*x2*(x2*x1)^-1,"
     " x2*(x3*x2)*x3*(x3*x2)^-1 >"},
};

}  // namespace

Presentation fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (name == f.name) {
      Presentation p = parse_presentation(f.text);
      p.set_label(f.name);
      return p;
    }
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : kFixtures) names.emplace_back(f.name);
  return names;
}

bool fixture_is_tau(std::string_view name) { return is_tau_shape(fixture(name)); }

}  // namespace tautwist
