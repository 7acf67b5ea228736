#include "tautwist/knot_invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace tautwist {

LaurentPoly alexander_one_fusion(const BandSpec& band) {
  if (band.twists.empty()) throw std::invalid_argument("band needs at least one twist pair");
  long total_m = 0;
  for (const auto& [m, n] : band.twists) total_m += m;
  LaurentPoly sum = LaurentPoly::constant(1);
  long partial = 0;
  int sign = 1;
  for (auto it = band.twists.rbegin(); it != band.twists.rend(); ++it) {
    for (long box : {it->second, it->first}) {
      partial += box;
      sign = -sign;
      sum += LaurentPoly::monomial(-partial, sign);
    }
  }
  return sum.shifted(total_m);
}

LaurentPoly f_poly(const BandSpec& band) {
  if (band.twists.empty()) throw std::invalid_argument("band needs at least one twist pair");
  const std::size_t s = band.twists.size();
  LaurentPoly f = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < s; ++i) {
    long phi = 0;
    for (std::size_t j = i; j < s; ++j) phi += band.twists[j].first + band.twists[j].second;
    long psi = phi - band.twists[i].first;
    f += LaurentPoly::monomial(phi) - LaurentPoly::monomial(psi);
  }
  return f;
}

mpz_class determinant(const LaurentPoly& p) { return abs(p.evaluate(-1)); }

std::pair<mpz_class, mpz_class> continued_fraction(const ConwayCode& code) {
  if (code.entries.empty()) throw std::invalid_argument("Conway code needs at least one entry");
  for (long a : code.entries)
    if (a == 0) throw std::invalid_argument("Conway code entries must be nonzero");
  // a_0 = 0: p_0 = 0, p_1 = 1, q_0 = 1, q_1 = a_1.
  mpz_class p_prev = 0, p = 1, q_prev = 1, q = code.entries[0];
  for (std::size_t k = 1; k < code.entries.size(); ++k) {
    mpz_class a = code.entries[k];
    mpz_class p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
  return {p, q};
}

mpz_class det_2bridge(const ConwayCode& code) {
  if (code.entries.empty()) throw std::invalid_argument("Conway code needs at least one entry");
  mpz_class d_prev = 1, d = 0;
  for (std::size_t k = 0; k < code.entries.size(); ++k) {
    if (code.entries[k] == 0) throw std::invalid_argument("Conway code entries must be nonzero");
    if (k == 0) {
      d = code.entries[0];
      continue;
    }
    mpz_class next = code.entries[k] * d + d_prev;
    d_prev = d;
    d = next;
  }
  return abs(d);
}

mpz_class det_pretzel(long p, long q, long r) {
  for (long x : {p, q, r})
    if (x % 2 == 0) throw std::invalid_argument("pretzel parameters must be odd");
  mpz_class a = p, b = q, c = r;
  return abs(a * b + b * c + c * a);
}

ConwayCode family_code(RibbonFamily family, const std::vector<long>& params) {
  switch (family) {
    case RibbonFamily::Zero: {
      if (params.empty()) throw std::invalid_argument("Family 0 needs a_1..a_n");
      for (long a : params)
        if (a <= 0) throw std::invalid_argument("Family 0 entries must be positive");
      std::vector<long> e(params.begin(), params.end());
      e.push_back(params.back() + 2);
      for (std::size_t i = params.size() - 1; i-- > 0;) e.push_back(params[i]);
      return {e};
    }
    case RibbonFamily::One:
    case RibbonFamily::Two: {
      if (params.size() != 2 || params[0] == 0 || params[1] == 0)
        throw std::invalid_argument("Families 1 and 2 take nonzero (a, b)");
      long a = params[0], b = params[1];
      if (family == RibbonFamily::One) return {{2 * a, 2, 2 * b, -2, -2 * a, 2 * b}};
      return {{2 * a, 2, 2 * b, 2 * a, 2, 2 * b}};
    }
  }
  throw std::invalid_argument("unknown family");
}

mpz_class family_dets(RibbonFamily family, long a, long b) {
  if (a == 0 || b == 0) throw std::invalid_argument("family parameters must be nonzero");
  mpz_class A = a, B = b, root;
  switch (family) {
    case RibbonFamily::One:
      root = 8 * A * B + 2 * B - 1;
      break;
    case RibbonFamily::Two:
      root = 8 * A * B + 2 * A + 2 * B + 1;
      break;
    case RibbonFamily::Zero:
      throw std::invalid_argument("Family 0 has no closed-form determinant");
  }
  return root * root;
}

HomologyProfile pochette_h1(long p, long q, long ell) {
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
  HomologyProfile h;
  const AbelianInvariants z{{}, 1};
  h.groups[0] = z;
  h.groups[4] = z;
  mpz_class k = mpz_class(p) + mpz_class(q) * ell;
  if (k != 0) {
    AbelianInvariants torsion;
    if (abs(k) > 1) torsion.torsion.push_back(abs(k));
    h.groups[1] = torsion;
    h.groups[2] = torsion;
    h.groups[3] = {};
  } else {
    h.groups[1] = z;
    h.groups[2] = {{}, 2};
    h.groups[3] = z;
  }
  return h;
}

}  // namespace tautwist
