#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tautwist/abelian.hpp"
#include "tautwist/builders.hpp"
#include "tautwist/laurent.hpp"

namespace tautwist {

/// t^(m_1+…+m_s) times the alternating sum 1 - t^(-c_1) + t^(-c_2) - …, where c_k
/// are partial sums of n_s, m_s, n_{s-1}, m_{s-1}, …, n_1, m_1.
LaurentPoly alexander_one_fusion(const BandSpec& band);
/// 1 + Σ_i (t^φ(i) - t^ψ(i)) with φ(i) = Σ_{j>=i} (m_j + n_j) and ψ(i) = φ(i) - m_i.
LaurentPoly f_poly(const BandSpec& band);
/// |p(-1)|
mpz_class determinant(const LaurentPoly& p);

/// Conway notation C[a_1, …, a_n]; entries must be nonzero.
struct ConwayCode {
  std::vector<long> entries;
};

/// (p_n, q_n) of [0, a_1, …, a_n] from the convergent recurrences.
std::pair<mpz_class, mpz_class> continued_fraction(const ConwayCode& code);
/// |d_n| with d_0 = 1, d_1 = a_1, d_k = a_k d_{k-1} + d_{k-2}.
mpz_class det_2bridge(const ConwayCode& code);

/// |pq + qr + rp|; every parameter must be odd.
mpz_class det_pretzel(long p, long q, long r);

enum class RibbonFamily { Zero, One, Two };
/// Family 0 takes a_1..a_n > 0; Families 1 and 2 take (a, b) with a, b != 0.
ConwayCode family_code(RibbonFamily family, const std::vector<long>& params);
/// Closed forms (8ab+2b-1)² and (8ab+2a+2b+1)²; Family 0 has none and throws.
mpz_class family_dets(RibbonFamily family, long a, long b);

/// H_0 … H_4 of a pochette surgery S⁴(e, p/q, ε) with linking number ell.
struct HomologyProfile {
  std::array<AbelianInvariants, 5> groups;
};
HomologyProfile pochette_h1(long p, long q, long ell);

}  // namespace tautwist
