#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautwist/presentation.hpp"

namespace tautwist {

/// Twist boxes (m_i, n_i) of a 1-fusion ribbon presentation R(m_1, n_1, ..., m_s, n_s).
struct BandSpec {
  std::vector<std::pair<long, long>> twists;
};

/// Coxeter label; std::nullopt stands for ∞ (no relation imposed).
using CoxeterLabel = std::optional<long>;

/// ⟨a, b | a², (ab)², bᵐ⟩
Presentation dihedral(long m);
/// ⟨a | aᵐ⟩
Presentation cyclic(long m);
/// ⟨x1, x2, x3 | x1², x2², x3², (x1x2)^m1, (x2x3)^m2, (x3x1)^m3⟩, omitting ∞ labels.
Presentation coxeter(CoxeterLabel m1, CoxeterLabel m2, CoxeterLabel m3);

/// ⟨x1, x2 | x1², x1 (x2x1)ⁿ x2 ((x2x1)ⁿ)⁻¹⟩; negative n uses -n-1.
TauPresentation tau_torus2(long n);
/// p generators a1..ap; relators a1² and a_k w(k) a_{k+α} w(k)⁻¹ for k = 1..p-1.
TauPresentation tau_torus(long p, long q);

/// Twisting parameter n' of the parity-collapsed band: each box keeps one
/// crossing when odd and none when even. The collapsed diagram is the
/// torus-type diagram with |alternating sum| = 2n' + 1.
long one_fusion_collapsed_n(const BandSpec& band);
TauPresentation tau_one_fusion(const BandSpec& band);

/// Verbatim presentations read off the τ-handle diagrams of specific knots.
Presentation fixture(std::string_view name);
std::vector<std::string> fixture_names();
/// The τ-shaped subset of the fixture registry.
bool fixture_is_tau(std::string_view name);

}  // namespace tautwist
