#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tautwist/presentation.hpp"

namespace tautwist {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);
mpz_class determinant(const IntMatrix& square);

/// D = U·A·V with U, V unimodular and D diagonal, d₁ | d₂ | …, all dᵢ >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  [[nodiscard]] std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);
/// Recomputes U·A·V and the unit determinants.
bool verify_smith(const IntMatrix& a, const SmithForm& s);

struct AbelianInvariants {
  std::vector<mpz_class> torsion;  ///< d₁ | d₂ | …, each >= 2
  std::size_t free_rank = 0;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relator exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);
/// `Z2`, `Z2 x Z4 x Z^1`, `0` for the trivial group.
std::string render_abelian(const AbelianInvariants& a);

}  // namespace tautwist
