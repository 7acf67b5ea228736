#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tautwist {

/// Integer Laurent polynomial; coeffs[i] is the coefficient of t^(min_exp + i).
/// Both ends of coeffs are nonzero unless the polynomial is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<mpz_class> coeffs);
  static LaurentPoly monomial(long exp, const mpz_class& coeff = 1);
  static LaurentPoly constant(const mpz_class& c) { return monomial(0, c); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] long min_exp() const { return min_exp_; }
  [[nodiscard]] long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] mpz_class coeff(long exp) const;

  /// Throws std::domain_error for negative exponents unless t = ±1.
  [[nodiscard]] mpz_class evaluate(const mpz_class& t) const;
  /// p(t) ↦ p(t⁻¹)
  [[nodiscard]] LaurentPoly mirrored() const;
  [[nodiscard]] LaurentPoly shifted(long k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Shift to min_exp 0 and make the leading coefficient positive.
LaurentPoly dot_normal_form(const LaurentPoly& p);
/// Equality up to multiplication by ±t^k.
bool dot_equal(const LaurentPoly& a, const LaurentPoly& b);

/// Ascending exponents, e.g. `t^-1 - 1 + t`; zero renders as `0`.
std::string render(const LaurentPoly& p);

}  // namespace tautwist
