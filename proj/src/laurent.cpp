#include "tautwist/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautwist {

LaurentPoly::LaurentPoly(long min_exp, std::vector<mpz_class> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(long exp, const mpz_class& coeff) { return {exp, {coeff}}; }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

mpz_class LaurentPoly::coeff(long exp) const {
  long i = exp - min_exp_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[i];
}

mpz_class LaurentPoly::evaluate(const mpz_class& t) const {
  if (min_exp_ < 0 && abs(t) != 1)
    throw std::domain_error("negative powers evaluate to integers only at t = 1 or t = -1");
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  if (min_exp_ >= 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(min_exp_));
    return acc * scale;
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(-min_exp_));
  return acc / scale;
}

LaurentPoly LaurentPoly::mirrored() const {
  std::vector<mpz_class> rev(coeffs_.rbegin(), coeffs_.rend());
  return {is_zero() ? 0 : -max_exp(), std::move(rev)};
}

LaurentPoly LaurentPoly::shifted(long k) const {
  return is_zero() ? *this : LaurentPoly(min_exp_ + k, coeffs_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  long lo = std::min(min_exp_, rhs.min_exp_);
  long hi = std::max(max_exp(), rhs.max_exp());
  std::vector<mpz_class> out(hi - lo + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[min_exp_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[rhs.min_exp_ - lo + i] += rhs.coeffs_[i];
  *this = LaurentPoly(lo, std::move(out));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  std::vector<mpz_class> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return {a.min_exp_, std::move(out)};
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return {a.min_exp_ + b.min_exp_, std::move(out)};
}

LaurentPoly dot_normal_form(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.min_exp());
  return out.coeffs().back() < 0 ? -out : out;
}

bool dot_equal(const LaurentPoly& a, const LaurentPoly& b) {
  return dot_normal_form(a) == dot_normal_form(b);
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    mpz_class c = p.coeffs()[i];
    if (c == 0) continue;
    long e = p.min_exp() + static_cast<long>(i);
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string power = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
    if (power.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += power;
    }
  }
  return out;
}

}  // namespace tautwist
