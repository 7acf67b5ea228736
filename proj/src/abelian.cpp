#include "tautwist/abelian.hpp"

#include <stdexcept>

namespace tautwist {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

mpz_class determinant(const IntMatrix& square) {
  // Bareiss fraction-free elimination.
  const std::size_t n = square.size();
  if (n == 0) return 1;
  IntMatrix m = square;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i)
    out.push_back(d[i][i]);
  return out;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : a_(a), rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()),
        u_(identity_matrix(rows_)), v_(identity_matrix(cols_)) {}

  SmithForm run() {
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      if (!move_smallest_to(t, t)) break;
      for (;;) {
        if (!clear_column(t) || !clear_row(t)) continue;
        if (!fix_divisibility(t)) break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
    return {a_, u_, v_};
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a_[i], a_[j]);
    std::swap(u_[i], u_[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a_) std::swap(row[i], row[j]);
    for (auto& row : v_) std::swap(row[i], row[j]);
  }
  // row_i += q · row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < cols_; ++c) a_[i][c] += q * a_[j][c];
    for (std::size_t c = 0; c < rows_; ++c) u_[i][c] += q * u_[j][c];
  }
  // col_i += q · col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (auto& row : a_) row[i] += q * row[j];
    for (auto& row : v_) row[i] += q * row[j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
  }

  bool move_smallest_to(std::size_t t, std::size_t from_col) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = from_col; j < cols_; ++j)
        if (a_[i][j] != 0 && (bi == rows_ || abs(a_[i][j]) < abs(a_[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows_) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  // Returns true once every entry below the pivot is zero.
  bool clear_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
      add_row(i, t, -q);
      if (a_[i][t] != 0) clean = false;
    }
    if (clean) return true;
    std::size_t best = t;
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (a_[i][t] != 0 && abs(a_[i][t]) < abs(a_[best][t])) best = i;
    swap_rows(best, t);
    return false;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
      add_col(j, t, -q);
      if (a_[t][j] != 0) clean = false;
    }
    if (clean) return true;
    std::size_t best = t;
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (a_[t][j] != 0 && abs(a_[t][j]) < abs(a_[t][best])) best = j;
    swap_cols(best, t);
    return false;
  }

  // Returns true if a row was folded in because the pivot failed to divide it.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (a_[i][j] % a_[t][t] != 0) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }

  IntMatrix a_;
  std::size_t rows_, cols_;
  IntMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a[0].size()) throw std::invalid_argument("ragged matrix");
  return SmithReducer(a).run();
}

bool verify_smith(const IntMatrix& a, const SmithForm& s) {
  if (multiply(multiply(s.u, a), s.v) != s.d) return false;
  if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) return false;
  for (std::size_t i = 0; i < s.d.size(); ++i)
    for (std::size_t j = 0; j < s.d[i].size(); ++j)
      if (i != j && s.d[i][j] != 0) return false;
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
  }
  return true;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const Word& r : p.relators()) {
    std::vector<mpz_class> row(p.ngens(), 0);
    for (Letter l : r.letters()) row[l.gen] += l.sign;
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants out;
  IntMatrix m = relation_matrix(p);
  std::size_t nonzero = 0;
  if (!m.empty() && p.ngens() > 0) {
    for (const mpz_class& d : smith_normal_form(m).diagonal()) {
      if (d == 0) continue;
      ++nonzero;
      if (d > 1) out.torsion.push_back(d);
    }
  }
  out.free_rank = p.ngens() - nonzero;
  return out;
}

std::string render_abelian(const AbelianInvariants& a) {
  std::string out;
  for (const mpz_class& d : a.torsion) out += (out.empty() ? "Z" : " x Z") + d.get_str();
  if (a.free_rank > 0)
    out += (out.empty() ? "Z^" : " x Z^") + std::to_string(a.free_rank);
  return out.empty() ? "0" : out;
}

}  // namespace tautwist
