#include <matchlab/combinatorics.hpp>

#include <stdexcept>
#include <vector>

namespace matchlab {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

Int falling_factorial(long n, long s) {
  if (s < 0) throw std::invalid_argument("falling_factorial: negative length");
  Int p = 1;
  for (long t = 0; t < s; ++t) p *= Int(n - t);
  return p;
}

Rational bernoulli(long m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  thread_local std::vector<Rational> table{Rational(1), Rational(-1, 2)};
  while (static_cast<long>(table.size()) <= m) {
    long i = static_cast<long>(table.size());
    Rational acc;
    for (long k = 0; k < i; ++k) acc += Rational(binomial(i + 1, k)) * table[k];
    table.push_back(-acc / Rational(i + 1));
  }
  return table[m];
}

namespace {

// Triangular tables grown row by row; per-thread so reads never race.
const std::vector<std::vector<Int>>& stirling1_table(long n) {
  thread_local std::vector<std::vector<Int>> rows{{Int(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    long i = static_cast<long>(rows.size());
    const auto& prev = rows.back();
    std::vector<Int> row(i + 1);
    for (long k = 1; k <= i; ++k) {
      row[k] = prev[k - 1];
      if (k < i) row[k] += Int(i - 1) * prev[k];
    }
    // row[0] stays 0 for i >= 1
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::vector<Int>>& stirling2_table(long n) {
  thread_local std::vector<std::vector<Int>> rows{{Int(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    long i = static_cast<long>(rows.size());
    const auto& prev = rows.back();
    std::vector<Int> row(i + 1);
    for (long k = 1; k <= i; ++k) {
      row[k] = prev[k - 1];
      if (k < i) row[k] += Int(k) * prev[k];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Int stirling_first_unsigned(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling_first_unsigned: n < 0");
  if (k < 0 || k > n) return 0;
  return stirling1_table(n)[n][k];
}

Int stirling_second(long n, long k) {
  if (n < 0) throw std::invalid_argument("stirling_second: n < 0");
  if (k < 0 || k > n) return 0;
  return stirling2_table(n)[n][k];
}

}  // namespace matchlab
