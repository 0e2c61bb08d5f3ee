#include "qint/coin.hpp"

#include <bit>
#include <stdexcept>

namespace qint {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("coin: flip count must be positive");
}

BigInt pow2(int e) { return BigInt(1) << e; }

// Squared prefix sums of Pascal row n, k = 0..n-1.
BigInt squared_prefix_sum(int n) {
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int k = r; k >= 1; --k) row[k] += row[k - 1];
  }
  BigInt prefix = 0;
  BigInt total = 0;
  for (int k = 0; k < n; ++k) {
    prefix += row[k];
    total += prefix * prefix;
  }
  return total;
}

BigInt central_binomial(int n) {
  // C(2n, n) built incrementally: C(2(k+1), k+1) = C(2k,k) * 2(2k+1)/(k+1).
  BigInt c = 1;
  for (int k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= k + 1;
  }
  return c;
}

}  // namespace

BigRational expectation_exact(int n) {
  require_positive(n);
  return BigRational(squared_prefix_sum(n), pow2(2 * n));
}

BigRational expectation_closed(int n) {
  require_positive(n);
  // a_n = (n/2) (1 - C(2n,n)/2^(2n)).
  BigInt four_n = pow2(2 * n);
  return BigRational(BigInt(n) * (four_n - central_binomial(n)), 2 * four_n);
}

BigRational expectation_ratio(int n) {
  return expectation_closed(n) * BigRational(2) / BigRational(n);
}

std::vector<RatioRow> ratio_table(int n_max, int digits) {
  require_positive(n_max);
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));

  // One pass down Pascal's triangle; row r is rebuilt from row r-1 in place.
  std::vector<BigInt> row{1};
  for (int n = 1; n <= n_max; ++n) {
    row.push_back(0);
    for (int k = n; k >= 1; --k) row[k] += row[k - 1];

    BigInt prefix = 0;
    BigInt total = 0;
    for (int k = 0; k < n; ++k) {
      prefix += row[k];
      total += prefix * prefix;
    }
    BigRational a(total, pow2(2 * n));
    BigRational ratio = a * BigRational(2) / BigRational(n);
    rows.push_back({n, a, ratio.to_decimal_string(digits)});
  }
  return rows;
}

bool bound_check(int n) {
  require_positive(n);
  return expectation_exact(n) <= BigRational(BigInt(n), BigInt(2));
}

double centered_two_flip(double a) {
  if (a <= 0.0) return 5.0 / 8.0 - a;
  if (a <= 2.0) return 5.0 / 8.0 * (1.0 - a);
  return 11.0 / 8.0 - a;
}

SimpleFunction coin_head_count(int n) {
  require_positive(n);
  if (n > 20) throw std::invalid_argument("coin_head_count: explicit model capped at n = 20");
  std::uint32_t space = 1u << n;
  std::vector<std::vector<std::uint32_t>> by_heads(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t outcome = 0; outcome < space; ++outcome) {
    by_heads[static_cast<std::size_t>(std::popcount(outcome))].push_back(outcome);
  }
  std::vector<SimpleFunction::Piece> pieces;
  for (int k = 0; k <= n; ++k) {
    pieces.emplace_back(static_cast<double>(k), FiniteSubset(space, std::move(by_heads[k])));
  }
  return SimpleFunction(std::move(pieces));
}

}  // namespace qint
