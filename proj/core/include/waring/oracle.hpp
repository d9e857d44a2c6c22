#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

using uint128 = unsigned __int128;
using int128 = __int128;

std::string to_decimal(uint128 v);
std::string to_decimal(int128 v);

// Exact solution count of the auxiliary equation
//   x_1^k + ... + x_s^k = y_1^k + ... + y_s^k,  x_i, y_i in [1, P].
// The published construction ranges over [0, P]; counting from 1 avoids the
// degenerate zeros inflating every table.
struct CountResult {
    int k = 0;
    int s = 0;
    long long p_limit = 0;
    uint128 count = 0;
};

// Meet-in-the-middle: one multiplicity table of s-fold power sums, count =
// sum of squared multiplicities. table_cap bounds the table size (P^s
// entries). Throws Overflow when s * P^k exceeds 128 bits, CapExceeded when
// the table would outgrow the cap.
CountResult count_auxiliary(int k, int s, long long p_limit,
                            std::size_t table_cap = std::size_t{1} << 27);

// Exact count for the relative equation
//   p^k (x_1^k + ... + x_{s-i}^k - y_1^k - ... - y_{s-i}^k)
//     = q^k (x_{s-i+1}^k + ... + x_s^k - y_{s-i+1}^k - ... - y_s^k)
// over [1, P]; p, q distinct primes, 0 < i < s. Tiny ranges only.
uint128 count_relative(int k, int s, int i, int p, int q, long long p_limit,
                       std::size_t table_cap = std::size_t{1} << 27);

// The recursively constructed smooth set: level i draws a prime from the
// window [Z_i/2, Z_i] with Z_i = (P/2)^{theta_i}, coprime to the factor
// built so far. An empty theta_list gives the full interval [1, P].
struct SmoothSet {
    int k = 0;
    long long p_limit = 0;
    std::vector<double> theta_list;
    std::vector<std::vector<long long>> level_primes;  // one window per level
    std::vector<long long> elements;                   // sorted, deduplicated
};

SmoothSet build_smooth_set(int k, long long p_limit, std::span<const double> theta_list,
                           std::size_t cap = std::size_t{1} << 22);

// Least-squares slope of log count against log P; the fitted slope estimates
// the growth exponent lambda_s.
struct ExponentFit {
    int k = 0;
    int s = 0;
    std::vector<long long> p_limits;
    std::vector<double> log_counts;
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

ExponentFit empirical_exponent(int k, int s, std::span<const long long> p_limits);

}  // namespace waring
