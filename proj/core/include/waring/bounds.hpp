#pragma once

#include <optional>

#include "waring/recursion.hpp"

namespace waring {

bool is_power_of_two(int k);

// Threshold of the certificate criterion: 4k when k is a power of two
// (congruence obstruction), else 3k/2. k >= 3.
double zeta(int k);

// A pair (t, v) certifying G(k) <= 2t + v:
//   i)  2t + v >= zeta(k)           (checked in exact integer arithmetic)
//   ii) v * 2^{1-k} > Delta(t)      (strict)
struct BoundCertificate {
    int k = 0;
    int t = 0;
    int v = 0;
    double delta_t = 0.0;
    double zeta_k = 0.0;
    int bound = 0;  // 2t + v

    bool condition_i() const;
    bool condition_ii() const;
};

// Searches t over the trace rows (and its initial index) and v >= 1 for the
// certificate minimizing 2t + v, both conditions re-verified on the result.
// A v_hint pins v and searches only t. Throws NoCertificate when nothing in
// range qualifies.
BoundCertificate derive_bound(int k, const Trace& trace, std::optional<int> v_hint = {});

// sigma-hat of the large-k bound formula, with the O(log log k / log k)
// term of lambda dropped.
struct SigmaHat {
    int k = 0;
    double lambda_hat = 0.0;  // log k + log log k
    double sigma_hat = 0.0;   // log(1 + 1/k) / (4 (1 + lambda_hat))

    static SigmaHat at(int k);  // k >= 3
};

// G(k) <= 3 + 2u + 2*floor(Delta(u) / (2 sigma-hat)).
long long g_bound_large_k(int k, long long u, double delta_u);

}  // namespace waring
