#include "waring/bounds.hpp"

#include <cmath>
#include <string>

namespace waring {

bool is_power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

double zeta(int k) {
    if (k < 3) throw DomainError("zeta: k must be >= 3");
    return is_power_of_two(k) ? 4.0 * k : 1.5 * k;
}

namespace {

// Condition (i) in exact integers: 2t+v >= 4k, or 2(2t+v) >= 3k otherwise
// (3k/2 may be a half-integer; no float compare at equality).
bool cond_i(int k, int t, int v) {
    const long long b = 2ll * t + v;
    return is_power_of_two(k) ? b >= 4ll * k : 2 * b >= 3ll * k;
}

// Condition (ii), strict: v * 2^{1-k} > delta_t. ldexp is exact here.
bool cond_ii(int k, int v, double delta_t) {
    return static_cast<double>(v) * std::ldexp(1.0, 1 - k) > delta_t;
}

}  // namespace

bool BoundCertificate::condition_i() const { return cond_i(k, t, v); }
bool BoundCertificate::condition_ii() const { return cond_ii(k, v, delta_t); }

BoundCertificate derive_bound(int k, const Trace& trace, std::optional<int> v_hint) {
    if (k < 3) throw DomainError("derive_bound: k must be >= 3");
    const int v_max = static_cast<int>(std::ceil(zeta(k)));

    struct Candidate {
        int t, v;
        double delta_t;
    };
    std::optional<Candidate> best;
    auto offer = [&](int t, double delta_t, int v) {
        if (!cond_i(k, t, v) || !cond_ii(k, v, delta_t)) return;
        if (!best || 2 * t + v < 2 * best->t + best->v ||
            (2 * t + v == 2 * best->t + best->v && t < best->t))
            best = Candidate{t, v, delta_t};
    };

    auto scan_t = [&](int t, double delta_t) {
        if (v_hint) {
            offer(t, delta_t, *v_hint);
        } else {
            for (int v = 1; v <= v_max; ++v) offer(t, delta_t, v);
        }
    };
    scan_t(trace.initial_s, trace.initial_delta);
    for (const TraceRow& row : trace.rows) scan_t(row.s, row.delta);

    if (!best)
        throw NoCertificate("no (t, v) pair certifies k=" + std::to_string(k) +
                            " from this trace (Delta never got small enough)");

    BoundCertificate cert;
    cert.k = k;
    cert.t = best->t;
    cert.v = best->v;
    cert.delta_t = best->delta_t;
    cert.zeta_k = zeta(k);
    cert.bound = 2 * best->t + best->v;
    // re-verify on the returned fields
    if (!cert.condition_i() || !cert.condition_ii())
        throw Error("derive_bound: certificate failed its own re-check");
    return cert;
}

SigmaHat SigmaHat::at(int k) {
    if (k < 3) throw DomainError("SigmaHat: k must be >= 3");
    SigmaHat sh;
    sh.k = k;
    sh.lambda_hat = std::log(static_cast<double>(k)) + std::log(std::log(static_cast<double>(k)));
    sh.sigma_hat = std::log1p(1.0 / k) / (4.0 * (1.0 + sh.lambda_hat));
    return sh;
}

long long g_bound_large_k(int k, long long u, double delta_u) {
    if (k < 3) throw DomainError("g_bound_large_k: k must be >= 3");
    if (u < 1) throw DomainError("g_bound_large_k: u must be >= 1");
    if (!(delta_u >= 0.0)) throw DomainError("g_bound_large_k: delta_u must be >= 0");
    const double sh = SigmaHat::at(k).sigma_hat;
    return 3 + 2 * u + 2 * static_cast<long long>(std::floor(delta_u / (2.0 * sh)));
}

}  // namespace waring
