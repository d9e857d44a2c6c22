#include "waring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace waring {

std::string to_decimal(uint128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_decimal(int128 v) {
    if (v < 0) return "-" + to_decimal(static_cast<uint128>(-v));
    return to_decimal(static_cast<uint128>(v));
}

namespace {

// x^k with overflow detection against a 128-bit budget.
uint128 checked_pow(long long x, int k) {
    uint128 r = 1;
    const uint128 cap = ~uint128{0};
    for (int i = 0; i < k; ++i) {
        if (x != 0 && r > cap / static_cast<uint128>(x)) throw Overflow("x^k exceeds 128 bits");
        r *= static_cast<uint128>(x);
    }
    return r;
}

void check_instance(int k, int s, long long p_limit) {
    if (k < 1 || s < 1 || p_limit < 1)
        throw DomainError("count: need k >= 1, s >= 1, p_limit >= 1");
    const uint128 top = checked_pow(p_limit, k);
    if (top > (~uint128{0}) / static_cast<unsigned>(s))
        throw Overflow("s * p_limit^k exceeds 128 bits; request a smaller instance");
}

// Sorted multiset of all s-fold power sums over [1, P]. A sorted vector
// doubles as the multiplicity table and keeps iteration deterministic.
std::vector<uint128> power_sum_table(int k, int s, long long p_limit, std::size_t cap) {
    std::size_t total = 1;
    for (int i = 0; i < s; ++i) {
        if (total > cap / static_cast<std::size_t>(p_limit))
            throw CapExceeded("power-sum table would exceed the configured cap");
        total *= static_cast<std::size_t>(p_limit);
    }
    std::vector<uint128> powers(static_cast<std::size_t>(p_limit));
    for (long long x = 1; x <= p_limit; ++x)
        powers[static_cast<std::size_t>(x - 1)] = checked_pow(x, k);

    std::vector<uint128> sums{0};
    sums.reserve(total);
    for (int var = 0; var < s; ++var) {
        std::vector<uint128> next;
        next.reserve(sums.size() * powers.size());
        for (uint128 base : sums)
            for (uint128 p : powers) next.push_back(base + p);
        sums = std::move(next);
    }
    std::sort(sums.begin(), sums.end());
    return sums;
}

uint128 sum_squared_multiplicities(const std::vector<uint128>& sorted) {
    uint128 total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const uint128 m = j - i;
        total += m * m;
        i = j;
    }
    return total;
}

// value -> multiplicity pairs of a sorted multiset
std::vector<std::pair<uint128, uint128>> runs(const std::vector<uint128>& sorted) {
    std::vector<std::pair<uint128, uint128>> out;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.emplace_back(sorted[i], static_cast<uint128>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

CountResult count_auxiliary(int k, int s, long long p_limit, std::size_t table_cap) {
    check_instance(k, s, p_limit);
    const std::vector<uint128> sums = power_sum_table(k, s, p_limit, table_cap);
    return {k, s, p_limit, sum_squared_multiplicities(sums)};
}

uint128 count_relative(int k, int s, int i, int p, int q, long long p_limit,
                       std::size_t table_cap) {
    if (!(0 < i && i < s)) throw DomainError("count_relative: need 0 < i < s");
    if (p == q) throw DomainError("count_relative: p and q must differ");
    if (p < 2 || q < 2) throw DomainError("count_relative: p, q must be primes >= 2");
    check_instance(k, s, p_limit);

    const uint128 pk = checked_pow(p, k);
    const uint128 qk = checked_pow(q, k);

    // Signed difference distributions of each side's power sums. The table
    // for m distinct sums has at most m^2 difference values; tiny ranges
    // keep this small.
    auto diff_runs = [&](int nvars) {
        const auto r = runs(power_sum_table(k, nvars, p_limit, table_cap));
        std::vector<std::pair<int128, uint128>> diffs;
        diffs.reserve(r.size() * r.size());
        for (const auto& [va, ma] : r)
            for (const auto& [vb, mb] : r)
                diffs.emplace_back(static_cast<int128>(va) - static_cast<int128>(vb), ma * mb);
        std::sort(diffs.begin(), diffs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge equal difference values
        std::vector<std::pair<int128, uint128>> merged;
        for (const auto& d : diffs) {
            if (!merged.empty() && merged.back().first == d.first)
                merged.back().second += d.second;
            else
                merged.push_back(d);
        }
        return merged;
    };

    const auto left = diff_runs(s - i);    // scaled by p^k
    const auto right = diff_runs(i);       // scaled by q^k

    // p^k * dl = q^k * dr with gcd(p, q) = 1 forces q^k | dl.
    const int128 qk_s = static_cast<int128>(qk);
    uint128 total = 0;
    for (const auto& [dl, ml] : left) {
        if (dl % qk_s != 0) continue;
        const int128 dr = (dl / qk_s) * static_cast<int128>(pk);
        const auto it = std::lower_bound(
            right.begin(), right.end(), dr,
            [](const auto& a, int128 v) { return a.first < v; });
        if (it != right.end() && it->first == dr) total += ml * it->second;
    }
    return total;
}

namespace {

std::vector<long long> primes_in(double lo, double hi) {
    std::vector<long long> out;
    const long long top = static_cast<long long>(std::floor(hi));
    for (long long n = std::max(2ll, static_cast<long long>(std::ceil(lo))); n <= top; ++n) {
        bool prime = n >= 2;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime && n >= lo && n <= hi) out.push_back(n);
    }
    return out;
}

}  // namespace

SmoothSet build_smooth_set(int k, long long p_limit, std::span<const double> theta_list,
                           std::size_t cap) {
    if (k < 1 || p_limit < 1) throw DomainError("build_smooth_set: need k >= 1, p_limit >= 1");
    for (double t : theta_list)
        if (!(t > 0.0) || t > 1.0 / k)
            throw DomainError("build_smooth_set: each theta must lie in (0, 1/k]");

    SmoothSet set;
    set.k = k;
    set.p_limit = p_limit;
    set.theta_list.assign(theta_list.begin(), theta_list.end());

    // level ranges P_i: P_0 = P, P_i = P_{i-1} / Z_i
    std::vector<double> z(theta_list.size());
    double range = static_cast<double>(p_limit);
    for (std::size_t i = 0; i < theta_list.size(); ++i) {
        z[i] = std::pow(p_limit / 2.0, theta_list[i]);
        set.level_primes.push_back(primes_in(z[i] / 2.0, z[i]));
        range /= z[i];
    }

    // innermost base set, then multiply outward with coprimality filtering
    const long long base_top = static_cast<long long>(std::floor(range));
    std::vector<long long> cur;
    for (long long x = 1; x <= base_top; ++x) cur.push_back(x);
    if (cur.size() > cap) throw CapExceeded("smooth set base interval exceeds cap");

    for (std::size_t level = theta_list.size(); level-- > 0;) {
        std::vector<long long> next;
        for (long long x : cur)
            for (long long p : set.level_primes[level]) {
                if (x % p == 0) continue;  // (p, x) = 1
                const long long prod = x * p;
                if (prod <= p_limit) next.push_back(prod);
                if (next.size() > cap) throw CapExceeded("smooth set exceeds cap");
            }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    set.elements = std::move(cur);
    return set;
}

ExponentFit empirical_exponent(int k, int s, std::span<const long long> p_limits) {
    if (p_limits.size() < 3)
        throw DomainError("empirical_exponent: need at least 3 increasing p_limits");
    for (std::size_t i = 1; i < p_limits.size(); ++i)
        if (p_limits[i] <= p_limits[i - 1])
            throw DomainError("empirical_exponent: p_limits must increase");

    ExponentFit fit;
    fit.k = k;
    fit.s = s;
    fit.p_limits.assign(p_limits.begin(), p_limits.end());

    std::vector<double> xs, ys;
    for (long long p : p_limits) {
        const CountResult r = count_auxiliary(k, s, p);
        xs.push_back(std::log(static_cast<double>(p)));
        // log of a 128-bit count via its decimal rendering would lose
        // nothing here; counts stay far below 2^53 at oracle scale
        ys.push_back(std::log(static_cast<double>(r.count)));
    }
    fit.log_counts = ys;

    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.max_residual =
            std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
    return fit;
}

}  // namespace waring
