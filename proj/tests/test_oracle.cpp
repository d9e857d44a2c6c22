#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "waring/oracle.hpp"

using namespace waring;

namespace {

// Independent oracle: full 2s-nested enumeration, no shared code with the
// meet-in-the-middle path.
uint128 count_naive(int k, int s, long long P) {
    std::vector<uint128> pow(static_cast<size_t>(P) + 1, 0);
    for (long long x = 1; x <= P; ++x) {
        uint128 v = 1;
        for (int i = 0; i < k; ++i) v *= static_cast<uint128>(x);
        pow[static_cast<size_t>(x)] = v;
    }
    std::vector<long long> idx(static_cast<size_t>(2 * s), 1);
    uint128 total = 0;
    while (true) {
        uint128 lhs = 0, rhs = 0;
        for (int i = 0; i < s; ++i) lhs += pow[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        for (int i = s; i < 2 * s; ++i)
            rhs += pow[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        if (lhs == rhs) ++total;
        int pos = 2 * s - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == P) {
            idx[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return total;
}

uint128 count_relative_naive(int k, int s, int i, int p, int q, long long P) {
    auto ipow = [](long long b, int e) {
        int128 r = 1;
        for (int j = 0; j < e; ++j) r *= b;
        return r;
    };
    const int128 pk = ipow(p, k), qk = ipow(q, k);
    const int nl = s - i, nr = i;
    uint128 total = 0;
    std::vector<long long> idx(static_cast<size_t>(2 * s), 1);
    while (true) {
        int128 lhs = 0, rhs = 0;
        size_t at = 0;
        for (int j = 0; j < nl; ++j) lhs += ipow(idx[at++], k);
        for (int j = 0; j < nl; ++j) lhs -= ipow(idx[at++], k);
        for (int j = 0; j < nr; ++j) rhs += ipow(idx[at++], k);
        for (int j = 0; j < nr; ++j) rhs -= ipow(idx[at++], k);
        if (pk * lhs == qk * rhs) ++total;
        int pos = 2 * s - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == P) {
            idx[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return total;
}

uint128 binomial(long long n, int r) {
    if (n < r) return 0;
    uint128 v = 1;
    for (int j = 1; j <= r; ++j) v = v * static_cast<uint128>(n - r + j) / static_cast<unsigned>(j);
    return v;
}

uint128 factorial(int n) {
    uint128 v = 1;
    for (int j = 2; j <= n; ++j) v *= static_cast<unsigned>(j);
    return v;
}

}  // namespace

TEST_CASE("meet-in-the-middle equals naive enumeration at tiny scale") {
    for (int k : {1, 2, 3})
        for (int s : {1, 2, 3})
            for (long long P : {1, 2, 3, 5, 8}) {
                CAPTURE(k);
                CAPTURE(s);
                CAPTURE(P);
                CHECK(count_auxiliary(k, s, P).count == count_naive(k, s, P));
            }
}

TEST_CASE("one variable per side forces x = y") {
    for (int k : {1, 2, 5, 9})
        for (long long P : {1, 7, 100}) CHECK(count_auxiliary(k, 1, P).count == uint128(P));
}

TEST_CASE("linear two-variable closed form") {
    for (long long P = 1; P <= 50; ++P) {
        const uint128 expect =
            uint128(P) * static_cast<unsigned>(P + 1) * static_cast<unsigned>(2 * P + 1) / 3 -
            uint128(P) * static_cast<unsigned>(P);
        CHECK(count_auxiliary(1, 2, P).count == expect);
    }
    CHECK(count_auxiliary(1, 2, 50).count == uint128(83350));
    CHECK(count_auxiliary(1, 2, 2).count == uint128(6));
}

TEST_CASE("squares at P=8 exceed the diagonal count") {
    // 1^2 + 8^2 = 4^2 + 7^2 and 1^2 + 7^2 = 5^2 + 5^2 push the count past
    // the 2P^2 - P same-multiset floor
    const uint128 got = count_auxiliary(2, 2, 8).count;
    CHECK(got == uint128(132));
    CHECK(got > uint128(2 * 64 - 8));
}

TEST_CASE("regression counts for squares") {
    CHECK(count_auxiliary(2, 2, 20).count == uint128(1000));
    CHECK(count_auxiliary(2, 2, 40).count == uint128(4564));
    CHECK(count_auxiliary(2, 2, 80).count == uint128(20752));
}

TEST_CASE("superadditivity and floors on a sampled grid") {
    for (int k : {1, 2, 3, 4})
        for (int s : {2, 3})
            for (long long P : {5, 9, 17, 30}) {
                CAPTURE(k);
                CAPTURE(s);
                CAPTURE(P);
                const uint128 cs = count_auxiliary(k, s, P).count;
                const uint128 prev = count_auxiliary(k, s - 1, P).count;
                CHECK(cs >= uint128(P) * prev);            // append x_s = y_s
                CHECK(cs >= factorial(s) * binomial(P, s)); // permutation floor
                uint128 diag = 1;
                for (int j = 0; j < s; ++j) diag *= uint128(P);
                CHECK(cs >= diag);                          // diagonal floor
            }
}

TEST_CASE("counts are monotone in P and s") {
    uint128 prev = 0;
    for (long long P : {3, 6, 12, 24}) {
        const uint128 c = count_auxiliary(2, 2, P).count;
        CHECK(c > prev);
        prev = c;
    }
    CHECK(count_auxiliary(2, 3, 10).count >= count_auxiliary(2, 2, 10).count);
}

TEST_CASE("relative counts match naive enumeration") {
    CHECK(count_relative(1, 2, 1, 2, 3, 2) == uint128(4));
    CHECK(count_relative(1, 2, 1, 2, 3, 2) == count_relative_naive(1, 2, 1, 2, 3, 2));
    CHECK(count_relative(2, 2, 1, 2, 3, 5) == uint128(25));
    CHECK(count_relative(2, 2, 1, 2, 3, 5) == count_relative_naive(2, 2, 1, 2, 3, 5));
    CHECK(count_relative(2, 3, 1, 2, 3, 3) == count_relative_naive(2, 3, 1, 2, 3, 3));
    CHECK(count_relative(3, 2, 1, 3, 5, 4) == count_relative_naive(3, 2, 1, 3, 5, 4));
}

TEST_CASE("relative count is symmetric under swapping sides") {
    for (auto [k, s, i, p, q, P] :
         {std::tuple{2, 2, 1, 2, 3, 5}, std::tuple{2, 3, 1, 2, 3, 4}, std::tuple{1, 3, 2, 3, 5, 4}})
        CHECK(count_relative(k, s, i, p, q, P) == count_relative(k, s, s - i, q, p, P));
}

TEST_CASE("relative count preconditions") {
    CHECK_THROWS_AS(count_relative(2, 2, 0, 2, 3, 5), DomainError);
    CHECK_THROWS_AS(count_relative(2, 2, 2, 2, 3, 5), DomainError);
    CHECK_THROWS_AS(count_relative(2, 2, 1, 3, 3, 5), DomainError);
}

TEST_CASE("overflow and caps") {
    CHECK_THROWS_AS(count_auxiliary(40, 2, 1000), Overflow);
    CHECK_THROWS_AS(count_auxiliary(2, 3, 600, /*table_cap=*/100000), CapExceeded);
}

TEST_CASE("smooth set with no levels is the full interval") {
    const SmoothSet set = build_smooth_set(3, 20, {});
    std::vector<long long> expect(20);
    for (int i = 0; i < 20; ++i) expect[static_cast<size_t>(i)] = i + 1;
    CHECK(set.elements == expect);
}

TEST_CASE("one-level smooth set keeps the membership predicate") {
    const double theta = 1.0 / 3.0;
    const SmoothSet set = build_smooth_set(3, 10000, {&theta, 1});
    REQUIRE(set.level_primes.size() == 1);
    const double z = std::pow(10000.0 / 2.0, theta);
    for (long long p : set.level_primes[0]) {
        CHECK(p >= z / 2.0);
        CHECK(p <= z);
    }
    REQUIRE(!set.elements.empty());
    for (long long e : set.elements) {
        CHECK(e <= 10000);
        bool ok = false;
        for (long long p : set.level_primes[0])
            if (e % p == 0 && (e / p) % p != 0) ok = true;
        CHECK(ok);
    }
    CHECK(std::is_sorted(set.elements.begin(), set.elements.end()));
    CHECK(std::adjacent_find(set.elements.begin(), set.elements.end()) == set.elements.end());
}

TEST_CASE("two-level smooth set carries a prime from each window") {
    const std::vector<double> thetas{0.4, 0.35};
    const SmoothSet set = build_smooth_set(2, 10000, thetas);
    REQUIRE(set.level_primes.size() == 2);
    REQUIRE(!set.elements.empty());
    for (long long e : set.elements) {
        bool found = false;
        for (long long p1 : set.level_primes[0])
            for (long long p2 : set.level_primes[1])
                if (p1 != p2 && e % p1 == 0 && e % p2 == 0) found = true;
        CHECK(found);
    }
}

TEST_CASE("smooth set rejects bad thetas and tiny caps") {
    const double bad = 0.6;  // above 1/k for k=2
    CHECK_THROWS_AS(build_smooth_set(2, 100, {&bad, 1}), DomainError);
    const double theta = 0.4;
    CHECK_THROWS_AS(build_smooth_set(2, 1000000, {&theta, 1}, /*cap=*/10), CapExceeded);
}

TEST_CASE("fitted exponent for the linear case approaches 3") {
    const std::vector<long long> ps{50, 100, 200, 400};
    const ExponentFit fit = empirical_exponent(1, 2, ps);
    CHECK(std::abs(fit.slope - 3.0) < 0.01);
    CHECK(fit.max_residual < 0.01);
}

TEST_CASE("fitted exponent is exactly 1 for one variable per side") {
    const std::vector<long long> ps{10, 20, 40};
    const ExponentFit fit = empirical_exponent(5, 1, ps);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fitted exponent for squares sits between diagonal and solid growth") {
    const std::vector<long long> ps{20, 40, 80, 160};
    const ExponentFit fit = empirical_exponent(2, 2, ps);
    CHECK(fit.slope > 2.0);
    CHECK(fit.slope < 3.0);
}

TEST_CASE("exponent fit preconditions") {
    const std::vector<long long> two{10, 20};
    CHECK_THROWS_AS(empirical_exponent(2, 2, two), DomainError);
    const std::vector<long long> unordered{10, 10, 20};
    CHECK_THROWS_AS(empirical_exponent(2, 2, unordered), DomainError);
}

TEST_CASE("decimal rendering of wide integers") {
    CHECK(to_decimal(uint128(0)) == "0");
    CHECK(to_decimal(uint128(1) << 100) == "1267650600228229401496703205376");
    CHECK(to_decimal(int128(-42)) == "-42");
}
