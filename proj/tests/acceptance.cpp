// Acceptance suite: one check per criterion, each printing a [PASS]/[FAIL]
// line. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "waring/asymptotics.hpp"
#include "waring/bounds.hpp"
#include "waring/oracle.hpp"
#include "waring/report.hpp"
#include "waring/search.hpp"
#include "waring/tables.hpp"

namespace {

int g_failures = 0;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("[%s] criterion %d: %s [%.2fs]\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

// criterion 1: replaying the printed (alpha, tau) blocks reproduces every
// printed theta and Delta within 5e-6
void criterion_1() {
    Timer timer;
    double worst = 0.0;
    int rows = 0;
    bool pass = true;
    for (int k = waring::tables::kMin; k <= waring::tables::kMax; ++k) {
        const waring::Report r = waring::replay_vs_appendix(k);
        for (const waring::ReportRow& row : r.rows) {
            worst = std::max(worst, row.difference);
            ++rows;
        }
        pass = pass && r.all_pass();
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "appendix replay: %d row comparisons within %.0e (worst %.2e)", rows,
                  waring::kAppendixTol, worst);
    report(1, pass, buf, timer.seconds());
}

// criterion 2: five-digit search reaches Delta <= 1e-5 no later than the
// listed s for all 16 k
void criterion_2() {
    Timer timer;
    const waring::Report r = waring::search_parity_report(5);
    report(2, r.all_pass(), "search parity with the published single-step summary (digits=5)",
           timer.seconds());
}

// criterion 3: bound tables reproduced exactly, both variants
void criterion_3() {
    Timer timer;
    const waring::BoundsTable single = waring::bounds_from_appendix();
    const waring::BoundsTable pair = waring::bounds_from_pair_search();
    bool pass = single.all_match() && pair.all_match();
    int exact = 0;
    for (const auto& row : single.rows) exact += row.matches_paper();
    for (const auto& row : pair.rows) exact += row.matches_paper();
    char buf[120];
    std::snprintf(buf, sizeof buf, "bound tables: %d/32 published F(k) values matched exactly",
                  exact);
    report(3, pass, buf, timer.seconds());
}

// criterion 4: four-digit pair-step search gets Delta(s_listed) <= 1e-4 for
// every published row
void criterion_4() {
    Timer timer;
    const waring::Report r = waring::pair_search_report(4);
    double worst = 0.0;
    for (const auto& row : r.rows) worst = std::max(worst, row.difference);
    char buf[120];
    std::snprintf(buf, sizeof buf, "pair-step search within %.0e of the published rows (worst %.2e)",
                  waring::kList31Tol, worst);
    report(4, r.all_pass(), buf, timer.seconds());
}

// criterion 5: the asymptotic constants at their printed tolerances
void criterion_5() {
    Timer timer;
    const waring::Report r = waring::asymptotics_report();
    report(5, r.all_pass(), "asymptotic constants at printed tolerances", timer.seconds());
}

// --- criterion 6 helpers: independent naive enumeration ---

waring::uint128 naive_count(int k, int s, long long P) {
    std::vector<waring::uint128> pow(static_cast<size_t>(P) + 1, 0);
    for (long long x = 1; x <= P; ++x) {
        waring::uint128 v = 1;
        for (int i = 0; i < k; ++i) v *= static_cast<waring::uint128>(x);
        pow[static_cast<size_t>(x)] = v;
    }
    std::vector<long long> idx(static_cast<size_t>(2 * s), 1);
    waring::uint128 total = 0;
    while (true) {
        waring::uint128 lhs = 0, rhs = 0;
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

waring::uint128 factorial(int n) {
    waring::uint128 v = 1;
    for (int j = 2; j <= n; ++j) v *= static_cast<unsigned>(j);
    return v;
}

waring::uint128 binomial(long long n, int r) {
    if (n < r) return 0;
    waring::uint128 v = 1;
    for (int j = 1; j <= r; ++j)
        v = v * static_cast<waring::uint128>(n - r + j) / static_cast<unsigned>(j);
    return v;
}

void criterion_6() {
    Timer timer;
    bool pass = true;
    std::string fail_note;

    // meet-in-the-middle equals naive enumeration
    for (int k = 1; k <= 3 && pass; ++k)
        for (int s = 1; s <= 3 && pass; ++s)
            for (long long P = 1; P <= 12 && pass; ++P)
                if (waring::count_auxiliary(k, s, P).count != naive_count(k, s, P)) {
                    pass = false;
                    fail_note = "mitm != naive at k=" + std::to_string(k) +
                                " s=" + std::to_string(s) + " P=" + std::to_string(P);
                }

    // S_1(P) = P
    for (int k : {1, 2, 3, 7})
        for (long long P : {1ll, 10ll, 64ll})
            if (waring::count_auxiliary(k, 1, P).count != waring::uint128(P)) {
                pass = false;
                fail_note = "S_1(P) != P";
            }

    // linear closed form up to P = 50
    for (long long P = 1; P <= 50; ++P) {
        const waring::uint128 expect =
            waring::uint128(P) * static_cast<unsigned>(P + 1) * static_cast<unsigned>(2 * P + 1) /
                3 -
            waring::uint128(P) * static_cast<unsigned>(P);
        if (waring::count_auxiliary(1, 2, P).count != expect) {
            pass = false;
            fail_note = "closed form failed at P=" + std::to_string(P);
        }
    }

    // superadditivity and permutation floor on the sampled grid
    for (int k = 1; k <= 4 && pass; ++k)
        for (int s = 2; s <= 3 && pass; ++s)
            for (long long P : {5ll, 12ll, 21ll, 30ll}) {
                const waring::uint128 cs = waring::count_auxiliary(k, s, P).count;
                const waring::uint128 prev = waring::count_auxiliary(k, s - 1, P).count;
                if (cs < waring::uint128(P) * prev || cs < factorial(s) * binomial(P, s)) {
                    pass = false;
                    fail_note = "floor violated at k=" + std::to_string(k) +
                                " s=" + std::to_string(s) + " P=" + std::to_string(P);
                    break;
                }
            }

    report(6, pass,
           pass ? "oracle properties: enumeration parity, closed form, floors" : fail_note,
           timer.seconds());
}

// criterion 7: per-step search never loses to the printed parameters
void criterion_7() {
    Timer timer;
    const waring::Report r = waring::dominance_report(4);
    double worst = 0.0;
    for (const auto& row : r.rows) worst = std::max(worst, row.computed);
    char buf[120];
    std::snprintf(buf, sizeof buf, "dominance on all 16 blocks (worst margin %.2e, slack 1e-09)",
                  worst);
    report(7, r.all_pass(), buf, timer.seconds());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("acceptance: %d/7 criteria pass\n", 7 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
