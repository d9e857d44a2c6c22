#pragma once

#include <cstdint>
#include <span>

#include "waring/errors.hpp"

namespace waring::tables {

// One row of the published intermediate-results table for the section-4
// recursion. Values carry exactly six decimals, as printed.
struct AppendixRow {
    int k;
    int s;
    double alpha;
    double tau;
    double theta;
    double delta;
};

// (k, s, Delta(s)) summary rows.
struct SummaryRow {
    int k;
    int s;
    double delta;
};

// (k, value) rows: published F(k) bounds and v(k) choices.
struct KVRow {
    int k;
    int value;
};

inline constexpr int kMin = 5;
inline constexpr int kMax = 20;

// All intermediate rows, k in [5, 20], ordered by (k, s).
std::span<const AppendixRow> appendix();

// The block for one k; throws UnknownK outside [5, 20].
std::span<const AppendixRow> appendix_block(int k);

std::span<const SummaryRow> list_3_1();  // pair-step search summary
std::span<const SummaryRow> list_4_2();  // single-step search summary
std::span<const KVRow> list_1_1();       // F(k) from the pair-step table
std::span<const KVRow> list_4_1();       // F(k) from the single-step table
std::span<const KVRow> list_3_2();       // v(k) used with list 3.1
std::span<const KVRow> list_4_3();       // v(k) used with list 4.2

// Lookup helpers; throw UnknownK outside [5, 20].
const SummaryRow& list_3_1_row(int k);
const SummaryRow& list_4_2_row(int k);
int list_1_1_bound(int k);
int list_4_1_bound(int k);
int list_3_2_v(int k);
int list_4_3_v(int k);

// FNV-1a checksum over a canonical rendering of every table. The expected
// value is pinned in the tests; verify commands recompute it before use.
std::uint64_t checksum();

}  // namespace waring::tables
