#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "waring/oracle.hpp"
#include "waring/recursion.hpp"
#include "waring/search.hpp"

namespace waring {

// Trace CSV, six-decimal fixed point, columns s,alpha,tau,theta,delta.
// The initial state emits with empty alpha/tau/theta fields:
//   s,alpha,tau,theta,delta
//   2,,,,3.000000
//   3,0.000000,0.000000,0.125120,2.333618
std::string trace_to_csv(const Trace& trace);

struct ParsedParams {
    std::optional<int> initial_s;
    std::optional<double> initial_delta;
    std::vector<StepParams> params;
};

// Reads a trace CSV (or a header-only / empty file, giving zero steps).
// Throws ParseError on malformed input.
ParsedParams params_from_csv(std::istream& in);
ParsedParams params_from_csv_file(const std::string& path);

// JSON renderings carry full binary64 precision.
std::string trace_to_json(const Trace& trace);
std::string outcome_to_json(const SearchOutcome& outcome, int digits);
std::string count_to_json(const CountResult& result);         // count as decimal string
std::string relative_count_to_json(int k, int s, int i, int p, int q, long long p_limit,
                                   uint128 count);
std::string fit_to_json(const ExponentFit& fit);
std::string smooth_to_json(const SmoothSet& set);

}  // namespace waring
