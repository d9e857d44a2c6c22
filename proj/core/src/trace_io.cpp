#include "waring/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace waring {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& field, int lineno) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad number '" + field + "'");
    }
}

const char* variant_tag(RecursionVariant v) { return variant_name(v); }

}  // namespace

std::string trace_to_csv(const Trace& trace) {
    std::string out = "s,alpha,tau,theta,delta\n";
    out += std::to_string(trace.initial_s) + ",,,," + fixed6(trace.initial_delta) + "\n";
    for (const TraceRow& r : trace.rows) {
        out += std::to_string(r.s) + "," + fixed6(r.alpha) + "," + fixed6(r.tau) + "," +
               fixed6(r.theta) + "," + fixed6(r.delta) + "\n";
    }
    return out;
}

ParsedParams params_from_csv(std::istream& in) {
    ParsedParams parsed;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (!saw_header && !fields.empty() && fields[0] == "s") {
            saw_header = true;
            continue;
        }
        if (fields.size() != 5)
            throw ParseError("line " + std::to_string(lineno) + ": expected 5 fields, got " +
                             std::to_string(fields.size()));
        if (fields[1].empty() && fields[2].empty() && fields[3].empty()) {
            // initial-state row
            parsed.initial_s = static_cast<int>(parse_double(fields[0], lineno));
            parsed.initial_delta = parse_double(fields[4], lineno);
            continue;
        }
        parsed.params.push_back(
            {parse_double(fields[1], lineno), parse_double(fields[2], lineno)});
    }
    return parsed;
}

ParsedParams params_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open parameter file: " + path);
    return params_from_csv(in);
}

std::string trace_to_json(const Trace& trace) {
    nlohmann::json j;
    j["k"] = trace.k;
    j["variant"] = variant_tag(trace.variant);
    j["initial"] = {{"s", trace.initial_s}, {"delta", trace.initial_delta}};
    nlohmann::json rows = nlohmann::json::array();
    for (const TraceRow& r : trace.rows)
        rows.push_back({{"s", r.s},
                        {"alpha", r.alpha},
                        {"tau", r.tau},
                        {"theta", r.theta},
                        {"delta", r.delta},
                        {"raw_delta", r.raw_delta}});
    j["rows"] = std::move(rows);
    return j.dump(2);
}

std::string outcome_to_json(const SearchOutcome& outcome, int digits) {
    nlohmann::json j = nlohmann::json::parse(trace_to_json(outcome.trace));
    j["digits"] = digits;
    j["evaluations"] = outcome.evaluations;
    if (outcome.s_star)
        j["s_star"] = *outcome.s_star;
    else
        j["s_star"] = nullptr;
    return j.dump(2);
}

std::string count_to_json(const CountResult& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["s"] = r.s;
    j["p_limit"] = r.p_limit;
    j["range"] = "[1, p_limit]";
    j["count"] = to_decimal(r.count);
    return j.dump(2);
}

std::string relative_count_to_json(int k, int s, int i, int p, int q, long long p_limit,
                                   uint128 count) {
    nlohmann::json j;
    j["k"] = k;
    j["s"] = s;
    j["i"] = i;
    j["p"] = p;
    j["q"] = q;
    j["p_limit"] = p_limit;
    j["range"] = "[1, p_limit]";
    j["count"] = to_decimal(count);
    return j.dump(2);
}

std::string fit_to_json(const ExponentFit& fit) {
    nlohmann::json j;
    j["k"] = fit.k;
    j["s"] = fit.s;
    j["p_limits"] = fit.p_limits;
    j["log_counts"] = fit.log_counts;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["max_residual"] = fit.max_residual;
    return j.dump(2);
}

std::string smooth_to_json(const SmoothSet& set) {
    nlohmann::json j;
    j["k"] = set.k;
    j["p_limit"] = set.p_limit;
    j["theta_list"] = set.theta_list;
    j["level_primes"] = set.level_primes;
    j["size"] = set.elements.size();
    j["elements"] = set.elements;
    return j.dump(2);
}

}  // namespace waring
