#pragma once

#include <speinstein/solver.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace speinstein {

/// Doubles are serialized at 17 significant digits so documents are
/// byte-stable and round-trip exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

/// Ordered key/value pairs with pre-rendered JSON values.
using json_fields = std::vector<std::pair<std::string, std::string>>;

inline std::string json_object(const json_fields& fields) {
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += "\"" + fields[i].first + "\":" + fields[i].second;
    }
    return out + "}";
}

template <typename It>
std::string json_double_array(It begin, It end) {
    std::string out = "[";
    for (It it = begin; it != end; ++it) {
        if (it != begin) out += ",";
        out += format_double(*it);
    }
    return out + "]";
}

inline std::string to_json(const einstein_solution& s) {
    return json_object({
        {"y", json_double_array(s.y.begin(), s.y.end())},
        {"lambda", format_double(s.einstein_constant)},
        {"residual", format_double(s.residual)},
        {"naturally_reductive", s.naturally_reductive ? "true" : "false"},
        {"nr_case", std::to_string(s.nr_case)},
        {"source", std::string("\"") + to_string(s.source) + "\""},
        {"canonical", json_double_array(s.canonical.begin(), s.canonical.end())},
    });
}

inline std::string to_json(const solver_stats& st) {
    return json_object({
        {"starts", std::to_string(st.starts)},
        {"converged", std::to_string(st.converged)},
        {"rejected", std::to_string(st.rejected)},
        {"distinct", std::to_string(st.distinct)},
    });
}

/// The solution document: {command, params, solutions, stats}.
inline std::string solution_document(const std::string& command, const json_fields& params,
                                     const solution_set& set) {
    std::string sols = "[";
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
        if (i) sols += ",";
        sols += to_json(set.solutions[i]);
    }
    sols += "]";
    return json_object({
               {"command", "\"" + json_escape(command) + "\""},
               {"params", json_object(params)},
               {"solutions", sols},
               {"stats", to_json(set.stats)},
           })
         + "\n";
}

inline std::string solution_csv(const solution_set& set) {
    std::ostringstream os;
    os << "y1,y2,y3,y4,y5,y6,lambda,residual,naturally_reductive,nr_case,source,"
          "canonical1,canonical2,canonical3,canonical4,canonical5,canonical6\n";
    for (const auto& s : set.solutions) {
        for (double v : s.y) os << format_double(v) << ',';
        os << format_double(s.einstein_constant) << ',' << format_double(s.residual) << ','
           << (s.naturally_reductive ? "true" : "false") << ',' << s.nr_case << ','
           << to_string(s.source);
        for (double v : s.canonical) os << ',' << format_double(v);
        os << '\n';
    }
    return os.str();
}

}  // namespace speinstein
