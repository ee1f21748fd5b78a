#pragma once

// Text and JSON rendering of expansions, and the JSON input format for the
// ODE solver:
//   {"n": dim, "degree": d, "coeffs": [A_0, ..., A_d]}
// where each A_j is either n rows of n numbers or a flat row-major list of n*n numbers.

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/ode.hpp"
#include "dendrimag/planar_tree.hpp"
#include "dendrimag/prelie_expr.hpp"
#include "dendrimag/rooted_tree.hpp"

namespace dendrimag {

using Json = nlohmann::ordered_json;

/// (coefficient, basis element) pairs of a combination, as strings.
using TermList = std::vector<std::pair<std::string, std::string>>;

inline TermList terms_of(const PreLieComb& c)
{
    TermList out;
    for (const auto& [e, q] : c) out.emplace_back(q.to_string(), e.str());
    return out;
}

inline TermList terms_of(const RootedComb& c)
{
    TermList out;
    for (const auto& [t, q] : c) out.emplace_back(q.to_string(), t.encoding());
    return out;
}

inline TermList terms_of(const FreeDendriform& fd, const PlanarComb& c)
{
    TermList out;
    for (const auto& [t, q] : c) out.emplace_back(q.to_string(), fd.to_string(t));
    return out;
}

/// "1/4 ((a>a)>a) - 1/12 (a>(a>a))"; unit coefficients are dropped.
inline std::string format_terms(const TermList& terms)
{
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [q, e] : terms) {
        const bool neg = !q.empty() && q[0] == '-';
        const std::string mag = neg ? q.substr(1) : q;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += mag == "1" ? e : mag + " " + e;
    }
    return out;
}

inline Json terms_json(const TermList& terms)
{
    Json arr = Json::array();
    for (const auto& [q, e] : terms) arr.push_back({{"coeff", q}, {"term", e}});
    return arr;
}

// ---------------------------------------------------------------------------
// ODE input

namespace detail {

inline const Json& field(const Json& j, const char* name)
{
    if (!j.is_object()) throw ParseError("input: top level must be a JSON object");
    if (!j.contains(name)) throw ParseError(std::string("input: missing field '") + name + "'");
    return j.at(name);
}

inline double number(const Json& j, const std::string& where)
{
    if (!j.is_number()) throw ParseError("input: field '" + where + "' must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError("input: field '" + where + "' is not finite");
    return x;
}

} // namespace detail

inline FloatMatrixPoly parse_ode_input(const Json& j)
{
    const Json& jn = detail::field(j, "n");
    if (!jn.is_number_integer() || jn.get<long>() < 1) throw ParseError("input: field 'n' must be a positive integer");
    const auto n = static_cast<std::size_t>(jn.get<long>());
    const Json& jd = detail::field(j, "degree");
    if (!jd.is_number_integer() || jd.get<long>() < 0)
        throw ParseError("input: field 'degree' must be a non-negative integer");
    const auto d = static_cast<std::size_t>(jd.get<long>());
    const Json& jc = detail::field(j, "coeffs");
    if (!jc.is_array()) throw ParseError("input: field 'coeffs' must be an array");
    if (jc.size() != d + 1)
        throw ParseError("input: field 'coeffs' has " + std::to_string(jc.size()) + " entries, expected degree + 1 = " +
                         std::to_string(d + 1));
    std::vector<FloatMatrix> coeffs;
    for (std::size_t k = 0; k < jc.size(); ++k) {
        const std::string where = "coeffs[" + std::to_string(k) + "]";
        const Json& m = jc[k];
        if (!m.is_array()) throw ParseError("input: field '" + where + "' must be an array");
        FloatMatrix out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        const bool nested = !m.empty() && m[0].is_array();
        if (nested) {
            if (m.size() != n) throw ParseError("input: field '" + where + "' must have n rows");
            for (std::size_t r = 0; r < n; ++r) {
                if (!m[r].is_array() || m[r].size() != n)
                    throw ParseError("input: field '" + where + "[" + std::to_string(r) + "]' must have n entries");
                for (std::size_t c = 0; c < n; ++c)
                    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                        detail::number(m[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            }
        } else {
            if (m.size() != n * n) throw ParseError("input: field '" + where + "' must have n*n entries");
            for (std::size_t i = 0; i < n * n; ++i)
                out(static_cast<Eigen::Index>(i / n), static_cast<Eigen::Index>(i % n)) =
                    detail::number(m[i], where + "[" + std::to_string(i) + "]");
        }
        coeffs.push_back(out);
    }
    return FloatMatrixPoly(n, std::move(coeffs));
}

inline FloatMatrixPoly read_ode_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("input: malformed JSON in '" + path + "': " + e.what());
    }
    return parse_ode_input(j);
}

inline Json ode_input_json(const FloatMatrixPoly& a, std::size_t degree)
{
    Json coeffs = Json::array();
    for (std::size_t k = 0; k <= degree; ++k) {
        const FloatMatrix m = a.coeff(k);
        Json rows = Json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(row);
        }
        coeffs.push_back(rows);
    }
    return {{"n", a.dim()}, {"degree", degree}, {"coeffs", coeffs}};
}

} // namespace dendrimag
