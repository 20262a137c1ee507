#ifndef POLARBOUND_IO_HPP
#define POLARBOUND_IO_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polynomial.hpp"

namespace polarbound {

/// 17 significant digits; non-finite values become JSON null.
inline std::string format_number(double x)
{
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string json_string(const std::string& s) { return '"' + json_escape(s) + '"'; }

/// [[re, im], ...] in ascending powers.
inline std::string to_json(const Polynomial& p)
{
    std::string out = "[";
    const auto a = p.coeffs();
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (v) out += ',';
        out += '[' + format_number(a[v].real()) + ',' + format_number(a[v].imag()) + ']';
    }
    return out + ']';
}

inline Polynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("polynomial JSON must be a nonempty array of [re, im] pairs");
    std::vector<cplx> a;
    a.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number()) {
            a.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            a.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument("polynomial coefficient must be [re, im]");
        }
    }
    return Polynomial(std::move(a));
}

inline Polynomial polynomial_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
    return polynomial_from_json(j);
}

}  // namespace polarbound

#endif  // POLARBOUND_IO_HPP
