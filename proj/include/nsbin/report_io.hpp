#pragma once

/**
 * @file report_io.hpp
 * @brief JSON and CSV forms of growth reports. Exact values are always
 * "p/q" strings; decimals are display-only.
 */

#include <string>

#include <json.hpp>

#include "nsbin/asymptotics.hpp"
#include "nsbin/exact.hpp"
#include "nsbin/symmetry.hpp"

namespace nsbin {

inline nlohmann::json to_json(const GrowthReport& report)
{
    nlohmann::json window = nlohmann::json::array();
    for (const auto& [r, c] : report.stability_window)
        window.push_back(nlohmann::json::array({r, to_fraction_string(c)}));
    return {
        {"set", report.alphabet.to_string()},
        {"m", report.multiplier},
        {"c", to_fraction_string(report.coefficient)},
        {"decimal", report.decimal},
        {"r_used", report.r_used},
        {"window", window},
    };
}

inline nlohmann::json to_json(const GrowthPair& pair)
{
    return {
        {"set", pair.set.to_string()},
        {"reflected", pair.reflected.to_string()},
        {"c", to_fraction_string(pair.coefficient)},
        {"c_reflected", to_fraction_string(pair.reflected_coefficient)},
        {"charpoly_equal", pair.charpoly_equal},
    };
}

/// RFC 4180 quoting, applied only when needed.
inline std::string csv_field(const std::string& value)
{
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_header(const GrowthReport&) { return "set,m,c,decimal,r_used"; }

inline std::string csv_row(const GrowthReport& report)
{
    return csv_field(report.alphabet.to_string()) + "," + std::to_string(report.multiplier) + "," +
           to_fraction_string(report.coefficient) + "," + report.decimal + "," +
           std::to_string(report.r_used);
}

} // namespace nsbin
