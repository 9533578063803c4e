#pragma once

// Serialization of spectrum reports: JSON (stable schema, exact values as
// rational strings, approximations as fixed-precision decimals), a plain
// table renderer, and polynomial coefficient arrays.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sgs/families.hpp"
#include "sgs/jacobi.hpp"
#include "sgs/spectrum.hpp"

namespace sgs {

using nlohmann::json;

inline std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

inline json poly_to_json(const ZPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;  // constant term first
}

inline ZPoly poly_from_json(const json& arr) {
    std::vector<BigInt> c;
    for (const auto& s : arr) c.push_back(parse_bigint(s.get<std::string>()));
    return ZPoly(std::move(c));
}

inline json interval_to_json(const RootInterval& iv) {
    return json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"approx", iv.approx}};
}

inline json report_to_json(const SpectrumReport& r, int numeric_precision = kDefaultPrecision) {
    json exact = json::array();
    for (const auto& e : r.exact)
        exact.push_back(json{{"value", to_string(e.value)}, {"multiplicity", e.multiplicity}});
    json factors = json::array();
    for (const auto& f : r.factors) {
        json roots = json::array();
        for (const auto& iv : f.roots) roots.push_back(interval_to_json(iv));
        factors.push_back(json{{"coefficients", poly_to_json(f.poly)},
                               {"multiplicity", f.multiplicity},
                               {"roots", roots}});
    }
    json out{{"dimension", r.dimension},
             {"exact", exact},
             {"factors", factors},
             {"provenance", provenance_name(r.provenance)}};
    if (r.provenance == Provenance::Numeric) {
        // integrality is an exact-pipeline judgment; a numeric report only
        // carries the eigenvalue approximations
        json vals = json::array();
        for (double v : r.numeric_eigenvalues) vals.push_back(format_double(v, numeric_precision));
        out["eigenvalues"] = vals;
    } else {
        out["integral"] = integrality_report(r).integral;
    }
    return out;
}

inline json integrality_to_json(const IntegralityReport& r) {
    json ws = json::array();
    for (const auto& iv : r.witnesses) ws.push_back(interval_to_json(iv));
    return json{{"integral", r.integral}, {"witnesses", ws}};
}

inline std::string report_to_table(const SpectrumReport& r, int numeric_precision = 6) {
    std::ostringstream out;
    out << "dimension: " << r.dimension << "\n";
    out << "provenance: " << provenance_name(r.provenance) << "\n";
    if (r.provenance == Provenance::Numeric) {
        out << "eigenvalues:";
        for (double v : r.numeric_eigenvalues) out << " " << format_double(v, numeric_precision);
        out << "\n";
        return out.str();
    }
    for (const auto& e : r.exact)
        out << "  " << to_string(e.value) << " x " << e.multiplicity << "\n";
    for (const auto& f : r.factors) {
        out << "  roots of " << to_string(f.poly) << (f.multiplicity > 1
                                                          ? " (each x " + std::to_string(f.multiplicity) + ")"
                                                          : "")
            << ":\n";
        for (const auto& iv : f.roots) out << "    ~ " << iv.approx << "\n";
    }
    out << "integral: " << (integrality_report(r).integral ? "true" : "false") << "\n";
    return out.str();
}

// One CSV line per (family, n): exact part, factor coefficient lists,
// integrality. Semicolons separate list entries inside a field.
inline std::string sweep_csv_header() {
    return "family,n,case,exact,factors,integral";
}

inline std::string sweep_csv_line(Family f, int n, const SpectrumReport& r) {
    std::ostringstream out;
    out << family_name(f) << "," << n << "," << family_case(f, n) << ",";
    bool first = true;
    for (const auto& e : r.exact) {
        if (!first) out << ';';
        out << to_string(e.value) << "^" << e.multiplicity;
        first = false;
    }
    out << ",";
    first = true;
    for (const auto& fac : r.factors) {
        if (!first) out << ';';
        out << "[";
        for (size_t i = 0; i < fac.poly.coeffs().size(); ++i) {
            if (i) out << ' ';
            out << to_string(fac.poly.coeffs()[i]);
        }
        out << "]^" << fac.multiplicity;
        first = false;
    }
    out << "," << (integrality_report(r).integral ? "true" : "false");
    return out.str();
}

}  // namespace sgs
