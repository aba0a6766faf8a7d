#pragma once

/**
 * @file io.hpp
 * @brief JSON and CSV serialization of library values.
 *
 * Exact quantities are written as "num/den" strings so nothing is lost; reals
 * are written with 17 significant digits so they read back bit-exactly.
 */

#include "qescal/manybody.hpp"
#include "qescal/pct.hpp"
#include "qescal/spectral.hpp"
#include "qescal/wave.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qescal::io {

using json = nlohmann::json;

inline json to_json(const RationalPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

inline RationalPoly rational_poly_from_json(const json& j) {
    std::vector<Rational> cs;
    for (const auto& c : j) cs.push_back(parse_rational(c.get<std::string>()));
    return RationalPoly(std::move(cs));
}

inline json to_json(const Normalization& n) {
    json j;
    j["sign"] = n.sign;
    j["square"] = to_string(n.square);
    j["gamma_arg"] = n.gamma_arg ? json(to_string(*n.gamma_arg)) : json(nullptr);
    j["value"] = n.value();
    return j;
}

/// {scale, power, num, den}; num and den are polynomials in r^2.
inline json to_json(const QuasiPolyWave& w) {
    json j;
    j["scale"] = to_json(w.scale());
    j["power"] = to_string(w.power());
    j["num"] = to_json(w.num());
    j["den"] = to_json(w.den());
    return j;
}

inline json to_json(const GridSpec& g) {
    return json{{"r_min", g.r_min}, {"r_max", g.r_max}, {"n_points", g.n_points}, {"step", g.step()},
                {"refined_n_points", g.refined().n_points}};
}

inline json to_json(const SpectrumReport& r) {
    json j;
    j["potential"] = r.potential;
    json analytic = json::array();
    for (const auto& a : r.analytic) analytic.push_back(to_string(a));
    j["analytic"] = analytic;
    j["numeric"] = r.numeric;
    j["extrapolated"] = r.numeric_extrapolated;
    j["rel_errors"] = r.rel_errors;
    j["max_rel_error"] = r.max_rel_error();
    j["grid"] = to_json(r.grid);
    return j;
}

inline std::string exponents_key(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s;
}

/// Multi-index "e1,e2,...,eN" -> coefficient string.
template <class F>
json to_json(const MultiPoly<F>& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        if constexpr (std::is_same_v<F, Rational>)
            j[exponents_key(e)] = to_string(c);
        else
            j[exponents_key(e)] = c.str();
    }
    return j;
}

inline json to_json(const QuadraticSurd& s) {
    return json{{"exact", s.str()}, {"value", s.to_double()}};
}

inline json to_json(const ResidualReport& r) {
    json pts = json::array();
    for (const auto& p : r.points)
        pts.push_back({{"point", p.point},
                       {"psi", p.psi},
                       {"H_psi_over_psi", p.h_psi_over_psi},
                       {"E", r.energy},
                       {"rel_residual", p.rel_residual}});
    return json{{"E", r.energy}, {"step", r.step}, {"points", pts}, {"max_rel_residual", r.max_rel_residual()}};
}

inline json to_json(const PotentialComparison& c) {
    return json{{"alpha", to_string(c.alpha)},
                {"l", to_string(c.l)},
                {"constant", c.constant},
                {"expected_constant", to_string(c.expected_constant)},
                {"max_deviation", c.max_deviation},
                {"spectra_shift", c.spectra_shift}};
}

/// Shortest round-trip-safe decimal form with 17 significant digits.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double parse_real(const std::string& s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("malformed real '" + s + "'");
    return v;
}

/// CSV with a '#'-prefixed header line naming the columns.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void write(std::ostream& os) const {
        os << "# ";
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_real(row[i]);
            os << "\n";
        }
    }

    void write_file(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path + " for writing");
        write(f);
    }

    static CsvTable read(std::istream& is) {
        CsvTable t;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::vector<std::string> cells;
            std::string body = line[0] == '#' ? line.substr(1) : line;
            std::stringstream ss(body);
            std::string cell;
            while (std::getline(ss, cell, ',')) {
                while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
                cells.push_back(cell);
            }
            if (line[0] == '#') {
                t.columns = std::move(cells);
                continue;
            }
            std::vector<double> row;
            for (const auto& c : cells) row.push_back(parse_real(c));
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    static CsvTable read_file(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        return read(f);
    }
};

}  // namespace qescal::io
