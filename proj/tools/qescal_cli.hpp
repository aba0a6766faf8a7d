#pragma once

// Command implementations for the qescal front end. Kept in a header so the
// test suite can drive commands without spawning processes.

#include "qescal/io.hpp"
#include "qescal/qescal.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qescal::cli {

using json = nlohmann::json;

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kInvalidInput = 2 };

/// Largest particle number the manybody command accepts. The exact null-space
/// solve and the finite-difference Laplacian both grow quickly with N.
inline constexpr int kMaxBodies = 4;

struct RunConfig {
    std::string command;
    Rational alpha{1};
    int N = 2;
    Rational g{0};
    int k = 0;
    int q = 1;
    int n = 0;
    int n_max = 5;  // inclusive
    double r_max = 12.0;
    int grid_points = 4000;
    std::string output_dir;
    std::string format = "json";
    std::string potential = "qes";
    int points = 20;
    std::uint64_t seed = 20240601;
    double tolerance = -1;  // < 0 selects the command's default
    Rational detune_g1{1};

    GridSpec grid() const { return GridSpec{0.0, r_max, grid_points}; }

    void validate() const {
        if (alpha <= 0) throw std::invalid_argument("alpha must be positive, got " + to_pretty_string(alpha));
        if (g < Rational(-1, 2)) throw std::invalid_argument("g must be at least -1/2, got " + to_pretty_string(g));
        if (N < 2) throw std::invalid_argument("N must be at least 2");
        if (k < 0) throw std::invalid_argument("k must be nonnegative");
        if (q < 1) throw std::invalid_argument("q is 1-based");
        if (n < 0) throw std::invalid_argument("n must be nonnegative");
        if (n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
        if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
        if (potential != "qes" && potential != "harmonic")
            throw std::invalid_argument("potential must be qes or harmonic");
        if (points < 1) throw std::invalid_argument("points must be positive");
        if (detune_g1 <= 0) throw std::invalid_argument("detune-g1 factor must be positive");
        grid().validate();
        if (command == "manybody" && N > kMaxBodies)
            throw std::invalid_argument("N = " + std::to_string(N) + " exceeds the supported maximum of " +
                                        std::to_string(kMaxBodies) +
                                        ": the exact null-space solve grows combinatorially with N and every residual sample costs " +
                                        std::to_string(4 * N + 1) + " wavefunction evaluations");
    }
};

inline json to_json(const RunConfig& c) {
    return json{{"command", c.command},
                {"alpha", to_string(c.alpha)},
                {"N", c.N},
                {"g", to_string(c.g)},
                {"k", c.k},
                {"q", c.q},
                {"n", c.n},
                {"n_max", c.n_max},
                {"grid", io::to_json(c.grid())},
                {"output_dir", c.output_dir},
                {"format", c.format},
                {"potential", c.potential},
                {"points", c.points},
                {"seed", c.seed},
                {"tolerance", c.tolerance},
                {"detune_g1", to_string(c.detune_g1)}};
}

struct NamedTable {
    std::string name;
    io::CsvTable table;
};

struct CommandResult {
    int exit_code = kSuccess;
    json report;
    std::vector<NamedTable> tables;  // emitted for --format csv (and always by dump)
};

inline double tolerance_or(const RunConfig& c, double fallback) { return c.tolerance < 0 ? fallback : c.tolerance; }

inline Superpotential working_superpotential(const RunConfig& c) {
    return detune(make_params(c.alpha), c.detune_g1);
}

inline CommandResult cmd_spectrum(const RunConfig& c) {
    const auto params = make_params(c.alpha);
    const Superpotential w = working_superpotential(c);
    const double tol = tolerance_or(c, 1e-6);
    std::vector<Rational> analytic;
    for (int n = 0; n <= c.n_max; ++n) analytic.push_back(analytic_energy(params, Sector::Minus, n));

    auto run = [&](Sector s) {
        return spectrum_report([&](double r) { return factorized_potential(w, s, r); },
                               std::string(s == Sector::Plus ? "V+ = W^2 + W'" : "V- = W^2 - W'"), analytic, c.grid());
    };
    const SpectrumReport plus = run(Sector::Plus);
    const SpectrumReport minus = run(Sector::Minus);

    double iso = 0;
    for (std::size_t i = 0; i < plus.numeric_extrapolated.size(); ++i)
        iso = std::max(iso, std::abs(plus.numeric_extrapolated[i] - minus.numeric_extrapolated[i]) /
                                std::abs(minus.numeric_extrapolated[i]));
    const bool pass = plus.max_rel_error() <= tol && minus.max_rel_error() <= tol && iso <= tol;

    CommandResult out;
    out.report = {{"config", to_json(c)},
                  {"plus", io::to_json(plus)},
                  {"minus", io::to_json(minus)},
                  {"isospectral_max_rel_diff", iso},
                  {"susy_phase", to_string(classify_susy(asymptotics(w)).value)},
                  {"tolerance", tol},
                  {"pass", pass}};
    io::CsvTable t;
    t.columns = {"n",         "analytic",           "numeric_plus",  "extrapolated_plus",
                 "rel_error_plus", "numeric_minus", "extrapolated_minus", "rel_error_minus"};
    for (std::size_t i = 0; i < analytic.size(); ++i)
        t.rows.push_back({static_cast<double>(i), to_double(analytic[i]), plus.numeric[i], plus.numeric_extrapolated[i],
                          plus.rel_errors[i], minus.numeric[i], minus.numeric_extrapolated[i], minus.rel_errors[i]});
    out.tables.push_back({"spectrum", std::move(t)});
    out.exit_code = pass ? kSuccess : kCheckFailure;
    return out;
}

struct Check {
    std::string name;
    bool pass = false;
    double measured = 0;
    std::string detail;
};

inline json to_json(const Check& ch) {
    return json{{"name", ch.name}, {"pass", ch.pass}, {"measured", ch.measured}, {"detail", ch.detail}};
}

/// The invariant suite behind `verify`. Exact checks use the working (possibly
/// detuned) superpotential; the eigenfunctions are those of the tuned model.
inline std::vector<Check> verification_checks(const RunConfig& c) {
    const auto params = make_params(c.alpha);
    const Superpotential w = working_superpotential(c);
    std::vector<Check> checks;

    for (Sector s : {Sector::Plus, Sector::Minus}) {
        const bool ok = factorized_potential_form(w, s) == partner_potential_form(params.coefficients(), s);
        checks.push_back({std::string("factorization_") + to_string(s), ok, ok ? 0.0 : 1.0,
                          "W^2 " + std::string(s == Sector::Plus ? "+" : "-") + " W' equals the closed-form partner"});
    }

    {
        int bad = 0;
        for (int n = 0; n <= c.n_max; ++n)
            if (chi_minus_ladder_bracket(w, n) != chi_minus_exceptional_ratio(c.alpha, n)) ++bad;
        checks.push_back({"exceptional_form_identity", bad == 0, static_cast<double>(bad),
                          "ladder bracket equals hat-L_{n+1,1} / L_1(-r^2) for n <= n_max"});
    }

    {
        const RationalFunction ratio = chi_minus_exceptional_ratio(c.alpha, 0);
        const RationalFunction expected(RationalPoly{c.alpha + Rational(5, 2), Rational(1)},
                                        RationalPoly{c.alpha + Rational(3, 2), Rational(1)});
        const bool ok = ratio == expected;
        checks.push_back({"ground_state_simplification", ok, ok ? 0.0 : 1.0,
                          "hat-L_{1,1} / L_1(-r^2) = (r^2 + alpha + 5/2) / (r^2 + alpha + 3/2)"});
    }

    {
        int bad = 0;
        std::string first;
        for (int n = 0; n <= c.n_max; ++n) {
            const Rational E = analytic_energy(params, Sector::Plus, n);
            const auto plus = chi_plus(params, n);
            const auto lowered = apply_ladder(w, LadderDirection::Minus, plus);
            const auto chim = chi_minus(params, n);
            const bool down = radial_ratio(lowered, chim).has_value();
            const auto back = apply_ladder(w, LadderDirection::Plus, lowered);
            const auto r = radial_ratio(back, plus);
            const bool up = r && *r == E;
            if (!(down && up)) {
                ++bad;
                if (first.empty()) first = " (first failure at n = " + std::to_string(n) + ")";
            }
        }
        checks.push_back({"ladder_pipeline", bad == 0, static_cast<double>(bad),
                          "A- chi+_n ~ chi-_n and A+ A- chi+_n = E_n chi+_n" + first});
    }

    for (Sector s : {Sector::Plus, Sector::Minus}) {
        int bad = 0;
        const RadialLaurent V = factorized_potential_form(w, s);
        for (int n = 0; n <= c.n_max; ++n) {
            const auto chi = s == Sector::Plus ? chi_plus(params, n) : chi_minus(params, n);
            if (!schrodinger_residual(chi, V, analytic_energy(params, s, n)).num().is_zero()) ++bad;
        }
        checks.push_back({std::string("schrodinger_residual_") + to_string(s), bad == 0, static_cast<double>(bad),
                          "-chi'' + (W^2 +- W') chi - E_n chi vanishes identically"});
    }

    {
        int bad = 0;
        for (int n = 0; n <= c.n_max; ++n)
            if (node_count(chi_minus(params, n)) != n) ++bad;
        checks.push_back({"node_count", bad == 0, static_cast<double>(bad), "chi-_n has n positive nodes"});
    }

    {
        std::vector<QuasiPolyWave> chis;
        for (int n = 0; n <= c.n_max; ++n) chis.push_back(chi_minus(params, n));
        double off = 0, diag_spread = 0;
        json norms = json::array();
        for (std::size_t i = 0; i < chis.size(); ++i)
            for (std::size_t j = i; j < chis.size(); ++j) {
                const double v = overlap(chis[i], chis[j]);
                if (i == j) {
                    norms.push_back(v);
                    diag_spread = std::max(diag_spread, std::abs(v - norms.front().get<double>()));
                } else {
                    off = std::max(off, std::abs(v));
                }
            }
        const bool ok = off <= 1e-8 && diag_spread <= 1e-8;
        checks.push_back({"orthonormality", ok, std::max(off, diag_spread),
                          "max off-diagonal overlap and spread of norms; norms = " + norms.dump()});
    }

    {
        const auto phase = classify_susy(asymptotics(w));
        checks.push_back({"susy_broken", phase.value == SusyPhaseValue::Broken, 0.0, phase.evidence});
    }

    {
        auto cmp = compare_v1_vminus(c.alpha, linear_grid(0.05, c.r_max, 200));
        const double expected = to_double(cmp.expected_constant);
        const double shift_err = std::abs(cmp.constant - expected);
        const bool ok = cmp.max_deviation <= 1e-11 && shift_err <= 1e-11 * expected;
        checks.push_back({"pct_equivalence", ok, cmp.max_deviation,
                          "V- - V1 = " + io::format_real(cmp.constant) + ", expected " +
                              to_pretty_string(cmp.expected_constant)});

        measure_spectra_shift(cmp, c.grid(), std::min(c.n_max + 1, 6));
        double spread = 0;
        for (double d : cmp.spectra_shift) spread = std::max(spread, std::abs(d - expected) / expected);
        checks.push_back({"pct_spectra_shift", spread <= 1e-6, spread,
                          "E_n(V-) - E_n(V1) per level = " + json(cmp.spectra_shift).dump()});
    }
    return checks;
}

inline CommandResult cmd_verify(const RunConfig& c) {
    const auto checks = verification_checks(c);
    json arr = json::array();
    json failing = json::array();
    io::CsvTable t;
    t.columns = {"index", "pass", "measured"};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        arr.push_back(to_json(checks[i]));
        if (!checks[i].pass) failing.push_back(checks[i].name);
        t.rows.push_back({static_cast<double>(i), checks[i].pass ? 1.0 : 0.0, checks[i].measured});
    }
    CommandResult out;
    out.report = {{"config", to_json(c)}, {"checks", arr}, {"failing", failing}, {"pass", failing.empty()}};
    out.tables.push_back({"verify", std::move(t)});
    out.exit_code = failing.empty() ? kSuccess : kCheckFailure;
    return out;
}

inline CommandResult cmd_pkq(const RunConfig& c) {
    const auto rc = reduction_constants(c.N, c.g);
    const auto basis = solve_pkq(c.N, c.k, rc.a);
    json polys = json::array();
    io::CsvTable t;
    t.columns = {"q"};
    for (int i = 1; i <= c.N; ++i) t.columns.push_back("e" + std::to_string(i));
    t.columns.push_back("coefficient");
    bool all_ok = true;
    for (std::size_t q = 0; q < basis.size(); ++q) {
        const auto& P = basis[q];
        const bool annihilated = calogero_operator_apply(P, rc.a).is_zero();
        const bool symmetric = is_symmetric(P);
        const bool translation = is_translation_invariant(P);
        all_ok = all_ok && annihilated && symmetric && translation;
        polys.push_back({{"q", q + 1},
                         {"terms", io::to_json(P)},
                         {"annihilated", annihilated},
                         {"symmetric", symmetric},
                         {"translation_invariant", translation}});
        for (const auto& [e, coef] : P.terms()) {
            std::vector<double> row{static_cast<double>(q + 1)};
            for (int x : e) row.push_back(x);
            row.push_back(coef.to_double());
            t.rows.push_back(std::move(row));
        }
    }
    CommandResult out;
    out.report = {{"config", to_json(c)},
                  {"a", io::to_json(rc.a)},
                  {"b", io::to_json(rc.b)},
                  {"dimension", basis.size()},
                  {"bases", polys},
                  {"pass", all_ok}};
    out.tables.push_back({"pkq", std::move(t)});
    out.exit_code = all_ok ? kSuccess : kCheckFailure;
    return out;
}

inline CommandResult cmd_manybody(const RunConfig& c) {
    const CalogeroCase cc = c.potential == "harmonic" ? CalogeroCase::Harmonic : CalogeroCase::Qes;
    const auto spec = ManyBodySpec::make(c.N, c.g, c.k, c.alpha, cc, c.q);
    const auto basis = solve_pkq(c.N, c.k, spec.a);
    if (basis.empty())
        throw std::invalid_argument("no Calogero polynomial of degree k = " + std::to_string(c.k) + " for N = " +
                                    std::to_string(c.N));
    if (static_cast<std::size_t>(c.q) > basis.size())
        throw std::invalid_argument("q = " + std::to_string(c.q) + " exceeds the sector dimension " +
                                    std::to_string(basis.size()));
    const auto psi = assemble_eigenfunction(spec, c.n, basis[static_cast<std::size_t>(c.q - 1)]);
    const auto points = sample_sector_points(psi, c.points, c.seed);
    const double E = psi.energy().to_double();
    const auto rep = residual_check(psi, E, points);
    const double tol = tolerance_or(c, 1e-5);
    const bool pass = rep.max_rel_residual() <= tol;

    CommandResult out;
    out.report = {{"config", to_json(c)},
                  {"energy", io::to_json(psi.energy())},
                  {"a", io::to_json(spec.a)},
                  {"b", io::to_json(spec.b)},
                  {"l", io::to_json(spec.l)},
                  {"P", io::to_json(psi.P())},
                  {"residuals", io::to_json(rep)},
                  {"tolerance", tol},
                  {"pass", pass}};
    io::CsvTable t;
    for (int i = 1; i <= c.N; ++i) t.columns.push_back("x" + std::to_string(i));
    for (const char* s : {"psi", "H_psi_over_psi", "E", "rel_residual"}) t.columns.push_back(s);
    for (const auto& p : rep.points) {
        std::vector<double> row = p.point;
        row.insert(row.end(), {p.psi, p.h_psi_over_psi, rep.energy, p.rel_residual});
        t.rows.push_back(std::move(row));
    }
    out.tables.push_back({"manybody", std::move(t)});
    out.exit_code = pass ? kSuccess : kCheckFailure;
    return out;
}

/// Plot data on the interior nodes of the configured grid.
inline CommandResult cmd_dump(const RunConfig& c) {
    const auto params = make_params(c.alpha);
    const Superpotential w = working_superpotential(c);
    const GridSpec grid = c.grid();
    const double l = to_double(c.alpha) + 1;
    const double shift = to_double(pct_energy_shift(c.alpha));

    io::CsvTable pot;
    pot.columns = {"r", "W", "V_plus", "V_minus", "V1_plus_shift"};
    io::CsvTable waves;
    waves.columns = {"r"};
    std::vector<QuasiPolyWave> plus, minus;
    for (int n = 0; n <= c.n_max; ++n) {
        plus.push_back(chi_plus(params, n));
        minus.push_back(chi_minus(params, n));
        waves.columns.push_back("chi_plus_" + std::to_string(n));
    }
    for (int n = 0; n <= c.n_max; ++n) waves.columns.push_back("chi_minus_" + std::to_string(n));

    for (int i = 0; i < grid.n_points; ++i) {
        const double r = grid.node(i);
        pot.rows.push_back({r, superpotential(w, r), factorized_potential(w, Sector::Plus, r),
                            factorized_potential(w, Sector::Minus, r), v1_value(l, r) + shift});
        std::vector<double> row{r};
        for (const auto& chi : plus) row.push_back(chi(r));
        for (const auto& chi : minus) row.push_back(chi(r));
        waves.rows.push_back(std::move(row));
    }

    json files = json::array();
    CommandResult out;
    out.tables.push_back({"potentials", std::move(pot)});
    out.tables.push_back({"wavefunctions", std::move(waves)});
    for (const auto& t : out.tables) files.push_back({{"name", t.name}, {"columns", t.table.columns}});
    json exact = json::array();
    for (const auto& chi : minus) exact.push_back(io::to_json(chi));
    out.report = {{"config", to_json(c)}, {"tables", files}, {"chi_minus", exact}, {"pass", true}};
    return out;
}

inline CommandResult dispatch(const RunConfig& c) {
    c.validate();
    static const std::map<std::string, std::function<CommandResult(const RunConfig&)>> table{
        {"spectrum", cmd_spectrum}, {"verify", cmd_verify}, {"pkq", cmd_pkq},
        {"manybody", cmd_manybody}, {"dump", cmd_dump}};
    const auto it = table.find(c.command);
    if (it == table.end()) throw std::invalid_argument("unknown command '" + c.command + "'");
    return it->second(c);
}

/// Writes the result. dump always emits its CSV tables (into --out, default ".");
/// other commands print to stdout unless --out names a directory.
inline void emit(const RunConfig& c, const CommandResult& r, std::ostream& out) {
    const bool csv = c.format == "csv" || c.command == "dump";
    std::string dir = c.output_dir;
    if (dir.empty() && c.command == "dump") dir = ".";
    if (dir.empty()) {
        if (csv)
            for (const auto& t : r.tables) t.table.write(out);
        else
            out << r.report.dump(2) << "\n";
        return;
    }
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    if (csv)
        for (const auto& t : r.tables) t.table.write_file((base / (t.name + ".csv")).string());
    if (!csv || c.command == "dump") {
        std::ofstream f(base / (c.command + ".json"));
        if (!f) throw std::runtime_error("cannot write report into " + dir);
        f << r.report.dump(2) << "\n";
    }
}

/// Full command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Spectra, eigenfunctions and checks for the rationally extended Calogero model"};
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig c;
    std::string alpha = "1", g = "0", detune = "1";
    app.add_option("--alpha", alpha, "superpotential parameter alpha > 0 (rational, e.g. 1/2 or 0.5)");
    app.add_option("--N", c.N, "number of particles");
    app.add_option("--g", g, "Calogero coupling g >= -1/2 (rational)");
    app.add_option("--k", c.k, "degree of the homogeneous polynomial sector");
    app.add_option("--q", c.q, "1-based index into the sector basis");
    app.add_option("--n", c.n, "radial quantum number");
    app.add_option("--n-max,--n_max", c.n_max, "highest level index, inclusive");
    app.add_option("--r-max,--r_max", c.r_max, "outer Dirichlet boundary");
    app.add_option("--grid-points,--grid_points", c.grid_points, "interior grid points on the coarse grid");
    app.add_option("--out", c.output_dir, "output directory");
    app.add_option("--format", c.format, "json or csv");
    app.add_option("--potential", c.potential, "qes or harmonic (manybody)");
    app.add_option("--points", c.points, "sample points for the many-body residual");
    app.add_option("--seed", c.seed, "sampling seed");
    app.add_option("--tol", c.tolerance, "override the command's pass tolerance");
    app.add_option("--detune-g1,--detune_g1", detune, "multiply g1 by this factor (test hook)");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"spectrum", "numeric vs analytic spectra of V+ and V-"},
        {"verify", "run the exact and numeric invariant suite"},
        {"pkq", "basis of Calogero-annihilated symmetric polynomials"},
        {"manybody", "finite-difference residual of the N-body eigenfunction"},
        {"dump", "tabulate potentials and wavefunctions as CSV"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        c.command = app.get_subcommands().front()->get_name();
        c.alpha = parse_rational(alpha);
        c.g = parse_rational(g);
        c.detune_g1 = parse_rational(detune);
        c.validate();
    } catch (const std::exception& e) {
        err << "error: invalid configuration: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        const CommandResult r = dispatch(c);
        emit(c, r, out);
        if (r.exit_code != kSuccess) {
            err << c.command << ": checks failed";
            if (r.report.contains("failing")) err << ": " << r.report["failing"].dump();
            err << "\n";
        }
        return r.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailure;
    }
}

}  // namespace qescal::cli
