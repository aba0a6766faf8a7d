// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "qescal/qescal.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qescal;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

Rational R(long p, long q = 1) { return Rational(p, q); }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const std::vector<Rational> kSpectralAlphas{R(1, 2), R(1), R(2)};
const std::vector<Rational> kExactAlphas{R(1, 2), R(1), R(2), R(7, 2)};
const GridSpec kGrid{0.0, 12.0, 4000};
constexpr int kLevels = 6;

std::vector<Rational> analytic_levels(const SuperPotentialParams& p) {
    std::vector<Rational> e;
    for (int n = 0; n < kLevels; ++n) e.push_back(analytic_energy(p, Sector::Minus, n));
    return e;
}

double max_rel_error(const std::vector<double>& numeric, const std::vector<Rational>& analytic) {
    double m = 0;
    for (std::size_t i = 0; i < numeric.size(); ++i)
        m = std::max(m, std::abs(numeric[i] - to_double(analytic[i])) / to_double(analytic[i]));
    return m;
}

Verdict spectrum_reproduction() {
    double worst = 0;
    for (const auto& a : kSpectralAlphas) {
        const auto p = make_params(a);
        const auto rep = spectrum_report(PotentialSpec::v_minus(p.coefficients()), "V-", analytic_levels(p), kGrid);
        worst = std::max(worst, rep.max_rel_error());
    }
    return {worst <= 1e-6, "max rel error " + sci(worst) + " (tol 1e-6)"};
}

Verdict broken_susy_isospectrality() {
    double worst = 0;
    bool zero_mode = false;
    for (const auto& a : kSpectralAlphas) {
        const auto p = make_params(a);
        const auto plus = extrapolated_eigenvalues(PotentialSpec::v_plus(p.coefficients()), kGrid, kLevels).extrapolated;
        const auto minus = extrapolated_eigenvalues(PotentialSpec::v_minus(p.coefficients()), kGrid, kLevels).extrapolated;
        for (int n = 0; n < kLevels; ++n)
            worst = std::max(worst, std::abs(plus[static_cast<std::size_t>(n)] - minus[static_cast<std::size_t>(n)]) /
                                        minus[static_cast<std::size_t>(n)]);
        // An extra partner level would sit below E_0 in one sector only.
        const double below = to_double(analytic_energy(p, Sector::Minus, 0)) - 1.0;
        for (const auto& V : {PotentialSpec::v_plus(p.coefficients()), PotentialSpec::v_minus(p.coefficients())})
            if (sturm_count(discretize(V, kGrid), below) != 0) zero_mode = true;
        if (classify_susy(p).value != SusyPhaseValue::Broken) zero_mode = true;
    }
    return {worst <= 1e-6 && !zero_mode,
            "max |E+ - E-|/E " + sci(worst) + ", extra zero mode: " + (zero_mode ? "yes" : "no")};
}

Verdict exceptional_form_identity() {
    int checked = 0, bad = 0;
    for (const auto& a : kExactAlphas)
        for (int n = 0; n <= 10; ++n, ++checked)
            if (chi_minus_exceptional_ratio(a, n) != chi_minus_ladder_bracket(make_params(a).coefficients(), n)) ++bad;
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact identities"};
}

Verdict ladder_pipeline() {
    int checked = 0, bad = 0;
    for (const auto& a : kExactAlphas)
        for (int n = 0; n <= 8; ++n, ++checked) {
            const auto p = make_params(a);
            const auto plus = chi_plus(p, n);
            const auto lowered = apply_ladder(p, LadderDirection::Minus, plus);
            const bool down = radial_ratio(lowered, chi_minus(p, n)).has_value();
            const auto back = radial_ratio(apply_ladder(p, LadderDirection::Plus, lowered), plus);
            if (!(down && back && *back == analytic_energy(p, Sector::Plus, n))) ++bad;
        }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact ladder identities"};
}

Verdict schrodinger_symbolic() {
    int checked = 0, bad = 0;
    for (const auto& a : kExactAlphas)
        for (int n = 0; n <= 8; ++n, ++checked) {
            const auto p = make_params(a);
            const auto V = partner_potential_form(p.coefficients(), Sector::Minus);
            if (!schrodinger_residual(chi_minus(p, n), V, analytic_energy(p, Sector::Minus, n)).is_zero()) ++bad;
        }
    return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " residuals identically zero"};
}

Verdict orthonormality() {
    double diag = 0, off = 0;
    std::ostringstream norms;
    for (const auto& a : kSpectralAlphas) {
        const auto p = make_params(a);
        std::vector<QuasiPolyWave> chis;
        for (int n = 0; n <= 5; ++n) chis.push_back(chi_minus(p, n));
        const double c0 = overlap(chis[0], chis[0]);
        norms << (norms.tellp() > 0 ? ", " : "") << "c(alpha=" << to_pretty_string(a) << ")=" << c0;
        for (std::size_t i = 0; i < chis.size(); ++i)
            for (std::size_t j = i; j < chis.size(); ++j) {
                const double v = overlap(chis[i], chis[j]);
                if (i == j)
                    diag = std::max(diag, std::abs(v - c0));
                else
                    off = std::max(off, std::abs(v));
            }
    }
    return {diag <= 1e-8 && off <= 1e-8,
            "measured norms " + norms.str() + "; max |<n|n> - c| " + sci(diag) + ", max off-diagonal " + sci(off)};
}

Verdict pct_equivalence() {
    double dev = 0, shift_err = 0;
    bool symbolic = true;
    for (const auto& a : kSpectralAlphas) {
        const auto expected = symbolic_potential_shift(a);
        if (!expected || *expected != 2 * a + 5) symbolic = false;
        const auto cmp = compare_v1_vminus(a, linear_grid(0.1, 10.0, 200));
        dev = std::max(dev, cmp.max_deviation);
        shift_err = std::max(shift_err, std::abs(cmp.constant - to_double(2 * a + 5)));
    }
    return {symbolic && dev <= 1e-11 && shift_err <= 1e-11,
            std::string("symbolic shift 2 alpha + 5: ") + (symbolic ? "confirmed" : "not confirmed") +
                "; max deviation " + sci(dev) + ", |constant - shift| " + sci(shift_err)};
}

Verdict ground_state_simplification() {
    int bad = 0;
    for (const auto& a : kExactAlphas) {
        const RationalFunction lhs(exceptional_laguerre(ExceptionalLaguerreSpec{1, 1, a + R(3, 2)}),
                                   laguerre(1, a + R(1, 2)).reflected());
        const RationalFunction rhs(RationalPoly{a + R(5, 2), R(1)}, RationalPoly{a + R(3, 2), R(1)});
        if (lhs != rhs || chi_minus_exceptional_ratio(a, 0) != rhs) ++bad;
    }
    return {bad == 0, std::to_string(kExactAlphas.size() - static_cast<std::size_t>(bad)) + "/" +
                          std::to_string(kExactAlphas.size()) + " exact identities"};
}

Verdict pkq_correctness() {
    int polys = 0, bad = 0;
    for (const auto& g : {R(0), R(1), R(4)})
        for (int N : {2, 3, 4}) {
            const auto a = reduction_constants(N, g).a;
            for (int k = 0; k <= 4; ++k)
                for (const auto& P : solve_pkq(N, k, a)) {
                    ++polys;
                    if (!calogero_operator_apply(P, a).is_zero() || !is_symmetric(P) || !is_translation_invariant(P)) ++bad;
                }
        }
    return {bad == 0 && polys > 0, std::to_string(polys - bad) + "/" + std::to_string(polys) +
                                       " polynomials annihilated, symmetric, translation-invariant (g in {0,1,4})"};
}

Verdict manybody_residual() {
    double qes = 0, harmonic = 0;
    for (int N : {2, 3})
        for (int n : {0, 1})
            for (const auto& g : {R(0), R(4)}) {
                for (auto cc : {CalogeroCase::Qes, CalogeroCase::Harmonic}) {
                    const auto psi = assemble_eigenfunction(ManyBodySpec::make(N, g, 0, R(1), cc), n);
                    const double m =
                        residual_check(psi, psi.energy().to_double(), sample_sector_points(psi, 20)).max_rel_residual();
                    (cc == CalogeroCase::Qes ? qes : harmonic) = std::max(cc == CalogeroCase::Qes ? qes : harmonic, m);
                }
            }
    return {qes <= 1e-5 && harmonic <= 1e-5,
            "max rel residual QES " + sci(qes) + ", exactly solvable baseline " + sci(harmonic) + " (tol 1e-5)"};
}

Verdict conditional_solvability() {
    const Rational factor = R(101, 100);
    int nonzero = 0, checked = 0;
    for (const auto& a : kExactAlphas)
        for (int n = 0; n <= 8; ++n, ++checked) {
            const auto p = make_params(a);
            const auto Vd = factorized_potential_form(detune(p, factor), Sector::Minus);
            if (!schrodinger_residual(chi_minus(p, n), Vd, analytic_energy(p, Sector::Minus, n)).is_zero()) ++nonzero;
        }
    const bool symbolic = nonzero == checked;

    // Detuning acts on the superpotential, so the verdict uses W^2 - W'. Substituting the
    // detuned g1 into the closed-form potential shifts levels far less; shown for reference only.
    double least = 1e300;
    std::ostringstream per_alpha;
    for (const auto& a : kSpectralAlphas) {
        const auto p = make_params(a);
        const auto w = detune(p, factor);
        const auto levels = analytic_levels(p);
        const double factorized = max_rel_error(
            extrapolated_eigenvalues([&](double r) { return factorized_potential(w, Sector::Minus, r); }, kGrid, kLevels)
                .extrapolated,
            levels);
        const double closed =
            max_rel_error(extrapolated_eigenvalues(PotentialSpec::v_minus(w), kGrid, kLevels).extrapolated, levels);
        per_alpha << (per_alpha.tellp() > 0 ? ", " : "") << "alpha=" << to_pretty_string(a) << ": "
                  << sci(factorized) << " (closed form " << sci(closed) << ")";
        least = std::min(least, factorized);
    }
    const bool numeric = least >= 1e-3;
    return {symbolic && numeric, std::string("symbolic residual nonzero in ") + std::to_string(nonzero) + "/" +
                                     std::to_string(checked) + " cases (" + (symbolic ? "ok" : "NOT MET") +
                                     "); numeric max rel deviation " + per_alpha.str() + " vs required >= 1e-3 (" +
                                     (numeric ? "ok" : "NOT MET") + ")"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
        double budget_s;  // <= 0: none stated
    };
    const std::vector<Criterion> criteria{
        {1, "spectrum reproduction", spectrum_reproduction, 30},
        {2, "broken-SUSY isospectrality", broken_susy_isospectrality, 0},
        {3, "exceptional-form identity", exceptional_form_identity, 0},
        {4, "ladder pipeline", ladder_pipeline, 0},
        {5, "symbolic Schrodinger residual", schrodinger_symbolic, 0},
        {6, "orthonormality", orthonormality, 10},
        {7, "PCT equivalence", pct_equivalence, 0},
        {8, "ground-state simplification", ground_state_simplification, 0},
        {9, "P_kq correctness", pkq_correctness, 0},
        {10, "many-body residual", manybody_residual, 60},
        {11, "conditional-solvability sensitivity", conditional_solvability, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_s <= 0 || secs <= c.budget_s;
        const bool pass = v.pass && in_budget;
        if (!pass) ++failures;
        std::printf("%s %2d %s: %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
                    c.budget_s > 0 ? (in_budget ? " within budget" : " OVER BUDGET") : "");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
