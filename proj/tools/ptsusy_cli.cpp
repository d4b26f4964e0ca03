// ptsusy: partner potentials, Weierstrass pair tables, spectra and the
// verification suite from the command line.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptsusy/elliptic.hpp"
#include "ptsusy/errors.hpp"
#include "ptsusy/io.hpp"
#include "ptsusy/sl2c.hpp"
#include "ptsusy/spectral.hpp"
#include "ptsusy/susy.hpp"
#include "ptsusy/verify.hpp"

using nlohmann::ordered_json;
using namespace ptsusy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitSolverFailure = 2;
constexpr int kExitUsage = 64;

struct FamilyFlags {
    std::string case_name = "I";
    double m = 1.0;
    double b_R = 0.0;
    double b_I = 0.0;
    double c = 0.0;
    double gamma = 0.0;
    std::string sign = "+";
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--case", f.case_name, "Family case: I, II or III")
        ->check(CLI::IsMember({"I", "II", "III"}));
    cmd->add_option("--m", f.m, "Potential label m");
    cmd->add_option("--br", f.b_R, "Re b");
    cmd->add_option("--bi", f.b_I, "Im b");
    cmd->add_option("--c", f.c, "Real shift c");
    cmd->add_option("--gamma", f.gamma, "Imaginary shift gamma, in [-pi/4, pi/4)");
    cmd->add_option("--sign", f.sign, "Case III branch: + or -")->check(CLI::IsMember({"+", "-"}));
}

Sl2cFamily make_family(const FamilyFlags& f) {
    Sl2cFamily fam;
    fam.case_tag = (f.case_name == "I") ? Sl2cCase::I
                                        : (f.case_name == "II") ? Sl2cCase::II : Sl2cCase::III;
    fam.m = f.m;
    fam.b_R = f.b_R;
    fam.b_I = f.b_I;
    fam.c = f.c;
    fam.gamma = f.gamma;
    fam.sign = (f.sign == "-") ? -1 : +1;
    validate(fam);
    return fam;
}

void emit_table(const std::string& out_path, const std::string& format,
                const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& columns) {
    std::string text;
    if (format == "json") {
        ordered_json j;
        for (std::size_t c = 0; c < header.size(); ++c) j[header[c]] = columns[c];
        text = j.dump(2) + "\n";
    } else {
        text = csv_to_string(header, columns);
    }
    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::FILE* fp = std::fopen(out_path.c_str(), "wb");
        if (!fp) throw std::runtime_error("cannot open output file " + out_path);
        std::fputs(text.c_str(), fp);
        std::fclose(fp);
    }
}

int cmd_family(const FamilyFlags& flags, double xmin, double xmax, int n,
               const std::string& out, const std::string& format) {
    auto fam = make_family(flags);
    if (std::isnan(xmin)) xmin = fam.c - 8.0;
    if (std::isnan(xmax)) xmax = fam.c + 8.0;
    Grid grid(xmin, xmax, n);

    auto w = bridge_superpotential(fam);
    auto pair = partner_potentials(w, grid);

    std::vector<std::vector<double>> cols(5, std::vector<double>(grid.n_points()));
    for (int i = 0; i < grid.n_points(); ++i) {
        cols[0][i] = grid[i];
        cols[1][i] = pair.v_plus_R.values[i].real();
        cols[2][i] = pair.v_plus_I.values[i].real();
        cols[3][i] = pair.v_minus_R.values[i].real();
        cols[4][i] = pair.v_minus_I.values[i].real();
    }
    emit_table(out, format, {"x", "ReV+", "ImV+", "ReV-", "ImV-"}, cols);
    return kExitOk;
}

int cmd_weierstrass(const std::string& preset, double er, double a, double xmin, double xmax,
                    int n, const std::string& out, const std::string& format) {
    EllipticParams params;
    if (preset == "fig1") {
        params = EllipticParams{std::sqrt(3.0), 4.0 * std::sqrt(2.0 / std::sqrt(3.0)), 0.0};
    } else if (preset == "fig2") {
        params = EllipticParams{std::sqrt(3.0), 8.0 / std::pow(3.0, 0.25), 0.0};
    } else {
        params = EllipticParams{er, a, 0.0};
    }
    auto data = invariants_from(params);
    if (data.regime == WRegime::nondegenerate_negative) {
        std::fprintf(stderr,
                     "weierstrass: unsupported regime, discriminant D = %s < 0\n",
                     format_double(data.D).c_str());
        return kExitSolverFailure;
    }

    Grid grid = [&] {
        if (data.regime == WRegime::degenerate) {
            double z_max = std::isnan(xmax) ? 8.0 / std::sqrt(params.E_R) : xmax;
            const double h = z_max / n;
            const double z_min = std::isnan(xmin) ? h : xmin;
            return Grid(z_min, z_max, n);
        }
        const double lo = std::isnan(xmin) ? 0.0 : xmin;
        const double hi = std::isnan(xmax) ? 2.0 * data.omega : xmax;
        return Grid::interior(lo, hi, n);
    }();

    auto pair = elliptic_pair(params, data, grid);
    auto mod = zero_mode_modulus(params, data, grid);

    std::vector<std::vector<double>> cols(4, std::vector<double>(grid.n_points()));
    for (int i = 0; i < grid.n_points(); ++i) {
        cols[0][i] = grid[i];
        cols[1][i] = pair.v_plus_R.values[i].real();
        cols[2][i] = pair.v_minus_I.values[i].real();
        cols[3][i] = mod.values[i].real();
    }
    emit_table(out, format, {"z", "V+R", "V-I", "|psi0|"}, cols);
    return kExitOk;
}

int cmd_spectrum(const FamilyFlags& flags, double emin, double emax, double xmin, double xmax,
                 int n, const std::string& out) {
    if (flags.gamma != 0.0) {
        std::fprintf(stderr, "spectrum: requires gamma = 0 (real-spectrum regime)\n");
        return kExitUsage;
    }
    auto fam = make_family(flags);
    auto predicted_levels = family_spectrum(fam.m);

    // Domain wide enough for the shallowest predicted level to decay.
    double half_width = 12.0;
    if (!predicted_levels.levels.empty()) {
        const double kappa_min = std::sqrt(-predicted_levels.levels.back().second);
        half_width = std::min(60.0, std::max(12.0, 7.0 / kappa_min));
    }
    if (std::isnan(xmin)) xmin = fam.c - half_width;
    if (std::isnan(xmax)) xmax = fam.c + half_width;
    if (n <= 0) {
        n = static_cast<int>(std::lround((xmax - xmin) / 0.006));
        n |= 1; // odd: keeps the midpoint on the grid
    }
    Grid grid(xmin, xmax, n);

    if (std::isnan(emin) || std::isnan(emax)) {
        if (predicted_levels.levels.empty()) {
            emin = -4.0;
            emax = -1e-3;
        } else {
            emin = 1.3 * predicted_levels.levels.front().second - 0.1;
            emax = 0.5 * predicted_levels.levels.back().second;
        }
    }

    SpectralProblem problem{potential_Vm_closed(fam, grid), BoundaryKind::dirichlet_both,
                            emin, emax, 240, 0.5};
    auto result = find_spectrum(problem);

    ordered_json j;
    j["case"] = flags.case_name;
    j["m"] = fam.m;
    j["b_R"] = fam.b_R;
    j["b_I"] = fam.b_I;
    j["c"] = fam.c;
    j["gamma"] = fam.gamma;
    j["sign"] = fam.sign;
    j["window"] = {emin, emax};
    j["predicted"] = ordered_json::array();
    for (const auto& [level, e] : predicted_levels.levels) j["predicted"].push_back(e);
    j["found"] = ordered_json::array();
    for (const auto& hit : result.eigenvalues) j["found"].push_back({hit.E, hit.mismatch});
    double max_abs_error = 0.0;
    bool missing = false;
    for (const auto& [level, e] : predicted_levels.levels) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& hit : result.eigenvalues) best = std::min(best, std::abs(hit.E - e));
        if (best > 1e-2) missing = true;
        max_abs_error = std::max(max_abs_error, best);
    }
    if (predicted_levels.levels.empty()) max_abs_error = 0.0;
    j["max_abs_error"] = max_abs_error;
    j["diagnostics"] = result.diagnostics;

    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::FILE* fp = std::fopen(out.c_str(), "wb");
        if (!fp) throw std::runtime_error("cannot open output file " + out);
        std::fputs(text.c_str(), fp);
        std::fclose(fp);
    }
    if (missing) {
        std::fprintf(stderr, "spectrum: a predicted level was not found; %s\n",
                     result.diagnostics.c_str());
        return kExitSolverFailure;
    }
    return kExitOk;
}

int cmd_verify(double perturb, bool as_json) {
    auto results = run_verification(VerifyOptions{perturb});
    bool all_ok = true;
    if (as_json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : results) {
            j.push_back({{"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"elapsed_s", r.elapsed_s}});
            all_ok = all_ok && r.passed;
        }
        std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else {
        for (const auto& r : results) {
            std::printf("%-4s %-26s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.elapsed_s, r.detail.c_str());
            all_ok = all_ok && r.passed;
        }
        std::printf("%s: %zu checks\n", all_ok ? "PASS" : "FAIL", results.size());
    }
    return all_ok ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex partner potentials: family tables, Weierstrass pairs, spectra, verification"};
    app.require_subcommand(1);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    FamilyFlags fam_flags;
    double xmin = nan, xmax = nan, emin = nan, emax = nan;
    double er = 1.0, a = 1.0, perturb = 0.0;
    int n_family = 2001, n_weier = 4001, n_spectrum = 0;
    std::string out, format = "csv", preset = "none";
    bool as_json = false;

    auto* family = app.add_subcommand("family", "Partner-potential table for an sl(2,C) family");
    add_family_flags(family, fam_flags);
    family->add_option("--xmin", xmin, "Grid start (default c - 8)");
    family->add_option("--xmax", xmax, "Grid end (default c + 8)");
    family->add_option("--n", n_family, "Grid points")->check(CLI::PositiveNumber);
    family->add_option("--out", out, "Output path (default stdout)");
    family->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* weier = app.add_subcommand("weierstrass", "Elliptic partner pair V+R, V-I and |psi0|");
    weier->add_option("--preset", preset, "fig1, fig2 or none")
        ->check(CLI::IsMember({"fig1", "fig2", "none"}));
    weier->add_option("--er", er, "Factorization energy E_R");
    weier->add_option("--a", a, "Integration constant a (nonzero)");
    weier->add_option("--xmin", xmin, "Domain start in z");
    weier->add_option("--xmax", xmax, "Domain end in z");
    weier->add_option("--n", n_weier, "Grid points")->check(CLI::PositiveNumber);
    weier->add_option("--out", out, "Output path (default stdout)");
    weier->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* spectrum = app.add_subcommand("spectrum", "Predicted vs shooting spectrum of V_m");
    add_family_flags(spectrum, fam_flags);
    spectrum->add_option("--emin", emin, "Energy window start");
    spectrum->add_option("--emax", emax, "Energy window end");
    spectrum->add_option("--xmin", xmin, "Grid start");
    spectrum->add_option("--xmax", xmax, "Grid end");
    spectrum->add_option("--n", n_spectrum, "Grid points (default from domain width)");
    spectrum->add_option("--out", out, "Output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--perturb", perturb, "Inject an offset into F (forces failure)");
    verify->add_flag("--json", as_json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (family->parsed()) return cmd_family(fam_flags, xmin, xmax, n_family, out, format);
        if (weier->parsed()) return cmd_weierstrass(preset, er, a, xmin, xmax, n_weier, out, format);
        if (spectrum->parsed()) return cmd_spectrum(fam_flags, emin, emax, xmin, xmax, n_spectrum, out);
        if (verify->parsed()) return cmd_verify(perturb, as_json);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitSolverFailure;
    }
    return kExitUsage;
}
