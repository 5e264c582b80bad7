// dxl: tabulate the closed-form densities, potentials, fields and force
// densities to CSV, run the verification suites, emit figure data, and print
// the exciton geometry.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 non-convergence.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dxl/checks.hpp"
#include "dxl/densities.hpp"
#include "dxl/errors.hpp"
#include "dxl/fields.hpp"

namespace {

using namespace dxl;

struct RunConfig {
    double alpha = 0.0072973525693;  // CODATA 2018
    double p_fermi = 1.0;
    QuadratureSpec quadrature;
    int output_precision = 17;  // significant digits, 17 = shortest exact form
};

void validate(const RunConfig& cfg) {
    if (!(cfg.alpha > 0) || !(cfg.p_fermi > 0) || !(cfg.quadrature.rel_tol > 0) ||
        !(cfg.quadrature.abs_tol > 0) || cfg.quadrature.max_panels <= 0)
        throw DomainError("config: all numeric fields must be positive");
    if (cfg.output_precision < 6 || cfg.output_precision > 17)
        throw DomainError("config: output_precision must lie in [6, 17]");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// Plain `key = value` lines; '#' starts a comment.  Recognized keys: alpha,
// p_fermi, output_precision, rel_tol, abs_tol, max_panels.
RunConfig load_config(const std::string& path) {
    RunConfig cfg;
    if (path.empty()) return cfg;
    std::ifstream is(path);
    if (!is) throw DomainError("cannot read config file: " + path);
    std::string line;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config: expected `key = value`, got: " + trim(line));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "alpha") cfg.alpha = std::stod(val);
            else if (key == "p_fermi") cfg.p_fermi = std::stod(val);
            else if (key == "output_precision") cfg.output_precision = std::stoi(val);
            else if (key == "rel_tol") cfg.quadrature.rel_tol = std::stod(val);
            else if (key == "abs_tol") cfg.quadrature.abs_tol = std::stod(val);
            else if (key == "max_panels") cfg.quadrature.max_panels = std::stoi(val);
            else throw DomainError("config: unknown key: " + key);
        } catch (const std::invalid_argument&) {
            throw DomainError("config: bad value for " + key + ": " + val);
        }
    }
    return cfg;
}

std::string format_double(double v, int precision) {
    char buf[48];
    const auto res = precision >= 17
                         ? std::to_chars(buf, buf + sizeof buf, v)
                         : std::to_chars(buf, buf + sizeof buf, v,
                                         std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

std::vector<double> make_grid(double rmin, double rmax, int points, bool log_spacing) {
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        const double t = i / (points - 1.0);
        g[i] = log_spacing ? rmin * std::pow(rmax / rmin, t) : rmin + (rmax - rmin) * t;
    }
    return g;
}

const std::vector<std::pair<std::string, DensityKind>>& density_kinds() {
    static const std::vector<std::pair<std::string, DensityKind>> kinds = {
        {"hole", DensityKind::hole()},
        {"electron", DensityKind::electron()},
        {"infinite_sum_approx", DensityKind::infinite_sum_approx()},
        {"infinite_sum_numeric", DensityKind::infinite_sum_numeric()},
        {"fermi_density_matrix", DensityKind::fermi_density_matrix()},
        {"fermi_hole", DensityKind::fermi_hole()},
        {"vacuum_polarization", DensityKind::vacuum_polarization()},
    };
    return kinds;
}

DensityKind parse_density_kind(const std::string& key, int order) {
    if (key == "hole_n") return DensityKind::hole_order(order);
    if (key == "electron_n") return DensityKind::electron_order(order);
    for (const auto& [name, kind] : density_kinds())
        if (key == name) return kind;
    throw DomainError("unknown density kind: " + key);
}

FieldSource parse_field_source(const std::string& key) {
    if (key == "hole") return FieldSource::hole;
    if (key == "electron") return FieldSource::electron;
    if (key == "reference") return FieldSource::reference;
    if (key == "vacuum_polarization") return FieldSource::vacuum_polarization;
    throw DomainError("unknown field source: " + key);
}

// Quantity keys: density_<kind> / shell_<kind> with <kind> one of hole,
// electron, hole_n, electron_n (order from --n), infinite_sum_approx,
// infinite_sum_numeric, fermi_density_matrix, fermi_hole,
// vacuum_polarization; density_sum / shell_sum for hole + electron;
// potential_{hole,electron}; field_{hole,electron,reference,
// vacuum_polarization}; force:<rho>:<field> pairing a density with a field.
std::function<double(double)> quantity_evaluator(const std::string& key, int order,
                                                 const RunConfig& cfg) {
    const Constants c{cfg.alpha, cfg.p_fermi};
    const QuadratureSpec spec = cfg.quadrature;
    if (key.rfind("force:", 0) == 0) {
        const auto rest = key.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw DomainError("force key must look like force:<rho>:<field>");
        const DensityKind rho = parse_density_kind(rest.substr(0, colon), order);
        const FieldSource src = parse_field_source(rest.substr(colon + 1));
        return [rho, src, c](double r) { return force_density(rho, src, r, c).value; };
    }
    if (key == "shell_sum" || key == "density_sum") {
        const bool shell = key[0] == 's';
        return [c, spec, shell](double r) {
            const auto h = density(DensityKind::hole(), r, c, spec);
            const auto e = density(DensityKind::electron(), r, c, spec);
            return shell ? h.shell + e.shell : h.density + e.density;
        };
    }
    for (const char* prefix : {"shell_", "density_"}) {
        if (key.rfind(prefix, 0) != 0) continue;
        const DensityKind kind = parse_density_kind(key.substr(std::strlen(prefix)), order);
        const bool shell = key[0] == 's';
        return [kind, c, spec, shell](double r) {
            const auto sample = density(kind, r, c, spec);
            return shell ? sample.shell : sample.density;
        };
    }
    if (key.rfind("potential_", 0) == 0) {
        const FieldSource src = parse_field_source(key.substr(10));
        return [src](double r) { return potential(src, r); };
    }
    if (key.rfind("field_", 0) == 0) {
        const FieldSource src = parse_field_source(key.substr(6));
        return [src, c](double r) { return field(src, r, c); };
    }
    throw DomainError("unknown quantity key: " + key);
}

void write_rows(std::ostream& os, const std::string& x_name, const std::string& y_name,
                const std::vector<double>& xs, const std::function<double(double)>& f,
                int precision) {
    os << x_name << ',' << y_name << '\n';
    for (double x : xs)
        os << format_double(x, precision) << ',' << format_double(f(x), precision) << '\n';
}

void write_csv_file(const std::filesystem::path& path, const std::string& x_name,
                    const std::string& y_name, const std::vector<double>& xs,
                    const std::function<double(double)>& f, int precision) {
    std::ofstream os(path);
    if (!os) throw DomainError("cannot open output file: " + path.string());
    write_rows(os, x_name, y_name, xs, f, precision);
}

int cmd_tabulate(const RunConfig& cfg, const std::string& quantity, double rmin, double rmax,
                 int points, const std::string& spacing, int order, const std::string& out) {
    if (!(rmin > 0) || !(rmax > rmin) || points < 2)
        throw DomainError("need 0 < rmin < rmax and points >= 2");
    const auto f = quantity_evaluator(quantity, order, cfg);
    const auto grid = make_grid(rmin, rmax, points, spacing == "log");
    if (out.empty()) {
        write_rows(std::cout, "r", quantity, grid, f, cfg.output_precision);
    } else {
        write_csv_file(out, "r", quantity, grid, f, cfg.output_precision);
    }
    return 0;
}

int cmd_check(const RunConfig& cfg, const std::string& suite, const std::string& json_path) {
    const CheckReport report = run_suite(suite, Constants{cfg.alpha, cfg.p_fermi});
    for (const Check& c : report.checks)
        std::printf("%s %-45s computed=%s expected=%s tolerance=%s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    format_double(c.computed, cfg.output_precision).c_str(),
                    format_double(c.expected, cfg.output_precision).c_str(),
                    format_double(c.tolerance, 3).c_str());
    std::printf("%s: %zu checks, all_pass=%s\n", report.suite.c_str(), report.checks.size(),
                report.all_pass ? "true" : "false");
    if (!json_path.empty()) {
        std::ofstream os(json_path);
        if (!os) throw DomainError("cannot open output file: " + json_path);
        os << to_json(report) << '\n';
    }
    return report.all_pass ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg, int id, int max_order, const std::string& out_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    const int prec = cfg.output_precision;
    const auto grid = make_grid(0.01, 10.0, 400, true);
    switch (id) {
        case 2:
            for (const char* q : {"shell_hole", "shell_electron", "shell_sum"}) {
                const std::string name = std::string("fig2_") + (q + 6) + ".csv";
                write_csv_file(dir / name, "r", q, grid, quantity_evaluator(q, 1, cfg), prec);
            }
            return 0;
        case 3:
            if (max_order < 1) throw DomainError("--max-order must be >= 1");
            for (int k = 1; k <= max_order; ++k) {
                const std::string tag = "N" + std::to_string(k);
                write_csv_file(
                    dir / ("fig3_" + tag + "_hole.csv"), "r", "hole_sum_" + tag, grid,
                    [k](double r) { return partial_sum_series(k, r).hole_part; }, prec);
                write_csv_file(
                    dir / ("fig3_" + tag + "_electron.csv"), "r", "electron_sum_" + tag, grid,
                    [k](double r) { return partial_sum_series(k, r).electron_part; }, prec);
            }
            return 0;
        case 5: {
            // z = p_F r; both curves are universal in z
            const auto zgrid = make_grid(0.01, 3.0, 400, true);
            write_csv_file(
                dir / "fig5_gF.csv", "z", "gF", zgrid,
                [](double z) { return fermi_shape(z) * fermi_shape(z); }, prec);
            write_csv_file(dir / "fig5_nxF.csv", "z", "nxF", zgrid,
                           [](double z) { return fermi_shape(z); }, prec);
            return 0;
        }
        case 6:
        case 7: {
            using Pair = std::pair<const char*, const char*>;
            const std::vector<Pair> curves =
                id == 6 ? std::vector<Pair>{{"hole", "electron"},
                                            {"electron", "hole"},
                                            {"hole", "hole"},
                                            {"electron", "electron"}}
                        : std::vector<Pair>{{"hole", "reference"},
                                            {"electron", "reference"},
                                            {"vacuum_polarization", "reference"}};
            for (const auto& [rho, src] : curves) {
                const std::string key = std::string("force:") + rho + ":" + src;
                const std::string name =
                    "fig" + std::to_string(id) + "_" + rho + "_" + src + ".csv";
                write_csv_file(dir / name, "r", key, grid, quantity_evaluator(key, 1, cfg),
                               prec);
            }
            return 0;
        }
        default:
            throw DomainError("figure id must be one of 2, 3, 5, 6, 7");
    }
}

int cmd_geometry(const RunConfig& cfg) {
    const auto g = exciton_geometry(Constants{cfg.alpha, cfg.p_fermi});
    const int prec = cfg.output_precision;
    std::printf("exchange exciton (lambda_C):\n");
    std::printf("  short bond, pair charge to hole:     %s\n",
                format_double(g.bond_short, prec).c_str());
    std::printf("  long bond, pair charge to electron:  %s\n",
                format_double(g.bond_long, prec).c_str());
    std::printf("  apex angle at the hole (deg):        %s\n",
                format_double(g.apex_angle_deg, prec).c_str());
    std::printf("positronium ion (a_0):                 5.5  9.0  110\n");
    std::printf("bond ratio, positronium over exciton:  %s\n",
                format_double(g.positronium_ratio, prec).c_str());
    nlohmann::ordered_json j;
    j["bond_short"] = g.bond_short;
    j["bond_long"] = g.bond_long;
    j["apex_angle_deg"] = g.apex_angle_deg;
    j["positronium"] = {{"bond_short_a0", 5.5}, {"bond_long_a0", 9.0}, {"apex_angle_deg", 110.0}};
    j["positronium_ratio"] = g.positronium_ratio;
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form Dirac-sea exchange densities, fields and checks"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "plain `key = value` config file");

    auto* tab = app.add_subcommand("tabulate", "write r,quantity rows as CSV");
    std::string quantity, spacing = "log", out;
    double rmin = 0, rmax = 0, p_fermi_flag = 0;
    int points = 0, order = 1;
    tab->add_option("--quantity", quantity, "quantity key (see README)")->required();
    tab->add_option("--rmin", rmin)->required();
    tab->add_option("--rmax", rmax)->required();
    tab->add_option("--points", points)->required();
    tab->add_option("--spacing", spacing)->check(CLI::IsMember({"log", "lin"}));
    tab->add_option("--n", order, "convolution order for the ladder kinds");
    tab->add_option("--pF", p_fermi_flag, "Fermi momentum override");
    tab->add_option("--out", out, "output path (default: stdout)");

    auto* chk = app.add_subcommand("check", "run a verification suite");
    std::string suite, json_path;
    chk->add_option("--suite", suite)->required()->check(CLI::IsMember(check_suites()));
    chk->add_option("--json", json_path, "also write the report as JSON");

    auto* fig = app.add_subcommand("figure", "emit one CSV per plotted curve");
    int fig_id = 0, max_order = 6;
    std::string out_dir = ".";
    fig->add_option("--id", fig_id)->required();
    fig->add_option("--max-order", max_order, "highest partial sum for figure 3");
    fig->add_option("--out-dir", out_dir);

    auto* geo = app.add_subcommand("geometry", "print the exciton triangle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg = load_config(config_path);
        if (tab->count("--pF") > 0) cfg.p_fermi = p_fermi_flag;
        validate(cfg);
        if (*tab) return cmd_tabulate(cfg, quantity, rmin, rmax, points, spacing, order, out);
        if (*chk) return cmd_check(cfg, suite, json_path);
        if (*fig) {
            if (fig_id != 2 && fig_id != 3 && fig_id != 5 && fig_id != 6 && fig_id != 7)
                throw DomainError("figure id must be one of 2, 3, 5, 6, 7");
            return cmd_figure(cfg, fig_id, max_order, out_dir);
        }
        if (*geo) return cmd_geometry(cfg);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NonConvergence& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
