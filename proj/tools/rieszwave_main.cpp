// rieszwave CLI: point evaluation, figure presets, node reports, comparisons
// and validity maps. Exit codes: 0 ok, 2 domain error, 3 non-convergence,
// 4 I/O error, 5 bracket failure.
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rieszwave/analytic.hpp"
#include "rieszwave/compare.hpp"
#include "rieszwave/config.hpp"
#include "rieszwave/evaluate.hpp"
#include "rieszwave/io.hpp"
#include "rieszwave/nodes.hpp"
#include "rieszwave/oracle.hpp"

namespace {

using namespace rieszwave;

constexpr int kExitDomain = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;
constexpr int kExitBracket = 5;

struct FigPanel {
    std::string x0_tag;
    double x0;
    double t;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stod(cur));
    if (out.empty()) throw std::domain_error(std::string("empty list for ") + what);
    return out;
}

int cmd_eval(const RunConfig& base, const PhysicalParams& params_in, const std::string& rep_name,
             double x, double t) {
    PhysicalParams params = params_in;
    const Representation rep = parse_representation(rep_name);
    EvalWarnings warnings;
    const double u = evaluate(rep, {x, t}, params, base.series, base.quad, &warnings);
    double xi = std::numeric_limits<double>::quiet_NaN();
    if (x != 0.0) xi = analytic::scaled_argument({x, t}, params);
    std::cout << "u=" << io::format_double(u) << " rep=" << to_string(rep)
              << " xi=" << io::format_double(xi) << " warnings=" << warnings.to_string() << "\n";
    return 0;
}

// Figure preset: mu = kappa = 1, rows x0 in {1, sqrt(0.5), sqrt(0.1)},
// columns t in {0.1, 1.7, 5, 6.5}, sampled on x in [-15, 15] excluding
// |x| < 0.2 (the preset keeps a validity guard around the origin; axis ranges
// are a preset choice recorded in the manifest).
int cmd_figure(const RunConfig& base, const std::string& preset, std::string out_dir) {
    if (preset != "fig1") throw std::domain_error("unknown figure preset: " + preset);
    if (out_dir.empty()) out_dir = base.out_dir;
    const double x_floor = 0.2, x_max = 15.0;
    const int n_per_sign = 1024;
    const std::vector<FigPanel> panels = {
        {"1", 1.0, 0.1},        {"1", 1.0, 1.7},        {"1", 1.0, 5.0},        {"1", 1.0, 6.5},
        {"sqrt0.5", std::sqrt(0.5), 0.1}, {"sqrt0.5", std::sqrt(0.5), 1.7},
        {"sqrt0.5", std::sqrt(0.5), 5.0}, {"sqrt0.5", std::sqrt(0.5), 6.5},
        {"sqrt0.1", std::sqrt(0.1), 0.1}, {"sqrt0.1", std::sqrt(0.1), 1.7},
        {"sqrt0.1", std::sqrt(0.1), 5.0}, {"sqrt0.1", std::sqrt(0.1), 6.5},
    };

    nlohmann::ordered_json manifest;
    manifest["preset"] = "fig1";
    manifest["representation"] = "lambda";
    manifest["mu"] = 1.0;
    manifest["kappa"] = 1.0;
    manifest["x_range"] = {-x_max, x_max};
    manifest["x_floor"] = x_floor;
    manifest["points_per_sign"] = n_per_sign;
    manifest["panels"] = nlohmann::ordered_json::array();

    for (const auto& panel : panels) {
        PhysicalParams params{1.0, 1.0, panel.x0};
        std::vector<double> xs(n_per_sign), us(n_per_sign);
        for (int i = 0; i < n_per_sign; ++i) {
            xs[i] = x_floor + (x_max - x_floor) * i / (n_per_sign - 1);
            us[i] = analytic::u_lambda({xs[i], panel.t}, params, base.series);
        }
        std::string csv = "x,u\n";
        for (int i = n_per_sign - 1; i >= 0; --i)
            csv += io::format_double(-xs[i]) + "," + io::format_double(us[i]) + "\n";
        for (int i = 0; i < n_per_sign; ++i)
            csv += io::format_double(xs[i]) + "," + io::format_double(us[i]) + "\n";

        int crossings = 0;
        for (int i = 0; i + 1 < n_per_sign; ++i)
            if (us[i] * us[i + 1] < 0.0) ++crossings;

        const std::string t_tag = io::format_double(panel.t);
        const std::string stem = "fig1_x0=" + panel.x0_tag + "_t=" + t_tag;
        const std::string csv_name = stem + ".csv";
        const std::string plot_name = stem + ".gnuplot";
        io::atomic_write(out_dir + "/" + csv_name, csv);

        std::string plot;
        plot += "set terminal pngcairo size 900,600\n";
        plot += "set output '" + stem + ".png'\n";
        plot += "set xlabel 'x'\nset ylabel 'u(x,t)'\nset grid\n";
        plot += "set title 'x0=" + panel.x0_tag + ", t=" + t_tag + "'\n";
        plot += "plot '" + csv_name + "' using 1:2 with lines notitle\n";
        io::atomic_write(out_dir + "/" + plot_name, plot);

        nlohmann::ordered_json pj;
        pj["x0_tag"] = panel.x0_tag;
        pj["x0"] = panel.x0;
        pj["t"] = panel.t;
        pj["csv"] = csv_name;
        pj["plot"] = plot_name;
        pj["node_count"] = 2 * crossings;  // CSV covers both signs symmetrically
        manifest["panels"].push_back(pj);
    }
    io::atomic_write(out_dir + "/fig1_manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote 12 panels + manifest to " << out_dir << "\n";
    return 0;
}

int cmd_nodes(const RunConfig& base, const PhysicalParams& params, const std::string& rep_name,
              double t, double window_hi, bool birth, const std::string& t_bracket,
              const std::string& out_path) {
    const Representation rep = parse_representation(rep_name);
    nodes::Window window{0.0, window_hi};

    if (birth) {
        const auto br = parse_list(t_bracket, "--t-bracket");
        if (br.size() != 2) throw std::domain_error("--t-bracket needs exactly two values");
        const double tstar = nodes::birth_time(params, rep, window, br[0], br[1], 1e-6, 512,
                                               base.series, base.quad);
        std::cout << "t_birth=" << io::format_double(tstar) << "\n";
        return 0;
    }
    const nodes::NodeReport report =
        nodes::scan_nodes(t, params, rep, window, 4096, 1e-10, base.series, base.quad);
    const std::string json = io::to_json(report);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        io::atomic_write(out_path, json);
    }
    return 0;
}

compare::GridSpec grid_from_flags(const std::string& preset, const std::string& xi_range,
                                  const std::string& x_list, const std::string& t_list,
                                  const std::string& x0_list) {
    if (!xi_range.empty()) {
        // delta-case sweep: x0 = 0, t = 1, x chosen so that xi spans the range
        const auto r = parse_list(xi_range, "--xi-range");
        if (r.size() != 2 || !(r[0] > 0.0) || !(r[1] > r[0]))
            throw std::domain_error("--xi-range needs lo,hi with 0 < lo < hi");
        compare::GridSpec g;
        g.t_values = {1.0};
        g.x0_values = {0.0};
        const int n = 64;
        for (int i = 0; i < n; ++i) {
            const double xi = r[0] * std::pow(r[1] / r[0], static_cast<double>(i) / (n - 1));
            g.x_values.push_back(1.0 / xi);  // xi = kappa t^2 / |x|
        }
        return g;
    }
    if (preset == "fig1-grid") return compare::fig1_lattice();
    if (!preset.empty()) throw std::domain_error("unknown grid preset: " + preset);
    compare::GridSpec g;
    g.x_values = parse_list(x_list, "--x-list");
    g.t_values = parse_list(t_list, "--t-list");
    g.x0_values = parse_list(x0_list, "--x0-list");
    return g;
}

int cmd_compare(const RunConfig& base, const std::string& reps, const compare::GridSpec& grid,
                const std::string& out_path) {
    const auto comma = reps.find(',');
    if (comma == std::string::npos) throw std::domain_error("--reps needs A,B");
    const Representation rep_a = parse_representation(reps.substr(0, comma));
    const Representation rep_b = parse_representation(reps.substr(comma + 1));
    const auto report =
        compare::compare_reps(grid, base.params, rep_a, rep_b, base.series, base.quad);
    if (!out_path.empty()) io::atomic_write(out_path, io::to_csv(report));
    std::cout << io::summary_line(report) << "\n";
    return 0;
}

int cmd_validity_map(const RunConfig& base, double tol, const compare::GridSpec& grid,
                     const std::string& out_path) {
    const auto map = compare::validity_map(grid, base.params, tol, base.series, base.quad);
    size_t passed = 0;
    for (const auto& p : map)
        if (p.pass) ++passed;
    if (!out_path.empty()) io::atomic_write(out_path, io::to_csv(map));
    std::cout << "validity: " << passed << "/" << map.size() << " points pass at tol="
              << io::format_double(tol) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic and spectral evaluators for the first-order Riesz wave problem"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "config file (key = value lines)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate u(x,t) in one representation");
    double e_x = 0, e_t = 0, e_x0 = 1, e_mu = 1, e_kappa = 1;
    std::string e_rep = "lambda";
    eval->add_option("--x", e_x, "position")->required();
    eval->add_option("--t", e_t, "time")->required();
    auto* e_x0_opt = eval->add_option("--x0", e_x0, "pulse width (0 = delta)");
    auto* e_mu_opt = eval->add_option("--mu", e_mu, "pulse weight");
    auto* e_kappa_opt = eval->add_option("--kappa", e_kappa, "equation coefficient");
    eval->add_option("--rep", e_rep, "representation tag");

    // figure
    auto* figure = app.add_subcommand("figure", "emit figure preset CSVs + plot scripts");
    std::string f_preset = "fig1", f_out;
    figure->add_option("--preset", f_preset, "preset name");
    figure->add_option("--out", f_out, "output directory");

    // nodes
    auto* nodes_cmd = app.add_subcommand("nodes", "node scan or birth-time bisection");
    double n_t = 1.0, n_x0 = 1, n_mu = 1, n_kappa = 1, n_hi = 6.0;
    bool n_birth = false;
    std::string n_rep = "lambda", n_bracket, n_out;
    nodes_cmd->add_option("--t", n_t, "time");
    auto* n_x0_opt = nodes_cmd->add_option("--x0", n_x0, "pulse width");
    auto* n_mu_opt = nodes_cmd->add_option("--mu", n_mu, "pulse weight");
    auto* n_kappa_opt = nodes_cmd->add_option("--kappa", n_kappa, "equation coefficient");
    nodes_cmd->add_option("--rep", n_rep, "representation tag");
    nodes_cmd->add_option("--window", n_hi, "scan window half-width");
    nodes_cmd->add_flag("--birth", n_birth, "bisect the first pair-creation time");
    nodes_cmd->add_option("--t-bracket", n_bracket, "lo,hi bracket for --birth");
    nodes_cmd->add_option("--out", n_out, "write JSON here instead of stdout");

    // compare / validity-map
    auto* cmp = app.add_subcommand("compare", "pointwise comparison of two representations");
    std::string c_reps, c_preset, c_xi_range, c_x_list, c_t_list = "0.1,1.7", c_x0_list = "1";
    std::string c_out;
    cmp->add_option("--reps", c_reps, "A,B representation tags")->required();
    cmp->add_option("--preset", c_preset, "grid preset (fig1-grid)");
    cmp->add_option("--xi-range", c_xi_range, "lo,hi sweep of xi at x0=0");
    cmp->add_option("--x-list", c_x_list, "comma list of x");
    cmp->add_option("--t-list", c_t_list, "comma list of t");
    cmp->add_option("--x0-list", c_x0_list, "comma list of x0");
    cmp->add_option("--out", c_out, "CSV output path");

    auto* vmap = app.add_subcommand("validity-map", "series-vs-oracle agreement chart");
    double v_tol = 1e-6;
    std::string v_preset = "fig1-grid", v_out;
    vmap->add_option("--tol", v_tol, "absolute tolerance floor");
    vmap->add_option("--preset", v_preset, "grid preset");
    vmap->add_option("--out", v_out, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg =
            config_path.empty() ? load_default_config() : parse_config_file(config_path);
        if (eval->parsed()) return cmd_eval(cfg, e_x, e_t, e_x0, e_mu, e_kappa, e_rep);
        if (figure->parsed()) return cmd_figure(cfg, f_preset, f_out);
        if (nodes_cmd->parsed())
            return cmd_nodes(cfg, n_t, n_x0, n_mu, n_kappa, n_rep, n_hi, n_birth, n_bracket,
                             n_out);
        if (cmp->parsed()) {
            const auto grid = grid_from_flags(c_preset, c_xi_range, c_x_list, c_t_list, c_x0_list);
            return cmd_compare(cfg, c_reps, grid, c_out);
        }
        if (vmap->parsed()) {
            const auto grid = grid_from_flags(v_preset, "", "", "", "");
            return cmd_validity_map(cfg, v_tol, grid, v_out);
        }
    } catch (const rieszwave::non_convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const rieszwave::bracket_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBracket;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
