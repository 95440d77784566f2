// qcorr: correlation dynamics of two-qubit X states under single-qubit
// noise. Three subcommands:
//   point    evaluate one instant and print the correlation breakdown
//   sweep    evaluate a time grid and write the CSV
//   figure   write the bundled preset studies (fig1..fig4)
//
// Exit codes: 0 success, 1 usage error, 2 physicality/validation error,
// 3 internal numerical error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/csv.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/oracle.hpp"

namespace {

using namespace qcorr;

struct cli_usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string state_spec;
    std::string channel_name;
    std::string grid_spec = "0:3:1001";
    std::string out;
    std::string out_dir = ".";
    std::string config_path;
    double tau = 1.0;
    double tau_t = 0.0;
    double slope_threshold = default_slope_threshold;
    bool oracle = false;
    int oracle_ntheta = 181;
    int oracle_nphi = 360;
    int oracle_rounds = 3;

    CLI::Option* state_opt = nullptr;
    CLI::Option* channel_opt = nullptr;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* tau_opt = nullptr;
    CLI::Option* tau_t_opt = nullptr;
    CLI::Option* slope_opt = nullptr;
    CLI::Option* oracle_opt = nullptr;
    CLI::Option* ntheta_opt = nullptr;
    CLI::Option* nphi_opt = nullptr;
    CLI::Option* rounds_opt = nullptr;
};

double parse_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw cli_usage_error("cannot parse " + what + " from '" + text + "'");
    }
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw cli_usage_error("cannot parse " + what + " from '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

XStateParams parse_state(const std::string& spec) {
    const auto parts = split(spec, ',');
    if (parts.size() != 5)
        throw cli_usage_error("--state expects 5 comma-separated values r,s,c1,c2,c3");
    double v[5];
    for (int i = 0; i < 5; ++i) v[i] = parse_double(parts[static_cast<std::size_t>(i)], "state parameter");
    return {v[0], v[1], v[2], v[3], v[4]};
}

// MIN:MAX:N in scaled time tau*t
std::vector<double> parse_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw cli_usage_error("--grid expects MIN:MAX:N");
    const double lo = parse_double(parts[0], "grid minimum");
    const double hi = parse_double(parts[1], "grid maximum");
    const int n = parse_int(parts[2], "grid point count");
    if (n < 2 || lo < 0.0 || !(hi > lo))
        throw cli_usage_error("grid requires t_min >= 0, t_max > t_min and points >= 2");
    return uniform_grid(lo, hi, n);
}

// flat key=value lines; '#' starts a comment
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_usage_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto begin = s.find_first_not_of(" \t\r");
            if (begin == std::string::npos) return std::string{};
            const auto end = s.find_last_not_of(" \t\r");
            return s.substr(begin, end - begin + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw cli_usage_error("config line " + std::to_string(lineno) + " is not key=value");
        out[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return out;
}

bool parse_bool(const std::string& text) {
    if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
    if (text == "0" || text == "false" || text == "no" || text == "off") return false;
    throw cli_usage_error("cannot parse boolean from '" + text + "'");
}

void add_common_options(CLI::App* cmd, CommonOpts& o, bool with_state, bool with_channel) {
    if (with_state)
        o.state_opt = cmd->add_option("--state", o.state_spec, "State parameters r,s,c1,c2,c3");
    if (with_channel)
        o.channel_opt =
            cmd->add_option("--channel", o.channel_name, "amplitude | phase | depolarizing")
                ->check(CLI::IsMember({"amplitude", "phase", "depolarizing"}));
    o.tau_opt = cmd->add_option("--tau", o.tau, "Decay rate tau (default 1.0)");
    o.oracle_opt = cmd->add_flag("--oracle", o.oracle, "Compare against the brute-force oracle");
    o.ntheta_opt = cmd->add_option("--oracle-ntheta", o.oracle_ntheta, "Oracle polar grid points");
    o.nphi_opt = cmd->add_option("--oracle-nphi", o.oracle_nphi, "Oracle azimuthal grid points");
    o.rounds_opt = cmd->add_option("--oracle-rounds", o.oracle_rounds, "Oracle refinement rounds");
    cmd->add_option("--config", o.config_path, "Flat key=value config file");
}

// config supplies defaults; explicit command-line flags win
void merge_config(CommonOpts& o) {
    if (o.config_path.empty()) return;
    const auto cfg = load_config(o.config_path);
    auto pick = [&](CLI::Option* opt, const char* key) -> const std::string* {
        if (!opt) return nullptr;
        const auto it = cfg.find(key);
        if (it == cfg.end() || opt->count() > 0) return nullptr;
        return &it->second;
    };
    if (const auto* v = pick(o.state_opt, "state")) o.state_spec = *v;
    if (const auto* v = pick(o.channel_opt, "channel")) o.channel_name = *v;
    if (const auto* v = pick(o.grid_opt, "grid")) o.grid_spec = *v;
    if (const auto* v = pick(o.out_opt, "out")) o.out = *v;
    if (const auto* v = pick(o.out_opt, "out_dir")) o.out_dir = *v;
    if (const auto* v = pick(o.tau_opt, "tau")) o.tau = parse_double(*v, "tau");
    if (const auto* v = pick(o.tau_t_opt, "tau_t")) o.tau_t = parse_double(*v, "tau_t");
    if (const auto* v = pick(o.slope_opt, "slope_threshold"))
        o.slope_threshold = parse_double(*v, "slope_threshold");
    if (const auto* v = pick(o.oracle_opt, "oracle")) o.oracle = parse_bool(*v);
    if (const auto* v = pick(o.ntheta_opt, "oracle_ntheta"))
        o.oracle_ntheta = parse_int(*v, "oracle_ntheta");
    if (const auto* v = pick(o.nphi_opt, "oracle_nphi"))
        o.oracle_nphi = parse_int(*v, "oracle_nphi");
    if (const auto* v = pick(o.rounds_opt, "oracle_rounds"))
        o.oracle_rounds = parse_int(*v, "oracle_rounds");
}

OracleSettings oracle_settings(const CommonOpts& o) {
    OracleSettings s;
    s.n_theta = o.oracle_ntheta;
    s.n_phi = o.oracle_nphi;
    s.refine_rounds = o.oracle_rounds;
    return s;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw cli_usage_error(message);
}

int run_point(CommonOpts& o) {
    merge_config(o);
    require(!o.state_spec.empty(), "point requires --state (or a config entry)");
    const XStateParams initial = parse_state(o.state_spec);

    XStateParams evaluated = initial;
    if (!o.channel_name.empty()) {
        const NoiseKind kind = noise_kind_from_string(o.channel_name);
        const ChannelAtTime ch(kind, o.tau, o.tau_t / o.tau);
        evaluated = evolve_params(initial, ch);
        std::cout << "channel        = " << to_string(kind) << "\n"
                  << "tau_t          = " << format_g12(o.tau_t) << "\n"
                  << "control        = " << format_g12(ch.control()) << "\n";
    }
    const CorrelationBreakdown cb = correlations(evaluated);
    std::cout << "state          = " << format_g12(evaluated.r) << "," << format_g12(evaluated.s)
              << "," << format_g12(evaluated.c1) << "," << format_g12(evaluated.c2) << ","
              << format_g12(evaluated.c3) << "\n"
              << "mutual_info    = " << format_g12(cb.mutual_info) << "\n"
              << "classical      = " << format_g12(cb.classical) << "\n"
              << "discord        = " << format_g12(cb.discord) << "\n"
              << "s1             = " << format_g12(cb.s1) << "\n"
              << "s2             = " << format_g12(cb.s2) << "\n"
              << "s3             = " << format_g12(cb.s3) << "\n"
              << "argmin_branch  = " << to_string(cb.argmin_branch) << "\n";

    if (o.oracle) {
        const OracleMinimum minimum =
            min_conditional_entropy(to_density_matrix(evaluated), oracle_settings(o));
        const double dev = std::abs(cb.branch_min() - minimum.value);
        std::cout << "oracle_min     = " << format_g12(minimum.value) << "\n"
                  << "oracle_dev     = " << format_g12(dev) << "\n"
                  << "oracle_theta   = " << format_g12(minimum.direction.theta) << "\n"
                  << "oracle_phi     = " << format_g12(minimum.direction.phi) << "\n"
                  << "oracle_agrees  = " << (dev < 1e-6 ? "yes" : "NO (beyond 1e-06)") << "\n";
    }
    return 0;
}

void write_csv_file(const std::filesystem::path& path, const SweepResult& res,
                    const OracleColumns* oracle) {
    std::ofstream out(path);
    if (!out) throw cli_usage_error("cannot open output path '" + path.string() + "'");
    write_sweep_csv(out, res, oracle);
    if (!out) throw cli_usage_error("failed writing output path '" + path.string() + "'");
}

void print_event_summary(const SweepResult& res) {
    if (res.events.empty()) {
        std::cout << "no sudden-change events\n";
        return;
    }
    for (const SuddenChangeEvent& ev : res.events)
        std::cout << "event: " << to_string(ev.quantity) << " " << to_string(ev.branch_before)
                  << "->" << to_string(ev.branch_after) << " at tau_t=" << format_g12(ev.tau_t)
                  << " (left_slope=" << format_g12(ev.left_slope)
                  << ", right_slope=" << format_g12(ev.right_slope) << (ev.weak ? ", weak" : "")
                  << ")\n";
}

OracleColumns oracle_columns(const XStateParams& p0, const SweepResult& res,
                             const OracleSettings& settings) {
    OracleColumns cols;
    cols.oracle_min.reserve(res.grid.size());
    cols.oracle_dev.reserve(res.grid.size());
    for (std::size_t i = 0; i < res.grid.size(); ++i) {
        const ChannelAtTime ch(res.kind, res.tau, res.grid[i] / res.tau);
        const Mat rho = to_density_matrix(evolve_params(p0, ch));
        const OracleMinimum minimum = min_conditional_entropy(rho, settings);
        cols.oracle_min.push_back(minimum.value);
        cols.oracle_dev.push_back(std::abs(res.rows[i].branch_min() - minimum.value));
    }
    return cols;
}

int run_sweep(CommonOpts& o) {
    merge_config(o);
    require(!o.state_spec.empty(), "sweep requires --state (or a config entry)");
    require(!o.channel_name.empty(), "sweep requires --channel (or a config entry)");
    const XStateParams initial = parse_state(o.state_spec);
    const NoiseKind kind = noise_kind_from_string(o.channel_name);
    const std::vector<double> grid = parse_grid(o.grid_spec);

    const SweepResult res = sweep(initial, kind, o.tau, grid, o.slope_threshold);

    OracleColumns cols;
    if (o.oracle) cols = oracle_columns(initial, res, oracle_settings(o));

    const std::filesystem::path path = o.out.empty() ? "sweep.csv" : o.out;
    write_csv_file(path, res, o.oracle ? &cols : nullptr);
    std::cout << "wrote " << path.string() << " (" << res.rows.size() << " rows)\n";
    if (o.oracle) {
        const long divergent = std::count_if(cols.oracle_dev.begin(), cols.oracle_dev.end(),
                                             [](double d) { return d >= 1e-6; });
        if (divergent > 0)
            std::cout << "warning: " << divergent
                      << " row(s) deviate from the oracle by 1e-06 or more\n";
    }
    print_event_summary(res);
    return 0;
}

struct FigureCurve {
    std::string file;
    XStateParams state;
};

int run_figure(const std::string& id, CommonOpts& o) {
    merge_config(o);
    NoiseKind kind;
    std::vector<FigureCurve> curves;
    if (id == "fig1") {
        // amplitude noise; panels: S1/S3 crossings and the discord kink
        kind = NoiseKind::amplitude;
        curves = {{"fig1_a.csv", {0, 0, 0.1, 0.5, 0.4}},
                  {"fig1_b.csv", {0, 0, 0.1, 0.4, 0.4}},
                  {"fig1_c.csv", {0, 0, 0.1, 0.4, 0.5}}};
    } else if (id == "fig2") {
        kind = NoiseKind::phase;
        curves = {{"fig2_1.csv", {0, 0, 0.1, 0.2, 0.3}},
                  {"fig2_2.csv", {0, 0, 0.1, 0.4, 0.2}},
                  {"fig2_3.csv", {0, 0, 0.2, 0.2, 0.0}}};
    } else if (id == "fig3") {
        kind = NoiseKind::depolarizing;
        curves = {{"fig3_1.csv", {0, 0, 0.1, 0.2, 0.3}},
                  {"fig3_2.csv", {0, 0, 0.1, 0.4, 0.3}},
                  {"fig3_3.csv", {0, 0, 0.3, 0.2, 0.2}}};
    } else if (id == "fig4") {
        kind = NoiseKind::depolarizing;
        curves = {{"fig4_a.csv", {0.1, -0.01, 0.1, 0.3, 0.4}},
                  {"fig4_c.csv", {0.1, 0.01, 0.1, 0.4, 0.3}}};
    } else {
        throw cli_usage_error("unknown figure id '" + id + "' (expected fig1..fig4)");
    }

    std::vector<double> grid = parse_grid(o.grid_spec);
    if (id == "fig3") {
        // pin the zero-discord instant tau*t = ln 4 onto the grid
        grid.push_back(std::log(4.0));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }

    const std::filesystem::path dir = o.out_dir;
    for (const FigureCurve& curve : curves) {
        const SweepResult res = sweep(curve.state, kind, o.tau, grid, o.slope_threshold);
        write_csv_file(dir / curve.file, res, nullptr);
        std::cout << curve.file << ": " << res.rows.size() << " rows, " << res.events.size()
                  << " event(s)\n";
        print_event_summary(res);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation dynamics of two-qubit X states under single-qubit noise"};
    app.require_subcommand(1);

    CommonOpts point_opts, sweep_opts, figure_opts;
    std::string figure_id;

    CLI::App* point = app.add_subcommand("point", "Evaluate one instant");
    add_common_options(point, point_opts, true, true);
    point_opts.tau_t_opt =
        point->add_option("--tau-t", point_opts.tau_t, "Scaled time tau*t (default 0)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep a scaled-time grid, write CSV");
    add_common_options(sweep_cmd, sweep_opts, true, true);
    sweep_opts.grid_opt =
        sweep_cmd->add_option("--grid", sweep_opts.grid_spec, "Scaled-time grid MIN:MAX:N");
    sweep_opts.out_opt = sweep_cmd->add_option("--out", sweep_opts.out, "Output CSV path");
    sweep_opts.slope_opt = sweep_cmd->add_option("--slope-threshold", sweep_opts.slope_threshold,
                                                 "Weak-event slope threshold");

    CLI::App* figure = app.add_subcommand("figure", "Write the bundled preset studies");
    figure->add_option("id", figure_id, "fig1 | fig2 | fig3 | fig4")->required();
    add_common_options(figure, figure_opts, false, false);
    figure_opts.grid_opt =
        figure->add_option("--grid", figure_opts.grid_spec, "Scaled-time grid MIN:MAX:N");
    figure_opts.out_opt =
        figure->add_option("--out-dir", figure_opts.out_dir, "Output directory (default .)");

    try {
        app.parse(argc, argv);
        if (point->parsed()) return run_point(point_opts);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
        return run_figure(figure_id, figure_opts);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cli_usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qcorr::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qcorr::numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
