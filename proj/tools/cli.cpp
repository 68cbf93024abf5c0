#include "cli.hpp"

#include "zaremba/coeffs.hpp"
#include "zaremba/error.hpp"
#include "zaremba/halfline.hpp"
#include "zaremba/numerics.hpp"
#include "zaremba/sector.hpp"
#include "zaremba/spectra.hpp"
#include "zaremba/verify.hpp"
#include "zaremba/version.hpp"
#include "zaremba/wedge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace zaremba::cli {

namespace {

constexpr double pi = std::numbers::pi;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest text that round-trips exactly; independent of the locale.
std::string num(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

// "pi", "pi/2", "2pi/3", "3*pi/4" or a plain number of radians.
double parse_angle(std::string text)
{
    text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
    const auto at = text.find("pi");
    if (at == std::string::npos) {
        return parse_double(text);
    }
    std::string head = text.substr(0, at);
    if (!head.empty() && head.back() == '*') head.pop_back();
    const double factor = head.empty() ? 1.0 : parse_double(head);
    std::string tail = text.substr(at + 2);
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') throw UsageError("bad angle '" + text + "'");
        divisor = parse_double(tail.substr(1));
    }
    return factor * pi / divisor;
}

struct VertexFlags {
    std::string kind = "regular";
    std::vector<double> s;
};

wedge::VertexCondition make_vertex(const std::string& kind, double s)
{
    if (kind == "regular") return wedge::VertexCondition::regular();
    return wedge::VertexCondition::robin(s);
}

std::vector<double> robin_values(const VertexFlags& v)
{
    if (v.kind == "regular") {
        if (!v.s.empty()) throw UsageError("--s is only meaningful with --vertex robin");
        return {0.0};
    }
    if (v.s.empty()) throw UsageError("--vertex robin needs --s");
    return v.s;
}

void add_vertex_flags(CLI::App* cmd, VertexFlags& v)
{
    cmd->add_option("--vertex", v.kind, "vertex condition")
        ->check(CLI::IsMember({"regular", "robin"}))
        ->capture_default_str();
    cmd->add_option("--s", v.s, "Robin parameter(s)")->delimiter(',');
}

void add_list(CLI::App* cmd, const std::string& name, std::vector<double>& target,
              const std::string& help)
{
    cmd->add_option(name, target, help + " (comma list)")->delimiter(',')->required();
}

// Cartesian product over `lists`, first list slowest; calls row(values).
void for_grid(const std::vector<const std::vector<double>*>& lists,
              const std::function<void(const std::vector<double>&)>& row)
{
    std::vector<double> current(lists.size());
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (depth == lists.size()) {
            row(current);
            return;
        }
        for (double v : *lists[depth]) {
            current[depth] = v;
            walk(depth + 1);
        }
    };
    walk(0);
}

void write_row(std::ostream& out, const std::vector<double>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "," : "") << num(values[i]);
    }
    out << '\n';
}

struct SectorFlags {
    std::string alpha = "pi";
    double radius = 1.0;
    std::string bc_lo = "D";
    std::string bc_hi = "N";

    spectra::SectorSpec spec() const
    {
        spectra::SectorSpec s{parse_angle(alpha), radius, spectra::parse_boundary_condition(bc_lo),
                              spectra::parse_boundary_condition(bc_hi)};
        s.validate();
        return s;
    }
};

void add_sector_flags(CLI::App* cmd, SectorFlags& f)
{
    cmd->add_option("--alpha", f.alpha, "opening angle (radians, or pi/2 style)")->capture_default_str();
    cmd->add_option("--radius", f.radius, "sector radius")->capture_default_str();
    cmd->add_option("--bc-lo", f.bc_lo, "condition on the side theta = 0 (D or N)")->capture_default_str();
    cmd->add_option("--bc-hi", f.bc_hi, "condition on the side theta = alpha (D or N)")
        ->capture_default_str();
}

struct GridFlags {
    double t_min = 0.002;
    double t_max = 0.02;
    int points = 16;
    double lambda_max = 0.0;

    std::vector<double> grid() const
    {
        if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
            throw UsageError("need 0 < --t-min < --t-max and --points >= 2");
        }
        return numerics::log_grid(t_min, t_max, points);
    }
    double cutoff() const { return lambda_max > 0.0 ? lambda_max : spectra::default_lambda_max(t_min); }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g)
{
    cmd->add_option("--t-min", g.t_min, "smallest t")->capture_default_str();
    cmd->add_option("--t-max", g.t_max, "largest t")->capture_default_str();
    cmd->add_option("--points", g.points, "number of log-spaced t values")->capture_default_str();
    cmd->add_option("--lambda-max", g.lambda_max, "eigenvalue cutoff (default 40/t-min)");
}

std::vector<std::pair<double, double>> read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::string line;
    std::vector<std::pair<double, double>> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2) throw UsageError("CSV rows need at least two columns (t, value)");
        if (header) {
            header = false;
            if (cells[0] == "t") continue;
        }
        rows.emplace_back(parse_double(cells[0]), parse_double(cells[1]));
    }
    if (rows.empty()) throw UsageError("no data rows in '" + path + "'");
    return rows;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& final_out, std::ostream& err)
{
    CLI::App app{"Heat kernels and heat-trace coefficients for mixed Dirichlet/Neumann problems",
                 "zaremba"};
    app.set_version_flag("--version", std::string(zaremba::version));
    app.require_subcommand(1);

    int threads = 1;
    const auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads (env ZAREMBA_THREADS)")
            ->envname("ZAREMBA_THREADS")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    // kernel
    auto* kernel = app.add_subcommand("kernel", "evaluate a kernel on a grid; CSV output");
    kernel->require_subcommand(1);
    std::vector<double> t, r, r2, rho, theta, rho2, theta2;
    std::vector<double> s_halfline;
    VertexFlags vertex;
    int m = 2, dim_v = 1;

    auto* k_d = kernel->add_subcommand("halfline-d", "Dirichlet half-line kernel");
    auto* k_n = kernel->add_subcommand("halfline-n", "Neumann half-line kernel");
    auto* k_r = kernel->add_subcommand("halfline-robin", "Robin half-line kernel");
    for (auto* cmd : {k_d, k_n, k_r}) {
        add_list(cmd, "--t", t, "time");
        add_list(cmd, "--r", r, "first point");
        add_list(cmd, "--r2", r2, "second point");
    }
    add_list(k_r, "--s", s_halfline, "Robin parameter");

    auto* k_psi = kernel->add_subcommand("psi", "two-dimensional mixed kernel Psi");
    add_list(k_psi, "--t", t, "time");
    add_list(k_psi, "--rho", rho, "radius of the first point");
    add_list(k_psi, "--theta", theta, "angle of the first point");
    add_list(k_psi, "--rho2", rho2, "radius of the second point");
    add_list(k_psi, "--theta2", theta2, "angle of the second point");
    add_vertex_flags(k_psi, vertex);

    auto* k_diag = kernel->add_subcommand("mixed-diag", "diagonal of the mixed parametrix");
    add_list(k_diag, "--t", t, "time");
    add_list(k_diag, "--rho", rho, "radius");
    add_list(k_diag, "--theta", theta, "angle");
    k_diag->add_option("--m", m, "ambient dimension")->capture_default_str();
    k_diag->add_option("--dim-v", dim_v, "fiber dimension")->capture_default_str();
    add_vertex_flags(k_diag, vertex);

    // trace
    auto* trace = app.add_subcommand("trace", "heat trace of a disk sector from its exact spectrum");
    SectorFlags sector;
    GridFlags grid;
    add_sector_flags(trace, sector);
    add_grid_flags(trace, grid);
    add_threads(trace);

    // fit
    auto* fit = app.add_subcommand("fit", "fit a power series in t to a heat trace");
    std::string input;
    std::vector<double> exponents;
    add_sector_flags(fit, sector);
    add_grid_flags(fit, grid);
    add_threads(fit);
    fit->add_option("--input", input, "CSV with columns t,value (instead of a sector)");
    fit->add_option("--exponents", exponents, "powers of t to fit (default -1,-0.5,0,0.5)")
        ->delimiter(',');

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    std::string suite_text = "all";
    std::string output;
    bool record_timing = false;
    verify::Tolerances tol;
    verify_cmd->add_option("--suite", suite_text, "specfun, kernels, coeff-pipeline or all")
        ->capture_default_str();
    verify_cmd->add_option("--output", output, "write the JSON run manifest here ('-' for stdout)");
    verify_cmd->add_flag("--record-timing", record_timing, "include wall-clock duration in the manifest");
    add_threads(verify_cmd);
    const std::vector<std::pair<std::string, double*>> tol_flags{
        {"omega-identity", &tol.omega_identity}, {"hankel", &tol.hankel},
        {"heat-residual", &tol.heat_residual},   {"dirichlet-side", &tol.dirichlet_side},
        {"neumann-side", &tol.neumann_side},     {"robin-vertex", &tol.robin_vertex},
        {"semigroup", &tol.semigroup},           {"delta-slope", &tol.delta_slope},
        {"strip-identity", &tol.strip_identity}, {"robin-bracket", &tol.robin_bracket},
        {"regular-bracket", &tol.regular_bracket}, {"corner-b2", &tol.corner_b2},
        {"weyl-b0", &tol.weyl_b0},               {"perimeter-b1", &tol.perimeter_b1},
        {"corner-dd", &tol.corner_dd},           {"erfcx", &tol.erfcx},
        {"bessel-zero", &tol.bessel_zero},       {"symmetry", &tol.symmetry},
        {"parity", &tol.parity}};
    for (const auto& [name, ptr] : tol_flags) {
        verify_cmd->add_option("--tol-" + name, *ptr, "tolerance")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str()
            ->group("Tolerances");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, final_out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    // Results are buffered so a failing command emits no partial table.
    std::ostringstream out;
    const auto flush = [&](int code) {
        final_out << out.str();
        return code;
    };

    try {
        if (kernel->parsed()) {
            if (k_d->parsed() || k_n->parsed()) {
                const bool dirichlet = k_d->parsed();
                out << "t,r,r2,value\n";
                for_grid({&t, &r, &r2}, [&](const std::vector<double>& x) {
                    const double v = dirichlet ? halfline::dirichlet_kernel(x[0], x[1], x[2])
                                               : halfline::neumann_kernel(x[0], x[1], x[2]);
                    write_row(out, {x[0], x[1], x[2], v});
                });
            } else if (k_r->parsed()) {
                out << "t,r,r2,s,value\n";
                for_grid({&t, &r, &r2, &s_halfline}, [&](const std::vector<double>& x) {
                    const double v = halfline::robin_w(x[0], x[1], x[2], halfline::RobinParam{x[3]});
                    write_row(out, {x[0], x[1], x[2], x[3], v});
                });
            } else if (k_psi->parsed()) {
                const auto svals = robin_values(vertex);
                const bool robin = vertex.kind == "robin";
                out << (robin ? "t,rho,theta,rho2,theta2,s,value\n" : "t,rho,theta,rho2,theta2,value\n");
                for_grid({&svals, &t, &rho, &theta, &rho2, &theta2}, [&](const std::vector<double>& x) {
                    const double v =
                        wedge::psi(x[1], x[2], x[3], x[4], x[5], make_vertex(vertex.kind, x[0]));
                    if (robin) {
                        write_row(out, {x[1], x[2], x[3], x[4], x[5], x[0], v});
                    } else {
                        write_row(out, {x[1], x[2], x[3], x[4], x[5], v});
                    }
                });
            } else {
                const auto svals = robin_values(vertex);
                const bool robin = vertex.kind == "robin";
                out << (robin ? "t,rho,theta,s,value\n" : "t,rho,theta,value\n");
                for_grid({&svals, &t, &rho, &theta}, [&](const std::vector<double>& x) {
                    const wedge::WedgeConfig cfg(m, dim_v, make_vertex(vertex.kind, x[0]));
                    const double v = wedge::mixed_diagonal(x[1], x[2], x[3], cfg);
                    if (robin) {
                        write_row(out, {x[1], x[2], x[3], x[0], v});
                    } else {
                        write_row(out, {x[1], x[2], x[3], v});
                    }
                });
            }
            return flush(exit_ok);
        }

        if (trace->parsed()) {
            const auto spec = sector.spec();
            const auto ts = grid.grid();
            const auto samples =
                spectra::heat_trace_grid(spec, ts, grid.cutoff(), spectra::EnumerationOptions{threads});
            out << "t,value,tail_bound\n";
            for (const auto& s : samples) write_row(out, {s.t, s.value, s.tail_bound});
            return flush(exit_ok);
        }

        if (fit->parsed()) {
            if (exponents.empty()) exponents = spectra::sector_fit_exponents();
            const double emin = *std::min_element(exponents.begin(), exponents.end());
            std::vector<double> ts, ys;
            if (!input.empty()) {
                for (const auto& [tv, yv] : read_csv(input)) {
                    ts.push_back(tv);
                    ys.push_back(yv);
                }
            } else {
                ts = grid.grid();
                for (const auto& s : spectra::heat_trace_grid(sector.spec(), ts, grid.cutoff(),
                                                              spectra::EnumerationOptions{threads})) {
                    ys.push_back(s.value);
                }
            }
            const auto samples = numerics::make_fit_samples(ts, ys, emin);
            const auto result = numerics::fit_powers(samples, exponents);
            out << "exponent,coefficient,stderr\n";
            for (std::size_t i = 0; i < result.exponents.size(); ++i) {
                write_row(out, {result.exponents[i], result.coefficients[i], result.stderrs[i]});
            }
            if (result.ill_conditioned) {
                err << "warning: design matrix is ill-conditioned (condition " << num(result.condition)
                    << ")\n";
            }
            return flush(exit_ok);
        }

        if (verify_cmd->parsed()) {
            const auto suite = verify::parse_suite(suite_text);
            const auto start = std::chrono::steady_clock::now();
            const auto report = verify::run_suite(suite, tol, verify::RunOptions{threads});
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

            nlohmann::ordered_json manifest{
                {"command", "verify"},
                {"version", std::string(zaremba::version)},
                {"parameters", {{"suite", verify::suite_name(suite)}, {"threads", threads}}},
                {"tolerances", verify::to_json(tol)},
                {"outcome", verify::to_json(report)},
            };
            if (record_timing) manifest["duration_seconds"] = seconds;

            if (output == "-") {
                out << manifest.dump(2) << '\n';
            } else {
                out << verify::format_report(report);
                out << (report.pass() ? "all checks passed\n" : "some checks FAILED\n");
                if (!output.empty()) {
                    std::ofstream file(output);
                    if (!file) throw UsageError("cannot write '" + output + "'");
                    file << manifest.dump(2) << '\n';
                }
            }
            return flush(report.pass() ? exit_ok : exit_verify_failed);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}

} // namespace zaremba::cli
