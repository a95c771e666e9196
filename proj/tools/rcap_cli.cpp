// Command-line front end: Cantor sequences, capacity certificates,
// equilibrium measures, OPA tables, outer/threshold constructions, and the
// verification suites, emitted as CSV or JSON.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcap/capacity.hpp"
#include "rcap/cantor.hpp"
#include "rcap/dirichlet.hpp"
#include "rcap/equilibrium.hpp"
#include "rcap/outer.hpp"
#include "rcap/threshold.hpp"
#include "rcap/verify.hpp"

namespace {

using nlohmann::json;

// CLI11 config reader for JSON files (flags given on the command line
// override config values).
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }
    std::vector<CLI::ConfigItem> from_config(std::istream& is) const override {
        json j = json::parse(is);
        std::vector<CLI::ConfigItem> out;
        fill(j, {}, out);
        return out;
    }

  private:
    static void fill(const json& j, std::vector<std::string> parents,
                     std::vector<CLI::ConfigItem>& out) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object()) {
                auto p = parents;
                p.push_back(it.key());
                fill(*it, p, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_array())
                for (const auto& v : *it)
                    item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            else
                item.inputs.push_back(it->is_string() ? it->get<std::string>() : it->dump());
            out.push_back(item);
        }
    }
};

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

rcap::CantorScheme make_scheme(const std::string& kind, double alpha_star) {
    if (kind == "closed") return rcap::CantorScheme::closed_interval(alpha_star);
    if (kind == "open") return rcap::CantorScheme::open_interval(alpha_star);
    if (kind == "log") return rcap::CantorScheme::logarithmic();
    throw std::invalid_argument("unknown scheme kind '" + kind + "' (closed|open|log)");
}

std::vector<long> parse_degrees(const std::string& s) {
    std::vector<long> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        long a = std::stol(s.substr(0, dots)), b = std::stol(s.substr(dots + 2));
        for (long n = a; n <= b; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

rcap::ArcSet parse_arc_set(const std::string& s) {
    if (s.rfind("point:", 0) == 0) return rcap::ArcSet::point(std::stod(s.substr(6)));
    std::vector<rcap::Arc> arcs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("arc '" + tok + "' must be start-end in turns");
        arcs.push_back({std::stod(tok.substr(0, dash)), std::stod(tok.substr(dash + 1))});
    }
    return rcap::ArcSet(std::move(arcs));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz capacity, Cantor sets, and Dirichlet-space diagnostics"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON config file; flags override its values");

    std::string output, format = "json";
    unsigned seed = 1;
    app.add_option("--output", output, "output file (default stdout)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for randomized sweeps");

    // cantor
    auto* cantor = app.add_subcommand("cantor", "Cantor scheme sequences and level arcs");
    std::string kind = "closed";
    double alpha_star = 0.5, base_offset = 0.0, base_length = 1.0;
    int level = 3;
    cantor->add_option("--kind", kind, "closed|open|log");
    cantor->add_option("--alpha-star", alpha_star, "critical order for closed/open schemes");
    cantor->add_option("--level", level, "construction level")->check(CLI::NonNegativeNumber);
    cantor->add_option("--base-offset", base_offset, "base arc offset in turns");
    cantor->add_option("--base-length", base_length, "base arc length in turns");

    // capacity
    auto* capacity = app.add_subcommand("capacity", "two-sided capacity series certificates");
    std::vector<double> alphas{0.5};
    long terms = 200;
    std::size_t eq_nodes = 0;
    int eq_level = 3;
    double eq_tol = 1e-6;
    capacity->add_option("--kind", kind, "closed|open|log");
    capacity->add_option("--alpha-star", alpha_star, "critical order for closed/open schemes");
    capacity->add_option("--alpha", alphas, "kernel orders to certify");
    capacity->add_option("--terms", terms, "series terms");
    capacity->add_option("--equilibrium", eq_nodes, "also solve equilibrium with this many nodes");
    capacity->add_option("--eq-level", eq_level, "truncation level for the equilibrium solve");
    capacity->add_option("--eq-tol", eq_tol, "Frank-Wolfe gap tolerance");

    // opa
    auto* opa = app.add_subcommand("opa", "optimal polynomial approximant distances");
    std::string poly = "1,-1", degrees_spec = "1..5";
    long truncation = 64;
    opa->add_option("--poly", poly, "comma-separated real Taylor coefficients of f");
    opa->add_option("--alpha", alphas, "Dirichlet orders");
    opa->add_option("--degrees", degrees_spec, "degree list '1,2,3' or range '1..5'");
    opa->add_option("--truncation", truncation, "series truncation degree M");

    // construct outer|threshold
    auto* construct = app.add_subcommand("construct", "build the counterexample functions");
    construct->require_subcommand(1);
    auto* outer_cmd = construct->add_subcommand("outer", "Carleson outer function");
    std::string set_spec = "point:0";
    double N = 1.0;
    int grid = 64;
    outer_cmd->add_option("--set", set_spec, "'point:theta' or arcs 'a-b,c-d' in turns");
    outer_cmd->add_option("--N", N, "outer exponent")->check(CLI::PositiveNumber);
    outer_cmd->add_option("--grid", grid, "evaluation grid size")->check(CLI::PositiveNumber);
    auto* threshold_cmd = construct->add_subcommand("threshold", "capacity-weighted series F");
    double t_alpha_star = 1.0;
    int t_terms = 4, t_budget = 12;
    threshold_cmd->add_option("--alpha-star", t_alpha_star, "critical order (1 = log scheme)");
    threshold_cmd->add_option("--terms", t_terms, "number of series terms")
        ->check(CLI::PositiveNumber);
    threshold_cmd->add_option("--level-budget", t_budget, "maximum truncation level");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("suite", suite,
                       "all|series|frostman|fourier|real|opa|outer|carleson|harmonic|threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cantor) {
            auto scheme = make_scheme(kind, alpha_star).relocated(base_offset, base_length);
            auto arcs = rcap::arcs_at_level(scheme, level);
            if (format == "csv") {
                std::ostringstream os;
                os << "n,d,e\n";
                for (int n = 0; n <= level; ++n)
                    os << n << "," << num(scheme.d(n)) << "," << num(scheme.e(n)) << "\n";
                os << "arc_start,arc_end\n";
                for (const auto& a : arcs.arcs()) os << num(a.start) << "," << num(a.end) << "\n";
                write_out(output, os.str());
            } else {
                json j;
                j["kind"] = rcap::CantorScheme::kind_name(scheme.kind());
                j["level"] = level;
                json seq = json::array();
                for (int n = 0; n <= level; ++n)
                    seq.push_back({{"n", n}, {"d", scheme.d(n)}, {"e", scheme.e(n)}});
                j["sequence"] = seq;
                j["arcs"] = arcs.to_json();
                write_out(output, j.dump(2) + "\n");
            }
        } else if (*capacity) {
            if (terms < 1) throw std::invalid_argument("--terms must be >= 1");
            auto scheme = make_scheme(kind, alpha_star);
            std::ostringstream csv;
            csv << "alpha,lower_series,upper_series,cap_lower,cap_upper,verdict\n";
            json rows = json::array();
            for (double a : alphas) {
                auto cert = rcap::cantor_capacity_bounds(scheme, rcap::KernelOrder(a), terms);
                csv << num(a) << "," << num(cert.lower_series_value) << ","
                    << num(cert.upper_series_value) << "," << num(cert.cap_lower_bound) << ","
                    << num(cert.cap_upper_bound) << "," << to_string(cert.verdict) << "\n";
                rows.push_back({{"alpha", a},
                                {"lower_series", cert.lower_series_value},
                                {"upper_series", cert.upper_series_value},
                                {"cap_lower", cert.cap_lower_bound},
                                {"cap_upper", cert.cap_upper_bound},
                                {"verdict", to_string(cert.verdict)}});
            }
            json j;
            j["certificates"] = rows;
            if (eq_nodes > 0) {
                auto arcs = rcap::arcs_at_level(make_scheme(kind, alpha_star), eq_level);
                auto res =
                    rcap::equilibrium(arcs, rcap::KernelOrder(alphas.front()), eq_nodes, eq_tol);
                j["equilibrium"] = {{"alpha", alphas.front()},
                                    {"energy", res.energy},
                                    {"capacity", res.capacity_estimate},
                                    {"frostman_gap", res.frostman_gap},
                                    {"iterations", res.iterations}};
                csv << "equilibrium_energy,capacity,frostman_gap,iterations\n"
                    << num(res.energy) << "," << num(res.capacity_estimate) << ","
                    << num(res.frostman_gap) << "," << res.iterations << "\n";
            }
            write_out(output, format == "csv" ? csv.str() : j.dump(2) + "\n");
        } else if (*opa) {
            std::vector<double> coeffs;
            std::stringstream ss(poly);
            std::string tok;
            while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(tok));
            auto f = rcap::PowerSeries::from_real(coeffs);
            auto reports = rcap::opa_sweep(f, alphas, parse_degrees(degrees_spec), truncation);
            write_out(output, format == "csv" ? rcap::opa_reports_csv(reports)
                                              : rcap::opa_reports_json(reports).dump(2) + "\n");
        } else if (*outer_cmd) {
            rcap::OuterFunctionSpec spec{parse_arc_set(set_spec), N};
            int side = std::max(1, int(std::lround(std::sqrt(double(grid)))));
            std::ostringstream csv;
            csv << "re_z,im_z,re_f,im_f\n";
            for (int i = 0; i < side; ++i)
                for (int j = 0; j < side; ++j) {
                    double r = 0.9 * (double(i) + 0.5) / double(side);
                    std::complex<double> z =
                        std::polar(r, 2.0 * M_PI * (double(j) + 0.37) / double(side));
                    auto v = rcap::outer_eval(spec, z);
                    csv << num(z.real()) << "," << num(z.imag()) << "," << num(v.real()) << ","
                        << num(v.imag()) << "\n";
                }
            if (format == "csv") {
                write_out(output, csv.str());
            } else {
                json j;
                j["spec"] = spec.to_json();
                j["grid_csv"] = csv.str();
                write_out(output, j.dump(2) + "\n");
            }
        } else if (*threshold_cmd) {
            auto F = rcap::build_threshold_F(t_alpha_star, t_terms, t_budget);
            json j;
            j["spec"] = F.spec.to_json();
            j["F_at_0"] = F.eval(0.0).real();
            write_out(output, j.dump(2) + "\n");
        } else if (*verify) {
            std::vector<rcap::CheckResult> results;
            if (suite == "all") {
                results = rcap::run_acceptance(seed);
            } else if (suite == "series") {
                results.push_back(rcap::check_closed_scheme_series());
                results.push_back(rcap::check_log_scheme_verdicts());
            } else if (suite == "frostman") {
                results.push_back(rcap::check_circle_equilibrium());
            } else if (suite == "fourier") {
                results.push_back(rcap::check_fourier_energy_sandwich(seed));
            } else if (suite == "real") {
                results.push_back(rcap::check_real_part_inequality(seed));
            } else if (suite == "opa") {
                results.push_back(rcap::check_opa_distances());
            } else if (suite == "outer") {
                results.push_back(rcap::check_outer_identity());
            } else if (suite == "carleson") {
                results.push_back(rcap::check_carleson_integral());
            } else if (suite == "harmonic") {
                results.push_back(rcap::check_harmonic_measure(seed));
            } else if (suite == "threshold") {
                results.push_back(rcap::check_threshold_build(seed));
            } else {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            std::ostringstream os;
            bool all_pass = true;
            for (const auto& r : results) {
                os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " -- " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
            write_out(output, os.str());
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
