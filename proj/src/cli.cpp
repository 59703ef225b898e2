#include "aotoc/cli.hpp"

#include "aotoc/mereology.hpp"
#include "aotoc/models.hpp"
#include "aotoc/optimize.hpp"
#include "aotoc/parallel.hpp"
#include "aotoc/report.hpp"
#include "aotoc/scramble.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace aotoc::cli {

namespace {

using mereology::SweepRecord;
using report::json;

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot open output file '" + cfg.output_path + "'");
    f << text;
    if (!f.flush()) throw OutputError("failed writing output file '" + cfg.output_path + "'");
}

std::string render(const RunConfig& cfg, const std::vector<SweepRecord>& records) {
    if (cfg.format == Format::CSV) return report::to_csv(records);
    return report::to_json(records).dump(2) + "\n";
}

models::SpinChainParams chain_params(const std::string& model, int n, const std::vector<std::string>& overrides) {
    auto p = models::default_params(models::parse_model(model), n);
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw DimensionError("coupling must be key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        if (!p.couplings.count(key)) throw DimensionError("model " + model + " has no coupling '" + key + "'");
        try {
            p.couplings[key] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw DimensionError("coupling '" + key + "' is not a number");
        }
    }
    return p;
}

std::vector<int> first_half(int n) {
    std::vector<int> s;
    for (int q = 1; q <= n / 2; ++q) s.push_back(q);
    return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Algebraic out-of-time-order correlators and their long-time averages", "aotoc"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    int threads = 0;
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--eps-deg", cfg.eps_deg, "Relative tolerance for degenerate levels")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--eps-res", cfg.eps_res, "Relative tolerance for resonant gaps")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--eps-descent", cfg.eps_descent, "Descent stopping tolerance on |df|")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--out", cfg.output_path, "Output file (default: stdout)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (default: $AOTOC_THREADS or 1)")->check(CLI::PositiveNumber);

    double h_field = 0.0;
    int theta_steps = 33;
    auto* stab = app.add_subcommand("stabilizer-sweep", "Rotated perfect-code algebras under the Heisenberg ring");
    stab->set_help_flag("--help", "Print this help message and exit");
    stab->add_option("--h", h_field, "Longitudinal field")->capture_default_str();
    stab->add_option("--theta-steps", theta_steps, "Grid points on [0, pi/4]")->check(CLI::Range(2, 100000))->capture_default_str();

    int frame = 1, eta_points = 64;
    bool natural = false;
    std::vector<double> couplings_j{models::kDefaultQrfCouplings.begin(), models::kDefaultQrfCouplings.end()};
    auto* qrf = app.add_subcommand("qrf", "Z2 reference-frame example");
    qrf->add_option("--frame", frame, "Perspective (1 or 2)")->check(CLI::IsMember({1, 2}))->capture_default_str();
    auto* eta_opt = qrf->add_option("--eta-grid", eta_points, "Number of eta directions")->check(CLI::PositiveNumber);
    auto* nat_opt = qrf->add_flag("--natural", natural, "Natural subsystem algebras of both frames");
    eta_opt->excludes(nat_opt);
    qrf->add_option("--j", couplings_j, "Couplings Jx Jy Jz")->expected(3);

    std::string model = "tfim";
    int n = 6;
    std::vector<std::string> overrides;
    auto* bip = app.add_subcommand("bipartitions", "Search over half-chain bipartitions");
    bip->add_option("--model", model, "heisenberg-ring | tfim | xxz")->capture_default_str();
    bip->add_option("--n", n, "Qubit count (even)")->capture_default_str();
    bip->add_option("--coupling", overrides, "Override a coupling, key=value");

    int dim = 4;
    bool counts_only = false;
    auto* en = app.add_subcommand("enumerate", "Enumerate algebra classes of a Hilbert dimension");
    en->add_option("--d", dim, "Hilbert space dimension")->required()->check(CLI::PositiveNumber);
    en->add_flag("--counts-only", counts_only, "Print only the number of classes");

    int restarts = 3;
    double eps_override = 0.0;
    auto* conj = app.add_subcommand("conjecture", "Gradient descent over every class of a dimension");
    conj->add_option("--d", dim, "Hilbert space dimension")->required()->check(CLI::Range(1, 64));
    conj->add_option("--restarts", restarts, "Random starts per class")->check(CLI::PositiveNumber)->capture_default_str();
    conj->add_option("--eps", eps_override, "Stopping tolerance on |df| (overrides --eps-descent)")->check(CLI::PositiveNumber);

    auto* evn = app.add_subcommand("exact-vs-nrc", "Exact, NRC and NRC+ long-time averages per bipartition");
    evn->add_option("--model", model, "heisenberg-ring | tfim | xxz")->capture_default_str();
    evn->add_option("--n", n, "Qubit count (even)")->capture_default_str();
    evn->add_option("--coupling", overrides, "Override a coupling, key=value");

    double t_max = 1e-2;
    int samples = 101;
    auto* curve = app.add_subcommand("aotoc-curve", "A-OTOC trace of the half-chain bipartition with short-time fit");
    curve->add_option("--model", model, "heisenberg-ring | tfim | xxz")->capture_default_str();
    curve->add_option("--n", n, "Qubit count (even)")->capture_default_str();
    curve->add_option("--coupling", overrides, "Override a coupling, key=value");
    curve->add_option("--t-max", t_max, "Final time")->check(CLI::PositiveNumber)->capture_default_str();
    curve->add_option("--samples", samples, "Equally spaced samples on [0, t-max]")->check(CLI::Range(3, 10000000))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    cfg.format = format == "csv" ? Format::CSV : Format::JSON;
    if (threads > 0) {
        cfg.threads = threads;
    } else if (const char* env = std::getenv("AOTOC_THREADS")) {
        try {
            cfg.threads = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            err << "error: AOTOC_THREADS must be a positive integer\n";
            return 1;
        }
    }
    const mereology::Tolerances tol{cfg.eps_deg, cfg.eps_res};

    try {
        if (stab->parsed()) {
            cfg.command = "stabilizer-sweep";
            const auto records = mereology::theta_sweep(h_field, mereology::theta_grid(theta_steps), tol, cfg.threads);
            emit(cfg, render(cfg, records), out);
        } else if (qrf->parsed()) {
            cfg.command = "qrf";
            if (couplings_j.size() != 3) throw DimensionError("--j needs three values");
            const auto hams = models::qrf_hamiltonians({couplings_j[0], couplings_j[1], couplings_j[2]});
            std::vector<SweepRecord> records;
            if (natural) {
                const SpectralDecomp sd = eig_hermitian(hams.h1, cfg.eps_deg, cfg.eps_res);
                for (int f : {1, 2}) {
                    const AlgebraRep alg = models::qrf_natural_algebra(f);
                    SweepRecord r;
                    r.label = "A" + std::to_string(f);
                    r.param = f;
                    r.lta_exact = lta_exact(alg, sd, cfg.eps_res).value;
                    r.lta_nrc = lta_nrc(alg, sd).value;
                    r.lta_nrc_plus = lta_nrc_plus(alg, sd).value;
                    r.gaussian_rate = gaussian_rate(alg, hams.h1);
                    records.push_back(r);
                }
            } else {
                const ComplexMatrix& h = frame == 1 ? hams.h1 : hams.h2;
                const SpectralDecomp sd = eig_hermitian(h, cfg.eps_deg, cfg.eps_res);
                const auto grid = models::eta_grid(eta_points);
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const AlgebraRep alg = models::eta_algebra(frame, grid[i]);
                    SweepRecord r;
                    r.param = static_cast<double>(i);
                    r.eta = grid[i];
                    r.lta_exact = lta_exact(alg, sd, cfg.eps_res).value;
                    r.lta_nrc = lta_nrc(alg, sd).value;
                    r.lta_nrc_plus = lta_nrc_plus(alg, sd).value;
                    r.gaussian_rate = gaussian_rate(alg, h);
                    records.push_back(r);
                }
            }
            emit(cfg, render(cfg, records), out);
        } else if (bip->parsed()) {
            cfg.command = "bipartitions";
            const auto p = chain_params(model, n, overrides);
            const auto records = mereology::bipartition_sweep(p, n / 2, tol, cfg.threads);
            emit(cfg, render(cfg, records), out);
        } else if (en->parsed()) {
            cfg.command = "enumerate";
            const auto e = optimize::enumerate_classes(dim, counts_only);
            if (counts_only) {
                out << e.count << '\n';
                if (!cfg.output_path.empty()) emit(cfg, report::to_json(e).dump(2) + "\n", out);
            } else if (cfg.format == Format::CSV) {
                std::ostringstream os;
                os << "spec\n";
                for (const auto& c : e.classes) os << '"' << c.to_string() << "\"\n";
                emit(cfg, os.str(), out);
            } else {
                emit(cfg, report::to_json(e).dump(2) + "\n", out);
            }
        } else if (conj->parsed()) {
            cfg.command = "conjecture";
            const double eps = eps_override > 0 ? eps_override : cfg.eps_descent;
            const auto rep = optimize::conjecture_suite(dim, restarts, eps, cfg.seed, cfg.threads);
            emit(cfg, cfg.format == Format::CSV ? report::to_csv(rep) : report::to_json(rep).dump(2) + "\n", out);
        } else if (evn->parsed()) {
            cfg.command = "exact-vs-nrc";
            const auto p = chain_params(model, n, overrides);
            const ComplexMatrix h = models::build_hamiltonian(p);
            const SpectralDecomp sd = eig_hermitian(h, cfg.eps_deg, cfg.eps_res);
            const auto subsets = mereology::bipartition_subsets(n, n / 2);
            const auto records = parallel_map(subsets.size(), cfg.threads, [&](std::size_t i) {
                const AlgebraRep alg = spin_subset_algebra(n, subsets[i]);
                SweepRecord r;
                r.label = mereology::subset_label(subsets[i]);
                r.subset = subsets[i];
                r.lta_exact = lta_exact(alg, sd, cfg.eps_res).value;
                r.lta_nrc = lta_nrc_block_gram(alg, sd.eigenvectors).value;
                r.lta_nrc_plus = lta_nrc_plus(alg, sd).value;
                r.gaussian_rate = gaussian_rate(alg, h);
                return r;
            });
            emit(cfg, render(cfg, records), out);
        } else if (curve->parsed()) {
            cfg.command = "aotoc-curve";
            const auto p = chain_params(model, n, overrides);
            if (n % 2 != 0) throw DimensionError("aotoc-curve: n must be even");
            const ComplexMatrix h = models::build_hamiltonian(p);
            const SpectralDecomp sd = eig_hermitian(h, cfg.eps_deg, cfg.eps_res);
            const auto subset = first_half(n);
            const AlgebraRep alg = spin_subset_algebra(n, subset);
            std::vector<double> ts(samples), gs(samples);
            for (int i = 0; i < samples; ++i) {
                ts[i] = t_max * i / (samples - 1);
                gs[i] = aotoc_at(alg, sd.evolution(ts[i]));
            }
            const double rate = gaussian_rate(alg, h);
            const ShortTimeFit fit = fit_short_time({ts.begin() + 1, ts.end()}, {gs.begin() + 1, gs.end()});
            if (cfg.format == Format::CSV) {
                std::ostringstream os;
                os << "t,aotoc\n";
                for (int i = 0; i < samples; ++i) os << report::format_double(ts[i]) << ',' << report::format_double(gs[i]) << '\n';
                emit(cfg, os.str(), out);
            } else {
                json j = {{"model", model},
                          {"n", n},
                          {"subset", subset},
                          {"t", ts},
                          {"aotoc", gs},
                          {"gaussian_rate", rate},
                          {"fit", {{"c2", fit.c2}, {"c3", fit.c3}, {"predicted_c2", 2.0 * rate * rate}}}};
                emit(cfg, j.dump(2) + "\n", out);
            }
        }
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace aotoc::cli
