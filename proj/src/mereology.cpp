#include "aotoc/mereology.hpp"

#include "aotoc/parallel.hpp"
#include "aotoc/scramble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace aotoc::mereology {

void validate(const SweepRecord& r) {
    bool any = false;
    for (const auto* m : {&r.lta_exact, &r.lta_nrc, &r.lta_nrc_plus, &r.gaussian_rate, &r.mutual_info}) {
        if (!m->has_value()) continue;
        any = true;
        if (!std::isfinite(**m)) throw NumericalError("SweepRecord: non-finite metric");
    }
    if (!any) throw DimensionError("SweepRecord: no metric populated");
}

std::vector<double> theta_grid(int steps) {
    if (steps < 2) throw DimensionError("theta_grid: need at least two points");
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i) out[i] = std::numbers::pi / 4.0 * i / (steps - 1);
    out.back() = std::numbers::pi / 4.0;
    return out;
}

std::vector<SweepRecord> theta_sweep(double h_field, const std::vector<double>& thetas,
                                     const Tolerances& tol, int threads) {
    for (double t : thetas)
        if (!(t >= 0.0 && t <= std::numbers::pi / 4.0 + 1e-12))
            throw DimensionError("theta_sweep: theta outside [0, pi/4]");
    auto params = models::default_params(models::ChainModel::HEISENBERG_RING, 5);
    params.couplings["h"] = h_field;
    const ComplexMatrix h = models::build_hamiltonian(params);
    const SpectralDecomp sd = eig_hermitian(h, tol.eps_deg, tol.eps_res);

    return parallel_map(thetas.size(), threads, [&](std::size_t i) {
        const AlgebraRep alg = models::rotated_code_algebra(thetas[i]);
        SweepRecord r;
        r.param = thetas[i];
        r.lta_exact = lta_exact(alg, sd, tol.eps_res).value;
        r.lta_nrc_plus = lta_nrc_plus(alg, sd).value;
        r.lta_nrc = lta_nrc(alg, sd).value;
        r.gaussian_rate = gaussian_rate(alg, h);
        validate(r);
        return r;
    });
}

std::vector<std::vector<int>> bipartition_subsets(int n, int half) {
    if (n < 2 || n % 2 != 0) throw DimensionError("bipartition_subsets: n must be even");
    if (half != n / 2) throw DimensionError("bipartition_subsets: half must equal n/2");
    std::vector<std::vector<int>> out;
    std::vector<int> current{1};
    // Lexicographic recursion over the remaining half-1 qubits from {2..n}.
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == half) {
            out.push_back(current);
            return;
        }
        for (int q = next; q <= n; ++q) {
            current.push_back(q);
            self(self, q + 1);
            current.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

std::string subset_label(const std::vector<int>& subset) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
    os << '}';
    return os.str();
}

std::vector<SweepRecord> bipartition_sweep(const models::SpinChainParams& p, int half,
                                           const Tolerances& tol, int threads) {
    const auto subsets = bipartition_subsets(p.n, half);
    const ComplexMatrix h = models::build_hamiltonian(p);
    const SpectralDecomp sd = eig_hermitian(h, tol.eps_deg, tol.eps_res);

    return parallel_map(subsets.size(), threads, [&](std::size_t i) {
        const AlgebraRep alg = spin_subset_algebra(p.n, subsets[i]);
        SweepRecord r;
        r.label = subset_label(subsets[i]);
        r.subset = subsets[i];
        if (sd.nrc_class == NrcClass::NRC) r.lta_nrc = lta_nrc_block_gram(alg, sd.eigenvectors).value;
        else r.lta_nrc_plus = lta_nrc_plus(alg, sd).value;
        r.mutual_info = avg_eigenstate_mutual_info(sd, alg);
        r.gaussian_rate = gaussian_rate(alg, h);
        validate(r);
        return r;
    });
}

double avg_eigenstate_mutual_info(const SpectralDecomp& sd, const AlgebraRep& alg) {
    if (alg.spec().dim_center() != 1) throw DimensionError("avg_eigenstate_mutual_info: algebra is not bipartite");
    if (sd.dim() != alg.dim()) throw DimensionError("avg_eigenstate_mutual_info: dimension mismatch");
    const auto [n, d] = alg.spec().sectors().front();
    const ComplexMatrix& v = alg.framing();
    double total = 0.0;
    for (std::size_t k = 0; k < sd.level_count(); ++k) {
        const ComplexMatrix rho = v.adjoint() * sd.projector(k) * v /
                                  static_cast<double>(sd.level_groups[k].size());
        const double s_n = entropy_bits(partial_trace(rho, {n, d}, {0}));
        const double s_d = entropy_bits(partial_trace(rho, {n, d}, {1}));
        total += s_n + s_d - entropy_bits(rho);
    }
    return total / static_cast<double>(sd.level_count());
}

std::vector<std::size_t> argmin_set(const std::vector<double>& values, double tol) {
    if (values.empty()) return {};
    const double lo = *std::min_element(values.begin(), values.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] <= lo + tol) out.push_back(i);
    return out;
}

namespace {

std::vector<double> ranks(const std::vector<double>& x, double tie_tol) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> r(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && x[order[j]] - x[order[j - 1]] <= tie_tol) ++j;
        const double avg = 0.5 * static_cast<double>(i + j - 1) + 1.0;
        for (std::size_t k = i; k < j; ++k) r[order[k]] = avg;
        i = j;
    }
    return r;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y, double tie_tol) {
    if (x.size() != y.size() || x.size() < 2) throw DimensionError("spearman: need two equal-length series");
    const auto rx = ranks(x, tie_tol);
    const auto ry = ranks(y, tie_tol);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) return sxx == syy ? 1.0 : 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace aotoc::mereology
