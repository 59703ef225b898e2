#include "aotoc/optimize.hpp"

#include "aotoc/parallel.hpp"
#include "aotoc/scramble.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace aotoc::optimize {

namespace {

std::vector<std::pair<int, int>> factor_pairs(int m) {
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= m; ++n)
        if (m % n == 0) out.emplace_back(n, m / n);
    return out;
}

long long multiset_count(long long kinds, long long size) {
    // C(kinds + size − 1, size)
    long long r = 1;
    for (long long i = 1; i <= size; ++i) r = r * (kinds + i - 1) / i;
    return r;
}

// Visits partitions of d as (part, multiplicity) lists with parts descending,
// in reverse-lexicographic order of the underlying sequences.
void for_each_partition(int d, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    std::vector<std::pair<int, int>> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            for (int c = remaining / part; c >= 1; --c) {
                parts.emplace_back(part, c);
                self(self, remaining - part * c, part - 1);
                parts.pop_back();
            }
        }
    };
    rec(rec, d, d);
}

}  // namespace

void for_each_class(int d, const std::function<void(const std::vector<Sector>&)>& visit) {
    if (d < 1) throw DimensionError("enumerate_classes: d must be >= 1");
    for_each_partition(d, [&](const std::vector<std::pair<int, int>>& parts) {
        std::vector<Sector> sectors;
        // Choose a multiset of factor pairs for each distinct part in turn.
        auto rec = [&](auto&& self, std::size_t part_idx) -> void {
            if (part_idx == parts.size()) {
                visit(sectors);
                return;
            }
            const auto [m, c] = parts[part_idx];
            const auto pairs = factor_pairs(m);
            std::vector<std::size_t> pick(c, 0);
            while (true) {
                for (int i = 0; i < c; ++i) sectors.push_back({pairs[pick[i]].first, pairs[pick[i]].second});
                self(self, part_idx + 1);
                sectors.resize(sectors.size() - c);
                // Next non-decreasing index sequence.
                int i = c - 1;
                while (i >= 0 && pick[i] + 1 == pairs.size()) --i;
                if (i < 0) break;
                ++pick[i];
                for (int k = i + 1; k < c; ++k) pick[k] = pick[i];
            }
        };
        rec(rec, 0);
    });
}

ClassEnumeration enumerate_classes(int d, bool counts_only) {
    if (d < 1) throw DimensionError("enumerate_classes: d must be >= 1");
    if (d > 64 && !counts_only) throw DimensionError("enumerate_classes: d > 64 requires counts-only mode");
    ClassEnumeration out;
    out.dim = d;
    if (counts_only) {
        for_each_partition(d, [&](const std::vector<std::pair<int, int>>& parts) {
            long long n = 1;
            for (const auto& [m, c] : parts) n *= multiset_count(static_cast<long long>(factor_pairs(m).size()), c);
            out.count += n;
        });
        return out;
    }
    for_each_class(d, [&](const std::vector<Sector>& sectors) { out.classes.push_back(GtpsSpec(sectors).canonical()); });
    out.count = static_cast<long long>(out.classes.size());
    return out;
}

namespace {

// Per-sector data for every eigenvector column: σ_k = M_k†M_k and ρ_k = M_k M_k†,
// vectorized column-wise, where M_k is the n_J × d_J coefficient matrix.
struct SectorGrams {
    ComplexMatrix sigma;  // d_J² × d
    ComplexMatrix rho;    // n_J² × d
    std::vector<ComplexMatrix> m;
};

struct Evaluation {
    double value = 0.0;
    Eigen::MatrixXd r0_a, r0_ap, r1_a, r1_ap;
    std::vector<SectorGrams> grams;
};

Evaluation evaluate(const GtpsSpec& spec, const ComplexMatrix& u, bool keep_grams) {
    const int d = spec.dim();
    if (u.rows() != d || u.cols() != d) throw DimensionError("nrc objective: dimension mismatch");
    Evaluation ev;
    ev.r0_a = ev.r0_ap = ev.r1_a = ev.r1_ap = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, dj] = spec.sectors()[j];
        SectorGrams g;
        g.sigma.resize(dj * dj, d);
        g.rho.resize(n * n, d);
        g.m.resize(d);
        for (int k = 0; k < d; ++k) {
            g.m[k] = block::sector_coefficients(spec, j, u.col(k));
            const ComplexMatrix s = g.m[k].adjoint() * g.m[k];
            const ComplexMatrix r = g.m[k] * g.m[k].adjoint();
            g.sigma.col(k) = Eigen::Map<const ComplexVector>(s.data(), s.size());
            g.rho.col(k) = Eigen::Map<const ComplexVector>(r.data(), r.size());
        }
        // Tr(σ_k σ_l) and Tr(ρ_k ρ_l) for all pairs.
        const Eigen::MatrixXd s_sigma = (g.sigma.adjoint() * g.sigma).real();
        const Eigen::MatrixXd s_rho = (g.rho.adjoint() * g.rho).real();
        ev.r0_ap += s_sigma / dj;
        ev.r1_a += s_sigma / n;
        ev.r0_a += s_rho / n;
        ev.r1_ap += s_rho / dj;
        if (keep_grams) ev.grams.push_back(std::move(g));
    }
    Eigen::MatrixXd c = Eigen::MatrixXd::Ones(d, d);
    c.diagonal().setConstant(0.5);
    const double total = (c.cwiseProduct(ev.r0_a.cwiseProduct(ev.r1_ap) + ev.r0_ap.cwiseProduct(ev.r1_a))).sum();
    ev.value = 1.0 - total / d;
    return ev;
}

}  // namespace

double nrc_lta_of_unitary(const GtpsSpec& spec, const ComplexMatrix& u) {
    return evaluate(spec, u, false).value;
}

ComplexMatrix euclidean_gradient(const GtpsSpec& spec, const ComplexMatrix& u) {
    const int d = spec.dim();
    const Evaluation ev = evaluate(spec, u, true);
    Eigen::MatrixXd c = Eigen::MatrixXd::Ones(d, d);
    c.diagonal().setConstant(0.5);

    ComplexMatrix gamma = ComplexMatrix::Zero(d, d);
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, dj] = spec.sectors()[j];
        const int off = spec.offset(j);
        const auto& g = ev.grams[j];
        // Weights of ρ_l (left factor) and σ_l (right factor) in ∂f/∂M̄_k.
        const Eigen::MatrixXd w_rho = c.cwiseProduct(ev.r1_ap / n + ev.r0_a / dj);
        const Eigen::MatrixXd w_sigma = c.cwiseProduct(ev.r1_a / dj + ev.r0_ap / n);
        const ComplexMatrix rho_mix = g.rho * w_rho.cast<Complex>();      // column k: Σ_l w_kl vec(ρ_l)
        const ComplexMatrix sigma_mix = g.sigma * w_sigma.cast<Complex>();
        for (int k = 0; k < d; ++k) {
            const Eigen::Map<const ComplexMatrix> left(rho_mix.col(k).data(), n, n);
            const Eigen::Map<const ComplexMatrix> right(sigma_mix.col(k).data(), dj, dj);
            const ComplexMatrix grad = (-2.0 / d) * (left * g.m[k] + g.m[k] * right);
            for (int p = 0; p < n; ++p)
                for (int a = 0; a < dj; ++a) gamma(off + p * dj + a, k) = grad(p, a);
        }
    }
    return gamma;
}

ComplexMatrix riemannian_gradient(const GtpsSpec& spec, const ComplexMatrix& u) {
    const ComplexMatrix gamma = euclidean_gradient(spec, u);
    return gamma * u.adjoint() - u * gamma.adjoint();
}

DescentState descend(const GtpsSpec& spec, const ComplexMatrix& u0, const DescentOptions& opt) {
    if (u0.rows() != spec.dim() || u0.cols() != spec.dim()) throw DimensionError("descend: dimension mismatch");
    if (unitarity_defect(u0) > 1e-8) throw DimensionError("descend: u0 is not unitary");
    if (!(opt.eps > 0)) throw DimensionError("descend: eps must be positive");

    DescentState st;
    st.u = u0;
    st.value = nrc_lta_of_unitary(spec, st.u);
    st.step = opt.initial_step;
    st.trace.push_back(st.value);
    auto f = [&](const ComplexMatrix& u) { return nrc_lta_of_unitary(spec, u); };

    for (int it = 1; it <= opt.max_iter; ++it) {
        st.iterations = it;
        const ComplexMatrix g = riemannian_gradient(spec, st.u);
        st.grad_norm = g.norm();
        const double gg = 0.5 * g.squaredNorm();  // ⟨G, G⟩ = ½ Re Tr(G G†)
        if (gg < 1e-30) {
            st.converged = true;
            break;
        }
        // exp(−μG) = W diag(e^{iμλ}) W† with iG = W diag(λ) W†.
        const ComplexMatrix ig = Complex(0.0, 1.0) * g;
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((ig + ig.adjoint()) / 2.0);
        const ComplexMatrix& w = es.eigenvectors();
        const RealVector& lambda = es.eigenvalues();
        auto rotation = [&](double mu) {
            ComplexVector ph(lambda.size());
            for (Eigen::Index i = 0; i < lambda.size(); ++i) ph(i) = std::exp(Complex(0.0, mu * lambda(i)));
            return ComplexMatrix(w * ph.asDiagonal() * w.adjoint());
        };

        double mu = st.step;
        double f_p = f(rotation(mu) * st.u);
        double f_q = f(rotation(2 * mu) * st.u);
        while (st.value - f_q >= mu * gg && mu < 1e6) {
            mu *= 2;
            f_p = f_q;
            f_q = f(rotation(2 * mu) * st.u);
        }
        while (st.value - f_p < 0.5 * mu * gg && mu > opt.min_step) {
            mu /= 2;
            f_p = f(rotation(mu) * st.u);
        }
        if (!(f_p <= st.value)) {
            // No decrease even at the smallest step: stationary to working precision.
            st.converged = true;
            break;
        }
        st.u = rotation(mu) * st.u;
        if (unitarity_defect(st.u) > 1e-10) st.u = nearest_unitary(st.u);
        const double delta = st.value - f_p;
        st.value = f(st.u);
        st.step = mu;
        st.trace.push_back(st.value);
        if (std::abs(delta) < opt.eps) {
            st.converged = true;
            break;
        }
    }
    st.grad_norm = riemannian_gradient(spec, st.u).norm();
    return st;
}

ConjectureReport conjecture_suite(int d, int restarts, double eps, std::uint64_t seed, int threads, int max_iter) {
    if (restarts < 1) throw DimensionError("conjecture_suite: restarts must be >= 1");
    const ClassEnumeration classes = enumerate_classes(d, false);
    DescentOptions opt;
    opt.eps = eps;
    opt.max_iter = max_iter;

    ConjectureReport report;
    report.dim = d;
    report.classes = parallel_map(classes.classes.size(), threads, [&](std::size_t i) {
        const GtpsSpec& spec = classes.classes[i];
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        ClassResult r;
        r.spec = spec;
        r.conjectured_min = conjectured_min(spec);
        r.best_value = std::numeric_limits<double>::infinity();
        for (int k = 0; k < restarts; ++k) {
            const DescentState st = descend(spec, haar_unitary(d, rng), opt);
            if (st.value < r.best_value) {
                r.best_value = st.value;
                r.converged = st.converged;
            }
        }
        r.gap = r.best_value - r.conjectured_min;
        return r;
    });
    for (const auto& c : report.classes)
        if (c.gap < -kViolationThreshold) ++report.violations;
    return report;
}

}  // namespace aotoc::optimize
