#include "aotoc/scramble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aotoc {

std::string to_string(LtaMethod m) {
    switch (m) {
        case LtaMethod::EXACT: return "EXACT";
        case LtaMethod::NRC: return "NRC";
        case LtaMethod::NRC_PLUS: return "NRC_PLUS";
        case LtaMethod::TIME_AVERAGE: return "TIME_AVERAGE";
    }
    return "?";
}

namespace {

void require_square(const AlgebraRep& alg, const ComplexMatrix& m, const char* what) {
    if (m.rows() != alg.dim() || m.cols() != alg.dim())
        throw DimensionError(std::string(what) + ": dimension mismatch");
}

void require_unitary(const ComplexMatrix& u, const char* what) {
    if (unitarity_defect(u) > 1e-8) throw DimensionError(std::string(what) + ": matrix is not unitary");
}

double real_part_checked(Complex z, const char* what) {
    if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real())))
        throw NumericalError(std::string(what) + ": imaginary residue " + std::to_string(z.imag()));
    return z.real();
}

// Rows of the frame-space matrix psi that belong to the product vectors
// |p⟩⊗|k⟩ for fixed k (all p) of one sector.
ComplexMatrix gather_fixed_k(const GtpsSpec& spec, std::size_t j, int k, const ComplexMatrix& psi) {
    const auto [n, d] = spec.sectors()[j];
    const int off = spec.offset(j);
    ComplexMatrix out(n, psi.cols());
    for (int p = 0; p < n; ++p) out.row(p) = psi.row(off + p * d + k);
    return out;
}

// ẽ_α = Ψ† e_α Ψ and f̃_γ = Ψ† f_γ Ψ for all α (resp. γ), stored so that the
// values for one matrix entry (i, j) are contiguous over the operator index.
struct FrameOperators {
    int dim = 0;
    int count = 0;
    std::vector<Complex> data;

    const Complex* at(int i, int j) const {
        return data.data() + (static_cast<std::size_t>(i) * dim + j) * count;
    }
    void store(int op, const ComplexMatrix& m) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                data[(static_cast<std::size_t>(i) * dim + j) * count + op] = m(i, j);
    }
};

FrameOperators frame_e(const GtpsSpec& spec, const ComplexMatrix& psi) {
    FrameOperators out{spec.dim(), spec.dim_A(), {}};
    out.data.resize(static_cast<std::size_t>(out.dim) * out.dim * out.count);
    int op = 0;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const int d = spec.sectors()[j].d;
        std::vector<ComplexMatrix> rows;
        for (int k = 0; k < d; ++k) rows.push_back(gather_fixed_k(spec, j, k, psi));
        const double c = 1.0 / std::sqrt(static_cast<double>(d));
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) out.store(op++, c * rows[k].adjoint() * rows[l]);
    }
    return out;
}

FrameOperators frame_f(const GtpsSpec& spec, const ComplexMatrix& psi) {
    FrameOperators out{spec.dim(), spec.dim_Aprime(), {}};
    out.data.resize(static_cast<std::size_t>(out.dim) * out.dim * out.count);
    int op = 0;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, d] = spec.sectors()[j];
        const int off = spec.offset(j);
        const double c = 1.0 / std::sqrt(static_cast<double>(n));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                out.store(op++, c * psi.middleRows(off + p * d, d).adjoint() * psi.middleRows(off + q * d, d));
    }
    return out;
}

Complex dot_conj(const Complex* a, const Complex* b, int count) {
    // Σ a · conj(b)
    Complex s = 0.0;
    for (int i = 0; i < count; ++i) s += a[i] * std::conj(b[i]);
    return s;
}

}  // namespace

double aotoc_at(const AlgebraRep& alg, const ComplexMatrix& u) {
    require_square(alg, u, "aotoc_at");
    require_unitary(u, "aotoc_at");
    const auto& spec = alg.spec();
    const ComplexMatrix ut = alg.framing().adjoint() * u * alg.framing();

    double total = 0.0;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, d] = spec.sectors()[j];
        const int off = spec.offset(j);
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                // ũ f_γ ũ† with f_γ = |p⟩⟨q| ⊗ 1_d / √n
                const ComplexMatrix y = ut.middleCols(off + p * d, d) * ut.middleCols(off + q * d, d).adjoint();
                total += block::norm2_project_Aprime(spec, y) / n;
            }
        }
    }
    return 1.0 - total / spec.dim();
}

LtaResult lta_exact(const AlgebraRep& alg, const SpectralDecomp& sd, double eps_res) {
    if (sd.dim() != alg.dim()) throw DimensionError("lta_exact: dimension mismatch");
    if (!(eps_res > 0)) throw DimensionError("lta_exact: eps_res must be positive");
    const auto& spec = alg.spec();
    const int d = spec.dim();
    const ComplexMatrix psi = alg.framing().adjoint() * sd.eigenvectors;
    const FrameOperators e = frame_e(spec, psi);
    const FrameOperators f = frame_f(spec, psi);

    // Index pairs sorted by level-energy sum, then chained into resonance classes.
    struct Pair { double sum; int i; int j; };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            pairs.push_back({sd.level_energies(sd.level_of[i]) + sd.level_energies(sd.level_of[j]), i, j});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.sum < b.sum; });

    const double tol = eps_res * sd.spectral_scale;
    Complex t_sum = 0.0;
    long long resonances = 0;
    std::size_t begin = 0;
    while (begin < pairs.size()) {
        std::size_t end = begin + 1;
        while (end < pairs.size() && pairs[end].sum - pairs[end - 1].sum <= tol) ++end;

        std::vector<std::pair<int, int>> levels;
        for (std::size_t a = begin; a < end; ++a) levels.emplace_back(sd.level_of[pairs[a].i], sd.level_of[pairs[a].j]);
        std::sort(levels.begin(), levels.end());
        const auto distinct = std::unique(levels.begin(), levels.end()) - levels.begin();
        resonances += static_cast<long long>(distinct) * distinct;

        for (std::size_t a = begin; a < end; ++a) {
            const int i = pairs[a].i, j = pairs[a].j;
            for (std::size_t b = begin; b < end; ++b) {
                const int ip = pairs[b].i, jp = pairs[b].j;
                // Σ_α ẽ_{i j'} conj(ẽ_{i' j}) · Σ_γ conj(f̃_{i i'}) f̃_{j' j}
                const Complex ee = dot_conj(e.at(i, jp), e.at(ip, j), e.count);
                const Complex ff = dot_conj(f.at(jp, j), f.at(i, ip), f.count);
                t_sum += ee * ff;
            }
        }
        begin = end;
    }

    LtaResult out;
    out.method = LtaMethod::EXACT;
    out.value = 1.0 - real_part_checked(t_sum, "lta_exact") / d;
    out.resonance_count = resonances;
    return out;
}

LtaResult lta_time_average(const AlgebraRep& alg, const ComplexMatrix& h, double t_max, int samples) {
    require_square(alg, h, "lta_time_average");
    if (!(t_max > 0)) throw DimensionError("lta_time_average: t_max must be positive");
    if (samples < 2) throw DimensionError("lta_time_average: need at least two samples");
    const SpectralDecomp sd = eig_hermitian(h);
    double total = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double t = t_max * s / (samples - 1);
        total += aotoc_at(alg, sd.evolution(t));
    }
    LtaResult out;
    out.method = LtaMethod::TIME_AVERAGE;
    out.value = total / samples;
    return out;
}

LtaResult lta_nrc_plus(const AlgebraRep& alg, const SpectralDecomp& sd) {
    if (sd.dim() != alg.dim()) throw DimensionError("lta_nrc_plus: dimension mismatch");
    const auto& spec = alg.spec();
    const int d = spec.dim();
    const ComplexMatrix psi = alg.framing().adjoint() * sd.eigenvectors;
    const auto ops = distinguished_basis_operators(spec);

    // Returns ‖P(D(x))‖² − ½ Σ_k ‖P(Π_k x Π_k)‖² for the projection whose
    // squared norm is `norm2`.
    auto dephased = [&](const ComplexMatrix& x, auto norm2) {
        const ComplexMatrix xt = psi.adjoint() * x * psi;
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        double diag = 0.0;
        for (const auto& group : sd.level_groups) {
            const int first = group.front();
            const int m = static_cast<int>(group.size());
            const auto cols = psi.middleCols(first, m);
            const ComplexMatrix piece = cols * xt.block(first, first, m, m) * cols.adjoint();
            diag += norm2(spec, piece);
            sum += piece;
        }
        return norm2(spec, sum) - 0.5 * diag;
    };

    double total = 0.0;
    for (const auto& f : ops.f) total += dephased(f, block::norm2_project_Aprime);
    for (const auto& e : ops.e) total += dephased(e, block::norm2_project_A);

    LtaResult out;
    out.method = LtaMethod::NRC_PLUS;
    out.value = 1.0 - total / d;
    return out;
}

LtaResult lta_nrc(const AlgebraRep& alg, const ComplexMatrix& eigvecs) {
    require_square(alg, eigvecs, "lta_nrc");
    require_unitary(eigvecs, "lta_nrc");
    const auto& spec = alg.spec();
    const int d = spec.dim();
    const ComplexMatrix psi = alg.framing().adjoint() * eigvecs;

    std::vector<ComplexMatrix> pa(d), pap(d);
    for (int k = 0; k < d; ++k) {
        const ComplexMatrix pk = psi.col(k) * psi.col(k).adjoint();
        pa[k] = block::project_A(spec, pk);
        pap[k] = block::project_Aprime(spec, pk);
    }

    double total = 0.0;
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            const ComplexMatrix kl = psi.col(k) * psi.col(l).adjoint();
            const double r0_a = block::norm2_project_A(spec, kl);
            const double r0_ap = block::norm2_project_Aprime(spec, kl);
            const double r1_a = hs_inner(pa[k], pa[l]).real();
            const double r1_ap = hs_inner(pap[k], pap[l]).real();
            const double c = k == l ? 0.5 : 1.0;
            total += c * (r0_a * r1_ap + r0_ap * r1_a);
        }
    }
    LtaResult out;
    out.method = LtaMethod::NRC;
    out.value = 1.0 - total / d;
    return out;
}

LtaResult lta_nrc(const AlgebraRep& alg, const SpectralDecomp& sd) {
    LtaResult out = lta_nrc(alg, sd.eigenvectors);
    out.basis_dependent = sd.degenerate();
    return out;
}

LtaResult lta_nrc_block_gram(const AlgebraRep& alg, const ComplexMatrix& eigvecs) {
    require_square(alg, eigvecs, "lta_nrc_block_gram");
    require_unitary(eigvecs, "lta_nrc_block_gram");
    const auto& spec = alg.spec();
    const int d = spec.dim();
    const ComplexMatrix psi = alg.framing().adjoint() * eigvecs;

    Eigen::MatrixXd r0_a = Eigen::MatrixXd::Zero(d, d), r0_ap = r0_a, r1_a = r0_a, r1_ap = r0_a;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, dj] = spec.sectors()[j];
        std::vector<ComplexMatrix> m(d), rho_n(d), rho_d(d);
        for (int k = 0; k < d; ++k) {
            m[k] = block::sector_coefficients(spec, j, psi.col(k));
            rho_n[k] = m[k] * m[k].adjoint();  // reduced state on C^{n_J}
            rho_d[k] = m[k].adjoint() * m[k];  // transpose of the reduced state on C^{d_J}
        }
        for (int k = 0; k < d; ++k) {
            for (int l = k; l < d; ++l) {
                const double a_p = (m[k] * m[l].adjoint()).squaredNorm() / dj;
                const double a = (m[k].transpose() * m[l].conjugate()).squaredNorm() / n;
                const double b_p = hs_inner(rho_n[k], rho_n[l]).real() / dj;
                const double b = hs_inner(rho_d[k], rho_d[l]).real() / n;
                r0_ap(k, l) += a_p;
                r0_a(k, l) += a;
                r1_ap(k, l) += b_p;
                r1_a(k, l) += b;
                if (l != k) {
                    r0_ap(l, k) += a_p;
                    r0_a(l, k) += a;
                    r1_ap(l, k) += b_p;
                    r1_a(l, k) += b;
                }
            }
        }
    }
    double total = (r0_a.cwiseProduct(r1_ap) + r0_ap.cwiseProduct(r1_a)).sum();
    total -= 0.5 * (r0_a.diagonal().cwiseProduct(r1_ap.diagonal()) + r0_ap.diagonal().cwiseProduct(r1_a.diagonal())).sum();

    LtaResult out;
    out.method = LtaMethod::NRC;
    out.value = 1.0 - total / d;
    return out;
}

double conjectured_min(const GtpsSpec& spec) {
    int sum_d = 0, sum_n = 0;
    for (const auto& s : spec.sectors()) {
        sum_d += s.d;
        sum_n += s.n;
    }
    return 1.0 - static_cast<double>(sum_d + sum_n - spec.dim_center()) / spec.dim();
}

double gaussian_rate(const AlgebraRep& alg, const ComplexMatrix& h) {
    require_square(alg, h, "gaussian_rate");
    if (!is_hermitian(h)) throw DimensionError("gaussian_rate: h is not Hermitian");
    const ComplexMatrix rest = h - project_A(alg, h) - project_Aprime(alg, h) + project_center(alg, h);
    return rest.norm() / std::sqrt(static_cast<double>(alg.dim()));
}

double gaussian_rate_bipartite(const ComplexMatrix& h, int n, int d) {
    if (n < 1 || d < 1 || h.rows() != n * d || h.cols() != n * d)
        throw DimensionError("gaussian_rate_bipartite: dimension mismatch");
    const int dim = n * d;
    const ComplexMatrix h0 = h - h.trace() / static_cast<double>(dim) * identity(dim);
    const ComplexMatrix tr_n = partial_trace(h0, {n, d}, {1});
    const ComplexMatrix tr_d = partial_trace(h0, {n, d}, {0});
    const ComplexMatrix rest = h0 - kron(identity(n) / static_cast<double>(n), tr_n) -
                               kron(tr_d, identity(d) / static_cast<double>(d));
    return rest.norm() / std::sqrt(static_cast<double>(dim));
}

ShortTimeFit fit_short_time(const std::vector<double>& t, const std::vector<double>& g) {
    if (t.size() != g.size() || t.size() < 2) throw DimensionError("fit_short_time: need two or more samples");
    Eigen::MatrixXd a(t.size(), 2);
    Eigen::VectorXd b(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        a(i, 0) = t[i] * t[i];
        a(i, 1) = t[i] * t[i] * t[i];
        b(i) = g[i];
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    return {x(0), x(1)};
}

}  // namespace aotoc
