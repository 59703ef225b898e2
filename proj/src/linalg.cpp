#include "aotoc/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aotoc {

ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_inner: dimension mismatch");
    }
    return a.conjugate().cwiseProduct(b).sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    if (m.rows() != m.cols()) throw DimensionError("partial_trace: matrix must be square");
    if (dims.empty()) throw DimensionError("partial_trace: empty dims");
    long total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionError("partial_trace: subsystem dimension < 1");
        total *= d;
    }
    if (total != m.rows()) throw DimensionError("partial_trace: dims do not match matrix size");

    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) {
        if (k < 0 || k >= n || kept[k]) throw DimensionError("partial_trace: invalid keep set");
        kept[k] = true;
    }

    long dk = 1;
    for (int s = 0; s < n; ++s) if (kept[s]) dk *= dims[s];

    // Split every composite index into (kept, traced) parts once.
    std::vector<long> kidx(total), tidx(total);
    for (long i = 0; i < total; ++i) {
        long rem = i, kval = 0, tval = 0, kmul = 1, tmul = 1;
        for (int s = n - 1; s >= 0; --s) {
            const long digit = rem % dims[s];
            rem /= dims[s];
            if (kept[s]) { kval += digit * kmul; kmul *= dims[s]; }
            else { tval += digit * tmul; tmul *= dims[s]; }
        }
        kidx[i] = kval;
        tidx[i] = tval;
    }

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (long j = 0; j < total; ++j) {
        for (long i = 0; i < total; ++i) {
            if (tidx[i] == tidx[j]) out(kidx[i], kidx[j]) += m(i, j);
        }
    }
    return out;
}

ComplexMatrix expm(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("expm: matrix must be square");
    return m.exp();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double unitarity_defect(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) return INFINITY;
    return (u.adjoint() * u - identity(u.rows())).norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_defect(u) <= tol; }

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

ComplexMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) z(i, j) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * identity(d);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) z(i, j) = Complex(normal(rng), normal(rng));
    ComplexMatrix h = (z + z.adjoint()) / (2.0 * std::sqrt(static_cast<double>(2 * d)));
    return h;
}

double entropy_bits(const ComplexMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double p = es.eigenvalues()(i);
        if (p > 1e-15) s -= p * std::log2(p);
    }
    return s;
}

std::string to_string(NrcClass c) {
    switch (c) {
        case NrcClass::NRC: return "NRC";
        case NrcClass::NRC_PLUS: return "NRC_PLUS";
        case NrcClass::RESONANT: return "RESONANT";
    }
    return "?";
}

bool SpectralDecomp::degenerate() const {
    return level_groups.size() != static_cast<std::size_t>(dim());
}

ComplexMatrix SpectralDecomp::projector(std::size_t level) const {
    const auto& cols = level_groups.at(level);
    ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
    for (int c : cols) p += eigenvectors.col(c) * eigenvectors.col(c).adjoint();
    return p;
}

ComplexMatrix SpectralDecomp::reconstruct() const {
    ComplexMatrix h = ComplexMatrix::Zero(dim(), dim());
    for (std::size_t k = 0; k < level_groups.size(); ++k) h += level_energies(k) * projector(k);
    return h;
}

ComplexMatrix SpectralDecomp::evolution(double t) const {
    ComplexVector phases(dim());
    for (Eigen::Index i = 0; i < dim(); ++i)
        phases(i) = std::exp(Complex(0.0, t * level_energies(level_of[i])));
    return eigenvectors * phases.asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomp eig_hermitian(const ComplexMatrix& h, double eps_deg, double eps_res) {
    if (h.rows() == 0 || h.cols() == 0) throw DimensionError("eig_hermitian: zero-dimensional input");
    if (!is_hermitian(h)) throw DimensionError("eig_hermitian: input is not Hermitian");
    if (!(eps_deg > 0) || !(eps_res > 0)) throw DimensionError("eig_hermitian: tolerances must be positive");

    const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
    if (es.info() != Eigen::Success) throw NumericalError("eig_hermitian: eigensolver failed");

    SpectralDecomp out;
    out.energies = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    const Eigen::Index d = h.rows();

    for (Eigen::Index j = 0; j < d; ++j) {
        auto col = out.eigenvectors.col(j);
        Eigen::Index best = 0;
        double best_mag = -1.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            const double mag = std::abs(col(i));
            if (mag > best_mag * (1.0 + 1e-12)) { best_mag = mag; best = i; }
        }
        col *= std::conj(col(best)) / best_mag;
        col(best) = Complex(col(best).real(), 0.0);
    }

    const double range = out.energies(d - 1) - out.energies(0);
    const double maxabs = out.energies.cwiseAbs().maxCoeff();
    out.spectral_scale = range > 1e-14 * std::max(1.0, maxabs) ? range : std::max(1.0, maxabs);

    const double deg_tol = eps_deg * out.spectral_scale;
    out.level_of.assign(d, 0);
    out.level_groups.push_back({0});
    for (Eigen::Index i = 1; i < d; ++i) {
        if (out.energies(i) - out.energies(i - 1) > deg_tol) out.level_groups.emplace_back();
        out.level_groups.back().push_back(static_cast<int>(i));
        out.level_of[i] = static_cast<int>(out.level_groups.size() - 1);
    }
    const std::size_t m = out.level_groups.size();
    out.level_energies.resize(static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
        double s = 0.0;
        for (int c : out.level_groups[k]) s += out.energies(c);
        out.level_energies(static_cast<Eigen::Index>(k)) = s / static_cast<double>(out.level_groups[k].size());
    }

    if (m == 1 && d > 1) {
        out.nrc_class = NrcClass::RESONANT;
        return out;
    }
    std::vector<double> gaps;
    gaps.reserve(m * (m - 1) / 2);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < k; ++l)
            gaps.push_back(out.level_energies(static_cast<Eigen::Index>(k)) -
                           out.level_energies(static_cast<Eigen::Index>(l)));
    std::sort(gaps.begin(), gaps.end());
    const double res_tol = eps_res * out.spectral_scale;
    bool collision = false;
    for (std::size_t i = 1; i < gaps.size() && !collision; ++i)
        collision = gaps[i] - gaps[i - 1] <= res_tol;

    if (collision) out.nrc_class = NrcClass::RESONANT;
    else out.nrc_class = out.degenerate() ? NrcClass::NRC_PLUS : NrcClass::NRC;
    return out;
}

}  // namespace aotoc
