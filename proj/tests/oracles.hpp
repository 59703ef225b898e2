// Independent reference computations used by the tests. Nothing here calls
// into the block-form code paths it is compared against.

#pragma once

#include "aotoc/gtps.hpp"
#include "aotoc/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace aotoc::oracle {

inline ComplexMatrix random_matrix(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

inline ComplexMatrix random_skew(Eigen::Index d, std::mt19937_64& rng) {
    const ComplexMatrix m = random_matrix(d, d, rng);
    return ComplexMatrix((m - m.adjoint()) / 2.0);
}

inline ComplexMatrix random_density(Eigen::Index d, std::mt19937_64& rng) {
    const ComplexMatrix m = random_matrix(d, d, rng);
    ComplexMatrix rho = m * m.adjoint();
    return rho / rho.trace().real();
}

// Kronecker product from the entry formula (a⊗b)[i·rb + k][j·cb + l] = a_ij b_kl.
inline ComplexMatrix kron_entries(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Partial trace by explicit summation over every multi-index.
inline ComplexMatrix partial_trace_brute(const ComplexMatrix& m, const std::vector<int>& dims,
                                         const std::vector<int>& keep) {
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) kept[k] = true;
    int dk = 1;
    for (int i = 0; i < n; ++i)
        if (kept[i]) dk *= dims[i];
    const int total = static_cast<int>(m.rows());
    auto digits = [&](int idx) {
        std::vector<int> dg(n);
        for (int i = n - 1; i >= 0; --i) {
            dg[i] = idx % dims[i];
            idx /= dims[i];
        }
        return dg;
    };
    auto kept_index = [&](const std::vector<int>& dg) {
        int r = 0;
        for (int i = 0; i < n; ++i)
            if (kept[i]) r = r * dims[i] + dg[i];
        return r;
    };
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (int a = 0; a < total; ++a) {
        const auto da = digits(a);
        for (int b = 0; b < total; ++b) {
            const auto db = digits(b);
            bool traced_equal = true;
            for (int i = 0; i < n && traced_equal; ++i)
                if (!kept[i] && da[i] != db[i]) traced_equal = false;
            if (traced_equal) out(kept_index(da), kept_index(db)) += m(a, b);
        }
    }
    return out;
}

// e and f operators assembled from the sector structure and framing columns.
struct KrausBasis {
    std::vector<ComplexMatrix> e;
    std::vector<ComplexMatrix> f;
};

inline KrausBasis kraus_basis(const AlgebraRep& alg) {
    const auto& spec = alg.spec();
    const ComplexMatrix& v = alg.framing();
    const int d = spec.dim();
    KrausBasis out;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [nj, dj] = spec.sectors()[j];
        const int off = spec.offset(j);
        auto col = [&](int p, int k) { return v.col(off + p * dj + k); };
        for (int k = 0; k < dj; ++k)
            for (int l = 0; l < dj; ++l) {
                ComplexMatrix e = ComplexMatrix::Zero(d, d);
                for (int p = 0; p < nj; ++p) e += col(p, k) * col(p, l).adjoint();
                out.e.push_back(e / std::sqrt(double(dj)));
            }
        for (int p = 0; p < nj; ++p)
            for (int q = 0; q < nj; ++q) {
                ComplexMatrix f = ComplexMatrix::Zero(d, d);
                for (int k = 0; k < dj; ++k) f += col(p, k) * col(q, k).adjoint();
                out.f.push_back(f / std::sqrt(double(nj)));
            }
    }
    return out;
}

inline ComplexMatrix kraus_apply(const std::vector<ComplexMatrix>& ops, const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    for (const auto& k : ops) out += k * x * k.adjoint();
    return out;
}

// 1 − (1/d) Σ_{α,γ} Re Tr(e_α u f_γ u† e_α† u f_γ† u†).
inline double aotoc_basis_sum(const AlgebraRep& alg, const ComplexMatrix& u) {
    const KrausBasis b = kraus_basis(alg);
    double s = 0.0;
    for (const auto& f : b.f) {
        const ComplexMatrix ft = u * f * u.adjoint();
        for (const auto& e : b.e) s += (e * ft * e.adjoint() * ft.adjoint()).trace().real();
    }
    return 1.0 - s / alg.dim();
}

// Haar unitaries of A and A′: V(⊕_J 1 ⊗ W_J)V† and V(⊕_J W_J ⊗ 1)V†.
inline ComplexMatrix haar_in_algebra(const AlgebraRep& alg, bool commutant, std::mt19937_64& rng) {
    const auto& spec = alg.spec();
    ComplexMatrix blk = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [nj, dj] = spec.sectors()[j];
        const int off = spec.offset(j);
        const ComplexMatrix w = commutant ? kron(haar_unitary(nj, rng), identity(dj))
                                          : kron(identity(nj), haar_unitary(dj, rng));
        blk.block(off, off, nj * dj, nj * dj) = w;
    }
    return alg.framing() * blk * alg.framing().adjoint();
}

// Monte-Carlo estimate of (1/2d) E ‖[X, u Y u†]‖₂² over Haar X ∈ A, Y ∈ A′.
inline double aotoc_monte_carlo(const AlgebraRep& alg, const ComplexMatrix& u, int samples,
                                std::mt19937_64& rng) {
    double acc = 0.0;
    for (int s = 0; s < samples; ++s) {
        const ComplexMatrix x = haar_in_algebra(alg, false, rng);
        const ComplexMatrix y = u * haar_in_algebra(alg, true, rng) * u.adjoint();
        acc += (x * y - y * x).squaredNorm();
    }
    return acc / samples / (2.0 * alg.dim());
}

// Exact long-time average by a direct O(M⁴) scan over level quadruples with
// E_k + E_l = E_m + E_n.
inline double lta_quadruple_scan(const AlgebraRep& alg, const SpectralDecomp& sd, double tol) {
    const KrausBasis b = kraus_basis(alg);
    const std::size_t m = sd.level_count();
    std::vector<ComplexMatrix> proj;
    for (std::size_t k = 0; k < m; ++k) proj.push_back(sd.projector(k));
    const RealVector& e = sd.level_energies;
    double s = 0.0;
    for (const auto& f : b.f)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t mm = 0; mm < m; ++mm) {
                const ComplexMatrix a = kraus_apply(b.e, proj[k] * f * proj[mm]);
                for (std::size_t l = 0; l < m; ++l)
                    for (std::size_t n = 0; n < m; ++n) {
                        if (std::abs(e(k) + e(l) - e(mm) - e(n)) > tol) continue;
                        const ComplexMatrix c = kraus_apply(b.e, proj[n] * f * proj[l]);
                        s += (a.adjoint() * c).trace().real();
                    }
            }
    return 1.0 - s / alg.dim();
}

// Number of multisets of pairs (n, d) with Σ n·d = D, from the generating
// function Π_m (1 − x^m)^{−τ(m)}, τ the divisor count.
inline std::vector<std::uint64_t> class_counts(int max_d) {
    std::vector<std::uint64_t> c(max_d + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= max_d; ++m) {
        int tau = 0;
        for (int q = 1; q <= m; ++q)
            if (m % q == 0) ++tau;
        // Multiply by (1 − x^m)^{−1} once per divisor.
        for (int t = 0; t < tau; ++t)
            for (int s = m; s <= max_d; ++s) c[s] += c[s - m];
    }
    return c;
}

inline double central_difference(const std::function<double(double)>& f, double h) {
    return (f(h) - f(-h)) / (2 * h);
}

// Schmidt rank of a vector on C^{a} ⊗ C^{b}.
inline int schmidt_rank(const ComplexVector& v, int a, int b, double tol = 1e-8) {
    ComplexMatrix m(a, b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) m(i, j) = v(i * b + j);
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++r;
    return r;
}

}  // namespace aotoc::oracle
