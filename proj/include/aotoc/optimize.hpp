// Enumeration of algebra classes and Riemannian steepest descent
// of the NRC long-time average over the unitary group.

#pragma once

#include "aotoc/gtps.hpp"
#include "aotoc/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace aotoc::optimize {

struct ClassEnumeration {
    int dim = 0;
    std::vector<GtpsSpec> classes;  // empty in counts-only mode
    long long count = 0;
};

// Every multiset {(n_J, d_J)} with Σ n_J d_J = d. Partitions of d are visited
// in reverse-lexicographic order; within a part the factor pairs are ordered by
// n. Throws DimensionError for d < 1, and for d > 64 unless counts_only.
ClassEnumeration enumerate_classes(int d, bool counts_only = false);

// Streams every class to `visit` in enumeration order without storing them.
void for_each_class(int d, const std::function<void(const std::vector<Sector>&)>& visit);

// NRC long-time average of the algebra given by `spec` with identity framing,
// for eigenvectors given by the columns of u.
double nrc_lta_of_unitary(const GtpsSpec& spec, const ComplexMatrix& u);

// Γ_U = ∂f/∂Ū, so that df = 2 Re Tr(Γ_U† dU).
ComplexMatrix euclidean_gradient(const GtpsSpec& spec, const ComplexMatrix& u);

// G_U = Γ_U U† − U Γ_U†; for skew-Hermitian X, d/dε f(exp(εX) U)|₀ = Re Tr(G_U X†).
ComplexMatrix riemannian_gradient(const GtpsSpec& spec, const ComplexMatrix& u);

struct DescentOptions {
    double eps = 1e-8;        // stop when |Δf| < eps
    int max_iter = 10000;
    double initial_step = 0.1;
    double min_step = 1e-12;
};

struct DescentState {
    ComplexMatrix u;
    double value = 0.0;
    double grad_norm = 0.0;   // ‖G_U‖₂
    double step = 0.0;        // current μ
    int iterations = 0;
    bool converged = false;
    std::vector<double> trace;  // value after every accepted step, starting with f(u0)
};

DescentState descend(const GtpsSpec& spec, const ComplexMatrix& u0, const DescentOptions& opt = {});

struct ClassResult {
    GtpsSpec spec;
    double best_value = 0.0;
    double conjectured_min = 0.0;
    double gap = 0.0;
    bool converged = false;
};

struct ConjectureReport {
    int dim = 0;
    std::vector<ClassResult> classes;
    int violations = 0;  // classes with best_value < conjectured_min − 1e-6
};

inline constexpr double kViolationThreshold = 1e-6;

// Descends from `restarts` Haar-random starts per class of enumerate_classes(d).
// Starts for class i are drawn from a generator seeded by (seed, i), so results
// do not depend on `threads`.
ConjectureReport conjecture_suite(int d, int restarts, double eps, std::uint64_t seed = 0,
                                  int threads = 1, int max_iter = 10000);

}  // namespace aotoc::optimize
