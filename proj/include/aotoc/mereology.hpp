// Experiment drivers over families of algebras: θ-sweeps of
// the rotated perfect-code algebra and searches over qubit bipartitions.

#pragma once

#include "aotoc/gtps.hpp"
#include "aotoc/linalg.hpp"
#include "aotoc/models.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace aotoc::mereology {

struct SweepRecord {
    std::string label;              // subset label such as "{1,2,3}", or empty
    std::optional<double> param;    // numeric parameter (θ, η index, ...)
    std::optional<double> lta_exact;
    std::optional<double> lta_nrc;
    std::optional<double> lta_nrc_plus;
    std::optional<double> gaussian_rate;
    std::optional<double> mutual_info;
    std::vector<int> subset;        // bipartition sweeps only, 1-based
    std::optional<std::array<double, 3>> eta;  // reference-frame sweeps only
};

// Throws NumericalError if a populated metric is not finite, DimensionError if
// none is populated.
void validate(const SweepRecord& r);

struct Tolerances {
    double eps_deg = kDefaultEpsDeg;
    double eps_res = kDefaultEpsRes;
};

// `steps` equally spaced points on [0, π/4], endpoints included.
std::vector<double> theta_grid(int steps);

// Exact, NRC⁺ and NRC long-time averages of the rotated perfect-code algebra
// under the five-qubit Heisenberg ring with field h_field.
std::vector<SweepRecord> theta_sweep(double h_field, const std::vector<double>& thetas,
                                     const Tolerances& tol = {}, int threads = 1);

// All subsets of {1..n} of size `half` containing qubit 1, in lexicographic order.
std::vector<std::vector<int>> bipartition_subsets(int n, int half);

std::string subset_label(const std::vector<int>& subset);

// For each subset: the NRC long-time average when the spectrum is NRC (NRC⁺
// otherwise), the average eigenstate mutual information and the Gaussian rate.
std::vector<SweepRecord> bipartition_sweep(const models::SpinChainParams& p, int half,
                                           const Tolerances& tol = {}, int threads = 1);

// (1/M) Σ_k I(Π_k / Tr Π_k) across the bipartition of a single-sector algebra, in bits.
double avg_eigenstate_mutual_info(const SpectralDecomp& spec, const AlgebraRep& alg);

// Indices whose value lies within tol of the minimum.
std::vector<std::size_t> argmin_set(const std::vector<double>& values, double tol);

// Spearman rank correlation; values within tie_tol share their average rank.
double spearman(const std::vector<double>& x, const std::vector<double>& y, double tie_tol = 1e-9);

}  // namespace aotoc::mereology
