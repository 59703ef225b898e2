// The A-OTOC at a fixed unitary, its long-time average (exact
// resonance sum, NRC⁺ and NRC closed forms, numerical time average) and the
// Gaussian scrambling rate.

#pragma once

#include "aotoc/gtps.hpp"
#include "aotoc/linalg.hpp"

#include <string>
#include <vector>

namespace aotoc {

enum class LtaMethod { EXACT, NRC, NRC_PLUS, TIME_AVERAGE };

std::string to_string(LtaMethod m);

struct LtaResult {
    double value = 0.0;
    LtaMethod method = LtaMethod::EXACT;
    long long resonance_count = 0;  // EXACT only: number of resonant level quadruples
    bool basis_dependent = false;   // NRC evaluated on a degenerate spectrum
};

// G_A(u) = 1 − (1/d) Σ_γ ‖P_A′(u f_γ u†)‖².
double aotoc_at(const AlgebraRep& alg, const ComplexMatrix& u);

// Exact long-time average. Index pairs (i, j) are grouped by E_i + E_j within
// eps_res times the spectral scale; only pairs inside a group interfere.
LtaResult lta_exact(const AlgebraRep& alg, const SpectralDecomp& spec,
                    double eps_res = kDefaultEpsRes);

// Mean of aotoc_at(exp(itH)) over `samples` equally spaced t in [0, t_max].
LtaResult lta_time_average(const AlgebraRep& alg, const ComplexMatrix& h, double t_max, int samples);

// Closed form under non-degenerate gaps, built from the dephasing map over the
// level projectors of `spec`.
LtaResult lta_nrc_plus(const AlgebraRep& alg, const SpectralDecomp& spec);

// Closed form for rank-1 eigenprojectors given by the columns of eigvecs.
LtaResult lta_nrc(const AlgebraRep& alg, const ComplexMatrix& eigvecs);
// Same, flagging basis_dependent when the spectrum has degenerate levels.
LtaResult lta_nrc(const AlgebraRep& alg, const SpectralDecomp& spec);

// lta_nrc through the sector coefficient matrices of each eigenvector; no
// d×d operators are formed per pair.
LtaResult lta_nrc_block_gram(const AlgebraRep& alg, const ComplexMatrix& eigvecs);

// 1 − (Σ_J d_J + Σ_J n_J − d_Z) / d.
double conjectured_min(const GtpsSpec& spec);

// ‖(1 − P_A − P_A′ + P_Z) h‖₂ / √d.
double gaussian_rate(const AlgebraRep& alg, const ComplexMatrix& h);

// Subtraction form for h given in the product basis of C^{n} ⊗ C^{d}:
// ‖h₀ − 1_n/n ⊗ Tr_n h₀ − Tr_d h₀ ⊗ 1_d/d‖₂ / √(nd) with h₀ = h − Tr(h)/(nd).
double gaussian_rate_bipartite(const ComplexMatrix& h, int n, int d);

struct ShortTimeFit {
    double c2 = 0.0;  // coefficient of t²
    double c3 = 0.0;  // coefficient of t³
};

// Least-squares fit of g ≈ c2 t² + c3 t³.
ShortTimeFit fit_short_time(const std::vector<double>& t, const std::vector<double>& g);

}  // namespace aotoc
