// Dense complex linear algebra shared by every module:
// Hilbert-Schmidt products, Kronecker products, partial traces, matrix
// exponentials and tolerance-aware Hermitian spectral decompositions.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aotoc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Raised for shape/contract violations on inputs (usage errors).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a computed quantity fails a numerical consistency check,
// e.g. a non-negligible imaginary residue in a quantity that must be real.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultEpsDeg = 1e-9;
inline constexpr double kDefaultEpsRes = 1e-9;

ComplexMatrix identity(Eigen::Index d);

// Tr(a† b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Frobenius (Hilbert-Schmidt) norm squared.
inline double hs_norm2(const ComplexMatrix& a) { return a.squaredNorm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out every subsystem not listed in `keep`. Subsystem 0 is the most
// significant factor of the Kronecker ordering. The kept factors appear in
// ascending index order in the result.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

ComplexMatrix expm(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

// ‖u†u − I‖₂ (Frobenius).
double unitarity_defect(const ComplexMatrix& u);

// Closest unitary in Frobenius norm (polar factor).
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// diag(R) absorbed into Q.
ComplexMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng);

// Gaussian unitary ensemble sample normalized to unit spectral scale.
ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64& rng);

// Von Neumann entropy in bits of a density matrix; 0·log 0 = 0.
double entropy_bits(const ComplexMatrix& rho);

enum class NrcClass { NRC, NRC_PLUS, RESONANT };

std::string to_string(NrcClass c);

struct SpectralDecomp {
    RealVector energies;               // ascending, one per eigenvector
    ComplexMatrix eigenvectors;        // columns |φ_k⟩
    std::vector<std::vector<int>> level_groups;  // column indices per level
    RealVector level_energies;         // mean energy of each level group
    std::vector<int> level_of;         // column index -> level index
    NrcClass nrc_class = NrcClass::NRC;
    double spectral_scale = 1.0;       // scale the tolerances are relative to

    Eigen::Index dim() const { return eigenvectors.rows(); }
    std::size_t level_count() const { return level_groups.size(); }
    bool degenerate() const;

    // Π_k, the projector onto level group k.
    ComplexMatrix projector(std::size_t level) const;

    // Σ_k E_k Π_k.
    ComplexMatrix reconstruct() const;

    // exp(i t H) built from the decomposition.
    ComplexMatrix evolution(double t) const;
};

// Eigendecomposition of a Hermitian matrix. Levels are grouped when adjacent
// sorted energies differ by at most eps_deg times the spectral range. The NRC
// classification compares all positive level gaps pairwise against eps_res
// times the spectral range. Each eigenvector is phase-fixed so that its
// largest-magnitude component is real and positive.
SpectralDecomp eig_hermitian(const ComplexMatrix& h, double eps_deg = kDefaultEpsDeg,
                             double eps_res = kDefaultEpsRes);

}  // namespace aotoc
