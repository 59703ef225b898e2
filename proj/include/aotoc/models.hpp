// Hamiltonians and physical configurations: spin chains, the
// five-qubit perfect code, and cyclic-group ideal quantum reference frames.

#pragma once

#include "aotoc/gtps.hpp"
#include "aotoc/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace aotoc::models {

using aotoc::pauli_string;

enum class ChainModel { HEISENBERG_RING, TFIM_OPEN, XXZ_OPEN };

std::string to_string(ChainModel m);
// Accepts "heisenberg-ring", "tfim", "xxz".
ChainModel parse_model(const std::string& name);

struct SpinChainParams {
    int n = 2;
    ChainModel model = ChainModel::HEISENBERG_RING;
    std::map<std::string, double> couplings;
};

// Couplings used throughout: heisenberg-ring {h=0}, tfim {h=-0.5, g=1.05},
// xxz {jx=-0.4, j=-1}.
SpinChainParams default_params(ChainModel model, int n);

// Required coupling keys per model.
std::vector<std::string> coupling_keys(ChainModel model);

// Qubit 1 is the most significant tensor factor.
//   heisenberg-ring: Σ_i (h Z_i + X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}), i+1 mod n
//   tfim:            Σ_i (h Z_i + g X_i) − Σ_{i<n} Z_i Z_{i+1}
//   xxz:             Σ_{i<n} (jx (X_i X_{i+1} + Y_i Y_{i+1}) + j Z_i Z_{i+1})
ComplexMatrix build_hamiltonian(const SpinChainParams& p);

// Σ_i Z_i on n qubits.
ComplexMatrix total_z(int n);

// XZZXI and its cyclic shifts (four independent generators).
std::vector<std::string> perfect_code_generators();
AlgebraRep perfect_code_algebra();

// exp(iθσ_y) on each of the five qubits.
ComplexMatrix code_rotation(double theta);
// W(θ) A W(θ)† for the perfect-code algebra A.
AlgebraRep rotated_code_algebra(double theta);

struct QrfConfig {
    int group_order = 2;                     // Z_m
    std::vector<ComplexMatrix> system_rep;   // U_S^g, g = 0..m-1
    std::pair<int, int> frame_orientations{0, 0};

    int system_dim() const { return static_cast<int>(system_rep.front().rows()); }

    // Z_2 with U_S = {1, σ_x}, orientations (e, e).
    static QrfConfig z2();
};

void validate(const QrfConfig& config);

// Π_phys = (1/m) Σ_g U_1^g ⊗ U_2^g ⊗ U_S^g on the ordering (frame 1, frame 2, S),
// with the regular representation |h⟩ ↦ |h+g⟩ on each frame.
ComplexMatrix qrf_physical_projector(const QrfConfig& config);

// R_i^g = √m (⟨g|_i ⊗ 1) Π_phys, an (m·d_S) × (m²·d_S) co-isometry onto the
// perspective of frame i (remaining frame ⊗ S).
ComplexMatrix qrf_reduction(const QrfConfig& config, int frame, int g);

// V_{1→2} = R_2^{g₂} (R_1^{g₁})†, from frame-1 to frame-2 perspective.
ComplexMatrix qrf_frame_change(const QrfConfig& config);

struct QrfHamiltonians {
    ComplexMatrix h1;  // J_z ZZ + J_x XX + J_y YY in frame 1
    ComplexMatrix h2;  // J_z 1Z + J_x X1 − J_y XZ in frame 2
};

inline constexpr std::array<double, 3> kDefaultQrfCouplings{0.3, 0.7, 1.0};  // (J_x, J_y, J_z)

// Throws NumericalError if h2 differs from V h1 V† by more than 1e-12.
QrfHamiltonians qrf_hamiltonians(const std::array<double, 3>& j = kDefaultQrfCouplings);

// The abelian algebra generated by 1 ⊗ η·σ on (frame qubit, system qubit).
AlgebraRep eta_algebra(int frame, const std::array<double, 3>& eta);

// 1 ⊗ L(C²_S) as seen from frame `frame`, expressed in frame-1 coordinates.
AlgebraRep qrf_natural_algebra(int frame);

// The six coordinate axes followed by Fibonacci-sphere points, `count` in total.
std::vector<std::array<double, 3>> eta_grid(int count);

}  // namespace aotoc::models
