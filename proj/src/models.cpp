#include "aotoc/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace aotoc::models {

std::string to_string(ChainModel m) {
    switch (m) {
        case ChainModel::HEISENBERG_RING: return "heisenberg-ring";
        case ChainModel::TFIM_OPEN: return "tfim";
        case ChainModel::XXZ_OPEN: return "xxz";
    }
    return "?";
}

ChainModel parse_model(const std::string& name) {
    if (name == "heisenberg-ring") return ChainModel::HEISENBERG_RING;
    if (name == "tfim") return ChainModel::TFIM_OPEN;
    if (name == "xxz") return ChainModel::XXZ_OPEN;
    throw DimensionError("unknown model '" + name + "'");
}

std::vector<std::string> coupling_keys(ChainModel model) {
    switch (model) {
        case ChainModel::HEISENBERG_RING: return {"h"};
        case ChainModel::TFIM_OPEN: return {"g", "h"};
        case ChainModel::XXZ_OPEN: return {"j", "jx"};
    }
    return {};
}

SpinChainParams default_params(ChainModel model, int n) {
    SpinChainParams p;
    p.n = n;
    p.model = model;
    switch (model) {
        case ChainModel::HEISENBERG_RING: p.couplings = {{"h", 0.0}}; break;
        case ChainModel::TFIM_OPEN: p.couplings = {{"h", -0.5}, {"g", 1.05}}; break;
        case ChainModel::XXZ_OPEN: p.couplings = {{"jx", -0.4}, {"j", -1.0}}; break;
    }
    return p;
}

namespace {

// Pauli string with `a` at qubit i and `b` at qubit j (0-based), identity elsewhere.
ComplexMatrix two_site(int n, int i, char a, int j, char b) {
    std::string s(n, 'I');
    s[i] = a;
    s[j] = b;
    return pauli_string(s);
}

ComplexMatrix one_site(int n, int i, char a) {
    std::string s(n, 'I');
    s[i] = a;
    return pauli_string(s);
}

}  // namespace

ComplexMatrix build_hamiltonian(const SpinChainParams& p) {
    if (p.n < 2 || p.n > 12) throw DimensionError("build_hamiltonian: n must be in [2, 12]");
    auto keys = coupling_keys(p.model);
    std::vector<std::string> given;
    for (const auto& [k, v] : p.couplings) {
        if (!std::isfinite(v)) throw DimensionError("build_hamiltonian: coupling '" + k + "' is not finite");
        given.push_back(k);
    }
    if (given != keys) {
        std::string expected;
        for (const auto& k : keys) expected += (expected.empty() ? "" : ",") + k;
        throw DimensionError("build_hamiltonian: " + to_string(p.model) + " requires couplings {" + expected + "}");
    }

    const int n = p.n;
    const int dim = 1 << n;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    const auto& c = p.couplings;
    switch (p.model) {
        case ChainModel::HEISENBERG_RING:
            for (int i = 0; i < n; ++i) {
                const int k = (i + 1) % n;
                h += c.at("h") * one_site(n, i, 'Z');
                for (char a : {'X', 'Y', 'Z'}) h += two_site(n, i, a, k, a);
            }
            break;
        case ChainModel::TFIM_OPEN:
            for (int i = 0; i < n; ++i) h += c.at("h") * one_site(n, i, 'Z') + c.at("g") * one_site(n, i, 'X');
            for (int i = 0; i + 1 < n; ++i) h -= two_site(n, i, 'Z', i + 1, 'Z');
            break;
        case ChainModel::XXZ_OPEN:
            for (int i = 0; i + 1 < n; ++i) {
                h += c.at("jx") * (two_site(n, i, 'X', i + 1, 'X') + two_site(n, i, 'Y', i + 1, 'Y'));
                h += c.at("j") * two_site(n, i, 'Z', i + 1, 'Z');
            }
            break;
    }
    return h;
}

ComplexMatrix total_z(int n) {
    ComplexMatrix z = ComplexMatrix::Zero(1 << n, 1 << n);
    for (int i = 0; i < n; ++i) z += one_site(n, i, 'Z');
    return z;
}

std::vector<std::string> perfect_code_generators() {
    return {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
}

AlgebraRep perfect_code_algebra() { return stabilizer_algebra(perfect_code_generators(), 5); }

ComplexMatrix code_rotation(double theta) {
    ComplexMatrix r(2, 2);
    // exp(iθσ_y) = cos θ · 1 + i sin θ · σ_y
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    ComplexMatrix w = r;
    for (int q = 1; q < 5; ++q) w = kron(w, r);
    return w;
}

AlgebraRep rotated_code_algebra(double theta) {
    return conjugate(perfect_code_algebra(), code_rotation(theta));
}

QrfConfig QrfConfig::z2() {
    QrfConfig c;
    c.group_order = 2;
    c.system_rep = {pauli_string("I"), pauli_string("X")};
    c.frame_orientations = {0, 0};
    return c;
}

void validate(const QrfConfig& c) {
    const int m = c.group_order;
    if (m < 1) throw DimensionError("QrfConfig: group order must be positive");
    if (static_cast<int>(c.system_rep.size()) != m)
        throw DimensionError("QrfConfig: system representation needs one unitary per group element");
    const auto ds = c.system_rep.front().rows();
    for (const auto& u : c.system_rep)
        if (u.rows() != ds || u.cols() != ds || !is_unitary(u))
            throw DimensionError("QrfConfig: system representation must consist of unitaries of equal size");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if ((c.system_rep[a] * c.system_rep[b] - c.system_rep[(a + b) % m]).norm() > 1e-10)
                throw DimensionError("QrfConfig: system_rep is not a representation of Z_m");
    const auto [g1, g2] = c.frame_orientations;
    if (g1 < 0 || g1 >= m || g2 < 0 || g2 >= m) throw DimensionError("QrfConfig: orientation out of range");
}

namespace {

ComplexMatrix shift(int m, int g) {
    ComplexMatrix s = ComplexMatrix::Zero(m, m);
    for (int h = 0; h < m; ++h) s((h + g) % m, h) = 1.0;
    return s;
}

}  // namespace

ComplexMatrix qrf_physical_projector(const QrfConfig& c) {
    validate(c);
    const int m = c.group_order;
    const int ds = c.system_dim();
    ComplexMatrix pi = ComplexMatrix::Zero(m * m * ds, m * m * ds);
    for (int g = 0; g < m; ++g) pi += kron(kron(shift(m, g), shift(m, g)), c.system_rep[g]);
    return pi / static_cast<double>(m);
}

ComplexMatrix qrf_reduction(const QrfConfig& c, int frame, int g) {
    if (frame != 1 && frame != 2) throw DimensionError("qrf_reduction: frame must be 1 or 2");
    validate(c);
    const int m = c.group_order;
    if (g < 0 || g >= m) throw DimensionError("qrf_reduction: group element out of range");
    const int ds = c.system_dim();

    ComplexMatrix bra = ComplexMatrix::Zero(1, m);
    bra(0, g) = 1.0;
    const ComplexMatrix id_frame = identity(m);
    const ComplexMatrix id_s = identity(ds);
    const ComplexMatrix select = frame == 1 ? kron(kron(bra, id_frame), id_s) : kron(kron(id_frame, bra), id_s);
    const ComplexMatrix r = std::sqrt(static_cast<double>(m)) * select * qrf_physical_projector(c);

    if ((r * r.adjoint() - identity(m * ds)).norm() > 1e-10)
        throw DimensionError("qrf_reduction: physical projector has the wrong rank for this representation");
    return r;
}

ComplexMatrix qrf_frame_change(const QrfConfig& c) {
    const auto [g1, g2] = c.frame_orientations;
    return qrf_reduction(c, 2, g2) * qrf_reduction(c, 1, g1).adjoint();
}

QrfHamiltonians qrf_hamiltonians(const std::array<double, 3>& j) {
    const auto [jx, jy, jz] = j;
    QrfHamiltonians out;
    out.h1 = jz * pauli_string("ZZ") + jx * pauli_string("XX") + jy * pauli_string("YY");
    out.h2 = jz * pauli_string("IZ") + jx * pauli_string("XI") - jy * pauli_string("XZ");
    const ComplexMatrix v = qrf_frame_change(QrfConfig::z2());
    if ((v * out.h1 * v.adjoint() - out.h2).cwiseAbs().maxCoeff() > 1e-12)
        throw NumericalError("qrf_hamiltonians: frame change does not map H_1 to H_2");
    return out;
}

AlgebraRep eta_algebra(int frame, const std::array<double, 3>& eta) {
    if (frame != 1 && frame != 2) throw DimensionError("eta_algebra: frame must be 1 or 2");
    const double norm = std::sqrt(eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2]);
    if (std::abs(norm - 1.0) > 1e-10) throw DimensionError("eta_algebra: eta must be a unit vector");

    const ComplexMatrix sigma = eta[0] * pauli_string("X") + eta[1] * pauli_string("Y") + eta[2] * pauli_string("Z");
    const SpectralDecomp sd = eig_hermitian(sigma);
    const ComplexVector plus = sd.eigenvectors.col(1);
    const ComplexVector minus = sd.eigenvectors.col(0);

    ComplexMatrix framing(4, 4);
    const ComplexMatrix e0 = ComplexMatrix::Identity(2, 2).col(0);
    const ComplexMatrix e1 = ComplexMatrix::Identity(2, 2).col(1);
    framing.col(0) = kron(e0, plus);
    framing.col(1) = kron(e1, plus);
    framing.col(2) = kron(e0, minus);
    framing.col(3) = kron(e1, minus);
    return AlgebraRep(GtpsSpec({Sector{2, 1}, Sector{2, 1}}), framing);
}

AlgebraRep qrf_natural_algebra(int frame) {
    if (frame != 1 && frame != 2) throw DimensionError("qrf_natural_algebra: frame must be 1 or 2");
    const AlgebraRep local = spin_subset_algebra(2, {2});
    if (frame == 1) return local;
    return conjugate(local, qrf_frame_change(QrfConfig::z2()).adjoint());
}

std::vector<std::array<double, 3>> eta_grid(int count) {
    if (count < 1) throw DimensionError("eta_grid: count must be positive");
    std::vector<std::array<double, 3>> grid = {
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    grid.resize(std::min<std::size_t>(grid.size(), count));
    const int rest = count - static_cast<int>(grid.size());
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < rest; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / rest;
        const double r = std::sqrt(1.0 - z * z);
        const double phi = golden * i;
        grid.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return grid;
}

}  // namespace aotoc::models
