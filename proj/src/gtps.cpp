#include "aotoc/gtps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace aotoc {

GtpsSpec::GtpsSpec(std::vector<Sector> sectors) : sectors_(std::move(sectors)) {
    if (sectors_.empty()) throw DimensionError("GtpsSpec: no sectors");
    offsets_.reserve(sectors_.size());
    for (const auto& s : sectors_) {
        if (s.n < 1 || s.d < 1) throw DimensionError("GtpsSpec: sector factors must be >= 1");
        offsets_.push_back(dim_);
        dim_ += s.size();
    }
}

int GtpsSpec::dim_A() const {
    int total = 0;
    for (const auto& s : sectors_) total += s.d * s.d;
    return total;
}

int GtpsSpec::dim_Aprime() const {
    int total = 0;
    for (const auto& s : sectors_) total += s.n * s.n;
    return total;
}

std::vector<std::size_t> GtpsSpec::canonical_order() const {
    std::vector<std::size_t> order(sectors_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        const auto& x = sectors_[a];
        const auto& y = sectors_[b];
        if (x.size() != y.size()) return x.size() > y.size();
        return x.n > y.n;
    });
    return order;
}

GtpsSpec GtpsSpec::canonical() const {
    std::vector<Sector> sorted;
    for (std::size_t i : canonical_order()) sorted.push_back(sectors_[i]);
    return GtpsSpec(std::move(sorted));
}

std::string GtpsSpec::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < sectors_.size(); ++i) {
        if (i) os << ',';
        os << '(' << sectors_[i].n << ',' << sectors_[i].d << ')';
    }
    os << '}';
    return os.str();
}

AlgebraRep::AlgebraRep(const GtpsSpec& spec, ComplexMatrix framing) {
    if (spec.dim() == 0) throw DimensionError("AlgebraRep: empty spec");
    if (framing.rows() != spec.dim() || framing.cols() != spec.dim())
        throw DimensionError("AlgebraRep: framing dimension does not match spec");
    if (!is_unitary(framing, 1e-8)) throw DimensionError("AlgebraRep: framing is not unitary");

    const auto order = spec.canonical_order();
    spec_ = spec.canonical();
    framing_.resize(framing.rows(), framing.cols());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int width = spec.sectors()[order[i]].size();
        framing_.middleCols(spec_.offset(i), width) = framing.middleCols(spec.offset(order[i]), width);
    }
}

AlgebraRep AlgebraRep::canonical(const GtpsSpec& spec) {
    return AlgebraRep(spec, identity(spec.dim()));
}

BasisOperators distinguished_basis_operators(const GtpsSpec& spec) {
    BasisOperators out;
    const int dim = spec.dim();
    out.e.reserve(spec.dim_A());
    out.f.reserve(spec.dim_Aprime());
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, d] = spec.sectors()[j];
        const int off = spec.offset(j);
        const double ce = 1.0 / std::sqrt(static_cast<double>(d));
        const double cf = 1.0 / std::sqrt(static_cast<double>(n));
        for (int k = 0; k < d; ++k) {
            for (int l = 0; l < d; ++l) {
                ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
                for (int p = 0; p < n; ++p) e(off + p * d + k, off + p * d + l) = ce;
                out.e.push_back(std::move(e));
            }
        }
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                ComplexMatrix f = ComplexMatrix::Zero(dim, dim);
                for (int k = 0; k < d; ++k) f(off + p * d + k, off + q * d + k) = cf;
                out.f.push_back(std::move(f));
            }
        }
    }
    return out;
}

BasisOperators basis_operators(const AlgebraRep& alg) {
    BasisOperators out = distinguished_basis_operators(alg.spec());
    const ComplexMatrix& v = alg.framing();
    for (auto& e : out.e) e = v * e * v.adjoint();
    for (auto& f : out.f) f = v * f * v.adjoint();
    return out;
}

namespace {

void check_square(const AlgebraRep& alg, const ComplexMatrix& x, const char* what) {
    if (x.rows() != alg.dim() || x.cols() != alg.dim())
        throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

namespace block {

namespace {

// Tr_n of the diagonal block of sector j: (k, l) ↦ Σ_p Y(pk, pl).
ComplexMatrix trace_n(const GtpsSpec& spec, std::size_t j, const ComplexMatrix& y) {
    const auto [n, d] = spec.sectors()[j];
    const int off = spec.offset(j);
    ComplexMatrix t = ComplexMatrix::Zero(d, d);
    for (int p = 0; p < n; ++p) t += y.block(off + p * d, off + p * d, d, d);
    return t;
}

// Tr_d of the diagonal block of sector j: (p, q) ↦ Σ_k Y(pk, qk).
ComplexMatrix trace_d(const GtpsSpec& spec, std::size_t j, const ComplexMatrix& y) {
    const auto [n, d] = spec.sectors()[j];
    const int off = spec.offset(j);
    ComplexMatrix s(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            s(p, q) = y.block(off + p * d, off + q * d, d, d).diagonal().sum();
    return s;
}

}  // namespace

double norm2_project_Aprime(const GtpsSpec& spec, const ComplexMatrix& y) {
    double total = 0.0;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j)
        total += trace_d(spec, j, y).squaredNorm() / spec.sectors()[j].d;
    return total;
}

double norm2_project_A(const GtpsSpec& spec, const ComplexMatrix& y) {
    double total = 0.0;
    for (std::size_t j = 0; j < spec.sectors().size(); ++j)
        total += trace_n(spec, j, y).squaredNorm() / spec.sectors()[j].n;
    return total;
}

ComplexMatrix project_A(const GtpsSpec& spec, const ComplexMatrix& y) {
    ComplexMatrix out = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, d] = spec.sectors()[j];
        const int off = spec.offset(j);
        const ComplexMatrix t = trace_n(spec, j, y) / static_cast<double>(n);
        for (int p = 0; p < n; ++p) out.block(off + p * d, off + p * d, d, d) = t;
    }
    return out;
}

ComplexMatrix project_Aprime(const GtpsSpec& spec, const ComplexMatrix& y) {
    ComplexMatrix out = ComplexMatrix::Zero(spec.dim(), spec.dim());
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const auto [n, d] = spec.sectors()[j];
        const int off = spec.offset(j);
        const ComplexMatrix s = trace_d(spec, j, y) / static_cast<double>(d);
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
                out.block(off + p * d, off + q * d, d, d).diagonal().setConstant(s(p, q));
    }
    return out;
}

ComplexMatrix sector_coefficients(const GtpsSpec& spec, std::size_t sector,
                                  const Eigen::Ref<const ComplexVector>& v) {
    const auto [n, d] = spec.sectors().at(sector);
    const int off = spec.offset(sector);
    ComplexMatrix m(n, d);
    for (int p = 0; p < n; ++p)
        for (int k = 0; k < d; ++k) m(p, k) = v(off + p * d + k);
    return m;
}

}  // namespace block

ComplexMatrix project_A(const AlgebraRep& alg, const ComplexMatrix& x) {
    check_square(alg, x, "project_A");
    const ComplexMatrix& v = alg.framing();
    return v * block::project_A(alg.spec(), v.adjoint() * x * v) * v.adjoint();
}

ComplexMatrix project_Aprime(const AlgebraRep& alg, const ComplexMatrix& x) {
    check_square(alg, x, "project_Aprime");
    const ComplexMatrix& v = alg.framing();
    return v * block::project_Aprime(alg.spec(), v.adjoint() * x * v) * v.adjoint();
}

ComplexMatrix project_center(const AlgebraRep& alg, const ComplexMatrix& x) {
    check_square(alg, x, "project_center");
    const ComplexMatrix& v = alg.framing();
    const ComplexMatrix y = v.adjoint() * x * v;
    const auto& spec = alg.spec();
    ComplexMatrix out = ComplexMatrix::Zero(alg.dim(), alg.dim());
    for (std::size_t j = 0; j < spec.sectors().size(); ++j) {
        const int off = spec.offset(j);
        const int w = spec.sectors()[j].size();
        const Complex c = y.block(off, off, w, w).trace() / static_cast<double>(w);
        out.block(off, off, w, w).diagonal().setConstant(c);
    }
    return v * out * v.adjoint();
}

ComplexMatrix project_A_kraus(const AlgebraRep& alg, const ComplexMatrix& x) {
    check_square(alg, x, "project_A_kraus");
    const auto ops = basis_operators(alg);
    ComplexMatrix out = ComplexMatrix::Zero(alg.dim(), alg.dim());
    for (const auto& f : ops.f) out += f * x * f.adjoint();
    return out;
}

ComplexMatrix project_Aprime_kraus(const AlgebraRep& alg, const ComplexMatrix& x) {
    check_square(alg, x, "project_Aprime_kraus");
    const auto ops = basis_operators(alg);
    ComplexMatrix out = ComplexMatrix::Zero(alg.dim(), alg.dim());
    for (const auto& e : ops.e) out += e * x * e.adjoint();
    return out;
}

AlgebraRep conjugate(const AlgebraRep& alg, const ComplexMatrix& w) {
    if (w.rows() != alg.dim() || w.cols() != alg.dim()) throw DimensionError("conjugate: dimension mismatch");
    if (unitarity_defect(w) > 1e-8) throw DimensionError("conjugate: w is not unitary");
    return AlgebraRep(alg.spec(), w * alg.framing());
}

ComplexMatrix pauli_string(const std::string& s) {
    if (s.empty()) throw DimensionError("pauli_string: empty string");
    ComplexMatrix out = ComplexMatrix::Ones(1, 1);
    for (char c : s) {
        ComplexMatrix p(2, 2);
        switch (c) {
            case 'I': p << 1, 0, 0, 1; break;
            case 'X': p << 0, 1, 1, 0; break;
            case 'Y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
            case 'Z': p << 1, 0, 0, -1; break;
            default: throw DimensionError("pauli_string: invalid character '" + std::string(1, c) + "'");
        }
        out = kron(out, p);
    }
    return out;
}

AlgebraRep stabilizer_algebra(const std::vector<std::string>& generators, int n) {
    if (n < 1 || n > 12) throw DimensionError("stabilizer_algebra: qubit count out of range");
    const int m = static_cast<int>(generators.size());
    if (m < 1 || m > n) throw DimensionError("stabilizer_algebra: need between 1 and n generators");
    const int dim = 1 << n;

    std::vector<ComplexMatrix> gens;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != n) throw DimensionError("stabilizer_algebra: generator length != n");
        gens.push_back(pauli_string(g));
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if ((gens[a] * gens[b] - gens[b] * gens[a]).cwiseAbs().maxCoeff() > 1e-12)
                throw DimensionError("stabilizer_algebra: generators " + generators[a] + " and " +
                                     generators[b] + " do not commute");

    const int sector_dim = 1 << (n - m);
    const ComplexMatrix id = identity(dim);
    ComplexMatrix framing(dim, dim);
    int col = 0;
    for (int s = 0; s < (1 << m); ++s) {
        ComplexMatrix proj = id;
        for (int l = 0; l < m; ++l) {
            const double sign = ((s >> (m - 1 - l)) & 1) ? -1.0 : 1.0;
            proj = proj * (id + sign * gens[l]) / 2.0;
        }
        if (std::abs(proj.trace() - static_cast<double>(sector_dim)) > 1e-9)
            throw DimensionError("stabilizer_algebra: generators are not independent");

        // Gram-Schmidt over the projected computational basis, ascending index.
        const int first = col;
        for (int i = 0; i < dim && col - first < sector_dim; ++i) {
            ComplexVector v = proj.col(i);
            for (int c = first; c < col; ++c) v -= framing.col(c).dot(v) * framing.col(c);
            const double nrm = v.norm();
            if (nrm > 1e-8) framing.col(col++) = v / nrm;
        }
        if (col - first != sector_dim) throw NumericalError("stabilizer_algebra: syndrome subspace rank deficit");
    }
    std::vector<Sector> sectors(1u << m, Sector{sector_dim, 1});
    return AlgebraRep(GtpsSpec(std::move(sectors)), framing);
}

AlgebraRep spin_subset_algebra(int n, const std::vector<int>& subset) {
    if (n < 1 || n > 16) throw DimensionError("spin_subset_algebra: qubit count out of range");
    std::vector<bool> in(n, false);
    for (int q : subset) {
        if (q < 1 || q > n) throw DimensionError("spin_subset_algebra: qubit index out of range");
        if (in[q - 1]) throw DimensionError("spin_subset_algebra: repeated qubit index");
        in[q - 1] = true;
    }
    std::vector<int> order;  // complement first, then subset, each ascending
    for (int q = 0; q < n; ++q) if (!in[q]) order.push_back(q);
    for (int q = 0; q < n; ++q) if (in[q]) order.push_back(q);

    const int dim = 1 << n;
    ComplexMatrix framing = ComplexMatrix::Zero(dim, dim);
    for (int idx = 0; idx < dim; ++idx) {
        // Bit b of the distinguished index (MSB first) belongs to qubit order[b].
        int comp = 0;
        for (int b = 0; b < n; ++b) {
            const int bit = (idx >> (n - 1 - b)) & 1;
            comp |= bit << (n - 1 - order[b]);
        }
        framing(comp, idx) = 1.0;
    }
    const int k = static_cast<int>(subset.size());
    return AlgebraRep(GtpsSpec({Sector{1 << (n - k), 1 << k}}), framing);
}

}  // namespace aotoc
