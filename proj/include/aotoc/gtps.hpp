// Algebras A ≅ ⊕_J 1_{n_J} ⊗ L(C^{d_J}) described by their sector
// structure plus a unitary framing of the distinguished basis.
//
// The distinguished basis is block ordered: sector J occupies a contiguous
// range of n_J·d_J columns of the framing, and within a sector the index is
// p·d_J + k for the product vector |p_J⟩ ⊗ |k_J⟩.

#pragma once

#include "aotoc/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace aotoc {

struct Sector {
    int n = 1;  // commutant (multiplicity) factor
    int d = 1;  // algebra factor

    int size() const { return n * d; }
    friend bool operator==(const Sector&, const Sector&) = default;
};

class GtpsSpec {
public:
    GtpsSpec() = default;
    explicit GtpsSpec(std::vector<Sector> sectors);

    const std::vector<Sector>& sectors() const { return sectors_; }
    int dim() const { return dim_; }
    int dim_center() const { return static_cast<int>(sectors_.size()); }
    int dim_A() const;
    int dim_Aprime() const;
    int offset(std::size_t sector) const { return offsets_.at(sector); }

    // Sectors sorted by descending n·d, ties by descending n.
    GtpsSpec canonical() const;
    // Permutation p such that canonical().sectors()[i] == sectors()[p[i]].
    std::vector<std::size_t> canonical_order() const;

    std::string to_string() const;

    friend bool operator==(const GtpsSpec& a, const GtpsSpec& b) { return a.sectors_ == b.sectors_; }

private:
    std::vector<Sector> sectors_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

class AlgebraRep {
public:
    // Sectors are reordered canonically, carrying their framing columns along.
    AlgebraRep(const GtpsSpec& spec, ComplexMatrix framing);

    // Framing = identity.
    static AlgebraRep canonical(const GtpsSpec& spec);

    const GtpsSpec& spec() const { return spec_; }
    const ComplexMatrix& framing() const { return framing_; }
    int dim() const { return spec_.dim(); }

private:
    GtpsSpec spec_;
    ComplexMatrix framing_;
};

struct BasisOperators {
    std::vector<ComplexMatrix> e;  // spans A, one per (J, k, l)
    std::vector<ComplexMatrix> f;  // spans A′, one per (J, p, q)
};

// e_α = V(1_{n_J}/√d_J ⊗ |k⟩⟨l|)V†, f_γ = V(|p⟩⟨q| ⊗ 1_{d_J}/√n_J)V†. These
// are the Kraus operators of the projections: Σ_γ f_γ(·)f_γ† = P_A and
// Σ_α e_α(·)e_α† = P_A′.
BasisOperators basis_operators(const AlgebraRep& alg);

// The same operators in the distinguished frame (framing omitted).
BasisOperators distinguished_basis_operators(const GtpsSpec& spec);

// Block-form projections ⊕_J 1/n_J ⊗ Tr_n and ⊕_J Tr_d ⊗ 1/d_J, conjugated by
// the framing.
ComplexMatrix project_A(const AlgebraRep& alg, const ComplexMatrix& x);
ComplexMatrix project_Aprime(const AlgebraRep& alg, const ComplexMatrix& x);
ComplexMatrix project_center(const AlgebraRep& alg, const ComplexMatrix& x);

// Kraus-sum forms of the same projections; independent of the block code.
ComplexMatrix project_A_kraus(const AlgebraRep& alg, const ComplexMatrix& x);
ComplexMatrix project_Aprime_kraus(const AlgebraRep& alg, const ComplexMatrix& x);

// Represents w A w†.
AlgebraRep conjugate(const AlgebraRep& alg, const ComplexMatrix& w);

// Kronecker product of single-qubit Paulis over {I,X,Y,Z}, leftmost factor
// most significant.
ComplexMatrix pauli_string(const std::string& s);

// Group algebra of the stabilizer group generated by Pauli strings on n qubits.
// With m generators this has 2^m sectors of shape (2^{n-m}, 1).
AlgebraRep stabilizer_algebra(const std::vector<std::string>& generators, int n);

// 1_{complement} ⊗ L(C^{2^|subset|}) for a 1-based qubit subset. Qubit 1 is the
// most significant tensor factor.
AlgebraRep spin_subset_algebra(int n, const std::vector<int>& subset);

// Block-level helpers in the distinguished frame, shared by the scrambling code.
namespace block {

// Σ_J ‖Tr_{d_J}(Y_JJ)‖² / d_J = ‖P_A′(Y)‖².
double norm2_project_Aprime(const GtpsSpec& spec, const ComplexMatrix& y);
// Σ_J ‖Tr_{n_J}(Y_JJ)‖² / n_J = ‖P_A(Y)‖².
double norm2_project_A(const GtpsSpec& spec, const ComplexMatrix& y);

ComplexMatrix project_A(const GtpsSpec& spec, const ComplexMatrix& y);
ComplexMatrix project_Aprime(const GtpsSpec& spec, const ComplexMatrix& y);

// Reshapes the sector-J component of a distinguished-frame vector into the
// n_J × d_J coefficient matrix.
ComplexMatrix sector_coefficients(const GtpsSpec& spec, std::size_t sector,
                                  const Eigen::Ref<const ComplexVector>& v);

}  // namespace block

}  // namespace aotoc
