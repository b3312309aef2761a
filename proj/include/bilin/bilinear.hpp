#pragma once

#include "bilin/linalg.hpp"
#include "bilin/types.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace bilin {

/// A finite bilinear space (F_q^n, B) given by a symmetric nonsingular Gram
/// matrix. Type and Witt index are classified once at construction.
class BilinearSpace {
public:
    const FieldSpec& field() const noexcept { return gram_.field(); }
    int n() const noexcept { return static_cast<int>(gram_.rows()); }
    const MatrixGF& gram() const noexcept { return gram_; }
    TypeTag type() const noexcept { return type_; }
    int witt() const noexcept { return witt_; }

    /// B(u, v) = u G v^T.
    Element form(std::span<const Element> u, std::span<const Element> v) const;

    /// {v : B(v,v) = 0}; a hyperplane for even q and a non-alternating form,
    /// the whole space for an alternating form. Built on first use.
    /// Throws PreconditionViolated for odd q.
    const Subspace& isotropicHyperplane() const;

    friend BilinearSpace spaceFromGram(const FieldSpec& field, const MatrixGF& gram);

private:
    struct Lazy;
    BilinearSpace(MatrixGF gram, TypeTag type, int witt);

    MatrixGF gram_;
    TypeTag type_;
    int witt_;
    std::shared_ptr<Lazy> lazy_;
};

/// Validates symmetry and nonsingularity (NotSymmetric, Degenerate) and
/// classifies the space. A 0x0 Gram matrix gives the zero space.
BilinearSpace spaceFromGram(const FieldSpec& field, const MatrixGF& gram);

/// F_q^n with the identity Gram matrix.
BilinearSpace standardDotSpace(const FieldSpec& field, int n);

/// Block-diagonal Gram of n/2 copies of [[0,1],[1,0]]; alternating for even q.
BilinearSpace alternatingBlockSpace(const FieldSpec& field, int n);

bool isAlternating(const BilinearSpace& s) noexcept;
bool discriminantIsSquare(const BilinearSpace& s);
/// Witt index from the type case analysis: (n-1)/2 for odd n, n/2 for even q,
/// and n/2 or n/2-1 for odd q depending on whether (-1)^(n/2) disc is a square.
int wittIndexFormula(const BilinearSpace& s);

Subspace orthogonal(const BilinearSpace& s, const Subspace& c);
Subspace radical(const BilinearSpace& s, const Subspace& c);
/// dim(C ∩ C^⊥).
int complIndex(const BilinearSpace& s, const Subspace& c);
bool isSelfOrthogonal(const BilinearSpace& s, const Subspace& c);
bool isLCD(const BilinearSpace& s, const Subspace& c);

/// The quotient (U^⊥/U, B_U) for a self-orthogonal U.
///
/// Coset representatives are the rows of the RREF basis of U^⊥ picked greedily
/// (top to bottom) whenever they are independent of U and the rows already picked.
struct QuotientSpace {
    BilinearSpace space;
    Subspace u;
    Subspace uPerp;
    MatrixGF representatives;  // (n - 2t) x n

    /// Representative in V of a vector given in quotient coordinates.
    Vector lift(std::span<const Element> coords) const;
    /// The subspace U + lift(C~) of V, of dimension t + dim(C~).
    Subspace liftSubspace(const Subspace& quotientSub) const;
    /// Image in the quotient of a subspace C with U <= C <= U^⊥.
    /// Throws PreconditionViolated otherwise.
    Subspace project(const Subspace& c) const;
};

/// Throws NotSelfOrthogonal.
QuotientSpace quotientSpace(const BilinearSpace& s, const Subspace& u);

/// For the dot product with q and n even: B_U is alternating iff the all-one
/// vector lies in U. Throws PreconditionViolated for odd q or odd n.
bool inducedAlternatingDot(const BilinearSpace& s, const Subspace& u);

Vector allOneVector(int n);

/// Parses {"q": int, "gram": [[int,...],...]}; entries are element indices.
BilinearSpace spaceFromJson(std::string_view text);
/// Same document, but q is supplied by the caller when the key is absent.
BilinearSpace spaceFromJson(std::string_view text, std::uint32_t defaultQ);

/// {"q": q, "<key>": [[...], ...]}.
std::string matrixToJson(const MatrixGF& m, std::string_view key = "gram");

}  // namespace bilin
