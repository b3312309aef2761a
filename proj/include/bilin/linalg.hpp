#pragma once

#include "bilin/gf.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bilin {

using Vector = std::vector<Element>;

/// Hamming weight: number of nonzero coordinates.
int weight(std::span<const Element> v) noexcept;
/// Support as a bitmask over coordinates (n <= 64).
std::uint64_t supportMask(std::span<const Element> v) noexcept;

/// Dense row-major matrix over F_q.
class MatrixGF {
public:
    MatrixGF(FieldSpec field, std::size_t rows, std::size_t cols);
    /// Rows given as element indices; all rows must have the same length.
    MatrixGF(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols);

    static MatrixGF identity(FieldSpec field, std::size_t n);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    const std::vector<Element>& data() const noexcept { return data_; }

    void appendRow(std::span<const Element> v);
    MatrixGF transpose() const;

    bool operator==(const MatrixGF& other) const noexcept {
        return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

/// Matrix product; throws DimensionMismatch.
MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);

/// Row vector times matrix.
Vector rowTimes(std::span<const Element> v, const MatrixGF& m);

/// Unique reduced row-echelon form of m with zero rows removed.
MatrixGF rref(const MatrixGF& m);
/// Reduces m in place to RREF (zero rows kept at the bottom); returns the rank.
std::size_t rrefInPlace(MatrixGF& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(MatrixGF m);
Element determinant(MatrixGF m);

/// Coefficients x with x * basis = v, or empty if v is not in the row space.
/// basis must have linearly independent rows.
std::vector<Element> solveRow(const MatrixGF& basis, std::span<const Element> v, bool& solvable);

/// A subspace of F_q^n, stored by its canonical RREF basis.
class Subspace {
public:
    /// Row space of generators.
    static Subspace span(const MatrixGF& generators);
    static Subspace zero(FieldSpec field, std::size_t n);
    static Subspace full(FieldSpec field, std::size_t n);

    const FieldSpec& field() const noexcept { return basis_.field(); }
    std::size_t ambientDim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const MatrixGF& basis() const noexcept { return basis_; }

    bool containsVector(std::span<const Element> v) const;

    bool operator==(const Subspace& other) const noexcept { return basis_ == other.basis_; }

    /// Stable textual key of the canonical basis, usable for hashing.
    std::string key() const;

private:
    explicit Subspace(MatrixGF canonicalBasis) : basis_(std::move(canonicalBasis)) {}
    MatrixGF basis_;
};

/// {v : M v^T = 0}.
Subspace kernel(const MatrixGF& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// True iff b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);

inline constexpr std::uint64_t kDefaultSubspaceBudget = 100'000'000;

/// Sorted pivot sets of size k in {0..n-1}, in lexicographic order.
std::vector<std::vector<int>> pivotSets(int n, int k);

/// Number of k-subspaces of F_q^n whose RREF basis has these pivots: q^(free entries).
std::uint64_t shapeCount(std::uint32_t q, int n, std::span<const int> pivots);

/// Total number of k-subspaces, computed by summing shape counts.
/// Saturates at UINT64_MAX.
std::uint64_t subspaceCount(std::uint32_t q, int n, int k);

/// Throws BudgetExceeded when the k-subspaces of F_q^n exceed the budget.
void checkBudget(std::uint32_t q, int n, int k, std::uint64_t budget);

/// Visits every RREF basis with the given pivot set. The free entries are run
/// through as an odometer whose last free entry moves fastest. The visitor
/// receives the same matrix object each time, modified in place.
template <class Visitor>
void forEachWithPivots(const FieldSpec& field, int n, std::span<const int> pivots, Visitor&& visit) {
    const int k = static_cast<int>(pivots.size());
    MatrixGF basis(field, k, n);
    std::vector<std::pair<int, int>> freeCells;
    std::vector<bool> isPivot(n, false);
    for (int c : pivots) isPivot[c] = true;
    for (int r = 0; r < k; ++r) {
        basis(r, pivots[r]) = 1;
        for (int c = pivots[r] + 1; c < n; ++c) {
            if (!isPivot[c]) freeCells.emplace_back(r, c);
        }
    }
    const Element q1 = static_cast<Element>(field.q() - 1);
    while (true) {
        visit(static_cast<const MatrixGF&>(basis));
        int i = static_cast<int>(freeCells.size()) - 1;
        while (i >= 0) {
            Element& cell = basis(freeCells[i].first, freeCells[i].second);
            if (cell < q1) {
                ++cell;
                break;
            }
            cell = 0;
            --i;
        }
        if (i < 0) return;
    }
}

/// Visits every k-dimensional subspace of F_q^n exactly once, by RREF basis,
/// pivot sets in lexicographic order. Throws BudgetExceeded up front.
template <class Visitor>
void forEachSubspace(const FieldSpec& field, int n, int k, Visitor&& visit,
                     std::uint64_t budget = kDefaultSubspaceBudget) {
    checkBudget(field.q(), n, k, budget);
    for (const auto& pivots : pivotSets(n, k)) forEachWithPivots(field, n, pivots, visit);
}

/// Materialized enumeration, for small cases.
std::vector<Subspace> enumerateSubspaces(const FieldSpec& field, int n, int k,
                                         std::uint64_t budget = kDefaultSubspaceBudget);

}  // namespace bilin
