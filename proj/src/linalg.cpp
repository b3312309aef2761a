#include "bilin/linalg.hpp"

#include "bilin/error.hpp"

#include <limits>
#include <utility>

namespace bilin {

int weight(std::span<const Element> v) noexcept {
    int w = 0;
    for (Element x : v) w += (x != 0);
    return w;
}

std::uint64_t supportMask(std::span<const Element> v) noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) mask |= std::uint64_t(1) << i;
    }
    return mask;
}

MatrixGF::MatrixGF(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF::MatrixGF(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (Element x : r) {
            if (x >= field_.q()) throw Error(ErrorCode::OutOfRange, "entry outside the field");
            data_.push_back(x);
        }
    }
}

MatrixGF MatrixGF::identity(FieldSpec field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void MatrixGF::appendRow(std::span<const Element> v) {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
    const FieldSpec& f = a.field();
    MatrixGF out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Element x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    }
    return out;
}

Vector rowTimes(std::span<const Element> v, const MatrixGF& m) {
    if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product");
    const FieldSpec& f = m.field();
    Vector out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
    }
    return out;
}

std::size_t rrefInPlace(MatrixGF& m, std::vector<std::size_t>* pivots) {
    const FieldSpec& f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
        }
        const Element scale = f.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), scale);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Element factor = f.neg(m(i, c));
            for (std::size_t j = c; j < cols; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

MatrixGF rref(const MatrixGF& m) {
    MatrixGF work = m;
    const std::size_t r = rrefInPlace(work);
    MatrixGF out(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = work(i, j);
    }
    return out;
}

std::size_t rank(MatrixGF m) { return rrefInPlace(m); }

Element determinant(MatrixGF m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const FieldSpec& f = m.field();
    const std::size_t n = m.rows();
    Element det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m(sel, c) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Element pivotInv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Element factor = f.neg(f.mul(m(i, c), pivotInv));
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

std::vector<Element> solveRow(const MatrixGF& basis, std::span<const Element> v, bool& solvable) {
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "solveRow length");
    MatrixGF aug(basis.field(), n, k + 1);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < k; ++i) aug(c, i) = basis(i, c);
        aug(c, k) = v[c];
    }
    std::vector<std::size_t> pivots;
    rrefInPlace(aug, &pivots);
    solvable = pivots.empty() || pivots.back() != k;
    std::vector<Element> x(k, 0);
    if (!solvable) return {};
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, k);
    return x;
}

Subspace Subspace::span(const MatrixGF& generators) { return Subspace(rref(generators)); }

Subspace Subspace::zero(FieldSpec field, std::size_t n) { return Subspace(MatrixGF(std::move(field), 0, n)); }

Subspace Subspace::full(FieldSpec field, std::size_t n) { return Subspace(MatrixGF::identity(std::move(field), n)); }

bool Subspace::containsVector(std::span<const Element> v) const {
    MatrixGF stacked = basis_;
    stacked.appendRow(v);
    return rank(std::move(stacked)) == dim();
}

std::string Subspace::key() const {
    std::string out = std::to_string(ambientDim()) + ":";
    for (std::size_t r = 0; r < dim(); ++r) {
        if (r) out += '|';
        for (std::size_t c = 0; c < ambientDim(); ++c) {
            if (c) out += ',';
            out += std::to_string(basis_(r, c));
        }
    }
    return out;
}

Subspace kernel(const MatrixGF& m) {
    const FieldSpec& f = m.field();
    MatrixGF r = m;
    std::vector<std::size_t> pivots;
    rrefInPlace(r, &pivots);
    const std::size_t n = m.cols();
    std::vector<bool> isPivot(n, false);
    for (auto c : pivots) isPivot[c] = true;
    MatrixGF gens(f, 0, n);
    Vector v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (isPivot[free]) continue;
        std::fill(v.begin(), v.end(), Element{0});
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
        gens.appendRow(v);
    }
    return Subspace::span(gens);
}

namespace {

void requireCompatible(const Subspace& a, const Subspace& b) {
    if (!(a.field() == b.field()) || a.ambientDim() != b.ambientDim()) {
        throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
    }
}

MatrixGF stack(const MatrixGF& a, const MatrixGF& b) {
    MatrixGF out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.appendRow(b.row(r));
    return out;
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    requireCompatible(a, b);
    return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    requireCompatible(a, b);
    // A ∩ B is the annihilator of ann(A) + ann(B) under the standard pairing.
    const Subspace annA = kernel(a.basis());
    const Subspace annB = kernel(b.basis());
    return kernel(stack(annA.basis(), annB.basis()));
}

bool contains(const Subspace& a, const Subspace& b) {
    requireCompatible(a, b);
    return rank(stack(a.basis(), b.basis())) == a.dim();
}

std::vector<std::vector<int>> pivotSets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::uint64_t shapeCount(std::uint32_t q, int n, std::span<const int> pivots) {
    const int k = static_cast<int>(pivots.size());
    int free = 0;
    for (int r = 0; r < k; ++r) free += (n - 1 - pivots[r]) - (k - 1 - r);
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        count *= q;
    }
    return count;
}

std::uint64_t subspaceCount(std::uint32_t q, int n, int k) {
    std::uint64_t total = 0;
    for (const auto& pivots : pivotSets(n, k)) {
        const std::uint64_t c = shapeCount(q, n, pivots);
        if (c > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
        total += c;
    }
    return total;
}

void checkBudget(std::uint32_t q, int n, int k, std::uint64_t budget) {
    const std::uint64_t count = subspaceCount(q, n, k);
    if (count > budget) {
        throw Error(ErrorCode::BudgetExceeded, "enumerating " + std::to_string(k) + "-subspaces of F_" +
                                                   std::to_string(q) + "^" + std::to_string(n) + " needs " +
                                                   std::to_string(count) + " > budget " + std::to_string(budget));
    }
}

std::vector<Subspace> enumerateSubspaces(const FieldSpec& field, int n, int k, std::uint64_t budget) {
    std::vector<Subspace> out;
    forEachSubspace(
        field, n, k, [&](const MatrixGF& basis) { out.push_back(Subspace::span(basis)); }, budget);
    return out;
}

}  // namespace bilin
