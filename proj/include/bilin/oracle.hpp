#pragma once

#include "bilin/bigint.hpp"
#include "bilin/bilinear.hpp"
#include "bilin/weights.hpp"

#include <cstdint>
#include <type_traits>
#include <vector>

namespace bilin {

/// Caps for brute-force enumeration.
struct OracleBudget {
    std::uint64_t maxSubspaces = kDefaultSubspaceBudget;
    std::uint64_t maxCodewords = 10'000'000;
};

/// Runs through every nonzero vector of the row space of basis in q-ary
/// reflected Gray order, so consecutive words differ by a multiple of one row.
/// fn(word, weight) sees the current word; the zero word is not visited.
/// If fn returns bool, returning false stops the walk.
template <class Fn>
void forEachNonzeroWord(const MatrixGF& basis, Fn&& fn) {
    const FieldSpec& f = basis.field();
    const int k = static_cast<int>(basis.rows());
    const int n = static_cast<int>(basis.cols());
    const int q1 = static_cast<int>(f.q()) - 1;
    std::vector<int> digit(k, 0);
    std::vector<int> dir(k, 1);
    Vector word(n, 0);
    int wt = 0;
    while (true) {
        int i = 0;
        while (i < k && ((dir[i] > 0 && digit[i] == q1) || (dir[i] < 0 && digit[i] == 0))) {
            dir[i] = -dir[i];
            ++i;
        }
        if (i == k) return;
        const Element before = static_cast<Element>(digit[i]);
        digit[i] += dir[i];
        const Element delta = f.sub(static_cast<Element>(digit[i]), before);
        const auto row = basis.row(i);
        for (int c = 0; c < n; ++c) {
            if (row[c] == 0) continue;
            const Element old = word[c];
            word[c] = f.add(old, f.mul(delta, row[c]));
            wt += (word[c] != 0) - (old != 0);
        }
        if constexpr (std::is_same_v<decltype(fn(static_cast<const Vector&>(word), wt)), bool>) {
            if (!fn(static_cast<const Vector&>(word), wt)) return;
        } else {
            fn(static_cast<const Vector&>(word), wt);
        }
    }
}

/// Number of k-subspaces C with dim(C ∩ C^⊥) = l, by enumeration.
BigInt oracleSigmaEll(const BilinearSpace& s, int k, int l, const OracleBudget& budget = {});
/// Entry l of the result is the count for that l (size k+1).
std::vector<BigInt> oracleSigmaEllHistogram(const BilinearSpace& s, int k, const OracleBudget& budget = {});

/// Largest dimension of a self-orthogonal subspace, found by enumeration.
/// Also checks that every maximal self-orthogonal subspace has that dimension
/// (InternalInconsistency otherwise).
int oracleWittIndex(const BilinearSpace& s, const OracleBudget& budget = {});

/// Weight distribution of a code by word enumeration.
WeightDistribution weightDistribution(const Subspace& c, const OracleBudget& budget = {});

/// Summed weight distributions of the l-complementary [n,k]_q codes (dot product).
std::vector<BigInt> oracleAggregateWeights(std::uint32_t q, int n, int k, int l, const OracleBudget& budget = {});

/// Throws ZeroCode for the zero subspace.
int minDistance(const Subspace& c, const OracleBudget& budget = {});

struct LowDistanceCount {
    BigInt low;    // d(C) <= d-1
    BigInt total;  // all self-orthogonal [n,k]_q codes
    BigInt mds;    // d(C) = n-k+1
};

/// Self-orthogonal [n,k]_q codes (dot product) sorted by minimum distance.
LowDistanceCount oracleLowDistanceSOCount(std::uint32_t q, int n, int k, int d, const OracleBudget& budget = {});

/// Counts of self-orthogonal vectors of F_q^n (dot) by weight, size n+1.
std::vector<BigInt> oracleZetaAll(std::uint32_t q, int n, const OracleBudget& budget = {});
BigInt oracleZeta(std::uint32_t q, int n, int i, const OracleBudget& budget = {});

/// Self-orthogonal [n,k]_q codes meeting F_q^n(S) nontrivially; S is a bitmask.
BigInt oracleMeetingCoordinate(std::uint32_t q, int n, int k, std::uint64_t subset, const OracleBudget& budget = {});
/// The same count for every subset at once, indexed by bitmask (size 2^n).
std::vector<BigInt> oracleMeetingCoordinateAll(std::uint32_t q, int n, int k, const OracleBudget& budget = {});

/// Sum of dim(C ∩ C^⊥) over all k-subspaces.
BigInt oracleCumulativeRadical(const BilinearSpace& s, int k, const OracleBudget& budget = {});

/// Self-orthogonal k-subspaces containing u.
BigInt oracleCountSOContaining(const BilinearSpace& s, const Subspace& u, int k, const OracleBudget& budget = {});

/// Self-orthogonal k-subspaces W of (F_q^n, dot) whose induced form on
/// W^⊥/W is alternating.
BigInt oracleAlternatingInduced(std::uint32_t q, int n, int k, const OracleBudget& budget = {});

}  // namespace bilin
