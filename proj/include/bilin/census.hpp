#pragma once

#include "bilin/bigint.hpp"
#include "bilin/types.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace bilin {

class BilinearSpace;

/// Exact subspace counts for a bilinear space described by (type, n) over F_q.
/// Every division performed here is asserted exact.
namespace census {

/// q-binomial [n k]_q; 0 when k < 0, n < 0 or k > n.
BigInt gaussianBinomial(int n, int k, std::uint32_t q);

/// a_k = prod_{i=1}^k (q^i - 1).
BigInt aFactor(int k, std::uint32_t q);
/// b_{n,k} = prod_{i=1}^{k-1} (q^{n-2i} - 1).
BigInt bFactor(int n, int k, std::uint32_t q);

/// Number of self-orthogonal 1-dimensional subspaces of a space of this type,
/// dimension n and Witt index w.
BigInt sigmaLines(TypeTag type, int n, int w, std::uint32_t q);

/// Number of k-dimensional self-orthogonal subspaces; 1 for k = 0 and 0 for k > w.
BigInt sigmaSO(TypeTag type, int n, int k, std::uint32_t q);
BigInt sigmaSO(const BilinearSpace& s, int k);

/// The same count, built up one dimension at a time. Throws UnsupportedType for N0na.
BigInt sigmaSORecursive(TypeTag type, int n, int k, std::uint32_t q);

/// tau_q(n,k,w) = prod_{i=1}^k (q^{n-w-i}+1)(q^{w-i+1}-1)/(q^i-1); 1 for k = 0.
/// Throws PreconditionViolated outside 0 <= k <= w <= n/2.
BigInt tau(int n, int k, int w, std::uint32_t q);

/// Number of k-dimensional subspaces C with dim(C ∩ C^⊥) = l.
BigInt sigmaEll(TypeTag type, int n, int k, int l, std::uint32_t q);
BigInt sigmaEll(const BilinearSpace& s, int k, int l);

/// Sum of dim(C ∩ C^⊥) over all k-dimensional C.
BigInt cumulativeRadicalDim(TypeTag type, int n, int k, std::uint32_t q);

/// Self-orthogonal k-subspaces W of a non-alternating even-q even-n space with
/// B_W alternating. Throws UnsupportedType unless dotType(q, n) is N0na.
BigInt countAlternatingInduced(int n, int k, std::uint32_t q);

/// Number of k-dimensional self-orthogonal C containing a fixed t-dimensional
/// self-orthogonal U; for N0na it depends on whether U holds the all-one vector.
BigInt countSOContaining(TypeTag type, int n, int k, int t, bool containsAllOne, std::uint32_t q);

/// delta_q(n,k,i) for the dot product: sigma_q(n-2i, k-i) for N0na,
/// tau_q(n-2i, k-i, w-i) otherwise.
BigInt deltaCoeff(TypeTag type, int n, int k, int i, std::uint32_t q);

/// Number of self-orthogonal [n,k]_q codes meeting F_q^n(S) nontrivially for
/// any coordinate set S of size t (dot product).
BigInt countSOMeetingCoordinate(int n, int k, int t, std::uint32_t q);

}  // namespace census

/// One census value keyed by (q, type, n, k, l).
struct CensusEntry {
    std::uint32_t q = 0;
    TypeTag type = TypeTag::P;
    int n = 0;
    int k = 0;
    int l = 0;
    BigInt count;
};

/// JSON object {"q","type","n","k","l","count"} with count as a decimal string.
std::string censusEntryToJson(const CensusEntry& e);
CensusEntry censusEntryFromJson(const std::string& line);

/// Memo of sigmaEll values. Concurrent inserts of the same key are idempotent.
/// The on-disk form is JSON lines of CensusEntry.
class CensusCache {
public:
    CensusCache() = default;

    /// Reads entries from path if the file exists; malformed lines are skipped.
    void load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    BigInt sigmaEll(TypeTag type, int n, int k, int l, std::uint32_t q);
    std::size_t size() const;
    std::size_t hits() const;

private:
    using Key = std::tuple<std::uint32_t, int, int, int, int>;
    mutable std::mutex mutex_;
    std::map<Key, BigInt> entries_;
    std::size_t hits_ = 0;
};

}  // namespace bilin
