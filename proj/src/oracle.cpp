#include "bilin/oracle.hpp"

#include "bilin/error.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace bilin {

namespace {

using Counts = std::vector<std::uint64_t>;

struct GramEntry {
    int r;
    int c;
    Element g;
};

std::vector<GramEntry> gramPattern(const MatrixGF& gram) {
    std::vector<GramEntry> out;
    for (std::size_t r = 0; r < gram.rows(); ++r) {
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            if (gram(r, c) != 0) out.push_back({static_cast<int>(r), static_cast<int>(c), gram(r, c)});
        }
    }
    return out;
}

Element formEntry(const FieldSpec& f, const MatrixGF& m, const std::vector<GramEntry>& pat, std::size_t a,
                  std::size_t b) {
    Element acc = 0;
    const auto ra = m.row(a);
    const auto rb = m.row(b);
    for (const auto& e : pat) {
        const Element x = ra[e.r];
        const Element y = rb[e.c];
        if (x != 0 && y != 0) acc = f.add(acc, f.mul(f.mul(x, e.g), y));
    }
    return acc;
}

// Rank of a rows x cols block stored row-major in buf (destroyed).
int smallRank(const FieldSpec& f, std::vector<Element>& buf, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (buf[r * cols + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < cols; ++j) std::swap(buf[pivot * cols + j], buf[rank * cols + j]);
        }
        const Element inv = f.inv(buf[rank * cols + c]);
        for (int r = rank + 1; r < rows; ++r) {
            const Element x = buf[r * cols + c];
            if (x == 0) continue;
            const Element factor = f.mul(x, inv);
            for (int j = c; j < cols; ++j) {
                buf[r * cols + j] = f.sub(buf[r * cols + j], f.mul(factor, buf[rank * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

// dim(C ∩ C^⊥) for the code with basis m.
int radicalDim(const FieldSpec& f, const MatrixGF& m, const std::vector<GramEntry>& pat, std::vector<Element>& buf) {
    const int k = static_cast<int>(m.rows());
    buf.assign(static_cast<std::size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            const Element v = formEntry(f, m, pat, a, b);
            buf[a * k + b] = v;
            buf[b * k + a] = v;
        }
    }
    return k - smallRank(f, buf, k, k);
}

// Diagonal entries first, since most codes already fail there.
bool selfOrthogonal(const FieldSpec& f, const MatrixGF& m, const std::vector<GramEntry>& pat) {
    const std::size_t k = m.rows();
    for (std::size_t a = 0; a < k; ++a) {
        if (formEntry(f, m, pat, a, a) != 0) return false;
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (formEntry(f, m, pat, a, b) != 0) return false;
        }
    }
    return true;
}

// Membership of v in the row space of an RREF basis with the given pivots.
bool inRrefSpan(const FieldSpec& f, const MatrixGF& m, std::span<const int> pivots, std::span<const Element> v) {
    const std::size_t n = m.cols();
    for (std::size_t c = 0; c < n; ++c) {
        Element acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Element coef = v[pivots[r]];
            if (coef != 0 && m(r, c) != 0) acc = f.add(acc, f.mul(coef, m(r, c)));
        }
        if (acc != v[c]) return false;
    }
    return true;
}

void checkWords(std::uint32_t q, int k, const OracleBudget& budget, const char* what) {
    double words = 1;
    for (int i = 0; i < k; ++i) words *= q;
    if (words > static_cast<double>(budget.maxCodewords)) {
        throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": q=" + std::to_string(q) + " k=" +
                                                   std::to_string(k) + " exceeds the codeword budget");
    }
}

void checkSubspaces(std::uint32_t q, int n, int k, const OracleBudget& budget) {
    try {
        checkBudget(q, n, k, budget.maxSubspaces);
    } catch (const Error&) {
        throw Error(ErrorCode::BudgetExceeded, "enumeration of " + std::to_string(k) + "-subspaces of F_" +
                                                   std::to_string(q) + "^" + std::to_string(n) +
                                                   " exceeds the subspace budget");
    }
}

// Runs perShape(pivots, acc) for every pivot set, spread over worker threads.
// Each pivot set fills its own accumulator; the merge is in pivot-set order.
template <class PerShape>
Counts reduceShapes(std::uint32_t q, int n, int k, const OracleBudget& budget, std::size_t width, PerShape perShape) {
    checkSubspaces(q, n, k, budget);
    const auto shapes = pivotSets(n, k);
    std::vector<Counts> parts(shapes.size(), Counts(width, 0));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, shapes.size());
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](std::size_t id) {
        try {
            for (std::size_t i = id; i < shapes.size(); i += workers) perShape(shapes[i], parts[i]);
        } catch (...) {
            failures[id] = std::current_exception();
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }
    for (auto& e : failures) {
        if (e) std::rethrow_exception(e);
    }
    Counts total(width, 0);
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < width; ++i) total[i] += part[i];
    }
    return total;
}

std::vector<BigInt> toBig(const Counts& c) {
    std::vector<BigInt> out;
    out.reserve(c.size());
    for (auto v : c) out.emplace_back(v);
    return out;
}

}  // namespace

std::vector<BigInt> oracleSigmaEllHistogram(const BilinearSpace& s, int k, const OracleBudget& budget) {
    const int n = s.n();
    if (k < 0 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    const Counts c = reduceShapes(f.q(), n, k, budget, k + 1, [&](const std::vector<int>& pivots, Counts& acc) {
        std::vector<Element> buf;
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) { ++acc[radicalDim(f, m, pat, buf)]; });
    });
    return toBig(c);
}

BigInt oracleSigmaEll(const BilinearSpace& s, int k, int l, const OracleBudget& budget) {
    if (k < 0 || k > s.n() || l < 0 || l > k) return 0;
    return oracleSigmaEllHistogram(s, k, budget)[l];
}

BigInt oracleCumulativeRadical(const BilinearSpace& s, int k, const OracleBudget& budget) {
    const auto h = oracleSigmaEllHistogram(s, k, budget);
    BigInt total = 0;
    for (std::size_t l = 0; l < h.size(); ++l) total += h[l] * static_cast<unsigned>(l);
    return total;
}

int oracleWittIndex(const BilinearSpace& s, const OracleBudget& budget) {
    const int n = s.n();
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    // Slot 0 counts self-orthogonal subspaces, slot 1 the maximal ones among them.
    auto scan = [&](int k) {
        checkWords(f.q(), n - k, budget, "oracleWittIndex");
        return reduceShapes(f.q(), n, k, budget, 2, [&](const std::vector<int>& pivots, Counts& acc) {
            forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
                if (!selfOrthogonal(f, m, pat)) return;
                ++acc[0];
                const MatrixGF perp = k == 0 ? MatrixGF::identity(f, n) : orthogonal(s, Subspace::span(m)).basis();
                bool extendable = false;
                forEachNonzeroWord(perp, [&](const Vector& v, int) {
                    if (s.form(v, v) == 0 && (k == 0 || !inRrefSpan(f, m, pivots, v))) {
                        extendable = true;
                        return false;
                    }
                    return true;
                });
                if (!extendable) ++acc[1];
            });
        });
    };
    int witt = 0;
    std::vector<std::uint64_t> maximalAt;
    for (int k = 0; k <= n; ++k) {
        const Counts c = scan(k);
        if (c[0] == 0) break;
        witt = k;
        maximalAt.push_back(c[1]);
    }
    for (int k = 0; k < witt; ++k) {
        if (maximalAt[k] != 0) {
            throw Error(ErrorCode::InternalInconsistency,
                        "found a maximal self-orthogonal subspace of dimension " + std::to_string(k) +
                            " below the Witt index " + std::to_string(witt));
        }
    }
    return witt;
}

WeightDistribution weightDistribution(const Subspace& c, const OracleBudget& budget) {
    const int n = static_cast<int>(c.ambientDim());
    checkWords(c.field().q(), static_cast<int>(c.dim()), budget, "weightDistribution");
    WeightDistribution w{n, std::vector<BigInt>(n + 1, 0)};
    std::vector<std::uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    forEachNonzeroWord(c.basis(), [&](const Vector&, int wt) { ++counts[wt]; });
    for (int i = 0; i <= n; ++i) w.counts[i] = counts[i];
    return w;
}

std::vector<BigInt> oracleAggregateWeights(std::uint32_t q, int n, int k, int l, const OracleBudget& budget) {
    if (k < 0 || k > n || l < 0 || l > k) throw Error(ErrorCode::PreconditionViolated, "need 0 <= l <= k <= n");
    const BilinearSpace s = standardDotSpace(FieldSpec(q), n);
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    checkWords(q, k, budget, "oracleAggregateWeights");
    const Counts c = reduceShapes(q, n, k, budget, n + 1, [&](const std::vector<int>& pivots, Counts& acc) {
        std::vector<Element> buf;
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
            if (radicalDim(f, m, pat, buf) != l) return;
            ++acc[0];
            forEachNonzeroWord(m, [&](const Vector&, int wt) { ++acc[wt]; });
        });
    });
    return toBig(c);
}

int minDistance(const Subspace& c, const OracleBudget& budget) {
    if (c.dim() == 0) throw Error(ErrorCode::ZeroCode, "minimum distance of the zero code");
    checkWords(c.field().q(), static_cast<int>(c.dim()), budget, "minDistance");
    int best = static_cast<int>(c.ambientDim());
    forEachNonzeroWord(c.basis(), [&](const Vector&, int wt) { best = std::min(best, wt); });
    return best;
}

LowDistanceCount oracleLowDistanceSOCount(std::uint32_t q, int n, int k, int d, const OracleBudget& budget) {
    if (k < 1 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= n");
    const BilinearSpace s = standardDotSpace(FieldSpec(q), n);
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    checkWords(q, k, budget, "oracleLowDistanceSOCount");
    const Counts c = reduceShapes(q, n, k, budget, 3, [&](const std::vector<int>& pivots, Counts& acc) {
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
            if (!selfOrthogonal(f, m, pat)) return;
            int best = n;
            forEachNonzeroWord(m, [&](const Vector&, int wt) { best = std::min(best, wt); });
            ++acc[1];
            if (best <= d - 1) ++acc[0];
            if (best == n - k + 1) ++acc[2];
        });
    });
    return LowDistanceCount{c[0], c[1], c[2]};
}

std::vector<BigInt> oracleZetaAll(std::uint32_t q, int n, const OracleBudget& budget) {
    const FieldSpec f(q);
    checkWords(q, n, budget, "oracleZeta");
    std::vector<std::uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    forEachNonzeroWord(MatrixGF::identity(f, n), [&](const Vector& v, int wt) {
        Element dot = 0;
        for (Element x : v) {
            if (x != 0) dot = f.add(dot, f.mul(x, x));
        }
        if (dot == 0) ++counts[wt];
    });
    return toBig(counts);
}

BigInt oracleZeta(std::uint32_t q, int n, int i, const OracleBudget& budget) {
    if (i < 0 || i > n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= i <= n");
    return oracleZetaAll(q, n, budget)[i];
}

std::vector<BigInt> oracleMeetingCoordinateAll(std::uint32_t q, int n, int k, const OracleBudget& budget) {
    if (n > 20) throw Error(ErrorCode::OutOfRange, "coordinate scan limited to n <= 20");
    if (k < 1 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= n");
    const BilinearSpace s = standardDotSpace(FieldSpec(q), n);
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    const std::size_t subsets = std::size_t{1} << n;
    const Counts c = reduceShapes(q, n, k, budget, subsets, [&](const std::vector<int>& pivots, Counts& acc) {
        std::vector<Element> buf;
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
            if (!selfOrthogonal(f, m, pat)) return;
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                // C meets F_q^n(S) iff the columns outside S have rank < k.
                std::vector<int> cols;
                for (int j = 0; j < n; ++j) {
                    if (!(mask >> j & 1)) cols.push_back(j);
                }
                const int width = static_cast<int>(cols.size());
                buf.assign(static_cast<std::size_t>(k) * width, 0);
                for (int r = 0; r < k; ++r) {
                    for (int j = 0; j < width; ++j) buf[r * width + j] = m(r, cols[j]);
                }
                if (smallRank(f, buf, k, width) < k) ++acc[mask];
            }
        });
    });
    return toBig(c);
}

BigInt oracleMeetingCoordinate(std::uint32_t q, int n, int k, std::uint64_t subset, const OracleBudget& budget) {
    if (n < 64 && subset >> n) throw Error(ErrorCode::OutOfRange, "subset mask exceeds n coordinates");
    return oracleMeetingCoordinateAll(q, n, k, budget)[subset];
}

BigInt oracleCountSOContaining(const BilinearSpace& s, const Subspace& u, int k, const OracleBudget& budget) {
    const int n = s.n();
    if (static_cast<int>(u.ambientDim()) != n) throw Error(ErrorCode::DimensionMismatch, "u lives in another space");
    if (k < 0 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    const Counts c = reduceShapes(f.q(), n, k, budget, 1, [&](const std::vector<int>& pivots, Counts& acc) {
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
            if (!selfOrthogonal(f, m, pat)) return;
            for (std::size_t r = 0; r < u.dim(); ++r) {
                if (!inRrefSpan(f, m, pivots, u.basis().row(r))) return;
            }
            ++acc[0];
        });
    });
    return c[0];
}

BigInt oracleAlternatingInduced(std::uint32_t q, int n, int k, const OracleBudget& budget) {
    if (k < 1 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= n");
    const BilinearSpace s = standardDotSpace(FieldSpec(q), n);
    const FieldSpec f = s.field();
    const auto pat = gramPattern(s.gram());
    const Counts c = reduceShapes(q, n, k, budget, 1, [&](const std::vector<int>& pivots, Counts& acc) {
        forEachWithPivots(f, n, pivots, [&](const MatrixGF& m) {
            if (!selfOrthogonal(f, m, pat)) return;
            const Subspace perp = kernel(m);
            for (std::size_t r = 0; r < perp.dim(); ++r) {
                const auto v = perp.basis().row(r);
                if (s.form(v, v) != 0) return;
            }
            ++acc[0];
        });
    });
    return c[0];
}

}  // namespace bilin
