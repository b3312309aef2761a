#include "bilin/weights.hpp"

#include "bilin/census.hpp"
#include "bilin/error.hpp"
#include "bilin/oracle.hpp"
#include "bilin/types.hpp"

#include <json.hpp>

#include <sstream>

namespace bilin {

namespace {

BigInt signedTerm(int sign, BigInt v) { return sign < 0 ? BigInt(-v) : v; }

void requireRange(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

// sigma_q(m, j) for the dot product in dimension m (m = 0 allowed).
BigInt dotSigma(std::uint32_t q, int m, int j) { return census::sigmaSO(dotType(q, m), m, j, q); }

}  // namespace

BigInt zeta(std::uint32_t q, int n, int i) {
    requireRange(n >= 0 && i >= 0 && i <= n, "zeta needs 0 <= i <= n");
    if (i == 0) return 1;
    BigInt inner = (i % 2 == 0) ? 1 : -1;
    for (int j = 1; j <= i; ++j) {
        const BigInt lines = census::sigmaLines(dotType(q, j), j, dotWittIndex(q, j), q);
        inner += signedTerm((i - j) % 2 == 0 ? 1 : -1, binomial(i, j) * ((q - 1) * lines + 1));
    }
    return binomial(n, i) * inner;
}

BigInt krawtchouk(std::uint32_t q, int n, int i, int j) {
    requireRange(i >= 0 && j >= 0 && i <= n && j <= n, "krawtchouk needs 0 <= i, j <= n");
    BigInt total = 0;
    for (int r = 0; r <= i; ++r) {
        BigInt term = ipow(BigInt(q - 1), static_cast<unsigned>(i - r)) * binomial(j, r) * binomial(n - j, i - r);
        total += signedTerm(r % 2 == 0 ? 1 : -1, term);
    }
    return total;
}

WeightDistribution macwilliams(const WeightDistribution& w, int k, std::uint32_t q) {
    const int n = w.n;
    if (static_cast<int>(w.counts.size()) != n + 1) {
        throw Error(ErrorCode::DimensionMismatch, "weight distribution must have n+1 entries");
    }
    const BigInt scale = ipow(BigInt(q), static_cast<unsigned>(k));
    WeightDistribution out{n, std::vector<BigInt>(n + 1)};
    for (int i = 0; i <= n; ++i) {
        BigInt s = 0;
        for (int j = 0; j <= n; ++j) {
            if (w.counts[j] != 0) s += w.counts[j] * krawtchouk(q, n, i, j);
        }
        out.counts[i] = exactDiv(s, scale, "macwilliams");
        if (out.counts[i] < 0) throw Error(ErrorCode::NonIntegralResult, "macwilliams: negative count");
    }
    return out;
}

std::vector<BigInt> aggregateSO(std::uint32_t q, int n, int k) {
    const TypeTag type = dotType(q, n);
    const int w = wittIndexOf(type, n);
    requireRange(k >= 1 && k <= w, "aggregateSO needs 1 <= k <= w");
    std::vector<BigInt> a(n + 1);
    a[0] = census::sigmaSO(type, n, k, q);
    // The factor shared by all j >= 1; n = 2 forces k = 1 and the factor is 1.
    BigInt common = 1;
    if (n > 2) {
        common = type == TypeTag::N0na ? dotSigma(q, n - 2, k - 1) : census::tau(n - 2, k - 1, w - 1, q);
    }
    for (int j = 1; j <= n; ++j) a[j] = zeta(q, n, j) * common;
    if (type == TypeTag::N0na) a[n] += (q - 1) * (dotSigma(q, n - 1, k - 1) - dotSigma(q, n - 2, k - 1));
    return a;
}

AggregateWeightTable aggregateEll(std::uint32_t q, int n, int k, int l) {
    requireRange(n >= 1 && k >= 1 && k <= n && l >= 0 && l <= k, "aggregateEll needs 1 <= k <= n, 0 <= l <= k");
    AggregateWeightTable t{q, n, k, l, {}, {}};
    const BigInt sigma = census::sigmaEll(dotType(q, n), n, k, l, q);

    if (n < 3) {
        t.aggregate = oracleAggregateWeights(q, n, k, l);
    } else {
        const int w = dotWittIndex(q, n);
        const int top = std::min(w, k);
        t.aggregate.assign(n + 1, 0);
        std::vector<std::vector<BigInt>> kraw(n + 1, std::vector<BigInt>(n + 1));
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) kraw[i][j] = krawtchouk(q, n, i, j);
        }
        for (int s = l; s <= top; ++s) {
            std::vector<BigInt> so(n + 1, 0);
            if (s == 0) {
                so[0] = 1;
            } else {
                so = aggregateSO(q, n, s);
            }
            const BigInt g1 = census::gaussianBinomial(n - 2 * s, k - s, q);
            const BigInt g2 = census::gaussianBinomial(n - 2 * s - 1, k - s - 1, q);
            const BigInt diff = g1 - g2;
            const BigInt expected = (2 * s == n && s == k)
                                        ? BigInt(1)
                                        : ipow(BigInt(q), static_cast<unsigned>(k - s)) *
                                              census::gaussianBinomial(n - 2 * s - 1, k - s, q);
            if (diff != expected) throw Error(ErrorCode::InternalInconsistency, "aggregateEll bracket difference");
            const BigInt qs = ipow(BigInt(q), static_cast<unsigned>(s));
            const BigInt outer = census::gaussianBinomial(s, l, q) * ipow(BigInt(q), static_cast<unsigned>((s - l) * (s - l - 1) / 2));
            const int sign = (s - l) % 2 == 0 ? 1 : -1;
            for (int i = 0; i <= n; ++i) {
                BigInt dual = 0;
                for (int j = 0; j <= n; ++j) {
                    if (so[j] != 0) dual += so[j] * kraw[i][j];
                }
                const BigInt b = diff * so[i] + g2 * exactDiv(dual, qs, "aggregateEll dual sum");
                t.aggregate[i] += signedTerm(sign, outer * b);
            }
        }
        for (const auto& v : t.aggregate) {
            if (v < 0) throw Error(ErrorCode::InternalInconsistency, "aggregateEll produced a negative entry");
        }
    }
    if (t.aggregate[0] != sigma) {
        throw Error(ErrorCode::InternalInconsistency, "aggregateEll entry 0 differs from sigmaEll");
    }
    t.average.resize(n + 1);
    for (int i = 0; i <= n; ++i) t.average[i] = sigma == 0 ? Rational(0) : Rational(t.aggregate[i], sigma);
    return t;
}

BigInt unrestrictedAggregate(std::uint32_t q, int n, int k, int j) {
    requireRange(k >= 1 && k <= n && j >= 0 && j <= n, "unrestrictedAggregate needs 1 <= k <= n, 0 <= j <= n");
    if (j == 0) return census::gaussianBinomial(n, k, q);
    return binomial(n, j) * ipow(BigInt(q - 1), static_cast<unsigned>(j)) * census::gaussianBinomial(n - 1, k - 1, q);
}

std::string aggregateTableToCsv(const AggregateWeightTable& t) {
    std::ostringstream out;
    out << "i,aggregate,average_num,average_den\n";
    for (int i = 0; i <= t.n; ++i) {
        out << i << ',' << t.aggregate[i] << ',' << numerator(t.average[i]) << ',' << denominator(t.average[i]) << '\n';
    }
    return out.str();
}

std::string aggregateTableToJson(const AggregateWeightTable& t) {
    nlohmann::ordered_json j;
    j["q"] = t.q;
    j["n"] = t.n;
    j["k"] = t.k;
    j["l"] = t.l;
    auto& agg = j["aggregate"] = nlohmann::json::array();
    auto& avg = j["average"] = nlohmann::json::array();
    for (int i = 0; i <= t.n; ++i) {
        agg.push_back(t.aggregate[i].str());
        avg.push_back(toString(t.average[i]));
    }
    return j.dump();
}

}  // namespace bilin
