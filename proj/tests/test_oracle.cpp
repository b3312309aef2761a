#include "bilin/census.hpp"
#include "bilin/error.hpp"
#include "bilin/oracle.hpp"

#include <doctest.h>

#include <bit>
#include <optional>
#include <set>

using namespace bilin;

TEST_CASE("small strata by enumeration") {
    const auto s = standardDotSpace(FieldSpec(2), 4);
    CHECK(oracleSigmaEll(s, 2, 2) == 3);
    CHECK(oracleSigmaEll(s, 2, 0) == 20);
    CHECK(oracleSigmaEll(standardDotSpace(FieldSpec(5), 3), 0, 0) == 1);
    CHECK(oracleCumulativeRadical(s, 2) == 18);
}

TEST_CASE("histogram partitions the subspaces") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const auto s = standardDotSpace(FieldSpec(q), 4);
        for (int k = 0; k <= 4; ++k) {
            BigInt total = 0;
            for (const auto& c : oracleSigmaEllHistogram(s, k)) total += c;
            CHECK(total == census::gaussianBinomial(4, k, q));
        }
    }
}

TEST_CASE("repeated runs agree") {
    const auto s = standardDotSpace(FieldSpec(3), 5);
    CHECK(oracleSigmaEllHistogram(s, 2) == oracleSigmaEllHistogram(s, 2));
    CHECK(oracleAggregateWeights(3, 5, 2, 1) == oracleAggregateWeights(3, 5, 2, 1));
}

TEST_CASE("Gray walk visits every nonzero word once") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec f(q);
        const Subspace c = Subspace::span(MatrixGF(f, {{1, 0, 1, 1, 0}, {0, 1, 1, 0, 1}, {0, 0, 0, 1, 1}}, 5));
        std::set<Vector> seen;
        forEachNonzeroWord(c.basis(), [&](const Vector& v, int wt) {
            CHECK(weight(v) == wt);
            CHECK(c.containsVector(v));
            seen.insert(v);
        });
        CHECK(seen.size() == q * q * q - 1);
    }
}

TEST_CASE("weight sums over codes") {
    CHECK(oracleAggregateWeights(2, 4, 2, 2) == std::vector<BigInt>{3, 0, 6, 0, 3});
    CHECK(oracleAggregateWeights(2, 4, 1, 1) == std::vector<BigInt>{7, 0, 6, 0, 1});
    BigInt words = 0;
    for (int l = 0; l <= 2; ++l) {
        for (const auto& a : oracleAggregateWeights(2, 4, 2, l)) words += a;
    }
    CHECK(words == 35 * 4);
}

TEST_CASE("minimum distance") {
    const FieldSpec f2(2), f5(5);
    CHECK(minDistance(Subspace::span(MatrixGF(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}, 4))) == 2);
    CHECK(minDistance(Subspace::span(MatrixGF(f5, {{1, 2}}, 2))) == 2);
    CHECK(minDistance(Subspace::span(MatrixGF(f2, {{1, 1, 1, 1, 1}}, 5))) == 5);
    try {
        minDistance(Subspace::zero(f2, 3));
        FAIL("expected ZeroCode");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroCode);
    }
    OracleBudget tiny;
    tiny.maxCodewords = 10;
    CHECK_THROWS_AS(minDistance(Subspace::full(f2, 5), tiny), Error);
}

TEST_CASE("low-distance self-orthogonal codes") {
    const auto r = oracleLowDistanceSOCount(2, 4, 2, 3);
    CHECK(r.total == 3);
    CHECK(r.low == 3);
    CHECK(oracleLowDistanceSOCount(3, 6, 2, 2).low == 0);
    const auto big = oracleLowDistanceSOCount(5, 6, 2, 4);
    CHECK(big.total == 4836);
    CHECK(big.low > 0);
    CHECK(big.low < big.total);
}

TEST_CASE("coordinate intersections depend only on the subset size") {
    for (std::uint32_t q : {2u, 3u}) {
        for (int n = 2; n <= 6; ++n) {
            for (int k = 1; k <= dotWittIndex(q, n); ++k) {
                const auto all = oracleMeetingCoordinateAll(q, n, k);
                std::vector<std::optional<BigInt>> bySize(n + 1);
                for (std::uint64_t mask = 0; mask < all.size(); ++mask) {
                    auto& slot = bySize[std::popcount(mask)];
                    if (!slot) slot = all[mask];
                    CHECK(*slot == all[mask]);
                }
                CHECK(all.front() == 0);
                CHECK(all.back() == census::sigmaSO(dotType(q, n), n, k, q));
            }
        }
    }
    CHECK(oracleMeetingCoordinate(2, 4, 2, 0b0011) == 1);
}

TEST_CASE("budget errors name the problem") {
    OracleBudget tiny;
    tiny.maxSubspaces = 10;
    try {
        oracleSigmaEllHistogram(standardDotSpace(FieldSpec(3), 4), 2, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
        CHECK(std::string(e.what()).find("F_3^4") != std::string::npos);
    }
}
