#include "bilin/census.hpp"
#include "bilin/error.hpp"
#include "bilin/oracle.hpp"
#include "bilin/sampler.hpp"
#include "bilin/weights.hpp"

#include <doctest.h>

using namespace bilin;

namespace {

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("zeta values") {
    CHECK(zeta(2, 4, 2) == 6);
    CHECK(zeta(3, 4, 2) == 0);
    CHECK(zeta(3, 3, 3) == 8);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        for (int n = 1; n <= 6; ++n) {
            CHECK(zeta(q, n, 0) == 1);
            CHECK(zeta(q, n, 1) == 0);
        }
    }
}

TEST_CASE("zeta against vector enumeration") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (int n = 1; n <= 6; ++n) {
            const auto o = oracleZetaAll(q, n);
            for (int i = 0; i <= n; ++i) CHECK(zeta(q, n, i) == o[i]);
        }
    }
}

TEST_CASE("Krawtchouk coefficients") {
    CHECK(krawtchouk(2, 3, 1, 1) == 1);
    CHECK(krawtchouk(2, 4, 2, 2) == -2);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int j = 0; j <= 5; ++j) CHECK(krawtchouk(q, 5, 0, j) == 1);
        // K(n,i,0) is the size of the weight-i sphere.
        for (int i = 0; i <= 5; ++i) CHECK(krawtchouk(q, 5, i, 0) == binomial(5, i) * ipow(BigInt(q - 1), i));
    }
}

TEST_CASE("MacWilliams transform") {
    const WeightDistribution sd{4, big({1, 0, 2, 0, 1})};
    CHECK(macwilliams(sd, 2, 2) == sd);
    const WeightDistribution zero{5, big({1, 0, 0, 0, 0, 0})};
    const WeightDistribution full = macwilliams(zero, 0, 3);
    for (int i = 0; i <= 5; ++i) CHECK(full.counts[i] == binomial(5, i) * ipow(BigInt(2), i));
    CHECK_THROWS_AS(macwilliams(WeightDistribution{4, big({1, 0, 0, 0, 0})}, 1, 2), Error);
}

TEST_CASE("MacWilliams is an involution and matches the dual code") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto s = standardDotSpace(FieldSpec(q), 6);
        Sampler rng(SamplerConfig{q});
        for (int t = 0; t < 20; ++t) {
            const int k = 1 + static_cast<int>(rng.below(5));
            const Subspace c = sampleUniformSubspace(s.field(), 6, k, rng);
            const WeightDistribution w = weightDistribution(c);
            const WeightDistribution dual = macwilliams(w, k, q);
            CHECK(dual == weightDistribution(orthogonal(s, c)));
            CHECK(macwilliams(dual, 6 - k, q) == w);
        }
    }
}

TEST_CASE("aggregate over self-orthogonal codes") {
    CHECK(aggregateSO(2, 4, 2) == big({3, 0, 6, 0, 3}));
    CHECK(aggregateSO(2, 4, 1) == big({7, 0, 6, 0, 1}));
    for (int j = 1; j <= 4; ++j) CHECK(aggregateSO(2, 4, 1)[j] == zeta(2, 4, j));
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (int n = 2; n <= 6; ++n) {
            for (int k = 1; k <= dotWittIndex(q, n); ++k) {
                const auto a = aggregateSO(q, n, k);
                CHECK(a[1] == 0);
                CHECK(a == oracleAggregateWeights(q, n, k, k));
                CHECK(a == aggregateEll(q, n, k, k).aggregate);
            }
        }
    }
    CHECK_THROWS_AS(aggregateSO(3, 2, 1), Error);
}

TEST_CASE("aggregate over l-complementary codes") {
    const auto t = aggregateEll(2, 4, 2, 2);
    CHECK(t.aggregate == big({3, 0, 6, 0, 3}));
    const auto t0 = aggregateEll(2, 4, 2, 0);
    CHECK(t0.aggregate[0] == 20);
    Rational s = 0;
    for (const auto& a : t0.average) s += a;
    CHECK(s == 4);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (int n = 1; n <= (q <= 3 ? 5 : 4); ++n) {
            for (int k = 1; k <= n; ++k) {
                for (int l = 0; l <= k; ++l) {
                    const auto table = aggregateEll(q, n, k, l);
                    CHECK(table.aggregate == oracleAggregateWeights(q, n, k, l));
                    const BigInt sigma = census::sigmaEll(dotType(q, n), n, k, l, q);
                    BigInt column = 0;
                    for (const auto& a : table.aggregate) column += a;
                    CHECK(column == ipow(BigInt(q), k) * sigma);
                    if (sigma > 0) {
                        Rational avg = 0;
                        for (const auto& a : table.average) avg += a;
                        CHECK(avg == Rational(ipow(BigInt(q), k)));
                    }
                }
            }
        }
    }
}

TEST_CASE("unrestricted aggregate") {
    CHECK(unrestrictedAggregate(2, 4, 2, 2) == 42);
    CHECK(Rational(unrestrictedAggregate(2, 4, 2, 2), census::gaussianBinomial(4, 2, 2)) == Rational(6, 5));
    CHECK(unrestrictedAggregate(3, 4, 4, 2) == binomial(4, 2) * 4);
    CHECK(unrestrictedAggregate(3, 4, 2, 0) == census::gaussianBinomial(4, 2, 3));
    for (std::uint32_t q : {2u, 3u}) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<BigInt> sum(5, 0);
            for (int l = 0; l <= k; ++l) {
                const auto o = oracleAggregateWeights(q, 4, k, l);
                for (int j = 0; j <= 4; ++j) sum[j] += o[j];
            }
            for (int j = 0; j <= 4; ++j) CHECK(sum[j] == unrestrictedAggregate(q, 4, k, j));
        }
    }
}

TEST_CASE("table export") {
    const auto t = aggregateEll(2, 4, 2, 0);
    const std::string csv = aggregateTableToCsv(t);
    CHECK(csv.rfind("i,aggregate,average_num,average_den\n0,20,1,1\n", 0) == 0);
    CHECK(csv.find("2,24,6,5") != std::string::npos);
    CHECK(aggregateTableToJson(t).find("\"aggregate\":[\"20\"") != std::string::npos);
}
