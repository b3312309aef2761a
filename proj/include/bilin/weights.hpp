#pragma once

#include "bilin/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bilin {

/// Hamming weight distribution: counts[i] is the number of weight-i words.
struct WeightDistribution {
    int n = 0;
    std::vector<BigInt> counts;

    bool operator==(const WeightDistribution&) const = default;
};

/// Aggregate and average weight distribution over all l-complementary [n,k]_q
/// codes of the dot product.
struct AggregateWeightTable {
    std::uint32_t q = 0;
    int n = 0;
    int k = 0;
    int l = 0;
    std::vector<BigInt> aggregate;
    std::vector<Rational> average;
};

/// Number of self-orthogonal weight-i vectors of (F_q^n, dot).
BigInt zeta(std::uint32_t q, int n, int i);

/// K_q(n,i,j) by direct summation.
BigInt krawtchouk(std::uint32_t q, int n, int i, int j);

/// Distribution of the dual of a k-dimensional code.
/// Throws NonIntegralResult when w is not a code distribution.
WeightDistribution macwilliams(const WeightDistribution& w, int k, std::uint32_t q);

/// Sum of the weight distributions of all self-orthogonal [n,k]_q codes.
/// Needs 1 <= k <= w(F_q^n, dot).
std::vector<BigInt> aggregateSO(std::uint32_t q, int n, int k);

/// Aggregate table for l-complementary codes. For n < 3 the values come from
/// exhaustive enumeration.
AggregateWeightTable aggregateEll(std::uint32_t q, int n, int k, int l);

/// Total number of weight-j words over all [n,k]_q codes; [n k]_q for j = 0.
BigInt unrestrictedAggregate(std::uint32_t q, int n, int k, int j);

/// Header `i,aggregate,average_num,average_den`, then one row per weight.
std::string aggregateTableToCsv(const AggregateWeightTable& t);
std::string aggregateTableToJson(const AggregateWeightTable& t);

}  // namespace bilin
