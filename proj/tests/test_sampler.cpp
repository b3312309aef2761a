#include "bilin/census.hpp"
#include "bilin/error.hpp"
#include "bilin/sampler.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bilin;

namespace {

double soPValue(std::uint32_t q, int n, int k, std::uint64_t draws, std::uint64_t seed) {
    const auto s = standardDotSpace(FieldSpec(q), n);
    Sampler rng(SamplerConfig{seed});
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < draws; ++i) {
        const Subspace c = sampleSelfOrthogonal(s, k, rng);
        REQUIRE(isSelfOrthogonal(s, c));
        ++counts[c.key()];
    }
    const BigInt total = census::sigmaSO(s, k);
    REQUIRE(counts.size() <= total);
    return testing::uniformChiSquarePValue(counts, static_cast<std::uint64_t>(total), draws);
}

}  // namespace

TEST_CASE("uniform subspaces") {
    const FieldSpec f(2);
    Sampler rng(SamplerConfig{1});
    std::map<std::string, std::uint64_t> counts;
    for (int i = 0; i < 10000; ++i) ++counts[sampleUniformSubspace(f, 4, 2, rng).key()];
    CHECK(counts.size() == 35);
    CHECK(testing::uniformChiSquarePValue(counts, 35, 10000) > 1e-3);
    CHECK(sampleUniformSubspace(f, 4, 4, rng) == Subspace::full(f, 4));
    CHECK(sampleUniformSubspace(f, 4, 0, rng) == Subspace::zero(f, 4));
}

TEST_CASE("seeded runs repeat exactly") {
    const auto s = standardDotSpace(FieldSpec(2), 6);
    Sampler a(SamplerConfig{42}), b(SamplerConfig{42});
    for (int i = 0; i < 50; ++i) CHECK(sampleSelfOrthogonal(s, 2, a) == sampleSelfOrthogonal(s, 2, b));
}

TEST_CASE("self-orthogonal sampler is uniform") {
    CHECK(soPValue(2, 4, 2, 3000, 1) > 1e-3);
    CHECK(soPValue(3, 4, 1, 2000, 2) > 1e-3);
    CHECK(soPValue(2, 6, 2, 3000, 3) > 1e-3);
    CHECK(soPValue(4, 4, 2, 3000, 4) > 1e-3);
    CHECK(soPValue(5, 4, 2, 2000, 5) > 1e-3);
}

TEST_CASE("self-orthogonal sampler in an alternating space") {
    const auto s = alternatingBlockSpace(FieldSpec(2), 4);
    Sampler rng(SamplerConfig{9});
    std::map<std::string, std::uint64_t> counts;
    for (int i = 0; i < 3000; ++i) ++counts[sampleSelfOrthogonal(s, 2, rng).key()];
    CHECK(counts.size() == census::sigmaSO(s, 2));
    CHECK(testing::uniformChiSquarePValue(counts, 15, 3000) > 1e-3);
}

TEST_CASE("l-complementary sampler") {
    const auto s = standardDotSpace(FieldSpec(2), 4);
    Sampler rng(SamplerConfig{7});
    for (int l = 0; l <= 2; ++l) {
        std::map<std::string, std::uint64_t> counts;
        for (int i = 0; i < 3000; ++i) {
            const Subspace c = sampleEllComplementary(s, 2, l, rng);
            REQUIRE(complIndex(s, c) == l);
            ++counts[c.key()];
        }
        const auto total = static_cast<std::uint64_t>(census::sigmaEll(s, 2, l));
        CHECK(counts.size() == total);
        CHECK(testing::uniformChiSquarePValue(counts, total, 3000) > 1e-3);
    }
}

TEST_CASE("sampler errors") {
    const auto s = standardDotSpace(FieldSpec(2), 4);
    Sampler rng(SamplerConfig{1});
    try {
        sampleEllComplementary(s, 3, 2, rng);
        FAIL("expected EmptyStratum");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyStratum);
    }
    CHECK_THROWS_AS(sampleSelfOrthogonal(s, 3, rng), Error);
    CHECK(sampleSelfOrthogonal(s, 0, rng).dim() == 0);

    // A stratum of 3 among 35 subspaces with a rejection cap of 1.
    Sampler strict(SamplerConfig{5, 1});
    bool sawCap = false;
    for (int i = 0; i < 50 && !sawCap; ++i) {
        try {
            sampleEllComplementary(standardDotSpace(FieldSpec(3), 4), 2, 1, strict);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MaxRejectionsExceeded);
            sawCap = true;
        }
    }
    CHECK(sawCap);
}

TEST_CASE("big-integer bounds") {
    Sampler rng(SamplerConfig{3});
    const BigInt bound = ipow(BigInt(10), 30) + 7;
    for (int i = 0; i < 200; ++i) {
        const BigInt x = rng.below(bound);
        CHECK(x >= 0);
        CHECK(x < bound);
    }
}
