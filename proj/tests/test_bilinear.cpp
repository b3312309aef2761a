#include "bilin/bilinear.hpp"
#include "bilin/error.hpp"
#include "bilin/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace bilin;

namespace {

ErrorCode codeOf(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("dot product types") {
    const FieldSpec f2(2), f3(3), f5(5), f7(7);
    CHECK(standardDotSpace(f2, 4).type() == TypeTag::N0na);
    CHECK(standardDotSpace(f2, 5).type() == TypeTag::N1);
    CHECK(standardDotSpace(f3, 3).type() == TypeTag::P);
    CHECK(standardDotSpace(f3, 2).type() == TypeTag::E);
    CHECK(standardDotSpace(f3, 4).type() == TypeTag::H);
    CHECK(standardDotSpace(f5, 2).type() == TypeTag::H);
    CHECK(standardDotSpace(f7, 6).type() == TypeTag::E);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        for (int n = 1; n <= 7; ++n) {
            const auto s = standardDotSpace(FieldSpec(q), n);
            CHECK(s.type() == dotType(q, n));
            CHECK(s.witt() == wittIndexFormula(s));
        }
    }
}

TEST_CASE("alternating block space") {
    const auto s = alternatingBlockSpace(FieldSpec(4), 6);
    CHECK(s.type() == TypeTag::N0a);
    CHECK(isAlternating(s));
    CHECK(s.witt() == 3);
    CHECK(alternatingBlockSpace(FieldSpec(3), 4).type() == TypeTag::H);
}

TEST_CASE("classification from JSON") {
    const auto s = spaceFromJson(R"({"gram": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})", 2);
    CHECK(s.type() == TypeTag::N0na);
    CHECK(s.witt() == 2);
    CHECK(discriminantIsSquare(s));
    const auto t = spaceFromJson(R"({"q": 3, "gram": [[1,0],[0,1]]})");
    CHECK(t.type() == TypeTag::E);
    CHECK_FALSE(discriminantIsSquare(t) == discriminantIsSquare(spaceFromJson(R"({"q":3,"gram":[[1,0],[0,2]]})")));
    const auto round = spaceFromJson(matrixToJson(s.gram()), 2);
    CHECK(round.gram() == s.gram());
    CHECK(codeOf([] { spaceFromJson("{not json", 2); }) == ErrorCode::ParseError);
}

TEST_CASE("invalid Gram matrices") {
    const FieldSpec f(3);
    MatrixGF asym(f, {{1, 1}, {0, 1}}, 2);
    CHECK(codeOf([&] { spaceFromGram(f, asym); }) == ErrorCode::NotSymmetric);
    MatrixGF sing(f, {{1, 1}, {1, 1}}, 2);
    CHECK(codeOf([&] { spaceFromGram(f, sing); }) == ErrorCode::Degenerate);
}

TEST_CASE("Witt index formula matches enumeration") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        for (int n = 1; n <= 5; ++n) {
            const auto s = standardDotSpace(FieldSpec(q), n);
            CHECK(wittIndexFormula(s) == oracleWittIndex(s));
        }
    }
    CHECK(oracleWittIndex(standardDotSpace(FieldSpec(3), 2)) == 0);
    CHECK(oracleWittIndex(standardDotSpace(FieldSpec(2), 4)) == 2);
    CHECK(oracleWittIndex(standardDotSpace(FieldSpec(5), 2)) == 1);
}

TEST_CASE("random symmetric forms classify consistently") {
    std::mt19937 rng(17);
    for (std::uint32_t q : {3u, 4u, 5u, 9u}) {
        const FieldSpec f(q);
        int made = 0;
        while (made < 12) {
            MatrixGF g(f, 4, 4);
            for (int i = 0; i < 4; ++i) {
                for (int j = i; j < 4; ++j) g(i, j) = g(j, i) = static_cast<Element>(rng() % q);
            }
            if (determinant(g) == 0) continue;
            ++made;
            const auto s = spaceFromGram(f, g);
            CHECK(s.witt() == wittIndexOf(s.type(), 4));
            CHECK(s.witt() == oracleWittIndex(s));
        }
    }
}

TEST_CASE("orthogonal complements and radicals") {
    const auto s = standardDotSpace(FieldSpec(2), 4);
    const FieldSpec& f = s.field();
    const Subspace c = Subspace::span(MatrixGF(f, {{1, 1, 0, 0}, {0, 0, 1, 1}}, 4));
    CHECK(orthogonal(s, c) == c);
    CHECK(isSelfOrthogonal(s, c));
    CHECK(complIndex(s, c) == 2);
    const Subspace lcd = Subspace::span(MatrixGF(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    CHECK(isLCD(s, lcd));
    CHECK(radical(s, lcd).dim() == 0);
    CHECK(orthogonal(s, Subspace::zero(f, 4)).dim() == 4);
}

TEST_CASE("quotient by a self-orthogonal subspace") {
    const auto s = standardDotSpace(FieldSpec(2), 6);
    const FieldSpec& f = s.field();
    const Subspace one = Subspace::span(MatrixGF(f, {allOneVector(6)}, 6));
    const auto qa = quotientSpace(s, one);
    CHECK(qa.space.n() == 4);
    CHECK(qa.space.type() == TypeTag::N0a);
    CHECK(inducedAlternatingDot(s, one));

    const Subspace pair = Subspace::span(MatrixGF(f, {{1, 1, 0, 0, 0, 0}}, 6));
    const auto qb = quotientSpace(s, pair);
    CHECK(qb.space.type() == TypeTag::N0na);
    CHECK_FALSE(inducedAlternatingDot(s, pair));

    // Lifting and projecting are mutually inverse.
    const Subspace line = Subspace::span(MatrixGF(f, {{1, 1, 0, 0}}, 4));
    const Subspace lifted = qb.liftSubspace(line);
    CHECK(lifted.dim() == 2);
    CHECK(qb.project(lifted) == line);

    const Subspace bad = Subspace::span(MatrixGF(f, {{1, 0, 0, 0, 0, 0}}, 6));
    CHECK(codeOf([&] { quotientSpace(s, bad); }) == ErrorCode::NotSelfOrthogonal);

    const auto s5 = standardDotSpace(FieldSpec(5), 4);
    const Subspace iso = Subspace::span(MatrixGF(s5.field(), {{1, 2, 0, 0}}, 4));
    const auto q5 = quotientSpace(s5, iso);
    CHECK(q5.space.type() == s5.type());
    CHECK(codeOf([&] { inducedAlternatingDot(s5, iso); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("isotropic hyperplane in characteristic two") {
    const auto s = standardDotSpace(FieldSpec(4), 5);
    const Subspace& h = s.isotropicHyperplane();
    CHECK(h.dim() == 4);
    for (std::size_t r = 0; r < h.dim(); ++r) CHECK(s.form(h.basis().row(r), h.basis().row(r)) == 0);
    CHECK(alternatingBlockSpace(FieldSpec(2), 4).isotropicHyperplane().dim() == 4);
    CHECK(codeOf([] { standardDotSpace(FieldSpec(3), 3).isotropicHyperplane(); }) == ErrorCode::PreconditionViolated);
}
