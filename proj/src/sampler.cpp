#include "bilin/sampler.hpp"

#include "bilin/census.hpp"
#include "bilin/error.hpp"

#include <sstream>

namespace bilin {

namespace {

[[noreturn]] void tooManyRejections(const char* what, std::uint64_t tries, std::uint64_t accepted) {
    std::ostringstream msg;
    msg << what << ": no acceptance after " << tries << " trials (acceptance rate "
        << static_cast<double>(accepted) / static_cast<double>(tries ? tries : 1) << ")";
    throw Error(ErrorCode::MaxRejectionsExceeded, msg.str());
}

Vector randomVector(const FieldSpec& f, int n, Sampler& rng) {
    Vector v(n);
    for (auto& x : v) x = rng.element(f);
    return v;
}

bool isZero(const Vector& v) {
    for (Element x : v) {
        if (x != 0) return false;
    }
    return true;
}

// Uniform nonzero isotropic vector of s outside the line spanned by avoid
// (avoid may be empty).
Vector isotropicVector(const BilinearSpace& s, const Subspace* avoid, Sampler& rng) {
    const auto& f = s.field();
    for (std::uint64_t t = 0; t < rng.config().maxRejections; ++t) {
        Vector v = randomVector(f, s.n(), rng);
        if (isZero(v) || s.form(v, v) != 0) continue;
        if (avoid && avoid->containsVector(v)) continue;
        return v;
    }
    tooManyRejections("isotropic vector", rng.config().maxRejections, 0);
}

}  // namespace

std::uint64_t Sampler::below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

BigInt Sampler::below(const BigInt& bound) {
    if (bound < 1) throw Error(ErrorCode::PreconditionViolated, "random bound must be positive");
    const unsigned bits = static_cast<unsigned>(msb(bound)) + 1;
    while (true) {
        BigInt x = 0;
        for (unsigned got = 0; got < bits; got += 64) x = (x << 64) | BigInt(engine_());
        x &= (BigInt(1) << bits) - 1;
        if (x < bound) return x;
    }
}

Subspace sampleUniformSubspace(const FieldSpec& f, int n, int k, Sampler& rng) {
    if (k < 0 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");
    for (std::uint64_t t = 0; t < rng.config().maxRejections; ++t) {
        MatrixGF m(f, k, n);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < n; ++c) m(r, c) = rng.element(f);
        }
        if (static_cast<int>(rank(m)) == k) return Subspace::span(m);
    }
    tooManyRejections("uniform subspace", rng.config().maxRejections, 0);
}

Subspace sampleSelfOrthogonal(const BilinearSpace& s, int k, Sampler& rng) {
    const auto& f = s.field();
    if (k < 0 || k > s.witt()) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= w");
    Subspace u = Subspace::zero(f, s.n());
    for (int t = 0; t < k; ++t) {
        const QuotientSpace quo = quotientSpace(s, u);
        const BilinearSpace& qs = quo.space;
        const int m = qs.n();
        Vector line;
        if (qs.type() == TypeTag::N0na) {
            // The characteristic line z (B(v,v) = B(v,z)^2) is the only
            // isotropic line whose quotient is alternating.
            const Subspace z = orthogonal(qs, qs.isotropicHyperplane());
            const auto zv = z.basis().row(0);
            if (qs.form(zv, zv) != 0) throw Error(ErrorCode::InternalInconsistency, "characteristic vector not isotropic");
            const int rest = k - t - 1;
            const BigInt wz = census::sigmaSO(TypeTag::N0a, m - 2, rest, f.q());
            const BigInt others = census::sigmaLines(TypeTag::N0na, m, qs.witt(), f.q()) - 1;
            const BigInt wOther = others * census::sigmaSO(TypeTag::N0na, m - 2, rest, f.q());
            if (rng.below(BigInt(wz + wOther)) < wz) {
                line.assign(zv.begin(), zv.end());
            } else {
                line = isotropicVector(qs, &z, rng);
            }
        } else {
            line = isotropicVector(qs, nullptr, rng);
        }
        MatrixGF gen(f, 1, m);
        for (int c = 0; c < m; ++c) gen(0, c) = line[c];
        u = quo.liftSubspace(Subspace::span(gen));
    }
    if (static_cast<int>(u.dim()) != k || !isSelfOrthogonal(s, u)) {
        throw Error(ErrorCode::InternalInconsistency, "self-orthogonal sampler produced an invalid subspace");
    }
    return u;
}

Subspace sampleEllComplementary(const BilinearSpace& s, int k, int l, Sampler& rng) {
    if (k < 0 || k > s.n()) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");
    if (l < 0 || l > k || census::sigmaEll(s, k, l) == 0) {
        throw Error(ErrorCode::EmptyStratum, "no " + std::to_string(k) + "-subspace has radical dimension " +
                                                 std::to_string(l));
    }
    if (l == k) return sampleSelfOrthogonal(s, k, rng);
    const std::uint64_t cap = rng.config().maxRejections;
    for (std::uint64_t t = 0; t < cap; ++t) {
        Subspace c = sampleUniformSubspace(s.field(), s.n(), k, rng);
        if (complIndex(s, c) == l) return c;
    }
    tooManyRejections("l-complementary subspace", cap, 0);
}

}  // namespace bilin
