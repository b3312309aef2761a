#pragma once

#include "bilin/bigint.hpp"
#include "bilin/bilinear.hpp"

#include <cstdint>
#include <random>

namespace bilin {

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::uint64_t maxRejections = 1'000'000;
};

/// Random source for the samplers. Not shared between threads; equal seeds
/// give identical draw sequences.
class Sampler {
public:
    explicit Sampler(SamplerConfig config = {}) : config_(config), engine_(config.seed) {}

    const SamplerConfig& config() const noexcept { return config_; }

    Element element(const FieldSpec& f) { return static_cast<Element>(below(f.q())); }
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [0, bound) for bound >= 1.
    BigInt below(const BigInt& bound);

private:
    SamplerConfig config_;
    std::mt19937_64 engine_;
};

/// Uniform over all k-subspaces of F_q^n.
Subspace sampleUniformSubspace(const FieldSpec& f, int n, int k, Sampler& rng);

/// Uniform over the self-orthogonal k-subspaces of s, by growing a chain one
/// isotropic line at a time. Lines are weighted by how many self-orthogonal
/// completions they admit, which only differs between lines when the current
/// quotient is of type N0na. Throws PreconditionViolated for k > w.
Subspace sampleSelfOrthogonal(const BilinearSpace& s, int k, Sampler& rng);

/// Uniform over k-subspaces C with dim(C ∩ C^⊥) = l, by rejection from the
/// uniform subspace sampler (l = k uses sampleSelfOrthogonal).
/// Throws EmptyStratum or MaxRejectionsExceeded.
Subspace sampleEllComplementary(const BilinearSpace& s, int k, int l, Sampler& rng);

}  // namespace bilin
