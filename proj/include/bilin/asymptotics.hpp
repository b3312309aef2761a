#pragma once

#include "bilin/bigint.hpp"
#include "bilin/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bilin {

/// Class of q a prediction is stated for. Odd covers every odd q.
enum class Residue { Any, Even, Odd, OneMod4, ThreeMod4 };

const char* residueName(Residue r) noexcept;
std::optional<Residue> parseResidue(std::string_view name) noexcept;
bool residueMatches(Residue r, std::uint32_t q) noexcept;
/// Default ladders: even 2..32, 1 mod 4 and odd 5..25, 3 mod 4 3..23.
std::vector<std::uint32_t> defaultLadder(Residue r);

/// Leading term coefficient * q^qExponent * (q-1)^qMinusOneExponent.
/// exact marks a closed formula rather than an asymptotic one; exactZero
/// implies exact with coefficient 0.
struct AsymptoticPrediction {
    Rational coefficient = 1;
    int qExponent = 0;
    int qMinusOneExponent = 0;
    Residue residue = Residue::Any;
    bool exact = false;
    bool exactZero = false;

    Rational evaluate(std::uint32_t q) const;
    std::string describe() const;
};

/// Only the limsup is bounded; no point prediction exists.
struct BoundsPair {
    AsymptoticPrediction lower;
    AsymptoticPrediction upper;
};

/// Proportion of self-orthogonal k-subspaces among all k-subspaces.
AsymptoticPrediction predictSODensity(TypeTag type, int n, int k);
/// sigma_q(n,k) for the dot product.
AsymptoticPrediction predictSigmaSO(Residue r, int n, int k);
AsymptoticPrediction predictZeta(Residue r, int n, int i);
/// Average number of weight-j words in a self-orthogonal [n,k]_q code.
AsymptoticPrediction predictAvgWeightSO(Residue r, int n, int k, int j);
/// Average number of weight-j words in an arbitrary [n,k]_q code.
AsymptoticPrediction predictAvgWeightUnrestricted(int n, int k, int j);
AsymptoticPrediction predictTau(int n, int k, int w);
/// Proportion of self-orthogonal [n,k]_q codes with d(C) <= d-1.
std::variant<AsymptoticPrediction, BoundsPair> predictNonMDSDensity(int n, int k, int d, Residue r);
/// Proportion of all [n,k]_q codes with d(C) <= d-1.
AsymptoticPrediction predictUnrestrictedNonMDSDensity(int n, int k, int d);

struct ConvergenceSample {
    std::uint32_t q;
    Rational exact;
    Rational predicted;
    std::optional<Rational> ratio;  // absent when predicted = 0
};

struct ConvergenceReport {
    std::string parameter;
    std::vector<ConvergenceSample> samples;
    bool verdict = false;

    std::string toJson() const;
};

/// Deviation below which a ratio counts as converged.
inline constexpr double kConvergedThreshold = 1e-9;

/// Tabulates exact/predicted over qList (sorted on output). The verdict holds
/// iff |ratio - 1| is non-increasing over the last three samples or already
/// below kConvergedThreshold; for exact predictions it holds iff every value
/// matches. Throws ResidueMismatch.
ConvergenceReport convergenceReport(const std::string& parameter, const std::function<Rational(std::uint32_t)>& exact,
                                    const AsymptoticPrediction& prediction, std::vector<std::uint32_t> qList);

/// |ratio - 1| of a sample; infinite when the ratio is absent.
double deviation(const ConvergenceSample& s);

}  // namespace bilin
