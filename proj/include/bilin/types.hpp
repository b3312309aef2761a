#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bilin {

/// Classification of a finite bilinear space.
/// P/H/E: parabolic, hyperbolic, elliptic (odd q).
/// N1: odd n, N0a: alternating, N0na: even n and non-alternating (even q).
enum class TypeTag { P, H, E, N1, N0a, N0na };

const char* typeName(TypeTag t) noexcept;
std::optional<TypeTag> parseType(std::string_view name) noexcept;

bool typeNeedsOddQ(TypeTag t) noexcept;
/// True when a space of type t and dimension n can exist over F_q.
bool typeAdmissible(TypeTag t, std::uint32_t q, int n) noexcept;

/// Witt index determined by the type and dimension.
int wittIndexOf(TypeTag t, int n) noexcept;

/// Type of F_q^n with the standard dot product.
TypeTag dotType(std::uint32_t q, int n) noexcept;

inline int dotWittIndex(std::uint32_t q, int n) noexcept { return wittIndexOf(dotType(q, n), n); }

}  // namespace bilin
