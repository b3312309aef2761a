#include "bilin/types.hpp"

namespace bilin {

const char* typeName(TypeTag t) noexcept {
    switch (t) {
        case TypeTag::P: return "P";
        case TypeTag::H: return "H";
        case TypeTag::E: return "E";
        case TypeTag::N1: return "N1";
        case TypeTag::N0a: return "N0a";
        case TypeTag::N0na: return "N0na";
    }
    return "?";
}

std::optional<TypeTag> parseType(std::string_view name) noexcept {
    for (TypeTag t : {TypeTag::P, TypeTag::H, TypeTag::E, TypeTag::N1, TypeTag::N0a, TypeTag::N0na}) {
        if (name == typeName(t)) return t;
    }
    return std::nullopt;
}

bool typeNeedsOddQ(TypeTag t) noexcept { return t == TypeTag::P || t == TypeTag::H || t == TypeTag::E; }

bool typeAdmissible(TypeTag t, std::uint32_t q, int n) noexcept {
    if (n < 0) return false;
    const bool oddQ = (q % 2) == 1;
    if (typeNeedsOddQ(t) != oddQ) return false;
    switch (t) {
        case TypeTag::P:
        case TypeTag::N1: return n % 2 == 1;
        case TypeTag::H:
        case TypeTag::N0a: return n % 2 == 0;
        case TypeTag::E:
        case TypeTag::N0na: return n % 2 == 0 && n >= 2;
    }
    return false;
}

int wittIndexOf(TypeTag t, int n) noexcept {
    switch (t) {
        case TypeTag::P:
        case TypeTag::N1: return (n - 1) / 2;
        case TypeTag::H:
        case TypeTag::N0a:
        case TypeTag::N0na: return n / 2;
        case TypeTag::E: return n / 2 - 1;
    }
    return 0;
}

TypeTag dotType(std::uint32_t q, int n) noexcept {
    if (q % 2 == 0) return n % 2 == 0 ? TypeTag::N0na : TypeTag::N1;
    if (n % 2 == 1) return TypeTag::P;
    if (n % 4 == 0 || q % 4 == 1) return TypeTag::H;
    return TypeTag::E;
}

}  // namespace bilin
