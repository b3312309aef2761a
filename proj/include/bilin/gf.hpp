#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace bilin {

/// A field element, stored as its index in [0, q). The base-p digits of the
/// index are the coefficients of the element in the polynomial basis
/// 1, x, ..., x^(e-1). Index 0 is zero and index 1 is one.
using Element = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Arithmetic in F_q for a prime power q <= 2^16.
///
/// The extension modulus is the monic irreducible polynomial of degree e whose
/// coefficient vector (c_0, ..., c_{e-1}), read as the base-p integer
/// sum c_i p^i, is smallest. Log/antilog tables are built at construction;
/// for q <= 256 full addition and multiplication tables are built as well.
///
/// Copies share the immutable tables, so a FieldSpec is cheap to pass by value
/// and safe to use from any number of threads.
class FieldSpec {
public:
    /// Throws NotAPrimePower or OutOfRange.
    explicit FieldSpec(std::uint32_t q);

    std::uint32_t q() const noexcept { return t_->q; }
    std::uint32_t p() const noexcept { return t_->p; }
    unsigned e() const noexcept { return t_->e; }
    /// Low coefficients c_0..c_{e-1} of the monic modulus; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

    Element add(Element a, Element b) const noexcept {
        if (!t_->addTable.empty()) return t_->addTable[a * t_->q + b];
        return addSlow(a, b);
    }
    Element neg(Element a) const noexcept { return t_->negTable[a]; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (!t_->mulTable.empty()) return t_->mulTable[a * t_->q + b];
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = t_->log[a] + t_->log[b];
        if (s >= t_->q - 1) s -= t_->q - 1;
        return t_->exp[s];
    }
    /// Throws DivisionByZero for a = 0.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t exponent) const noexcept;

    /// True iff a is a nonzero square. Throws ZeroArgument for a = 0.
    bool isSquare(Element a) const;

    /// A fixed generator of the multiplicative group.
    Element primitive() const noexcept { return t_->exp[1 % (t_->q - 1)]; }

    bool operator==(const FieldSpec& other) const noexcept { return q() == other.q(); }

private:
    struct Tables {
        std::uint32_t q = 0;
        std::uint32_t p = 0;
        unsigned e = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<Element> negTable;
        std::vector<Element> exp;
        std::vector<std::uint32_t> log;
        std::vector<Element> addTable;
        std::vector<Element> mulTable;
    };

    Element addSlow(Element a, Element b) const noexcept;

    std::shared_ptr<const Tables> t_;
};

/// Factor q as p^e; returns false if q is not a prime power (q >= 2).
bool primePowerDecompose(std::uint32_t q, std::uint32_t& p, unsigned& e) noexcept;

}  // namespace bilin
