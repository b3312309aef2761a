#include "bilin/gf.hpp"

#include "bilin/error.hpp"

#include <string>

namespace bilin {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over F_p

Poly digits(std::uint32_t index, std::uint32_t p, unsigned e) {
    Poly out(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

std::uint32_t fromDigits(const Poly& d, std::uint32_t p) {
    std::uint32_t index = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) index = index * p + *it;
    return index;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t invModP(std::uint32_t a, std::uint32_t p) {
    std::uint32_t result = 1;
    std::uint32_t exponent = p - 2;
    std::uint64_t base = a;
    while (exponent != 0) {
        if (exponent & 1u) result = static_cast<std::uint32_t>(result * base % p);
        base = base * base % p;
        exponent >>= 1;
    }
    return result;
}

// Remainder of a modulo a nonzero polynomial m.
Poly polyMod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t leadInv = invModP(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t(a.back()) * leadInv % p);
        for (std::size_t i = 0; i <= dm; ++i) {
            std::uint64_t sub = std::uint64_t(factor) * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool isIrreducible(const Poly& f, std::uint32_t p) {
    const unsigned degree = static_cast<unsigned>(f.size() - 1);
    // Try every monic divisor of degree 1..degree/2.
    for (unsigned d = 1; d <= degree / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = digits(static_cast<std::uint32_t>(low), p, d);
            g.push_back(1);
            if (polyMod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly leastIrreducible(std::uint32_t p, unsigned e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f = digits(static_cast<std::uint32_t>(low), p, e);
        f.push_back(1);
        if (isIrreducible(f, p)) return f;
    }
    throw Error(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

Poly polyMulMod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    return polyMod(prod, m, p);
}

}  // namespace

bool primePowerDecompose(std::uint32_t q, std::uint32_t& p, unsigned& e) noexcept {
    if (q < 2) return false;
    std::uint32_t factor = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            factor = d;
            break;
        }
    }
    if (factor == 0) factor = q;
    unsigned exponent = 0;
    while (q % factor == 0) {
        q /= factor;
        ++exponent;
    }
    if (q != 1) return false;
    p = factor;
    e = exponent;
    return true;
}

FieldSpec::FieldSpec(std::uint32_t q) {
    if (q > kMaxFieldOrder) {
        throw Error(ErrorCode::OutOfRange, "field order " + std::to_string(q) + " exceeds 2^16");
    }
    auto t = std::make_shared<Tables>();
    if (!primePowerDecompose(q, t->p, t->e)) {
        throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    }
    t->q = q;
    const std::uint32_t p = t->p;
    const unsigned e = t->e;

    Poly modulus;
    if (e > 1) {
        modulus = leastIrreducible(p, e);
        t->modulus.assign(modulus.begin(), modulus.end() - 1);
    }

    t->negTable.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        Poly d = digits(a, p, e);
        for (auto& c : d) c = (p - c) % p;
        t->negTable[a] = static_cast<Element>(fromDigits(d, p));
    }

    auto slowMul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (e == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
        Poly r = polyMulMod(digits(a, p, e), digits(b, p, e), modulus, p);
        r.resize(e, 0);
        return fromDigits(r, p);
    };

    // Find a primitive element by brute force and build exp/log tables.
    t->exp.assign(q - 1, 0);
    t->log.assign(q, 0);
    for (std::uint32_t g = 1; g < q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t order = 0;
        do {
            t->exp[order] = static_cast<Element>(x);
            x = slowMul(x, g);
            ++order;
        } while (x != 1 && order < q - 1);
        if (x == 1 && order == q - 1) break;
    }
    for (std::uint32_t i = 0; i < q - 1; ++i) t->log[t->exp[i]] = i;

    t_ = t;
    if (q <= 256) {
        t->addTable.resize(std::size_t(q) * q);
        t->mulTable.resize(std::size_t(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                t->addTable[a * q + b] = addSlow(static_cast<Element>(a), static_cast<Element>(b));
                std::uint32_t prod = 0;
                if (a != 0 && b != 0) prod = t->exp[(t->log[a] + t->log[b]) % (q - 1)];
                t->mulTable[a * q + b] = static_cast<Element>(prod);
            }
        }
    }
}

Element FieldSpec::addSlow(Element a, Element b) const noexcept {
    const std::uint32_t p = t_->p;
    if (t_->e == 1) return static_cast<Element>((a + b) % p);
    if (p == 2) return static_cast<Element>(a ^ b);
    std::uint32_t x = a;
    std::uint32_t y = b;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < t_->e; ++i) {
        result += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
    }
    return static_cast<Element>(result);
}

Element FieldSpec::inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t order = t_->q - 1;
    return t_->exp[(order - t_->log[a]) % order];
}

Element FieldSpec::pow(Element a, std::uint64_t exponent) const noexcept {
    if (exponent == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = t_->q - 1;
    return t_->exp[(std::uint64_t(t_->log[a]) * (exponent % order)) % order];
}

bool FieldSpec::isSquare(Element a) const {
    if (a == 0) throw Error(ErrorCode::ZeroArgument, "zero is excluded from the nonzero squares");
    if (t_->p == 2) return true;
    return pow(a, (t_->q - 1) / 2) == 1;
}

}  // namespace bilin
