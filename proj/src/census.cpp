#include "bilin/census.hpp"

#include "bilin/bilinear.hpp"
#include "bilin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace bilin {
namespace census {

namespace {

BigInt qp(std::uint32_t q, int e) {
    if (e < 0) throw Error(ErrorCode::InternalInconsistency, "negative exponent in an integer power");
    return ipow(BigInt(q), static_cast<unsigned>(e));
}

int choose2(int m) { return m * (m - 1) / 2; }

void requireK(int k, int n) {
    if (k < 0 || k > n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");
}

}  // namespace

BigInt gaussianBinomial(int n, int k, std::uint32_t q) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < k; ++i) {
        num *= qp(q, n - i) - 1;
        den *= qp(q, i + 1) - 1;
    }
    return exactDiv(num, den, "gaussianBinomial");
}

BigInt aFactor(int k, std::uint32_t q) {
    BigInt a = 1;
    for (int i = 1; i <= k; ++i) a *= qp(q, i) - 1;
    return a;
}

BigInt bFactor(int n, int k, std::uint32_t q) {
    BigInt b = 1;
    for (int i = 1; i <= k - 1; ++i) b *= qp(q, n - 2 * i) - 1;
    return b;
}

BigInt sigmaLines(TypeTag type, int n, int w, std::uint32_t q) {
    if (n < 1) throw Error(ErrorCode::PreconditionViolated, "sigmaLines needs n >= 1");
    switch (type) {
        case TypeTag::P:
        case TypeTag::H:
        case TypeTag::E:
            if (w == 0) return 0;
            return exactDiv((qp(q, w) - 1) * (qp(q, n - w - 1) + 1), BigInt(q - 1), "sigmaLines");
        case TypeTag::N0a: return exactDiv(qp(q, n) - 1, BigInt(q - 1), "sigmaLines");
        case TypeTag::N1:
        case TypeTag::N0na: return exactDiv(qp(q, n - 1) - 1, BigInt(q - 1), "sigmaLines");
    }
    return 0;
}

BigInt sigmaSO(TypeTag type, int n, int k, std::uint32_t q) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (k > wittIndexOf(type, n)) return 0;
    const BigInt a = aFactor(k, q);
    BigInt num = 1;
    switch (type) {
        case TypeTag::P:
        case TypeTag::N1:
            for (int i = 1; i <= k; ++i) num *= qp(q, n + 1 - 2 * i) - 1;
            break;
        case TypeTag::H:
        case TypeTag::E: {
            const int eps = type == TypeTag::H ? 1 : -1;
            num = qp(q, n - k) + eps * qp(q, n / 2) - eps * qp(q, n / 2 - k) - 1;
            num *= bFactor(n, k, q);
            break;
        }
        case TypeTag::N0a:
            for (int i = 1; i <= k; ++i) num *= qp(q, n - 2 * i + 2) - 1;
            break;
        case TypeTag::N0na:
            num = (qp(q, n - k) - 1) * bFactor(n, k, q);
            break;
    }
    return exactDiv(num, a, "sigmaSO");
}

BigInt sigmaSO(const BilinearSpace& s, int k) { return sigmaSO(s.type(), s.n(), k, s.field().q()); }

BigInt sigmaSORecursive(TypeTag type, int n, int k, std::uint32_t q) {
    if (type == TypeTag::N0na) {
        throw Error(ErrorCode::UnsupportedType, "the one-step recursion does not apply to N0na");
    }
    if (k < 0) return 0;
    const int w = wittIndexOf(type, n);
    BigInt sigma = 1;
    for (int j = 1; j <= k; ++j) {
        if (j > w) return 0;
        BigInt factor;
        switch (type) {
            case TypeTag::P:
            case TypeTag::H:
            case TypeTag::E: factor = (qp(q, w - j + 1) - 1) * (qp(q, n - j - w) + 1); break;
            case TypeTag::N0a: factor = qp(q, n - 2 * j + 2) - 1; break;
            case TypeTag::N1: factor = qp(q, n - 2 * j + 1) - 1; break;
            case TypeTag::N0na: break;
        }
        sigma = exactDiv(sigma * factor, qp(q, j) - 1, "sigmaSORecursive");
    }
    return sigma;
}

BigInt tau(int n, int k, int w, std::uint32_t q) {
    if (k < 0 || w < 0 || k > w || 2 * w > n) {
        throw Error(ErrorCode::PreconditionViolated, "tau needs 0 <= k <= w <= n/2");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= (qp(q, n - w - i) + 1) * (qp(q, w - i + 1) - 1);
        den *= qp(q, i) - 1;
    }
    return exactDiv(num, den, "tau");
}

BigInt sigmaEll(TypeTag type, int n, int k, int l, std::uint32_t q) {
    if (l < 0 || k < 0 || l > k || k > n) return 0;
    const int w = wittIndexOf(type, n);
    BigInt total = 0;
    for (int s = l; s <= w; ++s) {
        BigInt term = sigmaSO(type, n, s, q) * gaussianBinomial(s, l, q) * gaussianBinomial(n - 2 * s, k - s, q) *
                      qp(q, choose2(s - l));
        if ((s - l) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    if (total < 0) throw Error(ErrorCode::InternalInconsistency, "negative sigmaEll");
    return total;
}

BigInt sigmaEll(const BilinearSpace& s, int k, int l) { return sigmaEll(s.type(), s.n(), k, l, s.field().q()); }

BigInt cumulativeRadicalDim(TypeTag type, int n, int k, std::uint32_t q) {
    requireK(k, n);
    BigInt total = 0;
    for (int l = 1; l <= k; ++l) total += l * sigmaEll(type, n, k, l, q);
    return total;
}

BigInt countAlternatingInduced(int n, int k, std::uint32_t q) {
    if (dotType(q, n) != TypeTag::N0na) {
        throw Error(ErrorCode::UnsupportedType, "alternating-induced count needs q and n even");
    }
    if (k < 1 || k > n / 2) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= n/2");
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= k - 1; ++i) {
        num *= qp(q, n - 2 * i) - 1;
        den *= qp(q, i) - 1;
    }
    return exactDiv(num, den, "countAlternatingInduced");
}

BigInt countSOContaining(TypeTag type, int n, int k, int t, bool containsAllOne, std::uint32_t q) {
    const int w = wittIndexOf(type, n);
    if (t < 0 || t > k || k > w) throw Error(ErrorCode::PreconditionViolated, "need 0 <= t <= k <= w");
    if (containsAllOne && (type != TypeTag::N0na || t == 0)) {
        throw Error(ErrorCode::PreconditionViolated, "the all-one case needs type N0na and t >= 1");
    }
    switch (type) {
        case TypeTag::P:
        case TypeTag::H:
        case TypeTag::E:
        case TypeTag::N1: return tau(n - 2 * t, k - t, w - t, q);
        case TypeTag::N0a: return sigmaSO(TypeTag::N0a, n - 2 * t, k - t, q);
        case TypeTag::N0na:
            if (containsAllOne) return sigmaSO(TypeTag::N1, n - 2 * t + 1, k - t, q);
            return sigmaSO(TypeTag::N0na, n - 2 * t, k - t, q);
    }
    return 0;
}

BigInt deltaCoeff(TypeTag type, int n, int k, int i, std::uint32_t q) {
    const int w = wittIndexOf(type, n);
    if (k < 1 || k > w || i < 0 || i > k) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= w, 0 <= i <= k");
    if (type == TypeTag::N0a) throw Error(ErrorCode::UnsupportedType, "delta is defined for dot-product types");
    if (type == TypeTag::N0na) return sigmaSO(TypeTag::N0na, n - 2 * i, k - i, q);
    return tau(n - 2 * i, k - i, w - i, q);
}

BigInt countSOMeetingCoordinate(int n, int k, int t, std::uint32_t q) {
    const TypeTag type = dotType(q, n);
    if (t < 1 || t >= n) throw Error(ErrorCode::PreconditionViolated, "need 1 <= t < n");
    if (k < 1 || k > wittIndexOf(type, n)) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= w");
    const TypeTag subType = dotType(q, t);
    const int top = std::min(k, wittIndexOf(subType, t));
    BigInt total = 0;
    for (int i = 1; i <= top; ++i) {
        BigInt term = sigmaSO(subType, t, i, q) * deltaCoeff(type, n, k, i, q) * qp(q, choose2(i));
        if ((i - 1) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace census

std::string censusEntryToJson(const CensusEntry& e) {
    nlohmann::ordered_json j;
    j["q"] = e.q;
    j["type"] = typeName(e.type);
    j["n"] = e.n;
    j["k"] = e.k;
    j["l"] = e.l;
    j["count"] = e.count.str();
    return j.dump();
}

CensusEntry censusEntryFromJson(const std::string& line) {
    try {
        const auto j = nlohmann::json::parse(line);
        CensusEntry e;
        e.q = j.at("q").get<std::uint32_t>();
        const auto type = parseType(j.at("type").get<std::string>());
        if (!type) throw Error(ErrorCode::ParseError, "unknown type tag");
        e.type = *type;
        e.n = j.at("n").get<int>();
        e.k = j.at("k").get<int>();
        e.l = j.at("l").get<int>();
        e.count = BigInt(j.at("count").get<std::string>());
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    } catch (const std::runtime_error& ex) {
        if (auto* err = dynamic_cast<const Error*>(&ex)) throw *err;
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

void CensusCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    std::lock_guard lock(mutex_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const CensusEntry e = censusEntryFromJson(line);
            entries_.emplace(Key{e.q, static_cast<int>(e.type), e.n, e.k, e.l}, e.count);
        } catch (const Error&) {
            // A corrupt line only costs a recomputation.
        }
    }
}

void CensusCache::save(const std::filesystem::path& path) const {
    std::lock_guard lock(mutex_);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error(ErrorCode::OutOfRange, "cannot write cache file " + tmp);
        for (const auto& [key, count] : entries_) {
            const auto& [q, type, n, k, l] = key;
            out << censusEntryToJson(CensusEntry{q, static_cast<TypeTag>(type), n, k, l, count}) << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

BigInt CensusCache::sigmaEll(TypeTag type, int n, int k, int l, std::uint32_t q) {
    const Key key{q, static_cast<int>(type), n, k, l};
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) {
            ++hits_;
            return it->second;
        }
    }
    BigInt value = census::sigmaEll(type, n, k, l, q);
    std::lock_guard lock(mutex_);
    entries_.emplace(key, value);
    return value;
}

std::size_t CensusCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::size_t CensusCache::hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
}

}  // namespace bilin
