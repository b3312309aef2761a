#include "bilin/asymptotics.hpp"

#include "bilin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bilin {

namespace {

int choose2(int m) { return m * (m - 1) / 2; }

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

// The three classes that decide the dot-product type.
std::vector<Residue> classesOf(Residue r) {
    switch (r) {
        case Residue::Any: return {Residue::Even, Residue::OneMod4, Residue::ThreeMod4};
        case Residue::Odd: return {Residue::OneMod4, Residue::ThreeMod4};
        default: return {r};
    }
}

TypeTag dotTypeIn(Residue cls, int n) {
    switch (cls) {
        case Residue::Even: return n % 2 ? TypeTag::N1 : TypeTag::N0na;
        case Residue::OneMod4: return n % 2 ? TypeTag::P : TypeTag::H;
        default: return n % 2 ? TypeTag::P : (n % 4 == 0 ? TypeTag::H : TypeTag::E);
    }
}

// Smallest Witt index of (F_q^n, dot) over the classes covered by r.
int minDotWitt(Residue r, int n) {
    int w = n;
    for (Residue c : classesOf(r)) w = std::min(w, wittIndexOf(dotTypeIn(c, n), n));
    return w;
}

// Applies pick to every class covered by r and insists on one answer.
template <class Pick>
AsymptoticPrediction uniformOver(Residue r, Pick pick) {
    std::optional<AsymptoticPrediction> agreed;
    for (Residue c : classesOf(r)) {
        AsymptoticPrediction p = pick(c);
        if (agreed && (agreed->coefficient != p.coefficient || agreed->qExponent != p.qExponent ||
                       agreed->qMinusOneExponent != p.qMinusOneExponent || agreed->exact != p.exact ||
                       agreed->exactZero != p.exactZero)) {
            throw Error(ErrorCode::PreconditionViolated,
                        std::string("prediction depends on q beyond the residue class ") + residueName(r));
        }
        agreed = p;
    }
    agreed->residue = r;
    return *agreed;
}

AsymptoticPrediction power(Rational coefficient, int qExponent, Residue r = Residue::Any) {
    AsymptoticPrediction p;
    p.coefficient = std::move(coefficient);
    p.qExponent = qExponent;
    p.residue = r;
    return p;
}

AsymptoticPrediction exactZero(Residue r) {
    AsymptoticPrediction p;
    p.coefficient = 0;
    p.residue = r;
    p.exact = true;
    p.exactZero = true;
    return p;
}

}  // namespace

const char* residueName(Residue r) noexcept {
    switch (r) {
        case Residue::Any: return "any";
        case Residue::Even: return "even";
        case Residue::Odd: return "odd";
        case Residue::OneMod4: return "1mod4";
        case Residue::ThreeMod4: return "3mod4";
    }
    return "?";
}

std::optional<Residue> parseResidue(std::string_view name) noexcept {
    for (Residue r : {Residue::Any, Residue::Even, Residue::Odd, Residue::OneMod4, Residue::ThreeMod4}) {
        if (name == residueName(r)) return r;
    }
    return std::nullopt;
}

bool residueMatches(Residue r, std::uint32_t q) noexcept {
    switch (r) {
        case Residue::Any: return true;
        case Residue::Even: return q % 2 == 0;
        case Residue::Odd: return q % 2 == 1;
        case Residue::OneMod4: return q % 4 == 1;
        case Residue::ThreeMod4: return q % 4 == 3;
    }
    return false;
}

std::vector<std::uint32_t> defaultLadder(Residue r) {
    switch (r) {
        case Residue::Even: return {2, 4, 8, 16, 32};
        case Residue::ThreeMod4: return {3, 7, 11, 19, 23};
        case Residue::OneMod4:
        case Residue::Odd: return {5, 9, 13, 17, 25};
        case Residue::Any: return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    }
    return {};
}

Rational AsymptoticPrediction::evaluate(std::uint32_t q) const {
    if (exactZero) return 0;
    return coefficient * rpow(q, qExponent) * rpow(static_cast<std::int64_t>(q) - 1, qMinusOneExponent);
}

std::string AsymptoticPrediction::describe() const {
    if (exactZero) return "0 (exact)";
    std::ostringstream out;
    out << toString(coefficient);
    if (qExponent != 0) out << "*q^" << qExponent;
    if (qMinusOneExponent != 0) out << "*(q-1)^" << qMinusOneExponent;
    if (exact) out << " (exact)";
    return out.str();
}

AsymptoticPrediction predictSODensity(TypeTag type, int n, int k) {
    require(k >= 1 && k <= wittIndexOf(type, n), "predictSODensity needs 1 <= k <= w");
    const Residue r = typeNeedsOddQ(type) ? Residue::Odd : Residue::Even;
    if (type == TypeTag::N0a) return power(1, k - choose2(k + 1), r);
    const bool doubled = type == TypeTag::H && 2 * k == n;
    return power(doubled ? 2 : 1, -choose2(k + 1), r);
}

AsymptoticPrediction predictSigmaSO(Residue r, int n, int k) {
    require(k >= 1 && k <= minDotWitt(r, n), "predictSigmaSO needs 1 <= k <= w");
    return uniformOver(r, [&](Residue c) {
        const bool doubled = dotTypeIn(c, n) == TypeTag::H && 2 * k == n;
        return power(doubled ? 2 : 1, k * (n - k) - choose2(k + 1));
    });
}

AsymptoticPrediction predictZeta(Residue r, int n, int i) {
    require(i >= 1 && i <= n, "predictZeta needs 1 <= i <= n");
    if (i == 1) return exactZero(r);
    if (i > 2) return power(Rational(binomial(n, i)), i - 1, r);
    return uniformOver(r, [&](Residue c) {
        if (c == Residue::ThreeMod4) return exactZero(c);
        AsymptoticPrediction p = power(Rational(binomial(n, 2) * (c == Residue::OneMod4 ? 2 : 1)), 0);
        p.qMinusOneExponent = 1;
        p.exact = true;
        return p;
    });
}

AsymptoticPrediction predictAvgWeightSO(Residue r, int n, int k, int j) {
    require(j >= 2 && j <= n, "predictAvgWeightSO needs 2 <= j <= n");
    require(k >= 1 && k <= minDotWitt(r, n), "predictAvgWeightSO needs 1 <= k <= w");
    if (j > 2) return power(Rational(binomial(n, j)), j - n + k, r);
    return uniformOver(r, [&](Residue c) {
        if (c == Residue::ThreeMod4) return exactZero(c);
        return power(Rational(binomial(n, 2) * (c == Residue::OneMod4 ? 2 : 1)), 2 - n + k);
    });
}

AsymptoticPrediction predictAvgWeightUnrestricted(int n, int k, int j) {
    require(k >= 1 && k <= n && j >= 0 && j <= n, "predictAvgWeightUnrestricted needs 1 <= k <= n, 0 <= j <= n");
    if (j == 0) {
        AsymptoticPrediction p = power(1, 0);
        p.exact = true;
        return p;
    }
    return power(Rational(binomial(n, j)), j - n + k);
}

AsymptoticPrediction predictTau(int n, int k, int w) {
    require(k >= 1 && k <= w && 2 * w <= n, "predictTau needs 1 <= k <= w <= n/2");
    const bool doubled = 2 * k == n && k == w;
    return power(doubled ? 2 : 1, k * (n - k) - choose2(k + 1));
}

std::variant<AsymptoticPrediction, BoundsPair> predictNonMDSDensity(int n, int k, int d, Residue r) {
    require(d >= 4 && d < n, "predictNonMDSDensity needs 4 <= d < n");
    require(k >= 1 && k <= std::min(n - d + 1, minDotWitt(r, n)), "predictNonMDSDensity needs 1 <= k <= min(n-d+1, w)");
    if (k <= n - d) return power(Rational(binomial(n, d - 1)), d + k - n - 2, r);
    if (2 * k < n) return power(Rational(binomial(n, k)), -1, r);
    return BoundsPair{power(Rational(binomial(n, d - 2)), -2, r), power(Rational(binomial(n, d - 1)), -1, r)};
}

AsymptoticPrediction predictUnrestrictedNonMDSDensity(int n, int k, int d) {
    require(d >= 2 && d <= n, "predictUnrestrictedNonMDSDensity needs 2 <= d <= n");
    require(k >= 1 && k <= n - d + 1, "predictUnrestrictedNonMDSDensity needs 1 <= k <= n-d+1");
    return power(Rational(binomial(n, d - 1)), d + k - n - 2);
}

double deviation(const ConvergenceSample& s) {
    if (!s.ratio) return std::numeric_limits<double>::infinity();
    const Rational d = *s.ratio - 1;
    return std::fabs(static_cast<double>(d));
}

ConvergenceReport convergenceReport(const std::string& parameter, const std::function<Rational(std::uint32_t)>& exact,
                                    const AsymptoticPrediction& prediction, std::vector<std::uint32_t> qList) {
    for (auto q : qList) {
        if (!residueMatches(prediction.residue, q)) {
            throw Error(ErrorCode::ResidueMismatch, "q = " + std::to_string(q) + " is not in the class " +
                                                        residueName(prediction.residue));
        }
    }
    std::sort(qList.begin(), qList.end());
    ConvergenceReport report{parameter, {}, false};
    for (auto q : qList) {
        ConvergenceSample s{q, exact(q), prediction.evaluate(q), std::nullopt};
        if (s.predicted != 0) s.ratio = s.exact / s.predicted;
        report.samples.push_back(std::move(s));
    }
    const auto& ss = report.samples;
    if (prediction.exact) {
        report.verdict = std::all_of(ss.begin(), ss.end(), [](const auto& s) { return s.exact == s.predicted; });
    } else if (!ss.empty()) {
        const std::size_t m = ss.size();
        bool monotone = true;
        for (std::size_t i = m >= 3 ? m - 2 : 1; i < m; ++i) monotone = monotone && deviation(ss[i]) <= deviation(ss[i - 1]);
        report.verdict = monotone || deviation(ss.back()) < kConvergedThreshold;
    }
    return report;
}

std::string ConvergenceReport::toJson() const {
    nlohmann::ordered_json j;
    j["parameter"] = parameter;
    auto& arr = j["samples"] = nlohmann::json::array();
    for (const auto& s : samples) {
        nlohmann::ordered_json e;
        e["q"] = s.q;
        e["exact"] = toString(s.exact);
        e["predicted"] = toString(s.predicted);
        e["ratio"] = s.ratio ? nlohmann::ordered_json(toString(*s.ratio)) : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(e));
    }
    j["verdict"] = verdict;
    return j.dump();
}

}  // namespace bilin
