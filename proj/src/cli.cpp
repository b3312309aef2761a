#include "bilin/cli.hpp"

#include "bilin/asymptotics.hpp"
#include "bilin/census.hpp"
#include "bilin/error.hpp"
#include "bilin/oracle.hpp"
#include "bilin/sampler.hpp"
#include "bilin/weights.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace bilin {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TypeTag requireType(const std::string& name) {
    const auto t = parseType(name);
    if (!t) throw Error(ErrorCode::ParseError, "unknown type '" + name + "'");
    return *t;
}

Residue requireResidue(const std::string& name) {
    const auto r = parseResidue(name);
    if (!r) throw Error(ErrorCode::ParseError, "unknown residue '" + name + "' (any, even, odd, 1mod4, 3mod4)");
    return *r;
}

std::vector<std::uint32_t> parseLadder(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad ladder entry '" + item + "'");
        }
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty ladder");
    return out;
}

// --- census ---------------------------------------------------------------

struct CensusArgs {
    std::uint32_t q = 0;
    int n = 0;
    int k = 0;
    std::optional<int> l;
    std::string type;
    std::string format = "json";
    std::string cache;
};

int runCensus(const CensusArgs& a, std::ostream& out) {
    const FieldSpec field(a.q);
    const TypeTag type = a.type.empty() ? dotType(a.q, a.n) : requireType(a.type);
    if (!typeAdmissible(type, a.q, a.n)) {
        throw Error(ErrorCode::PreconditionViolated, std::string("type ") + typeName(type) + " does not occur for q=" +
                                                         std::to_string(a.q) + ", n=" + std::to_string(a.n));
    }
    if (a.n < 0 || a.k < 0 || a.k > a.n) throw Error(ErrorCode::PreconditionViolated, "need 0 <= k <= n");

    std::string cachePath = a.cache;
    if (const char* env = std::getenv("BILINEAR_CENSUS_CACHE"); env && *env) cachePath = env;
    CensusCache cache;
    if (!cachePath.empty()) cache.load(cachePath);

    if (a.format == "csv") out << "q,type,n,k,l,count\n";
    const int lo = a.l ? *a.l : 0;
    const int hi = a.l ? *a.l : a.k;
    for (int l = lo; l <= hi; ++l) {
        const CensusEntry e{a.q, type, a.n, a.k, l, cache.sigmaEll(type, a.n, a.k, l, a.q)};
        if (a.format == "csv") {
            out << e.q << ',' << typeName(e.type) << ',' << e.n << ',' << e.k << ',' << e.l << ',' << e.count << '\n';
        } else {
            out << censusEntryToJson(e) << '\n';
        }
    }
    if (!cachePath.empty()) cache.save(cachePath);
    return kExitOk;
}

// --- weights --------------------------------------------------------------

struct WeightsArgs {
    std::uint32_t q = 0;
    int n = 0;
    int k = 0;
    int l = 0;
    std::string format = "csv";
};

int runWeights(const WeightsArgs& a, std::ostream& out) {
    FieldSpec field(a.q);
    const AggregateWeightTable t = aggregateEll(a.q, a.n, a.k, a.l);
    if (a.format == "json") {
        out << aggregateTableToJson(t) << '\n';
    } else {
        out << aggregateTableToCsv(t);
    }
    return kExitOk;
}

// --- asymptotics ----------------------------------------------------------

struct AsymArgs {
    std::string target;
    int n = 0;
    int k = 0;
    std::optional<int> d;
    std::optional<int> i;
    std::optional<int> j;
    std::optional<int> w;
    std::string type;
    std::string residue;
    std::string ladder;
};

Rational lowDistanceDensity(std::uint32_t q, int n, int k, int d) {
    if (k == 1) {
        BigInt low = 0;
        for (int i = 1; i <= d - 1; ++i) low += zeta(q, n, i);
        return Rational(exactDiv(low, BigInt(q - 1), "low-distance lines"), census::sigmaSO(dotType(q, n), n, 1, q));
    }
    const LowDistanceCount c = oracleLowDistanceSOCount(q, n, k, d);
    return Rational(c.low, c.total);
}

Rational unrestrictedLowDistanceDensity(std::uint32_t q, int n, int k, int d) {
    if (k != 1) throw Error(ErrorCode::PreconditionViolated, "exact unrestricted density is available for k = 1 only");
    BigInt low = 0;
    for (int i = 1; i <= d - 1; ++i) low += binomial(n, i) * ipow(BigInt(q - 1), static_cast<unsigned>(i));
    return Rational(exactDiv(low, BigInt(q - 1), "low-weight lines"), census::gaussianBinomial(n, 1, q));
}

int runAsymptotics(const AsymArgs& a, std::ostream& out) {
    auto need = [](const std::optional<int>& v, const char* flag) {
        if (!v) throw Error(ErrorCode::ParseError, std::string("missing --") + flag);
        return *v;
    };
    const int n = a.n;
    const int k = a.k;
    std::optional<Residue> residue;
    if (!a.residue.empty()) residue = requireResidue(a.residue);
    auto res = [&]() {
        if (!residue) throw Error(ErrorCode::ParseError, "missing --residue");
        return *residue;
    };

    AsymptoticPrediction p;
    std::function<Rational(std::uint32_t)> exact;
    std::ostringstream label;
    label << a.target << " n=" << n << " k=" << k;

    if (a.target == "so-density") {
        TypeTag type;
        if (!a.type.empty()) {
            type = requireType(a.type);
        } else {
            const std::uint32_t probe = defaultLadder(res()).front();
            type = dotType(probe, n);
            for (auto q : defaultLadder(res())) {
                if (dotType(q, n) != type) throw Error(ErrorCode::ParseError, "--type needed: the dot type varies in this class");
            }
        }
        p = predictSODensity(type, n, k);
        if (residue && *residue != p.residue && !(p.residue == Residue::Odd && (*residue == Residue::OneMod4 || *residue == Residue::ThreeMod4))) {
            throw Error(ErrorCode::ResidueMismatch, "residue does not match the type");
        }
        if (residue) p.residue = *residue;
        label << " type=" << typeName(type);
        exact = [=](std::uint32_t q) {
            return Rational(census::sigmaSO(type, n, k, q), census::gaussianBinomial(n, k, q));
        };
    } else if (a.target == "sigma") {
        p = predictSigmaSO(res(), n, k);
        exact = [=](std::uint32_t q) { return Rational(census::sigmaSO(dotType(q, n), n, k, q)); };
    } else if (a.target == "zeta") {
        const int i = need(a.i, "i");
        p = predictZeta(res(), n, i);
        label << " i=" << i;
        exact = [=](std::uint32_t q) { return Rational(zeta(q, n, i)); };
    } else if (a.target == "avg-weight") {
        const int j = need(a.j, "j");
        p = predictAvgWeightSO(res(), n, k, j);
        label << " j=" << j;
        exact = [=](std::uint32_t q) {
            const auto agg = aggregateSO(q, n, k);
            return Rational(agg[j], agg[0]);
        };
    } else if (a.target == "avg-weight-unrestricted") {
        const int j = need(a.j, "j");
        p = predictAvgWeightUnrestricted(n, k, j);
        label << " j=" << j;
        exact = [=](std::uint32_t q) {
            return Rational(unrestrictedAggregate(q, n, k, j), census::gaussianBinomial(n, k, q));
        };
    } else if (a.target == "tau") {
        const int w = need(a.w, "w");
        p = predictTau(n, k, w);
        label << " w=" << w;
        exact = [=](std::uint32_t q) { return Rational(census::tau(n, k, w, q)); };
    } else if (a.target == "non-mds") {
        const int d = need(a.d, "d");
        const auto v = predictNonMDSDensity(n, k, d, res());
        if (std::holds_alternative<BoundsPair>(v)) {
            throw Error(ErrorCode::PreconditionViolated, "only bounds are known for k = n-d+1 = n/2");
        }
        p = std::get<AsymptoticPrediction>(v);
        label << " d=" << d;
        exact = [=](std::uint32_t q) { return lowDistanceDensity(q, n, k, d); };
    } else if (a.target == "non-mds-unrestricted") {
        const int d = need(a.d, "d");
        p = predictUnrestrictedNonMDSDensity(n, k, d);
        label << " d=" << d;
        exact = [=](std::uint32_t q) { return unrestrictedLowDistanceDensity(q, n, k, d); };
    } else {
        throw Error(ErrorCode::ParseError, "unknown target '" + a.target + "'");
    }
    if (residue && p.residue == Residue::Any) p.residue = *residue;
    label << " residue=" << residueName(p.residue) << " prediction=" << p.describe();
    const auto ladder = a.ladder.empty() ? defaultLadder(p.residue) : parseLadder(a.ladder);
    for (auto q : ladder) FieldSpec check(q);
    out << convergenceReport(label.str(), exact, p, ladder).toJson() << '\n';
    return kExitOk;
}

// --- verify ---------------------------------------------------------------

class Checker {
public:
    explicit Checker(std::ostream& out) : out_(out) {}

    void check(const std::string& name, const std::string& params, const BigInt& formula, const BigInt& oracle) {
        const bool ok = formula == oracle;
        failures_ += !ok;
        out_ << (ok ? "PASS " : "FAIL ") << name << ' ' << params << " formula=" << formula << " oracle=" << oracle << '\n';
    }

    int failures() const noexcept { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

std::string kl(int k, int l) { return "k=" + std::to_string(k) + " l=" + std::to_string(l); }

void verifySpace(const BilinearSpace& s, const std::string& label, Checker& c) {
    const std::uint32_t q = s.field().q();
    const int n = s.n();
    c.check("witt", label, wittIndexFormula(s), oracleWittIndex(s));
    for (int k = 0; k <= n; ++k) {
        const auto h = oracleSigmaEllHistogram(s, k);
        BigInt total = 0;
        for (int l = 0; l <= k; ++l) {
            c.check("sigmaEll", label + " " + kl(k, l), census::sigmaEll(s, k, l), h[l]);
            total += census::sigmaEll(s, k, l);
        }
        c.check("partition", label + " k=" + std::to_string(k), total, census::gaussianBinomial(n, k, q));
        BigInt cumulative = 0;
        for (int l = 0; l <= k; ++l) cumulative += h[l] * l;
        c.check("cumulativeRadical", label + " k=" + std::to_string(k), census::cumulativeRadicalDim(s.type(), n, k, q),
                cumulative);
        if (s.type() != TypeTag::N0na) {
            c.check("recursion", label + " k=" + std::to_string(k), census::sigmaSORecursive(s.type(), n, k, q),
                    census::sigmaSO(s, k));
        }
    }
}

void verifyDot(std::uint32_t q, int n, Checker& c) {
    const std::string label = "dot q=" + std::to_string(q) + " n=" + std::to_string(n);
    const auto z = oracleZetaAll(q, n);
    for (int i = 0; i <= n; ++i) c.check("zeta", label + " i=" + std::to_string(i), zeta(q, n, i), z[i]);
    for (int k = 1; k <= n; ++k) {
        for (int l = 0; l <= k; ++l) {
            const auto t = aggregateEll(q, n, k, l);
            const auto o = oracleAggregateWeights(q, n, k, l);
            for (int i = 0; i <= n; ++i) {
                c.check("aggregateWeights", label + " " + kl(k, l) + " i=" + std::to_string(i), t.aggregate[i], o[i]);
            }
        }
    }
    const int w = dotWittIndex(q, n);
    for (int k = 1; k <= w; ++k) {
        const auto all = oracleMeetingCoordinateAll(q, n, k);
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
            const int t = std::popcount(mask);
            c.check("meetingCoordinate", label + " k=" + std::to_string(k) + " S=" + std::to_string(mask),
                    census::countSOMeetingCoordinate(n, k, t, q), all[mask]);
        }
    }
    if (dotType(q, n) == TypeTag::N0na) {
        for (int k = 1; k <= w; ++k) {
            c.check("alternatingInduced", label + " k=" + std::to_string(k), census::countAlternatingInduced(n, k, q),
                    oracleAlternatingInduced(q, n, k));
        }
    }
}

int runVerify(std::uint32_t q, int n, const std::string& gramFile, std::ostream& out) {
    const FieldSpec field(q);
    Checker c(out);
    if (!gramFile.empty()) {
        const BilinearSpace s = spaceFromJson(readFile(gramFile), q);
        if (s.field().q() != q) throw Error(ErrorCode::ParseError, "Gram file field differs from --q");
        verifySpace(s, "gram q=" + std::to_string(q) + " n=" + std::to_string(s.n()), c);
    } else {
        if (n < 1) throw Error(ErrorCode::PreconditionViolated, "need n >= 1");
        verifySpace(standardDotSpace(field, n), "dot q=" + std::to_string(q) + " n=" + std::to_string(n), c);
        if (q % 2 == 0 && n % 2 == 0) {
            verifySpace(alternatingBlockSpace(field, n), "alternating q=" + std::to_string(q) + " n=" + std::to_string(n), c);
        }
        verifyDot(q, n, c);
    }
    out << (c.failures() == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(c.failures())) << '\n';
    return c.failures() == 0 ? kExitOk : kExitMismatch;
}

// --- sample ---------------------------------------------------------------

struct SampleArgs {
    std::uint32_t q = 0;
    int n = 0;
    int k = 0;
    std::optional<int> l;
    int count = 1;
    std::uint64_t seed = 0;
    std::string gram;
};

int runSample(const SampleArgs& a, std::ostream& out) {
    const FieldSpec field(a.q);
    const BilinearSpace s = a.gram.empty() ? standardDotSpace(field, a.n) : spaceFromJson(readFile(a.gram), a.q);
    if (a.count < 0) throw Error(ErrorCode::PreconditionViolated, "--count must be nonnegative");
    Sampler rng(SamplerConfig{a.seed});
    const int l = a.l.value_or(a.k);
    for (int i = 0; i < a.count; ++i) {
        const Subspace c = sampleEllComplementary(s, a.k, l, rng);
        out << matrixToJson(c.basis(), "generator") << '\n';
    }
    return kExitOk;
}

// --- classify -------------------------------------------------------------

int runClassify(const std::string& gramFile, std::optional<std::uint32_t> q, std::ostream& out) {
    const std::string text = readFile(gramFile);
    const BilinearSpace s = q ? spaceFromJson(text, *q) : spaceFromJson(text);
    out << "{\"type\":\"" << typeName(s.type()) << "\",\"witt\":" << s.witt()
        << ",\"discriminantSquare\":" << (discriminantIsSquare(s) ? "true" : "false") << "}\n";
    return kExitOk;
}

int statusFor(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded: return kExitBudget;
        case ErrorCode::NotAPrimePower:
        case ErrorCode::OutOfRange:
        case ErrorCode::PreconditionViolated:
        case ErrorCode::UnsupportedType:
        case ErrorCode::ParseError:
        case ErrorCode::ResidueMismatch:
        case ErrorCode::EmptyStratum:
        case ErrorCode::NotSymmetric:
        case ErrorCode::Degenerate:
        case ErrorCode::DimensionMismatch: return kExitInvalidFlags;
        default: return kExitFailure;
    }
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts, weight tables, asymptotics and sampling for codes in finite bilinear spaces",
                 "bilincensus"};
    app.require_subcommand(1);

    CensusArgs census;
    auto* cmdCensus = app.add_subcommand("census", "sigma(n,k,l) for each l, or one l");
    cmdCensus->add_option("--q", census.q, "field order")->required();
    cmdCensus->add_option("--n", census.n, "length")->required();
    cmdCensus->add_option("--k", census.k, "dimension")->required();
    cmdCensus->add_option("--l", census.l, "radical dimension");
    cmdCensus->add_option("--type", census.type, "P, H, E, N1, N0a or N0na (default: dot product)");
    cmdCensus->add_option("--format", census.format)->check(CLI::IsMember({"json", "csv"}));
    cmdCensus->add_option("--cache", census.cache, "JSON-lines cache file");

    WeightsArgs weights;
    auto* cmdWeights = app.add_subcommand("weights", "aggregate and average weight distribution");
    cmdWeights->add_option("--q", weights.q)->required();
    cmdWeights->add_option("--n", weights.n)->required();
    cmdWeights->add_option("--k", weights.k)->required();
    cmdWeights->add_option("--l", weights.l)->required();
    cmdWeights->add_option("--format", weights.format)->check(CLI::IsMember({"json", "csv"}));

    AsymArgs asym;
    auto* cmdAsym = app.add_subcommand("asymptotics", "exact/predicted ratios along a q-ladder");
    cmdAsym->add_option("--target", asym.target)
        ->required()
        ->check(CLI::IsMember({"so-density", "sigma", "zeta", "avg-weight", "avg-weight-unrestricted", "tau", "non-mds",
                               "non-mds-unrestricted"}));
    cmdAsym->add_option("--n", asym.n)->required();
    cmdAsym->add_option("--k", asym.k);
    cmdAsym->add_option("--d", asym.d);
    cmdAsym->add_option("--i", asym.i, "weight for zeta");
    cmdAsym->add_option("--j", asym.j, "weight for avg-weight");
    cmdAsym->add_option("--w", asym.w, "Witt index for tau");
    cmdAsym->add_option("--type", asym.type);
    cmdAsym->add_option("--residue", asym.residue, "any, even, odd, 1mod4 or 3mod4");
    cmdAsym->add_option("--ladder", asym.ladder, "comma-separated q values");

    std::uint32_t verifyQ = 0;
    int verifyN = 0;
    std::string verifyGram;
    auto* cmdVerify = app.add_subcommand("verify", "formulas against exhaustive enumeration");
    cmdVerify->add_option("--q", verifyQ)->required();
    cmdVerify->add_option("--n", verifyN);
    cmdVerify->add_option("--gram", verifyGram, "Gram matrix JSON file");

    SampleArgs sample;
    auto* cmdSample = app.add_subcommand("sample", "uniform random codes, one generator matrix per line");
    cmdSample->add_option("--q", sample.q)->required();
    cmdSample->add_option("--n", sample.n);
    cmdSample->add_option("--k", sample.k)->required();
    cmdSample->add_option("--l", sample.l, "radical dimension (default k: self-orthogonal)");
    cmdSample->add_option("--count", sample.count);
    cmdSample->add_option("--seed", sample.seed);
    cmdSample->add_option("--gram", sample.gram);

    std::string classifyGram;
    std::optional<std::uint32_t> classifyQ;
    auto* cmdClassify = app.add_subcommand("classify", "type, discriminant class and Witt index of a Gram matrix");
    cmdClassify->add_option("--gram", classifyGram)->required();
    cmdClassify->add_option("--q", classifyQ);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidFlags;
    }

    try {
        if (*cmdCensus) return runCensus(census, out);
        if (*cmdWeights) return runWeights(weights, out);
        if (*cmdAsym) return runAsymptotics(asym, out);
        if (*cmdVerify) return runVerify(verifyQ, verifyN, verifyGram, out);
        if (*cmdSample) return runSample(sample, out);
        if (*cmdClassify) return runClassify(classifyGram, classifyQ, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return statusFor(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInvalidFlags;
}

}  // namespace bilin
