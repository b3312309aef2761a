#include "bilin/bilinear.hpp"

#include "bilin/error.hpp"

#include <json.hpp>

#include <mutex>

namespace bilin {

struct BilinearSpace::Lazy {
    std::once_flag once;
    std::unique_ptr<Subspace> isotropic;
};

BilinearSpace::BilinearSpace(MatrixGF gram, TypeTag type, int witt)
    : gram_(std::move(gram)), type_(type), witt_(witt), lazy_(std::make_shared<Lazy>()) {}

Element BilinearSpace::form(std::span<const Element> u, std::span<const Element> v) const {
    const auto n = static_cast<std::size_t>(this->n());
    if (u.size() != n || v.size() != n) throw Error(ErrorCode::DimensionMismatch, "form arguments");
    const FieldSpec& f = field();
    Element acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Element inner = 0;
        for (std::size_t j = 0; j < n; ++j) inner = f.add(inner, f.mul(gram_(i, j), v[j]));
        acc = f.add(acc, f.mul(u[i], inner));
    }
    return acc;
}

const Subspace& BilinearSpace::isotropicHyperplane() const {
    if (field().p() != 2) throw Error(ErrorCode::PreconditionViolated, "isotropic hyperplane needs even q");
    std::call_once(lazy_->once, [this] {
        // In characteristic 2, B(v,v) = (sum_i sqrt(G_ii) v_i)^2.
        const FieldSpec& f = field();
        MatrixGF functional(f, 1, static_cast<std::size_t>(n()));
        for (int i = 0; i < n(); ++i) functional(0, i) = f.pow(gram_(i, i), f.q() / 2);
        lazy_->isotropic = std::make_unique<Subspace>(kernel(functional));
    });
    return *lazy_->isotropic;
}

BilinearSpace spaceFromGram(const FieldSpec& field, const MatrixGF& gram) {
    if (gram.rows() != gram.cols()) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square");
    if (!(gram.field() == field)) throw Error(ErrorCode::DimensionMismatch, "Gram matrix over another field");
    const int n = static_cast<int>(gram.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (gram(i, j) != gram(j, i)) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
        }
    }
    const Element det = determinant(gram);
    if (det == 0) throw Error(ErrorCode::Degenerate, "Gram matrix is singular");

    TypeTag type;
    int witt;
    if (field.p() == 2) {
        bool zeroDiagonal = true;
        for (int i = 0; i < n; ++i) zeroDiagonal = zeroDiagonal && gram(i, i) == 0;
        if (n % 2 == 1) {
            type = TypeTag::N1;
        } else {
            type = zeroDiagonal ? TypeTag::N0a : TypeTag::N0na;
        }
        witt = n / 2;
    } else if (n % 2 == 1) {
        type = TypeTag::P;
        witt = (n - 1) / 2;
    } else {
        Element signedDisc = det;
        if ((n / 2) % 2 == 1) signedDisc = field.neg(det);
        const bool hyperbolic = field.isSquare(signedDisc);
        type = hyperbolic ? TypeTag::H : TypeTag::E;
        witt = hyperbolic ? n / 2 : n / 2 - 1;
    }
    return BilinearSpace(gram, type, witt);
}

BilinearSpace standardDotSpace(const FieldSpec& field, int n) {
    if (n < 1) throw Error(ErrorCode::PreconditionViolated, "dimension must be positive");
    return spaceFromGram(field, MatrixGF::identity(field, static_cast<std::size_t>(n)));
}

BilinearSpace alternatingBlockSpace(const FieldSpec& field, int n) {
    if (n < 2 || n % 2 != 0) throw Error(ErrorCode::PreconditionViolated, "block Gram needs even n >= 2");
    MatrixGF g(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; i += 2) {
        g(i, i + 1) = 1;
        g(i + 1, i) = 1;
    }
    return spaceFromGram(field, g);
}

bool isAlternating(const BilinearSpace& s) noexcept {
    if (s.field().p() != 2) return false;
    for (int i = 0; i < s.n(); ++i) {
        if (s.gram()(i, i) != 0) return false;
    }
    return true;
}

bool discriminantIsSquare(const BilinearSpace& s) { return s.field().isSquare(determinant(s.gram())); }

int wittIndexFormula(const BilinearSpace& s) {
    const int n = s.n();
    if (n % 2 == 1) return (n - 1) / 2;
    if (s.field().p() == 2) return n / 2;
    Element signedDisc = determinant(s.gram());
    if ((n / 2) % 2 == 1) signedDisc = s.field().neg(signedDisc);
    return s.field().isSquare(signedDisc) ? n / 2 : n / 2 - 1;
}

namespace {

void requireInSpace(const BilinearSpace& s, const Subspace& c) {
    if (!(c.field() == s.field()) || c.ambientDim() != static_cast<std::size_t>(s.n())) {
        throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the bilinear space");
    }
}

}  // namespace

Subspace orthogonal(const BilinearSpace& s, const Subspace& c) {
    requireInSpace(s, c);
    return kernel(c.basis() * s.gram());
}

Subspace radical(const BilinearSpace& s, const Subspace& c) { return intersect(c, orthogonal(s, c)); }

int complIndex(const BilinearSpace& s, const Subspace& c) { return static_cast<int>(radical(s, c).dim()); }

bool isSelfOrthogonal(const BilinearSpace& s, const Subspace& c) {
    return complIndex(s, c) == static_cast<int>(c.dim());
}

bool isLCD(const BilinearSpace& s, const Subspace& c) { return complIndex(s, c) == 0; }

Vector QuotientSpace::lift(std::span<const Element> coords) const { return rowTimes(coords, representatives); }

Subspace QuotientSpace::liftSubspace(const Subspace& quotientSub) const {
    if (quotientSub.ambientDim() != representatives.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "subspace is not in the quotient");
    }
    MatrixGF gens = u.basis();
    for (std::size_t r = 0; r < quotientSub.dim(); ++r) gens.appendRow(lift(quotientSub.basis().row(r)));
    return Subspace::span(gens);
}

Subspace QuotientSpace::project(const Subspace& c) const {
    if (!contains(c, u) || !contains(uPerp, c)) {
        throw Error(ErrorCode::PreconditionViolated, "projection needs U <= C <= U^perp");
    }
    MatrixGF frame = u.basis();
    for (std::size_t r = 0; r < representatives.rows(); ++r) frame.appendRow(representatives.row(r));
    const std::size_t t = u.dim();
    MatrixGF images(c.field(), 0, representatives.rows());
    for (std::size_t r = 0; r < c.dim(); ++r) {
        bool ok = false;
        auto coeffs = solveRow(frame, c.basis().row(r), ok);
        if (!ok) throw Error(ErrorCode::InternalInconsistency, "vector of U^perp outside its frame");
        images.appendRow(std::span<const Element>(coeffs).subspan(t));
    }
    return Subspace::span(images);
}

QuotientSpace quotientSpace(const BilinearSpace& s, const Subspace& u) {
    if (!isSelfOrthogonal(s, u)) throw Error(ErrorCode::NotSelfOrthogonal, "quotient needs a self-orthogonal U");
    const FieldSpec& f = s.field();
    Subspace uPerp = orthogonal(s, u);
    MatrixGF reps(f, 0, static_cast<std::size_t>(s.n()));
    MatrixGF running = u.basis();
    std::size_t runningRank = u.dim();
    for (std::size_t r = 0; r < uPerp.dim() && runningRank < uPerp.dim(); ++r) {
        MatrixGF trial = running;
        trial.appendRow(uPerp.basis().row(r));
        if (rank(trial) > runningRank) {
            running = std::move(trial);
            ++runningRank;
            reps.appendRow(uPerp.basis().row(r));
        }
    }
    MatrixGF gram = reps * s.gram() * reps.transpose();
    return QuotientSpace{spaceFromGram(f, gram), u, std::move(uPerp), std::move(reps)};
}

Vector allOneVector(int n) { return Vector(static_cast<std::size_t>(n), Element{1}); }

bool inducedAlternatingDot(const BilinearSpace& s, const Subspace& u) {
    if (s.field().p() != 2 || s.n() % 2 != 0) {
        throw Error(ErrorCode::PreconditionViolated, "induced-alternating criterion needs q and n even");
    }
    requireInSpace(s, u);
    return u.containsVector(allOneVector(s.n()));
}

BilinearSpace spaceFromJson(std::string_view text) { return spaceFromJson(text, 0); }

BilinearSpace spaceFromJson(std::string_view text, std::uint32_t defaultQ) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("gram") || !doc["gram"].is_array()) {
        throw Error(ErrorCode::ParseError, "expected an object with a \"gram\" array");
    }
    std::uint32_t q = defaultQ;
    if (doc.contains("q")) {
        if (!doc["q"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"q\" must be a positive integer");
        q = doc["q"].get<std::uint32_t>();
        if (defaultQ != 0 && q != defaultQ) {
            throw Error(ErrorCode::PreconditionViolated, "q in the Gram file disagrees with --q");
        }
    }
    if (q == 0) throw Error(ErrorCode::ParseError, "missing \"q\"");
    FieldSpec field(q);
    std::vector<Vector> rows;
    for (const auto& row : doc["gram"]) {
        if (!row.is_array()) throw Error(ErrorCode::ParseError, "Gram rows must be arrays");
        Vector v;
        for (const auto& x : row) {
            if (!x.is_number_unsigned()) throw Error(ErrorCode::ParseError, "Gram entries must be element indices");
            const auto value = x.get<std::uint64_t>();
            if (value >= q) throw Error(ErrorCode::OutOfRange, "Gram entry outside [0, q)");
            v.push_back(static_cast<Element>(value));
        }
        rows.push_back(std::move(v));
    }
    const std::size_t n = rows.size();
    return spaceFromGram(field, MatrixGF(field, rows, n));
}

std::string matrixToJson(const MatrixGF& m, std::string_view key) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Element x : m.row(r)) row.push_back(x);
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["q"] = m.field().q();
    doc[std::string(key)] = std::move(rows);
    return doc.dump();
}

}  // namespace bilin
