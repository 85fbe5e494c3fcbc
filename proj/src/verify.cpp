#include "wh3/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wh3::verify {

using catalog::CMatrix;
using catalog::Errata;
using catalog::FamilyId;
using catalog::Kind;
using catalog::TMatrix;
using catalog::Variant;

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::pass_modular: return "pass-modular";
    }
    return "?";
}

const Detail* Report::find(const std::string& name) const {
    for (const auto& d : details)
        if (d.name == name) return &d;
    return nullptr;
}

void Report::add(Detail d, const std::optional<std::string>& witness) {
    if (!d.ok && !counterexample) counterexample = witness ? *witness : d.name + ": " + d.note;
    details.push_back(std::move(d));
}

void Report::finish(const ModularSettings& ms) {
    bool fail = false, modular = false;
    for (const auto& d : details) {
        fail = fail || !d.ok;
        modular = modular || d.mode == Mode::modular;
    }
    mode = modular ? Mode::modular : Mode::exact;
    status = fail ? Status::fail : modular ? Status::pass_modular : Status::pass;
    if (fail && !counterexample) counterexample = "unspecified";
    if (modular) {
        prime = ms.prime;
        seed = ms.seed;
    }
}

nlohmann::ordered_json to_json(const Report& r, bool timing) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["status"] = to_string(r.status);
    j["mode"] = to_string(r.mode);
    j["prime"] = r.prime ? nlohmann::ordered_json(*r.prime) : nlohmann::ordered_json(nullptr);
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    auto details = nlohmann::ordered_json::array();
    for (const auto& d : r.details) {
        nlohmann::ordered_json dj;
        dj["name"] = d.name;
        dj["status"] = d.ok ? "pass" : "fail";
        dj["mode"] = to_string(d.mode);
        dj["note"] = d.note;
        details.push_back(std::move(dj));
    }
    j["details"] = std::move(details);
    j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json(nullptr);
    j["millis"] = timing ? static_cast<std::int64_t>(r.millis) : 0;
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "[" << to_string(r.status) << "] " << r.check << " (" << to_string(r.mode);
    if (r.prime) os << ", p=" << *r.prime << ", seed=" << *r.seed;
    os << ")\n";
    for (const auto& d : r.details) {
        os << "  " << (d.ok ? "ok  " : "FAIL") << " " << d.name;
        if (d.mode == Mode::modular) os << " [modular]";
        if (!d.note.empty()) os << ": " << d.note;
        os << "\n";
    }
    if (r.counterexample) os << "  counterexample: " << *r.counterexample << "\n";
    return os.str();
}

Mutation parse_mutation(std::string_view text) {
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon)
        throw std::invalid_argument("bad mutation '" + std::string(text) + "' (expected omega:ROW,COL=VALUE or FAMILY:ROW=RELATION)");
    Mutation m;
    const std::string target(text.substr(0, colon));
    const std::string where(text.substr(colon + 1, eq - colon - 1));
    m.value = std::string(text.substr(eq + 1));
    if (target == "omega") {
        const auto comma = where.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("omega mutation needs ROW,COL");
        m.row = CMatrix::parse_label(where.substr(0, comma));
        m.col = CMatrix::parse_label(where.substr(comma + 1));
        return m;
    }
    m.omega_entry = false;
    m.family = catalog::parse_family(target);
    try {
        m.row = std::stoul(where);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad row index '" + where + "'");
    }
    return m;
}

// ---------------------------------------------------------------------------
// Context

Context::Context(VerifyOptions opts) : opts_(std::move(opts)) {
    omega_ = catalog::omega();
    for (FamilyId id : catalog::kAllFamilies) texts_[id] = catalog::family_text(id, opts_.errata);
    for (const auto& [id, rels] : opts_.overrides) {
        auto& rows = texts_[id];
        rows.clear();
        for (const auto& r : rels) rows.push_back(r.to_string(catalog::family(id).alphabet));
    }
    for (const auto& m : opts_.mutations) {
        if (m.omega_entry) {
            omega_(m.row, m.col) = parse_scalar(m.value);
            continue;
        }
        auto& rows = texts_.at(m.family);
        if (m.row >= rows.size())
            throw std::invalid_argument(catalog::family_key(m.family) + " has " + std::to_string(rows.size()) +
                                        " rows");
        rows[m.row] = m.value;
    }
    omega_ = omega_.substitute(opts_.set);
    omega_inv_ = omega_.inverse();
    for (FamilyId id : catalog::kAllFamilies) {
        const auto& alphabet = catalog::family(id).alphabet;
        std::vector<Element> rels;
        for (const auto& t : texts_.at(id)) rels.push_back(sub(parse_element(t, alphabet)));
        families_[id] = std::move(rels);
    }
    det_ = sub(catalog::quantum_determinant());
    const TMatrix cof = catalog::cofactors(), pt = catalog::transpose_inverse_numerators();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cof_[i][j] = sub(cof[i][j]);
            pt_[i][j] = sub(pt[i][j]);
        }
}

Scalar Context::sub(const Scalar& c) const { return opts_.set.empty() ? c : substitute(c, opts_.set); }

Element Context::sub(const Element& e) const {
    if (opts_.set.empty()) return e;
    return map_coefficients(e, [&](const Scalar& c) { return substitute(c, opts_.set); });
}

Presentation Context::calculus(Variant v) const {
    Presentation p{v == Variant::omega ? "calc-omega" : "calc-omega-inv", catalog::calculus_alphabet(), {}};
    std::vector<FamilyId> ids = {FamilyId::xx, FamilyId::xixi, FamilyId::dd};
    for (FamilyId id : catalog::mixed_families(v)) ids.push_back(id);
    for (FamilyId id : ids)
        for (const auto& r : family(id)) p.relations.push_back(r);
    return p;
}

Presentation Context::rtt() const {
    return {"quantum-matrix", catalog::quantum_group_alphabet(), family(FamilyId::tt)};
}

Presentation Context::quantum_group() const {
    Presentation p = rtt();
    p.name = "quantum-group";
    for (const auto& r : family(FamilyId::tdinv)) p.relations.push_back(r);
    return p;
}

Presentation Context::family_presentation(FamilyId id) const {
    const Alphabet& from = catalog::family(id).alphabet;
    Alphabet a = from;
    if (id == FamilyId::xx) a = catalog::calculus_subalphabet("x");
    if (id == FamilyId::xixi) a = catalog::calculus_subalphabet("xi");
    if (id == FamilyId::dd) a = catalog::calculus_subalphabet("d");
    Presentation p{catalog::family_key(id), a, {}};
    for (const auto& r : family(id)) p.relations.push_back(embed(r, from, a));
    return p;
}

Mode Context::mode_for(std::size_t degree, bool derivative_family) const {
    if (opts_.mode) return *opts_.mode;
    return degree >= 4 || derivative_family ? Mode::modular : Mode::exact;
}

void Context::require_degree(std::size_t degree) const {
    if (degree > opts_.max_degree)
        throw DegreeBoundExceeded("membership at degree " + std::to_string(degree) + " exceeds --max-degree " +
                                  std::to_string(opts_.max_degree));
}

// ---------------------------------------------------------------------------
// StarMap

StarMap::StarMap() {
    const std::pair<const char*, const char*> swaps[] = {
        {"t11", "t22"}, {"t12", "t21"}, {"t13", "t23"}, {"t31", "t32"}, {"x1", "x2"},
    };
    for (const auto& [a, b] : swaps) {
        images_[a] = b;
        images_[b] = a;
    }
    for (const char* fixed : {"t33", "Dinv", "x3"}) images_[fixed] = fixed;
}

const std::string& StarMap::image(const std::string& name) const {
    auto it = images_.find(name);
    return it == images_.end() ? name : it->second;
}

Element StarMap::apply(const Element& e, const Alphabet& alphabet) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Word nw;
        for (auto it = w.rbegin(); it != w.rend(); ++it) nw.push_back(alphabet.at(image(alphabet[*it].name)));
        out.add_term(nw, c);
    }
    return out;
}

bool StarMap::involutive(const Alphabet& alphabet) const {
    for (const auto& g : alphabet.generators())
        if (image(image(g.name)) != g.name) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

std::string membership_note(const MembershipReport& r) {
    std::string s = r.member ? "member" : "nonmember";
    s += " (rank " + std::to_string(r.rank) + ", " + std::to_string(r.columns) + " words";
    if (r.mode == Mode::modular && r.attempt) s += ", resampled " + std::to_string(r.attempt) + "x";
    return s + ")";
}

/// Runs `body` and turns exceptions into a failing detail.
void guarded(Report& rep, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        rep.add({name, false, Mode::exact, std::string("error: ") + e.what()});
    }
}

template <class F>
Report run(const std::string& id, const ModularSettings& ms, F&& body) {
    Timer timer;
    Report rep;
    rep.check = id;
    guarded(rep, id, [&] { body(rep); });
    rep.finish(ms);
    rep.millis = timer.millis();
    return rep;
}

std::string span_note(const SpanComparison& c) {
    return std::string(to_string(c.verdict)) + " (ranks " + std::to_string(c.rank_a) + ", " +
           std::to_string(c.rank_b) + ", union " + std::to_string(c.rank_union) + ")";
}

/// Moves every Dinv to the left using the R_tDinv rules and splits the
/// result by the power of Dinv in front.
class DinvStraightener {
public:
    explicit DinvStraightener(const Context& ctx)
        : rules_(orient(ctx.family_presentation(FamilyId::tdinv), OrientPolicy::lenient)),
          dinv_(catalog::dinv()) {}

    std::map<unsigned, Element> split(const Element& e) const {
        std::map<unsigned, Element> out;
        const Element nf = rules_.normalize(e);
        for (const auto& [w, c] : nf.terms()) {
            std::size_t k = 0;
            while (k < w.size() && w[k] == dinv_) ++k;
            for (std::size_t i = k; i < w.size(); ++i)
                if (w[i] == dinv_)
                    throw PresentationError("cannot move Dinv left in " +
                                            catalog::quantum_group_alphabet().format(w));
            out[static_cast<unsigned>(k)].add_term(Word(w.begin() + static_cast<long>(k), w.end()), c);
        }
        return out;
    }

private:
    RuleSystem rules_;
    Letter dinv_;
};

/// Multiplies by D^kmax on the left and cancels against the Dinv powers.
Element clear_dinv(const std::map<unsigned, Element>& parts, unsigned kmax, const Element& det) {
    Element out;
    for (const auto& [k, e] : parts) out += det.pow(kmax - k) * e;
    return out;
}

unsigned max_power(const std::map<unsigned, Element>& parts) { return parts.empty() ? 0 : parts.rbegin()->first; }

/// Generator images for a tensor-valued homomorphism: list of (left, right word).
using TensorImages = std::vector<std::vector<std::pair<Element, Word>>>;

TensorElement tensor_image(const Element& r, const TensorImages& images) {
    TensorElement out;
    for (const auto& [w, c] : r.terms()) {
        TensorElement cur;
        cur[Word{}] = Element(c);
        for (Letter l : w) {
            const auto& img = images.at(letter_index(l));
            if (img.empty()) throw PresentationError("generator without an image");
            TensorElement next;
            for (const auto& [rw, le] : cur)
                for (const auto& [left, right] : img) {
                    Word nw = rw;
                    nw.insert(nw.end(), right.begin(), right.end());
                    next[nw] += le * left;
                }
            cur = std::move(next);
        }
        for (const auto& [rw, le] : cur) out[rw] += le;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Straightens and clears Dinv in every left factor (one global power).
TensorElement clear_left(const TensorElement& e, const DinvStraightener& st, const Element& det) {
    std::map<Word, std::map<unsigned, Element>, DegLexLess> parts;
    unsigned kmax = 0;
    for (const auto& [rw, le] : e) {
        parts[rw] = st.split(le);
        kmax = std::max(kmax, max_power(parts[rw]));
    }
    TensorElement out;
    for (const auto& [rw, p] : parts) {
        Element c = clear_dinv(p, kmax, det);
        if (!c.is_zero()) out[rw] = std::move(c);
    }
    return out;
}

/// Straightens and clears Dinv in the right factors.
TensorElement clear_right(const TensorElement& e, const DinvStraightener& st, const Element& det) {
    std::vector<std::pair<const Element*, std::map<unsigned, Element>>> parts;
    unsigned kmax = 0;
    for (const auto& [rw, le] : e) {
        parts.emplace_back(&le, st.split(Element::word(rw)));
        kmax = std::max(kmax, max_power(parts.back().second));
    }
    TensorElement out;
    for (const auto& [le, p] : parts) {
        const Element cleared = clear_dinv(p, kmax, det);
        for (const auto& [w, c] : cleared.terms()) out[w] += le->scaled(c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::size_t left_degree(const TensorElement& e) {
    std::size_t d = 0;
    for (const auto& [rw, le] : e) d = std::max(d, le.degree());
    return d;
}

std::size_t right_degree(const TensorElement& e) {
    std::size_t d = 0;
    for (const auto& [rw, le] : e) d = std::max(d, rw.size());
    return d;
}

std::string tensor_witness(const TensorReport& r, const Alphabet& left, const Alphabet& right) {
    if (!r.witness) return "";
    return "(" + r.witness->second.to_string(left) + ") (x) " + right.format(r.witness->first);
}

/// Row vector of a degree-2 relation: component (i,j) = coefficient of g_i g_j.
/// With `reversed`, component (i,j) is the coefficient of g_j g_i.
std::optional<std::array<Scalar, 9>> pair_vector(const Element& r, const Alphabet& a, const std::string& prefix,
                                                 bool reversed = false) {
    std::array<Scalar, 9> v{};
    for (const auto& [w, c] : r.terms()) {
        if (w.size() != 2) return std::nullopt;
        int idx[2];
        for (int k = 0; k < 2; ++k) {
            const std::string& n = a[w[k]].name;
            if (n.size() != prefix.size() + 1 || n.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
            idx[k] = n.back() - '0';
        }
        v[reversed ? CMatrix::index(idx[1], idx[0]) : CMatrix::index(idx[0], idx[1])] += c;
    }
    return v;
}

std::array<Scalar, 9> row_times(const std::array<Scalar, 9>& v, const CMatrix& m) {
    std::array<Scalar, 9> out{};
    for (std::size_t r = 0; r < 9; ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < 9; ++c)
            if (!m(r, c).is_zero()) out[c] += v[r] * m(r, c);
    }
    return out;
}

/// lambda with v M = lambda v, if v is a row eigenvector.
std::optional<Scalar> row_eigenvalue(const std::array<Scalar, 9>& v, const CMatrix& m) {
    const auto vm = row_times(v, m);
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < 9; ++i)
        if (!v[i].is_zero()) {
            lambda = vm[i] / v[i];
            break;
        }
    if (!lambda) return std::nullopt;
    for (std::size_t i = 0; i < 9; ++i)
        if (vm[i] != *lambda * v[i]) return std::nullopt;
    return lambda;
}

std::size_t dense_rank(std::vector<std::vector<Scalar>> rows) {
    std::size_t rank = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        const Scalar inv = rows[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            const Scalar f = rows[r][c] * inv;
            for (std::size_t k = c; k < ncols; ++k)
                if (!rows[rank][k].is_zero()) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Coefficients c_0..c_{k-1} of the minimal polynomial x^k + sum c_i x^i.
std::vector<Scalar> minimal_polynomial(const CMatrix& m) {
    std::vector<CMatrix> powers = {CMatrix::identity()};
    for (std::size_t k = 1; k <= 9; ++k) {
        powers.push_back(powers.back() * m);
        // Solve sum_i c_i M^i = -M^k by elimination on the 81 x (k+1) system.
        std::vector<std::vector<Scalar>> a(81, std::vector<Scalar>(k + 1));
        for (std::size_t e = 0; e < 81; ++e) {
            for (std::size_t i = 0; i < k; ++i) a[e][i] = powers[i](e / 9, e % 9);
            a[e][k] = -powers[k](e / 9, e % 9);
        }
        std::vector<std::size_t> pivcol;
        std::size_t rank = 0;
        for (std::size_t c = 0; c <= k && rank < 81; ++c) {
            std::size_t p = rank;
            while (p < 81 && a[p][c].is_zero()) ++p;
            if (p == 81) continue;
            std::swap(a[p], a[rank]);
            const Scalar inv = a[rank][c].inverse();
            for (auto& x : a[rank]) x *= inv;
            for (std::size_t r = 0; r < 81; ++r) {
                if (r == rank || a[r][c].is_zero()) continue;
                const Scalar f = a[r][c];
                for (std::size_t j = c; j <= k; ++j)
                    if (!a[rank][j].is_zero()) a[r][j] -= f * a[rank][j];
            }
            pivcol.push_back(c);
            ++rank;
        }
        if (!pivcol.empty() && pivcol.back() == k) continue;  // inconsistent
        std::vector<Scalar> coeffs(k);
        for (std::size_t r = 0; r < pivcol.size(); ++r) coeffs[pivcol[r]] = a[r][k];
        return coeffs;
    }
    return {};
}

std::string polynomial_text(const std::vector<Scalar>& coeffs) {
    const std::size_t k = coeffs.size();
    std::string out = k == 1 ? "x" : "x^" + std::to_string(k);
    for (std::size_t i = k; i-- > 0;) {
        if (coeffs[i].is_zero()) continue;
        CoefficientText ct = coefficient_text(coeffs[i]);
        out += ct.negative ? " - " : " + ";
        const std::string mono = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
        if (mono.empty())
            out += ct.text.empty() ? "1" : ct.text;
        else
            out += (ct.text.empty() ? "" : ct.text + "*") + mono;
    }
    return out;
}

Scalar eval_monic(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc(1);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix checks

Report check_yang_baxter(const CMatrix& c, const std::string& label) {
    return run("ybe", {}, [&](Report& rep) {
        // (C x 1) and (1 x C) on V^3, index (a,b,c) -> 9a+3b+c (0-based).
        auto c1 = [&](std::size_t r, std::size_t s) {
            return r % 3 == s % 3 ? c(r / 3, s / 3) : Scalar();
        };
        auto c2 = [&](std::size_t r, std::size_t s) {
            return r / 9 == s / 9 ? c(r % 9, s % 9) : Scalar();
        };
        using Dense = std::vector<Scalar>;
        auto build = [&](auto&& f) {
            Dense m(27 * 27);
            for (std::size_t r = 0; r < 27; ++r)
                for (std::size_t s = 0; s < 27; ++s) m[r * 27 + s] = f(r, s);
            return m;
        };
        auto mul = [](const Dense& a, const Dense& b) {
            Dense out(27 * 27);
            for (std::size_t i = 0; i < 27; ++i)
                for (std::size_t k = 0; k < 27; ++k) {
                    if (a[i * 27 + k].is_zero()) continue;
                    for (std::size_t j = 0; j < 27; ++j)
                        if (!b[k * 27 + j].is_zero()) out[i * 27 + j] += a[i * 27 + k] * b[k * 27 + j];
                }
            return out;
        };
        const Dense a = build(c1), b = build(c2);
        const Dense lhs = mul(mul(a, b), a), rhs = mul(mul(b, a), b);
        auto cell = [](std::size_t idx) {
            return std::to_string(idx / 9 + 1) + std::to_string(idx / 3 % 3 + 1) + std::to_string(idx % 3 + 1);
        };
        std::size_t bad = 0;
        std::optional<std::string> first;
        for (std::size_t i = 0; i < 27 * 27; ++i)
            if (lhs[i] != rhs[i]) {
                if (!first)
                    first = "cell (" + cell(i / 27) + "," + cell(i % 27) + "): " + lhs[i].to_string() + " vs " +
                            rhs[i].to_string();
                ++bad;
            }
        rep.add({label, bad == 0, Mode::exact,
                 bad == 0 ? "27x27 products agree" : std::to_string(bad) + " cells differ, first " + *first},
                first);
    });
}

Report check_constraints(const CMatrix& c, const std::string& label) {
    return run("constraints", {}, [&](Report& rep) {
        const Scalar q = Scalar::q(), u = Scalar::u(), s = Scalar::s();
        auto C = [&](int k, int l, int m, int n) { return c.at(k, l, m, n); };
        struct Identity {
            const char* name;
            Scalar lhs, rhs;
        };
        const std::vector<Identity> ids = {
            {"C12_12 = q C21_12 - 1", C(1, 2, 1, 2), q * C(2, 1, 1, 2) - Scalar(1)},
            {"C12_21 = q C21_21 + q", C(1, 2, 2, 1), q * C(2, 1, 2, 1) + q},
            {"C13_13 = u C31_13 - 1", C(1, 3, 1, 3), u * C(3, 1, 1, 3) - Scalar(1)},
            {"C13_31 = u C31_31 + u", C(1, 3, 3, 1), u * C(3, 1, 3, 1) + u},
            {"C32_23 = u C23_23 + u", C(3, 2, 2, 3), u * C(2, 3, 2, 3) + u},
            {"C32_32 = u C23_32 - 1", C(3, 2, 3, 2), u * C(2, 3, 3, 2) - Scalar(1)},
            {"C12_33 = q C21_33 + s C33_33 + s", C(1, 2, 3, 3), q * C(2, 1, 3, 3) + s * C(3, 3, 3, 3) + s},
            {"C12_12 C21_21 = 0", C(1, 2, 1, 2) * C(2, 1, 2, 1), Scalar()},
            {"C13_13 C31_31 = 0", C(1, 3, 1, 3) * C(3, 1, 3, 1), Scalar()},
            {"C23_23 C32_32 = 0", C(2, 3, 2, 3) * C(3, 2, 3, 2), Scalar()},
        };
        for (const auto& id : ids) {
            const bool ok = id.lhs == id.rhs;
            rep.add({label + ": " + id.name, ok, Mode::exact, id.lhs.to_string() + " vs " + id.rhs.to_string()});
        }
        const bool sparse = c.sparsity_holds();
        rep.add({label + ": sparsity pattern", true, Mode::exact,
                 sparse ? "holds" : "does not hold (informational)"});
    });
}

Report check_eigenstructure(const CMatrix& c, const Context& ctx, const std::string& label) {
    return run("eigen", {}, [&](Report& rep) {
        const Alphabet& a = catalog::calculus_alphabet();
        auto family_vectors = [&](FamilyId id, const std::string& prefix, bool reversed = false) {
            std::vector<std::array<Scalar, 9>> out;
            for (const auto& r : ctx.family(id)) {
                auto v = pair_vector(r, a, prefix, reversed);
                if (!v) throw PresentationError(catalog::family_key(id) + " has a relation outside the pair space");
                out.push_back(*v);
            }
            return out;
        };
        auto as_rows = [](const std::vector<std::array<Scalar, 9>>& vs) {
            std::vector<std::vector<Scalar>> rows;
            for (const auto& v : vs) rows.emplace_back(v.begin(), v.end());
            return rows;
        };
        auto invariant_subspace = [&](const std::string& name, const std::vector<std::array<Scalar, 9>>& vs,
                                      const CMatrix& m) {
            std::vector<std::array<Scalar, 9>> both = vs;
            for (const auto& v : vs) both.push_back(row_times(v, m));
            const std::size_t r0 = dense_rank(as_rows(vs)), r1 = dense_rank(as_rows(both));
            std::vector<std::string> eig;
            bool all_eigen = true;
            for (const auto& v : vs) {
                if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
                auto l = row_eigenvalue(v, m);
                if (!l) {
                    all_eigen = false;
                    continue;
                }
                const std::string t = l->to_string();
                if (std::find(eig.begin(), eig.end(), t) == eig.end()) eig.push_back(t);
            }
            std::string note = "dimension " + std::to_string(r0) + (r0 == r1 ? ", invariant" : ", not invariant");
            note += all_eigen ? "; eigenvalues {" + join(eig) + "}" : "; not all vectors are eigenvectors";
            rep.add({label + ": " + name, r0 == r1, Mode::exact, note});
            return eig;
        };

        const CMatrix inv = c.inverse();
        invariant_subspace("R_xx span under C", family_vectors(FamilyId::xx, "x"), c);
        invariant_subspace("R_xx span under C^-1", family_vectors(FamilyId::xx, "x"), inv);
        auto xi = invariant_subspace("R_xixi span under C", family_vectors(FamilyId::xixi, "xi"), c);
        invariant_subspace("R_xixi span under C^-1", family_vectors(FamilyId::xixi, "xi"), inv);
        if (!(xi.size() == 1 && xi[0] == "-1"))
            rep.add({label + ": one-form eigenvalue", true, Mode::exact,
                     "R_xixi vectors have eigenvalue {" + join(xi) + "}, stated as -1 (convention mismatch reported)"});

        // R_dd vectors against the transpose of C^-1, read from d_j d_i.
        const CMatrix kt = inv.transpose();
        const auto dd = family_vectors(FamilyId::dd, "d", true);
        std::optional<Scalar> common;
        bool eigen = true;
        for (const auto& v : dd) {
            auto l = row_eigenvalue(v, kt);
            if (!l || (common && *common != *l)) {
                eigen = false;
                break;
            }
            common = l;
        }
        std::string note;
        if (eigen && common) {
            std::vector<std::vector<Scalar>> shifted;
            for (std::size_t r = 0; r < 9; ++r) {
                std::vector<Scalar> row(9);
                for (std::size_t cc = 0; cc < 9; ++cc) row[cc] = kt(r, cc) - (r == cc ? *common : Scalar());
                shifted.push_back(std::move(row));
            }
            note = "eigenvalue " + common->to_string() + ", eigenspace dimension " +
                   std::to_string(9 - dense_rank(shifted));
        } else {
            note = "R_dd vectors are not in one eigenspace of (C^-1)^t";
        }
        rep.add({label + ": R_dd in an eigenspace of (C^-1)^t", eigen && common.has_value(), Mode::exact, note});

        const auto mp = minimal_polynomial(c);
        std::vector<std::string> roots;
        for (const auto& cand : {Scalar(-1), Scalar(1), Scalar::q() / Scalar::u().pow(2), Scalar::u().pow(2) / Scalar::q()})
            if (!mp.empty() && eval_monic(mp, cand).is_zero()) roots.push_back(cand.to_string());
        rep.add({label + ": minimal polynomial", !mp.empty(), Mode::exact,
                 mp.empty() ? "not found" : polynomial_text(mp) + (roots.empty() ? "" : ", roots {" + join(roots) + "}")});
    });
}

Report check_eigenstructure(const Context& ctx) {
    Timer timer;
    Report rep = check_eigenstructure(ctx.omega(), ctx, "omega");
    Report inv = check_eigenstructure(ctx.omega_inverse(), ctx, "omega-inv");
    for (auto& d : inv.details) rep.details.push_back(std::move(d));
    if (!rep.counterexample) rep.counterexample = inv.counterexample;
    rep.finish({});
    rep.millis = timer.millis();
    return rep;
}

// ---------------------------------------------------------------------------
// Calculus

Report check_calculus(const Context& ctx, Variant v) {
    const std::string id = v == Variant::omega ? "calculus-omega" : "calculus-omega-inv";
    return run(id, ctx.options().modular, [&](Report& rep) {
        const Alphabet& a = catalog::calculus_alphabet();
        const CMatrix& c = ctx.matrix(v);
        const auto mixed = catalog::mixed_families(v);
        const std::pair<Kind, FamilyId> kinds[] = {
            {Kind::xxi, mixed[0]}, {Kind::dxi, mixed[1]}, {Kind::xd, mixed[2]}, {Kind::xixi, FamilyId::xixi}};
        for (const auto& [kind, fam] : kinds) {
            auto cmp = span_compare(catalog::generate_from_C(c, kind), ctx.family(fam));
            const bool ok = cmp.verdict == SpanVerdict::equal;
            std::optional<std::string> w;
            if (!ok && cmp.separating) w = cmp.separating->to_string(a);
            rep.add({"generated " + std::string(to_string(kind)) + " = " + catalog::family_key(fam), ok, Mode::exact,
                     span_note(cmp)},
                    w);
        }

        const Presentation p = ctx.calculus(v);
        RuleSystem rs;
        try {
            rs = orient(p, OrientPolicy::strict);
        } catch (const PresentationError& e) {
            rep.add({"orient", false, Mode::exact, e.what()});
            rs = orient(p, OrientPolicy::lenient);
        }
        NormalizeOptions nopts;
        nopts.max_steps = 2'000'000;
        auto letter = [&](const std::string& n) { return Element::letter(a.at(n)); };

        const auto& xx = ctx.family(FamilyId::xx);
        for (int i = 1; i <= 3; ++i)
            for (std::size_t k = 0; k < xx.size(); ++k) {
                const std::string name = "d" + std::to_string(i) + " * R_xx[" + std::to_string(k) + "] -> 0";
                guarded(rep, name, [&] {
                    Element nf = rs.normalize(letter("d" + std::to_string(i)) * xx[k], nopts);
                    rep.add({name, nf.is_zero(), Mode::exact, nf.is_zero() ? "" : "normal form " + nf.to_string(a)},
                            nf.is_zero() ? std::nullopt : std::optional<std::string>(nf.to_string(a)));
                });
            }

        std::vector<std::optional<Element>> images(a.size());
        for (int i = 1; i <= 3; ++i) {
            images[letter_index(a.at("x" + std::to_string(i)))] = letter("xi" + std::to_string(i));
            images[letter_index(a.at("xi" + std::to_string(i)))] = Element();
        }
        for (std::size_t k = 0; k < xx.size(); ++k) {
            const std::string name = "d(R_xx[" + std::to_string(k) + "]) -> 0";
            guarded(rep, name, [&] {
                Element nf = rs.normalize(derivation_apply(images, xx[k], a), nopts);
                rep.add({name, nf.is_zero(), Mode::exact, nf.is_zero() ? "" : "normal form " + nf.to_string(a)},
                        nf.is_zero() ? std::nullopt : std::optional<std::string>(nf.to_string(a)));
            });
        }

        // d(f) = xi^i d_i(f), with d_i(f) the operator-free part of d_i f.
        for (const char* probe : {"x1", "x1*x2", "x2*x3*x1"}) {
            const std::string name = std::string("d(f) = xi^i d_i(f) for f = ") + probe;
            guarded(rep, name, [&] {
                const Element f = parse_element(probe, a);
                Element rhs;
                for (int i = 1; i <= 3; ++i) {
                    Element di = rs.normalize(letter("d" + std::to_string(i)) * f, nopts);
                    Element coeff;
                    for (const auto& [w, cc] : di.terms()) {
                        bool op = false;
                        for (Letter l : w) op = op || a[l].name[0] == 'd';
                        if (!op) coeff.add_term(w, cc);
                    }
                    rhs += letter("xi" + std::to_string(i)) * coeff;
                }
                Element lhs = rs.normalize(derivation_apply(images, f, a), nopts);
                Element diff = lhs - rs.normalize(rhs, nopts);
                rep.add({name, diff.is_zero(), Mode::exact, diff.is_zero() ? "" : "difference " + diff.to_string(a)},
                        diff.is_zero() ? std::nullopt : std::optional<std::string>(diff.to_string(a)));
            });
        }

        guarded(rep, "overlaps", [&] {
            auto cr = overlap_resolve(rs);
            std::string note = std::to_string(rs.size()) + " rules, " + std::to_string(cr.overlaps_checked) +
                               " overlaps, " + std::to_string(cr.unresolved.size()) + " unresolved";
            std::optional<std::string> w;
            if (!cr.unresolved.empty())
                w = "overlap " + a.format(cr.unresolved.front().overlap) + ": " +
                    cr.unresolved.front().difference.to_string(a);
            rep.add({"overlaps", cr.confluent(), Mode::exact, note}, w);
        });
    });
}

// ---------------------------------------------------------------------------
// Quantum group

Report check_rtt(const Context& ctx) {
    return run("rtt", ctx.options().modular, [&](Report& rep) {
        const Alphabet& a = catalog::quantum_group_alphabet();
        const auto ro = catalog::rtt_generate(ctx.omega());
        const auto ri = catalog::rtt_generate(ctx.omega_inverse());
        const auto& tt = ctx.family(FamilyId::tt);
        auto add_cmp = [&](const std::string& name, const std::vector<Element>& x, const std::vector<Element>& y) {
            auto cmp = span_compare(x, y);
            const bool ok = cmp.verdict == SpanVerdict::equal;
            std::optional<std::string> w;
            if (!ok && cmp.separating) w = "separating vector " + cmp.separating->to_string(a);
            rep.add({name, ok, Mode::exact, span_note(cmp)}, w);
        };
        add_cmp("span RTT(omega) = span R_tt", ro, tt);
        add_cmp("span RTT(omega) = span RTT(omega^-1)", ro, ri);

        // Printed rows outside the RTT span.
        std::vector<std::string> outside;
        for (std::size_t k = 0; k < tt.size(); ++k) {
            std::vector<Element> one = {tt[k]};
            auto cmp = span_compare(one, ro);
            if (cmp.verdict != SpanVerdict::a_subset_b && cmp.verdict != SpanVerdict::equal)
                outside.push_back(std::to_string(k));
        }
        rep.add({"printed rows inside the RTT span", outside.empty(), Mode::exact,
                 outside.empty() ? "all " + std::to_string(tt.size()) : "rows outside: " + join(outside)});

        const auto dep = dependent_relations(tt);
        std::vector<std::string> dep_s;
        for (auto d : dep) dep_s.push_back(std::to_string(d));
        const std::size_t rank = span_rank(tt);
        rep.add({"rank of R_tt", rank == span_rank(ro), Mode::exact,
                 "rank " + std::to_string(rank) + " of " + std::to_string(tt.size()) + " printed rows" +
                     (dep.empty() ? ", none dependent" : ", dependent rows: " + join(dep_s)) +
                     "; RTT rank " + std::to_string(span_rank(ro))});

        guarded(rep, "ordered monomials", [&] {
            RuleSystem rs = orient(ctx.rtt(), OrientPolicy::lenient);
            auto cr = overlap_resolve(rs);
            rep.add({"ordered monomials", cr.confluent(), Mode::exact,
                     std::to_string(rs.size()) + " straightening rules, " + std::to_string(cr.overlaps_checked) +
                         " overlaps, " + std::to_string(cr.unresolved.size()) + " unresolved"},
                    cr.unresolved.empty() ? std::nullopt
                                          : std::optional<std::string>(a.format(cr.unresolved.front().overlap)));
        });
    });
}

Report check_inverse(const Context& ctx) {
    return run("inverse", ctx.options().modular, [&](Report& rep) {
        const Alphabet& a = catalog::quantum_group_alphabet();
        ctx.require_degree(3);
        const Mode mode = ctx.mode_for(3);
        IdealOracle oracle(ctx.rtt(), 3, mode, ctx.options().modular);
        const TMatrix t = catalog::t_matrix();
        const TMatrix& cof = ctx.cofactors();
        const Element& det = ctx.determinant();
        // Factors read from the R_tDinv family in use.
        std::array<std::array<std::optional<Scalar>, 3>, 3> mu{};
        for (const auto& r : ctx.family(FamilyId::tdinv))
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const Word tw = {catalog::t(i, j), catalog::dinv()}, wt = {catalog::dinv(), catalog::t(i, j)};
                    if (r.size() == 2 && r.coefficient(tw) == Scalar(1) && !r.coefficient(wt).is_zero())
                        mu[i - 1][j - 1] = -r.coefficient(wt);
                }
        auto test = [&](const std::string& name, const Element& e) {
            auto res = oracle.test(e);
            rep.add({name, res.member, res.mode, membership_note(res)},
                    res.member ? std::nullopt : std::optional<std::string>(e.to_string(a)));
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Element e;
                for (int k = 0; k < 3; ++k) e += t[i][k] * cof[k][j];
                if (i == j) e -= det;
                test("(T Cof)" + std::to_string(i + 1) + std::to_string(j + 1) + " = delta D", e);
            }
        bool literal = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const std::string name = "(Cof D^-1 T)" + std::to_string(i + 1) + std::to_string(j + 1) + " = delta";
                Element e;
                bool have = true;
                for (int k = 0; k < 3; ++k) {
                    if (!mu[k][j]) {
                        have = false;
                        break;
                    }
                    // D^-1 t = (1/mu) t D^-1
                    e += cof[i][k].scaled(mu[k][j]->inverse()) * t[k][j];
                }
                if (!have) {
                    rep.add({name, false, Mode::exact, "R_tDinv lacks a row t D^-1 = mu D^-1 t for column " +
                                                           std::to_string(j + 1)});
                    continue;
                }
                if (i == j) {
                    literal = literal && e == det;
                    e -= det;
                }
                test(name, e);
            }
        rep.add({"left determinant", true, Mode::exact,
                 literal ? "D' = D as elements" : "D' = D modulo the ideal, not as elements"});

        // Counit.
        auto counit = [&](const Element& e) {
            Scalar acc;
            for (const auto& [w, c] : e.terms()) {
                bool one = true;
                for (Letter l : w) {
                    const std::string& n = a[l].name;
                    if (n != "Dinv" && n[1] != n[2]) one = false;
                }
                if (one) acc += c;
            }
            return acc;
        };
        std::vector<std::string> bad;
        const auto& tt = ctx.family(FamilyId::tt);
        for (std::size_t k = 0; k < tt.size(); ++k)
            if (!counit(tt[k]).is_zero()) bad.push_back(std::to_string(k));
        rep.add({"counit of R_tt", bad.empty(), Mode::exact, bad.empty() ? "all rows map to 0" : "rows " + join(bad)});
        const Scalar ed = counit(det);
        rep.add({"counit of D", ed == Scalar(1), Mode::exact, ed.to_string()});
    });
}

Report check_determinant(const Context& ctx) {
    return run("determinant", ctx.options().modular, [&](Report& rep) {
        const Alphabet& a = catalog::quantum_group_alphabet();
        ctx.require_degree(4);
        const Mode mode = ctx.mode_for(4);
        IdealOracle oracle(ctx.rtt(), 4, mode, ctx.options().modular);
        std::optional<IdealOracle> exact;
        if (mode == Mode::modular) exact.emplace(ctx.rtt(), 4, Mode::exact);
        const Element& det = ctx.determinant();
        bool noncentral = false;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const std::string tn = "t" + std::to_string(i) + std::to_string(j);
                const Word tw = {catalog::t(i, j), catalog::dinv()}, wt = {catalog::dinv(), catalog::t(i, j)};
                std::optional<Scalar> mu;
                for (const auto& r : ctx.family(FamilyId::tdinv))
                    if (r.size() == 2 && r.coefficient(tw) == Scalar(1) && !r.coefficient(wt).is_zero())
                        mu = -r.coefficient(wt);
                const std::string name = tn + " D = lambda D " + tn;
                if (!mu) {
                    rep.add({name, false, Mode::exact, "the R_tDinv row for " + tn + " is not of the form t D^-1 = mu D^-1 t"},
                            tn);
                    continue;
                }
                const Scalar lambda = mu->inverse();
                const Element t = Element::letter(catalog::t(i, j));
                const Element e = t * det - (det * t).scaled(lambda);
                auto res = oracle.test(e);
                rep.add({name, res.member, res.mode, "lambda = " + lambda.to_string() + ", " + membership_note(res)},
                        res.member ? std::nullopt : std::optional<std::string>(e.to_string(a)));
                if (res.member && !lambda.is_one()) noncentral = true;
                if (exact && ((i == 2 && j == 1) || (i == 1 && j == 1))) {
                    auto er = exact->test(e);
                    rep.add({name + " (exact)", er.member == res.member, Mode::exact,
                             std::string("exact ") + (er.member ? "member" : "nonmember") + ", agrees with modular"});
                }
            }
        const Element t21 = Element::letter(catalog::t(2, 1));
        auto central = oracle.test(t21 * det - det * t21);
        rep.add({"t21 D - D t21 nonmember", !central.member, central.mode, membership_note(central)});
        rep.add({"D is not central", noncentral && !central.member, Mode::exact,
                 noncentral ? "some certified lambda differs from 1" : "no certified lambda differs from 1"});
        if (ctx.options().errata == Errata::on) {
            std::vector<std::string> rows;
            for (const auto& e : catalog::errata())
                if (e.family == FamilyId::tdinv) rows.push_back(std::to_string(e.row));
            rep.add({"errata rows certified", true, Mode::exact, "R_tDinv rows " + join(rows) + " as corrected"});
        }
    });
}

namespace {

TensorImages calculus_coaction_images(const Context& ctx) {
    const Alphabet& ca = catalog::calculus_alphabet();
    TensorImages images(ca.size());
    const TMatrix& pt = ctx.transpose_inverse_numerators();
    const Element dinv = Element::letter(catalog::dinv());
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const Element tij = Element::letter(catalog::t(i, j));
            images[letter_index(ca.at("x" + std::to_string(i)))].emplace_back(tij, Word{ca.at("x" + std::to_string(j))});
            images[letter_index(ca.at("xi" + std::to_string(i)))].emplace_back(tij,
                                                                               Word{ca.at("xi" + std::to_string(j))});
            // d_l -> sum_j (T^t)^-1 {j l} d_j = D^-1 P^j_l d_j; here l = i.
            images[letter_index(ca.at("d" + std::to_string(i)))].emplace_back(dinv * pt[j - 1][i - 1],
                                                                              Word{ca.at("d" + std::to_string(j))});
        }
    return images;
}

bool derivative_family(FamilyId id) {
    return id == FamilyId::dd || id == FamilyId::omega_dxi || id == FamilyId::omega_inv_dxi ||
           id == FamilyId::omega_xd || id == FamilyId::omega_inv_xd;
}

Variant variant_of(FamilyId id) {
    return id == FamilyId::omega_inv_xxi || id == FamilyId::omega_inv_dxi || id == FamilyId::omega_inv_xd
               ? Variant::omega_inv
               : Variant::omega;
}

void coaction_family(Report& rep, const Context& ctx, FamilyId id, const Presentation& group) {
    const Alphabet& ca = catalog::calculus_alphabet();
    const Alphabet& qa = catalog::quantum_group_alphabet();
    if (id == FamilyId::tt || id == FamilyId::tdinv)
        throw std::invalid_argument("the quantum-group families coact by the coproduct (see hopf)");
    const Presentation calc = ctx.calculus(variant_of(id));
    const TensorImages images = calculus_coaction_images(ctx);
    const DinvStraightener st(ctx);
    const auto& rels = ctx.family(id);

    std::vector<TensorElement> cleared;
    std::size_t ld = 0, rd = 0;
    for (const auto& r : rels) {
        cleared.push_back(clear_left(tensor_image(r, images), st, ctx.determinant()));
        ld = std::max(ld, left_degree(cleared.back()));
        rd = std::max(rd, right_degree(cleared.back()));
    }
    ctx.require_degree(ld);
    const Mode mode = ctx.mode_for(ld, derivative_family(id));
    IdealSpan<Scalar> right = exact_span(calc, std::max<std::size_t>(rd, 2));
    IdealOracle left(group, ld, mode, ctx.options().modular);
    const std::string key = catalog::family_key(id);
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const std::string name = key + "[" + std::to_string(k) + "]";
        guarded(rep, name, [&] {
            auto res = tensor_membership(cleared[k], right, left);
            std::string note = res.member ? "image in the ideal" : "image outside the ideal";
            note += " (bidegree " + std::to_string(left_degree(cleared[k])) + "," + std::to_string(right_degree(cleared[k])) + ")";
            rep.add({name, res.member, res.member ? res.mode : Mode::exact, note},
                    res.member ? std::nullopt
                               : std::optional<std::string>(name + ": " + tensor_witness(res, qa, ca)));
        });
    }
}

}  // namespace

Report check_coaction(const Context& ctx, FamilyId id) {
    return run("coaction", ctx.options().modular, [&](Report& rep) {
        const Presentation group = ctx.rtt();
        coaction_family(rep, ctx, id, group);
    });
}

Report check_coaction_with(const Context& ctx, FamilyId id, const std::vector<std::size_t>& dropped) {
    return run("coaction", ctx.options().modular, [&](Report& rep) {
        Presentation group = ctx.rtt();
        for (std::size_t k : dropped) group.relations.at(k) = Element();
        coaction_family(rep, ctx, id, group);
    });
}

Report check_coaction(const Context& ctx) {
    return run("coaction", ctx.options().modular, [&](Report& rep) {
        const Alphabet& qa = catalog::quantum_group_alphabet();
        // Preconditions of the derivative coaction: (T^t)^-1 = D^-1 P.
        ctx.require_degree(3);
        IdealOracle oracle(ctx.rtt(), 3, ctx.mode_for(3), ctx.options().modular);
        const TMatrix& p = ctx.transpose_inverse_numerators();
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) {
                Element e;
                for (int j = 1; j <= 3; ++j) e += p[j - 1][l - 1] * Element::letter(catalog::t(k, j));
                if (k == l) e -= ctx.determinant();
                auto res = oracle.test(e);
                rep.add({"sum_j P^j_" + std::to_string(l) + " t" + std::to_string(k) + "j = delta D", res.member,
                         res.mode, membership_note(res)},
                        res.member ? std::nullopt : std::optional<std::string>(e.to_string(qa)));
            }
        const Presentation group = ctx.rtt();
        for (FamilyId id : catalog::kAllFamilies) {
            if (id == FamilyId::tt || id == FamilyId::tdinv) continue;
            coaction_family(rep, ctx, id, group);
        }
    });
}

Report check_hopf(const Context& ctx) {
    return run("hopf", ctx.options().modular, [&](Report& rep) {
        const Alphabet& qa = catalog::quantum_group_alphabet();
        TensorImages delta(qa.size());
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    delta[letter_index(catalog::t(i, j))].emplace_back(Element::letter(catalog::t(i, k)),
                                                                       Word{catalog::t(k, j)});
        delta[letter_index(catalog::dinv())].emplace_back(Element::letter(catalog::dinv()), Word{catalog::dinv()});
        const Presentation rtt = ctx.rtt();
        const DinvStraightener st(ctx);

        {
            IdealSpan<Scalar> right = exact_span(rtt, 2);
            IdealOracle left(rtt, 2, ctx.mode_for(2), ctx.options().modular);
            const auto& tt = ctx.family(FamilyId::tt);
            for (std::size_t k = 0; k < tt.size(); ++k) {
                const std::string name = "Delta(R_tt[" + std::to_string(k) + "])";
                auto res = tensor_membership(tensor_image(tt[k], delta), right, left);
                rep.add({name, res.member, res.member ? res.mode : Mode::exact, res.member ? "in the ideal" : "outside the ideal"},
                        res.member ? std::nullopt : std::optional<std::string>(name + ": " + tensor_witness(res, qa, qa)));
            }
            const auto& td = ctx.family(FamilyId::tdinv);
            for (std::size_t k = 0; k < td.size(); ++k) {
                const std::string name = "Delta(R_tDinv[" + std::to_string(k) + "])";
                guarded(rep, name, [&] {
                    TensorElement e = clear_right(clear_left(tensor_image(td[k], delta), st, ctx.determinant()), st,
                                                  ctx.determinant());
                    ctx.require_degree(std::max(left_degree(e), right_degree(e)));
                    IdealSpan<Scalar> r2 = exact_span(rtt, std::max<std::size_t>(right_degree(e), 1));
                    IdealOracle l2(rtt, std::max<std::size_t>(left_degree(e), 1), ctx.mode_for(left_degree(e)),
                                   ctx.options().modular);
                    auto res = tensor_membership(e, r2, l2);
                    rep.add({name, res.member, res.member ? res.mode : Mode::exact,
                             res.member ? "in the ideal" : "outside the ideal"},
                            res.member ? std::nullopt
                                       : std::optional<std::string>(name + ": " + tensor_witness(res, qa, qa)));
                });
            }
        }
        guarded(rep, "Delta(D) = D (x) D", [&] {
            ctx.require_degree(3);
            IdealSpan<Scalar> right = exact_span(rtt, 3);
            IdealOracle left(rtt, 3, ctx.mode_for(3), ctx.options().modular);
            TensorElement e = tensor_image(ctx.determinant(), delta);
            for (const auto& [w, c] : ctx.determinant().terms()) e[w] -= ctx.determinant().scaled(c);
            auto res = tensor_membership(e, right, left);
            rep.add({"Delta(D) = D (x) D", res.member, res.member ? res.mode : Mode::exact,
                     res.member ? "difference in the ideal" : "difference outside the ideal"},
                    res.member ? std::nullopt : std::optional<std::string>(tensor_witness(res, qa, qa)));
        });

        // Counit: eps(t^i_j) = delta, eps(Dinv) = 1.
        auto eps_word = [&](const Word& w) {
            for (Letter l : w) {
                const std::string& n = qa[l].name;
                if (n != "Dinv" && n[1] != n[2]) return false;
            }
            return true;
        };
        auto eps = [&](const Element& e) {
            Scalar s;
            for (const auto& [w, c] : e.terms())
                if (eps_word(w)) s += c;
            return s;
        };
        std::vector<std::string> bad;
        for (FamilyId id : {FamilyId::tt, FamilyId::tdinv}) {
            const auto& rels = ctx.family(id);
            for (std::size_t k = 0; k < rels.size(); ++k)
                if (!eps(rels[k]).is_zero()) bad.push_back(catalog::family_key(id) + "[" + std::to_string(k) + "]");
        }
        rep.add({"counit is an algebra map", bad.empty(), Mode::exact, bad.empty() ? "all relations map to 0" : join(bad)});
        bool left_ok = true, right_ok = true;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                TensorElement d = tensor_image(Element::letter(catalog::t(i, j)), delta);
                Element l, r;
                for (const auto& [rw, le] : d) {
                    if (eps_word(rw)) r += le;             // (id (x) eps)
                    l += Element::word(rw).scaled(eps(le));  // (eps (x) id)
                }
                const Element t = Element::letter(catalog::t(i, j));
                left_ok = left_ok && l == t;
                right_ok = right_ok && r == t;
            }
        rep.add({"(eps (x) id) Delta = id", left_ok, Mode::exact, ""});
        rep.add({"(id (x) eps) Delta = id", right_ok, Mode::exact, ""});
        rep.add({"antipode", true, Mode::exact, "S(T) = Cof D^-1; the axiom S(t)t = eps is certified by the inverse check"});
    });
}

Report check_star(const Context& ctx) {
    return run("star", ctx.options().modular, [&](Report& rep) {
        const StarMap star;
        const Presentation xx = ctx.family_presentation(FamilyId::xx);
        IdealOracle xo(xx, 2, ctx.mode_for(2), ctx.options().modular);
        for (std::size_t k = 0; k < xx.relations.size(); ++k) {
            const Element img = star.apply(xx.relations[k], xx.alphabet);
            auto res = xo.test(img);
            const bool fixed = img == xx.relations[k];
            rep.add({"R_xx[" + std::to_string(k) + "]*", res.member, res.mode,
                     std::string(fixed ? "fixed point" : "member") + (res.member ? "" : " failed")},
                    res.member ? std::nullopt : std::optional<std::string>(img.to_string(xx.alphabet)));
        }
        const Presentation qg = ctx.quantum_group();
        const Alphabet& qa = qg.alphabet;
        IdealOracle qo(qg, 3, ctx.mode_for(3), ctx.options().modular);
        for (FamilyId id : {FamilyId::tt, FamilyId::tdinv}) {
            const auto& rels = ctx.family(id);
            std::vector<std::string> bad;
            Mode used = Mode::exact;
            for (std::size_t k = 0; k < rels.size(); ++k) {
                const Element img = star.apply(rels[k], qa);
                auto res = qo.test(img);
                used = res.mode;
                if (!res.member) bad.push_back(std::to_string(k));
                if (!res.member && !rep.counterexample)
                    rep.counterexample = catalog::family_key(id) + "[" + std::to_string(k) + "]* = " + img.to_string(qa);
            }
            rep.add({catalog::family_key(id) + "* in the ideal", bad.empty(), bad.empty() ? used : Mode::exact,
                     bad.empty() ? "all " + std::to_string(rels.size()) + " images are members"
                                 : "rows outside: " + join(bad)});
        }
        auto dres = qo.test(star.apply(ctx.determinant(), qa) - ctx.determinant());
        rep.add({"D* = D", dres.member, dres.mode, membership_note(dres)});
        const bool inv = star.involutive(qa) && star.involutive(catalog::calculus_subalphabet("x"));
        rep.add({"star is involutive", inv, Mode::exact, "on the quantum-group and x generators"});
    });
}

Report check_specializations(const Context& ctx) {
    return run("specializations", ctx.options().modular, [&](Report& rep) {
        const Scalar q = Scalar::q(), u = Scalar::u();
        // (a) s = 0: the quantum plane.
        {
            const Presentation xx = ctx.family_presentation(FamilyId::xx);
            const Presentation s0 = specialize(xx, {{Param::s, Scalar(0)}});
            std::vector<Element> plane = {parse_element("x1*x2 - q*x2*x1", xx.alphabet),
                                          parse_element("x1*x3 - u*x3*x1", xx.alphabet),
                                          parse_element("x2*x3 - u^-1*x3*x2", xx.alphabet)};
            auto cmp = span_compare(s0.relations, plane);
            rep.add({"s=0 gives the quantum plane", cmp.verdict == SpanVerdict::equal, Mode::exact, span_note(cmp)});
            auto gen = span_compare(xx.relations, s0.relations);
            rep.add({"generic s differs from s=0", gen.verdict != SpanVerdict::equal, Mode::exact, span_note(gen)});
        }
        // (b) q = u^2.
        {
            const ParamBindings b = {{Param::q, u.pow(2)}};
            const bool same = ctx.omega().substitute(b) == ctx.omega_inverse().substitute(b);
            rep.add({"q=u^2: omega = omega^-1", same, Mode::exact, same ? "entrywise" : "entries differ"});
            const auto mo = catalog::mixed_families(Variant::omega), mi = catalog::mixed_families(Variant::omega_inv);
            for (std::size_t k = 0; k < 3; ++k) {
                std::vector<Element> x, y;
                for (const auto& r : ctx.family(mo[k])) x.push_back(map_coefficients(r, [&](const Scalar& c) { return substitute(c, b); }));
                for (const auto& r : ctx.family(mi[k])) y.push_back(map_coefficients(r, [&](const Scalar& c) { return substitute(c, b); }));
                auto cmp = span_compare(x, y);
                rep.add({"q=u^2: " + catalog::family_key(mo[k]) + " = " + catalog::family_key(mi[k]),
                         cmp.verdict == SpanVerdict::equal, Mode::exact, span_note(cmp)});
            }
        }
        // (c) t31 = t32 = 0.
        const Presentation rtt = ctx.rtt();
        GeneratorBindings kill;
        kill.values = {{"t31", 0}, {"t32", 0}};
        const Presentation cut = specialize(rtt, {}, kill);
        {
            IdealOracle oracle(cut, 2, ctx.mode_for(2), ctx.options().modular);
            for (const char* text : {"(u^2-q)*t12*t33", "(u^2-q)*t21*t33"}) {
                const Element e = parse_element(text, cut.alphabet);
                auto res = oracle.test(e);
                rep.add({std::string("t31=t32=0: ") + text + " in the ideal", res.member, res.mode, membership_note(res)});
            }
        }
        // (d) q = u^2, t31 = t32 = 0, w = t33^-1.
        guarded(rep, "t' commute", [&] {
            const ParamBindings b = {{Param::q, u.pow(2)}};
            const Presentation spec = specialize(rtt, b, kill);
            std::vector<Generator> gens = spec.alphabet.generators();
            int rank = 0;
            for (const auto& g : gens) rank = std::max(rank, g.rank);
            gens.push_back({"w", Parity::even, rank + 1, 0});
            Presentation ext{"t-prime", Alphabet(gens), {}};
            for (const auto& r : spec.relations) ext.relations.push_back(embed(r, spec.alphabet, ext.alphabet));
            const Alphabet& ea = ext.alphabet;
            auto L = [&](const std::string& n) { return Element::letter(ea.at(n)); };
            ext.relations.push_back(L("w") * L("t33") - Element(1));
            ext.relations.push_back(L("t33") * L("w") - Element(1));
            const RuleSystem rs = orient(spec, OrientPolicy::lenient);
            const std::vector<std::string> names = {"t11", "t12", "t13", "t22", "t21", "t23", "t33"};
            std::vector<std::string> rules;
            for (const auto& n : names) {
                if (n == "t33") continue;
                const Letter tl = spec.alphabet.at(n), t33 = spec.alphabet.at("t33");
                const Element a1 = rs.normalize(Element::word({t33, tl})), a2 = rs.normalize(Element::word({tl, t33}));
                // t33 t = c t t33
                std::optional<Scalar> c;
                if (a1.size() == 1 && a2.size() == 1 && a1.leading_word() == a2.leading_word())
                    c = a1.leading_coefficient() / a2.leading_coefficient();
                if (!c) throw PresentationError("t33 " + n + " is not a multiple of " + n + " t33");
                ext.relations.push_back(L("w") * L(n) - (L(n) * L("w")).scaled(c->inverse()));
                const Scalar f = c->inverse();
                rules.push_back("w " + n + " = " + (f.is_one() ? "" : f.to_string() + " ") + n + " w");
            }
            rep.add({"w-commutation rules", true, Mode::exact, join(rules, "; ")});
            Presentation with_g = ext;
            with_g.relations.push_back(parse_element("t11*t22 - (1/q)*t12*t21 - t33^2", ea));
            for (auto& r : with_g.relations) r = map_coefficients(r, [&](const Scalar& c) { return substitute(c, b); });
            ctx.require_degree(4);
            const Mode mode = ctx.mode_for(4);
            IdealOracle plain(ext, 4, mode, ctx.options().modular);
            IdealOracle cond(with_g, 4, mode, ctx.options().modular);
            std::vector<std::string> survivors;
            bool all_cond = true;
            Mode used = Mode::exact;
            for (std::size_t x = 0; x < names.size(); ++x)
                for (std::size_t y = x + 1; y < names.size(); ++y) {
                    const Element a1 = L(names[x]) * L("w"), b1 = L(names[y]) * L("w");
                    const Element comm = a1 * b1 - b1 * a1;
                    auto r1 = plain.test(comm);
                    auto r2 = cond.test(comm);
                    used = r2.mode;
                    if (!r1.member) survivors.push_back("[" + names[x] + "', " + names[y] + "']");
                    if (!r2.member) {
                        all_cond = false;
                        if (!rep.counterexample) rep.counterexample = comm.to_string(ea);
                    }
                }
            rep.add({"t' commute given det T' = 1", all_cond, all_cond ? used : Mode::exact,
                     all_cond ? "all 21 commutators vanish with t11 t22 - (1/q) t12 t21 = t33^2 adjoined"
                              : "some commutator survives"});
            rep.add({"t' commute without the determinant condition", true, used,
                     survivors.empty() ? "all commutators vanish"
                                       : "surviving: " + join(survivors)});
        });
    });
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {"ybe",      "constraints", "eigen",       "calculus-omega",
                                                 "calculus-omega-inv", "rtt", "inverse",   "determinant",
                                                 "coaction", "hopf",        "star",        "specializations"};
    return ids;
}

namespace {

Report merge_reports(const std::string& id, std::vector<Report> parts, const ModularSettings& ms) {
    Report out;
    out.check = id;
    for (auto& p : parts) {
        for (auto& d : p.details) out.details.push_back(std::move(d));
        if (!out.counterexample && p.counterexample && p.status == Status::fail) out.counterexample = p.counterexample;
        out.millis += p.millis;
    }
    out.finish(ms);
    return out;
}

}  // namespace

Report run_check(const std::string& id, const Context& ctx) {
    const auto& ms = ctx.options().modular;
    if (id == "ybe")
        return merge_reports(id, {check_yang_baxter(ctx.omega(), "omega"), check_yang_baxter(ctx.omega_inverse(), "omega-inv")}, ms);
    if (id == "constraints")
        return merge_reports(id, {check_constraints(ctx.omega(), "omega"), check_constraints(ctx.omega_inverse(), "omega-inv")}, ms);
    if (id == "eigen") return check_eigenstructure(ctx);
    if (id == "calculus-omega") return check_calculus(ctx, Variant::omega);
    if (id == "calculus-omega-inv") return check_calculus(ctx, Variant::omega_inv);
    if (id == "rtt") return check_rtt(ctx);
    if (id == "inverse") return check_inverse(ctx);
    if (id == "determinant") return check_determinant(ctx);
    if (id == "coaction") return check_coaction(ctx);
    if (id == "hopf") return check_hopf(ctx);
    if (id == "star") return check_star(ctx);
    if (id == "specializations") return check_specializations(ctx);
    throw std::invalid_argument("unknown check '" + id + "' (known: " + join(check_ids()) + ")");
}

}  // namespace wh3::verify
