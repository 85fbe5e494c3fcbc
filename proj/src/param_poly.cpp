#include "wh3/param_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wh3 {

const char* param_name(Param p) {
    switch (p) {
        case Param::q: return "q";
        case Param::u: return "u";
        case Param::s: return "s";
    }
    return "?";
}

bool ParamMonomial::divides(const ParamMonomial& other) const {
    for (int i = 0; i < kNumParams; ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    for (int i = 0; i < kNumParams; ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
}

ParamMonomial operator/(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    for (int i = 0; i < kNumParams; ++i) r.exp[i] = a.exp[i] - b.exp[i];
    return r;
}

ParamMonomial monomial_gcd(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    for (int i = 0; i < kNumParams; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
    return r;
}

namespace {

using TermMap = std::map<ParamMonomial, mpq_class, std::greater<>>;

std::vector<ParamPoly::Term> from_map(TermMap&& m) {
    std::vector<ParamPoly::Term> out;
    out.reserve(m.size());
    for (auto& [mono, c] : m)
        if (c != 0) out.emplace_back(mono, std::move(c));
    return out;
}

}  // namespace

ParamPoly::ParamPoly(long c) {
    if (c != 0) terms_.emplace_back(ParamMonomial{}, mpq_class(c));
}

ParamPoly::ParamPoly(const mpq_class& c) {
    if (c != 0) terms_.emplace_back(ParamMonomial{}, c);
}

ParamPoly::ParamPoly(const ParamMonomial& m, const mpq_class& c) {
    if (c != 0) terms_.emplace_back(m, c);
}

void ParamPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

bool ParamPoly::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        for (int e : m.exp)
            if (e < 0) return false;
    return true;
}

mpq_class ParamPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("ParamPoly::constant_value on non-constant");
    return terms_[0].second;
}

int ParamPoly::degree_in(Param p) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[p] > d) d = m[p];
        first = false;
    }
    return d;
}

int ParamPoly::min_degree_in(Param p) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m[p] < d) d = m[p];
        first = false;
    }
    return d;
}

bool ParamPoly::contains(Param p) const {
    for (const auto& [m, c] : terms_)
        if (m[p] != 0) return true;
    return false;
}

ParamMonomial ParamPoly::min_monomial() const {
    if (terms_.empty()) return {};
    ParamMonomial r = terms_[0].first;
    for (const auto& [m, c] : terms_) r = monomial_gcd(r, m);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    auto& out = r.terms_;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == a.terms_.end() || j->first > i->first) {
            out.push_back(*j++);
        } else {
            mpq_class c = i->second + j->second;
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    if (b.is_monomial()) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
    if (a.is_monomial()) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
    TermMap acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    ParamPoly r;
    r.terms_ = from_map(std::move(acc));
    return r;
}

ParamPoly ParamPoly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

ParamPoly ParamPoly::shifted(const ParamMonomial& m) const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
            return false;
    return true;
}

mpq_class ParamPoly::content() const {
    if (terms_.empty()) return 0;
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    mpq_class r(g, l);
    r.canonicalize();
    return r;
}

ParamPoly ParamPoly::primitive() const {
    if (terms_.empty()) return {};
    mpq_class c = content();
    if (terms_[0].second < 0) c = -c;
    if (c == 1) return *this;
    return scaled(1 / c);
}

bool ParamPoly::try_div(const ParamPoly& b, ParamPoly& quot) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    quot = ParamPoly();
    if (is_zero()) return true;
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.terms_[0];
        quot = shifted(ParamMonomial{} / mb).scaled(1 / cb);
        return quot.is_polynomial() || !is_polynomial();
    }
    ParamPoly r = *this;
    const auto& [lm, lc] = b.terms_[0];
    std::vector<Term> q;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.terms_[0];
        if (!lm.divides(rm)) return false;
        ParamMonomial m = rm / lm;
        mpq_class c = rc / lc;
        q.emplace_back(m, c);
        r -= b.shifted(m).scaled(c);
    }
    quot.terms_ = std::move(q);
    quot.normalize();
    return true;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& b) const {
    ParamPoly q;
    if (!try_div(b, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

std::map<int, ParamPoly> ParamPoly::coefficients_in(Param p) const {
    std::map<int, ParamPoly> out;
    const int k = static_cast<int>(p);
    for (const auto& [m, c] : terms_) {
        ParamMonomial rest = m;
        int e = rest.exp[k];
        rest.exp[k] = 0;
        out[e].terms_.emplace_back(rest, c);
    }
    for (auto& [e, poly] : out) poly.normalize();
    return out;
}

ParamPoly ParamPoly::from_coefficients(Param p, const std::map<int, ParamPoly>& coeffs) {
    ParamPoly r;
    for (const auto& [e, c] : coeffs) r += c.shifted(ParamMonomial::of(p, e));
    return r;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (ac != 1 || m.is_one()) {
            os << ac.get_str();
            wrote = true;
        }
        for (int i = 0; i < kNumParams; ++i) {
            int e = m.exp[i];
            if (e == 0) continue;
            if (wrote) os << "*";
            os << param_name(static_cast<Param>(i));
            if (e != 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

std::size_t ParamPoly::hash() const {
    std::size_t h = terms_.size();
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& [m, c] : terms_) {
        for (int e : m.exp) mix(static_cast<std::size_t>(e));
        mix(mpz_get_ui(c.get_num_mpz_t()));
        mix(mpz_get_ui(c.get_den_mpz_t()));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Multivariate GCD: content / primitive-part recursion with primitive PRS.

namespace {

ParamPoly content_in(const ParamPoly& p, Param v) {
    ParamPoly g;
    for (const auto& [e, c] : p.coefficients_in(v)) {
        g = g.is_zero() ? c.primitive() : gcd(g, c);
        if (g.is_constant()) return ParamPoly(1);
    }
    return g;
}

ParamPoly primitive_in(const ParamPoly& p, Param v) {
    ParamPoly c = content_in(p, v);
    return (c.is_constant() ? p : p.exact_div(c)).primitive();
}

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, Param v) {
    auto bc = b.coefficients_in(v);
    const int n = bc.rbegin()->first;
    const ParamPoly& lcb = bc.rbegin()->second;
    ParamPoly r = a;
    while (!r.is_zero()) {
        auto rc = r.coefficients_in(v);
        const int d = rc.rbegin()->first;
        if (d < n) break;
        const ParamPoly& lcr = rc.rbegin()->second;
        r = lcb * r - (lcr * b).shifted(ParamMonomial::of(v, d - n));
        r = r.primitive();
    }
    return r;
}

ParamPoly primitive_prs_gcd(ParamPoly a, ParamPoly b, Param v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        ParamPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) return b.primitive();
        if (!r.contains(v)) return ParamPoly(1);
        a = std::move(b);
        b = primitive_in(r, v);
    }
}

ParamPoly gcd_core(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_constant() || b.is_constant()) return ParamPoly(1);
    ParamPoly pa = a.primitive(), pb = b.primitive();
    if (pa == pb) return pa;
    ParamPoly quot;
    if (pa.size() >= pb.size() && pa.try_div(pb, quot)) return pb;
    if (pb.size() > pa.size() && pb.try_div(pa, quot)) return pa;

    for (int k = 0; k < kNumParams; ++k) {
        const auto v = static_cast<Param>(k);
        const bool in_a = pa.contains(v), in_b = pb.contains(v);
        if (!in_a && !in_b) continue;
        if (!in_b) return gcd(content_in(pa, v), pb);
        if (!in_a) return gcd(pa, content_in(pb, v));
        ParamPoly ca = content_in(pa, v), cb = content_in(pb, v);
        ParamPoly gc = gcd(ca, cb);
        ParamPoly ppa = ca.is_constant() ? pa : pa.exact_div(ca);
        ParamPoly ppb = cb.is_constant() ? pb : pb.exact_div(cb);
        return (gc * primitive_prs_gcd(ppa.primitive(), ppb.primitive(), v)).primitive();
    }
    return ParamPoly(1);
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("gcd requires non-negative exponents");
    ParamMonomial ma = a.min_monomial(), mb = b.min_monomial();
    ParamMonomial mg = monomial_gcd(ma, mb);
    ParamPoly core;
    if (a.is_monomial() || b.is_monomial())
        core = ParamPoly(1);
    else
        core = gcd_core(a.shifted(ParamMonomial{} / ma), b.shifted(ParamMonomial{} / mb));
    return core.shifted(mg);
}

}  // namespace wh3
