#include "wh3/scalar.hpp"

#include <sstream>

namespace wh3 {

namespace {

// Scale num/den so den is primitive over Z with positive leading term.
void normalize_constant(ParamPoly& num, ParamPoly& den) {
    mpq_class c = den.content();
    if (den.leading().second < 0) c = -c;
    if (c != 1) {
        num = num.scaled(1 / c);
        den = den.scaled(1 / c);
    }
}

// Clears negative exponents and shared monomial factors.
void shift_monomials(ParamPoly& num, ParamPoly& den) {
    ParamMonomial m = monomial_gcd(num.min_monomial(), den.min_monomial());
    if (!m.is_one()) {
        ParamMonomial inv = ParamMonomial{} / m;
        num = num.shifted(inv);
        den = den.shifted(inv);
    }
}

}  // namespace

Scalar::Scalar(const ParamPoly& p) : num_(p), den_(1) {
    if (!num_.is_polynomial()) canonicalize();
}

Scalar::Scalar(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den) { canonicalize(); }

void Scalar::canonicalize() {
    if (den_.is_zero()) throw ScalarError("division by zero");
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    shift_monomials(num_, den_);
    if (!den_.is_monomial() && !num_.is_monomial()) {
        ParamPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    normalize_constant(num_, den_);
}

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw ScalarError("scalar is not a rational constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    ParamPoly g = gcd(a.den_, b.den_);
    ParamPoly ad = g.is_constant() ? a.den_ : a.den_.exact_div(g);
    ParamPoly bd = g.is_constant() ? b.den_ : b.den_.exact_div(g);
    ParamPoly n = a.num_ * bd + b.num_ * ad;
    ParamPoly d = ad * b.den_;
    if (n.is_zero()) return Scalar();
    if (!g.is_constant()) {
        ParamPoly g2 = gcd(n, g);
        if (!g2.is_constant()) {
            n = n.exact_div(g2);
            d = d.exact_div(g2);
        }
    }
    Scalar r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    shift_monomials(r.num_, r.den_);
    normalize_constant(r.num_, r.den_);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_constant() && b.den_.is_constant()) {
        Scalar r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        normalize_constant(r.num_, r.den_);
        return r;
    }
    ParamPoly g1 = gcd(a.num_, b.den_);
    ParamPoly g2 = gcd(b.num_, a.den_);
    ParamPoly an = g1.is_constant() ? a.num_ : a.num_.exact_div(g1);
    ParamPoly bd = g1.is_constant() ? b.den_ : b.den_.exact_div(g1);
    ParamPoly bn = g2.is_constant() ? b.num_ : b.num_.exact_div(g2);
    ParamPoly ad = g2.is_constant() ? a.den_ : a.den_.exact_div(g2);
    Scalar r;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    shift_monomials(r.num_, r.den_);
    normalize_constant(r.num_, r.den_);
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ScalarError("division by zero scalar");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    normalize_constant(r.num_, r.den_);
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    normalize_constant(r.num_, r.den_);
    return r;
}

std::string Scalar::to_string() const {
    std::string n = num_.to_string();
    if (den_.is_constant() && den_.constant_value() == 1) return n;
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    bool wrap = den_.size() > 1;
    if (!wrap && den_.is_monomial()) {
        int vars = 0;
        for (int e : den_.leading().first.exp) vars += e != 0;
        wrap = vars > 1;
    }
    if (wrap) d = "(" + d + ")";
    return n + "/" + d;
}

bool Scalar::is_atomic_text() const {
    return to_string().find_first_of(" +-*/") == std::string::npos;
}

Scalar substitute(const Scalar& a, const ParamBindings& bindings) {
    if (bindings.empty()) return a;
    auto eval = [&](const ParamPoly& p) {
        Scalar acc;
        for (const auto& [m, c] : p.terms()) {
            Scalar t(c);
            for (int i = 0; i < kNumParams; ++i) {
                const int e = m.exp[i];
                if (e == 0) continue;
                const auto prm = static_cast<Param>(i);
                auto it = bindings.find(prm);
                t *= (it == bindings.end() ? Scalar::param(prm) : it->second).pow(e);
            }
            acc += t;
        }
        return acc;
    };
    Scalar d = eval(a.den());
    if (d.is_zero())
        throw ScalarError("denominator vanishes under substitution: " + a.den().to_string());
    return eval(a.num()) / d;
}

}  // namespace wh3
