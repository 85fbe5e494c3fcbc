#pragma once

#include "wh3/param_poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wh3 {

class ScalarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with a 0-based character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// An element of Q(q, u, s).
///
/// Canonical form: num and den are polynomials (non-negative exponents)
/// without a common factor, and den has coprime integer coefficients with a
/// positive leading coefficient. Negative powers of q and u are absorbed into
/// the denominator, so two Scalars are equal iff their stored parts agree.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& c) : num_(c), den_(1) {}
    explicit Scalar(const ParamPoly& p);
    Scalar(const ParamPoly& num, const ParamPoly& den);

    static Scalar param(Param p) { return Scalar(ParamPoly::variable(p)); }
    static Scalar q() { return param(Param::q); }
    static Scalar u() { return param(Param::u); }
    static Scalar s() { return param(Param::s); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == den_; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class rational_value() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    Scalar inverse() const;
    Scalar pow(int e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text; re-parses (via parse_scalar) to the same value.
    std::string to_string() const;
    /// True when to_string() needs no parentheses as a factor of a product.
    bool is_atomic_text() const;

    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    void canonicalize();
    ParamPoly num_;
    ParamPoly den_;
};

/// Partial assignment of parameters to Scalars.
using ParamBindings = std::map<Param, Scalar>;

/// Image under the evaluation homomorphism; unbound parameters stay symbolic.
/// Throws ScalarError naming the denominator when it vanishes.
Scalar substitute(const Scalar& a, const ParamBindings& bindings);

/// Parse the scalar grammar: integer/rational literals, q u s, + - * / ^
/// (integer exponents) and parentheses.
Scalar parse_scalar(std::string_view text);

/// Parse "q=u^2,s=0" style binding lists.
ParamBindings parse_bindings(std::string_view text);

}  // namespace wh3
