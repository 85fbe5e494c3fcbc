#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wh3 {

/// The three deformation parameters, in the fixed variable order used for
/// term ordering and recursive GCD.
enum class Param : int { q = 0, u = 1, s = 2 };

inline constexpr int kNumParams = 3;
const char* param_name(Param p);

/// Exponent triple q^a u^b s^c. Exponents of q and u may be negative.
struct ParamMonomial {
    std::array<int, kNumParams> exp{0, 0, 0};

    static ParamMonomial of(Param p, int e = 1) {
        ParamMonomial m;
        m.exp[static_cast<int>(p)] = e;
        return m;
    }

    int operator[](Param p) const { return exp[static_cast<int>(p)]; }
    bool is_one() const { return exp[0] == 0 && exp[1] == 0 && exp[2] == 0; }
    int total_degree() const { return exp[0] + exp[1] + exp[2]; }
    bool divides(const ParamMonomial& other) const;

    friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
    friend ParamMonomial operator/(const ParamMonomial& a, const ParamMonomial& b);
    friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
};

ParamMonomial monomial_gcd(const ParamMonomial& a, const ParamMonomial& b);

/// Sparse Laurent polynomial in q, u (and polynomial in s) with rational
/// coefficients. Terms are kept sorted by descending lex order on (q, u, s)
/// with no zero coefficients, so structural equality is value equality.
class ParamPoly {
public:
    using Term = std::pair<ParamMonomial, mpq_class>;

    ParamPoly() = default;
    ParamPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit ParamPoly(const mpq_class& c);
    ParamPoly(const ParamMonomial& m, const mpq_class& c);
    static ParamPoly variable(Param p) { return ParamPoly(ParamMonomial::of(p), mpq_class(1)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;  // no negative exponents
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }
    mpq_class constant_value() const;

    int degree_in(Param p) const;
    int min_degree_in(Param p) const;
    bool contains(Param p) const;
    /// Componentwise minimum exponent over all terms.
    ParamMonomial min_monomial() const;

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
    ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }
    ParamPoly scaled(const mpq_class& c) const;
    ParamPoly shifted(const ParamMonomial& m) const;  // multiply by monomial
    ParamPoly pow(unsigned e) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Rational content: positive c with this/c having coprime integer coefficients.
    mpq_class content() const;
    /// this / content(), sign fixed so the leading coefficient is positive.
    ParamPoly primitive() const;

    /// Exact quotient. Throws std::domain_error when `b` does not divide.
    ParamPoly exact_div(const ParamPoly& b) const;
    /// Returns true and sets `quot` when `b` divides exactly.
    bool try_div(const ParamPoly& b, ParamPoly& quot) const;

    /// Coefficients with respect to one parameter: exponent -> coefficient
    /// polynomial free of that parameter.
    std::map<int, ParamPoly> coefficients_in(Param p) const;
    static ParamPoly from_coefficients(Param p, const std::map<int, ParamPoly>& coeffs);

    std::string to_string() const;
    std::size_t hash() const;

private:
    void normalize();
    std::vector<Term> terms_;
};

/// Greatest common divisor of two polynomials (non-negative exponents),
/// normalized to coprime integer coefficients with positive leading term.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace wh3
