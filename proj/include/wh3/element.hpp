#pragma once

#include "wh3/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wh3 {

enum class Parity { even, odd };

struct Generator {
    std::string name;
    Parity parity = Parity::even;
    int rank = 0;
    int weight = 0;  // additive grading used by the monomial order

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// A generator reference: the low byte is its index in the Alphabet (rank
/// order), the high byte carries its weight offset by 128, so words can be
/// compared without consulting the alphabet.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

inline std::size_t letter_index(Letter l) { return l & 0xffu; }
inline int letter_weight(Letter l) { return static_cast<int>(l >> 8) - 128; }
inline Letter make_letter(std::size_t index, int weight) {
    return static_cast<Letter>((static_cast<unsigned>(weight + 128) << 8) | index);
}
inline int word_weight(const Word& w) {
    int s = 0;
    for (Letter l : w) s += letter_weight(l);
    return s;
}

/// Weighted deg-lex: shorter words first, then larger total weight is
/// larger, then lexicographic by generator rank. With all weights zero this
/// is plain deg-lex.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        const int wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto ia = letter_index(a[i]), ib = letter_index(b[i]);
            if (ia != ib) return ia < ib;
        }
        return false;
    }
};

class Alphabet {
public:
    Alphabet() = default;
    /// Sorts by rank; names must be unique.
    explicit Alphabet(std::vector<Generator> gens);
    /// Builds an alphabet from names with ranks 0..n-1.
    static Alphabet from_names(const std::vector<std::string>& names,
                               const std::vector<std::string>& odd = {});

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](Letter l) const { return gens_[letter_index(l)]; }
    const std::vector<Generator>& generators() const { return gens_; }
    Letter letter(std::size_t index) const { return make_letter(index, gens_[index].weight); }
    std::optional<Letter> find(std::string_view name) const;
    Letter at(std::string_view name) const;  // throws std::out_of_range
    std::vector<std::string> names() const;
    bool is_odd(Letter l) const { return (*this)[l].parity == Parity::odd; }

    std::string format(const Word& w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Generator> gens_;
};

/// Noncommutative polynomial: finite sum of Scalar * Word, no zero terms.
class Element {
public:
    using Terms = std::map<Word, Scalar, DegLexLess>;

    Element() = default;
    Element(const Scalar& c);  // NOLINT(google-explicit-constructor)
    Element(long c) : Element(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    static Element letter(Letter l) { return word(Word{l}); }
    static Element word(const Word& w, const Scalar& c = Scalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
    std::size_t min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
    bool is_homogeneous() const { return degree() == min_degree(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Scalar scalar_value() const;  // throws unless is_scalar()
    /// Component of word length `d`.
    Element homogeneous_part(std::size_t d) const;

    void add_term(const Word& w, const Scalar& c);

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& b);
    Element& operator-=(const Element& b);
    Element& operator*=(const Element& b) { return *this = *this * b; }
    Element scaled(const Scalar& c) const;
    Element pow(unsigned e) const;

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Canonical text in the expression grammar, terms in ascending deg-lex.
    std::string to_string(const Alphabet& alphabet) const;

private:
    Terms terms_;
};

/// Applies `f` to every coefficient, dropping terms that become zero.
template <class F>
Element map_coefficients(const Element& e, F&& f) {
    Element out;
    for (const auto& [w, c] : e.terms()) out.add_term(w, f(c));
    return out;
}

/// Re-expresses `e` over another alphabet by generator name.
Element embed(const Element& e, const Alphabet& from, const Alphabet& to);

/// Text of `c` suitable as a coefficient in a product, with its sign split off.
struct CoefficientText {
    bool negative = false;
    std::string text;  // empty when the magnitude is 1
};
CoefficientText coefficient_text(const Scalar& c);

/// Parses an expression in the shared grammar: scalars, generator names of
/// `alphabet`, + - * / ^ and parentheses; "lhs = rhs" yields lhs - rhs.
Element parse_element(std::string_view text, const Alphabet& alphabet);

}  // namespace wh3
