#include "wh3/element.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wh3 {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::stable_sort(gens_.begin(), gens_.end(),
                     [](const Generator& a, const Generator& b) { return a.rank < b.rank; });
    std::set<std::string> seen;
    for (const auto& g : gens_)
        if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator name: " + g.name);
    if (gens_.size() > 255) throw std::invalid_argument("alphabet too large");
    for (const auto& g : gens_)
        if (g.weight < -128 || g.weight > 127) throw std::invalid_argument("generator weight out of range: " + g.name);
}

Alphabet Alphabet::from_names(const std::vector<std::string>& names, const std::vector<std::string>& odd) {
    std::vector<Generator> gens;
    int rank = 0;
    for (const auto& n : names) {
        bool is_odd = std::find(odd.begin(), odd.end(), n) != odd.end();
        gens.push_back({n, is_odd ? Parity::odd : Parity::even, rank++});
    }
    return Alphabet(std::move(gens));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return letter(i);
    return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
    if (auto l = find(name)) return *l;
    throw std::out_of_range("unknown generator: " + std::string(name));
}

std::vector<std::string> Alphabet::names() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.name);
    return out;
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += gens_.at(letter_index(w[i])).name;
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

Element::Element(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Element Element::word(const Word& w, const Scalar& c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(w, c);
    return e;
}

Scalar Element::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar Element::scalar_value() const {
    if (!is_scalar()) throw std::logic_error("element is not a scalar");
    return terms_.empty() ? Scalar() : terms_.begin()->second;
}

Element Element::homogeneous_part(std::size_t d) const {
    Element out;
    for (const auto& [w, c] : terms_)
        if (w.size() == d) out.terms_.emplace_hint(out.terms_.end(), w, c);
    return out;
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& b) {
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
}

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    r += b;
    return r;
}

Element operator-(const Element& a, const Element& b) {
    Element r = a;
    r -= b;
    return r;
}

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

Element Element::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    Element r = *this;
    for (auto& [w, v] : r.terms_) v *= c;
    return r;
}

Element Element::pow(unsigned e) const {
    Element r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

CoefficientText coefficient_text(const Scalar& c) {
    CoefficientText out;
    Scalar mag = c;
    if (!c.num().is_zero() && c.num().leading().second < 0) {
        out.negative = true;
        mag = -c;
    }
    if (mag.is_one()) return out;
    out.text = mag.is_atomic_text() ? mag.to_string() : "(" + mag.to_string() + ")";
    return out;
}

std::string Element::to_string(const Alphabet& alphabet) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        CoefficientText ct = coefficient_text(c);
        if (first)
            os << (ct.negative ? "-" : "");
        else
            os << (ct.negative ? " - " : " + ");
        first = false;
        if (w.empty()) {
            os << (ct.text.empty() ? "1" : ct.text);
        } else {
            if (!ct.text.empty()) os << ct.text << "*";
            os << alphabet.format(w);
        }
    }
    return os.str();
}

Element embed(const Element& e, const Alphabet& from, const Alphabet& to) {
    if (from == to) return e;
    std::vector<std::optional<Letter>> map(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) map[i] = to.find(from.generators()[i].name);
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Word nw(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& l = map[letter_index(w[i])];
            if (!l) throw std::out_of_range("unknown generator: " + from[w[i]].name);
            nw[i] = *l;
        }
        out.add_term(nw, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the shared expression grammar.

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Element parse_relation() {
        Element lhs = parse_sum();
        skip_ws();
        if (peek() == '=') {
            ++pos_;
            Element rhs = parse_sum();
            lhs -= rhs;
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Element parse_sum() {
        Element acc;
        bool first = true;
        while (true) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            Element t = parse_product();
            if (sign < 0)
                acc -= t;
            else
                acc += t;
            first = false;
        }
        return acc;
    }

    Element parse_product() {
        Element acc = parse_power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_power();
            } else if (c == '/') {
                std::size_t at = pos_++;
                Element d = parse_power();
                if (!d.is_scalar()) {
                    pos_ = at;
                    fail("division by a non-scalar expression");
                }
                Scalar ds = d.scalar_value();
                if (ds.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc.scaled(ds.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    Element parse_power() {
        Element base = parse_primary();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (neg) {
            if (!base.is_scalar()) fail("negative power of a non-scalar expression");
            Scalar b = base.scalar_value();
            if (b.is_zero()) fail("negative power of zero");
            return Element(b.pow(-e));
        }
        return base.pow(static_cast<unsigned>(e));
    }

    Element parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Element(Scalar(mpq_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "q") return Element(Scalar::q());
            if (name == "u") return Element(Scalar::u());
            if (name == "s") return Element(Scalar::s());
            if (auto l = alphabet_.find(name)) return Element::letter(*l);
            pos_ = start;
            std::string msg = "unknown symbol '" + name + "'";
            std::string best;
            std::size_t best_d = 3;
            for (const auto& n : alphabet_.names()) {
                std::size_t d = edit_distance(name, n);
                if (d < best_d) {
                    best_d = d;
                    best = n;
                }
            }
            if (!best.empty()) msg += " (did you mean '" + best + "'?)";
            fail(msg);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse_relation();
}

Scalar parse_scalar(std::string_view text) {
    static const Alphabet empty;
    Element e = parse_element(text, empty);
    return e.scalar_value();
}

ParamBindings parse_bindings(std::string_view text) {
    ParamBindings out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected name=value", start);
        std::string name(item.substr(0, eq));
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        Param p;
        if (name == "q")
            p = Param::q;
        else if (name == "u")
            p = Param::u;
        else if (name == "s")
            p = Param::s;
        else
            throw ParseError("unknown parameter '" + name + "'", start);
        out[p] = parse_scalar(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace wh3
