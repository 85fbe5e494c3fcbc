#pragma once

#include "wh3/echelon.hpp"
#include "wh3/element.hpp"

#include <map>
#include <vector>

namespace wh3 {

/// Dense numbering of a set of words, increasing with deg-lex, so the
/// largest column of a row is its deg-lex leading word.
class ColumnIndex {
public:
    ColumnIndex() = default;
    template <class It>
    ColumnIndex(It first, It last) {
        for (; first != last; ++first) index_.emplace(*first, 0);
        number();
    }

    void add(const Word& w) { index_.emplace(w, 0); }
    void add(const Element& e) {
        for (const auto& [w, c] : e.terms()) add(w);
    }
    /// Must be called after the last add().
    void number() {
        words_.clear();
        std::int64_t i = 0;
        for (auto& [w, idx] : index_) {
            idx = i++;
            words_.push_back(w);
        }
    }

    std::int64_t column(const Word& w) const { return index_.at(w); }
    bool contains(const Word& w) const { return index_.count(w) != 0; }
    const Word& word(std::int64_t col) const { return words_[static_cast<std::size_t>(col)]; }
    std::size_t size() const { return words_.size(); }

    SparseRow<Scalar> row(const Element& e) const {
        SparseRow<Scalar> r;
        r.reserve(e.size());
        for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) r.emplace_back(column(it->first), it->second);
        return r;
    }

    Element element(const SparseRow<Scalar>& r) const {
        Element e;
        for (const auto& [c, v] : r) e.add_term(word(c), v);
        return e;
    }

private:
    std::map<Word, std::int64_t, DegLexLess> index_;
    std::vector<Word> words_;
};

}  // namespace wh3
