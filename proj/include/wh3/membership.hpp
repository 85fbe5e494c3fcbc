#pragma once

#include "wh3/algebra.hpp"
#include "wh3/echelon.hpp"
#include "wh3/modp.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wh3 {

enum class Mode { exact, modular };
const char* to_string(Mode m);

class DegreeBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown internally when a modular point makes some denominator vanish.
class VanishingDenominator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModularSettings {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    unsigned max_attempts = 8;
};

struct MembershipReport {
    bool member = false;
    Mode mode = Mode::exact;
    bool probabilistic = false;  // true only for modular "member" answers
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    unsigned attempt = 0;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::size_t rank = 0;
    std::size_t degree = 0;
    /// Canonical remainder (exact mode only); zero iff member.
    Element remainder;
    /// Deg-lex leading word of the remainder when not a member.
    std::optional<Word> witness;
};

/// Monotone integer code of a word: a < b in DegLexLess iff code(a) < code(b).
class WordCoder {
public:
    explicit WordCoder(std::size_t alphabet_size);
    std::int64_t encode(const Word& w) const;
    std::size_t max_length() const { return max_len_; }

private:
    unsigned bits_ = 1;
    std::size_t max_len_ = 0;
};

/// Evaluation of Scalars into a field K.
template <class K>
using ScalarMap = std::function<K(const Scalar&)>;

/// The degree-bounded span of { w1 r w2 } over K. Closure is computed
/// lazily: only the connected component (words linked through shared rows)
/// of each queried support is generated, which is exact because rows of
/// different components share no column.
template <class K>
class IdealSpan {
public:
    IdealSpan(const Presentation& p, std::size_t degree, ScalarMap<K> to_k)
        : degree_(degree), coder_(p.alphabet.size()), to_k_(std::move(to_k)) {
        if (degree_ > coder_.max_length())
            throw DegreeBoundExceeded("degree " + std::to_string(degree_) + " exceeds the supported word length " +
                                      std::to_string(coder_.max_length()));
        for (const auto& r : p.relations) {
            if (r.is_zero()) continue;
            Rel rel;
            for (const auto& [w, c] : r.terms()) rel.terms.emplace_back(w, to_k_(c));
            rel.maxlen = r.degree();
            if (rel.maxlen > degree_) continue;
            const std::size_t idx = rels_.size();
            rels_.push_back(std::move(rel));
            for (const auto& [w, c] : r.terms()) by_word_[w].push_back(idx);
            if (r.coefficient(Word{}) != Scalar()) has_const_.push_back(idx);
        }
    }

    std::size_t degree() const { return degree_; }
    std::size_t rows() const { return echelon_.rank() + dependent_; }
    std::size_t rank() const { return echelon_.rank(); }
    std::size_t columns() const { return seen_.size(); }

    /// Encodes an element given as (word, K) pairs; closes its support first.
    SparseRow<K> row(const std::vector<std::pair<Word, K>>& terms) {
        std::vector<Word> support;
        for (const auto& [w, c] : terms) support.push_back(w);
        close(support);
        std::map<std::int64_t, K, std::greater<>> acc;
        for (const auto& [w, c] : terms) {
            if (c.is_zero()) continue;
            auto code = coder_.encode(w);
            auto [it, ins] = acc.try_emplace(code, c);
            if (!ins) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        SparseRow<K> out(acc.begin(), acc.end());
        return out;
    }

    SparseRow<K> reduce(const SparseRow<K>& r) const { return echelon_.reduce(r); }
    const Word& word(std::int64_t code) const { return words_.at(code); }

private:
    struct Rel {
        std::vector<std::pair<Word, K>> terms;
        std::size_t maxlen = 0;
    };

    void visit(const Word& w, std::vector<Word>& queue) {
        auto code = coder_.encode(w);
        if (seen_.emplace(code).second) {
            words_.emplace(code, w);
            queue.push_back(w);
        }
    }

    void emit(const Word& pre, std::size_t rel, const Word& suf, std::vector<Word>& queue) {
        Word key = pre;
        key.push_back(static_cast<Letter>(0xffff));
        key.push_back(static_cast<Letter>(rel & 0xffff));
        key.push_back(static_cast<Letter>(rel >> 16));
        key.push_back(static_cast<Letter>(0xffff));
        key.insert(key.end(), suf.begin(), suf.end());
        if (!emitted_.insert(std::move(key)).second) return;
        std::map<std::int64_t, K, std::greater<>> acc;
        Word w;
        for (const auto& [rw, c] : rels_[rel].terms) {
            w.clear();
            w.insert(w.end(), pre.begin(), pre.end());
            w.insert(w.end(), rw.begin(), rw.end());
            w.insert(w.end(), suf.begin(), suf.end());
            visit(w, queue);
            acc.emplace(coder_.encode(w), c);
        }
        SparseRow<K> r(acc.begin(), acc.end());
        if (!echelon_.insert(r)) ++dependent_;
    }

    void close(const std::vector<Word>& start) {
        std::vector<Word> queue;
        for (const auto& w : start) {
            if (w.size() > degree_)
                throw DegreeBoundExceeded("element degree " + std::to_string(w.size()) + " exceeds bound " +
                                          std::to_string(degree_));
            visit(w, queue);
        }
        Word sub, pre, suf;
        while (!queue.empty()) {
            Word w = std::move(queue.back());
            queue.pop_back();
            const std::size_t n = w.size();
            for (std::size_t i = 0; i <= n; ++i) {
                pre.assign(w.begin(), w.begin() + static_cast<long>(i));
                for (std::size_t j = i; j <= n; ++j) {
                    suf.assign(w.begin() + static_cast<long>(j), w.end());
                    const std::size_t outer = pre.size() + suf.size();
                    if (i == j) {
                        for (std::size_t rel : has_const_)
                            if (outer + rels_[rel].maxlen <= degree_) emit(pre, rel, suf, queue);
                        continue;
                    }
                    sub.assign(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
                    auto it = by_word_.find(sub);
                    if (it == by_word_.end()) continue;
                    for (std::size_t rel : it->second)
                        if (outer + rels_[rel].maxlen <= degree_) emit(pre, rel, suf, queue);
                }
            }
        }
    }

    std::size_t degree_;
    WordCoder coder_;
    ScalarMap<K> to_k_;
    std::vector<Rel> rels_;
    std::map<Word, std::vector<std::size_t>, DegLexLess> by_word_;
    std::vector<std::size_t> has_const_;
    std::set<std::int64_t> seen_;
    std::unordered_map<std::int64_t, Word> words_;
    std::set<Word> emitted_;
    SparseEchelon<K> echelon_;
    std::size_t dependent_ = 0;
};

/// Repeated membership queries against one presentation. In modular mode a
/// vanishing denominator triggers a resample of the evaluation point and a
/// rebuild; the attempt number is reported.
class IdealOracle {
public:
    IdealOracle(Presentation p, std::size_t degree, Mode mode, ModularSettings ms = {});
    ~IdealOracle();
    IdealOracle(IdealOracle&&) noexcept;
    IdealOracle& operator=(IdealOracle&&) noexcept;

    MembershipReport test(const Element& e);
    Mode mode() const { return mode_; }
    const Presentation& presentation() const { return pres_; }

private:
    struct State;
    void rebuild();
    Presentation pres_;
    std::size_t degree_;
    Mode mode_;
    ModularSettings ms_;
    unsigned attempt_ = 0;
    std::unique_ptr<State> st_;
};

/// One-shot membership decision.
MembershipReport ideal_membership(const Element& e, const Presentation& p, std::size_t degree,
                                  Mode mode = Mode::exact, const ModularSettings& ms = {});

/// Sum of (left Element) (x) (right word) with right words as keys.
using TensorElement = std::map<Word, Element, DegLexLess>;

struct TensorReport {
    bool member = true;
    Mode mode = Mode::exact;
    bool probabilistic = false;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t components_checked = 0;
    /// A right-factor normal word whose left coefficient is not in the left
    /// ideal, with that coefficient.
    std::optional<std::pair<Word, Element>> witness;
};

/// Decides membership in I_L (x) B + A (x) I_R: each right word is reduced
/// (exactly) to its canonical remainder modulo the right ideal, and each
/// resulting left coefficient is tested in the left ideal.
TensorReport tensor_membership(const TensorElement& e, IdealSpan<Scalar>& right, IdealOracle& left);

/// Exact Scalar-valued span over a presentation.
IdealSpan<Scalar> exact_span(const Presentation& p, std::size_t degree);

}  // namespace wh3
