#include "wh3/algebra.hpp"

#include "wh3/columns.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace wh3 {

RuleSystem::RuleSystem(Alphabet alphabet, std::vector<RewriteRule> rules) : alphabet_(std::move(alphabet)) {
    for (auto& r : rules) add_rule(std::move(r));
}

void RuleSystem::add_rule(RewriteRule rule) {
    DegLexLess less;
    for (const auto& [w, c] : rule.rhs.terms())
        if (!less(w, rule.lhs))
            throw PresentationError("rule rhs word " + alphabet_.format(w) + " is not smaller than lhs " +
                                    alphabet_.format(rule.lhs));
    if (rules_.count(rule.lhs)) throw PresentationError("duplicate rule lhs " + alphabet_.format(rule.lhs));
    const std::size_t len = rule.lhs.size();
    if (std::find(lengths_.begin(), lengths_.end(), len) == lengths_.end()) {
        lengths_.push_back(len);
        std::sort(lengths_.begin(), lengths_.end());
    }
    rules_.emplace(std::move(rule.lhs), std::move(rule.rhs));
}

const Element* RuleSystem::find(const Word& lhs) const {
    auto it = rules_.find(lhs);
    return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> RuleSystem::occurrences(const Word& w) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len : lengths_) {
            if (i + len > w.size()) break;
            sub.assign(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + len));
            if (rules_.count(sub)) out.emplace_back(i, len);
        }
    }
    return out;
}

bool RuleSystem::is_reducible(const Word& w) const {
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len : lengths_) {
            if (i + len > w.size()) break;
            sub.assign(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + len));
            if (rules_.count(sub)) return true;
        }
    }
    return false;
}

Element RuleSystem::normalize(const Element& e, const NormalizeOptions& opts, std::size_t* steps) const {
    Element::Terms work = e.terms();
    Element result;
    std::size_t count = 0;
    std::mt19937_64 rng(opts.seed);
    Word nw;
    while (!work.empty()) {
        auto last = std::prev(work.end());
        Word w = last->first;
        Scalar c = std::move(last->second);
        work.erase(last);
        auto occ = occurrences(w);
        if (occ.empty()) {
            result.add_term(w, c);
            continue;
        }
        if (++count > opts.max_steps)
            throw RewriteBudgetExceeded("rewrite budget of " + std::to_string(opts.max_steps) + " steps exceeded");
        std::size_t pick = 0;
        if (opts.strategy == RewriteStrategy::rightmost)
            pick = occ.size() - 1;
        else if (opts.strategy == RewriteStrategy::random)
            pick = std::uniform_int_distribution<std::size_t>(0, occ.size() - 1)(rng);
        const auto [pos, len] = occ[pick];
        Word lhs(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + len));
        const Element& rhs = rules_.at(lhs);
        for (const auto& [rw, rc] : rhs.terms()) {
            nw.clear();
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos + len), w.end());
            Scalar v = c * rc;
            auto [it, inserted] = work.try_emplace(nw, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    if (steps) *steps = count;
    return result;
}

// ---------------------------------------------------------------------------

RuleSystem orient(const Presentation& p, OrientPolicy policy) {
    ColumnIndex cols;
    std::set<Word, DegLexLess> leading;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        cols.add(r);
        leading.insert(r.leading_word());
    }
    cols.number();
    SparseEchelon<Scalar> ech;
    for (const auto& r : p.relations)
        if (!r.is_zero()) ech.insert(cols.row(r));
    std::vector<RewriteRule> rules;
    for (const auto& row : ech.reduced_rows()) {
        const Word& lhs = cols.word(row.front().first);
        if (lhs.empty()) throw PresentationError("degenerate presentation: relations imply 1 = 0");
        if (policy == OrientPolicy::strict && !leading.count(lhs))
            throw PresentationError("inconsistent presentation: relations force the leading word " +
                                    p.alphabet.format(lhs) + " to be rewritten, collapsing the span");
        Element rhs;
        for (std::size_t i = 1; i < row.size(); ++i) rhs.add_term(cols.word(row[i].first), -row[i].second);
        rules.push_back({lhs, std::move(rhs)});
    }
    return RuleSystem(p.alphabet, std::move(rules));
}

// ---------------------------------------------------------------------------

namespace {

Word concat(const Word& a, const Word& b, std::size_t b_from = 0) {
    Word w = a;
    w.insert(w.end(), b.begin() + static_cast<long>(b_from), b.end());
    return w;
}

struct Overlap {
    Word word;
    Element path1, path2;
};

std::vector<Overlap> ambiguities(const RuleSystem& rs, std::size_t max_len) {
    std::vector<Overlap> out;
    for (const auto& [a, ra] : rs.rules()) {
        for (const auto& [b, rb] : rs.rules()) {
            // suffix of a == prefix of b
            for (std::size_t k = 1; k < a.size() && k < b.size() + 0; ++k) {
                if (k >= b.size()) break;
                if (!std::equal(a.end() - static_cast<long>(k), a.end(), b.begin())) continue;
                Word w = concat(a, b, k);
                if (max_len && w.size() > max_len) continue;
                Word tail(b.begin() + static_cast<long>(k), b.end());
                Word head(a.begin(), a.end() - static_cast<long>(k));
                out.push_back({w, ra * Element::word(tail), Element::word(head) * rb});
            }
            // b a proper subword of a
            if (b.size() < a.size()) {
                for (std::size_t p = 0; p + b.size() <= a.size(); ++p) {
                    if (!std::equal(b.begin(), b.end(), a.begin() + static_cast<long>(p))) continue;
                    Word head(a.begin(), a.begin() + static_cast<long>(p));
                    Word tail(a.begin() + static_cast<long>(p + b.size()), a.end());
                    out.push_back({a, ra, Element::word(head) * rb * Element::word(tail)});
                }
            }
        }
    }
    return out;
}

}  // namespace

ConfluenceReport overlap_resolve(const RuleSystem& rs, std::size_t complete_up_to, RuleSystem* completed) {
    ConfluenceReport rep;
    RuleSystem cur = rs;
    const bool complete = complete_up_to > 2;
    std::set<Word, DegLexLess> seen;
    while (true) {
        ++rep.rounds;
        rep.unresolved.clear();
        rep.overlaps_checked = 0;
        bool longer_exists = false;
        std::vector<RewriteRule> fresh;
        for (auto& ov : ambiguities(cur, 0)) {
            if (complete && ov.word.size() > complete_up_to) {
                longer_exists = true;
                continue;
            }
            ++rep.overlaps_checked;
            Element diff = cur.normalize(ov.path1 - ov.path2);
            if (diff.is_zero()) continue;
            if (!complete) {
                rep.unresolved.push_back({ov.word, diff});
                continue;
            }
            // Re-normalize against rules found earlier in this round.
            RuleSystem tmp = cur;
            for (const auto& r : fresh) tmp.add_rule(r);
            diff = tmp.normalize(diff);
            if (diff.is_zero()) continue;
            Scalar lc = diff.leading_coefficient();
            Word lhs = diff.leading_word();
            Element monic = diff.scaled(lc.inverse());
            Element rhs = Element::word(lhs) - monic;
            fresh.push_back({lhs, rhs});
            rep.unresolved.push_back({ov.word, diff});
        }
        if (!complete || fresh.empty()) {
            if (complete) rep.degree_bound_reached = longer_exists && rep.rounds > 1;
            break;
        }
        for (auto& r : fresh) {
            rep.added_rules.push_back(r);
            cur.add_rule(std::move(r));
        }
        if (rep.rounds > 16) {
            rep.degree_bound_reached = true;
            break;
        }
    }
    if (complete) {
        // After completion the remaining list reflects the final round only.
        std::vector<Ambiguity> still;
        for (auto& ov : ambiguities(cur, complete_up_to)) {
            Element diff = cur.normalize(ov.path1 - ov.path2);
            if (!diff.is_zero()) still.push_back({ov.word, diff});
        }
        rep.unresolved = std::move(still);
    }
    if (completed) *completed = cur;
    return rep;
}

// ---------------------------------------------------------------------------

Element derivation_apply(const std::vector<std::optional<Element>>& images, const Element& e,
                         const Alphabet& alphabet) {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        int odd = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Letter g = w[i];
            const std::size_t gi = letter_index(g);
            if (gi >= images.size() || !images[gi])
                throw std::invalid_argument("no derivative image assigned to generator " + alphabet[g].name);
            Word head(w.begin(), w.begin() + static_cast<long>(i));
            Word tail(w.begin() + static_cast<long>(i + 1), w.end());
            Element term = Element::word(head, (odd % 2) ? -c : c) * *images[gi] * Element::word(tail);
            out += term;
            if (alphabet.is_odd(g)) ++odd;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(SpanVerdict v) {
    switch (v) {
        case SpanVerdict::equal: return "equal";
        case SpanVerdict::a_subset_b: return "A_subset_B";
        case SpanVerdict::b_subset_a: return "B_subset_A";
        case SpanVerdict::incomparable: return "incomparable";
    }
    return "?";
}

SpanComparison span_compare(const std::vector<Element>& a, const std::vector<Element>& b) {
    ColumnIndex cols;
    for (const auto& r : a) cols.add(r);
    for (const auto& r : b) cols.add(r);
    cols.number();
    SparseEchelon<Scalar> ea, eb, eu;
    for (const auto& r : a) {
        ea.insert(cols.row(r));
        eu.insert(cols.row(r));
    }
    for (const auto& r : b) {
        eb.insert(cols.row(r));
        eu.insert(cols.row(r));
    }
    SpanComparison out;
    out.rank_a = ea.rank();
    out.rank_b = eb.rank();
    out.rank_union = eu.rank();
    const bool a_in_b = out.rank_union == out.rank_b;
    const bool b_in_a = out.rank_union == out.rank_a;
    if (a_in_b && b_in_a)
        out.verdict = SpanVerdict::equal;
    else if (a_in_b)
        out.verdict = SpanVerdict::a_subset_b;
    else if (b_in_a)
        out.verdict = SpanVerdict::b_subset_a;
    else
        out.verdict = SpanVerdict::incomparable;
    if (!a_in_b) {
        for (const auto& r : a)
            if (!eb.contains(cols.row(r))) {
                out.separating = r;
                break;
            }
    } else if (!b_in_a) {
        for (const auto& r : b)
            if (!ea.contains(cols.row(r))) {
                out.separating = r;
                break;
            }
    }
    return out;
}

std::size_t span_rank(const std::vector<Element>& rows) {
    ColumnIndex cols;
    for (const auto& r : rows) cols.add(r);
    cols.number();
    SparseEchelon<Scalar> e;
    for (const auto& r : rows) e.insert(cols.row(r));
    return e.rank();
}

std::vector<std::size_t> dependent_relations(const std::vector<Element>& rows) {
    ColumnIndex cols;
    for (const auto& r : rows) cols.add(r);
    cols.number();
    SparseEchelon<Scalar> e;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!e.insert(cols.row(rows[i]))) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

Presentation algebra_tensor(const Presentation& a, const Presentation& b) {
    std::vector<Generator> gens;
    int rank = 0;
    for (const auto& g : a.alphabet.generators()) gens.push_back({g.name, g.parity, rank++, g.weight});
    for (const auto& g : b.alphabet.generators()) {
        if (a.alphabet.find(g.name)) throw PresentationError("generator name collision: " + g.name);
        gens.push_back({g.name, g.parity, rank++, g.weight});
    }
    Presentation out{a.name + "(x)" + b.name, Alphabet(std::move(gens)), {}};
    for (const auto& r : a.relations) out.relations.push_back(embed(r, a.alphabet, out.alphabet));
    for (const auto& r : b.relations) out.relations.push_back(embed(r, b.alphabet, out.alphabet));
    for (const auto& ga : a.alphabet.generators()) {
        for (const auto& gb : b.alphabet.generators()) {
            Letter la = out.alphabet.at(ga.name), lb = out.alphabet.at(gb.name);
            out.relations.push_back(Element::word({lb, la}) - Element::word({la, lb}));
        }
    }
    return out;
}

Presentation specialize(const Presentation& p, const ParamBindings& params, const GeneratorBindings& gens) {
    std::vector<Generator> kept;
    for (const auto& g : p.alphabet.generators())
        if (!gens.values.count(g.name)) kept.push_back(g);
    for (const auto& [name, v] : gens.values) {
        if (!p.alphabet.find(name)) throw std::invalid_argument("unknown generator in binding: " + name);
        if (v != 0 && v != 1) throw std::invalid_argument("generator " + name + " may only be bound to 0 or 1");
    }
    Presentation out{p.name, Alphabet(std::move(kept)), {}};
    std::vector<int> fate(p.alphabet.size(), -1);  // -1 keep, 0 kill, 1 erase
    std::vector<Letter> remap(p.alphabet.size(), 0);
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        const auto& name = p.alphabet.generators()[i].name;
        auto it = gens.values.find(name);
        if (it != gens.values.end())
            fate[i] = it->second;
        else
            remap[i] = out.alphabet.at(name);
    }
    for (const auto& r : p.relations) {
        Element nr;
        for (const auto& [w, c] : r.terms()) {
            Word nw;
            bool dead = false;
            for (Letter l : w) {
                const std::size_t li = letter_index(l);
                if (fate[li] == 0) {
                    dead = true;
                    break;
                }
                if (fate[li] == -1) nw.push_back(remap[li]);
            }
            if (dead) continue;
            nr.add_term(nw, substitute(c, params));
        }
        out.relations.push_back(std::move(nr));
    }
    return out;
}

Presentation merge(const std::string& name, const Alphabet& alphabet, const std::vector<Presentation>& parts) {
    Presentation out{name, alphabet, {}};
    for (const auto& p : parts)
        for (const auto& r : p.relations) out.relations.push_back(embed(r, p.alphabet, alphabet));
    return out;
}

}  // namespace wh3
