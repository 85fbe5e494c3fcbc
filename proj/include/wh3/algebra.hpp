#pragma once

#include "wh3/element.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wh3 {

class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RewriteBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generators plus defining relations (each relation is an Element r with the
/// meaning r = 0). The alphabet's rank order is the monomial order.
struct Presentation {
    std::string name;
    Alphabet alphabet;
    std::vector<Element> relations;
};

struct RewriteRule {
    Word lhs;
    Element rhs;  // every word deg-lex smaller than lhs
};

enum class RewriteStrategy { leftmost, rightmost, random };

struct NormalizeOptions {
    std::size_t max_steps = 5'000'000;
    RewriteStrategy strategy = RewriteStrategy::leftmost;
    std::uint64_t seed = 0;
};

/// Oriented rewriting system; every rule strictly decreases deg-lex, so
/// normalization terminates.
class RuleSystem {
public:
    RuleSystem() = default;
    RuleSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Element, DegLexLess>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }
    const Element* find(const Word& lhs) const;

    void add_rule(RewriteRule rule);
    bool is_reducible(const Word& w) const;

    /// Normal form modulo the rules. `steps` receives the rewrite count.
    Element normalize(const Element& e, const NormalizeOptions& opts = {}, std::size_t* steps = nullptr) const;

private:
    // Positions (start, lhs length) of all rule occurrences in w.
    std::vector<std::pair<std::size_t, std::size_t>> occurrences(const Word& w) const;

    Alphabet alphabet_;
    std::map<Word, Element, DegLexLess> rules_;
    std::vector<std::size_t> lengths_;
};

enum class OrientPolicy { strict, lenient };

/// Reduced row echelon form of the relation span (pivot = deg-lex-max word);
/// each pivot row becomes a monic rule. Under the strict policy a pivot that
/// is not the leading word of some input relation means the relations force
/// an extra collapse and the presentation is rejected as inconsistent.
RuleSystem orient(const Presentation& p, OrientPolicy policy = OrientPolicy::strict);

struct Ambiguity {
    Word overlap;
    Element difference;  // normalized; zero when resolved
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    std::vector<Ambiguity> unresolved;
    std::vector<RewriteRule> added_rules;
    bool degree_bound_reached = false;
    int rounds = 0;
    bool confluent() const { return unresolved.empty() && !degree_bound_reached; }
};

/// Resolves every overlap and inclusion ambiguity of the rule set. With
/// complete_up_to > 2, unresolved differences are oriented into new rules and
/// ambiguities of length <= complete_up_to are re-examined to a fixpoint.
ConfluenceReport overlap_resolve(const RuleSystem& rs, std::size_t complete_up_to = 0,
                                 RuleSystem* completed = nullptr);

/// Extends d(g) = images[g] by the graded Leibniz rule
/// d(ab) = d(a) b + (-1)^{|a|} a d(b), |a| = number of odd letters.
Element derivation_apply(const std::vector<std::optional<Element>>& images, const Element& e,
                         const Alphabet& alphabet);

enum class SpanVerdict { equal, a_subset_b, b_subset_a, incomparable };
const char* to_string(SpanVerdict v);

struct SpanComparison {
    SpanVerdict verdict = SpanVerdict::equal;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    std::size_t rank_union = 0;
    /// A vector of one span outside the other, when they differ.
    std::optional<Element> separating;
};

/// Compares the linear spans of two relation lists over one alphabet.
SpanComparison span_compare(const std::vector<Element>& a, const std::vector<Element>& b);
std::size_t span_rank(const std::vector<Element>& rows);
/// Indices of relations that are linear combinations of earlier ones.
std::vector<std::size_t> dependent_relations(const std::vector<Element>& rows);

/// Tensor product: union alphabet (A below B) and cross-commutation
/// relations g_B g_A - g_A g_B for every pair.
Presentation algebra_tensor(const Presentation& a, const Presentation& b);

struct GeneratorBindings {
    std::map<std::string, int> values;  // each value 0 or 1
};

/// Applies parameter substitution to all coefficients; a generator bound to
/// 0 kills words containing it, one bound to 1 is erased from words. Bound
/// generators leave the alphabet. Relations that vanish are kept as zero.
Presentation specialize(const Presentation& p, const ParamBindings& params,
                        const GeneratorBindings& gens = {});

/// Union of presentations over the alphabet `alphabet` (by generator name).
Presentation merge(const std::string& name, const Alphabet& alphabet, const std::vector<Presentation>& parts);

}  // namespace wh3
