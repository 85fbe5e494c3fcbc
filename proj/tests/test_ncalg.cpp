#include "wh3/algebra.hpp"
#include "wh3/catalog.hpp"
#include "wh3/membership.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wh3;
namespace cat = wh3::catalog;

namespace {

Presentation xx() { return cat::family_presentation(cat::FamilyId::xx); }

Element P(const char* text, const Alphabet& a) { return parse_element(text, a); }

Element random_element(std::mt19937_64& rng, const Alphabet& a, std::size_t max_len, int terms) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), letter(0, a.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Element e;
    for (int i = 0; i < terms; ++i) {
        Word w(len(rng));
        for (auto& l : w) l = a.letter(letter(rng));
        e.add_term(w, Scalar(coeff(rng)) * Scalar::q().pow(static_cast<int>(letter(rng) % 2)));
    }
    return e;
}

}  // namespace

TEST(Parse, ExpressionGrammar) {
    const Alphabet& a = xx().alphabet;
    const Element r = P("x1*x2 - q*x2*x1 - s*x3^2", a);
    EXPECT_EQ(r, xx().relations[0]);
    const Element w = P("t21*Dinv", cat::quantum_group_alphabet());
    EXPECT_EQ(w.size(), 1u);
    EXPECT_EQ(w.degree(), 2u);
    EXPECT_THROW(P("x4", a), ParseError);
    EXPECT_THROW(P("x1*(x2", a), ParseError);
    EXPECT_EQ(P(r.to_string(a).c_str(), a), r);
}

TEST(Orient, QuantumPlaneRules) {
    const Presentation p = xx();
    const RuleSystem rs = orient(p);
    const Alphabet& a = p.alphabet;
    ASSERT_EQ(rs.size(), 3u);
    auto rhs = [&](const char* lhs) {
        const Element* r = rs.find(P(lhs, a).leading_word());
        return r ? *r : Element();
    };
    EXPECT_EQ(rhs("x2*x1"), P("(1/q)*x1*x2 - (s/q)*x3*x3", a));
    EXPECT_EQ(rhs("x3*x1"), P("(1/u)*x1*x3", a));
    EXPECT_EQ(rhs("x3*x2"), P("u*x2*x3", a));
}

TEST(Orient, DerivativeRules) {
    // Printed rows give the rule d2 d1 -> (q^2/u^2) d1 d2; the corrected rows reverse the words.
    const Alphabet a = cat::calculus_subalphabet("d");
    for (auto mode : {cat::Errata::off, cat::Errata::on}) {
        const RuleSystem rs = orient(cat::family_presentation(cat::FamilyId::dd, mode));
        EXPECT_EQ(rs.size(), 3u);
        const Element* r = rs.find(P("d2*d1", a).leading_word());
        ASSERT_NE(r, nullptr);
        EXPECT_EQ(*r, P(mode == cat::Errata::off ? "(q^2/u^2)*d1*d2" : "(u^2/q^2)*d1*d2", a));
    }
}

TEST(Orient, InconsistentPresentationIsRejected) {
    const Alphabet a = Alphabet::from_names({"x1", "x2"});
    const Presentation p{"bad", a, {P("x1*x2 - x2*x1", a), P("x1*x2 - 2*x2*x1", a)}};
    EXPECT_THROW(orient(p, OrientPolicy::strict), PresentationError);
    EXPECT_NO_THROW(orient(p, OrientPolicy::lenient));
}

TEST(Normalize, Examples) {
    const Presentation p = xx();
    EXPECT_EQ(orient(p).normalize(P("x2*x1", p.alphabet)), P("(1/q)*x1*x2 - (s/q)*x3*x3", p.alphabet));
    const Presentation c = cat::calculus(cat::Variant::omega);
    EXPECT_EQ(orient(c).normalize(P("d1*x1", c.alphabet)), P("1 + (q/u^2)*x1*d1", c.alphabet));
}

TEST(Normalize, BudgetIsEnforced) {
    const Presentation p = xx();
    const RuleSystem rs = orient(p);
    NormalizeOptions o;
    o.max_steps = 1;
    EXPECT_THROW(rs.normalize(P("x3*x2*x1*x3*x2*x1", p.alphabet), o), RewriteBudgetExceeded);
}

TEST(Overlaps, QuantumPlaneIsConfluent) {
    const Presentation p = xx();
    const auto cr = overlap_resolve(orient(p));
    EXPECT_TRUE(cr.confluent());
    EXPECT_EQ(cr.overlaps_checked, 1u);
}

TEST(Overlaps, DerivativePlaneIsConfluent) {
    EXPECT_TRUE(overlap_resolve(orient(cat::family_presentation(cat::FamilyId::dd))).confluent());
}

TEST(Overlaps, BrokenCoefficientIsReported) {
    const Presentation p = xx();
    Presentation broken = p;
    broken.relations[1] = P("x1*x3 - 2*u*x3*x1", p.alphabet);
    broken.relations[0] = P("x1*x2 - q*x2*x1 - s*x3*x3", p.alphabet);
    const auto cr = overlap_resolve(orient(broken));
    ASSERT_FALSE(cr.confluent());
    EXPECT_FALSE(cr.unresolved.front().difference.is_zero());
}

TEST(Derivation, LeibnizAndSigns) {
    const Alphabet& a = cat::calculus_alphabet();
    std::vector<std::optional<Element>> images(a.size());
    for (int i = 1; i <= 3; ++i) {
        images[letter_index(a.at("x" + std::to_string(i)))] = Element::letter(a.at("xi" + std::to_string(i)));
        images[letter_index(a.at("xi" + std::to_string(i)))] = Element();
    }
    EXPECT_EQ(derivation_apply(images, P("x1*x2", a), a), P("xi1*x2 + x1*xi2", a));
    EXPECT_EQ(derivation_apply(images, P("xi1*x1", a), a), P("-xi1*xi1", a));

    Presentation sub{"x-xi", a, {}};
    for (auto id : {cat::FamilyId::xx, cat::FamilyId::omega_xxi, cat::FamilyId::xixi})
        for (const auto& r : cat::family(id).relations) sub.relations.push_back(r);
    const Element d = derivation_apply(images, P("x1*x2 - q*x2*x1 - s*x3*x3", a), a);
    EXPECT_TRUE(orient(sub).normalize(d).is_zero());
}

TEST(Membership, DegreeTwo) {
    const Presentation p = xx();
    const auto yes = ideal_membership(P("x1*x2 - q*x2*x1 - s*x3^2", p.alphabet), p, 2);
    EXPECT_TRUE(yes.member);
    const auto no = ideal_membership(P("x1*x2 - x2*x1", p.alphabet), p, 2);
    EXPECT_FALSE(no.member);
    EXPECT_FALSE(no.remainder.is_zero());
    ASSERT_TRUE(no.witness.has_value());
}

TEST(Membership, DeterminantCommutationAtDegreeFour) {
    const Presentation p = cat::rtt_presentation();
    const Element det = cat::quantum_determinant();
    const Element t21 = Element::letter(cat::t(2, 1));
    const Scalar u2q4 = Scalar::u().pow(2) / Scalar::q().pow(4);
    EXPECT_TRUE(ideal_membership(t21 * det - (det * t21).scaled(u2q4), p, 4).member);
    EXPECT_FALSE(ideal_membership(t21 * det - (det * t21).scaled(Scalar::q().pow(-2)), p, 4).member);
    const auto mod = ideal_membership(t21 * det - (det * t21).scaled(u2q4), p, 4, Mode::modular);
    EXPECT_TRUE(mod.member);
    EXPECT_TRUE(mod.probabilistic);
    EXPECT_EQ(mod.prime, kDefaultPrime);
}

TEST(Membership, DegreeBound) {
    const Presentation p = xx();
    EXPECT_THROW(ideal_membership(P("x1*x2*x3", p.alphabet), p, 2), DegreeBoundExceeded);
}

TEST(Membership, ModularAndExactAgreeOnRandomDifferences) {
    const Presentation p = cat::rtt_presentation();
    std::mt19937_64 rng(5);
    IdealOracle exact(p, 3, Mode::exact), modular(p, 3, Mode::modular);
    const RuleSystem rs = orient(p, OrientPolicy::lenient);
    for (int i = 0; i < 10; ++i) {
        const Element e = random_element(rng, p.alphabet, 3, 3);
        EXPECT_EQ(exact.test(e).member, modular.test(e).member);
        // e - nf(e) always lies in the ideal.
        const Element diff = e - rs.normalize(e);
        EXPECT_TRUE(exact.test(diff).member);
        EXPECT_TRUE(modular.test(diff).member);
    }
}

TEST(SpanCompare, Examples) {
    EXPECT_EQ(span_compare(cat::rtt_generate(cat::omega()), cat::rtt_generate(cat::omega_inverse())).verdict,
              SpanVerdict::equal);
    const Presentation p = xx();
    const Presentation s0 = specialize(p, {{Param::s, Scalar(0)}});
    EXPECT_NE(span_compare(p.relations, s0.relations).verdict, SpanVerdict::equal);
    std::vector<Element> reordered(p.relations.rbegin(), p.relations.rend());
    reordered[0] = reordered[0].scaled(Scalar::q());
    EXPECT_EQ(span_compare(p.relations, reordered).verdict, SpanVerdict::equal);
}

TEST(Tensor, CrossCommutation) {
    const Presentation t = cat::rtt_presentation();
    const Presentation tp = algebra_tensor(t, xx());
    const RuleSystem rs = orient(tp, OrientPolicy::lenient);
    EXPECT_EQ(rs.normalize(P("x1*t11", tp.alphabet)), P("t11*x1", tp.alphabet));
    EXPECT_EQ(tp.relations.size(), t.relations.size() + xx().relations.size() + t.alphabet.size() * 3);
}

TEST(Specialize, QuantumPlaneAndWeylHeisenberg) {
    const Presentation p = xx();
    const Presentation s0 = specialize(p, {{Param::s, Scalar(0)}});
    const std::vector<Element> plane = {P("x1*x2 - q*x2*x1", p.alphabet), P("x1*x3 - u*x3*x1", p.alphabet),
                                        P("x2*x3 - u^-1*x3*x2", p.alphabet)};
    EXPECT_EQ(span_compare(s0.relations, plane).verdict, SpanVerdict::equal);

    GeneratorBindings one;
    one.values = {{"x3", 1}};
    const Presentation wh = specialize(p, {{Param::q, Scalar(1)}, {Param::u, Scalar(1)}}, one);
    EXPECT_EQ(wh.relations[0], P("x1*x2 - x2*x1 - s", wh.alphabet));
    EXPECT_FALSE(wh.alphabet.find("x3").has_value());
}

TEST(Specialize, GeneratorDeletionKeepsResidues) {
    GeneratorBindings kill;
    kill.values = {{"t31", 0}, {"t32", 0}};
    const Presentation cut = specialize(cat::rtt_presentation(), {}, kill);
    EXPECT_EQ(cut.relations.size(), 36u);
    EXPECT_TRUE(ideal_membership(P("(u^2-q)*t12*t33", cut.alphabet), cut, 2).member);
    EXPECT_TRUE(ideal_membership(P("(u^2-q)*t21*t33", cut.alphabet), cut, 2).member);
}

// Property suite: termination, soundness and path independence of rewriting.
TEST(RewritingProperties, TerminationSoundnessPathIndependence) {
    std::mt19937_64 rng(2024);
    for (auto v : {cat::Variant::omega, cat::Variant::omega_inv}) {
        const Presentation c = cat::calculus(v);
        const RuleSystem rs = orient(c);
        IdealOracle oracle(c, 3, Mode::exact);
        for (int i = 0; i < 25; ++i) {
            const Element e = random_element(rng, c.alphabet, 3, 2);
            NormalizeOptions left, right, rnd;
            right.strategy = RewriteStrategy::rightmost;
            rnd.strategy = RewriteStrategy::random;
            rnd.seed = static_cast<std::uint64_t>(i);
            std::size_t steps = 0;
            const Element nf = rs.normalize(e, left, &steps);  // terminates within the budget
            EXPECT_LT(steps, left.max_steps);
            for (const auto& [w, coeff] : nf.terms()) EXPECT_FALSE(rs.is_reducible(w));
            EXPECT_EQ(rs.normalize(e, right), nf);
            EXPECT_EQ(rs.normalize(e, rnd), nf);
            EXPECT_TRUE(oracle.test(e - nf).member);
        }
    }
}
