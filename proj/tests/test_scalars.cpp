#include "wh3/modp.hpp"
#include "wh3/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wh3;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

/// Random rational function of small degree with a nonzero denominator.
Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 2), terms(1, 3);
    auto poly = [&] {
        Scalar p;
        const int n = terms(rng);
        for (int i = 0; i < n; ++i)
            p += Scalar(coeff(rng)) * Scalar::q().pow(exp(rng)) * Scalar::u().pow(exp(rng)) *
                 Scalar::s().pow(exp(rng));
        return p;
    };
    Scalar den = poly();
    while (den.is_zero()) den = poly();
    return poly() / den;
}

}  // namespace

TEST(ScalarParse, CanonicalForm) {
    EXPECT_EQ(S("(q/u^2 - 1)"), (Scalar::q() - Scalar::u().pow(2)) / Scalar::u().pow(2));
    EXPECT_TRUE(S("q*(1/q) - 1").is_zero());
    const Scalar c = S("(u^2-q)/q^2");
    EXPECT_EQ(c * Scalar::q().pow(2), Scalar::u().pow(2) - Scalar::q());
}

TEST(ScalarParse, FormatReparses) {
    for (const char* text : {"(u^2-q)/q^2", "q*s/u^2", "-s/q", "u^3/q^3", "(q^2-u^2)/(q*u)", "-194/441", "0"}) {
        const Scalar a = S(text);
        EXPECT_EQ(parse_scalar(a.to_string()), a) << text;
    }
}

TEST(ScalarParse, Errors) {
    EXPECT_THROW(S("q+"), ParseError);
    EXPECT_THROW(S("x1"), ParseError);
    EXPECT_THROW(S("1/(q-q)"), ParseError);
    EXPECT_THROW(Scalar(0).inverse(), ScalarError);
    EXPECT_THROW(S("q^(1/2)"), ParseError);
}

TEST(ScalarArith, Examples) {
    EXPECT_EQ(S("q/u^2 - 1") + Scalar(1), S("q/u^2"));
    EXPECT_EQ(S("(u^2-q)/q^2") * S("q^2"), S("u^2-q"));
    EXPECT_EQ(Scalar(1) / S("(u^2-q)/q^2"), S("q^2/(u^2-q)"));
    EXPECT_THROW(Scalar(1) / Scalar(), ScalarError);
}

TEST(ScalarSubstitute, Examples) {
    EXPECT_TRUE(substitute(S("q/u^2 - 1"), parse_bindings("q=u^2")).is_zero());
    EXPECT_TRUE(substitute(S("s/q"), parse_bindings("s=0")).is_zero());
    EXPECT_EQ(substitute(S("(u^2-q)/q^2"), parse_bindings("q=3/2,u=5/7,s=2")), S("-194/441"));
    EXPECT_THROW(substitute(S("1/(q-u^2)"), parse_bindings("q=u^2")), ScalarError);
}

TEST(ScalarProperties, FieldAxioms) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 150; ++i) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Scalar(), a);
        EXPECT_EQ(a * Scalar(1), a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
        EXPECT_EQ(parse_scalar(a.to_string()), a);
    }
}

TEST(ScalarProperties, SubstitutionIsAHomomorphism) {
    std::mt19937_64 rng(11);
    const ParamBindings b = parse_bindings("q=3/2,u=5/7,s=2");
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const Scalar x = random_scalar(rng), y = random_scalar(rng);
        try {
            EXPECT_EQ(substitute(x * y, b), substitute(x, b) * substitute(y, b));
            EXPECT_EQ(substitute(x + y, b), substitute(x, b) + substitute(y, b));
            ++checked;
        } catch (const ScalarError&) {
            // A denominator vanished at this point.
        }
    }
    EXPECT_GT(checked, 80);
}

TEST(ModularEvaluation, AgreesWithExactArithmetic) {
    std::mt19937_64 rng(3);
    const ModularPoint pt = ModularPoint::sample(kDefaultPrime, 1);
    for (int i = 0; i < 100; ++i) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        auto ea = pt.eval(a), eb = pt.eval(b), eab = pt.eval(a * b), esum = pt.eval(a + b);
        if (!ea || !eb || !eab || !esum) continue;
        EXPECT_EQ(*eab, *ea * *eb);
        EXPECT_EQ(*esum, *ea + *eb);
    }
}
