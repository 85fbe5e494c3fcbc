#include "wh3/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wh3;
namespace cat = wh3::catalog;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }

}  // namespace

TEST(Omega, InverseAndSpecialization) {
    EXPECT_EQ(cat::omega() * cat::omega_inverse(), cat::CMatrix::identity());
    EXPECT_EQ(cat::omega_inverse() * cat::omega(), cat::CMatrix::identity());
    EXPECT_EQ(cat::omega().inverse(), cat::omega_inverse());
    const ParamBindings b = {{Param::q, Scalar::u().pow(2)}};
    EXPECT_EQ(cat::omega().substitute(b), cat::omega_inverse().substitute(b));
    EXPECT_NE(cat::omega(), cat::omega_inverse());
}

TEST(Omega, SparsityPattern) {
    const cat::CMatrix c = cat::omega();
    EXPECT_TRUE(c.sparsity_holds());
    const auto off = c.off_pattern_nonzeros();
    ASSERT_EQ(off.size(), 2u);
    EXPECT_EQ(c.at(1, 2, 3, 3), S("q*s/u^2"));
    EXPECT_EQ(c.at(2, 1, 3, 3), S("-s/q"));
    EXPECT_TRUE(cat::omega_inverse().sparsity_holds());
}

TEST(Omega, LabelsFollowPairOrder) {
    EXPECT_EQ(cat::CMatrix::index(1, 1), 0u);
    EXPECT_EQ(cat::CMatrix::index(3, 3), 8u);
    EXPECT_EQ(cat::CMatrix::label(5), "23");
    EXPECT_EQ(cat::CMatrix::parse_label("31"), 6u);
}

TEST(Families, PrintedCounts) {
    EXPECT_EQ(cat::family(cat::FamilyId::xx).relations.size(), 3u);
    EXPECT_EQ(cat::family(cat::FamilyId::xixi).relations.size(), 6u);
    EXPECT_EQ(cat::family(cat::FamilyId::dd).relations.size(), 3u);
    EXPECT_EQ(cat::family(cat::FamilyId::tt).relations.size(), 36u);
    EXPECT_EQ(cat::family(cat::FamilyId::tdinv).relations.size(), 9u);
    for (auto id : {cat::FamilyId::omega_xxi, cat::FamilyId::omega_dxi, cat::FamilyId::omega_xd,
                    cat::FamilyId::omega_inv_xxi, cat::FamilyId::omega_inv_dxi, cat::FamilyId::omega_inv_xd})
        EXPECT_EQ(cat::family(id).relations.size(), 9u);
}

TEST(Families, KeysRoundTrip) {
    for (auto id : cat::kAllFamilies) EXPECT_EQ(cat::parse_family(cat::family_key(id)), id);
    EXPECT_THROW(cat::parse_family("R_nope"), std::invalid_argument);
}

TEST(Families, RankOfTt) {
    EXPECT_EQ(span_rank(cat::family(cat::FamilyId::tt).relations), 36u);
    EXPECT_EQ(span_rank(cat::family(cat::FamilyId::tt, cat::Errata::off).relations), 36u);
    EXPECT_TRUE(dependent_relations(cat::family(cat::FamilyId::tt).relations).empty());
}

TEST(Families, RankStableUnderRandomSpecialization) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(2, 40), den(1, 13);
    for (auto id : cat::kAllFamilies) {
        const auto& rels = cat::family(id).relations;
        const std::size_t generic = span_rank(rels);
        for (int trial = 0; trial < 3; ++trial) {
            ParamBindings b;
            for (Param p : {Param::q, Param::u, Param::s}) b[p] = Scalar(num(rng)) / Scalar(den(rng));
            std::vector<Element> spec;
            for (const auto& r : rels) spec.push_back(map_coefficients(r, [&](const Scalar& c) { return substitute(c, b); }));
            EXPECT_EQ(span_rank(spec), generic) << cat::family_key(id);
        }
    }
}

TEST(Errata, ListIsComplete) {
    const auto& e = cat::errata();
    EXPECT_EQ(e.size(), 11u);
    for (const auto& entry : e) {
        const auto& printed = cat::family_text(entry.family, cat::Errata::off);
        const auto& fixed = cat::family_text(entry.family, cat::Errata::on);
        ASSERT_LT(entry.row, printed.size());
        EXPECT_EQ(printed[entry.row], entry.printed);
        EXPECT_EQ(fixed[entry.row], entry.corrected);
        EXPECT_FALSE(entry.justification.empty());
    }
}

TEST(Generate, IdentityBraiding) {
    const auto rels = cat::generate_from_C(cat::CMatrix::identity(), cat::Kind::xxi);
    const Alphabet& a = cat::calculus_alphabet();
    std::vector<Element> expected;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
            expected.push_back(parse_element("x" + std::to_string(k) + "*xi" + std::to_string(l) + " - xi" +
                                                 std::to_string(k) + "*x" + std::to_string(l),
                                             a));
    EXPECT_EQ(span_compare(rels, expected).verdict, SpanVerdict::equal);
}

TEST(Generate, ReproducesEveryCalculusFamily) {
    using cat::FamilyId;
    using cat::Kind;
    const std::pair<Kind, FamilyId> omega[] = {{Kind::xxi, FamilyId::omega_xxi},
                                               {Kind::dxi, FamilyId::omega_dxi},
                                               {Kind::xd, FamilyId::omega_xd},
                                               {Kind::xixi, FamilyId::xixi}};
    const std::pair<Kind, FamilyId> inverse[] = {{Kind::xxi, FamilyId::omega_inv_xxi},
                                                 {Kind::dxi, FamilyId::omega_inv_dxi},
                                                 {Kind::xd, FamilyId::omega_inv_xd},
                                                 {Kind::xixi, FamilyId::xixi}};
    for (const auto& [kind, id] : omega)
        EXPECT_EQ(span_compare(cat::generate_from_C(cat::omega(), kind), cat::family(id).relations).verdict,
                  SpanVerdict::equal)
            << cat::family_key(id);
    for (const auto& [kind, id] : inverse)
        EXPECT_EQ(
            span_compare(cat::generate_from_C(cat::omega_inverse(), kind), cat::family(id).relations).verdict,
            SpanVerdict::equal)
            << cat::family_key(id);
}

TEST(Generate, RttMatchesPrintedTable) {
    const auto& tt = cat::family(cat::FamilyId::tt).relations;
    EXPECT_EQ(cat::rtt_generate(cat::omega()).size(), 81u);
    EXPECT_EQ(span_compare(cat::rtt_generate(cat::omega()), tt).verdict, SpanVerdict::equal);
    EXPECT_EQ(span_compare(cat::rtt_generate(cat::omega_inverse()), tt).verdict, SpanVerdict::equal);
    const auto printed = span_compare(cat::rtt_generate(cat::omega()), cat::family(cat::FamilyId::tt, cat::Errata::off).relations);
    EXPECT_EQ(printed.verdict, SpanVerdict::incomparable);
    EXPECT_EQ(printed.rank_union, 38u);
}

TEST(QuantumGroup, DeterminantAsPrinted) {
    const Alphabet& a = cat::quantum_group_alphabet();
    EXPECT_EQ(cat::quantum_determinant(),
              parse_element("t11*t22*t33 + t13*t21*t32 + u^3/q^3*t12*t23*t31 - q/u*t11*t23*t32 "
                            "- u^2/q^2*t12*t21*t33 - u^2/q^2*t13*t22*t31",
                            a));
}

TEST(QuantumGroup, InverseFactors) {
    // t D^-1 = mu D^-1 t, certified through the degree-4 membership oracle.
    const char* mu[3][3] = {{"1", "u^2/q^4", "u/q^2"}, {"q^4/u^2", "1", "q^2/u"}, {"q^2/u", "u/q^2", "1"}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            EXPECT_EQ(cat::dinv_factor(i, j), S(mu[i - 1][j - 1])) << i << j;
            EXPECT_EQ(cat::determinant_factor(i, j), S(mu[i - 1][j - 1]).inverse()) << i << j;
        }
}

TEST(QuantumGroup, InverseMatrixShape) {
    const cat::TMatrix inv = cat::t_inverse();
    const Letter dinv = cat::dinv();
    for (const auto& row : inv)
        for (const auto& e : row)
            for (const auto& [w, c] : e.terms()) {
                ASSERT_EQ(w.size(), 3u);
                EXPECT_EQ(w.back(), dinv);
            }
}
