#include "wh3/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace wh3;
using namespace wh3::verify;
namespace cat = wh3::catalog;

namespace {

const Context& default_context() {
    static const Context ctx;
    return ctx;
}

Context with_mutations(std::initializer_list<const char*> ms, cat::Errata errata = cat::Errata::on) {
    VerifyOptions o;
    o.errata = errata;
    for (const char* m : ms) o.mutations.push_back(parse_mutation(m));
    return Context(o);
}

std::set<std::string> failing(const Report& r) {
    std::set<std::string> out;
    for (const auto& d : r.details)
        if (!d.ok) out.insert(d.name);
    return out;
}

const Detail& detail(const Report& r, const std::string& name) {
    const Detail* d = r.find(name);
    if (!d) throw std::runtime_error("missing detail " + name);
    return *d;
}

}  // namespace

TEST(Suite, EveryCheckPassesWithErrata) {
    const std::map<std::string, Status> expected = {
        {"ybe", Status::pass},          {"constraints", Status::pass},
        {"eigen", Status::pass},        {"calculus-omega", Status::pass},
        {"calculus-omega-inv", Status::pass}, {"rtt", Status::pass},
        {"inverse", Status::pass},      {"determinant", Status::pass_modular},
        {"coaction", Status::pass_modular}, {"hopf", Status::pass},
        {"star", Status::pass},         {"specializations", Status::pass_modular},
    };
    ASSERT_EQ(check_ids().size(), 12u);
    for (const auto& id : check_ids()) {
        const Report r = run_check(id, default_context());
        EXPECT_EQ(r.status, expected.at(id)) << id << "\n" << to_text(r);
        EXPECT_EQ(r.check, id);
        if (r.status == Status::pass_modular) {
            EXPECT_EQ(r.prime, kDefaultPrime);
            EXPECT_EQ(r.seed, 1u);
        } else {
            EXPECT_FALSE(r.prime.has_value());
        }
    }
}

TEST(Suite, ExactModeAgrees) {
    VerifyOptions o;
    o.mode = Mode::exact;
    const Context ctx(o);
    for (const auto& id : check_ids()) {
        const Report r = run_check(id, ctx);
        EXPECT_EQ(r.status, Status::pass) << id << "\n" << to_text(r);
        EXPECT_EQ(r.mode, Mode::exact);
    }
}

TEST(Suite, UnknownCheck) { EXPECT_THROW(run_check("nope", default_context()), std::invalid_argument); }

TEST(Report, JsonSchemaAndDeterminism) {
    const Report a = run_check("determinant", default_context());
    const Report b = run_check("determinant", default_context());
    const auto ja = to_json(a, false), jb = to_json(b, false);
    EXPECT_EQ(ja.dump(), jb.dump());
    std::vector<std::string> keys;
    for (auto it = ja.begin(); it != ja.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"check", "status", "mode", "prime", "seed", "details",
                                              "counterexample", "millis"}));
    EXPECT_EQ(ja["status"], "pass-modular");
    EXPECT_EQ(ja["millis"], 0);
    EXPECT_TRUE(ja["counterexample"].is_null());
}

TEST(Report, SeedIsRecordedAndReproducible) {
    VerifyOptions o;
    o.modular.seed = 42;
    const Context ctx(o);
    const Report r1 = run_check("determinant", ctx), r2 = run_check("determinant", ctx);
    EXPECT_EQ(r1.seed, 42u);
    EXPECT_EQ(to_json(r1, false).dump(), to_json(r2, false).dump());
}

TEST(Mutation, Parse) {
    const Mutation m = parse_mutation("omega:11,11=1");
    EXPECT_TRUE(m.omega_entry);
    EXPECT_EQ(m.row, 0u);
    EXPECT_EQ(m.col, 0u);
    const Mutation f = parse_mutation("R_tt:4=0");
    EXPECT_FALSE(f.omega_entry);
    EXPECT_EQ(f.family, cat::FamilyId::tt);
    EXPECT_EQ(f.row, 4u);
    EXPECT_THROW(parse_mutation("omega=1"), std::invalid_argument);
    EXPECT_THROW(parse_mutation("R_bad:1=0"), std::invalid_argument);
    EXPECT_THROW(with_mutations({"R_xx:7=0"}), std::invalid_argument);
}

TEST(YangBaxter, OmegaIdentityAndMutation) {
    EXPECT_TRUE(check_yang_baxter(cat::omega()).passed());
    EXPECT_TRUE(check_yang_baxter(cat::omega_inverse()).passed());
    EXPECT_TRUE(check_yang_baxter(cat::CMatrix::identity()).passed());
    cat::CMatrix bad = cat::omega();
    bad(0, 0) = Scalar(1);
    const Report r = check_yang_baxter(bad);
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->rfind("cell (", 0), 0u);
}

TEST(Constraints, OmegaInverseAndIdentity) {
    const Report o = check_constraints(cat::omega());
    EXPECT_TRUE(o.passed());
    EXPECT_EQ(o.details.size(), 11u);
    EXPECT_TRUE(check_constraints(cat::omega_inverse()).passed());
    const Report id = check_constraints(cat::CMatrix::identity(), "identity");
    EXPECT_FALSE(id.passed());
    EXPECT_FALSE(detail(id, "identity: C12_12 = q C21_12 - 1").ok);
}

TEST(Eigen, Spectra) {
    const Report r = run_check("eigen", default_context());
    EXPECT_NE(detail(r, "omega: R_xx span under C").note.find("eigenvalues {-1}"), std::string::npos);
    EXPECT_NE(detail(r, "omega: R_xixi span under C").note.find("eigenvalues {q/u^2}"), std::string::npos);
    EXPECT_NE(detail(r, "omega-inv: R_xixi span under C").note.find("eigenvalues {u^2/q}"), std::string::npos);
    EXPECT_NE(r.find("omega: one-form eigenvalue"), nullptr);
    EXPECT_EQ(detail(r, "omega: R_dd in an eigenspace of (C^-1)^t").note, "eigenvalue -1, eigenspace dimension 3");
    EXPECT_NE(detail(r, "omega: minimal polynomial").note.find("roots {-1, q/u^2}"), std::string::npos);
    EXPECT_NE(detail(r, "omega-inv: minimal polynomial").note.find("roots {-1, u^2/q}"), std::string::npos);
}

TEST(Calculus, CorruptedDerivativeCoefficient) {
    const Context ctx = with_mutations({"R_omega_xd:5=d2*x1 - (q/u^2)*x1*d2"});
    const Report r = check_calculus(ctx, cat::Variant::omega);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(detail(r, "d2 * R_xx[0] -> 0").ok);
    EXPECT_TRUE(check_calculus(ctx, cat::Variant::omega_inv).passed());
}

TEST(Rtt, ZeroedOffPatternEntry) {
    const Report r = check_rtt(with_mutations({"omega:12,33=0"}));
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_NE(r.counterexample->find("separating vector"), std::string::npos);
}

TEST(Rtt, RankReported) {
    const Report r = check_rtt(default_context());
    EXPECT_EQ(detail(r, "rank of R_tt").note.rfind("rank 36 of 36", 0), 0u);
}

TEST(Inverse, LeftDeterminantOnlyModuloTheIdeal) {
    const Report r = check_inverse(default_context());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.mode, Mode::exact);
    EXPECT_EQ(detail(r, "left determinant").note, "D' = D modulo the ideal, not as elements");
}

TEST(Determinant, FactorsAndWitness) {
    const Report r = check_determinant(default_context());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.mode, Mode::modular);
    EXPECT_NE(detail(r, "t21 D = lambda D t21").note.find("lambda = u^2/q^4"), std::string::npos);
    EXPECT_TRUE(detail(r, "t21 D = lambda D t21 (exact)").ok);
    EXPECT_TRUE(detail(r, "t11 D = lambda D t11 (exact)").ok);
    EXPECT_TRUE(detail(r, "t21 D - D t21 nonmember").ok);
}

TEST(Coaction, DroppedRelationsBreakInvariance) {
    EXPECT_TRUE(check_coaction(default_context(), cat::FamilyId::xx).passed());
    const Report r = check_coaction_with(default_context(), cat::FamilyId::xx, {4, 13});
    EXPECT_FALSE(r.passed());
    const Report m = run_check("coaction", with_mutations({"R_tt:4=0", "R_tt:13=0"}));
    EXPECT_FALSE(m.passed());
}

TEST(Coaction, DependsOnRtt) {
    // check_rtt passing is the precondition for the coaction of R_xx.
    const Report rtt = check_rtt(default_context());
    const Report xx = check_coaction(default_context(), cat::FamilyId::xx);
    EXPECT_TRUE(rtt.passed());
    EXPECT_TRUE(xx.passed());
    const Context off = with_mutations({}, cat::Errata::off);
    EXPECT_FALSE(check_rtt(off).passed());
}

TEST(Coaction, RegularFamiliesAreRejected) {
    const Report r = check_coaction(default_context(), cat::FamilyId::tt);
    EXPECT_FALSE(r.passed());
}

TEST(Hopf, CoproductAndCounit) {
    const Report r = check_hopf(default_context());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(detail(r, "Delta(R_tt[0])").mode, Mode::exact);
    EXPECT_TRUE(detail(r, "Delta(D) = D (x) D").ok);
    EXPECT_TRUE(detail(r, "counit is an algebra map").ok);
}

TEST(Hopf, MutatedRelationFails) {
    const Report r = check_hopf(with_mutations({"R_tt:0=t12*t11 - q*t11*t12"}));
    EXPECT_FALSE(r.passed());
}

TEST(Star, MapAndCheck) {
    const StarMap star;
    EXPECT_EQ(star.image("t11"), "t22");
    EXPECT_EQ(star.image("t31"), "t32");
    EXPECT_EQ(star.image("x3"), "x3");
    EXPECT_TRUE(star.involutive(cat::quantum_group_alphabet()));
    const Alphabet a = cat::calculus_subalphabet("x");
    const Element r = parse_element("x1*x2 - q*x2*x1 - s*x3^2", a);
    EXPECT_EQ(star.apply(r, a), r);
    const Report rep = check_star(default_context());
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(detail(rep, "R_xx[0]*").note, "fixed point");
}

TEST(Specializations, DerivedRules) {
    const Report r = check_specializations(default_context());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(detail(r, "w-commutation rules").note,
              "w t11 = t11 w; w t12 = u^2 t12 w; w t13 = u t13 w; w t22 = t22 w; w t21 = 1/u^2 t21 w; "
              "w t23 = 1/u t23 w");
    EXPECT_EQ(detail(r, "t' commute without the determinant condition").note, "surviving: [t13', t23']");
}

TEST(Errata, OffProducesTheDocumentedFailures) {
    const Context off = with_mutations({}, cat::Errata::off);
    std::set<std::string> failed;
    for (const auto& id : check_ids())
        if (!run_check(id, off).passed()) failed.insert(id);
    EXPECT_EQ(failed, (std::set<std::string>{"eigen", "calculus-omega", "calculus-omega-inv", "rtt", "inverse",
                                             "determinant", "coaction", "hopf", "star", "specializations"}));

    const Report rtt = check_rtt(off);
    EXPECT_EQ(detail(rtt, "printed rows inside the RTT span").note, "rows outside: 22, 30");
    const Report det = check_determinant(off);
    EXPECT_EQ(failing(det), (std::set<std::string>{"t12 D = lambda D t12", "t21 D = lambda D t21",
                                                  "t23 D = lambda D t23", "t32 D = lambda D t32"}));
    const Report eig = check_eigenstructure(off);
    EXPECT_EQ(failing(eig), (std::set<std::string>{"omega: R_dd in an eigenspace of (C^-1)^t",
                                                  "omega-inv: R_dd in an eigenspace of (C^-1)^t"}));
    const Report co = check_calculus(off, cat::Variant::omega);
    EXPECT_FALSE(detail(co, "generated dxi = R_omega_dxi").ok);
    const Report ci = check_calculus(off, cat::Variant::omega_inv);
    EXPECT_FALSE(detail(ci, "generated xd = R_omega_inv_xd").ok);
    const Report st = check_star(off);
    EXPECT_EQ(detail(st, "R_tt* in the ideal").note, "rows outside: 22, 30, 31, 34");
}

// Property suite: random single mutations flip the verdict.

TEST(MutationSensitivity, YangBaxterAndRtt) {
    std::mt19937_64 rng(99);
    const cat::CMatrix omega = cat::omega();
    std::vector<std::pair<std::size_t, std::size_t>> nonzero;
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 9; ++c)
            if (!omega(r, c).is_zero()) nonzero.emplace_back(r, c);
    const std::vector<Scalar> factors = {Scalar(2), Scalar(-1), Scalar::q(), Scalar::u().inverse(),
                                         parse_scalar("3/2")};
    std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1), pickf(0, factors.size() - 1);
    int flipped_ybe = 0, flipped_rtt = 0;
    const int trials = 20;
    for (int i = 0; i < trials; ++i) {
        const auto [r, c] = nonzero[pick(rng)];
        const Scalar value = omega(r, c) * factors[pickf(rng)];
        cat::CMatrix bad = omega;
        bad(r, c) = value;
        const std::string text = "omega:" + cat::CMatrix::label(r) + "," + cat::CMatrix::label(c) + "=" + value.to_string();
        if (!check_yang_baxter(bad).passed()) ++flipped_ybe;
        VerifyOptions o;
        o.mutations.push_back(parse_mutation(text));
        if (!check_rtt(Context(o)).passed()) ++flipped_rtt;
    }
    EXPECT_EQ(flipped_ybe, trials);
    EXPECT_EQ(flipped_rtt, trials);
}

TEST(MutationSensitivity, Calculus) {
    std::mt19937_64 rng(123);
    const std::vector<cat::FamilyId> ids = {cat::FamilyId::xx, cat::FamilyId::xixi, cat::FamilyId::dd,
                                            cat::FamilyId::omega_xxi, cat::FamilyId::omega_dxi,
                                            cat::FamilyId::omega_xd};
    const std::vector<Scalar> factors = {Scalar(2), Scalar(-1), Scalar::q(), Scalar::u(), parse_scalar("1/3")};
    std::uniform_int_distribution<std::size_t> pid(0, ids.size() - 1), pf(0, factors.size() - 1);
    int flipped = 0;
    const int trials = 20;
    for (int i = 0; i < trials; ++i) {
        cat::FamilyId id;
        std::size_t row;
        do {  // rows with a single term cannot be perturbed this way
            id = ids[pid(rng)];
            row = std::uniform_int_distribution<std::size_t>(0, cat::family(id).relations.size() - 1)(rng);
        } while (cat::family(id).relations[row].size() < 2);
        const auto& fam = cat::family(id);
        const Element& rel = fam.relations[row];
        // Scale one non-leading coefficient so the relation keeps its leading word.
        std::vector<Word> words;
        for (const auto& [w, c] : rel.terms()) words.push_back(w);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, words.size() - 2)(rng);
        Element bad = rel;
        bad.add_term(words[k], rel.coefficient(words[k]) * (factors[pf(rng)] - Scalar(1)));
        VerifyOptions o;
        o.mutations.push_back(
            parse_mutation(cat::family_key(id) + ":" + std::to_string(row) + "=" + bad.to_string(fam.alphabet)));
        if (!check_calculus(Context(o), cat::Variant::omega).passed()) ++flipped;
    }
    EXPECT_EQ(flipped, trials);
}
