// Acceptance run: one line per criterion.
//
// Exit status is 0 when every criterion has its recorded outcome. Two
// criteria are known to fail as worded (8 and 12); their lines say why.

#include "wh3/cli.hpp"
#include "wh3/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace wh3;
using namespace wh3::verify;
namespace cat = wh3::catalog;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    bool expected_pass;
    std::function<Outcome()> run;
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

const Detail* find(const Report& r, const std::string& name) { return r.find(name); }

bool detail_ok(const Report& r, const std::string& name) {
    const Detail* d = find(r, name);
    return d && d->ok;
}

Context mutated(const std::vector<std::string>& ms, cat::Errata errata = cat::Errata::on) {
    VerifyOptions o;
    o.errata = errata;
    for (const auto& m : ms) o.mutations.push_back(parse_mutation(m));
    return Context(o);
}

std::string cli_out(const std::vector<std::string>& args, int* code) {
    std::ostringstream out, err;
    *code = cli::run(args, out, err);
    return out.str();
}

Outcome c1() {
    const double t0 = now_ms();
    const bool a = check_yang_baxter(cat::omega()).passed();
    const double t1 = now_ms();
    const bool b = check_yang_baxter(cat::omega_inverse()).passed();
    const double t2 = now_ms();
    cat::CMatrix bad = cat::omega();
    bad(0, 0) = Scalar(1);
    const bool neg = !check_yang_baxter(bad).passed();
    const bool fast = t1 - t0 < 5000 && t2 - t1 < 5000;
    return {a && b && neg && fast, "omega " + std::string(a ? "pass" : "fail") + ", omega^-1 " + (b ? "pass" : "fail") +
                                       ", (11,11)=1 mutation " + (neg ? "fails" : "passes")};
}

Outcome c2() {
    const bool id = cat::omega() * cat::omega_inverse() == cat::CMatrix::identity();
    const ParamBindings b = {{Param::q, Scalar::u().pow(2)}};
    const bool eq = cat::omega().substitute(b) == cat::omega_inverse().substitute(b);
    return {id && eq, std::string("product ") + (id ? "is" : "is not") + " the identity; q=u^2 " +
                          (eq ? "identifies" : "does not identify") + " the matrices"};
}

Outcome c3() {
    const Report o = check_constraints(cat::omega()), i = check_constraints(cat::omega_inverse());
    const Report e = check_constraints(cat::CMatrix::identity(), "identity");
    const bool line1 = !detail_ok(e, "identity: C12_12 = q C21_12 - 1");
    return {o.passed() && i.passed() && !e.passed() && line1, "identity fails the first identity"};
}

Outcome c4() {
    const Context ctx;
    const Report a = check_calculus(ctx, cat::Variant::omega), b = check_calculus(ctx, cat::Variant::omega_inv);
    int equal = 0;
    for (const Report* r : {&a, &b})
        for (const auto& d : r->details)
            if (d.name.rfind("generated ", 0) == 0 && d.ok) ++equal;
    return {equal == 8, std::to_string(equal) + "/8 generated families span-equal"};
}

Outcome c5() {
    const Context ctx;
    bool ok = true;
    std::string note;
    for (auto v : {cat::Variant::omega, cat::Variant::omega_inv}) {
        const double t0 = now_ms();
        const Report r = check_calculus(ctx, v);
        const double dt = now_ms() - t0;
        ok = ok && r.passed() && dt < 60000 && find(r, "overlaps");
        note += (note.empty() ? "" : "; ") + r.check + " " + to_string(r.status) + ", " +
                (find(r, "overlaps") ? find(r, "overlaps")->note : "no overlap report");
    }
    return {ok, note};
}

Outcome c6() {
    const Report r = check_rtt(Context());
    const Report neg = check_rtt(mutated({"omega:12,33=0"}));
    const Detail* rank = find(r, "rank of R_tt");
    const bool ok = r.passed() && detail_ok(r, "span RTT(omega) = span RTT(omega^-1)") && !neg.passed() && rank &&
                    rank->note.rfind("rank 36", 0) == 0;
    return {ok, (rank ? rank->note : "no rank") + "; mutation " + (neg.passed() ? "passes" : "fails")};
}

Outcome c7() {
    const double t0 = now_ms();
    const Report r = check_inverse(Context());
    const double dt = now_ms() - t0;
    int certified = 0;
    for (const auto& d : r.details)
        if ((d.name.rfind("(T Cof)", 0) == 0 || d.name.rfind("(Cof D^-1 T)", 0) == 0) && d.ok && d.mode == Mode::exact)
            ++certified;
    return {certified == 18 && dt < 120000, std::to_string(certified) + "/18 entries certified exactly"};
}

Outcome c8() {
    const Report r = check_determinant(Context());
    int corrected = 0;
    for (const auto& e : cat::errata())
        if (e.family == cat::FamilyId::tdinv) ++corrected;
    const bool checks = r.passed() && detail_ok(r, "t21 D = lambda D t21 (exact)") &&
                        detail_ok(r, "t11 D = lambda D t11 (exact)") && detail_ok(r, "t21 D - D t21 nonmember");
    const Scalar lambda21 = cat::determinant_factor(2, 1);
    const bool as_worded = corrected == 3 && lambda21 == Scalar::q().pow(-2);
    std::string note = std::string("check ") + to_string(r.status) + " (p=" + std::to_string(r.prime.value_or(0)) +
                       ", seed=" + std::to_string(r.seed.value_or(0)) + "); ";
    note += "certified lambda(t21) = " + lambda21.to_string() + " and " + std::to_string(corrected) +
            " R_tDinv rows corrected, where the criterion states 1/q^2 and three rows";
    return {checks && as_worded, note};
}

Outcome c9() {
    const Context ctx;
    bool ok = true;
    std::string modes;
    for (auto id : {cat::FamilyId::xx, cat::FamilyId::xixi, cat::FamilyId::dd, cat::FamilyId::omega_xxi,
                    cat::FamilyId::omega_dxi, cat::FamilyId::omega_xd}) {
        const Report r = check_coaction(ctx, id);
        ok = ok && r.passed();
        modes += (modes.empty() ? "" : ", ") + cat::family_key(id) + " " + to_string(r.status);
    }
    const bool neg = !check_coaction_with(ctx, cat::FamilyId::xx, {4, 13}).passed();
    return {ok && neg, modes + "; dropping two R_tt rows " + (neg ? "fails" : "passes")};
}

Outcome c10() {
    const Report r = check_hopf(Context());
    bool tt_exact = true;
    for (const auto& d : r.details)
        if (d.name.rfind("Delta(R_tt[", 0) == 0) tt_exact = tt_exact && d.ok && d.mode == Mode::exact;
    const bool ok = r.passed() && tt_exact && detail_ok(r, "Delta(D) = D (x) D") &&
                    detail_ok(r, "counit is an algebra map") && detail_ok(r, "(eps (x) id) Delta = id") &&
                    detail_ok(r, "(id (x) eps) Delta = id");
    return {ok, "coproduct on R_tt exact, Delta(D) " + std::string(detail_ok(r, "Delta(D) = D (x) D") ? "group-like" : "not group-like")};
}

Outcome c11() {
    const Report r = check_star(Context());
    const Detail* fixed = find(r, "R_xx[0]*");
    const bool ok = r.passed() && fixed && fixed->note == "fixed point" && detail_ok(r, "star is involutive");
    return {ok, std::string(to_string(r.status))};
}

Outcome c12() {
    const Report r = check_specializations(Context());
    const bool abc = detail_ok(r, "s=0 gives the quantum plane") && detail_ok(r, "q=u^2: omega = omega^-1") &&
                     detail_ok(r, "t31=t32=0: (u^2-q)*t12*t33 in the ideal") &&
                     detail_ok(r, "t31=t32=0: (u^2-q)*t21*t33 in the ideal");
    const Detail* plain = find(r, "t' commute without the determinant condition");
    const bool unconditional = plain && plain->note == "all commutators vanish";
    std::string note = std::string("(a)-(c) ") + (abc ? "hold" : "fail") + "; ";
    note += plain ? plain->note : "missing";
    note += "; they commute once det T' = 1 is adjoined: " +
            std::string(detail_ok(r, "t' commute given det T' = 1") ? "yes" : "no");
    return {abc && unconditional, note};
}

Element random_word_sum(std::mt19937_64& rng, const Alphabet& a) {
    std::uniform_int_distribution<std::size_t> len(1, 3), letter(0, a.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 5);
    Element e;
    for (int i = 0; i < 2; ++i) {
        Word w(len(rng));
        for (auto& l : w) l = a.letter(letter(rng));
        e.add_term(w, Scalar(coeff(rng)));
    }
    return e;
}

Outcome c13() {
    std::mt19937_64 rng(13);
    // Scalars.
    bool field = true;
    for (int i = 0; i < 50; ++i) {
        const Scalar a = Scalar(static_cast<long>(rng() % 7) + 1) * Scalar::q() / (Scalar::u() + Scalar(static_cast<long>(rng() % 5)));
        const Scalar b = Scalar::s() - Scalar(static_cast<long>(rng() % 9));
        field = field && a * (a + b) == a * a + a * b && a * a.inverse() == Scalar(1) &&
                parse_scalar(a.to_string()) == a;
    }
    // Rewriting.
    bool rewriting = true;
    const Presentation c = cat::calculus(cat::Variant::omega);
    const RuleSystem rs = orient(c);
    IdealOracle oracle(c, 3, Mode::exact);
    for (int i = 0; i < 20; ++i) {
        const Element e = random_word_sum(rng, c.alphabet);
        NormalizeOptions right;
        right.strategy = RewriteStrategy::rightmost;
        const Element nf = rs.normalize(e);
        rewriting = rewriting && rs.normalize(e, right) == nf && oracle.test(e - nf).member;
    }
    // Mutations.
    const cat::CMatrix omega = cat::omega();
    std::vector<std::pair<std::size_t, std::size_t>> nz;
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t k = 0; k < 9; ++k)
            if (!omega(r, k).is_zero()) nz.emplace_back(r, k);
    int ybe = 0, rtt = 0, calc = 0;
    for (int i = 0; i < 20; ++i) {
        const auto [r, k] = nz[rng() % nz.size()];
        const Scalar v = omega(r, k) * Scalar(static_cast<long>(rng() % 3) + 2);
        cat::CMatrix bad = omega;
        bad(r, k) = v;
        if (!check_yang_baxter(bad).passed()) ++ybe;
        const std::string m = "omega:" + cat::CMatrix::label(r) + "," + cat::CMatrix::label(k) + "=" + v.to_string();
        if (!check_rtt(mutated({m})).passed()) ++rtt;
        const auto& fam = cat::family(cat::FamilyId::omega_xxi);
        const std::size_t row = rng() % fam.relations.size();
        const Element& rel = fam.relations[row];
        Element e = rel;
        const Word& w = rel.terms().begin()->first;
        e.add_term(w, rel.coefficient(w));
        if (!check_calculus(mutated({"R_omega_xxi:" + std::to_string(row) + "=" + e.to_string(fam.alphabet)}),
                            cat::Variant::omega)
                 .passed())
            ++calc;
    }
    const bool ok = field && rewriting && ybe == 20 && rtt == 20 && calc == 20;
    return {ok, std::string("field axioms ") + (field ? "hold" : "fail") + ", rewriting " +
                    (rewriting ? "sound and path independent" : "broken") + ", mutations flipped ybe " +
                    std::to_string(ybe) + "/20, rtt " + std::to_string(rtt) + "/20, calculus " +
                    std::to_string(calc) + "/20"};
}

Outcome c14() {
    int code = 0;
    const double t0 = now_ms();
    cli_out({"verify", "--all", "--format", "json"}, &code);
    const double dt = now_ms() - t0;
    const bool all = code == 0 && dt < 600000;
    int c1 = 0, c2 = 0;
    const std::string a = cli_out({"verify", "--all", "--errata", "off", "--format", "json"}, &c1);
    const std::string b = cli_out({"verify", "--all", "--errata", "off", "--format", "json"}, &c2);
    const auto j = nlohmann::json::parse(a);
    std::set<std::string> failed;
    for (const auto& r : j)
        if (r["status"] == "fail") failed.insert(r["check"].get<std::string>());
    const std::set<std::string> documented = {"eigen", "calculus-omega", "calculus-omega-inv", "rtt", "inverse",
                                              "determinant", "coaction", "hopf", "star", "specializations"};
    const bool off = c1 == 1 && a == b && failed == documented;
    std::ostringstream note;
    note << "full suite " << (code == 0 ? "passes" : "fails") << " in " << static_cast<long long>(dt)
         << " ms; errata off fails " << failed.size() << " checks" << (a == b ? ", stable" : ", unstable")
         << (failed == documented ? ", as documented" : ", differs from the documented set");
    return {all && off, note.str()};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Yang-Baxter equation", true, c1},
        {2, "Omega inverse and q=u^2", true, c2},
        {3, "consistency constraints", true, c3},
        {4, "families generated from C", true, c4},
        {5, "differential calculi", true, c5},
        {6, "RTT relations", true, c6},
        {7, "inverse matrix", true, c7},
        {8, "quantum determinant factors", false, c8},
        {9, "coaction invariance", true, c9},
        {10, "Hopf structure", true, c10},
        {11, "star structure", true, c11},
        {12, "specializations", false, c12},
        {13, "property suites", true, c13},
        {14, "full suite and errata toggle", true, c14},
    };
    bool as_recorded = true;
    for (const auto& c : criteria) {
        const double t0 = now_ms();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const long long ms = static_cast<long long>(now_ms() - t0);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.note;
        if (!c.expected_pass && !o.ok) std::cout << " [known failure as worded]";
        std::cout << " [" << ms << " ms]" << std::endl;
        if (o.ok != c.expected_pass) as_recorded = false;
    }
    std::cout << (as_recorded ? "all criteria have their recorded outcome" : "some criterion changed outcome") << "\n";
    return as_recorded ? 0 : 1;
}
