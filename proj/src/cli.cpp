#include "wh3/cli.hpp"

#include "wh3/algebra_file.hpp"
#include "wh3/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace wh3::cli {

namespace {

using catalog::FamilyId;
using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> checks;
    bool all = false;
    std::string spec;
    std::string set;
    std::string mode;
    std::string format = "text";
    std::string errata = "on";
    std::string algebra;
    std::string algebra_file;
    std::string family;
    std::string expr;
    std::string matrix = "omega";
    std::string out;
    std::string dir;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::size_t max_degree = 4;
    std::size_t degree = 0;
    std::vector<std::string> mutations;
    bool strict_exact = false;
    bool timing = false;
    unsigned jobs = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

/// --spec: parameter bindings plus generator bindings (values 0 or 1).
std::pair<ParamBindings, GeneratorBindings> parse_spec(const std::string& text) {
    ParamBindings params;
    GeneratorBindings gens;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--spec expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        if (name == "q" || name == "u" || name == "s") {
            for (const auto& [p, v] : parse_bindings(item)) params[p] = v;
        } else if (value == "0" || value == "1") {
            gens.values[name] = value == "0" ? 0 : 1;
        } else {
            throw UsageError("generator binding " + name + " must be 0 or 1");
        }
    }
    return {params, gens};
}

verify::VerifyOptions verify_options(const Args& a) {
    verify::VerifyOptions o;
    if (a.errata != "on" && a.errata != "off") throw UsageError("--errata must be on or off");
    o.errata = a.errata == "off" ? catalog::Errata::off : catalog::Errata::on;
    if (a.mode == "exact")
        o.mode = Mode::exact;
    else if (a.mode == "modular")
        o.mode = Mode::modular;
    else if (!a.mode.empty())
        throw UsageError("--mode must be exact or modular");
    o.modular.prime = a.prime;
    o.modular.seed = a.seed;
    o.max_degree = a.max_degree;
    o.set = parse_bindings(a.set);
    for (const auto& [p, v] : parse_spec(a.spec).first) o.set[p] = v;
    for (const auto& m : a.mutations) o.mutations.push_back(verify::parse_mutation(m));
    return o;
}

Presentation resolve_algebra(const std::string& name, const verify::Context& ctx) {
    if (name == "x") return ctx.family_presentation(FamilyId::xx);
    if (name == "xi") return ctx.family_presentation(FamilyId::xixi);
    if (name == "d") return ctx.family_presentation(FamilyId::dd);
    if (name == "t") return ctx.rtt();
    if (name == "qg") return ctx.quantum_group();
    if (name == "calc-omega") return ctx.calculus(catalog::Variant::omega);
    if (name == "calc-omega-inv") return ctx.calculus(catalog::Variant::omega_inv);
    try {
        return ctx.family_presentation(catalog::parse_family(name));
    } catch (const std::exception&) {
        throw UsageError("unknown algebra '" + name +
                         "' (known: x, xi, d, t, qg, calc-omega, calc-omega-inv, or a family key such as R_tt)");
    }
}

Presentation load_algebra(const Args& a, const verify::Context& ctx) {
    if (!a.algebra_file.empty()) {
        if (!a.algebra.empty()) throw UsageError("--algebra and --algebra-file are exclusive");
        Presentation p = read_algebra_file(a.algebra_file);
        for (auto& r : p.relations) r = ctx.sub(r);
        return p;
    }
    if (a.algebra.empty()) throw UsageError("select an algebra with --algebra or --algebra-file");
    return resolve_algebra(a.algebra, ctx);
}

bool json_format(const Args& a) {
    if (a.format != "text" && a.format != "json") throw UsageError("--format must be text or json");
    return a.format == "json";
}

int do_verify(const Args& a, std::ostream& out) {
    const bool json = json_format(a);
    std::vector<std::string> ids;
    if (a.all) ids = verify::check_ids();
    for (const auto& c : a.checks)
        for (const auto& id : split(c, ',')) {
            const auto& known = verify::check_ids();
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw UsageError("unknown check '" + id + "'");
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        }
    if (ids.empty()) throw UsageError("select checks with --check or --all");
    // Keep suite order regardless of the order given.
    std::vector<std::string> ordered;
    for (const auto& id : verify::check_ids())
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) ordered.push_back(id);

    verify::VerifyOptions opts = verify_options(a);
    if (!a.algebra_file.empty()) {
        Presentation p = read_algebra_file(a.algebra_file);
        FamilyId id;
        try {
            id = catalog::parse_family(a.family.empty() ? p.name : a.family);
        } catch (const std::exception&) {
            throw UsageError("cannot tell which family '" + a.algebra_file + "' replaces; pass --family");
        }
        const Alphabet& target = catalog::family(id).alphabet;
        std::vector<Element> rels;
        for (const auto& r : p.relations) rels.push_back(embed(r, p.alphabet, target));
        opts.overrides[id] = std::move(rels);
    }
    const verify::Context ctx(std::move(opts));

    const unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<verify::Report> reports(ordered.size());
    for (std::size_t start = 0; start < ordered.size(); start += jobs) {
        std::vector<std::future<verify::Report>> running;
        for (std::size_t i = start; i < std::min(ordered.size(), start + jobs); ++i)
            running.push_back(std::async(std::launch::async, [&, i] { return verify::run_check(ordered[i], ctx); }));
        for (std::size_t i = 0; i < running.size(); ++i) reports[start + i] = running[i].get();
    }

    bool ok = true;
    for (const auto& r : reports)
        if (r.status == verify::Status::fail || (a.strict_exact && r.status == verify::Status::pass_modular))
            ok = false;
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(verify::to_json(r, a.timing));
        out << arr.dump(2) << "\n";
    } else {
        std::size_t pass = 0;
        for (const auto& r : reports) {
            out << verify::to_text(r);
            if (a.timing) out << "  time: " << static_cast<long long>(r.millis) << " ms\n";
            pass += r.passed() ? 1 : 0;
        }
        out << pass << "/" << reports.size() << " checks passed\n";
    }
    return ok ? kPass : kFail;
}

int do_normalize(const Args& a, std::ostream& out, std::ostream& err) {
    const bool json = json_format(a);
    if (a.expr.empty()) throw UsageError("normalize needs --expr");
    const verify::Context ctx(verify_options(a));
    Presentation p = specialize(load_algebra(a, ctx), {}, parse_spec(a.spec).second);
    const Element e = ctx.sub(parse_element(a.expr, p.alphabet));
    RuleSystem rs;
    try {
        rs = orient(p, OrientPolicy::strict);
    } catch (const PresentationError& ex) {
        err << "warning: " << ex.what() << "; using lenient orientation\n";
        rs = orient(p, OrientPolicy::lenient);
    }
    std::size_t steps = 0;
    const Element nf = rs.normalize(e, {}, &steps);
    if (json) {
        ordered_json j;
        j["algebra"] = p.name;
        j["input"] = e.to_string(p.alphabet);
        j["normal_form"] = nf.to_string(p.alphabet);
        j["steps"] = steps;
        out << j.dump(2) << "\n";
    } else {
        out << nf.to_string(p.alphabet) << "\n";
    }
    return kPass;
}

int do_member(const Args& a, std::ostream& out) {
    const bool json = json_format(a);
    if (a.expr.empty()) throw UsageError("member needs --expr");
    const verify::VerifyOptions opts = verify_options(a);
    const verify::Context ctx(opts);
    Presentation p = specialize(load_algebra(a, ctx), {}, parse_spec(a.spec).second);
    const Element e = ctx.sub(parse_element(a.expr, p.alphabet));
    const std::size_t degree = a.degree ? a.degree : std::max<std::size_t>(e.degree(), 2);
    ctx.require_degree(degree);
    const Mode mode = opts.mode.value_or(Mode::exact);
    const MembershipReport r = ideal_membership(e, p, degree, mode, opts.modular);
    if (json) {
        ordered_json j;
        j["algebra"] = p.name;
        j["expression"] = e.to_string(p.alphabet);
        j["member"] = r.member;
        j["mode"] = to_string(r.mode);
        j["prime"] = r.mode == Mode::modular ? ordered_json(r.prime) : ordered_json(nullptr);
        j["seed"] = r.mode == Mode::modular ? ordered_json(r.seed) : ordered_json(nullptr);
        j["degree"] = degree;
        j["rank"] = r.rank;
        j["columns"] = r.columns;
        j["witness"] = r.witness ? ordered_json(p.alphabet.format(*r.witness)) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << (r.member ? "member" : "nonmember") << " (" << to_string(r.mode);
        if (r.mode == Mode::modular) out << ", p=" << r.prime << ", seed=" << r.seed;
        out << ", degree " << degree << ")\n";
        if (!r.member && r.mode == Mode::exact) out << "remainder: " << r.remainder.to_string(p.alphabet) << "\n";
    }
    return r.member ? kPass : kFail;
}

int do_matrix(const Args& a, std::ostream& out) {
    const bool json = json_format(a);
    const verify::Context ctx(verify_options(a));
    catalog::CMatrix m;
    if (a.matrix == "omega")
        m = ctx.omega();
    else if (a.matrix == "omega-inv")
        m = ctx.omega_inverse();
    else if (a.matrix == "identity")
        m = catalog::CMatrix::identity();
    else
        throw UsageError("--name must be omega, omega-inv or identity");
    if (json) {
        ordered_json j;
        j["name"] = a.matrix;
        auto order = ordered_json::array();
        for (std::size_t i = 0; i < 9; ++i) order.push_back(catalog::CMatrix::label(i));
        j["order"] = order;
        auto rows = ordered_json::array();
        for (std::size_t r = 0; r < 9; ++r) {
            auto row = ordered_json::array();
            for (std::size_t c = 0; c < 9; ++c) row.push_back(m(r, c).to_string());
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t c = 0; c < 9; ++c)
                if (!m(r, c).is_zero())
                    out << a.matrix << "[" << catalog::CMatrix::label(r) << "," << catalog::CMatrix::label(c)
                        << "] = " << m(r, c).to_string() << "\n";
    }
    return kPass;
}

int do_export(const Args& a, std::ostream& out) {
    const verify::Context ctx(verify_options(a));
    std::vector<Presentation> items;
    if (!a.algebra.empty()) {
        items.push_back(resolve_algebra(a.algebra, ctx));
    } else {
        for (FamilyId id : catalog::kAllFamilies) items.push_back(ctx.family_presentation(id));
    }
    if (!a.dir.empty()) {
        std::filesystem::create_directories(a.dir);
        for (const auto& p : items) write_algebra_file(std::filesystem::path(a.dir) / (p.name + ".json"), p);
        out << "wrote " << items.size() << " file" << (items.size() == 1 ? "" : "s") << " to " << a.dir << "\n";
        return kPass;
    }
    if (!a.out.empty()) {
        if (items.size() != 1) throw UsageError("--out needs a single --algebra; use --dir for all families");
        write_algebra_file(a.out, items[0]);
        return kPass;
    }
    if (items.size() == 1) {
        out << presentation_to_json(items[0]).dump(2) << "\n";
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& p : items) arr.push_back(presentation_to_json(p));
        out << arr.dump(2) << "\n";
    }
    return kPass;
}

void add_common(CLI::App* sub, Args& a) {
    sub->add_option("--errata", a.errata, "on (corrected rows) or off (rows as printed)");
    sub->add_option("--set", a.set, "parameter values, e.g. q=3/2,u=5/7,s=2");
    sub->add_option("--spec", a.spec, "specialization, e.g. q=u^2, s=0 or t31=0,t32=0");
    sub->add_option("--mode", a.mode, "exact or modular");
    sub->add_option("--prime", a.prime, "prime for modular mode");
    sub->add_option("--seed", a.seed, "seed for modular evaluation points");
    sub->add_option("--max-degree", a.max_degree, "largest membership degree allowed");
    sub->add_option("--format", a.format, "text or json");
    sub->add_option("--mutate", a.mutations, "omega:ROW,COL=VALUE or FAMILY:ROW=RELATION")->take_all();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification engine for the (q,u,s)-deformed Weyl-Heisenberg algebra", "wh3"};
    app.require_subcommand(1);
    Args a;

    auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
    add_common(verify_cmd, a);
    verify_cmd->add_option("--check", a.checks, "check ids (comma separated)")->take_all();
    verify_cmd->add_flag("--all", a.all, "run every check");
    verify_cmd->add_option("--algebra-file", a.algebra_file, "replace one family by an algebra file");
    verify_cmd->add_option("--family", a.family, "family replaced by --algebra-file");
    verify_cmd->add_flag("--strict-exact", a.strict_exact, "treat pass-modular as failure");
    verify_cmd->add_flag("--timing", a.timing, "report wall-clock times");
    verify_cmd->add_option("--jobs", a.jobs, "checks run concurrently (default: cores)");

    auto* normalize_cmd = app.add_subcommand("normalize", "normal form modulo an algebra");
    add_common(normalize_cmd, a);
    normalize_cmd->add_option("--algebra", a.algebra, "x, xi, d, t, qg, calc-omega, calc-omega-inv or a family key");
    normalize_cmd->add_option("--algebra-file", a.algebra_file, "algebra-definition file");
    normalize_cmd->add_option("--expr", a.expr, "expression")->required();

    auto* member_cmd = app.add_subcommand("member", "ideal membership at a fixed degree");
    add_common(member_cmd, a);
    member_cmd->add_option("--algebra", a.algebra, "algebra selector");
    member_cmd->add_option("--algebra-file", a.algebra_file, "algebra-definition file");
    member_cmd->add_option("--expr", a.expr, "expression")->required();
    member_cmd->add_option("--degree", a.degree, "degree bound (default: max(deg, 2))");

    auto* matrix_cmd = app.add_subcommand("matrix", "print a 9x9 commutation matrix");
    add_common(matrix_cmd, a);
    matrix_cmd->add_option("--name", a.matrix, "omega, omega-inv or identity");

    auto* export_cmd = app.add_subcommand("export", "write catalog families as algebra files");
    add_common(export_cmd, a);
    export_cmd->add_option("--algebra", a.algebra, "one algebra or family (default: every family)");
    export_cmd->add_option("--out", a.out, "output file");
    export_cmd->add_option("--dir", a.dir, "output directory, one file per family");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "wh3: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) err << sub->help();
        return kUsage;
    }

    try {
        if (verify_cmd->parsed()) return do_verify(a, out);
        if (normalize_cmd->parsed()) return do_normalize(a, out, err);
        if (member_cmd->parsed()) return do_member(a, out);
        if (matrix_cmd->parsed()) return do_matrix(a, out);
        if (export_cmd->parsed()) return do_export(a, out);
    } catch (const UsageError& e) {
        err << "wh3: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "wh3: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "wh3: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "wh3: " << e.what() << "\n";
        return kUsage;
    } catch (const DegreeBoundExceeded& e) {
        err << "wh3: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        err << "wh3: error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace wh3::cli
