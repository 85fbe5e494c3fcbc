#pragma once

#include "wh3/catalog.hpp"
#include "wh3/membership.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wh3::verify {

enum class Status { pass, fail, pass_modular };
const char* to_string(Status s);

struct Detail {
    std::string name;
    bool ok = true;
    Mode mode = Mode::exact;
    std::string note;
};

struct Report {
    std::string check;
    Status status = Status::pass;
    Mode mode = Mode::exact;
    std::optional<std::uint64_t> prime;
    std::optional<std::uint64_t> seed;
    std::vector<Detail> details;
    std::optional<std::string> counterexample;
    double millis = 0;

    bool passed() const { return status != Status::fail; }
    const Detail* find(const std::string& name) const;
    /// Appends a detail; the first failing detail with `witness` sets the counterexample.
    void add(Detail d, const std::optional<std::string>& witness = std::nullopt);
    /// Derives status and mode from the details.
    void finish(const ModularSettings& ms);
};

nlohmann::ordered_json to_json(const Report& r, bool timing = true);
std::string to_text(const Report& r);

/// A single perturbation of the catalog: "omega:ROW,COL=VALUE" sets one
/// Omega entry (pair labels such as 11,12); "FAMILY:ROW=RELATION" replaces
/// one printed row (0-based) of a family.
struct Mutation {
    bool omega_entry = true;
    std::size_t row = 0;
    std::size_t col = 0;
    catalog::FamilyId family = catalog::FamilyId::xx;
    std::string value;
};
Mutation parse_mutation(std::string_view text);

struct VerifyOptions {
    catalog::Errata errata = catalog::Errata::on;
    /// Forces one mode everywhere; otherwise degree-4 memberships and the
    /// derivative coaction families run modular, the rest exact.
    std::optional<Mode> mode;
    ModularSettings modular;
    std::size_t max_degree = 4;
    /// Parameter substitution applied to every catalog coefficient.
    ParamBindings set;
    std::vector<Mutation> mutations;
    /// Replaces whole families (relations over the family alphabet), applied
    /// before the mutations.
    std::map<catalog::FamilyId, std::vector<Element>> overrides;
};

/// Catalog data after errata, mutations and substitution.
class Context {
public:
    explicit Context(VerifyOptions opts = {});

    const VerifyOptions& options() const { return opts_; }
    const catalog::CMatrix& omega() const { return omega_; }
    const catalog::CMatrix& omega_inverse() const { return omega_inv_; }
    const catalog::CMatrix& matrix(catalog::Variant v) const {
        return v == catalog::Variant::omega ? omega_ : omega_inv_;
    }
    const std::vector<Element>& family(catalog::FamilyId id) const { return families_.at(id); }
    const std::vector<std::string>& family_text(catalog::FamilyId id) const { return texts_.at(id); }

    Presentation calculus(catalog::Variant v) const;
    Presentation rtt() const;
    Presentation quantum_group() const;
    Presentation family_presentation(catalog::FamilyId id) const;

    const Element& determinant() const { return det_; }
    const catalog::TMatrix& cofactors() const { return cof_; }
    const catalog::TMatrix& transpose_inverse_numerators() const { return pt_; }

    /// Mode of a membership question of the given degree.
    Mode mode_for(std::size_t degree, bool derivative_family = false) const;
    /// Throws DegreeBoundExceeded past --max-degree.
    void require_degree(std::size_t degree) const;

    Scalar sub(const Scalar& c) const;
    Element sub(const Element& e) const;

private:
    VerifyOptions opts_;
    catalog::CMatrix omega_, omega_inv_;
    std::map<catalog::FamilyId, std::vector<std::string>> texts_;
    std::map<catalog::FamilyId, std::vector<Element>> families_;
    Element det_;
    catalog::TMatrix cof_, pt_;
};

/// Involutive antihomomorphism on the x and quantum-group alphabets.
class StarMap {
public:
    StarMap();
    /// Image of a generator name (names outside the map are fixed).
    const std::string& image(const std::string& name) const;
    /// Reverses words and maps generators; identity on Scalars.
    Element apply(const Element& e, const Alphabet& alphabet) const;
    bool involutive(const Alphabet& alphabet) const;

private:
    std::map<std::string, std::string> images_;
};

// Matrix-level checks.
Report check_yang_baxter(const catalog::CMatrix& c, const std::string& label = "C");
Report check_constraints(const catalog::CMatrix& c, const std::string& label = "C");
Report check_eigenstructure(const Context& ctx);
/// Eigen analysis of one matrix.
Report check_eigenstructure(const catalog::CMatrix& c, const Context& ctx, const std::string& label = "C");

// Presentation-level checks.
Report check_calculus(const Context& ctx, catalog::Variant v);
Report check_rtt(const Context& ctx);
Report check_inverse(const Context& ctx);
Report check_determinant(const Context& ctx);
Report check_coaction(const Context& ctx, catalog::FamilyId id);
/// All calculus families (both variants) and the regular coaction.
Report check_coaction(const Context& ctx);
Report check_hopf(const Context& ctx);
Report check_star(const Context& ctx);
Report check_specializations(const Context& ctx);

/// Coaction check with `dropped` rows of R_tt removed from the quantum
/// group side (negative control).
Report check_coaction_with(const Context& ctx, catalog::FamilyId id, const std::vector<std::size_t>& dropped);

/// The check ids in suite order.
const std::vector<std::string>& check_ids();
/// Runs one check by id; throws std::invalid_argument for unknown ids.
Report run_check(const std::string& id, const Context& ctx);

}  // namespace wh3::verify
