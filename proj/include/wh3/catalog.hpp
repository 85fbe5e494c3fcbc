#pragma once

#include "wh3/algebra.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace wh3::catalog {

/// 9x9 matrix over Scalar. Rows and columns are indexed by ordered pairs
/// (i,j), i,j in {1,2,3}, in the order 11,12,13,21,22,23,31,32,33. Row (k,l),
/// column (m,n) is the coefficient in x^k xi^l = C^{kl}_{mn} xi^m x^n.
class CMatrix {
public:
    CMatrix() = default;

    static std::size_t index(int i, int j) { return static_cast<std::size_t>((i - 1) * 3 + (j - 1)); }
    static std::string label(std::size_t idx);
    /// Parses "11" style pair labels.
    static std::size_t parse_label(std::string_view text);

    const Scalar& operator()(std::size_t row, std::size_t col) const { return a_[row * 9 + col]; }
    Scalar& operator()(std::size_t row, std::size_t col) { return a_[row * 9 + col]; }
    const Scalar& at(int k, int l, int m, int n) const { return (*this)(index(k, l), index(m, n)); }

    static CMatrix identity();
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.a_ == b.a_; }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }
    CMatrix transpose() const;
    /// Exact inverse by Gauss-Jordan elimination; throws PresentationError if singular.
    CMatrix inverse() const;
    CMatrix substitute(const ParamBindings& b) const;

    /// Entries outside (k,l)->(k,l), (k,l)->(l,k) are zero except
    /// (12,33) and (21,33).
    bool sparsity_holds() const;
    std::vector<std::pair<std::size_t, std::size_t>> off_pattern_nonzeros() const;

private:
    std::array<Scalar, 81> a_{};
};

CMatrix omega();
CMatrix omega_inverse();

enum class FamilyId {
    xx,
    xixi,
    dd,
    omega_xxi,
    omega_inv_xxi,
    omega_dxi,
    omega_inv_dxi,
    omega_xd,
    omega_inv_xd,
    tt,
    tdinv,
};

inline constexpr std::array<FamilyId, 11> kAllFamilies = {
    FamilyId::xx,       FamilyId::xixi,          FamilyId::dd,           FamilyId::omega_xxi,
    FamilyId::omega_inv_xxi, FamilyId::omega_dxi, FamilyId::omega_inv_dxi, FamilyId::omega_xd,
    FamilyId::omega_inv_xd,  FamilyId::tt,        FamilyId::tdinv,
};

/// Stable identifier such as "R_xx" or "R_omega_inv_xd".
std::string family_key(FamilyId id);
/// Throws std::invalid_argument for unknown keys.
FamilyId parse_family(std::string_view key);

enum class Errata { on, off };

struct ErrataEntry {
    FamilyId family;
    std::size_t row;  // 0-based position in the printed table
    std::string printed;
    std::string corrected;
    std::string justification;
};
const std::vector<ErrataEntry>& errata();

struct RelationFamily {
    FamilyId id;
    std::string name;
    Alphabet alphabet;
    std::vector<Element> relations;
};

/// Printed table text, with errata applied unless `mode` is off.
std::vector<std::string> family_text(FamilyId id, Errata mode = Errata::on);
RelationFamily family(FamilyId id, Errata mode = Errata::on);

/// xi1<xi2<xi3<x1<x2<x3<d1<d2<d3, xi odd.
const Alphabet& calculus_alphabet();
/// Dinv<t11<t12<t13<t22<t21<t23<t33<t31<t32.
const Alphabet& quantum_group_alphabet();
/// Restriction of the calculus alphabet to names starting with `prefix`.
Alphabet calculus_subalphabet(std::string_view prefix);

enum class Variant { omega, omega_inv };
const char* to_string(Variant v);

/// The calculus family ids of a variant: R_xi x, R_d xi, R_x d order.
std::array<FamilyId, 3> mixed_families(Variant v);

/// Full calculus presentation: R_xx, R_xixi, R_dd and the three mixed
/// families of the variant.
Presentation calculus(Variant v, Errata mode = Errata::on);
/// R_tt and R_tDinv over the quantum-group alphabet.
Presentation quantum_group(Errata mode = Errata::on);
/// R_tt only, over the quantum-group alphabet.
Presentation rtt_presentation(Errata mode = Errata::on);
/// The presentation of one family (over its family alphabet).
Presentation family_presentation(FamilyId id, Errata mode = Errata::on);

enum class Kind { xxi, dxi, xd, xixi };
const char* to_string(Kind k);

/// The nine relations of `kind` built from C (the d-xi family from C^-1),
/// over the calculus alphabet.
std::vector<Element> generate_from_C(const CMatrix& c, Kind kind);
/// The 81 formal RTT relations (zero ones included) over the quantum-group alphabet.
std::vector<Element> rtt_generate(const CMatrix& r);

/// Letter of t^i_j in the quantum-group alphabet.
Letter t(int i, int j);
Letter dinv();

using TMatrix = std::array<std::array<Element, 3>, 3>;

TMatrix t_matrix();
Element quantum_determinant();
/// Cofactor numerators; the inverse of T is cofactors() with D^-1 on the right.
TMatrix cofactors();
TMatrix t_inverse();
/// Numerators P with (T^t)^-1 = D^-1 P, i.e. sum_j P^j_l t^k_j = delta D.
TMatrix transpose_inverse_numerators();
TMatrix transpose_inverse();

/// mu with t^i_j D^-1 = mu D^-1 t^i_j.
Scalar dinv_factor(int i, int j);
/// lambda = 1/mu with t^i_j D = lambda D t^i_j.
Scalar determinant_factor(int i, int j);

}  // namespace wh3::catalog
