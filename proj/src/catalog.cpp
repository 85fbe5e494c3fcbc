#include "wh3/catalog.hpp"

#include <stdexcept>

namespace wh3::catalog {

namespace {

Scalar sc(std::string_view text) { return parse_scalar(text); }

// Printed tables, in the expression grammar.
const std::vector<std::string> kXX = {
    "x1*x2 - q*x2*x1 - s*x3^2",
    "x1*x3 - u*x3*x1",
    "x2*x3 - u^-1*x3*x2",
};

const std::vector<std::string> kXiXi = {
    "xi1^2",
    "xi2^2",
    "xi3^2",
    "xi2*xi1 = -(u^2/q^2)*xi1*xi2",
    "xi1*xi3 = -(q/u)*xi3*xi1",
    "xi2*xi3 = -(u/q)*xi3*xi2",
};

const std::vector<std::string> kDD = {
    "d1*d2 = (u^2/q^2)*d2*d1",
    "d1*d3 = (u/q)*d3*d1",
    "d2*d3 = (q/u)*d3*d2",
};

const std::vector<std::string> kOmegaXXi = {
    "x1*xi1 = (q/u^2)*xi1*x1",
    "x2*xi2 = (q/u^2)*xi2*x2",
    "x3*xi3 = (q/u^2)*xi3*x3",
    "x1*xi3 = (q/u)*xi3*x1",
    "x1*xi2 = (q^2/u^2)*xi2*x1 + (q*s/u^2)*xi3*x3",
    "x3*xi2 = (q/u)*xi2*x3",
    "x2*xi3 = (q/u^2-1)*xi2*x3 + (1/u)*xi3*x2",
    "x3*xi1 = (q/u^2-1)*xi3*x1 + (1/u)*xi1*x3",
    "x2*xi1 = (1/q)*xi1*x2 + (q/u^2-1)*xi2*x1 - (s/q)*xi3*x3",
};

const std::vector<std::string> kOmegaInvXXi = {
    "x1*xi1 = (u^2/q)*xi1*x1",
    "x2*xi2 = (u^2/q)*xi2*x2",
    "x3*xi3 = (u^2/q)*xi3*x3",
    "x1*xi3 = (u^2/q-1)*xi1*x3 + u*xi3*x1",
    "x3*xi1 = (u/q)*xi1*x3",
    "x2*xi1 = (u^2/q^2)*xi1*x2 - (s*u^2/q^2)*xi3*x3",
    "x2*xi3 = (u/q)*xi3*x2",
    "x3*xi2 = (u^2/q-1)*xi3*x2 + u*xi2*x3",
    "x1*xi2 = (u^2/q-1)*xi1*x2 + q*xi2*x1 + s*xi3*x3",
};

const std::vector<std::string> kOmegaDXi = {
    "d3*xi3 = (u^2/q-1)*xi2*d2 + (u^2/q)*xi3*d2",
    "d1*xi2 = (u^2/q^2)*xi2*d1",
    "d1*xi3 = (u/q)*xi3*d1",
    "d2*xi1 = q*xi1*d2",
    "d3*xi2 = (u/q)*xi2*d3 - (s*u^2/q^2)*xi3*d1",
    "d2*xi3 = u*xi3*d2",
    "d3*xi1 = u*xi1*d3 + s*xi3*d2",
    "d2*xi2 = (u^2/q)*xi2*d2",
    "d1*xi1 = (u^2/q)*xi1*d1 + (u^2/q-1)*xi3*d3 + (u^2/q-1)*xi2*d2",
};

const std::vector<std::string> kOmegaInvDXi = {
    "d1*xi1 = (q/u^2)*xi1*d1",
    "d3*xi2 = (1/u)*xi2*d3 - (s/q)*xi3*d1",
    "d1*xi3 = (1/u)*xi3*d1",
    "d2*xi1 = (q^2/u^2)*xi1*d2",
    "d2*xi3 = (q/u)*xi3*d2",
    "d3*xi1 = (q/u)*xi1*d3 + (s*q/u^2)*xi3*d2",
    "d1*xi2 = (1/q)*xi2*d1",
    "d3*xi3 = (q/u^2-1)*xi1*d1 + (q/u^2)*xi3*d3",
    "d2*xi2 = (q/u^2-1)*xi1*d1 + (q/u^2-1)*xi3*d3 + (q/u^2)*xi2*d2",
};

const std::vector<std::string> kOmegaXD = {
    "d1*x1 = 1 + (q/u^2)*x1*d1",
    "d2*x3 = (q/u)*x3*d2",
    "d3*x3 = 1 + (q/u^2)*x3*d3 + (q/u^2-1)*x1*d1",
    "d1*x2 = (1/q)*x2*d1",
    "d3*x1 = (q/u)*x1*d3 + (q*s/u^2)*x3*d2",
    "d2*x1 = (q^2/u^2)*x1*d2",
    "d3*x2 = (1/u)*x2*d3 - (s/q)*x3*d1",
    "d1*x3 = (1/u)*x3*d1",
    "d2*x2 = 1 + (q/u^2)*x2*d2 + (q/u^2-1)*x1*d1 + (q/u^2-1)*x3*d3",
};

const std::vector<std::string> kOmegaInvXD = {
    "d2*x2 = 1 + (u^2/q)*x2*d2",
    "d1*x3 = (u/q)*x3*d1",
    "d3*x3 = 1 + (u^2/q)*x3*d3 + (u^2/q-1)*x2*d2",
    "d2*x1 = q*x1*d2",
    "d3*x2 = (u/q)*x2*d3 - (s*u^2/q)*x3*d1",
    "d1*x2 = (u^2/q^2)*x2*d1",
    "d3*x1 = u*x1*d3 + s*x3*d2",
    "d2*x3 = u*x3*d2",
    "d1*x1 = 1 + (u^2/q)*x1*d1 + (u^2/q-1)*x2*d2 + (u^2/q-1)*x3*d3",
};

const std::vector<std::string> kTT = {
    "t12*t11 = (q^2/u^2)*t11*t12",
    "t13*t12 = (u/q)*t12*t13",
    "t13*t11 = (q/u)*t11*t13",
    "t32*t22 = u*t22*t32",
    "t31*t11 = (1/u)*t11*t31",
    "t33*t12 = (1/q)*t12*t33",
    "t23*t22 = (u/q)*t22*t23",
    "t31*t12 = (u/q^2)*t12*t31",
    "t32*t21 = (q^2/u)*t21*t32",
    "t32*t12 = (1/u)*t12*t32",
    "t31*t13 = (1/q)*t13*t31",
    "t21*t22 = (u^2/q^2)*t22*t21",
    "t23*t21 = (q/u)*t21*t23",
    "t32*t31 = (q^2/u^2)*t31*t32",
    "t32*t33 = (q/u)*t33*t32",
    "t31*t21 = u*t21*t31",
    "t31*t33 = (u/q)*t33*t31",
    "t33*t21 = q*t21*t33",
    "t22*t11 = t11*t22 - ((u^2-q)/q^2)*t12*t21 - (q*s/u^2)*t31*t32",
    "t21*t11 = (1/q)*t11*t21 - (s/q)*t31^2",
    "t23*t11 = (u/q)*t11*t23 - ((u^2-q)/q^2)*t13*t21 - (s/q)*t33*t31",
    "t33*t11 = t11*t33 - ((u^2-q)/(u*q))*t13*t31",
    "t32*t11 = (q/u)*t11*t32 - ((u^2-q)/u)*t12*t31",
    "t22*t12 = (1/q)*t12*t22 - (s/q)*t32^2",
    "t23*t12 = (u/q^2)*t12*t23 - (s/q)*t33*t32",
    "t21*t12 = (u^2/q^3)*t12*t21 - (s/q)*t31*t32",
    "t32*t13 = t13*t32 - ((u^2-q)/(u*q))*t12*t33",
    "t23*t13 = (1/q)*t13*t23 - (s/q)*t33^2 + (s/q)*t11*t22 - (s*u^2/q^3)*t12*t21",
    "t22*t13 = (u/q)*t13*t22 - ((u^2-q)/q^2)*t12*t23 - (s/u)*t33*t32",
    "t33*t22 = t22*t33 + ((u^2-q)/u)*t23*t32",
    "t33*t23 = u*t23*t33 + (s*q/u)*t21*t32 - s*u*t22*t31",
    "t31*t22 = (u/q)*t22*t31 + ((u^2-q)/u)*t21*t32",
    "t31*t23 = t23*t31 + ((u^2-q)/u)*t21*t33",
    "t21*t13 = (u/q^2)*t13*t21 - (s*u/q^2)*t33*t31",
    "t33*t13 = (1/u)*t13*t33 + (s/u)*t11*t32 - (s*u/q^2)*t12*t31",
    "t32*t23 = q*t23*t32",
};

const std::vector<std::string> kTDinv = {
    "t11*Dinv = Dinv*t11",
    "t12*Dinv = (u^2/q^4)*t12*Dinv",
    "t13*Dinv = (u/q^2)*Dinv*t13",
    "t22*Dinv = Dinv*t22",
    "t21*Dinv = q^2*Dinv*t21",
    "t23*Dinv = (u/q^2)*t23*Dinv",
    "t31*Dinv = (q^2/u)*Dinv*t31",
    "t32*Dinv = (u/q^2)*t32*Dinv",
    "t33*Dinv = Dinv*t33",
};

const char* const kDet =
    "t11*t22*t33 + t13*t21*t32 + (u^3/q^3)*t12*t23*t31 - (q/u)*t11*t23*t32 - (u^2/q^2)*t12*t21*t33 "
    "- (u^2/q^2)*t13*t22*t31";

const char* const kCof[3][3] = {
    {"t22*t33 - (q/u)*t23*t32", "-(q^2/u^2)*t12*t33 + (q^3/u^3)*t13*t32", "t12*t23 - (q/u)*t13*t22"},
    {"-(u^2/q^2)*t21*t33 + (u^3/q^3)*t23*t31", "t11*t33 - (u/q)*t13*t31",
     "-(u^2/q^2)*t11*t23 + (u^3/q^3)*t13*t21"},
    {"t21*t32 - (u^2/q^2)*t22*t31", "-(q^2/u^2)*t11*t32 + t12*t31", "t11*t22 - (u^2/q^2)*t12*t21"},
};

const char* const kTransposeInverse[3][3] = {
    {"t22*t33 - (q/u)*t23*t32", "-(u^4/q^4)*t12*t33 + (u^3/q^3)*t13*t32", "(u^3/q^3)*t12*t23 - (u^2/q^2)*t13*t22"},
    {"-(q^4/u^4)*t21*t33 + (q^3/u^3)*t23*t31", "t11*t33 - (u/q)*t13*t31", "-(q/u)*t11*t23 + t13*t21"},
    {"-(q/u)*t22*t31 + (q^3/u^3)*t21*t32", "-(u/q)*t11*t32 + (u^3/q^3)*t12*t31", "t11*t22 - (u^2/q^2)*t12*t21"},
};

const char* const kDinvFactor[3][3] = {
    {"1", "u^2/q^4", "u/q^2"},
    {"q^4/u^2", "1", "q^2/u"},
    {"q^2/u", "u/q^2", "1"},
};

const std::vector<std::string>& printed(FamilyId id) {
    switch (id) {
        case FamilyId::xx: return kXX;
        case FamilyId::xixi: return kXiXi;
        case FamilyId::dd: return kDD;
        case FamilyId::omega_xxi: return kOmegaXXi;
        case FamilyId::omega_inv_xxi: return kOmegaInvXXi;
        case FamilyId::omega_dxi: return kOmegaDXi;
        case FamilyId::omega_inv_dxi: return kOmegaInvDXi;
        case FamilyId::omega_xd: return kOmegaXD;
        case FamilyId::omega_inv_xd: return kOmegaInvXD;
        case FamilyId::tt: return kTT;
        case FamilyId::tdinv: return kTDinv;
    }
    throw std::invalid_argument("unknown family");
}

bool is_quantum_group_family(FamilyId id) { return id == FamilyId::tt || id == FamilyId::tdinv; }

// Weight a(i) of x^i and xi^i.
int weight_of(int i) { return i == 3 ? 0 : 1; }

Alphabet build_calculus() {
    std::vector<Generator> gens;
    int rank = 0;
    for (int i = 1; i <= 3; ++i) gens.push_back({"xi" + std::to_string(i), Parity::odd, rank++, weight_of(i)});
    for (int i = 1; i <= 3; ++i) gens.push_back({"x" + std::to_string(i), Parity::even, rank++, weight_of(i)});
    for (int i = 1; i <= 3; ++i) gens.push_back({"d" + std::to_string(i), Parity::even, rank++, -weight_of(i)});
    return Alphabet(std::move(gens));
}

Alphabet build_quantum_group() {
    std::vector<Generator> gens;
    int rank = 0;
    gens.push_back({"Dinv", Parity::even, rank++, 0});
    const int order[9][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 1}, {2, 3}, {3, 3}, {3, 1}, {3, 2}};
    for (const auto& ij : order)
        gens.push_back({"t" + std::to_string(ij[0]) + std::to_string(ij[1]), Parity::even, rank++,
                        weight_of(ij[0]) - weight_of(ij[1])});
    return Alphabet(std::move(gens));
}

TMatrix parse_matrix(const char* const text[3][3]) {
    TMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = parse_element(text[i][j], quantum_group_alphabet());
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// CMatrix

std::string CMatrix::label(std::size_t idx) {
    return std::to_string(idx / 3 + 1) + std::to_string(idx % 3 + 1);
}

std::size_t CMatrix::parse_label(std::string_view text) {
    if (text.size() != 2 || text[0] < '1' || text[0] > '3' || text[1] < '1' || text[1] > '3')
        throw std::invalid_argument("bad index pair '" + std::string(text) + "' (expected e.g. 12)");
    return index(text[0] - '0', text[1] - '0');
}

CMatrix CMatrix::identity() {
    CMatrix m;
    for (std::size_t i = 0; i < 9; ++i) m(i, i) = Scalar(1);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix c;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t k = 0; k < 9; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < 9; ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

CMatrix CMatrix::transpose() const {
    CMatrix t;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CMatrix CMatrix::inverse() const {
    CMatrix a = *this;
    CMatrix inv = identity();
    for (std::size_t col = 0; col < 9; ++col) {
        std::size_t piv = col;
        while (piv < 9 && a(piv, col).is_zero()) ++piv;
        if (piv == 9) throw PresentationError("singular C-matrix");
        if (piv != col)
            for (std::size_t j = 0; j < 9; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Scalar p = a(col, col).inverse();
        for (std::size_t j = 0; j < 9; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t r = 0; r < 9; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (std::size_t j = 0; j < 9; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

CMatrix CMatrix::substitute(const ParamBindings& b) const {
    CMatrix m;
    for (std::size_t i = 0; i < 81; ++i) m.a_[i] = wh3::substitute(a_[i], b);
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>> CMatrix::off_pattern_nonzeros() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < 9; ++r) {
        const std::size_t swapped = (r % 3) * 3 + r / 3;
        for (std::size_t c = 0; c < 9; ++c)
            if (c != r && c != swapped && !(*this)(r, c).is_zero()) out.emplace_back(r, c);
    }
    return out;
}

bool CMatrix::sparsity_holds() const {
    for (const auto& [r, c] : off_pattern_nonzeros()) {
        const bool allowed = c == index(3, 3) && (r == index(1, 2) || r == index(2, 1));
        if (!allowed) return false;
    }
    return true;
}

CMatrix omega() {
    CMatrix o;
    auto put = [&](int k, int l, int m, int n, const char* v) { o(CMatrix::index(k, l), CMatrix::index(m, n)) = sc(v); };
    put(1, 1, 1, 1, "q/u^2");
    put(1, 2, 2, 1, "q^2/u^2");
    put(1, 2, 3, 3, "q*s/u^2");
    put(1, 3, 3, 1, "q/u");
    put(2, 1, 1, 2, "1/q");
    put(2, 1, 2, 1, "q/u^2-1");
    put(2, 1, 3, 3, "-s/q");
    put(2, 2, 2, 2, "q/u^2");
    put(2, 3, 2, 3, "q/u^2-1");
    put(2, 3, 3, 2, "1/u");
    put(3, 1, 1, 3, "1/u");
    put(3, 1, 3, 1, "q/u^2-1");
    put(3, 2, 2, 3, "q/u");
    put(3, 3, 3, 3, "q/u^2");
    return o;
}

CMatrix omega_inverse() { return omega().inverse(); }

// ---------------------------------------------------------------------------
// Families

std::string family_key(FamilyId id) {
    switch (id) {
        case FamilyId::xx: return "R_xx";
        case FamilyId::xixi: return "R_xixi";
        case FamilyId::dd: return "R_dd";
        case FamilyId::omega_xxi: return "R_omega_xxi";
        case FamilyId::omega_inv_xxi: return "R_omega_inv_xxi";
        case FamilyId::omega_dxi: return "R_omega_dxi";
        case FamilyId::omega_inv_dxi: return "R_omega_inv_dxi";
        case FamilyId::omega_xd: return "R_omega_xd";
        case FamilyId::omega_inv_xd: return "R_omega_inv_xd";
        case FamilyId::tt: return "R_tt";
        case FamilyId::tdinv: return "R_tDinv";
    }
    throw std::invalid_argument("unknown family");
}

FamilyId parse_family(std::string_view key) {
    for (FamilyId id : kAllFamilies)
        if (family_key(id) == key) return id;
    std::string known;
    for (FamilyId id : kAllFamilies) known += (known.empty() ? "" : ", ") + family_key(id);
    throw std::invalid_argument("unknown family '" + std::string(key) + "' (known: " + known + ")");
}

const std::vector<ErrataEntry>& errata() {
    static const std::vector<ErrataEntry> list = {
        {FamilyId::omega_dxi, 0, kOmegaDXi[0], "d3*xi3 = (u^2/q-1)*xi2*d2 + (u^2/q)*xi3*d3",
         "the family generated from C^-1 has this row; the printed one raises the span rank to 10"},
        {FamilyId::omega_inv_xd, 4, kOmegaInvXD[4], "d3*x2 = (u/q)*x2*d3 - (s*u^2/q^2)*x3*d1",
         "the family generated from C has coefficient s*u^2/q^2; the printed row lies outside its span"},
        {FamilyId::tt, 22, kTT[22], "t32*t11 = (q/u)*t11*t32 - ((u^2-q)/(u*q))*t12*t31",
         "the printed row lies outside the RTT span; the corrected one is the RTT relation with this leading word"},
        {FamilyId::tt, 30, kTT[30], "t33*t23 = u*t23*t33 + (s*q/u)*t21*t32 - (s*u/q)*t22*t31",
         "the printed row lies outside the RTT span; the corrected one is the RTT relation with this leading word"},
        {FamilyId::dd, 0, kDD[0], "d2*d1 = (u^2/q^2)*d1*d2",
         "the printed row is inconsistent with R_xd (d2*d1*x1 has two normal forms); the word order is reversed"},
        {FamilyId::dd, 1, kDD[1], "d3*d1 = (u/q)*d1*d3",
         "the printed row is inconsistent with R_xd; the word order is reversed"},
        {FamilyId::dd, 2, kDD[2], "d3*d2 = (q/u)*d2*d3",
         "the printed row is inconsistent with R_xd; the word order is reversed"},
        {FamilyId::tdinv, 1, kTDinv[1], "t12*Dinv = (u^2/q^4)*Dinv*t12",
         "right side lacks the swap; the factor is certified by t12*D - (q^4/u^2)*D*t12 in the ideal"},
        {FamilyId::tdinv, 4, kTDinv[4], "t21*Dinv = (q^4/u^2)*Dinv*t21",
         "t21*D - (u^2/q^4)*D*t21 is in the ideal; the printed factor q^2 is not"},
        {FamilyId::tdinv, 5, kTDinv[5], "t23*Dinv = (q^2/u)*Dinv*t23",
         "right side lacks the swap and the factor is inverted; certified by t23*D - (u/q^2)*D*t23"},
        {FamilyId::tdinv, 7, kTDinv[7], "t32*Dinv = (u/q^2)*Dinv*t32",
         "right side lacks the swap; the factor is certified by t32*D - (q^2/u)*D*t32 in the ideal"},
    };
    return list;
}

std::vector<std::string> family_text(FamilyId id, Errata mode) {
    std::vector<std::string> rows = printed(id);
    if (mode == Errata::on)
        for (const auto& e : errata())
            if (e.family == id) rows.at(e.row) = e.corrected;
    return rows;
}

const Alphabet& calculus_alphabet() {
    static const Alphabet a = build_calculus();
    return a;
}

const Alphabet& quantum_group_alphabet() {
    static const Alphabet a = build_quantum_group();
    return a;
}

Alphabet calculus_subalphabet(std::string_view prefix) {
    std::vector<Generator> gens;
    for (const auto& g : calculus_alphabet().generators())
        if (g.name.size() == prefix.size() + 1 && g.name.compare(0, prefix.size(), prefix) == 0) gens.push_back(g);
    if (gens.empty()) throw std::invalid_argument("no calculus generators named " + std::string(prefix) + "<i>");
    return Alphabet(std::move(gens));
}

RelationFamily family(FamilyId id, Errata mode) {
    RelationFamily f{id, family_key(id),
                     is_quantum_group_family(id) ? quantum_group_alphabet() : calculus_alphabet(), {}};
    for (const auto& text : family_text(id, mode)) f.relations.push_back(parse_element(text, f.alphabet));
    return f;
}

const char* to_string(Variant v) { return v == Variant::omega ? "omega" : "omega-inv"; }

std::array<FamilyId, 3> mixed_families(Variant v) {
    if (v == Variant::omega) return {FamilyId::omega_xxi, FamilyId::omega_dxi, FamilyId::omega_xd};
    return {FamilyId::omega_inv_xxi, FamilyId::omega_inv_dxi, FamilyId::omega_inv_xd};
}

Presentation calculus(Variant v, Errata mode) {
    Presentation p{v == Variant::omega ? "calc-omega" : "calc-omega-inv", calculus_alphabet(), {}};
    std::vector<FamilyId> ids = {FamilyId::xx, FamilyId::xixi, FamilyId::dd};
    for (FamilyId id : mixed_families(v)) ids.push_back(id);
    for (FamilyId id : ids)
        for (auto& r : family(id, mode).relations) p.relations.push_back(std::move(r));
    return p;
}

Presentation rtt_presentation(Errata mode) {
    return {"quantum-matrix", quantum_group_alphabet(), family(FamilyId::tt, mode).relations};
}

Presentation quantum_group(Errata mode) {
    Presentation p = rtt_presentation(mode);
    p.name = "quantum-group";
    for (auto& r : family(FamilyId::tdinv, mode).relations) p.relations.push_back(std::move(r));
    return p;
}

Presentation family_presentation(FamilyId id, Errata mode) {
    RelationFamily f = family(id, mode);
    Alphabet a = f.alphabet;
    if (id == FamilyId::xx) a = calculus_subalphabet("x");
    if (id == FamilyId::xixi) a = calculus_subalphabet("xi");
    if (id == FamilyId::dd) a = calculus_subalphabet("d");
    Presentation p{f.name, a, {}};
    for (const auto& r : f.relations) p.relations.push_back(a == f.alphabet ? r : embed(r, f.alphabet, a));
    return p;
}

// ---------------------------------------------------------------------------
// Generators from C

const char* to_string(Kind k) {
    switch (k) {
        case Kind::xxi: return "xxi";
        case Kind::dxi: return "dxi";
        case Kind::xd: return "xd";
        case Kind::xixi: return "xixi";
    }
    return "?";
}

std::vector<Element> generate_from_C(const CMatrix& c, Kind kind) {
    const Alphabet& a = calculus_alphabet();
    auto x = [&](int i) { return a.at("x" + std::to_string(i)); };
    auto xi = [&](int i) { return a.at("xi" + std::to_string(i)); };
    auto d = [&](int i) { return a.at("d" + std::to_string(i)); };
    const CMatrix k = kind == Kind::dxi ? c.inverse() : CMatrix();
    std::vector<Element> out;
    for (int p = 1; p <= 3; ++p)
        for (int l = 1; l <= 3; ++l) {
            Element e;
            switch (kind) {
                case Kind::xxi:
                    e.add_term({x(p), xi(l)}, Scalar(1));
                    for (int m = 1; m <= 3; ++m)
                        for (int n = 1; n <= 3; ++n) e.add_term({xi(m), x(n)}, -c.at(p, l, m, n));
                    break;
                case Kind::xixi:
                    e.add_term({xi(p), xi(l)}, Scalar(1));
                    for (int m = 1; m <= 3; ++m)
                        for (int n = 1; n <= 3; ++n) e.add_term({xi(m), xi(n)}, c.at(p, l, m, n));
                    break;
                case Kind::dxi:
                    // d_p xi^l = K^{lm}_{pn} xi^n d_m
                    e.add_term({d(p), xi(l)}, Scalar(1));
                    for (int m = 1; m <= 3; ++m)
                        for (int n = 1; n <= 3; ++n) e.add_term({xi(n), d(m)}, -k.at(l, m, p, n));
                    break;
                case Kind::xd:
                    // d_p x^l = delta + C^{lm}_{pn} x^n d_m
                    e.add_term({d(p), x(l)}, Scalar(1));
                    if (p == l) e.add_term({}, Scalar(-1));
                    for (int m = 1; m <= 3; ++m)
                        for (int n = 1; n <= 3; ++n) e.add_term({x(n), d(m)}, -c.at(l, m, p, n));
                    break;
            }
            out.push_back(std::move(e));
        }
    return out;
}

Letter t(int i, int j) { return quantum_group_alphabet().at("t" + std::to_string(i) + std::to_string(j)); }
Letter dinv() { return quantum_group_alphabet().at("Dinv"); }

std::vector<Element> rtt_generate(const CMatrix& r) {
    std::vector<Element> out;
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 3; ++i)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                    Element e;
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l) {
                            e.add_term({t(k, m), t(l, n)}, r.at(j, i, k, l));
                            e.add_term({t(j, l), t(i, k)}, -r.at(l, k, m, n));
                        }
                    out.push_back(std::move(e));
                }
    return out;
}

TMatrix t_matrix() {
    TMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Element::letter(t(i + 1, j + 1));
    return m;
}

Element quantum_determinant() { return parse_element(kDet, quantum_group_alphabet()); }

TMatrix cofactors() { return parse_matrix(kCof); }

TMatrix t_inverse() {
    TMatrix m = cofactors();
    const Element di = Element::letter(dinv());
    for (auto& row : m)
        for (auto& e : row) e = e * di;
    return m;
}

TMatrix transpose_inverse_numerators() { return parse_matrix(kTransposeInverse); }

TMatrix transpose_inverse() {
    TMatrix m = transpose_inverse_numerators();
    const Element di = Element::letter(dinv());
    for (auto& row : m)
        for (auto& e : row) e = di * e;
    return m;
}

Scalar dinv_factor(int i, int j) { return sc(kDinvFactor[i - 1][j - 1]); }
Scalar determinant_factor(int i, int j) { return dinv_factor(i, j).inverse(); }

}  // namespace wh3::catalog
