#include "wh3/modp.hpp"

#include <random>

namespace wh3 {

ModP ModP::pow(std::uint64_t e) const {
    ModP r(1, p_), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

ModP ModP::inverse() const {
    if (v_ == 0) throw ScalarError("inverse of zero in F_p");
    return pow(p_ - 2);
}

ModularPoint ModularPoint::sample(std::uint64_t prime, std::uint64_t seed, unsigned attempt) {
    ModularPoint pt;
    pt.prime = prime;
    pt.seed = seed;
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint64_t> dist(2, prime - 1);
    for (unsigned a = 0; a <= attempt; ++a)
        for (auto& v : pt.values) v = dist(gen);
    return pt;
}

ModP ModularPoint::to_modp(const mpq_class& c) const {
    mpz_class p(std::to_string(prime));
    mpz_class n = c.get_num(), d = c.get_den();
    mpz_class nr, dr;
    mpz_fdiv_r(nr.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(dr.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (dr == 0) throw ScalarError("rational denominator divisible by the prime");
    return ModP(mpz_get_ui(nr.get_mpz_t()), prime) / ModP(mpz_get_ui(dr.get_mpz_t()), prime);
}

ModP ModularPoint::eval(const ParamPoly& poly) const {
    ModP acc(0, prime);
    for (const auto& [m, c] : poly.terms()) {
        ModP t = to_modp(c);
        for (int i = 0; i < kNumParams; ++i) {
            const int e = m.exp[i];
            if (e == 0) continue;
            ModP x(values[i], prime);
            t *= e > 0 ? x.pow(static_cast<std::uint64_t>(e)) : x.inverse().pow(static_cast<std::uint64_t>(-e));
        }
        acc += t;
    }
    return acc;
}

std::optional<ModP> ModularPoint::eval(const Scalar& a) const {
    ModP d = eval(a.den());
    if (d.is_zero()) return std::nullopt;
    return eval(a.num()) / d;
}

}  // namespace wh3
