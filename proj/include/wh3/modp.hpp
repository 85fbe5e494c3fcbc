#pragma once

#include "wh3/scalar.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace wh3 {

/// Element of Z/pZ for a prime p < 2^63. The modulus lives in the value so
/// several fields can coexist; arithmetic between different moduli is a bug.
class ModP {
public:
    ModP() = default;
    ModP(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend ModP operator+(ModP a, ModP b) {
        std::uint64_t r = a.v_ + b.v_;
        if (r >= a.p_) r -= a.p_;
        return {r, a.p_, raw_tag{}};
    }
    friend ModP operator-(ModP a, ModP b) {
        return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, raw_tag{}};
    }
    ModP operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}}; }
    friend ModP operator*(ModP a, ModP b) {
        auto r = static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_;
        return {static_cast<std::uint64_t>(r), a.p_, raw_tag{}};
    }
    ModP pow(std::uint64_t e) const;
    ModP inverse() const;
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

private:
    struct raw_tag {};
    ModP(std::uint64_t v, std::uint64_t p, raw_tag) : v_(v), p_(p) {}
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

/// A point (q, u, s) of F_p^3 at which Scalars are evaluated.
struct ModularPoint {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, kNumParams> values{};

    /// Draws q, u, s from a generator seeded with `seed`; `attempt` advances
    /// the stream for resampling after a vanishing denominator.
    static ModularPoint sample(std::uint64_t prime, std::uint64_t seed, unsigned attempt = 0);

    ModP to_modp(const mpq_class& c) const;  // throws ScalarError if p | den
    ModP eval(const ParamPoly& p) const;
    /// Image of a Scalar, or nullopt when its denominator vanishes here.
    std::optional<ModP> eval(const Scalar& a) const;
};

}  // namespace wh3
