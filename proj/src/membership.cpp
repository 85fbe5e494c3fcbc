#include "wh3/membership.hpp"

#include <bit>

namespace wh3 {

const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "modular"; }

WordCoder::WordCoder(std::size_t alphabet_size) {
    std::size_t n = alphabet_size < 2 ? 2 : alphabet_size;
    bits_ = static_cast<unsigned>(std::bit_width(n - 1));
    max_len_ = 44 / bits_;
    if (max_len_ > 15) max_len_ = 15;
}

std::int64_t WordCoder::encode(const Word& w) const {
    if (w.size() > max_len_) throw DegreeBoundExceeded("word too long to encode");
    const int weight = word_weight(w);
    if (weight < -7 * 128 || weight >= 7 * 128) throw DegreeBoundExceeded("word weight out of range");
    std::uint64_t digits = 0;
    for (Letter l : w) digits = (digits << bits_) | letter_index(l);
    std::uint64_t code = (static_cast<std::uint64_t>(w.size()) << 59) |
                         (static_cast<std::uint64_t>(weight + 7 * 128) << 48) | (digits << (44 - bits_ * w.size()));
    return static_cast<std::int64_t>(code);
}

// ---------------------------------------------------------------------------

struct IdealOracle::State {
    std::optional<IdealSpan<Scalar>> exact;
    std::optional<IdealSpan<ModP>> modular;
    std::optional<ModularPoint> point;
};

namespace {

ModP eval_or_throw(const ModularPoint& pt, const Scalar& c) {
    auto v = pt.eval(c);
    if (!v) throw VanishingDenominator("denominator " + c.den().to_string() + " vanishes at the modular point");
    return *v;
}

}  // namespace

IdealOracle::IdealOracle(Presentation p, std::size_t degree, Mode mode, ModularSettings ms)
    : pres_(std::move(p)), degree_(degree), mode_(mode), ms_(ms) {
    rebuild();
}

IdealOracle::~IdealOracle() = default;
IdealOracle::IdealOracle(IdealOracle&&) noexcept = default;
IdealOracle& IdealOracle::operator=(IdealOracle&&) noexcept = default;

void IdealOracle::rebuild() {
    st_ = std::make_unique<State>();
    if (mode_ == Mode::exact) {
        st_->exact.emplace(pres_, degree_, [](const Scalar& c) { return c; });
        return;
    }
    while (true) {
        if (attempt_ >= ms_.max_attempts)
            throw VanishingDenominator("no usable modular point after " + std::to_string(ms_.max_attempts) +
                                       " attempts");
        st_->point = ModularPoint::sample(ms_.prime, ms_.seed, attempt_);
        const ModularPoint pt = *st_->point;
        try {
            st_->modular.emplace(pres_, degree_, [pt](const Scalar& c) { return eval_or_throw(pt, c); });
            return;
        } catch (const VanishingDenominator&) {
            ++attempt_;
        }
    }
}

MembershipReport IdealOracle::test(const Element& e) {
    MembershipReport rep;
    rep.mode = mode_;
    rep.degree = degree_;
    if (e.degree() > degree_)
        throw DegreeBoundExceeded("element degree " + std::to_string(e.degree()) + " exceeds bound " +
                                  std::to_string(degree_));
    if (mode_ == Mode::exact) {
        auto& sp = *st_->exact;
        std::vector<std::pair<Word, Scalar>> terms(e.terms().begin(), e.terms().end());
        auto red = sp.reduce(sp.row(terms));
        rep.member = red.empty();
        for (const auto& [c, v] : red) rep.remainder.add_term(sp.word(c), v);
        if (!red.empty()) rep.witness = sp.word(red.front().first);
        rep.rows = sp.rows();
        rep.rank = sp.rank();
        rep.columns = sp.columns();
        return rep;
    }
    while (true) {
        try {
            auto& sp = *st_->modular;
            const ModularPoint& pt = *st_->point;
            std::vector<std::pair<Word, ModP>> terms;
            for (const auto& [w, c] : e.terms()) terms.emplace_back(w, eval_or_throw(pt, c));
            auto red = sp.reduce(sp.row(terms));
            rep.member = red.empty();
            rep.probabilistic = rep.member;
            if (!red.empty()) rep.witness = sp.word(red.front().first);
            rep.rows = sp.rows();
            rep.rank = sp.rank();
            rep.columns = sp.columns();
            rep.prime = ms_.prime;
            rep.seed = ms_.seed;
            rep.attempt = attempt_;
            return rep;
        } catch (const VanishingDenominator&) {
            ++attempt_;
            rebuild();
        }
    }
}

MembershipReport ideal_membership(const Element& e, const Presentation& p, std::size_t degree, Mode mode,
                                  const ModularSettings& ms) {
    IdealOracle oracle(p, degree, mode, ms);
    return oracle.test(e);
}

IdealSpan<Scalar> exact_span(const Presentation& p, std::size_t degree) {
    return IdealSpan<Scalar>(p, degree, [](const Scalar& c) { return c; });
}

TensorReport tensor_membership(const TensorElement& e, IdealSpan<Scalar>& right, IdealOracle& left) {
    TensorReport rep;
    rep.mode = left.mode();
    std::map<Word, Element, DegLexLess> acc;
    for (const auto& [w, coeff] : e) {
        if (coeff.is_zero()) continue;
        auto red = right.reduce(right.row({{w, Scalar(1)}}));
        for (const auto& [code, v] : red) acc[right.word(code)] += coeff.scaled(v);
    }
    for (const auto& [w, coeff] : acc) {
        if (coeff.is_zero()) continue;
        ++rep.components_checked;
        auto r = left.test(coeff);
        if (r.mode == Mode::modular) {
            rep.prime = r.prime;
            rep.seed = r.seed;
            rep.probabilistic = true;
        }
        if (!r.member) {
            rep.member = false;
            rep.probabilistic = false;
            rep.witness = std::make_pair(w, coeff);
            return rep;
        }
    }
    return rep;
}

}  // namespace wh3
