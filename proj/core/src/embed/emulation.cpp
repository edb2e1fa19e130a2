#include "preach/embed/emulation.hpp"

namespace preach::embed {

namespace {

pam::AffinePiece stepPiece(const RatBox& region, long nextIndex, const tm::Transition& t, long dl,
                           long dr, const EncodingScheme& scheme) {
    const Rational k(scheme.base());
    const Rational db(scheme.digit(t.write));
    Rational al(1), bl(0), ar(1), br(0);
    switch (t.move) {
        case tm::Move::Stay:
            br = (db - Rational(dr)) / k;
            break;
        case tm::Move::Right:
            al = Rational(1) / k;
            bl = db / k;
            ar = k;
            br = Rational(-dr);
            break;
        case tm::Move::Left:
            al = k;
            bl = Rational(-dl);
            ar = Rational(1) / k;
            br = Rational(dl) / k + (db - Rational(dr)) / (k * k);
            break;
    }
    return {region, pam::Matrix::diagonal({Rational(0), al, ar}), RatPoint{Rational(nextIndex), bl, br}};
}

}  // namespace

pam::PamSystem buildPam(const tm::TuringMachine& m, const EncodingScheme& scheme) {
    const Rational k(scheme.base());
    const Rational quarter(1, 4);
    const long digits = static_cast<long>(scheme.symbolCount());

    std::vector<pam::AffinePiece> pieces;
    for (tm::StateId q = 0; q < m.stateCount(); ++q) {
        const Rational qi(static_cast<long>(q) + 1);
        for (long dl = 1; dl <= digits; ++dl) {
            for (long dr = 1; dr <= digits; ++dr) {
                const RatBox region(
                    RatPoint{qi - quarter, Rational(dl) / k, Rational(dr) / k},
                    RatPoint{qi + quarter, Rational(dl + 1) / k, Rational(dr + 1) / k});
                const auto& t = m.transition(q, *scheme.symbolOfDigit(dr));
                if (t) {
                    pieces.push_back(stepPiece(region, static_cast<long>(t->next) + 1, *t, dl, dr, scheme));
                } else if (m.isHalting(q)) {
                    pieces.push_back({region, pam::Matrix::identity(3), RatPoint{Rational(0), Rational(0), Rational(0)}});
                }
            }
        }
    }
    const RatBox domain(RatPoint{Rational(1, 2), Rational(0), Rational(0)},
                        RatPoint{Rational(static_cast<long>(m.stateCount())) + Rational(1, 2), Rational(1), Rational(1)});
    return pam::PamSystem(domain, std::move(pieces));
}

}  // namespace preach::embed
