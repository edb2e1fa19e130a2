#include "preach/reach/witness.hpp"

#include <algorithm>
#include <unordered_set>

#include "preach/error.hpp"
#include "preach/reach/search.hpp"

namespace preach::reach {

RatBox Target::box() const {
    return radiusExp ? RatBox::ball(center, Rational::pow2(-*radiusExp)) : RatBox::point(center);
}

Witness extractWitnessFrom(const abstraction::AbstractionGraph& g, std::span<const abstraction::FlatCell> sources) {
    Witness w{g.grid().resolution(), g.grid().resolution(), {}};
    for (auto f : graphReachBFS(g, sources)) {
        w.cells.push_back(g.grid().unflatten(f));
    }
    return w;
}

Witness extractWitness(const abstraction::AbstractionGraph& g, const RatPoint& x) {
    const auto sources = g.grid().cellsContaining(x);
    return extractWitnessFrom(g, sources);
}

WitnessCheck checkWitnessDetailed(const pam::PamSystem& sys, const Witness& w, const RatPoint& x, const Target& y) {
    requireSameDimension(x.dimension(), sys.dimension(), "source point");
    requireSameDimension(y.center.dimension(), sys.dimension(), "target point");
    const abstraction::AbstractionGrid grid(sys.domain(), w.m);

    std::vector<abstraction::FlatCell> order;
    for (const auto& c : w.cells) {
        order.push_back(grid.flatten(c));
    }
    std::sort(order.begin(), order.end());
    const std::unordered_set<abstraction::FlatCell> members(order.begin(), order.end());

    const bool hasSource = std::any_of(order.begin(), order.end(), [&](auto f) {
        return boxContains(grid.cellBox(f), x);
    });
    if (!hasSource) {
        return {false, 1, "source " + x.str() + " is in no member cell"};
    }

    const Rational eps = Rational::pow2(-w.epsExp);
    for (auto f : order) {
        const RatBox cell = grid.cellBox(f);
        for (std::size_t i = 0; i < sys.pieces().size(); ++i) {
            const auto& piece = sys.pieces()[i];
            if (!boxIntersects(piece.region, cell)) {
                continue;
            }
            const RatBox image = pam::imageBox(piece, boxIntersection(piece.region, cell)).inflated(eps);
            for (auto g : grid.cellsIntersecting(image)) {
                if (!members.contains(g)) {
                    return {false, 2,
                            "piece " + std::to_string(i) + " sends cell " + cell.str() + " into non-member cell " +
                                grid.cellBox(g).str()};
                }
            }
        }
    }

    const RatBox target = y.box();
    for (auto f : order) {
        if (boxIntersects(grid.cellBox(f), target)) {
            return {false, 3, "member cell " + grid.cellBox(f).str() + " meets the target " + target.str()};
        }
    }
    return {true, 0, {}};
}

bool checkWitness(const pam::PamSystem& sys, const Witness& w, const RatPoint& x, const RatPoint& y,
                  std::optional<int> p) {
    return checkWitnessDetailed(sys, w, x, Target{y, p}).ok;
}

}  // namespace preach::reach
