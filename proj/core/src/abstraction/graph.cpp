#include "preach/abstraction/graph.hpp"

#include <algorithm>

#include "preach/error.hpp"

namespace preach::abstraction {

Rational EdgeRule::inflationFactor() const {
    return lipschitz + Rational(kind == EdgeRuleKind::Exact ? 1 : 2);
}

AbstractionGraph::AbstractionGraph(const pam::PamSystem& sys, int m, EdgeRule rule)
    : grid_(sys.domain(), m), rule_(std::move(rule)), sys_(&sys) {
    if (rule_.lipschitz < sys.lipschitz()) {
        throw DomainError("edge rule Lipschitz bound below the system's");
    }
}

AbstractionGraph::AbstractionGraph(const pam::PamSystem& sys, int m)
    : AbstractionGraph(sys, m, EdgeRule::exact(sys.lipschitz())) {}

AbstractionGraph::AbstractionGraph(const pam::MapEvaluator& ev, int m)
    : grid_(ev.domain(), m), rule_(EdgeRule::approx(ev.lipschitz())), ev_(&ev) {}

std::vector<CellImage> AbstractionGraph::images(FlatCell v) const {
    const RatBox cell = grid_.cellBox(v);
    const Rational radius = rule_.inflationFactor() * grid_.side();
    std::vector<CellImage> out;

    if (ev_ != nullptr) {
        RatPoint c = cell.center();
        try {
            RatPoint fx = ev_->approximate(c, grid_.resolution());
            RatBox reach = RatBox::ball(fx, radius);
            out.push_back({std::move(c), std::nullopt, std::move(fx), std::move(reach)});
        } catch (const UndefinedError&) {
        }
        return out;
    }

    if (rule_.kind == EdgeRuleKind::Approx) {
        RatPoint c = cell.center();
        const auto piece = sys_->selectPiece(c);
        if (piece) {
            RatPoint fx = sys_->pieces()[*piece].apply(c);
            RatBox reach = RatBox::ball(fx, radius);
            out.push_back({std::move(c), piece, std::move(fx), std::move(reach)});
        }
        return out;
    }

    const auto& pieces = sys_->pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!boxIntersects(pieces[i].region, cell)) {
            continue;
        }
        RatPoint c = boxIntersection(pieces[i].region, cell).center();
        RatPoint fx = pieces[i].apply(c);
        RatBox reach = RatBox::ball(fx, radius);
        out.push_back({std::move(c), i, std::move(fx), std::move(reach)});
    }
    return out;
}

std::vector<FlatCell> AbstractionGraph::successors(FlatCell v) const {
    std::vector<FlatCell> out;
    for (const auto& img : images(v)) {
        auto cells = grid_.cellsIntersecting(img.reach);
        out.insert(out.end(), cells.begin(), cells.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool AbstractionGraph::hasEdge(FlatCell u, FlatCell v) const {
    const RatBox target = grid_.cellBox(v);
    for (const auto& img : images(u)) {
        if (boxIntersects(img.reach, target)) {
            return true;
        }
    }
    return false;
}

std::vector<CellId> successors(const AbstractionGraph& g, const CellId& v) {
    std::vector<CellId> out;
    for (FlatCell f : g.successors(g.grid().flatten(v))) {
        out.push_back(g.grid().unflatten(f));
    }
    return out;
}

int resolutionForEps(const Rational& lipschitz, int n, EdgeRuleKind kind) {
    if (lipschitz.sign() < 0 || n < 0) {
        throw DomainError("resolutionForEps needs L >= 0 and n >= 0");
    }
    const Rational bound = Rational(2) * lipschitz + Rational(kind == EdgeRuleKind::Exact ? 2 : 4);
    int j = 0;
    while (Rational::pow2(j) <= bound) {
        ++j;
    }
    return n + j;
}

}  // namespace preach::abstraction
