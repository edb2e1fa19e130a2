#pragma once

#include <optional>
#include <vector>

#include "preach/abstraction/grid.hpp"
#include "preach/pam/evaluator.hpp"
#include "preach/pam/pam.hpp"

namespace preach::abstraction {

enum class EdgeRuleKind {
    /// Exact image of a sample point, inflated by (L+1) 2^-m.
    Exact,
    /// 2^-m approximation of the image of the cell center, inflated by (L+2) 2^-m.
    Approx,
};

struct EdgeRule {
    EdgeRuleKind kind = EdgeRuleKind::Exact;
    Rational lipschitz;

    static EdgeRule exact(Rational l) { return {EdgeRuleKind::Exact, std::move(l)}; }
    static EdgeRule approx(Rational l) { return {EdgeRuleKind::Approx, std::move(l)}; }

    /// L+1 or L+2.
    Rational inflationFactor() const;
};

/// One sampled image of a cell: the sample point, the piece used (PAM
/// backends), and the inflated box whose meeting cells are successors.
struct CellImage {
    RatPoint sample;
    std::optional<std::size_t> piece;
    RatPoint image;
    RatBox reach;
};

/// Implicit graph G_m on the cells of a grid. Nothing is materialized:
/// successors are recomputed from the map on each query.
///
/// Exact rule on a PAM: for every piece whose region meets the cell V, the
/// sample point is the center of V intersected with the region, so a cell
/// inside one region uses its own center. A cell meeting several regions
/// gets the union of their inflated images. A cell meeting no region is stuck.
class AbstractionGraph {
public:
    AbstractionGraph(const pam::PamSystem& sys, int m, EdgeRule rule);
    AbstractionGraph(const pam::PamSystem& sys, int m);
    /// Approx rule with the evaluator's declared Lipschitz bound.
    AbstractionGraph(const pam::MapEvaluator& ev, int m);
    // The graph keeps a pointer to the system; temporaries would dangle.
    AbstractionGraph(pam::PamSystem&&, int, EdgeRule) = delete;
    AbstractionGraph(pam::PamSystem&&, int) = delete;

    const AbstractionGrid& grid() const { return grid_; }
    const EdgeRule& rule() const { return rule_; }
    const pam::PamSystem* system() const { return sys_; }

    std::vector<CellImage> images(FlatCell v) const;
    /// Sorted, without duplicates. Empty for stuck cells.
    std::vector<FlatCell> successors(FlatCell v) const;
    bool hasEdge(FlatCell u, FlatCell v) const;
    bool isStuck(FlatCell v) const { return images(v).empty(); }

private:
    AbstractionGrid grid_;
    EdgeRule rule_;
    const pam::PamSystem* sys_ = nullptr;
    const pam::MapEvaluator* ev_ = nullptr;
};

std::vector<CellId> successors(const AbstractionGraph& g, const CellId& v);

/// Smallest m with 2^-m < 2^-n / (2L+2) (Exact) or 2^-n / (2L+4) (Approx).
int resolutionForEps(const Rational& lipschitz, int n, EdgeRuleKind kind = EdgeRuleKind::Exact);

}  // namespace preach::abstraction
