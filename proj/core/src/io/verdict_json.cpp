#include "preach/io/verdict_json.hpp"

#include "preach/error.hpp"

namespace preach::io {

using nlohmann::ordered_json;

namespace {

ordered_json pointToJson(const RatPoint& p) {
    ordered_json out = ordered_json::array();
    for (const auto& c : p.coords()) {
        out.push_back(c.str());
    }
    return out;
}

ordered_json budgetToJson(const reach::BudgetReport& b) {
    return {{"maxM", b.maxM},
            {"maxSteps", b.maxSteps},
            {"lastResolution", b.lastResolution},
            {"stepsSimulated", b.stepsSimulated},
            {"simulationStop", b.simulationStop},
            {"witnessesRejected", b.witnessesRejected}};
}

}  // namespace

ordered_json witnessToJson(const reach::Witness& w) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : w.cells) {
        cells.push_back(c.index);
    }
    return {{"m", w.m}, {"epsExp", w.epsExp}, {"cells", std::move(cells)}};
}

ordered_json verdictToJson(const reach::ReachVerdict& v) {
    ordered_json out;
    out["verdict"] = v.name();
    ordered_json traj = ordered_json::array();
    if (const auto* r = std::get_if<reach::Reached>(&v.result)) {
        for (const auto& p : r->trajectory) {
            traj.push_back(pointToJson(p));
        }
        out["steps"] = r->steps;
    }
    out["trajectory"] = std::move(traj);
    if (const auto* u = std::get_if<reach::RobustlyUnreachable>(&v.result)) {
        out["witness"] = witnessToJson(u->witness);
    } else {
        out["witness"] = nullptr;
    }
    out["budget"] = budgetToJson(v.budget);
    return out;
}

ordered_json deltaToJson(const reach::DeltaDecision& d) {
    if (const auto* t = std::get_if<reach::TrueAtEps>(&d)) {
        return {{"decision", "true-at-eps"}, {"epsExp", t->n}, {"eps", Rational::pow2(-t->n).str()}};
    }
    const auto& f = std::get<reach::FalseAtEps>(d);
    ordered_json out{{"decision", "false-at-eps"}, {"epsExp", f.m}, {"eps", Rational::pow2(-f.m).str()}};
    out["witness"] = f.witness ? witnessToJson(*f.witness) : ordered_json(nullptr);
    return out;
}

reach::Witness parseWitnessJson(const nlohmann::json& doc) {
    const nlohmann::json& w = doc.contains("witness") ? doc.at("witness") : doc;
    try {
        reach::Witness out;
        out.m = w.at("m").get<int>();
        out.epsExp = w.at("epsExp").get<int>();
        for (const auto& c : w.at("cells")) {
            out.cells.push_back({c.get<std::vector<std::int64_t>>()});
        }
        if (out.m < 0) {
            throw ParseError("witness.m must be nonnegative");
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness: ") + e.what());
    }
}

}  // namespace preach::io
