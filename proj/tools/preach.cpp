// preach: perturbed reachability for piecewise affine maps and Turing machines.
//
// Exit codes: 0 a result was produced, 1 bad input, 2 internal invariant failure.
// PREACH_MAX_M and PREACH_MAX_STEPS override the default search budgets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "preach/embed/emulation.hpp"
#include "preach/error.hpp"
#include "preach/io/pam_file.hpp"
#include "preach/io/pgm.hpp"
#include "preach/io/tm_file.hpp"
#include "preach/io/verdict_json.hpp"
#include "preach/reach/decide.hpp"
#include "preach/reach/plot.hpp"
#include "preach/tm/length.hpp"
#include "preach/tm/perturbed.hpp"

namespace {

using nlohmann::ordered_json;
using namespace preach;

constexpr int kDefaultMaxM = 12;
constexpr std::size_t kDefaultMaxSteps = 4096;

long envOr(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (*end != '\0' || parsed < 0) {
        throw Error(std::string(name) + " must be a nonnegative integer");
    }
    return parsed;
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error("cannot write " + outPath);
    }
}

std::string dumpJson(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json configToJson(const tm::TuringMachine& m, const tm::Configuration& c) {
    return {{"state", m.stateName(c.state)}, {"left", m.render(c.left)}, {"right", m.render(c.right)}};
}

std::string outcomeName(tm::Outcome o) {
    switch (o) {
        case tm::Outcome::Accept:
            return "accept";
        case tm::Outcome::Reject:
            return "reject";
        case tm::Outcome::Running:
            return "running";
        case tm::Outcome::Stuck:
            return "stuck";
    }
    return "?";
}

std::optional<int> optionalExp(const CLI::Option* opt, int value) {
    return opt->count() > 0 ? std::optional<int>(value) : std::nullopt;
}

struct Common {
    std::string pamPath;
    std::string tmPath;
    std::string x;
    std::string y;
    int p = 0;
    std::string word;
    std::string out;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbed reachability for piecewise affine maps and perturbed Turing machines"};
    app.require_subcommand(1);

    Common o;
    int maxM = -1;
    long long maxSteps = -1;
    int n = 0;
    std::string witnessPath;
    std::string axes = "0";
    std::string mode;
    std::string bound;
    long long steps = 1000;
    int base = 0;
    std::string sidecar;

    auto addQuery = [&](CLI::App* sub) {
        sub->add_option("--pam", o.pamPath, "PAM file (JSON)")->required();
        sub->add_option("--x", o.x, "source point, comma-separated rationals")->required();
        sub->add_option("--y", o.y, "target center, comma-separated rationals")->required();
        return sub->add_option("--p", o.p, "target radius 2^-p; omit for a point target")->check(CLI::NonNegativeNumber);
    };

    auto* reachCmd = app.add_subcommand("reach", "decide perturbed reachability with a certificate");
    auto* reachP = addQuery(reachCmd);
    reachCmd->add_option("--max-m", maxM, "finest grid resolution (default 12, env PREACH_MAX_M)");
    reachCmd->add_option("--max-steps", maxSteps, "simulation budget (default 4096, env PREACH_MAX_STEPS)");
    reachCmd->add_option("-o,--out", o.out, "write JSON here instead of stdout");

    auto* deltaCmd = app.add_subcommand("delta-decide", "two-sided decision at perturbation 2^-n");
    auto* deltaP = addQuery(deltaCmd);
    deltaCmd->add_option("--n", n, "perturbation exponent")->required()->check(CLI::NonNegativeNumber);
    deltaCmd->add_option("-o,--out", o.out, "write JSON here instead of stdout");

    auto* checkCmd = app.add_subcommand("witness-check", "verify a non-reachability witness");
    auto* checkP = addQuery(checkCmd);
    checkCmd->add_option("--witness", witnessPath, "witness or verdict JSON")->required();

    auto* plotCmd = app.add_subcommand("plot", "rasterize the reach set of a point as ASCII PGM");
    plotCmd->add_option("--pam", o.pamPath, "PAM file (JSON)")->required();
    plotCmd->add_option("--x", o.x, "source point")->required();
    plotCmd->add_option("--n", n, "pixel size 2^-n")->required()->check(CLI::NonNegativeNumber);
    plotCmd->add_option("--axes", axes, "one axis or two comma-separated axes (default 0)");
    plotCmd->add_option("-o,--out", o.out, "write PGM here instead of stdout");

    auto addMachine = [&](CLI::App* sub) {
        sub->add_option("--tm", o.tmPath, "machine file")->required();
        sub->add_option("--word", o.word, "input word (default empty)");
    };

    auto* runCmd = app.add_subcommand("tm-run", "run a machine exactly");
    addMachine(runCmd);
    runCmd->add_option("--steps", steps, "step budget (default 1000)")->check(CLI::NonNegativeNumber);

    auto* pertCmd = app.add_subcommand("tm-perturbed", "membership in the space- or time-perturbed language");
    addMachine(pertCmd);
    pertCmd->add_option("--mode", mode, "space or time")->required()->check(CLI::IsMember({"space", "time"}));
    pertCmd->add_option("--n", n, "perturbation parameter")->required()->check(CLI::NonNegativeNumber);

    auto* lengthCmd = app.add_subcommand("tm-length", "acceptance within a trajectory length");
    addMachine(lengthCmd);
    lengthCmd->add_option("--bound", bound, "length bound, a rational")->required();
    lengthCmd->add_option("--steps", steps, "step budget (default 1000)")->check(CLI::NonNegativeNumber);

    auto* embedCmd = app.add_subcommand("embed", "compile a machine into a PAM over Q^3");
    embedCmd->add_option("--tm", o.tmPath, "machine file")->required();
    embedCmd->add_option("-o,--out", o.out, "PAM output file")->required();
    embedCmd->add_option("--sidecar", sidecar, "state map output (default <out>.map.json)");
    embedCmd->add_option("--base", base, "encoding base (default |Sigma|+3)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (reachCmd->parsed()) {
            const auto sys = io::parsePamFile(o.pamPath);
            const int mm = maxM >= 0 ? maxM : static_cast<int>(envOr("PREACH_MAX_M", kDefaultMaxM));
            const auto ms = maxSteps >= 0 ? static_cast<std::size_t>(maxSteps)
                                          : static_cast<std::size_t>(envOr("PREACH_MAX_STEPS", kDefaultMaxSteps));
            const reach::Target target{RatPoint::parse(o.y), optionalExp(reachP, o.p)};
            const auto verdict = reach::decideOmegaReach(sys, RatPoint::parse(o.x), target, mm, ms);
            emit(dumpJson(io::verdictToJson(verdict)), o.out);
        } else if (deltaCmd->parsed()) {
            const auto sys = io::parsePamFile(o.pamPath);
            const reach::Target target{RatPoint::parse(o.y), optionalExp(deltaP, o.p)};
            const auto d = reach::decidePerturbedInterval(sys, RatPoint::parse(o.x), target, n);
            emit(dumpJson(io::deltaToJson(d)), o.out);
        } else if (checkCmd->parsed()) {
            const auto sys = io::parsePamFile(o.pamPath);
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(io::readTextFile(witnessPath));
            } catch (const nlohmann::json::parse_error& e) {
                throw ParseError(std::string("witness: invalid JSON: ") + e.what());
            }
            const reach::Target target{RatPoint::parse(o.y), optionalExp(checkP, o.p)};
            const auto r = reach::checkWitnessDetailed(sys, io::parseWitnessJson(doc), RatPoint::parse(o.x), target);
            ordered_json j{{"valid", r.ok}, {"failedCondition", r.failedCondition}, {"reason", r.reason}};
            emit(dumpJson(j), "");
        } else if (plotCmd->parsed()) {
            const auto sys = io::parsePamFile(o.pamPath);
            std::optional<std::size_t> yAxis;
            std::size_t xAxis = 0;
            const auto comma = axes.find(',');
            try {
                xAxis = std::stoul(axes.substr(0, comma));
                if (comma != std::string::npos) {
                    yAxis = std::stoul(axes.substr(comma + 1));
                }
            } catch (const std::logic_error&) {
                throw ParseError("--axes expects 'i' or 'i,j'");
            }
            const auto px = reach::plotPixels(sys, RatPoint::parse(o.x), n, xAxis, yAxis);
            emit(io::renderPgm(px), o.out);
        } else if (runCmd->parsed()) {
            const auto m = io::parseTmFile(o.tmPath);
            const auto r = tm::tmRun(m, m.word(o.word), static_cast<std::size_t>(steps));
            ordered_json j{{"outcome", outcomeName(r.outcome)}, {"steps", r.steps}, {"config", configToJson(m, r.last)}};
            emit(dumpJson(j), "");
        } else if (pertCmd->parsed()) {
            const auto m = io::parseTmFile(o.tmPath);
            const auto w = m.word(o.word);
            const auto nn = static_cast<std::size_t>(n);
            const bool accepted = mode == "space" ? tm::acceptsSpacePerturbed(m, w, nn) : tm::acceptsTimePerturbed(m, w, nn);
            ordered_json j{{"mode", mode}, {"n", n}, {"word", o.word}, {"accepted", accepted}};
            emit(dumpJson(j), "");
        } else if (lengthCmd->parsed()) {
            const auto m = io::parseTmFile(o.tmPath);
            const auto w = m.word(o.word);
            const auto ell = Rational::parse(bound);
            const auto cap = static_cast<std::size_t>(steps);
            ordered_json j{{"word", o.word},
                           {"bound", ell.str()},
                           {"length", tm::trajectoryLength(m, w, cap).str()},
                           {"acceptedWithinBound", tm::acceptsWithinLength(m, w, ell, cap)}};
            emit(dumpJson(j), "");
        } else if (embedCmd->parsed()) {
            const auto m = io::parseTmFile(o.tmPath);
            const auto scheme = embed::EncodingScheme::forMachine(m, base);
            const auto sys = embed::buildPam(m, scheme);
            emit(io::serializePam(sys), o.out);
            ordered_json states = ordered_json::object();
            for (tm::StateId q = 0; q < m.stateCount(); ++q) {
                states[m.stateName(q)] = q + 1;
            }
            ordered_json digits = ordered_json::object();
            for (std::size_t s = 0; s < m.symbolCount(); ++s) {
                digits[std::string(1, m.symbolChar(static_cast<tm::Symbol>(s)))] = scheme.digit(static_cast<tm::Symbol>(s));
            }
            ordered_json map{{"base", scheme.base()}, {"states", states}, {"digits", digits}, {"pieces", sys.pieces().size()}};
            emit(dumpJson(map), sidecar.empty() ? o.out + ".map.json" : sidecar);
        }
    } catch (const InvariantError& e) {
        std::cerr << "preach: internal error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "preach: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
