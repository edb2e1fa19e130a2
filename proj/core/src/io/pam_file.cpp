#include "preach/io/pam_file.hpp"

#include <fstream>
#include <sstream>

#include "preach/error.hpp"

namespace preach::io {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing field \"" + key + "\"");
    }
    return obj.at(key);
}

const json& array(const json& v, std::size_t size, const std::string& where) {
    if (!v.is_array() || v.size() != size) {
        throw ParseError(where + ": expected an array of " + std::to_string(size) + " entries");
    }
    return v;
}

RatBox parseBox(const json& v, std::size_t d, const std::string& where) {
    array(v, d, where);
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    for (std::size_t i = 0; i < d; ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const json& side = array(v[i], 2, at);
        lo.push_back(parseRationalField(side[0], at + "[0]"));
        hi.push_back(parseRationalField(side[1], at + "[1]"));
        if (lo.back() > hi.back()) {
            throw ParseError(at + ": lower bound above upper bound");
        }
    }
    return RatBox(RatPoint(std::move(lo)), RatPoint(std::move(hi)));
}

nlohmann::ordered_json boxToJson(const RatBox& b) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        out.push_back({b.lo()[i].str(), b.hi()[i].str()});
    }
    return out;
}

}  // namespace

Rational parseRationalField(const json& v, const std::string& where) {
    try {
        if (v.is_string()) {
            return Rational::parse(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational(v.get<long>());
        }
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational string \"p/q\"");
}

pam::PamSystem parsePamJson(const json& doc) {
    const json& dim = field(doc, "dimension", "pam");
    if (!dim.is_number_integer() || dim.get<long>() < 1) {
        throw ParseError("pam.dimension: expected a positive integer");
    }
    const auto d = dim.get<std::size_t>();
    RatBox domain = parseBox(field(doc, "domain", "pam"), d, "pam.domain");

    const json& pieces = field(doc, "pieces", "pam");
    if (!pieces.is_array() || pieces.empty()) {
        throw ParseError("pam.pieces: expected a nonempty array");
    }
    std::vector<pam::AffinePiece> out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const std::string where = "pam.pieces[" + std::to_string(k) + "]";
        const json& p = pieces[k];
        RatBox region = parseBox(field(p, "region", where), d, where + ".region");
        const json& a = array(field(p, "A", where), d, where + ".A");
        std::vector<std::vector<Rational>> rows;
        for (std::size_t r = 0; r < d; ++r) {
            const std::string at = where + ".A[" + std::to_string(r) + "]";
            array(a[r], d, at);
            std::vector<Rational> row;
            for (std::size_t c = 0; c < d; ++c) {
                row.push_back(parseRationalField(a[r][c], at + "[" + std::to_string(c) + "]"));
            }
            rows.push_back(std::move(row));
        }
        const json& b = array(field(p, "b", where), d, where + ".b");
        std::vector<Rational> offset;
        for (std::size_t c = 0; c < d; ++c) {
            offset.push_back(parseRationalField(b[c], where + ".b[" + std::to_string(c) + "]"));
        }
        out.push_back({std::move(region), pam::Matrix(std::move(rows)), RatPoint(std::move(offset))});
    }
    try {
        return pam::PamSystem(std::move(domain), std::move(out));
    } catch (const Error& e) {
        throw ParseError(std::string("pam: ") + e.what());
    }
}

pam::PamSystem parsePamText(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("pam: invalid JSON: ") + e.what());
    }
    return parsePamJson(doc);
}

pam::PamSystem parsePamFile(const std::filesystem::path& path) { return parsePamText(readTextFile(path)); }

nlohmann::ordered_json pamToJson(const pam::PamSystem& sys) {
    nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
    for (const auto& p : sys.pieces()) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& row : p.matrix.rows()) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& v : row) {
                r.push_back(v.str());
            }
            a.push_back(std::move(r));
        }
        nlohmann::ordered_json b = nlohmann::ordered_json::array();
        for (const auto& v : p.offset.coords()) {
            b.push_back(v.str());
        }
        pieces.push_back({{"region", boxToJson(p.region)}, {"A", std::move(a)}, {"b", std::move(b)}});
    }
    return {{"dimension", sys.dimension()}, {"domain", boxToJson(sys.domain())}, {"pieces", std::move(pieces)}};
}

std::string serializePam(const pam::PamSystem& sys) { return pamToJson(sys).dump(2) + "\n"; }

std::string readTextFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace preach::io
