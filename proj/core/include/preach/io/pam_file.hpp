#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "preach/pam/pam.hpp"

namespace preach::io {

/// {"dimension": d, "domain": [["lo","hi"], ...],
///  "pieces": [{"region": [["lo","hi"], ...], "A": [[...], ...], "b": [...]}, ...]}
/// Rationals are "p/q" strings (plain JSON integers are accepted too).
/// Piece order is preserved. Throws ParseError naming the offending field.
pam::PamSystem parsePamJson(const nlohmann::json& doc);
pam::PamSystem parsePamText(const std::string& text);
pam::PamSystem parsePamFile(const std::filesystem::path& path);

nlohmann::ordered_json pamToJson(const pam::PamSystem& sys);
/// Pretty-printed JSON followed by a newline.
std::string serializePam(const pam::PamSystem& sys);

Rational parseRationalField(const nlohmann::json& v, const std::string& where);
std::string readTextFile(const std::filesystem::path& path);

}  // namespace preach::io
