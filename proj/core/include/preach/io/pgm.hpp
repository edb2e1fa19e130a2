#pragma once

#include <filesystem>
#include <string>

#include "preach/reach/plot.hpp"

namespace preach::io {

/// ASCII PGM: "P2", width and height, maxval 1, then one line per row from
/// the largest second-axis value down. Each sample is the pixel bit.
std::string renderPgm(const reach::PixelGrid& pixels);
void writePgm(const reach::PixelGrid& pixels, const std::filesystem::path& path);

}  // namespace preach::io
