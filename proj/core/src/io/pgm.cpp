#include "preach/io/pgm.hpp"

#include <fstream>

#include "preach/error.hpp"

namespace preach::io {

std::string renderPgm(const reach::PixelGrid& pixels) {
    if (pixels.bits.empty()) {
        throw DomainError("empty pixel grid");
    }
    std::string out = "P2\n" + std::to_string(pixels.width()) + " " + std::to_string(pixels.height()) + "\n1\n";
    for (std::int64_t zy = pixels.y1; zy >= pixels.y0; --zy) {
        for (std::int64_t zx = pixels.x0; zx <= pixels.x1; ++zx) {
            if (zx != pixels.x0) {
                out += ' ';
            }
            out += pixels.at(zx, zy) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

void writePgm(const reach::PixelGrid& pixels, const std::filesystem::path& path) {
    const std::string data = renderPgm(pixels);
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size()))) {
        throw Error("cannot write " + path.string());
    }
}

}  // namespace preach::io
