#include "stfv/core.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "stfv/binio.hpp"

namespace stfv {

namespace {

constexpr char kMagic[4] = {'S', 'T', 'E', 'D'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kHeaderBytes = 24;

void validate_header(const VideoHeader& h) {
    if (h.width < 1 || h.height < 1 || h.frames < 1 || h.dim < 1)
        throw FormatError("video header fields must all be >= 1");
}

void validate_descriptor(const LocalDescriptor& d, const VideoHeader& h, std::size_t index) {
    const std::string where = "descriptor " + std::to_string(index);
    if (!std::isfinite(d.x) || !std::isfinite(d.y) || !std::isfinite(d.t))
        throw FormatError(where + ": non-finite coordinate");
    if (d.phi.size() != h.dim)
        throw FormatError(where + ": phi length " + std::to_string(d.phi.size()) +
                          " does not match header dim " + std::to_string(h.dim));
    for (float v : d.phi)
        if (!std::isfinite(v)) throw FormatError(where + ": non-finite phi value");
    if (!(d.x >= 0.0f && d.x < static_cast<float>(h.width)))
        throw FormatError(where + ": x out of [0, width)");
    if (!(d.y >= 0.0f && d.y < static_cast<float>(h.height)))
        throw FormatError(where + ": y out of [0, height)");
    if (!(d.t >= 0.0f && d.t <= static_cast<float>(h.frames - 1)))
        throw FormatError(where + ": t out of [0, frames-1]");
}

}  // namespace

void validate(const VideoDescriptorSet& set) {
    validate_header(set.header);
    for (std::size_t i = 0; i < set.descriptors.size(); ++i)
        validate_descriptor(set.descriptors[i], set.header, i);
}

VideoFileInfo read_video_file_info(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open descriptor file " + path.string());
    binio::expect_magic(is, kMagic, "descriptor");
    binio::expect_version(is, kVersion, "descriptor");
    VideoFileInfo info;
    info.header.width = binio::read_u32(is, "width");
    info.header.height = binio::read_u32(is, "height");
    info.header.frames = binio::read_u32(is, "frames");
    info.header.dim = binio::read_u32(is, "dim");
    validate_header(info.header);

    const auto total = static_cast<std::uint64_t>(std::filesystem::file_size(path));
    const std::uint64_t record_bytes = 4ull * (3 + info.header.dim);
    const std::uint64_t payload = total - kHeaderBytes;
    if (total < kHeaderBytes || payload % record_bytes != 0)
        throw FormatError("descriptor file " + path.string() + " is truncated");
    info.count = payload / record_bytes;
    return info;
}

VideoDescriptorSet read_video_file(const std::filesystem::path& path) {
    const VideoFileInfo info = read_video_file_info(path);
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open descriptor file " + path.string());
    is.seekg(static_cast<std::streamoff>(kHeaderBytes));

    VideoDescriptorSet set;
    set.header = info.header;
    set.descriptors.resize(info.count);
    for (std::uint64_t i = 0; i < info.count; ++i) {
        LocalDescriptor& d = set.descriptors[i];
        d.x = binio::read_f32(is, "x");
        d.y = binio::read_f32(is, "y");
        d.t = binio::read_f32(is, "t");
        d.phi.resize(info.header.dim);
        for (std::uint32_t j = 0; j < info.header.dim; ++j) d.phi[j] = binio::read_f32(is, "phi");
        validate_descriptor(d, set.header, i);
    }
    return set;
}

void write_video_file(const VideoDescriptorSet& set, const std::filesystem::path& path) {
    validate(set);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open " + path.string() + " for writing");
    binio::write_magic(os, kMagic);
    binio::write_u32(os, kVersion);
    binio::write_u32(os, set.header.width);
    binio::write_u32(os, set.header.height);
    binio::write_u32(os, set.header.frames);
    binio::write_u32(os, set.header.dim);
    for (const LocalDescriptor& d : set.descriptors) {
        binio::write_f32(os, d.x);
        binio::write_f32(os, d.y);
        binio::write_f32(os, d.t);
        for (float v : d.phi) binio::write_f32(os, v);
    }
    os.flush();
    if (!os) throw FormatError("I/O failure writing " + path.string());
}

Location normalize_location(const LocalDescriptor& d, const VideoHeader& h) {
    Location loc;
    loc.u = static_cast<double>(d.x) / static_cast<double>(h.width);
    loc.v = static_cast<double>(d.y) / static_cast<double>(h.height);
    const std::uint32_t span = h.frames > 1 ? h.frames - 1 : 1;
    loc.w = static_cast<double>(d.t) / static_cast<double>(span);
    return loc;
}

std::vector<Location> normalize_locations(const VideoDescriptorSet& set) {
    std::vector<Location> out;
    out.reserve(set.descriptors.size());
    for (const LocalDescriptor& d : set.descriptors) out.push_back(normalize_location(d, set.header));
    return out;
}

}  // namespace stfv
