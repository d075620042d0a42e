#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "stfv/common.hpp"

namespace stfv {

/// Spatial and temporal extent of the clip a descriptor set was extracted
/// from, plus the descriptor dimension.
struct VideoHeader {
    std::uint32_t width = 0;   // pixels
    std::uint32_t height = 0;  // pixels
    std::uint32_t frames = 0;  // frame count
    std::uint32_t dim = 0;     // descriptor dimension
};

/// One located local feature: raw pixel/frame coordinates plus the
/// appearance/motion vector. Coordinates and values are stored as 32-bit
/// floats, matching the on-disk record layout exactly.
struct LocalDescriptor {
    float x = 0.0f;  // 0 <= x < width
    float y = 0.0f;  // 0 <= y < height
    float t = 0.0f;  // 0 <= t <= frames-1
    std::vector<float> phi;
};

struct VideoDescriptorSet {
    VideoHeader header;
    std::vector<LocalDescriptor> descriptors;
};

/// Normalized space-time location, each component in [0, 1].
struct Location {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

/// Throws FormatError if the header or any descriptor violates an invariant
/// (positive extents, coordinate bounds, matching phi length, finite values).
void validate(const VideoDescriptorSet& set);

/// Binary descriptor file (.sted). Layout, little-endian:
///   magic "STED" | version u32=1 | width u32 | height u32 | frames u32 | dim u32
/// followed by records of (x, y, t, phi[dim]) as 32-bit floats. The record
/// count is implied by the file size; trailing partial records are a format
/// error.
VideoDescriptorSet read_video_file(const std::filesystem::path& path);
void write_video_file(const VideoDescriptorSet& set, const std::filesystem::path& path);

/// Reads only width/height/frames/dim and the implied record count.
/// Cheap way to size a sampling pool without loading descriptors.
struct VideoFileInfo {
    VideoHeader header;
    std::uint64_t count = 0;
};
VideoFileInfo read_video_file_info(const std::filesystem::path& path);

/// u = x/width, v = y/height, w = t/max(frames-1, 1). Values lie in [0,1]
/// exactly; a single-frame clip maps every t to 0.
std::vector<Location> normalize_locations(const VideoDescriptorSet& set);
Location normalize_location(const LocalDescriptor& d, const VideoHeader& h);

}  // namespace stfv
