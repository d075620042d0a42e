#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "stfv/common.hpp"

namespace stfv {

/// One video in a dataset. `paths` holds one descriptor file per channel
/// (HOG, HOF, ... in a fixed order); single-channel datasets have one entry.
struct ManifestEntry {
    std::string id;
    std::vector<std::string> paths;
    std::string label;
    std::string group;
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::vector<std::string> labels;  // ordered label set
    /// Directory relative paths are resolved against. Set by read_manifest;
    /// empty means paths are used as-is.
    std::filesystem::path base_dir;

    std::size_t channels() const { return entries.empty() ? 1 : entries.front().paths.size(); }
    std::filesystem::path resolve(const ManifestEntry& e, std::size_t channel) const;
    /// Index of `label` in the ordered label set; throws FormatError if absent.
    std::size_t label_index(const std::string& label) const;
};

/// Rejects duplicate ids, labels missing from the label set, duplicate or
/// empty label-set entries, empty paths and ragged channel counts.
void validate(const DatasetManifest& m);

/// Manifest JSON: {"entries":[{"id","path","label","group"}], "labels":[...]}.
/// "path" is a string for single-channel datasets, an array of strings for
/// multi-channel ones.
DatasetManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const DatasetManifest& m, const std::filesystem::path& path);

/// Subset containing only the selected entry indices (label set preserved).
DatasetManifest subset(const DatasetManifest& m, const std::vector<std::size_t>& indices);

/// Distinct group names in first-appearance order.
std::vector<std::string> group_names(const DatasetManifest& m);

}  // namespace stfv
