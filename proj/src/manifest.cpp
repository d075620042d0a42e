#include "stfv/manifest.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace stfv {

using nlohmann::json;

std::filesystem::path DatasetManifest::resolve(const ManifestEntry& e, std::size_t channel) const {
    const std::filesystem::path p(e.paths.at(channel));
    if (p.is_absolute() || base_dir.empty()) return p;
    return base_dir / p;
}

std::size_t DatasetManifest::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw FormatError("label '" + label + "' not in manifest label set");
}

void validate(const DatasetManifest& m) {
    std::unordered_set<std::string> label_set;
    for (const std::string& l : m.labels) {
        if (l.empty()) throw FormatError("manifest: empty label in label set");
        if (!label_set.insert(l).second) throw FormatError("manifest: duplicate label '" + l + "'");
    }
    std::unordered_set<std::string> ids;
    const std::size_t channels = m.entries.empty() ? 0 : m.entries.front().paths.size();
    for (const ManifestEntry& e : m.entries) {
        if (e.id.empty()) throw FormatError("manifest: entry with empty id");
        if (!ids.insert(e.id).second) throw FormatError("manifest: duplicate id '" + e.id + "'");
        if (e.paths.empty()) throw FormatError("manifest: entry '" + e.id + "' has no path");
        if (e.paths.size() != channels)
            throw FormatError("manifest: entry '" + e.id + "' has inconsistent channel count");
        for (const std::string& p : e.paths)
            if (p.empty()) throw FormatError("manifest: entry '" + e.id + "' has an empty path");
        if (!label_set.count(e.label))
            throw FormatError("manifest: entry '" + e.id + "' has unknown label '" + e.label + "'");
    }
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw FormatError("cannot open manifest " + path.string());
    json doc;
    try {
        is >> doc;
    } catch (const json::exception& e) {
        throw FormatError("manifest " + path.string() + " is not valid JSON: " + e.what());
    }
    DatasetManifest m;
    try {
        for (const json& l : doc.at("labels")) m.labels.push_back(l.get<std::string>());
        for (const json& je : doc.at("entries")) {
            ManifestEntry e;
            e.id = je.at("id").get<std::string>();
            const json& p = je.at("path");
            if (p.is_array())
                for (const json& one : p) e.paths.push_back(one.get<std::string>());
            else
                e.paths.push_back(p.get<std::string>());
            e.label = je.at("label").get<std::string>();
            e.group = je.value("group", std::string());
            m.entries.push_back(std::move(e));
        }
    } catch (const json::exception& e) {
        throw FormatError("manifest " + path.string() + " has unexpected structure: " + e.what());
    }
    m.base_dir = path.parent_path();
    validate(m);
    return m;
}

void write_manifest(const DatasetManifest& m, const std::filesystem::path& path) {
    validate(m);
    json doc;
    doc["labels"] = m.labels;
    json entries = json::array();
    for (const ManifestEntry& e : m.entries) {
        json je;
        je["id"] = e.id;
        if (e.paths.size() == 1)
            je["path"] = e.paths.front();
        else
            je["path"] = e.paths;
        je["label"] = e.label;
        je["group"] = e.group;
        entries.push_back(std::move(je));
    }
    doc["entries"] = std::move(entries);
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw FormatError("cannot open " + path.string() + " for writing");
    os << doc.dump(2) << '\n';
    if (!os) throw FormatError("I/O failure writing " + path.string());
}

DatasetManifest subset(const DatasetManifest& m, const std::vector<std::size_t>& indices) {
    DatasetManifest out;
    out.labels = m.labels;
    out.base_dir = m.base_dir;
    out.entries.reserve(indices.size());
    for (std::size_t i : indices) out.entries.push_back(m.entries.at(i));
    return out;
}

std::vector<std::string> group_names(const DatasetManifest& m) {
    std::vector<std::string> names;
    for (const ManifestEntry& e : m.entries)
        if (std::find(names.begin(), names.end(), e.group) == names.end()) names.push_back(e.group);
    return names;
}

}  // namespace stfv
