/**
 * Run manifests and the on-disk result cache used by the command-line tool.
 *
 * Cache entries are keyed by the SHA-256 of (command, canonical parameter
 * string, input digests). A hit is accepted only when the stored output
 * still hashes to the digest recorded in its manifest.
 */
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace omtk {

inline constexpr std::string_view kToolVersion = "omtk 0.1.0";

std::string sha256_hex(std::string_view data);

struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    std::string tool_version{kToolVersion};
    std::map<std::string, std::string> input_digests;
    std::string output_digest;
    double wall_time_seconds = 0.0;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& document);
};

/// Sorted-key compact dump; identical parameters give identical strings.
std::string canonical_parameters(const nlohmann::json& parameters);

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

    /// $OMCACHE_DIR if set, otherwise ./.omcache.
    static ResultCache from_environment();

    const std::filesystem::path& directory() const noexcept { return directory_; }

    static std::string key(const RunManifest& manifest);

    /// Cached output whose digest matches its manifest, if any.
    std::optional<std::string> lookup(const std::string& key) const;

    void store(const std::string& key, const std::string& output, const RunManifest& manifest) const;

private:
    std::filesystem::path directory_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace omtk
