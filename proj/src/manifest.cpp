#include "omtk/manifest.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace omtk {

std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(kHex[digest[i] >> 4]);
        out.push_back(kHex[digest[i] & 0xF]);
    }
    return out;
}

nlohmann::json RunManifest::to_json() const
{
    nlohmann::json out{{"command", command},
                       {"parameters", parameters},
                       {"tool_version", tool_version},
                       {"input_digests", input_digests},
                       {"output_digest", output_digest},
                       {"wall_time_seconds", wall_time_seconds}};
    out["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return out;
}

RunManifest RunManifest::from_json(const nlohmann::json& document)
{
    RunManifest m;
    m.command = document.at("command").get<std::string>();
    m.parameters = document.at("parameters");
    if (!document.at("seed").is_null())
        m.seed = document.at("seed").get<std::uint64_t>();
    m.tool_version = document.at("tool_version").get<std::string>();
    m.input_digests = document.at("input_digests").get<std::map<std::string, std::string>>();
    m.output_digest = document.at("output_digest").get<std::string>();
    m.wall_time_seconds = document.at("wall_time_seconds").get<double>();
    return m;
}

std::string canonical_parameters(const nlohmann::json& parameters)
{
    return parameters.dump();
}

ResultCache ResultCache::from_environment()
{
    if (const char* dir = std::getenv("OMCACHE_DIR"); dir && *dir)
        return ResultCache(dir);
    return ResultCache(std::filesystem::path(".omcache"));
}

std::string ResultCache::key(const RunManifest& manifest)
{
    std::string material = manifest.tool_version + "\n" + manifest.command + "\n" +
                           canonical_parameters(manifest.parameters) + "\n";
    for (const auto& [name, digest] : manifest.input_digests)
        material += name + "=" + digest + "\n";
    return sha256_hex(material);
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const
{
    const auto output_path = directory_ / (key + ".out");
    const auto manifest_path = directory_ / (key + ".manifest.json");
    std::error_code ec;
    if (!std::filesystem::exists(output_path, ec) || !std::filesystem::exists(manifest_path, ec))
        return std::nullopt;
    try {
        const auto manifest = RunManifest::from_json(nlohmann::json::parse(read_file(manifest_path)));
        std::string output = read_file(output_path);
        if (sha256_hex(output) != manifest.output_digest)
            return std::nullopt;
        return output;
    }
    catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& key, const std::string& output, const RunManifest& manifest) const
{
    std::filesystem::create_directories(directory_);
    write_file(directory_ / (key + ".out"), output);
    write_file(directory_ / (key + ".manifest.json"), manifest.to_json().dump(2) + "\n");
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::ios_base::failure("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::ios_base::failure("write failed for " + path.string());
}

}  // namespace omtk
