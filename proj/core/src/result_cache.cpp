#include "lowcap/result_cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lowcap {

namespace {

constexpr int kSchemaVersion = 1;

nlohmann::json channel_to_json(const ChannelModel& ch) {
    nlohmann::json j;
    j["kind"] = channel_name(ch);
    j["parameter"] = channel_parameter(ch);
    return j;
}

std::optional<ChannelModel> channel_from_json(const nlohmann::json& j) {
    std::string kind = j.value("kind", "");
    double p = j.value("parameter", -1.0);
    try {
        if (kind == "bec") return make_bec(p);
        if (kind == "bsc") return make_bsc(p);
        if (kind == "biawgn") return make_biawgn_sigma(p);
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

} // namespace

uint64_t fnv1a64(const void* data, size_t size, uint64_t seed) {
    uint64_t h = seed;
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

uint64_t fer_cache_key(uint64_t spec_digest, const ChannelModel& ch, uint32_t list_size,
                       const StopRule& stop, uint64_t seed) {
    std::ostringstream os;
    os.precision(17);
    os << spec_digest << '|' << channel_name(ch) << '|' << channel_parameter(ch) << '|'
       << list_size << '|' << stop.min_errors << '|' << stop.max_trials << '|' << seed;
    std::string s = os.str();
    return fnv1a64(s.data(), s.size());
}

std::string fer_point_to_json(const FerPoint& point) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["channel"] = channel_to_json(point.channel);
    j["spec_digest"] = point.spec_digest;
    j["list_size"] = point.list_size;
    j["trials"] = point.trials;
    j["errors"] = point.errors;
    j["fer"] = point.fer;
    j["ci_lo"] = point.ci_lo;
    j["ci_hi"] = point.ci_hi;
    j["master_seed"] = point.master_seed;
    j["trials_capped"] = point.trials_capped;
    return j.dump(2);
}

std::optional<FerPoint> fer_point_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (j.value("schema_version", -1) != kSchemaVersion) return std::nullopt;
    auto ch = channel_from_json(j.value("channel", nlohmann::json::object()));
    if (!ch) return std::nullopt;
    FerPoint pt;
    pt.channel = *ch;
    try {
        pt.spec_digest = j.at("spec_digest").get<uint64_t>();
        pt.list_size = j.at("list_size").get<uint32_t>();
        pt.trials = j.at("trials").get<uint64_t>();
        pt.errors = j.at("errors").get<uint64_t>();
        pt.fer = j.at("fer").get<double>();
        pt.ci_lo = j.at("ci_lo").get<double>();
        pt.ci_hi = j.at("ci_hi").get<double>();
        pt.master_seed = j.at("master_seed").get<uint64_t>();
        pt.trials_capped = j.at("trials_capped").get<bool>();
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return pt;
}

namespace {

std::filesystem::path entry_path(const std::filesystem::path& dir, uint64_t key) {
    char name[32];
    std::snprintf(name, sizeof(name), "%016llx.json", static_cast<unsigned long long>(key));
    return dir / name;
}

} // namespace

std::optional<FerPoint> cache_get(const std::filesystem::path& dir, uint64_t key) {
    std::ifstream in(entry_path(dir, key));
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto pt = fer_point_from_json(buf.str());
    if (!pt) {
        std::cerr << "lowcap: ignoring unreadable cache entry " << entry_path(dir, key)
                  << "\n";
    }
    return pt;
}

void cache_put(const std::filesystem::path& dir, uint64_t key, const FerPoint& point) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto final_path = entry_path(dir, key);
    auto tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        out << fer_point_to_json(point) << "\n";
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::cerr << "lowcap: cache write failed for " << final_path << ": " << ec.message()
                  << "\n";
        std::filesystem::remove(tmp_path, ec);
    }
}

} // namespace lowcap
