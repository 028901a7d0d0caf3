#include "amoebius/cache.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "amoebius/errors.hpp"

namespace amoebius {

namespace fs = std::filesystem;

std::string lattice_to_json(std::string const &spec, SubgroupLattice const &lattice) {
  nlohmann::ordered_json j;
  j["engine_version"] = kEngineVersion;
  j["spec"] = spec;
  j["order"] = lattice.group().order();
  j["subgroup_count"] = lattice.size();
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (Subgroup const &h : lattice.subgroups())
    subs.push_back(h.members.to_hex());
  j["subgroups"] = std::move(subs);
  return j.dump(1) + "\n";
}

SubgroupLattice lattice_from_json(std::string const &text, std::string const &spec,
                                  std::shared_ptr<FiniteGroup const> group) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::exception const &e) {
    throw Error(std::string("unparsable cache file: ") + e.what());
  }
  try {
    std::string version = j.at("engine_version").get<std::string>();
    if (version != kEngineVersion)
      throw VersionMismatch("cache written by " + version + ", expected " + kEngineVersion);
    if (j.at("spec").get<std::string>() != spec)
      throw Error("cache file belongs to another group spec");
    std::size_t const n = group->order();
    if (j.at("order").get<std::size_t>() != n)
      throw Error("cached element count differs from the group order");
    auto hex = j.at("subgroups").get<std::vector<std::string>>();
    if (hex.size() != j.at("subgroup_count").get<std::size_t>())
      throw Error("cached subgroup count is inconsistent");
    std::vector<Subgroup> subs;
    subs.reserve(hex.size());
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::string const &h : hex) {
      ElementSet members = ElementSet::from_hex(h, n);
      if (!seen.insert(members).second)
        throw Error("cached lattice repeats a subgroup");
      Subgroup s = group->from_members(members);
      if (n % s.order != 0)
        throw Error("cached subgroup violates Lagrange");
      subs.push_back(std::move(s));
    }
    SubgroupLattice lat(std::move(group), std::move(subs));
    if (lat.subgroup(lat.trivial_id()).order != 1 || lat.subgroup(lat.top_id()).order != n)
      throw Error("cached lattice lacks the trivial subgroup or G");
    return lat;
  } catch (nlohmann::json::exception const &e) {
    throw Error(std::string("malformed cache file: ") + e.what());
  }
}

std::optional<fs::path> LatticeCache::dir_from_env() {
  char const *env = std::getenv("MOEBIUS_CACHE_DIR");
  if (env == nullptr || *env == '\0')
    return std::nullopt;
  return fs::path(env);
}

fs::path LatticeCache::file_for(std::string const &spec) const {
  // readable stem plus FNV-1a of the full spec, so distinct specs never collide
  std::string stem;
  for (char c : spec)
    stem += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (stem.size() > 48)
    stem.resize(48);
  std::uint64_t h = 1469598103934665603ull;
  for (char c : spec) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream name;
  name << "lattice-" << stem << '-' << std::hex << h << ".json";
  return dir_ / name.str();
}

void LatticeCache::store(std::string const &spec, SubgroupLattice const &lattice) const {
  fs::create_directories(dir_);
  fs::path target = file_for(spec);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write cache file " + tmp.string());
    out << lattice_to_json(spec, lattice);
  }
  fs::rename(tmp, target);
}

std::shared_ptr<SubgroupLattice const> LatticeCache::build(std::string const &spec,
                                                           std::shared_ptr<FiniteGroup const> group,
                                                           LatticeOptions const &options) {
  auto lat = std::make_shared<SubgroupLattice const>(enumerate_subgroups(std::move(group), options));
  store(spec, *lat);
  return lat;
}

std::shared_ptr<SubgroupLattice const> LatticeCache::get(std::string const &spec,
                                                         std::shared_ptr<FiniteGroup const> group,
                                                         LatticeOptions const &options,
                                                         std::vector<std::string> *warnings) {
  fs::path file = file_for(spec);
  std::ifstream in(file, std::ios::binary);
  if (in) {
    std::stringstream body;
    body << in.rdbuf();
    try {
      return std::make_shared<SubgroupLattice const>(lattice_from_json(body.str(), spec, group));
    } catch (Error const &e) {
      if (warnings)
        warnings->push_back("ignoring cache file " + file.string() + " (" + e.what() +
                            "); recomputing");
    }
  }
  return build(spec, std::move(group), options);
}

std::vector<CacheEntryInfo> LatticeCache::info() const {
  std::vector<CacheEntryInfo> out;
  if (!fs::is_directory(dir_))
    return out;
  for (auto const &entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != ".json")
      continue;
    std::ifstream in(entry.path(), std::ios::binary);
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      out.push_back({entry.path(), j.at("spec").get<std::string>(),
                     j.at("engine_version").get<std::string>(),
                     j.at("order").get<std::size_t>(), j.at("subgroup_count").get<std::size_t>()});
    } catch (nlohmann::json::exception const &) {
      continue;
    }
  }
  std::sort(out.begin(), out.end(),
            [](CacheEntryInfo const &a, CacheEntryInfo const &b) { return a.file < b.file; });
  return out;
}

std::size_t LatticeCache::clear() {
  std::size_t removed = 0;
  if (!fs::is_directory(dir_))
    return 0;
  for (auto const &entry : fs::directory_iterator(dir_)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("lattice-", 0) == 0 && fs::remove(entry.path()))
      ++removed;
  }
  return removed;
}

} // namespace amoebius
