#include "hdlab/group/scenario_block.hpp"

#include "hdlab/error.hpp"

namespace hdlab::group {

namespace {

std::uint32_t field(const nlohmann::json& b, const char* key, std::optional<std::uint32_t> fallback = std::nullopt) {
  if (!b.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidArgument(std::string("group block is missing '") + key + "'");
  }
  if (!b.at(key).is_number_integer() || b.at(key).get<std::int64_t>() < 0) throw InvalidArgument(std::string("group block field '") + key + "' must be a natural number");
  return b.at(key).get<std::uint32_t>();
}

}  // namespace

std::shared_ptr<const GroupOracle> make_group(const nlohmann::json& block) {
  if (!block.is_object() || !block.contains("family")) throw InvalidArgument("group block needs a family");
  const auto family = block.at("family").get<std::string>();
  if (family == "direct-product") {
    std::vector<std::shared_ptr<const GroupOracle>> fs;
    for (const auto& f : block.at("factors")) fs.push_back(make_group(f));
    return std::make_shared<DirectProduct>(std::move(fs));
  }
  const std::uint32_t p = field(block, "p");
  if (family == "cyclic") return std::make_shared<CyclicGroup>(p, field(block, "k"));
  if (family == "coordinate-product") return std::make_shared<CoordinateProduct>(p, field(block, "n"));
  if (family == "unitriangular") return std::make_shared<UnitriangularGroup>(p, field(block, "k"), field(block, "n", 3));
  if (family == "sl-congruence") {
    const std::string ring = block.value("ring", "zp");
    const std::uint32_t k = field(block, "k");
    if (ring == "zp") return std::make_shared<CongruenceGroup>(FinLocalRing::integers_mod(p, k), field(block, "n", 3));
    if (ring == "fpt") return std::make_shared<CongruenceGroup>(FinLocalRing::truncated_series(p, k), field(block, "n", 3));
    throw InvalidArgument("unknown ring '" + ring + "' (expected zp or fpt)");
  }
  if (family == "cyclotomic-semidirect") {
    return std::make_shared<CyclotomicSemidirect>(p, field(block, "m", 1), field(block, "d", 1), field(block, "k"));
  }
  throw InvalidArgument("unknown group family '" + family + "'");
}

}  // namespace hdlab::group
