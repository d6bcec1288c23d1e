#pragma once

#include <memory>

#include <nlohmann/json.hpp>

#include "hdlab/group/families.hpp"

namespace hdlab::group {

/// Instantiates a family from {family, p, k, m?, d?, n?, ring?, factors?}.
/// Families: cyclic, coordinate-product, unitriangular, sl-congruence
/// (ring "zp" or "fpt"), cyclotomic-semidirect, direct-product.
std::shared_ptr<const GroupOracle> make_group(const nlohmann::json& block);

}  // namespace hdlab::group
