#include "hdlab/group/congruence.hpp"

#include "hdlab/error.hpp"

namespace hdlab::group {

std::uint32_t congruence_level(const GroupOracle& g, const Element& x) {
  const auto l = g.congruence_level(x);
  if (!l) throw InvalidArgument(g.family() + " has no congruence levels");
  return *l;
}

std::uint64_t cyclic_order_mod_level(const GroupOracle& g, const Element& x, std::uint32_t level) {
  const auto depth = g.congruence_depth();
  if (!depth) throw InvalidArgument(g.family() + " has no congruence levels");
  if (level > *depth) throw InvalidArgument("level beyond truncation depth");
  Element y = x;
  for (std::uint64_t j = 0; j <= std::uint64_t{level} + 64; ++j) {
    if (congruence_level(g, y) >= level) return j;
    y = g.power(y, g.p());
  }
  throw Error("order of element modulo level " + std::to_string(level) + " is not a p-power");
}

}  // namespace hdlab::group
