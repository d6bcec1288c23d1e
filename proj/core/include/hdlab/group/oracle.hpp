#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdlab/group/ring.hpp"

namespace hdlab::group {

/// Canonical coordinates of a group element; equal elements have equal vectors.
using Element = std::vector<Coord>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Coord c : e) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A finite p-group truncation with exact multiplication.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string family() const = 0;
  virtual std::uint32_t p() const = 0;
  virtual std::size_t coords() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual const std::vector<Element>& generators() const = 0;
  /// log_p |G|.
  virtual std::uint64_t log_order() const = 0;
  /// Structural description in the scenario-block vocabulary.
  virtual nlohmann::json describe() const = 0;

  /// Congruence level of a matrix element (principal-congruence families only).
  virtual std::optional<std::uint32_t> congruence_level(const Element&) const { return std::nullopt; }
  /// log_p |G : G^(i)| for the principal-congruence filtration, i >= 1.
  virtual std::optional<std::uint64_t> congruence_log_index(std::uint32_t) const { return std::nullopt; }
  /// Truncation depth of the congruence filtration (levels 1..depth are meaningful).
  virtual std::optional<std::uint32_t> congruence_depth() const { return std::nullopt; }

  bool is_identity(const Element& a) const { return a == identity(); }
  Element power(const Element& a, std::uint64_t e) const;
  /// x^{-1} y^{-1} x y.
  Element commutator(const Element& x, const Element& y) const;
  /// g^{-1} x g.
  Element conjugate(const Element& x, const Element& g) const;
  std::string format(const Element& a) const;
};

}  // namespace hdlab::group
