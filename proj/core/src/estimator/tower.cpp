#include "hdlab/estimator/tower.hpp"

#include <algorithm>

#include "hdlab/error.hpp"
#include "hdlab/group/families.hpp"

namespace hdlab::estimator {

CoordinateTower::CoordinateTower(std::uint32_t p, std::vector<std::uint64_t> levels)
    : p_(p), levels_(std::move(levels)) {
  if (p < 2) throw InvalidArgument("tower prime must be >= 2");
  if (levels_.empty()) throw InvalidArgument("tower needs at least one coordinate");
  if (!std::is_sorted(levels_.begin(), levels_.end())) throw InvalidArgument("tower levels must be nondecreasing");
  if (levels_.front() < 1) throw InvalidArgument("tower levels start at 1");
  depth_ = levels_.back();
  m_.assign(depth_ + 1, 0);
  for (auto l : levels_) ++m_[l];
  for (std::uint64_t i = 1; i <= depth_; ++i) {
    if (m_[i] == 0) throw InvalidArgument("tower level " + std::to_string(i) + " does not refine");
    m_[i] += m_[i - 1];
  }
}

CoordinateTower CoordinateTower::unit(std::uint32_t p, std::uint64_t depth) {
  std::vector<std::uint64_t> levels(depth);
  for (std::uint64_t i = 0; i < depth; ++i) levels[i] = i + 1;
  return CoordinateTower(p, std::move(levels));
}

std::uint64_t CoordinateTower::m(std::uint64_t i) const {
  if (i > depth_) throw InvalidArgument("tower level beyond depth");
  return m_[i];
}

std::shared_ptr<const GroupOracle> CoordinateTower::quotient(std::uint64_t i) const {
  return std::make_shared<group::CoordinateProduct>(p_, m(i));
}

Element CoordinateTower::project(const Element& x, std::uint64_t from, std::uint64_t to) const {
  if (to > from || x.size() != m(from)) throw InvalidArgument("bad projection");
  return Element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m(to)));
}

std::vector<std::size_t> CoordinateTower::at_level(std::uint64_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t c = i >= 1 && i <= depth_ ? m_[i - 1] : levels_.size(); c < levels_.size() && levels_[c] == i; ++c) {
    out.push_back(c);
  }
  return out;
}

CoordinateTower::Induced CoordinateTower::induced(const std::vector<std::size_t>& coords) const {
  std::vector<std::size_t> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw InvalidArgument("induced tower of the trivial subgroup");
  std::vector<std::uint64_t> lv;
  std::vector<std::uint64_t> level_map{0};
  for (auto c : sorted) {
    if (c >= levels_.size()) throw InvalidArgument("coordinate out of range");
    if (level_map.back() != levels_[c]) level_map.push_back(levels_[c]);
    lv.push_back(level_map.size() - 1);
  }
  return Induced{CoordinateTower(p_, std::move(lv)), std::move(sorted), std::move(level_map)};
}

std::vector<std::size_t> CoordinateSubgroup::coords() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < member_.size(); ++c) {
    if (member_[c]) out.push_back(c);
  }
  return out;
}

std::uint64_t CoordinateSubgroup::count(const CoordinateTower& t, std::uint64_t i) const {
  std::uint64_t n = 0;
  for (std::size_t c = 0; c < member_.size() && t.level(c) <= i; ++c) n += member_[c];
  return n;
}

DensitySequence coordinate_density(const CoordinateTower& t, const CoordinateSubgroup& h, std::uint64_t first,
                                   std::uint64_t last) {
  std::vector<arith::DensityLevel> out;
  for (std::uint64_t i = std::max<std::uint64_t>(first, 1); i <= last; ++i) {
    out.push_back({i, BigInt(static_cast<unsigned long>(h.count(t, i))), BigInt(static_cast<unsigned long>(t.m(i)))});
  }
  return DensitySequence(t.p(), std::move(out));
}

}  // namespace hdlab::estimator
