#include "hdlab/group/closure.hpp"

#include <cstdlib>

#include "hdlab/error.hpp"

namespace hdlab::group {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HDLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 22;
}

namespace {

std::uint64_t log_p_exact(std::uint64_t n, std::uint32_t p) {
  std::uint64_t e = 0;
  while (n > 1) {
    if (n % p != 0) throw Error("subgroup order " + std::to_string(n) + " is not a power of p");
    n /= p;
    ++e;
  }
  return e;
}

// Dimino-style closure: the current subgroup is a union of full cosets of the
// previous one, so a new coset is detected by a single membership query.
class Closer {
 public:
  Closer(const GroupOracle& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const Element id = g.identity();
    list_.push_back(id);
    set_.insert(id);
  }

  Closer(const GroupOracle& g, std::uint64_t budget, const SubgroupHandle& base) : g_(g), budget_(budget) {
    list_ = base.elements();
    set_.insert(list_.begin(), list_.end());
    effective_ = base.generators();
  }

  void add(const Element& x) {
    if (set_.count(x)) return;
    effective_.push_back(x);
    const std::size_t old = list_.size();
    std::vector<Element> reps{g_.identity()};
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
      for (const auto& s : effective_) {
        Element y = g_.multiply(reps[ri], s);
        if (set_.count(y)) continue;
        if (list_.size() + old > budget_) {
          throw BudgetExceeded("closure exceeds element budget " + std::to_string(budget_));
        }
        for (std::size_t k = 0; k < old; ++k) {
          Element z = g_.multiply(list_[k], y);
          set_.insert(z);
          list_.push_back(std::move(z));
        }
        reps.push_back(std::move(y));
      }
    }
  }

  SubgroupHandle finish() { return SubgroupHandle(std::move(effective_), std::move(list_), g_.p()); }

 private:
  const GroupOracle& g_;
  std::uint64_t budget_;
  std::vector<Element> list_;
  ElementSet set_;
  std::vector<Element> effective_;
};

}  // namespace

SubgroupHandle::SubgroupHandle(std::vector<Element> generators, std::vector<Element> elements, std::uint32_t p)
    : generators_(std::move(generators)) {
  log_order_ = log_p_exact(elements.size(), p);
  auto set = std::make_shared<ElementSet>(elements.begin(), elements.end());
  elements_ = std::make_shared<const std::vector<Element>>(std::move(elements));
  members_ = std::move(set);
}

SubgroupHandle SubgroupHandle::structural(std::vector<Element> generators, std::uint64_t log_order, Predicate member) {
  SubgroupHandle h;
  h.generators_ = std::move(generators);
  h.log_order_ = log_order;
  h.predicate_ = std::move(member);
  return h;
}

const std::vector<Element>& SubgroupHandle::elements() const {
  if (!elements_) throw BudgetExceeded("subgroup is structural only; no enumeration available");
  return *elements_;
}

bool SubgroupHandle::contains(const Element& g) const {
  if (members_) return members_->count(g) > 0;
  return predicate_(g);
}

nlohmann::json SubgroupHandle::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back(g);
  return {{"generators", gens}, {"log_order", log_order_}};
}

SubgroupHandle closure(std::span<const Element> gens, const GroupOracle& g, std::uint64_t budget) {
  Closer c(g, budget);
  for (const auto& x : gens) c.add(x);
  return c.finish();
}

SubgroupHandle extend(const SubgroupHandle& base, std::span<const Element> gens, const GroupOracle& g,
                      std::uint64_t budget) {
  Closer c(g, budget, base);
  for (const auto& x : gens) c.add(x);
  return c.finish();
}

SubgroupHandle normal_closure(const SubgroupHandle& h, std::span<const Element> by, const GroupOracle& g,
                              std::uint64_t budget) {
  SubgroupHandle cur = h;
  for (;;) {
    std::vector<Element> missing;
    for (const auto& x : cur.generators()) {
      for (const auto& b : by) {
        Element c = g.conjugate(x, b);
        if (!cur.contains(c)) missing.push_back(std::move(c));
      }
    }
    if (missing.empty()) return cur;
    cur = extend(cur, missing, g, budget);
  }
}

SubgroupHandle power_subgroup(const SubgroupHandle& x, std::uint64_t e, const GroupOracle& g, std::uint64_t budget) {
  ElementSet seen;
  std::vector<Element> powers;
  for (const auto& el : x.elements()) {
    Element y = g.power(el, e);
    if (seen.insert(y).second) powers.push_back(std::move(y));
  }
  return closure(powers, g, budget);
}

SubgroupHandle commutator_subgroup(const SubgroupHandle& x, const SubgroupHandle& y,
                                   std::span<const Element> ambient, const GroupOracle& g, std::uint64_t budget) {
  ElementSet seen;
  std::vector<Element> comms;
  for (const auto& a : x.elements()) {
    for (const auto& b : y.generators()) {
      Element c = g.commutator(a, b);
      if (seen.insert(c).second) comms.push_back(std::move(c));
    }
  }
  return normal_closure(closure(comms, g, budget), ambient, g, budget);
}

bool is_subgroup_of(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.log_order() > b.log_order()) return false;
  for (const auto& x : a.generators()) {
    if (!b.contains(x)) return false;
  }
  return true;
}

bool same_subgroup(const SubgroupHandle& a, const SubgroupHandle& b) {
  return a.log_order() == b.log_order() && is_subgroup_of(a, b);
}

bool is_normalized_by(const SubgroupHandle& h, std::span<const Element> by, const GroupOracle& g) {
  for (const auto& x : h.generators()) {
    for (const auto& b : by) {
      if (!h.contains(g.conjugate(x, b))) return false;
    }
  }
  return true;
}

}  // namespace hdlab::group
