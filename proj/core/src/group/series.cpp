#include "hdlab/group/series.hpp"

#include <map>

#include "hdlab/error.hpp"

namespace hdlab::group {

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::kPPower: return "p-power";
    case SeriesKind::kLowerP: return "lower-p";
    case SeriesKind::kFrattini: return "frattini";
    case SeriesKind::kDimension: return "dimension";
    case SeriesKind::kPrincipalCongruence: return "principal-congruence";
    case SeriesKind::kExplicitChain: return "explicit-chain";
    case SeriesKind::kLatticeTriples: return "lattice-triples";
    case SeriesKind::kLifted: return "lifted";
  }
  return "?";
}

SeriesKind series_kind_from_string(const std::string& s) {
  for (auto k : {SeriesKind::kPPower, SeriesKind::kLowerP, SeriesKind::kFrattini, SeriesKind::kDimension,
                 SeriesKind::kPrincipalCongruence, SeriesKind::kExplicitChain, SeriesKind::kLatticeTriples,
                 SeriesKind::kLifted}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown series kind '" + s + "'");
}

SubgroupHandle whole_group(const GroupOracle& g, std::uint64_t budget) {
  return closure(g.generators(), g, budget);
}

namespace {

// Distinct subgroups seen so far, so that repeated terms share commutator work.
class SubgroupCache {
 public:
  std::size_t id(const SubgroupHandle& h) {
    for (std::size_t i = 0; i < known_.size(); ++i) {
      if (same_subgroup(known_[i], h)) return i;
    }
    known_.push_back(h);
    return known_.size() - 1;
  }
  const SubgroupHandle& get(std::size_t i) const { return known_[i]; }

 private:
  std::vector<SubgroupHandle> known_;
};

SubgroupHandle join_all(const std::vector<const SubgroupHandle*>& parts, const GroupOracle& g, std::uint64_t budget) {
  std::vector<Element> gens;
  for (const auto* h : parts) gens.insert(gens.end(), h->generators().begin(), h->generators().end());
  return closure(gens, g, budget);
}

void dimension_series(SeriesTerms& out, const SubgroupHandle& whole, std::uint64_t depth, const GroupOracle& g,
                      std::uint64_t budget) {
  const std::uint32_t p = g.p();
  SubgroupCache cache;
  std::vector<std::size_t> ids{cache.id(whole), cache.id(whole)};
  std::map<std::pair<std::size_t, std::size_t>, SubgroupHandle> comm;
  out.terms = {whole, whole};
  for (std::uint64_t i = 2; i <= depth; ++i) {
    const std::uint64_t up = (i + p - 1) / p;
    std::vector<SubgroupHandle> parts;
    parts.push_back(power_subgroup(cache.get(ids[up]), p, g, budget));
    for (std::uint64_t j = 1; j < i; ++j) {
      auto key = std::minmax(ids[j], ids[i - j]);
      auto it = comm.find(key);
      if (it == comm.end()) {
        it = comm.emplace(key, commutator_subgroup(cache.get(key.first), cache.get(key.second), g.generators(), g,
                                                   budget))
                 .first;
      }
      parts.push_back(it->second);
    }
    std::vector<const SubgroupHandle*> ptrs;
    for (const auto& h : parts) ptrs.push_back(&h);
    SubgroupHandle term = join_all(ptrs, g, budget);
    ids.push_back(cache.id(term));
    out.terms.push_back(std::move(term));
  }
}

}  // namespace

SeriesTerms congruence_terms(const GroupOracle& g) {
  const auto depth = g.congruence_depth();
  if (!depth) throw InvalidArgument(g.family() + " has no principal congruence filtration");
  SeriesTerms out;
  out.kind = SeriesKind::kPrincipalCongruence;
  const std::uint64_t total = *g.congruence_log_index(*depth);
  for (std::uint32_t i = 0; i <= *depth; ++i) {
    const std::uint32_t lvl = i == 0 ? 1 : i;
    const std::uint64_t log_order = total - *g.congruence_log_index(lvl);
    const GroupOracle* gp = &g;
    out.terms.push_back(SubgroupHandle::structural({}, log_order, [gp, lvl](const Element& x) {
      return *gp->congruence_level(x) >= lvl;
    }));
  }
  return out;
}

SeriesTerms series_terms(const SeriesSpec& spec, const GroupOracle& g, std::uint64_t budget) {
  if (spec.depth < 1) throw InvalidArgument("series depth must be >= 1");
  if (spec.kind == SeriesKind::kPrincipalCongruence) return congruence_terms(g);
  if (spec.kind != SeriesKind::kPPower && spec.kind != SeriesKind::kLowerP && spec.kind != SeriesKind::kFrattini &&
      spec.kind != SeriesKind::kDimension) {
    throw InvalidArgument("series kind " + to_string(spec.kind) + " is not built from a group oracle");
  }
  SeriesTerms out;
  out.kind = spec.kind;
  const std::uint32_t p = g.p();
  try {
    const SubgroupHandle whole = whole_group(g, budget);
    switch (spec.kind) {
      case SeriesKind::kPPower: {
        out.terms.push_back(whole);
        std::vector<Element> cur = whole.elements();
        for (std::uint64_t i = 1; i <= spec.depth; ++i) {
          ElementSet seen;
          std::vector<Element> next;
          for (const auto& x : cur) {
            Element y = g.power(x, p);
            if (seen.insert(y).second) next.push_back(std::move(y));
          }
          out.terms.push_back(closure(next, g, budget));
          cur = std::move(next);
        }
        break;
      }
      case SeriesKind::kLowerP:
      case SeriesKind::kFrattini: {
        out.terms.push_back(whole);
        if (spec.kind == SeriesKind::kLowerP) out.terms.push_back(whole);
        while (out.terms.size() <= spec.depth) {
          const SubgroupHandle& prev = out.terms.back();
          const SubgroupHandle pw = power_subgroup(prev, p, g, budget);
          const SubgroupHandle& partner = spec.kind == SeriesKind::kLowerP ? whole : prev;
          const SubgroupHandle cm = commutator_subgroup(prev, partner, g.generators(), g, budget);
          out.terms.push_back(join_all({&pw, &cm}, g, budget));
        }
        break;
      }
      case SeriesKind::kDimension:
        dimension_series(out, whole, spec.depth, g, budget);
        break;
      default:
        break;
    }
  } catch (const BudgetExceeded&) {
    if (out.terms.empty()) throw;
    out.horizon_marker = out.terms.size();
  }
  return out;
}

}  // namespace hdlab::group
