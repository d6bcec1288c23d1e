#include "hdlab/group/families.hpp"

#include <algorithm>

#include "hdlab/error.hpp"

namespace hdlab::group {

Element GroupOracle::power(const Element& a, std::uint64_t e) const {
  Element result = identity();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Element GroupOracle::commutator(const Element& x, const Element& y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

Element GroupOracle::conjugate(const Element& x, const Element& g) const {
  return multiply(multiply(inverse(g), x), g);
}

std::string GroupOracle::format(const Element& a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

namespace {

Coord pow_coord(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q >= (std::uint64_t{1} << 31)) throw InvalidArgument("group modulus must stay below 2^31");
  return static_cast<Coord>(q);
}

}  // namespace

// ---- cyclic ----

CyclicGroup::CyclicGroup(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(pow_coord(p, k)) {
  if (k_ > 0) gens_.push_back({1});
}

Element CyclicGroup::multiply(const Element& a, const Element& b) const {
  return {static_cast<Coord>((std::uint64_t{a[0]} + b[0]) % q_)};
}

Element CyclicGroup::inverse(const Element& a) const { return {a[0] == 0 ? 0 : q_ - a[0]}; }

nlohmann::json CyclicGroup::describe() const { return {{"family", family()}, {"p", p_}, {"k", k_}}; }

// ---- coordinate product ----

CoordinateProduct::CoordinateProduct(std::uint32_t p, std::size_t n) : p_(p), n_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    Element e(n, 0);
    e[i] = 1;
    gens_.push_back(std::move(e));
  }
}

Element CoordinateProduct::multiply(const Element& a, const Element& b) const {
  Element out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (a[i] + b[i]) % p_;
  return out;
}

Element CoordinateProduct::inverse(const Element& a) const {
  Element out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (p_ - a[i]) % p_;
  return out;
}

nlohmann::json CoordinateProduct::describe() const { return {{"family", family()}, {"p", p_}, {"n", n_}}; }

// ---- unitriangular ----

UnitriangularGroup::UnitriangularGroup(std::uint32_t p, std::uint32_t k, std::size_t n)
    : p_(p), k_(k), n_(n), slots_(n * (n - 1) / 2), q_(pow_coord(p, k)) {
  if (n < 2) throw InvalidArgument("unitriangular group needs n >= 2");
  for (std::size_t r = 0; r + 1 < n; ++r) gens_.push_back(elementary(r, r + 1, 1));
}

std::size_t UnitriangularGroup::slot(std::size_t r, std::size_t c) const {
  // Row r holds columns r+1..n-1; rows before it hold sum_{s<r} (n-1-s) slots.
  return r * (2 * n_ - r - 1) / 2 + (c - r - 1);
}

Element UnitriangularGroup::elementary(std::size_t row, std::size_t col, Coord value) const {
  if (row >= col || col >= n_) throw InvalidArgument("elementary entry must lie above the diagonal");
  Element e(slots_, 0);
  e[slot(row, col)] = value % q_;
  return e;
}

Element UnitriangularGroup::multiply(const Element& a, const Element& b) const {
  Element out(slots_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      std::uint64_t s = std::uint64_t{a[slot(i, j)]} + b[slot(i, j)];
      for (std::size_t l = i + 1; l < j; ++l) s += std::uint64_t{a[slot(i, l)]} * b[slot(l, j)] % q_;
      out[slot(i, j)] = static_cast<Coord>(s % q_);
    }
  }
  return out;
}

Element UnitriangularGroup::inverse(const Element& a) const {
  Element x(slots_, 0);
  for (std::size_t i = n_; i-- > 0;) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      std::uint64_t s = a[slot(i, j)];
      for (std::size_t l = i + 1; l < j; ++l) s += std::uint64_t{a[slot(i, l)]} * x[slot(l, j)] % q_;
      s %= q_;
      x[slot(i, j)] = static_cast<Coord>(s == 0 ? 0 : q_ - s);
    }
  }
  return x;
}

nlohmann::json UnitriangularGroup::describe() const {
  return {{"family", family()}, {"p", p_}, {"k", k_}, {"n", n_}};
}

// ---- SL_n congruence ----

CongruenceGroup::CongruenceGroup(FinLocalRing ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
  if (ring_.kind() == FinLocalRing::Kind::kCyclotomic) {
    throw InvalidArgument("congruence groups are built over Z/p^k or F_p[t]/t^k");
  }
  if (n_ < 2) throw InvalidArgument("SL_n needs n >= 2");
  const std::size_t w = ring_.width();
  std::vector<Coord> u(w), upow(w), tmp(w), one(w), d(w), dinv(w);
  ring_.uniformizer(u.data());
  ring_.one(one.data());
  upow = u;
  for (std::uint32_t j = 1; j < ring_.k(); ++j) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b) gens_.push_back(elementary(a, b, upow));
      }
    }
    ring_.add(one.data(), upow.data(), d.data());
    ring_.unit_inverse(d.data(), dinv.data());
    for (std::size_t r = 0; r + 1 < n_; ++r) {
      Element g = identity();
      std::copy(d.begin(), d.end(), g.begin() + static_cast<std::ptrdiff_t>((r * n_ + r) * w));
      std::copy(dinv.begin(), dinv.end(), g.begin() + static_cast<std::ptrdiff_t>(((r + 1) * n_ + r + 1) * w));
      gens_.push_back(std::move(g));
    }
    ring_.mul(upow.data(), u.data(), tmp.data());
    upow = tmp;
  }
}

Element CongruenceGroup::identity() const {
  const std::size_t w = ring_.width();
  Element e(n_ * n_ * w, 0);
  for (std::size_t i = 0; i < n_; ++i) ring_.one(e.data() + (i * n_ + i) * w);
  return e;
}

Element CongruenceGroup::elementary(std::size_t row, std::size_t col, const std::vector<Coord>& value) const {
  if (value.size() != ring_.width()) throw InvalidArgument("ring value has wrong width");
  Element e = identity();
  const std::size_t w = ring_.width();
  Coord* dst = e.data() + (row * n_ + col) * w;
  if (row == col) {
    std::vector<Coord> s(w);
    ring_.add(dst, value.data(), s.data());
    std::copy(s.begin(), s.end(), dst);
  } else {
    std::copy(value.begin(), value.end(), dst);
  }
  return e;
}

const Coord* CongruenceGroup::entry(const Element& g, std::size_t row, std::size_t col) const {
  return g.data() + (row * n_ + col) * ring_.width();
}

Element CongruenceGroup::multiply(const Element& a, const Element& b) const {
  const std::size_t w = ring_.width();
  Element out(n_ * n_ * w, 0);
  std::vector<Coord> prod(w), acc(w);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      ring_.zero(acc.data());
      for (std::size_t l = 0; l < n_; ++l) {
        ring_.mul(entry(a, i, l), entry(b, l, j), prod.data());
        ring_.add(acc.data(), prod.data(), acc.data());
      }
      std::copy(acc.begin(), acc.end(), out.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * w));
    }
  }
  return out;
}

Element CongruenceGroup::inverse(const Element& a) const {
  // Gauss-Jordan; diagonal entries stay units because a = 1 mod the maximal ideal.
  const std::size_t w = ring_.width();
  Element m = a;
  Element inv = identity();
  std::vector<Coord> pinv(w), f(w), t(w), s(w);
  auto at = [&](Element& x, std::size_t r, std::size_t c) { return x.data() + (r * n_ + c) * w; };
  for (std::size_t c = 0; c < n_; ++c) {
    if (!ring_.is_unit(at(m, c, c))) throw InvalidArgument("matrix is not invertible over the local ring");
    ring_.unit_inverse(at(m, c, c), pinv.data());
    for (std::size_t k = 0; k < n_; ++k) {
      ring_.mul(at(m, c, k), pinv.data(), t.data());
      std::copy(t.begin(), t.end(), at(m, c, k));
      ring_.mul(at(inv, c, k), pinv.data(), t.data());
      std::copy(t.begin(), t.end(), at(inv, c, k));
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || ring_.is_zero(at(m, r, c))) continue;
      std::copy(at(m, r, c), at(m, r, c) + w, f.begin());
      for (std::size_t k = 0; k < n_; ++k) {
        ring_.mul(f.data(), at(m, c, k), t.data());
        ring_.sub(at(m, r, k), t.data(), s.data());
        std::copy(s.begin(), s.end(), at(m, r, k));
        ring_.mul(f.data(), at(inv, c, k), t.data());
        ring_.sub(at(inv, r, k), t.data(), s.data());
        std::copy(s.begin(), s.end(), at(inv, r, k));
      }
    }
  }
  return inv;
}

std::uint64_t CongruenceGroup::log_order() const {
  return static_cast<std::uint64_t>(n_ * n_ - 1) * (ring_.k() - 1);
}

nlohmann::json CongruenceGroup::describe() const {
  return {{"family", family()},
          {"p", ring_.p()},
          {"k", ring_.k()},
          {"n", n_},
          {"ring", ring_.kind() == FinLocalRing::Kind::kIntegersModPk ? "zp" : "fpt"}};
}

std::optional<std::uint32_t> CongruenceGroup::congruence_level(const Element& g) const {
  const std::size_t w = ring_.width();
  std::vector<Coord> one(w), d(w);
  ring_.one(one.data());
  std::uint32_t level = ring_.k();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Coord* e = entry(g, i, j);
      if (i == j) {
        ring_.sub(e, one.data(), d.data());
        level = std::min(level, ring_.level(d.data()));
      } else {
        level = std::min(level, ring_.level(e));
      }
    }
  }
  return level;
}

std::optional<std::uint64_t> CongruenceGroup::congruence_log_index(std::uint32_t i) const {
  if (i < 1 || i > ring_.k()) return std::nullopt;
  return static_cast<std::uint64_t>(n_ * n_ - 1) * (i - 1);
}

std::vector<Coord> CongruenceGroup::determinant(const Element& g) const {
  // Expansion by permutations; n is small.
  const std::size_t w = ring_.width();
  std::vector<std::size_t> perm(n_);
  for (std::size_t i = 0; i < n_; ++i) perm[i] = i;
  std::vector<Coord> total(w, 0), term(w), t(w);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) inversions += perm[i] > perm[j];
    }
    ring_.one(term.data());
    for (std::size_t i = 0; i < n_; ++i) {
      ring_.mul(term.data(), entry(g, i, perm[i]), t.data());
      term = t;
    }
    if (inversions % 2) ring_.sub(total.data(), term.data(), t.data());
    else ring_.add(total.data(), term.data(), t.data());
    total = t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ---- cyclotomic semidirect product ----

CyclotomicSemidirect::CyclotomicSemidirect(std::uint32_t p, std::uint32_t m, std::uint32_t d, std::uint32_t k)
    : ring_(FinLocalRing::cyclotomic(p, m, k)), d_(d), k_(k), q_(pow_coord(p, k)), zeta_order_(pow_coord(p, m)) {
  if (d == 0) throw InvalidArgument("cyclotomic semidirect product needs d >= 1");
  const std::size_t w = ring_.width();
  std::vector<Coord> zeta(w), cur(w), next(w);
  ring_.one(zeta.data());
  std::vector<Coord> pi(w);
  ring_.uniformizer(pi.data());
  ring_.add(zeta.data(), pi.data(), zeta.data());
  ring_.one(cur.data());
  for (std::uint64_t e = 0; e < zeta_order_; ++e) {
    zeta_powers_.push_back(cur);
    ring_.mul(cur.data(), zeta.data(), next.data());
    cur = next;
  }
  if (!ring_.is_one(cur.data())) throw Error("zeta does not have the expected order");
  for (std::size_t j = 0; j < d_; ++j) gens_.push_back(s(j));
  for (std::size_t j = 0; j < w; ++j) gens_.push_back(a(j));
}

Element CyclotomicSemidirect::s(std::size_t j) const {
  Element e = identity();
  e.at(j) = 1 % q_;
  return e;
}

Element CyclotomicSemidirect::a(std::size_t j) const {
  // pi^j in the pi-basis is the j-th coordinate vector (j < phi).
  Element e = identity();
  e.at(d_ + j) = 1 % q_;
  return e;
}

std::vector<Coord> CyclotomicSemidirect::psi(const Element& g) const {
  return {g.begin() + d_, g.end()};
}

Element CyclotomicSemidirect::multiply(const Element& x, const Element& y) const {
  const std::size_t w = ring_.width();
  Element out(d_ + w);
  for (std::size_t j = 0; j < d_; ++j) out[j] = static_cast<Coord>((std::uint64_t{x[j]} + y[j]) % q_);
  const auto& z = zeta_powers_[y[0] % zeta_order_];
  std::vector<Coord> t(w);
  ring_.mul(x.data() + d_, z.data(), t.data());
  ring_.add(t.data(), y.data() + d_, out.data() + d_);
  return out;
}

Element CyclotomicSemidirect::inverse(const Element& x) const {
  const std::size_t w = ring_.width();
  Element out(d_ + w);
  for (std::size_t j = 0; j < d_; ++j) out[j] = x[j] == 0 ? 0 : q_ - x[j];
  const auto& z = zeta_powers_[(zeta_order_ - x[0] % zeta_order_) % zeta_order_];
  std::vector<Coord> t(w);
  ring_.mul(x.data() + d_, z.data(), t.data());
  ring_.neg(t.data(), out.data() + d_);
  return out;
}

std::uint64_t CyclotomicSemidirect::log_order() const {
  return static_cast<std::uint64_t>(d_) * k_ + ring_.width() * k_;
}

nlohmann::json CyclotomicSemidirect::describe() const {
  return {{"family", family()}, {"p", ring_.p()}, {"k", k_}, {"m", ring_.m()}, {"d", d_}};
}

// ---- direct product ----

DirectProduct::DirectProduct(std::vector<std::shared_ptr<const GroupOracle>> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("direct product needs at least one factor");
  for (const auto& f : factors_) {
    if (f->p() != factors_.front()->p()) throw InvalidArgument("direct product factors must share p");
    offsets_.push_back(total_);
    total_ += f->coords();
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& g : factors_[i]->generators()) gens_.push_back(embed(g, i));
  }
}

Element DirectProduct::identity() const {
  std::vector<Element> parts;
  for (const auto& f : factors_) parts.push_back(f->identity());
  return combine(parts);
}

Element DirectProduct::part(const Element& g, std::size_t i) const {
  const auto b = g.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
  return {b, b + static_cast<std::ptrdiff_t>(factors_[i]->coords())};
}

Element DirectProduct::embed(const Element& g, std::size_t i) const {
  Element e = identity();
  std::copy(g.begin(), g.end(), e.begin() + static_cast<std::ptrdiff_t>(offsets_[i]));
  return e;
}

Element DirectProduct::combine(const std::vector<Element>& parts) const {
  Element e;
  e.reserve(total_);
  for (const auto& p : parts) e.insert(e.end(), p.begin(), p.end());
  return e;
}

Element DirectProduct::multiply(const Element& a, const Element& b) const {
  std::vector<Element> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->multiply(part(a, i), part(b, i)));
  return combine(parts);
}

Element DirectProduct::inverse(const Element& a) const {
  std::vector<Element> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->inverse(part(a, i)));
  return combine(parts);
}

std::uint64_t DirectProduct::log_order() const {
  std::uint64_t s = 0;
  for (const auto& f : factors_) s += f->log_order();
  return s;
}

nlohmann::json DirectProduct::describe() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : factors_) fs.push_back(f->describe());
  return {{"family", family()}, {"p", p()}, {"factors", fs}};
}

std::optional<std::uint32_t> DirectProduct::congruence_level(const Element& g) const {
  std::optional<std::uint32_t> level;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto l = factors_[i]->congruence_level(part(g, i));
    if (!l) return std::nullopt;
    level = level ? std::min(*level, *l) : *l;
  }
  return level;
}

std::optional<std::uint64_t> DirectProduct::congruence_log_index(std::uint32_t i) const {
  std::uint64_t s = 0;
  for (const auto& f : factors_) {
    const auto l = f->congruence_log_index(i);
    if (!l) return std::nullopt;
    s += *l;
  }
  return s;
}

std::optional<std::uint32_t> DirectProduct::congruence_depth() const {
  std::optional<std::uint32_t> depth;
  for (const auto& f : factors_) {
    const auto d = f->congruence_depth();
    if (!d) return std::nullopt;
    depth = depth ? std::min(*depth, *d) : *d;
  }
  return depth;
}

}  // namespace hdlab::group
