#include "charzero/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "charzero/errors.hpp"

namespace charzero {

namespace {

int smallest_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return -1;
}

void recompute_orbit(Bsgs& b, int level) {
  BsgsLevel& lv = b.levels[level];
  lv.orbit.clear();
  lv.orbit_pos.assign(b.degree, -1);
  lv.transversal.clear();
  lv.transversal_inv.clear();

  lv.orbit.push_back(lv.base);
  lv.orbit_pos[lv.base] = 0;
  lv.transversal.push_back(Permutation::identity(b.degree));
  lv.transversal_inv.push_back(lv.transversal.back());

  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    const int x = lv.orbit[qi];
    for (const Permutation& s : lv.gens) {
      const int y = s[x];
      if (lv.orbit_pos[y] < 0) {
        lv.orbit_pos[y] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(compose(lv.transversal[qi], s));
        lv.transversal_inv.push_back(lv.transversal.back().inverse());
      }
    }
  }
}

void append_level(Bsgs& b, int base) {
  BsgsLevel lv;
  lv.base = base;
  lv.orbit_pos.assign(b.degree, -1);
  b.levels.push_back(std::move(lv));
}

// Sifts h through levels[from ..]; returns the residue and the level where
// sifting stopped (levels.size() when every level was passed).
std::pair<Permutation, int> sift_from(const Bsgs& b, Permutation h, int from) {
  for (int l = from; l < static_cast<int>(b.levels.size()); ++l) {
    const BsgsLevel& lv = b.levels[l];
    const int pos = lv.orbit_pos[h[lv.base]];
    if (pos < 0) return {std::move(h), l};
    h = compose(h, lv.transversal_inv[pos]);
  }
  return {std::move(h), static_cast<int>(b.levels.size())};
}

}  // namespace

Bsgs::SiftResult Bsgs::sift(const Permutation& p) const {
  auto [res, level] = sift_from(*this, p, 0);
  const bool member = level == static_cast<int>(levels.size()) && res.is_identity();
  return SiftResult{std::move(res), level, member};
}

bool Bsgs::is_member(const Permutation& p) const {
  if (p.degree() != degree)
    throw std::invalid_argument("membership test: degree mismatch");
  return sift(p).member;
}

long long Bsgs::rank_of(const Permutation& p) const {
  Permutation h = p;
  long long rank = 0;
  long long weight = 1;
  for (const BsgsLevel& lv : levels) {
    const int pos = lv.orbit_pos[h[lv.base]];
    if (pos < 0) throw std::invalid_argument("rank_of: permutation is not a member");
    rank += weight * pos;
    weight *= static_cast<long long>(lv.orbit.size());
    h = compose(h, lv.transversal_inv[pos]);
  }
  if (!h.is_identity())
    throw std::invalid_argument("rank_of: permutation is not a member");
  return rank;
}

Permutation Bsgs::element_at(long long rank) const {
  if (rank < 0 || rank >= order)
    throw std::invalid_argument("element_at: rank out of range");
  // element = u_{m-1} * ... * u_0 with the deepest transversal factor acting first
  Permutation acc = Permutation::identity(degree);
  long long weight = 1;
  std::vector<int> pos(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    pos[l] = static_cast<int>((rank / weight) % static_cast<long long>(levels[l].orbit.size()));
    weight *= static_cast<long long>(levels[l].orbit.size());
  }
  for (int l = static_cast<int>(levels.size()) - 1; l >= 0; --l)
    acc = compose(acc, levels[l].transversal[pos[l]]);
  return acc;
}

Bsgs build_bsgs(int degree, const std::vector<Permutation>& generators) {
  Bsgs b;
  b.degree = degree;

  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return b;  // trivial group: empty chain, order 1

  int base = degree;
  for (const Permutation& g : gens) base = std::min(base, smallest_moved_point(g));
  append_level(b, base);
  b.levels[0].gens = std::move(gens);
  recompute_orbit(b, 0);

  // Deterministic Schreier-Sims: verify each level's Schreier generators
  // against the deeper chain, inserting residues as new strong generators and
  // re-verifying from the insertion point.
  int i = 0;
  while (i >= 0) {
    bool dirty = false;
    for (std::size_t xi = 0; xi < b.levels[i].orbit.size() && !dirty; ++xi) {
      for (std::size_t si = 0; si < b.levels[i].gens.size() && !dirty; ++si) {
        const BsgsLevel& lv = b.levels[i];
        const Permutation& s = lv.gens[si];
        const int y = s[lv.orbit[xi]];
        Permutation sg = compose(compose(lv.transversal[xi], s),
                                 lv.transversal_inv[lv.orbit_pos[y]]);
        if (sg.is_identity()) continue;
        auto [res, stuck] = sift_from(b, std::move(sg), i + 1);
        if (res.is_identity()) continue;
        if (stuck == static_cast<int>(b.levels.size()))
          append_level(b, smallest_moved_point(res));
        for (int l = i + 1; l <= stuck; ++l) {
          b.levels[l].gens.push_back(res);
          recompute_orbit(b, l);
        }
        i = stuck;
        dirty = true;
      }
    }
    if (!dirty) --i;
  }

  b.order = 1;
  for (const BsgsLevel& lv : b.levels)
    b.order *= static_cast<long long>(lv.orbit.size());
  return b;
}

Group::Group(int degree, std::vector<Permutation> generators, std::string name)
    : degree_(degree), name_(std::move(name)), gens_(std::move(generators)) {
  if (degree_ < 1) throw std::invalid_argument("group degree must be >= 1");
  for (const Permutation& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

Group Group::trivial(int degree, std::string name) {
  return Group(degree, {}, std::move(name));
}

const Bsgs& Group::bsgs() const {
  if (!bsgs_) bsgs_ = std::make_shared<const Bsgs>(build_bsgs(degree_, gens_));
  return *bsgs_;
}

long long Group::order() const { return bsgs().order; }

bool Group::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return bsgs().is_member(p);
}

void Group::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  const Bsgs& b = bsgs();
  const int m = static_cast<int>(b.levels.size());
  if (m == 0) {
    fn(Permutation::identity(degree_));
    return;
  }
  // Depth-first over transversal choices, deepest level outermost, sharing
  // prefix products; visits elements in increasing rank order.
  std::vector<Permutation> acc(m + 1);
  acc[m] = Permutation::identity(degree_);
  std::vector<int> pos(m, 0);
  int l = m - 1;
  while (true) {
    if (pos[l] < static_cast<int>(b.levels[l].orbit.size())) {
      acc[l] = compose(acc[l + 1], b.levels[l].transversal[pos[l]]);
      if (l == 0) {
        fn(acc[0]);
        ++pos[0];
      } else {
        --l;
        pos[l] = 0;
      }
    } else {
      ++l;
      if (l == m) return;
      ++pos[l];
    }
  }
}

std::vector<Permutation> Group::elements(long long cap) const {
  if (order() > cap)
    throw CapExceededError("element enumeration: order " + std::to_string(order()) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation Group::random_element(Rng& rng) const {
  const Bsgs& b = bsgs();
  Permutation acc = Permutation::identity(degree_);
  for (int l = static_cast<int>(b.levels.size()) - 1; l >= 0; --l) {
    const BsgsLevel& lv = b.levels[l];
    const std::size_t pos = static_cast<std::size_t>(rng.below(lv.orbit.size()));
    acc = compose(acc, lv.transversal[pos]);
  }
  return acc;
}

bool contains_subgroup(const Group& g, const Group& h) {
  if (g.degree() != h.degree()) return false;
  for (const Permutation& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

bool same_subgroup(const Group& a, const Group& b) {
  return a.order() == b.order() && contains_subgroup(a, b);
}

}  // namespace charzero
