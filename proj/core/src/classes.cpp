#include "charzero/classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "charzero/errors.hpp"

namespace charzero {

namespace {

Permutation perm_power(const Permutation& p, long long t) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation sq = p;
  while (t > 0) {
    if (t & 1) acc = compose(acc, sq);
    sq = compose(sq, sq);
    t >>= 1;
  }
  return acc;
}

}  // namespace

Classes Classes::compute(const Group& g, const ClassesOptions& opts) {
  const long long n = g.order();
  if (n > opts.enumeration_cap)
    throw CapExceededError("conjugacy classes: order " + std::to_string(n) +
                           " exceeds enumeration cap " + std::to_string(opts.enumeration_cap));

  Classes cl;
  cl.group_ = g;
  cl.slice_cache_ = std::make_shared<SliceCache>();

  std::vector<std::int32_t> table(static_cast<std::size_t>(n), -1);
  const auto& gens = g.generators();

  struct Found {
    Permutation rep;  // lexicographic minimum of the class
    long long size = 0;
    long long order = 0;
  };
  std::vector<Found> found;

  // Orbit closure under conjugation by generators, walked over element ranks.
  std::vector<long long> queue;
  for (long long r = 0; r < n; ++r) {
    if (table[static_cast<std::size_t>(r)] >= 0) continue;
    const auto id = static_cast<std::int32_t>(found.size());
    Found cur;
    cur.rep = g.element_at(r);
    cur.order = cur.rep.order();
    queue.clear();
    queue.push_back(r);
    table[static_cast<std::size_t>(r)] = id;
    while (!queue.empty()) {
      const long long qr = queue.back();
      queue.pop_back();
      ++cur.size;
      const Permutation x = g.element_at(qr);
      if (x.images() < cur.rep.images()) cur.rep = x;
      for (const Permutation& s : gens) {
        const long long cr = g.rank_of(conjugate(x, s));
        if (table[static_cast<std::size_t>(cr)] < 0) {
          table[static_cast<std::size_t>(cr)] = id;
          queue.push_back(cr);
        }
      }
    }
    found.push_back(std::move(cur));
  }

  // Canonical order and index remap.
  std::vector<int> idx(found.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    if (found[a].size != found[b].size) return found[a].size < found[b].size;
    return found[a].rep.images() < found[b].rep.images();
  });
  std::vector<std::int32_t> remap(found.size());
  for (std::size_t i = 0; i < idx.size(); ++i) remap[idx[i]] = static_cast<std::int32_t>(i);

  cl.reps_.reserve(found.size());
  cl.sizes_.reserve(found.size());
  cl.orders_.reserve(found.size());
  for (int i : idx) {
    cl.reps_.push_back(std::move(found[i].rep));
    cl.sizes_.push_back(found[i].size);
    cl.orders_.push_back(found[i].order);
  }
  for (auto& v : table) v = remap[v];
  if (n <= opts.lookup_cap) cl.class_by_rank_ = std::move(table);

  cl.slice_cache_->slices.resize(found.size());
  cl.inverse_class_.resize(found.size());
  for (int i = 0; i < cl.count(); ++i)
    cl.inverse_class_[i] = cl.class_of(cl.reps_[i].inverse());
  return cl;
}

int Classes::class_of(const Permutation& p) const {
  if (!class_by_rank_.empty())
    return class_by_rank_[static_cast<std::size_t>(group_.rank_of(p))];
  return class_of_by_walk(p);
}

int Classes::class_of_by_walk(const Permutation& p) const {
  // Walk the conjugation orbit of p until one of the stored representatives
  // shows up.  Memory is bounded by the class size.
  (void)group_.rank_of(p);  // membership check
  std::map<std::vector<int>, int> rep_lookup;
  const long long p_order = p.order();
  for (int i = 0; i < count(); ++i)
    if (orders_[i] == p_order) rep_lookup.emplace(reps_[i].images(), i);
  if (auto it = rep_lookup.find(p.images()); it != rep_lookup.end()) return it->second;

  std::unordered_set<long long> seen;
  std::vector<Permutation> queue{p};
  seen.insert(group_.rank_of(p));
  while (!queue.empty()) {
    const Permutation x = std::move(queue.back());
    queue.pop_back();
    for (const Permutation& s : group_.generators()) {
      Permutation c = conjugate(x, s);
      if (auto it = rep_lookup.find(c.images()); it != rep_lookup.end()) return it->second;
      const long long r = group_.rank_of(c);
      if (seen.insert(r).second) queue.push_back(std::move(c));
    }
  }
  throw InternalError("class_of: conjugation orbit missed every representative");
}

std::vector<int> Classes::power_map(long long t) const {
  if (t < 0) throw std::invalid_argument("power_map: negative exponent");
  std::vector<int> pm(count());
  for (int i = 0; i < count(); ++i)
    pm[i] = class_of(perm_power(reps_[i], t % orders_[i]));
  return pm;
}

const std::vector<std::vector<long long>>& Classes::constants_slice(int i) const {
  {
    std::lock_guard<std::mutex> lock(slice_cache_->mutex);
    if (slice_cache_->slices[i]) return *slice_cache_->slices[i];
  }
  const int k = count();
  auto slice = std::make_shared<std::vector<std::vector<long long>>>(
      k, std::vector<long long>(k, 0));

  // a_{ijk} counts x in C_i with x^{-1} * rep(k) in C_j: walk C_i once,
  // classifying x^{-1} * rep(k) for every k.
  std::unordered_set<long long> seen;
  std::vector<Permutation> queue{reps_[i]};
  seen.insert(group_.rank_of(reps_[i]));
  std::vector<int> xinv, prod;
  while (!queue.empty()) {
    const Permutation x = std::move(queue.back());
    queue.pop_back();
    invert_into(xinv, x.images());
    const Permutation xi = Permutation::from_images_unchecked(xinv);
    for (int kk = 0; kk < k; ++kk) {
      compose_into(prod, xi.images(), reps_[kk].images());
      const int j = class_of(Permutation::from_images_unchecked(prod));
      ++(*slice)[j][kk];
    }
    for (const Permutation& s : group_.generators()) {
      Permutation c = conjugate(x, s);
      const long long r = group_.rank_of(c);
      if (seen.insert(r).second) queue.push_back(std::move(c));
    }
  }

  std::lock_guard<std::mutex> lock(slice_cache_->mutex);
  if (!slice_cache_->slices[i]) slice_cache_->slices[i] = std::move(slice);
  return *slice_cache_->slices[i];
}

long long Classes::exponent() const {
  long long e = 1;
  for (long long o : orders_) e = std::lcm(e, o);
  return e;
}

}  // namespace charzero
