#include "belyi/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "belyi/charmass.hpp"

namespace belyi {

mpq_class EnumerationResult::total_mass() const {
  mpq_class s = 0;
  for (const auto& a : aut_orders) {
    mpq_class t(1, a);
    t.canonicalize();
    s += t;
  }
  return s;
}

long EnumerationResult::transitive_count(std::optional<mpz_class> filter) const {
  long n = 0;
  for (size_t i = 0; i < representatives.size(); ++i) {
    if (!transitive_flags[i]) continue;
    if (filter && group_orders[i] != *filter) continue;
    ++n;
  }
  return n;
}

namespace {

// Enumerates permutations of the given type by building disjoint cycles.
// The cycle containing the smallest unplaced point is chosen first; its
// length runs over the distinct lengths still to be placed, which makes
// every permutation appear exactly once.
struct TypeEnum {
  int d;
  std::vector<int> img;
  std::vector<char> used;
  std::map<int, int, std::greater<int>> remaining;  // length -> count
  const std::function<bool(const Permutation&)>& fn;
  bool stopped = false;

  TypeEnum(const CycleType& c, const std::function<bool(const Permutation&)>& f)
      : d(c.degree()), img(c.degree()), used(c.degree(), 0), fn(f) {
    for (int p : c.parts()) remaining[p]++;
  }

  void run() {
    std::iota(img.begin(), img.end(), 0);
    place_next_cycle();
  }

  void place_next_cycle() {
    if (stopped) return;
    int leader = -1;
    for (int i = 0; i < d; ++i)
      if (!used[i]) { leader = i; break; }
    if (leader < 0) {
      if (!fn(Permutation(img))) stopped = true;
      return;
    }
    for (auto it = remaining.begin(); it != remaining.end() && !stopped; ++it) {
      if (it->second == 0) continue;
      it->second--;
      used[leader] = 1;
      extend_cycle(leader, leader, it->first - 1);
      used[leader] = 0;
      it->second++;
    }
  }

  // cur is the last point placed on the cycle; `left` more points to add,
  // then close the cycle back to `leader`.
  void extend_cycle(int leader, int cur, int left) {
    if (stopped) return;
    if (left == 0) {
      img[cur] = leader;
      place_next_cycle();
      return;
    }
    for (int nxt = 0; nxt < d && !stopped; ++nxt) {
      if (used[nxt]) continue;
      used[nxt] = 1;
      img[cur] = nxt;
      extend_cycle(leader, nxt, left - 1);
      used[nxt] = 0;
    }
    img[cur] = cur;
  }
};

}  // namespace

void for_each_permutation_of_type(const CycleType& c,
                                  const std::function<bool(const Permutation&)>& fn) {
  TypeEnum te(c, fn);
  te.run();
}

std::vector<Permutation> permutations_of_type(const CycleType& c, int degree_cap) {
  if (c.degree() > degree_cap)
    throw std::invalid_argument("permutations_of_type: degree exceeds cap");
  std::vector<Permutation> out;
  for_each_permutation_of_type(c, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Permutation fixed_representative(const CycleType& c) {
  std::vector<int> img(c.degree());
  int pos = 0;
  for (int len : c.parts()) {
    for (int i = 0; i < len; ++i) img[pos + i] = pos + (i + 1) % len;
    pos += len;
  }
  return Permutation(img);
}

std::vector<Permutation> centralizer_generators(const CycleType& c) {
  const int d = c.degree();
  std::vector<Permutation> gens;
  // cycle offsets
  std::vector<std::pair<int, int>> blocks;  // (start, len), longest first
  int pos = 0;
  for (int len : c.parts()) { blocks.emplace_back(pos, len); pos += len; }
  for (auto [s, len] : blocks) {
    if (len == 1) continue;
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < len; ++i) img[s + i] = s + (i + 1) % len;
    gens.emplace_back(img);
  }
  for (size_t b = 0; b + 1 < blocks.size(); ++b) {
    auto [s1, l1] = blocks[b];
    auto [s2, l2] = blocks[b + 1];
    if (l1 != l2) continue;
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < l1; ++i) { img[s1 + i] = s2 + i; img[s2 + i] = s1 + i; }
    gens.emplace_back(img);
  }
  if (gens.empty()) gens.push_back(Permutation(d));
  return gens;
}

EnumerationResult triples_with_classes(const CycleType& c0, const CycleType& c1,
                                       const CycleType& cInf, const EnumOptions& opt) {
  if (c0.degree() != c1.degree() || c0.degree() != cInf.degree())
    throw std::invalid_argument("triples_with_classes: degree mismatch");
  EnumerationResult res;
  res.c0 = c0; res.c1 = c1; res.cInf = cInf;
  res.degree = c0.degree();
  if (c0.sign() * c1.sign() != cInf.sign()) return res;  // parity obstruction
  if (c0.degree() > opt.degree_cap)
    throw std::invalid_argument("triples_with_classes: degree exceeds cap");
  if (class_size(c1) > opt.class_budget)
    throw std::invalid_argument(
        "triples_with_classes: class too large to scan; use frobenius_mass for an estimate");

  const Permutation tau0 = fixed_representative(c0);
  const int d = res.degree;

  // scan; the type check is allocation-free since it runs class_size(c1) times
  std::vector<Permutation> kept;
  mpz_class emitted = 0;
  const auto& target = cInf.parts();
  std::vector<int> prod(d), lens;
  std::vector<char> seen(d);
  lens.reserve(d);
  for_each_permutation_of_type(c1, [&](const Permutation& s1) {
    ++emitted;
    const auto& a = tau0.images();
    const auto& b = s1.images();
    for (int i = 0; i < d; ++i) prod[i] = b[a[i]];
    std::fill(seen.begin(), seen.end(), 0);
    lens.clear();
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) { seen[j] = 1; j = prod[j]; ++len; }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    if (std::equal(lens.begin(), lens.end(), target.begin(), target.end()))
      kept.push_back(s1);
    return true;
  });
  res.stream_count = emitted;

  // orbit partition of kept under conjugation by the centralizer of tau0
  const auto cgens = centralizer_generators(c0);
  const mpz_class cent_order = centralizer_order(c0);
  std::set<Permutation> pool(kept.begin(), kept.end());
  struct Rep { Permutation s1; mpz_class aut; };
  std::vector<Rep> reps;
  while (!pool.empty()) {
    Permutation seed = *pool.begin();
    std::set<Permutation> orbit;
    std::vector<Permutation> queue = {seed};
    orbit.insert(seed);
    while (!queue.empty()) {
      Permutation cur = queue.back();
      queue.pop_back();
      for (const auto& g : cgens) {
        Permutation im = conjugate(cur, g);
        if (orbit.insert(im).second) queue.push_back(im);
      }
    }
    Permutation least = *orbit.begin();
    for (const auto& x : orbit) pool.erase(x);
    mpz_class aut = cent_order / static_cast<long>(orbit.size());
    reps.push_back({least, aut});
  }
  std::sort(reps.begin(), reps.end(),
            [](const Rep& a, const Rep& b) { return a.s1 < b.s1; });

  for (const auto& r : reps) {
    PermutationTriple t = PermutationTriple::from_two(tau0, r.s1);
    res.representatives.push_back(canonical_form(t));
    res.aut_orders.push_back(r.aut);
    res.transitive_flags.push_back(is_transitive(t));
    res.group_orders.push_back(group_order(t));
  }
  return res;
}

long passport_size(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                   std::optional<mpz_class> group_order_filter, const EnumOptions& opt) {
  return triples_with_classes(c0, c1, cInf, opt).transitive_count(group_order_filter);
}

long degree_bound(const CycleType& c0, const CycleType& c1, const CycleType& cInf,
                  const EnumOptions& opt) {
  long n = passport_size(c0, c1, cInf, std::nullopt, opt);
  if (n < 1)
    throw std::invalid_argument("degree_bound: empty passport");
  return n;
}

}  // namespace belyi
