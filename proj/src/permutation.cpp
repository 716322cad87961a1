#include "belyi/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace belyi {

Permutation::Permutation(int degree) : img_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(d, 0);
  for (int v : img_) {
    if (v < 0 || v >= d || seen[v]) throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(const std::string& s, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ',')) ++i; };
  skip_ws();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i; skip_ws();
    if (i != s.size()) throw std::invalid_argument("trailing characters after identity");
    return Permutation(img);
  }
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= s.size()) throw std::invalid_argument("unterminated cycle");
      if (s[i] == ')') { ++i; break; }
      if (!std::isdigit((unsigned char)s[i])) throw std::invalid_argument("expected point in cycle");
      int v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("point out of range in cycle notation");
      cyc.push_back(v - 1);
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (img[from] != from) throw std::invalid_argument("point repeated across cycles");
      img[from] = to;
    }
  }
  return Permutation(img);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Permutation(inv);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, (long long)c.size());
  return static_cast<int>(ord);
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> res;
  std::vector<char> seen(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j]) { seen[j] = 1; c.push_back(j); j = img_[j]; }
    res.push_back(std::move(c));
  }
  return res;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
    os << ')';
  }
  return any ? os.str() : "e";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i]];
  return Permutation(img);
}

Permutation conjugate(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  // i^(tau^-1 sigma tau) computed without forming the inverse: image of
  // tau(j) is tau(sigma(j)).
  std::vector<int> img(sigma.degree());
  for (int j = 0; j < sigma.degree(); ++j) img[tau(j)] = tau(sigma(j));
  return Permutation(img);
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("cycle type must be nonempty");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("cycle type parts must be >= 1");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

CycleType CycleType::of(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(parts);
}

CycleType cycle_type(const Permutation& p) { return CycleType::of(p); }

CycleType CycleType::parse(const std::string& s) {
  std::vector<int> parts;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    if (!std::isdigit((unsigned char)s[i])) throw std::invalid_argument("bad class notation: " + s);
    int len = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) len = len * 10 + (s[i++] - '0');
    int exp = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i; skip_ws();
      if (i >= s.size() || !std::isdigit((unsigned char)s[i])) throw std::invalid_argument("bad exponent in class notation");
      exp = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) exp = exp * 10 + (s[i++] - '0');
    }
    if (len < 1 || exp < 1) throw std::invalid_argument("class notation parts must be positive");
    for (int k = 0; k < exp; ++k) parts.push_back(len);
  }
  if (parts.empty()) throw std::invalid_argument("empty class notation");
  return CycleType(parts);
}

int CycleType::multiplicity(int len) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), len));
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) os << ' ';
    os << parts_[i] << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

PermutationTriple::PermutationTriple(Permutation s0, Permutation s1, Permutation sInf)
    : s0_(std::move(s0)), s1_(std::move(s1)), sInf_(std::move(sInf)) {
  if (s0_.degree() != s1_.degree() || s0_.degree() != sInf_.degree())
    throw std::invalid_argument("triple components must share a degree");
  if (!(s0_ * s1_ * sInf_).is_identity())
    throw std::invalid_argument("sigma0*sigma1*sigmaInf != identity");
}

PermutationTriple PermutationTriple::from_two(const Permutation& s0, const Permutation& s1) {
  return PermutationTriple(s0, s1, (s0 * s1).inverse());
}

const Permutation& PermutationTriple::sigma(int i) const {
  switch (i) {
    case 0: return s0_;
    case 1: return s1_;
    case 2: return sInf_;
    default: throw std::out_of_range("sigma index");
  }
}

bool PermutationTriple::operator<(const PermutationTriple& o) const {
  if (s0_ == o.s0_) return s1_ < o.s1_;
  return s0_ < o.s0_;
}

int genus_of_types(const CycleType& c0, const CycleType& c1, const CycleType& cInf) {
  if (c0.degree() != c1.degree() || c0.degree() != cInf.degree())
    throw std::invalid_argument("cycle types must share a degree");
  const int d = c0.degree();
  const int esum = c0.excess() + c1.excess() + cInf.excess();
  if (esum % 2 != 0) throw std::invalid_argument("odd excess sum: not a ramification triple");
  return 1 - d + esum / 2;
}

int genus_of_triple(const PermutationTriple& t) {
  const int g = genus_of_types(cycle_type(t.s0()), cycle_type(t.s1()), cycle_type(t.sInf()));
  if (g < 0 && is_transitive(t))
    throw std::logic_error("negative genus for a transitive triple");
  return g;
}

bool is_transitive(const PermutationTriple& t) {
  return orbits({t.s0(), t.s1()}, t.degree()).size() == 1;
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree) {
  std::vector<std::vector<int>> res;
  std::vector<char> seen(degree, 0);
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb = {i};
    seen[i] = 1;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        int y = g(orb[k]);
        if (!seen[y]) { seen[y] = 1; orb.push_back(y); }
      }
    std::sort(orb.begin(), orb.end());
    res.push_back(std::move(orb));
  }
  return res;
}

PermutationTriple conjugate(const PermutationTriple& t, const Permutation& tau) {
  return PermutationTriple(conjugate(t.s0(), tau), conjugate(t.s1(), tau),
                           conjugate(t.sInf(), tau));
}

PermutationTriple canonical_form_brute(const PermutationTriple& t) {
  const int d = t.degree();
  std::vector<int> tau(d);
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<int> best0, best1;
  auto consider = [&](const Permutation& tp) {
    std::vector<int> c0(d), c1(d);
    for (int j = 0; j < d; ++j) { c0[tp(j)] = tp(t.s0()(j)); c1[tp(j)] = tp(t.s1()(j)); }
    if (best0.empty() || c0 < best0 || (c0 == best0 && c1 < best1)) {
      best0 = std::move(c0);
      best1 = std::move(c1);
    }
  };
  do {
    consider(Permutation(tau));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return PermutationTriple::from_two(Permutation(best0), Permutation(best1));
}

namespace {

// Backtracking minimal-image search.  Builds the relabeling new <- old one
// key entry at a time; the key is the concatenation of sigma0's then
// sigma1's image table in the new labels.  Labels are handed out in first
// encounter order along the key, so the only branch points are the choices
// of which old point receives the next fresh label.
struct CanonSearch {
  const Permutation &s0, &s1;
  int d;
  std::vector<int> best;   // best key so far (2d entries), empty = none
  std::vector<int> lab;    // old -> new, -1 unset
  std::vector<int> inv;    // new -> old, -1 unset
  std::vector<int> key;    // current partial key
  int assigned = 0;

  CanonSearch(const Permutation& a, const Permutation& b)
      : s0(a), s1(b), d(a.degree()), lab(d, -1), inv(d, -1) {}

  const Permutation& sig(int which) const { return which == 0 ? s0 : s1; }

  void run() {
    key.reserve(2 * d);
    for (int start = 0; start < d; ++start) {
      give_label(start);
      extend(0);
      take_label(start);
    }
  }

  void give_label(int old_pt) {
    lab[old_pt] = assigned;
    inv[assigned] = old_pt;
    ++assigned;
  }
  void take_label(int old_pt) {
    --assigned;
    inv[assigned] = -1;
    lab[old_pt] = -1;
  }

  // The prefix key[0..pos-1] never exceeds best's prefix: branches that
  // would exceed it are cut as soon as the offending entry appears.
  bool bounded_by_best(int pos, int entry) const {
    if (best.empty()) return true;
    for (int i = 0; i < pos; ++i) {
      if (key[i] < best[i]) return true;   // strictly ahead, no bound
      if (key[i] > best[i]) return false;  // unreachable by construction
    }
    return entry <= best[pos];
  }

  // pos in [0, 2d): key entry pos describes sigma_{pos/d}'(pos%d).
  void extend(int pos) {
    if (pos == 2 * d) {
      if (best.empty() || key < best) best = key;
      return;
    }
    const int which = pos / d, newpt = pos % d;
    int old_pt = inv[newpt];
    if (old_pt < 0) {
      // newpt was never an image so far; it must be seeded by choosing an
      // unlabeled old point.  Try all of them.
      for (int cand = 0; cand < d; ++cand) {
        if (lab[cand] >= 0) continue;
        give_label(cand);
        extend(pos);
        take_label(cand);
      }
      return;
    }
    int img_old = sig(which)(old_pt);
    bool fresh = lab[img_old] < 0;
    if (fresh) give_label(img_old);
    int entry = lab[img_old];
    if (bounded_by_best(pos, entry)) {
      key.push_back(entry);
      extend(pos + 1);
      key.pop_back();
    }
    if (fresh) take_label(img_old);
  }
};

}  // namespace

PermutationTriple canonical_form(const PermutationTriple& t, int brute_limit) {
  const int d = t.degree();
  if (d <= brute_limit && d <= 9) return canonical_form_brute(t);
  CanonSearch cs(t.s0(), t.s1());
  cs.run();
  std::vector<int> c0(cs.best.begin(), cs.best.begin() + d);
  std::vector<int> c1(cs.best.begin() + d, cs.best.end());
  return PermutationTriple::from_two(Permutation(c0), Permutation(c1));
}

std::vector<Permutation> automorphisms(const PermutationTriple& t) {
  const int d = t.degree();
  const Permutation &a = t.s0(), &b = t.s1();
  std::vector<Permutation> res;
  std::vector<int> tau(d, -1), used(d, 0);

  // Propagate tau through the commutation constraints tau(i^s) = tau(i)^s.
  // Returns the list of points assigned (for rollback), or nullopt on clash.
  auto propagate = [&](int seed_from, int seed_to, std::vector<int>& log) -> bool {
    std::vector<int> queue;
    auto assign = [&](int from, int to) -> bool {
      if (tau[from] >= 0) return tau[from] == to;
      if (used[to]) return false;
      tau[from] = to;
      used[to] = 1;
      log.push_back(from);
      queue.push_back(from);
      return true;
    };
    if (!assign(seed_from, seed_to)) return false;
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      if (!assign(a(i), a(tau[i]))) return false;
      if (!assign(b(i), b(tau[i]))) return false;
    }
    return true;
  };

  std::function<void(int)> search = [&](int i) {
    while (i < d && tau[i] >= 0) ++i;
    if (i == d) {
      res.emplace_back(tau);
      return;
    }
    for (int to = 0; to < d; ++to) {
      if (used[to]) continue;
      std::vector<int> log;
      if (propagate(i, to, log)) search(i + 1);
      for (int f : log) { used[tau[f]] = 0; tau[f] = -1; }
    }
  };
  search(0);
  std::sort(res.begin(), res.end());
  return res;
}

namespace {

// Stabilizer chain with incremental sifting (deterministic Schreier-Sims).
// Level i holds generators known to fix bases b_0..b_{i-1}; the group at
// level i is generated by the union of generator lists from level i down.
struct StabChain {
  int d;
  std::vector<int> bases;
  std::vector<std::vector<Permutation>> gens;        // per level
  std::vector<std::vector<int>> where;               // point -> orbit index
  std::vector<std::vector<Permutation>> transversal; // base -> point maps

  explicit StabChain(int degree) : d(degree) {}

  std::vector<Permutation> level_gens(size_t i) const {
    std::vector<Permutation> out;
    for (size_t j = i; j < gens.size(); ++j)
      out.insert(out.end(), gens[j].begin(), gens[j].end());
    return out;
  }

  void recompute_orbit(size_t i) {
    auto gs = level_gens(i);
    where[i].assign(d, -1);
    std::vector<int> orbit = {bases[i]};
    where[i][bases[i]] = 0;
    transversal[i] = {Permutation(d)};
    for (size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gs) {
        int y = g(orbit[k]);
        if (where[i][y] < 0) {
          where[i][y] = static_cast<int>(orbit.size());
          orbit.push_back(y);
          transversal[i].push_back(transversal[i][k] * g);
        }
      }
  }

  // Sift g through levels starting at `from`; returns the residue and the
  // level where sifting stopped.
  std::pair<Permutation, size_t> sift(Permutation g, size_t from) const {
    size_t i = from;
    for (; i < bases.size(); ++i) {
      if (where[i].empty()) break;
      int img = g(bases[i]);
      if (where[i][img] < 0) break;
      g = g * transversal[i][where[i][img]].inverse();
    }
    return {std::move(g), i};
  }

  void add_generator(const Permutation& g, size_t level) {
    while (bases.size() <= level) {
      // choose a base point moved by g that is not already a base
      int b = -1;
      for (int p = 0; p < d && b < 0; ++p)
        if (g(p) != p) b = p;
      if (b < 0) return;  // identity
      bases.push_back(b);
      gens.emplace_back();
      where.emplace_back();
      transversal.emplace_back();
    }
    gens[level].push_back(g);
    for (size_t i = 0; i <= level; ++i) recompute_orbit(i);
  }

  bool closed_at(size_t i) {
    recompute_orbit(i);
    auto gs = level_gens(i);
    for (int p = 0; p < d; ++p) {
      if (where[i][p] < 0) continue;
      const Permutation& u = transversal[i][where[i][p]];
      for (const auto& g : gs) {
        Permutation s = u * g * transversal[i][where[i][g(p)]].inverse();
        auto [res, lvl] = sift(std::move(s), i + 1);
        if (!res.is_identity()) {
          add_generator(res, std::min(lvl, bases.size()));
          return false;
        }
      }
    }
    return true;
  }

  void build(const std::vector<Permutation>& initial) {
    for (const auto& g : initial) {
      auto [res, lvl] = sift(g, 0);
      if (!res.is_identity()) add_generator(res, std::min(lvl, bases.size()));
    }
    // Fixpoint over all levels, deepest first.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (size_t i = bases.size(); i-- > 0;) {
        if (!closed_at(i)) { stable = false; break; }
      }
    }
    for (size_t i = 0; i < bases.size(); ++i) recompute_orbit(i);
  }

  mpz_class order() const {
    mpz_class o = 1;
    for (size_t i = 0; i < bases.size(); ++i)
      o *= static_cast<long>(transversal[i].size());
    return o;
  }
};

}  // namespace

mpz_class group_order(const std::vector<Permutation>& gens_in, int degree_cap) {
  if (gens_in.empty()) return 1;
  const int d = gens_in[0].degree();
  if (d > degree_cap)
    throw std::invalid_argument("group_order: degree exceeds configured cap");
  StabChain chain(d);
  chain.build(gens_in);
  return chain.order();
}

mpz_class group_order(const PermutationTriple& t, int degree_cap) {
  return group_order(std::vector<Permutation>{t.s0(), t.s1()}, degree_cap);
}

Passport passport_of(const PermutationTriple& t) {
  Passport p;
  p.c0 = cycle_type(t.s0());
  p.c1 = cycle_type(t.s1());
  p.cInf = cycle_type(t.sInf());
  p.genus = genus_of_triple(t);
  p.transitive = is_transitive(t);
  p.group_order = group_order(t);
  const int d = t.degree();
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), d);
  if (p.group_order == fact) p.group_tag = "S_" + std::to_string(d);
  else if (2 * p.group_order == fact && d >= 3) p.group_tag = "A_" + std::to_string(d);
  else p.group_tag = "order-" + p.group_order.get_str() + (p.transitive ? " transitive" : "");
  return p;
}

}  // namespace belyi
