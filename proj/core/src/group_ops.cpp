#include "effchar/group_ops.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>

#include "effchar/errors.hpp"
#include "effchar/limits.hpp"

namespace effchar {

namespace {

std::vector<std::uint64_t> cycle_type(const Permutation &p) {
  std::vector<std::uint64_t> lens;
  for (const auto &c : p.cycles())
    lens.push_back(c.size());
  std::sort(lens.begin(), lens.end());
  return lens;
}

// Length of the cycle of `a` through each point.
std::vector<int> cycle_length_at(const Permutation &a) {
  std::vector<int> len(a.degree(), 1);
  std::vector<bool> seen(a.degree(), false);
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[i])
      continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = a(j);
    }
    for (int p : cyc)
      len[p] = static_cast<int>(cyc.size());
  }
  return len;
}

struct VecIntHash {
  std::size_t operator()(const std::vector<int> &v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> conjugated_key(const std::vector<Permutation> &elems,
                                const Permutation &g) {
  std::vector<Permutation> conj;
  conj.reserve(elems.size());
  for (const Permutation &e : elems)
    conj.push_back(e.conjugated_by(g));
  std::sort(conj.begin(), conj.end());
  std::vector<int> key;
  key.reserve(conj.size() * static_cast<std::size_t>(g.degree()));
  for (const Permutation &e : conj)
    key.insert(key.end(), e.images().begin(), e.images().end());
  return key;
}

} // namespace

std::optional<Permutation> conjugator(const PermutationGroup &G,
                                      const Permutation &a, const Permutation &b) {
  if (!G.contains(a) || !G.contains(b))
    throw PreconditionError("conjugator: elements must lie in the group");
  const int n = G.degree();
  if (cycle_type(a) != cycle_type(b))
    return std::nullopt;
  if (a == b)
    return Permutation::identity(n);

  // Base adapted to the cycles of a, so t(a(x)) = b(t(x)) pins each next
  // base image once the cycle's start is chosen.
  std::vector<int> preferred;
  for (const auto &cyc : a.cycles())
    for (int p1 : cyc)
      preferred.push_back(p1 - 1);
  PermutationGroup chain_group =
      PermutationGroup::from_generators_with_base(n, G.generators(), preferred);
  const auto &levels = chain_group.chain();

  std::vector<int> alen = cycle_length_at(a);
  std::vector<int> blen = cycle_length_at(b);

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::optional<Permutation> found;

  // Assign t(p) = c plus everything forced along the a-cycle of p; records
  // assignments for undo; fails on any clash.
  auto propagate = [&](int p, int c, std::vector<int> &undo) -> bool {
    int x = p, y = c;
    while (true) {
      if (img[x] != -1) {
        if (img[x] != y)
          return false;
        break;
      }
      if (used[y] || alen[x] != blen[y])
        return false;
      img[x] = y;
      used[y] = true;
      undo.push_back(x);
      x = a(x);
      y = b(y);
      if (x == p)
        break;
    }
    return true;
  };

  std::function<bool(std::size_t, const Permutation &)> search =
      [&](std::size_t k, const Permutation &partial) -> bool {
    if (k == levels.size()) {
      if (partial * a == b * partial) {
        found = partial;
        return true;
      }
      return false;
    }
    const StabilizerLevel &level = levels[k];
    int beta = level.base_point;
    std::vector<int> orbit = level.orbit;
    std::sort(orbit.begin(), orbit.end());
    for (int x : orbit) {
      int c = partial(x);
      if (img[beta] != -1 && img[beta] != c)
        continue;
      std::vector<int> undo;
      bool ok = img[beta] != -1 ? true : propagate(beta, c, undo);
      if (ok && search(k + 1, partial * level.rep(x)))
        return true;
      for (int p : undo) {
        used[img[p]] = false;
        img[p] = -1;
      }
    }
    return false;
  };

  search(0, Permutation::identity(n));
  return found;
}

std::optional<Permutation> conjugator_exhaustive(const PermutationGroup &G,
                                                 const Permutation &a,
                                                 const Permutation &b) {
  if (!G.contains(a) || !G.contains(b))
    throw PreconditionError("conjugator: elements must lie in the group");
  std::optional<Permutation> found;
  G.for_each_element([&](const Permutation &t) {
    if (!found && t * a == b * t)
      found = t;
  });
  return found;
}

PermutationGroup centralizer(const PermutationGroup &G, const Permutation &s) {
  if (G.order() > limits::kElementCap)
    throw CapExceededError("centralizer cap exceeded: group order " +
                           std::to_string(G.order()));
  if (s.degree() != G.degree())
    throw PreconditionError("centralizer: degree mismatch");

  // Orbit-stabilizer on the conjugation action; Schreier generators of the
  // stabilizer of s are exactly the centralizer.
  std::unordered_map<Permutation, std::size_t, PermHash> index;
  std::vector<Permutation> orbit{s};
  std::vector<Permutation> reps{Permutation::identity(G.degree())};
  index.emplace(s, 0);
  GroupBuilder stab(G.degree());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation &g : G.generators()) {
      Permutation x = orbit[i].conjugated_by(g);
      auto it = index.find(x);
      if (it == index.end()) {
        index.emplace(x, orbit.size());
        orbit.push_back(std::move(x));
        reps.push_back(g * reps[i]);
      } else {
        Permutation schreier = reps[it->second].inverse() * (g * reps[i]);
        stab.add(schreier);
      }
    }
  }
  assert(stab.group().order() * orbit.size() == G.order());
  return stab.group();
}

PermutationGroup centralizer(const PermutationGroup &G, const PermutationGroup &S) {
  if (!S.is_subgroup_of(G))
    throw PreconditionError("centralizer: S is not a subgroup of G");
  PermutationGroup C = G;
  for (const Permutation &s : S.generators())
    C = centralizer(C, s);
  return C;
}

PermutationGroup center(const PermutationGroup &G) { return centralizer(G, G); }

PermutationGroup normalizer(const PermutationGroup &G, const PermutationGroup &H) {
  if (!H.is_subgroup_of(G))
    throw PreconditionError("normalizer: H is not a subgroup of G");
  if (G.order() > limits::kElementCap)
    throw CapExceededError("normalizer cap exceeded: group order " +
                           std::to_string(G.order()));
  if (H.is_trivial())
    return G;

  std::vector<Permutation> h_elems = H.elements();

  std::unordered_map<std::vector<int>, std::size_t, VecIntHash> index;
  std::vector<std::vector<Permutation>> orbit;
  std::vector<Permutation> reps;

  std::vector<Permutation> start = h_elems;
  std::sort(start.begin(), start.end());
  std::vector<int> key0;
  for (const Permutation &e : start)
    key0.insert(key0.end(), e.images().begin(), e.images().end());
  index.emplace(std::move(key0), 0);
  orbit.push_back(std::move(start));
  reps.push_back(Permutation::identity(G.degree()));

  GroupBuilder stab(G.degree());
  for (const Permutation &h : H.generators())
    stab.add(h); // H normalizes itself
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation &g : G.generators()) {
      std::vector<Permutation> conj;
      conj.reserve(orbit[i].size());
      for (const Permutation &e : orbit[i])
        conj.push_back(e.conjugated_by(g));
      std::sort(conj.begin(), conj.end());
      std::vector<int> key;
      for (const Permutation &e : conj)
        key.insert(key.end(), e.images().begin(), e.images().end());
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(std::move(key), orbit.size());
        orbit.push_back(std::move(conj));
        reps.push_back(g * reps[i]);
      } else {
        Permutation schreier = reps[it->second].inverse() * (g * reps[i]);
        stab.add(schreier);
      }
    }
  }
  assert(stab.group().order() * orbit.size() == G.order());
  return stab.group();
}

PermutationGroup normal_closure(const PermutationGroup &G,
                                const std::vector<Permutation> &seed) {
  for (const Permutation &s : seed)
    if (!G.contains(s))
      throw PreconditionError("normal_closure: seed element outside the group");
  GroupBuilder builder(G.degree());
  std::deque<Permutation> todo;
  for (const Permutation &s : seed)
    if (builder.add(s))
      todo.push_back(s);
  while (!todo.empty()) {
    Permutation u = std::move(todo.front());
    todo.pop_front();
    for (const Permutation &g : G.generators()) {
      Permutation c = u.conjugated_by(g);
      if (builder.add(c))
        todo.push_back(std::move(c));
    }
  }
  return builder.group();
}

PermutationGroup derived_subgroup(const PermutationGroup &G) {
  std::vector<Permutation> comms;
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j)
        continue;
      Permutation c = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

bool is_normal_in(const PermutationGroup &N, const PermutationGroup &G) {
  if (!N.is_subgroup_of(G))
    return false;
  for (const Permutation &n : N.generators())
    for (const Permutation &g : G.generators())
      if (!N.contains(n.conjugated_by(g)))
        return false;
  return true;
}

std::optional<Permutation> subgroup_conjugator(const PermutationGroup &G,
                                               const PermutationGroup &A,
                                               const PermutationGroup &B) {
  if (!A.is_subgroup_of(G) || !B.is_subgroup_of(G))
    throw PreconditionError("subgroup_conjugator: subgroups must lie in G");
  if (A.order() != B.order())
    return std::nullopt;
  if (A.same_group_as(B))
    return Permutation::identity(G.degree());

  std::vector<Permutation> a_elems = A.elements();
  std::vector<int> target = B.element_key();

  std::unordered_map<std::vector<int>, std::size_t, VecIntHash> index;
  std::vector<std::vector<Permutation>> orbit;
  std::vector<Permutation> reps;
  std::vector<Permutation> start = a_elems;
  std::sort(start.begin(), start.end());
  std::vector<int> key0;
  for (const Permutation &e : start)
    key0.insert(key0.end(), e.images().begin(), e.images().end());
  if (key0 == target)
    return Permutation::identity(G.degree());
  index.emplace(std::move(key0), 0);
  orbit.push_back(std::move(start));
  reps.push_back(Permutation::identity(G.degree()));

  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Permutation &g : G.generators()) {
      std::vector<Permutation> conj;
      conj.reserve(orbit[i].size());
      for (const Permutation &e : orbit[i])
        conj.push_back(e.conjugated_by(g));
      std::sort(conj.begin(), conj.end());
      std::vector<int> key;
      for (const Permutation &e : conj)
        key.insert(key.end(), e.images().begin(), e.images().end());
      if (key == target)
        return g * reps[i];
      if (index.find(key) == index.end()) {
        index.emplace(std::move(key), orbit.size());
        orbit.push_back(std::move(conj));
        reps.push_back(g * reps[i]);
      }
    }
  }
  return std::nullopt;
}

std::map<std::uint64_t, std::uint64_t>
element_order_histogram(const PermutationGroup &G) {
  std::map<std::uint64_t, std::uint64_t> hist;
  G.for_each_element([&](const Permutation &g) { ++hist[g.order()]; });
  return hist;
}

} // namespace effchar
