#include "effchar/group.hpp"

#include <algorithm>
#include <cassert>

#include "effchar/errors.hpp"
#include "effchar/limits.hpp"

namespace effchar {

struct PermutationGroup::Impl {
  int degree = 1;
  std::vector<Permutation> gens;
  std::vector<int> preferred_base;
  std::vector<StabilizerLevel> levels;
  std::uint64_t order = 1;

  void build();
  void recompute_orbit(StabilizerLevel &level) const;
  // Sift g through levels[from..]; returns the residue and the level at which
  // sifting stopped (levels.size() if g sifted through completely).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  int choose_base_point(const Permutation &residue) const;
};

void PermutationGroup::Impl::recompute_orbit(StabilizerLevel &level) const {
  level.orbit.clear();
  level.reps.clear();
  level.transversal_index.assign(degree, -1);
  level.orbit.push_back(level.base_point);
  level.transversal_index[level.base_point] = 0;
  level.reps.push_back(Permutation::identity(degree));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    int x = level.orbit[i];
    for (const Permutation &g : level.gens) {
      int y = g(x);
      if (level.transversal_index[y] < 0) {
        level.transversal_index[y] = static_cast<int>(level.reps.size());
        level.orbit.push_back(y);
        level.reps.push_back(g * level.reps[level.transversal_index[x]]);
      }
    }
  }
}

std::pair<Permutation, std::size_t>
PermutationGroup::Impl::strip(Permutation g, std::size_t from) const {
  for (std::size_t k = from; k < levels.size(); ++k) {
    const StabilizerLevel &level = levels[k];
    int x = g(level.base_point);
    if (x == level.base_point)
      continue;
    if (!level.in_orbit(x))
      return {std::move(g), k};
    g = level.rep(x).inverse() * g;
  }
  if (g.is_identity())
    return {std::move(g), levels.size()};
  return {std::move(g), levels.size()};
}

int PermutationGroup::Impl::choose_base_point(const Permutation &residue) const {
  for (int p : preferred_base)
    if (residue(p) != p)
      return p;
  int p = residue.smallest_moved_point();
  assert(p >= 0);
  return p;
}

void PermutationGroup::Impl::build() {
  levels.clear();
  order = 1;

  std::vector<Permutation> pending;
  for (const Permutation &g : gens)
    if (!g.is_identity())
      pending.push_back(g);

  // Deterministic Schreier-Sims: sift candidates in, then sweep all levels
  // closing Schreier generators until nothing new appears.  Quadratic-ish but
  // entirely adequate at this library's scale.
  auto insert = [&](const Permutation &g) -> bool {
    auto [residue, k] = strip(g, 0);
    if (residue.is_identity())
      return false;
    if (k == levels.size()) {
      StabilizerLevel level;
      level.base_point = choose_base_point(residue);
      levels.push_back(std::move(level));
      k = levels.size() - 1;
    }
    levels[k].gens.push_back(residue);
    recompute_orbit(levels[k]);
    return true;
  };

  for (const Permutation &g : pending)
    insert(g);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const StabilizerLevel &level = levels[k];
      for (std::size_t i = 0; i < level.orbit.size(); ++i) {
        int x = level.orbit[i];
        const Permutation &ux = level.reps[level.transversal_index[x]];
        for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
          const Permutation &s = level.gens[gi];
          int y = s(x);
          Permutation schreier = level.rep(y).inverse() * (s * ux);
          if (schreier.is_identity())
            continue;
          auto [residue, j] = strip(std::move(schreier), k + 1);
          if (residue.is_identity())
            continue;
          if (j == levels.size()) {
            StabilizerLevel fresh;
            fresh.base_point = choose_base_point(residue);
            levels.push_back(std::move(fresh));
            j = levels.size() - 1;
          }
          levels[j].gens.push_back(std::move(residue));
          recompute_orbit(levels[j]);
          changed = true;
          // restart the sweep; deeper levels just changed
          k = levels.size();
          break;
        }
        if (changed)
          break;
      }
      if (changed)
        break;
    }
  }

  order = 1;
  for (const StabilizerLevel &level : levels)
    order *= static_cast<std::uint64_t>(level.orbit.size());
}

PermutationGroup PermutationGroup::from_generators(int degree,
                                                   std::vector<Permutation> gens) {
  return from_generators_with_base(degree, std::move(gens), {});
}

PermutationGroup PermutationGroup::from_generators_with_base(
    int degree, std::vector<Permutation> gens, const std::vector<int> &preferred_base) {
  if (degree < 1 || degree > limits::kMaxDegree)
    throw PreconditionError("group degree out of range: " + std::to_string(degree));
  for (const Permutation &g : gens)
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->preferred_base = preferred_base;
  // drop identities and duplicates but keep order
  for (Permutation &g : gens) {
    if (g.is_identity())
      continue;
    if (std::find(impl->gens.begin(), impl->gens.end(), g) == impl->gens.end())
      impl->gens.push_back(std::move(g));
  }
  impl->build();
  return PermutationGroup(std::move(impl));
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return from_generators(degree, {});
}

int PermutationGroup::degree() const { return impl_->degree; }

std::uint64_t PermutationGroup::order() const { return impl_->order; }

const std::vector<Permutation> &PermutationGroup::generators() const {
  return impl_->gens;
}

std::vector<int> PermutationGroup::base() const {
  std::vector<int> base;
  base.reserve(impl_->levels.size());
  for (const StabilizerLevel &level : impl_->levels)
    base.push_back(level.base_point);
  return base;
}

const std::vector<StabilizerLevel> &PermutationGroup::chain() const {
  return impl_->levels;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const StabilizerLevel &level : impl_->levels)
    for (const Permutation &g : level.gens)
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

bool PermutationGroup::contains(const Permutation &g) const {
  if (g.degree() != degree())
    throw PreconditionError("degree mismatch in membership test");
  auto [residue, k] = impl_->strip(g, 0);
  (void)k;
  return residue.is_identity();
}

bool PermutationGroup::is_abelian() const {
  const auto &gens = impl_->gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i]))
        return false;
  return true;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup &other) const {
  if (degree() != other.degree())
    return false;
  for (const Permutation &g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

bool PermutationGroup::same_group_as(const PermutationGroup &other) const {
  return degree() == other.degree() && order() == other.order() &&
         is_subgroup_of(other);
}

bool PermutationGroup::is_p_group(std::uint64_t p) const {
  std::uint64_t n = order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

void PermutationGroup::for_each_element(
    const std::function<void(const Permutation &)> &fn) const {
  if (order() > limits::kElementCap)
    throw CapExceededError("element enumeration cap exceeded: group order " +
                           std::to_string(order()));
  // Iterate orbit points in sorted order per level so the enumeration is
  // deterministic and independent of orbit discovery order.
  const auto &levels = impl_->levels;
  std::vector<std::vector<int>> sorted_orbits(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    sorted_orbits[k] = levels[k].orbit;
    std::sort(sorted_orbits[k].begin(), sorted_orbits[k].end());
  }
  std::function<void(std::size_t, const Permutation &)> rec =
      [&](std::size_t k, const Permutation &prefix) {
        if (k == levels.size()) {
          fn(prefix);
          return;
        }
        for (int x : sorted_orbits[k])
          rec(k + 1, prefix * levels[k].rep(x));
      };
  rec(0, Permutation::identity(degree()));
}

std::vector<Permutation> PermutationGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation &g) { out.push_back(g); });
  return out;
}

std::vector<int> PermutationGroup::element_key() const {
  std::vector<Permutation> elems = elements();
  std::sort(elems.begin(), elems.end());
  std::vector<int> key;
  key.reserve(elems.size() * degree());
  for (const Permutation &g : elems)
    key.insert(key.end(), g.images().begin(), g.images().end());
  return key;
}

} // namespace effchar
