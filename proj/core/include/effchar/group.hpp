#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "effchar/perm.hpp"

namespace effchar {

// One level of a stabilizer chain: the group generated by `gens` acts on the
// orbit of `base_point`; `transversal[x]` maps base_point to x.
struct StabilizerLevel {
  int base_point = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;                       // discovery order
  std::vector<int> transversal_index;           // point -> index into reps, -1 outside orbit
  std::vector<Permutation> reps;                // coset representatives
  bool in_orbit(int point) const { return transversal_index[point] >= 0; }
  const Permutation &rep(int point) const { return reps[transversal_index[point]]; }
};

// Immutable permutation group with a base and strong generating set.
// Subgroups always live in the parent's degree.
class PermutationGroup {
public:
  static PermutationGroup from_generators(int degree, std::vector<Permutation> gens);
  // Points earlier in `preferred_base` are used as base points first.
  static PermutationGroup from_generators_with_base(int degree,
                                                    std::vector<Permutation> gens,
                                                    const std::vector<int> &preferred_base);
  static PermutationGroup trivial(int degree);

  int degree() const;
  std::uint64_t order() const;
  const std::vector<Permutation> &generators() const;
  std::vector<int> base() const;
  const std::vector<StabilizerLevel> &chain() const;
  std::vector<Permutation> strong_generators() const;

  bool contains(const Permutation &g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(const PermutationGroup &other) const;
  // Structural equality: same degree and same element set.
  bool same_group_as(const PermutationGroup &other) const;
  bool is_p_group(std::uint64_t p) const;

  // Deterministic element enumeration; throws CapExceededError above
  // limits::kElementCap.
  std::vector<Permutation> elements() const;
  void for_each_element(const std::function<void(const Permutation &)> &fn) const;

  // Lexicographically sorted image vectors of all elements; a canonical key
  // usable for subgroup deduplication.  Cap-guarded.
  std::vector<int> element_key() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit PermutationGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace effchar
