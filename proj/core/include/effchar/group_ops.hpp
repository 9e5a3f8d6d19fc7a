#pragma once

#include <map>
#include <optional>
#include <vector>

#include "effchar/group.hpp"
#include "effchar/perm.hpp"

namespace effchar {

// Grows a permutation group one generator at a time, skipping members.
class GroupBuilder {
public:
  explicit GroupBuilder(int degree)
      : degree_(degree), group_(PermutationGroup::trivial(degree)) {}

  // Returns true when g enlarged the group.
  bool add(const Permutation &g) {
    if (group_.contains(g))
      return false;
    gens_.push_back(g);
    group_ = PermutationGroup::from_generators(degree_, gens_);
    return true;
  }

  const PermutationGroup &group() const { return group_; }

private:
  int degree_;
  std::vector<Permutation> gens_;
  PermutationGroup group_;
};

// Some t in G with t*a*t^{-1} == b, if any.  Backtracking over a stabilizer
// chain whose base is adapted to the cycles of a.
std::optional<Permutation> conjugator(const PermutationGroup &G,
                                      const Permutation &a, const Permutation &b);

// Same decision by plain element iteration; cap-guarded.  Kept as an
// independent route for cross-checking.
std::optional<Permutation> conjugator_exhaustive(const PermutationGroup &G,
                                                 const Permutation &a,
                                                 const Permutation &b);

PermutationGroup centralizer(const PermutationGroup &G, const Permutation &s);
PermutationGroup centralizer(const PermutationGroup &G, const PermutationGroup &S);
PermutationGroup center(const PermutationGroup &G);

PermutationGroup normalizer(const PermutationGroup &G, const PermutationGroup &H);

PermutationGroup normal_closure(const PermutationGroup &G,
                                const std::vector<Permutation> &seed);
PermutationGroup derived_subgroup(const PermutationGroup &G);

bool is_normal_in(const PermutationGroup &N, const PermutationGroup &G);

// Some t in G with t*A*t^{-1} == B as subgroups, if any.
std::optional<Permutation> subgroup_conjugator(const PermutationGroup &G,
                                               const PermutationGroup &A,
                                               const PermutationGroup &B);

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const PermutationGroup &G);

} // namespace effchar
