#pragma once

#include <utility>
#include <vector>

#include "effchar/group.hpp"
#include "effchar/perm.hpp"

namespace effchar {

// A homomorphism given by images of the source's generators.  Construction
// verifies that the assignment extends to a homomorphism: the graph subgroup
// {(g, f(g))} inside Sym(source points + target points) must have the same
// order as the source.
class GroupHomomorphism {
public:
  GroupHomomorphism(PermutationGroup source, PermutationGroup target,
                    std::vector<Permutation> generator_images);

  const PermutationGroup &source() const { return source_; }
  const PermutationGroup &target() const { return target_; }
  const std::vector<Permutation> &generator_images() const { return images_; }

  Permutation apply(const Permutation &g) const;

  const PermutationGroup &image() const { return image_; }
  std::uint64_t kernel_order() const;
  PermutationGroup kernel() const; // cap-guarded element scan

  bool is_injective() const { return kernel_order() == 1; }
  bool is_isomorphism_onto(const PermutationGroup &H) const;

private:
  PermutationGroup source_;
  PermutationGroup target_;
  std::vector<Permutation> images_;
  PermutationGroup graph_;  // chain based on source points first
  PermutationGroup image_;
};

// The action of G on the left cosets of a normal subgroup N, together with
// the projection.  The image has degree [G:N] and order |G|/|N|.
std::pair<PermutationGroup, GroupHomomorphism>
quotient_group(const PermutationGroup &G, const PermutationGroup &N);

} // namespace effchar
