#include "effchar/homomorphism.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "effchar/errors.hpp"
#include "effchar/group_ops.hpp"
#include "effchar/limits.hpp"

namespace effchar {

namespace {

Permutation diagonal_perm(const Permutation &src_part, const Permutation &tgt_part) {
  std::vector<int> img(src_part.degree() + tgt_part.degree());
  for (int i = 0; i < src_part.degree(); ++i)
    img[i] = src_part(i);
  for (int i = 0; i < tgt_part.degree(); ++i)
    img[src_part.degree() + i] = src_part.degree() + tgt_part(i);
  return Permutation(std::move(img));
}

Permutation block_restrict(const Permutation &p, int lo, int hi) {
  std::vector<int> img(hi - lo);
  for (int i = lo; i < hi; ++i) {
    int v = p(i);
    if (v < lo || v >= hi)
      throw InternalError("permutation does not preserve the block");
    img[i - lo] = v - lo;
  }
  return Permutation(std::move(img));
}

PermutationGroup build_graph(const PermutationGroup &source,
                             const PermutationGroup &target,
                             const std::vector<Permutation> &images) {
  if (images.size() != source.generators().size())
    throw PreconditionError("homomorphism: one image per source generator required");
  std::vector<Permutation> diag;
  diag.reserve(source.generators().size());
  for (std::size_t i = 0; i < source.generators().size(); ++i)
    diag.push_back(diagonal_perm(source.generators()[i], images[i]));
  std::vector<int> preferred(source.degree());
  for (int i = 0; i < source.degree(); ++i)
    preferred[i] = i;
  return PermutationGroup::from_generators_with_base(
      source.degree() + target.degree(), std::move(diag), preferred);
}

} // namespace

GroupHomomorphism::GroupHomomorphism(PermutationGroup source,
                                     PermutationGroup target,
                                     std::vector<Permutation> generator_images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(generator_images)),
      graph_(build_graph(source_, target_, images_)),
      image_(PermutationGroup::from_generators(target_.degree(), images_)) {
  if (images_.size() != source_.generators().size())
    throw PreconditionError("homomorphism: one image per source generator required");
  for (const Permutation &m : images_) {
    if (m.degree() != target_.degree())
      throw PreconditionError("homomorphism: image degree mismatch");
    if (!target_.contains(m))
      throw PreconditionError("homomorphism: image lies outside the target group");
  }
  // The generator map extends to a homomorphism exactly when the graph
  // subgroup has the source's order.
  if (graph_.order() != source_.order())
    throw PreconditionError("generator images do not define a homomorphism");
}

Permutation GroupHomomorphism::apply(const Permutation &g) const {
  if (!source_.contains(g))
    throw PreconditionError("homomorphism applied outside its source");
  const int n = source_.degree();
  Permutation residual = g;
  Permutation acc = Permutation::identity(n + target_.degree());
  for (const StabilizerLevel &level : graph_.chain()) {
    if (level.base_point >= n)
      throw InternalError("graph chain has a target-side base point");
    int x = residual(level.base_point);
    if (x == level.base_point)
      continue;
    if (!level.in_orbit(x))
      throw InternalError("sifting failed inside the graph group");
    const Permutation &u = level.rep(x);
    residual = block_restrict(u, 0, n).inverse() * residual;
    acc = acc * u;
  }
  if (!residual.is_identity())
    throw InternalError("source element did not sift through the graph chain");
  return block_restrict(acc, n, n + target_.degree());
}

std::uint64_t GroupHomomorphism::kernel_order() const {
  return source_.order() / image_.order();
}

PermutationGroup GroupHomomorphism::kernel() const {
  std::uint64_t want = kernel_order();
  GroupBuilder builder(source_.degree());
  if (want == 1)
    return builder.group();
  Permutation id_tgt = Permutation::identity(target_.degree());
  for (const Permutation &g : source_.elements()) {
    if (builder.group().order() == want)
      break;
    if (builder.group().contains(g))
      continue;
    if (apply(g) == id_tgt)
      builder.add(g);
  }
  if (builder.group().order() != want)
    throw InternalError("kernel scan did not reach the expected order");
  return builder.group();
}

bool GroupHomomorphism::is_isomorphism_onto(const PermutationGroup &H) const {
  return kernel_order() == 1 && image_.same_group_as(H);
}

std::pair<PermutationGroup, GroupHomomorphism>
quotient_group(const PermutationGroup &G, const PermutationGroup &N) {
  if (!N.is_subgroup_of(G))
    throw PreconditionError("quotient: N is not a subgroup of G");
  if (!is_normal_in(N, G))
    throw PreconditionError("quotient: N is not normal in G");

  if (N.is_trivial()) {
    GroupHomomorphism id_hom(G, G, G.generators());
    return {G, std::move(id_hom)};
  }

  std::uint64_t index = G.order() / N.order();
  if (index > limits::kElementCap)
    throw CapExceededError("quotient: coset count " + std::to_string(index) +
                           " exceeds the element cap");

  std::vector<Permutation> n_elems = N.elements();

  // canonical coset label: lexicographically least member
  auto coset_key = [&](const Permutation &g) {
    const Permutation *best = nullptr;
    Permutation cur = g;
    std::vector<Permutation> members;
    members.reserve(n_elems.size());
    for (const Permutation &n : n_elems)
      members.push_back(g * n);
    for (const Permutation &m : members)
      if (!best || m < *best)
        best = &m;
    return *best;
  };

  std::unordered_map<Permutation, int, PermHash> index_of;
  std::vector<Permutation> reps;
  Permutation id = Permutation::identity(G.degree());
  index_of.emplace(coset_key(id), 0);
  reps.push_back(id);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const Permutation &g : G.generators()) {
      Permutation moved = g * reps[i];
      Permutation key = coset_key(moved);
      if (index_of.find(key) == index_of.end()) {
        index_of.emplace(std::move(key), static_cast<int>(reps.size()));
        reps.push_back(std::move(moved));
      }
    }
  }
  if (reps.size() != index)
    throw InternalError("coset enumeration found " + std::to_string(reps.size()) +
                        " cosets, expected " + std::to_string(index));

  int qdeg = static_cast<int>(index);
  std::vector<Permutation> induced;
  induced.reserve(G.generators().size());
  for (const Permutation &g : G.generators()) {
    std::vector<int> img(qdeg);
    for (int i = 0; i < qdeg; ++i)
      img[i] = index_of.at(coset_key(g * reps[i]));
    induced.emplace_back(std::move(img));
  }

  PermutationGroup Q = PermutationGroup::from_generators(qdeg, induced);
  if (Q.order() != index)
    throw InternalError("coset action is not faithful on the quotient");
  GroupHomomorphism projection(G, Q, induced);
  if (projection.kernel_order() != N.order())
    throw InternalError("quotient projection kernel has the wrong order");
  return {std::move(Q), std::move(projection)};
}

} // namespace effchar
