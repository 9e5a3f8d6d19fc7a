#pragma once

#include <cstdint>

namespace effchar::limits {

// Largest point set a permutation may act on.
inline constexpr int kMaxDegree = 10000;

// Cap for full element iteration (conjugacy classes, brute-force
// centralizers, coset enumeration and the like).
inline constexpr std::uint64_t kElementCap = 10000;

// Cap for complete subgroup lattice enumeration.
inline constexpr std::uint64_t kLatticeCap = 5000;

// Cap for isomorphism backtracking.
inline constexpr std::uint64_t kIsoCap = 5000;

// Cap for regular representations built from multiplication tables.
inline constexpr std::uint64_t kMulTableCap = 2000;

// Elementary abelian enumeration stops at this rank.
inline constexpr int kElabRankCap = 4;

} // namespace effchar::limits
