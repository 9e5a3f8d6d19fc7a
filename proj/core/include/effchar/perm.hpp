#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace effchar {

// A permutation of the points {0, ..., degree-1}, stored as a dense image
// vector.  Cycle notation at the API boundary is 1-based.
class Permutation {
public:
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  // cycles use 1-based points, e.g. {{1,2},{3,4,5}}
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // this applied after t^{-1}: t * (*this) * t^{-1}
  Permutation conjugated_by(const Permutation &t) const;
  Permutation power(long long e) const;

  std::uint64_t order() const;
  int smallest_moved_point() const; // -1 when identity
  int num_moved_points() const;

  std::vector<std::vector<int>> cycles() const; // 1-based, lengths >= 2
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);

  bool operator==(const Permutation &other) const = default;
  auto operator<=>(const Permutation &other) const = default;

private:
  std::vector<int> images_;
};

// (a*b)(i) = a(b(i)): b acts first.
Permutation operator*(const Permutation &a, const Permutation &b);

struct PermHash {
  std::size_t operator()(const Permutation &p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace effchar
