#include "effchar/perm.hpp"

#include <algorithm>
#include <numeric>

#include "effchar/errors.hpp"
#include "effchar/limits.hpp"

namespace effchar {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 1 || degree > limits::kMaxDegree)
    throw PreconditionError("permutation degree out of range: " +
                            std::to_string(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = degree();
  if (n < 1 || n > limits::kMaxDegree)
    throw PreconditionError("permutation degree out of range: " +
                            std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw PreconditionError("image vector is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>> &cycles) {
  Permutation p(degree);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= degree)
        throw PreconditionError("cycle point out of range: " +
                                std::to_string(cycle[i]));
      if (p.images_[from] != from)
        throw PreconditionError("point repeated across cycles: " +
                                std::to_string(cycle[i]));
      p.images_[from] = to;
    }
  }
  // catches a point repeated inside one cycle
  std::vector<bool> seen(degree, false);
  for (int v : p.images_) {
    if (seen[v])
      throw PreconditionError("cycles do not define a bijection");
    seen[v] = true;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw PreconditionError("degree mismatch in composition: " +
                            std::to_string(a.degree()) + " vs " +
                            std::to_string(b.degree()));
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    img[i] = a.images_[b.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::conjugated_by(const Permutation &t) const {
  if (t.degree() != degree())
    throw PreconditionError("degree mismatch in conjugation");
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i)
    img[t.images_[i]] = t.images_[images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long e) const {
  std::uint64_t n = order();
  long long r = e % static_cast<long long>(n);
  if (r < 0)
    r += static_cast<long long>(n);
  Permutation result(degree());
  Permutation base = *this;
  while (r > 0) {
    if (r & 1)
      result = result * base;
    base = base * base;
    r >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return i;
  return -1;
}

int Permutation::num_moved_points() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      ++n;
  return n;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
      j = images_[j];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto &cycle : cs) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  return s;
}

} // namespace effchar
