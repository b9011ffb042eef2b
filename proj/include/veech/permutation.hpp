#pragma once

#include <map>
#include <string>
#include <vector>

namespace veech {

// Permutation of {0, ..., m-1}. Composition is functional:
// (p * q)(x) = p(q(x)), i.e. q acts first. Sage multiplies the other way
// round, so a Sage product a*b corresponds to b * a here.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int m);
  // Cycles may omit fixed points.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  Permutation pow(int k) const;
  bool is_identity() const;

  // Cycles ordered by their smallest element, each starting at it; fixed
  // points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  // cycle length -> number of cycles of that length
  std::map<int, int> cycle_type() const;
  int num_cycles() const;
  int order() const;

  // "(0,22,14,11)(1,4,15,5)..." with 1-cycles included.
  std::string cycle_string(bool one_based = false) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& p, const Permutation& q) { return p.img_ == q.img_; }
  friend bool operator!=(const Permutation& p, const Permutation& q) { return !(p == q); }
  friend bool operator<(const Permutation& p, const Permutation& q) { return p.img_ < q.img_; }

private:
  std::vector<int> img_;
};

// Size of the group generated by `gens` (all on the same point set), by
// closing under right multiplication. Intended for small groups.
long group_order(const std::vector<Permutation>& gens, long cap = 1000000);

bool is_transitive(const std::vector<Permutation>& gens);

}  // namespace veech
