#pragma once

#include <functional>
#include <string>
#include <vector>

#include "veech/permutation.hpp"
#include "veech/surface.hpp"

namespace veech {

// Words over {R, T} as matrix products: "RT" is R * T. Order: shorter first,
// then compared letter by letter from the right, R < T.
bool word_less(const std::string& a, const std::string& b);

struct OrbitTable {
  int N = 0;
  std::vector<CanonicalForm> surfaces;  // empty when loaded from a file
  std::vector<std::string> words;
  Permutation r, t, j;                  // 0-based; j empty until computed

  bool has_j() const { return j.size() == N; }
};

struct OrbitOptions {
  long cap = 100000;
  int threads = 0;  // 0 = hardware concurrency
  // Called after each BFS level with (level, orbit size so far).
  std::function<void(int, int)> progress;
};

// Letters name the generators in order ("RT" for {R, T}); index 0 is the
// canonical form of `s` itself. Throws std::runtime_error past the cap.
OrbitTable enumerate_orbit(const TranslationSurface& s, const std::vector<Mat2>& generators,
                           const std::string& letters = "RT", const OrbitOptions& opt = {});

// Reflection J = diag(1, -1) applied to a surface (orientation reversing, so
// vertex orders are reversed).
TranslationSurface apply_reflection(const Mat2& m, const TranslationSurface& s);
bool is_j_invariant(const TranslationSurface& s);

// j(i): index of the image of the base under phi(w_i), phi(R) = R^-1,
// phi(T) = T^-1, by replaying through r^-1 and t^-1.
Permutation compute_j(const OrbitTable& table);

struct Classes {
  std::vector<int> class_of;               // per index
  std::vector<int> representative;         // per class: smallest index
  std::vector<std::string> words;          // per class: word of the representative
  int count() const { return static_cast<int>(representative.size()); }
};
// Partition under <t, j>.
Classes equivalence_classes(const OrbitTable& table);

// The matrices C_{m(i)}^-1 M C_i over all indices i and generators M.
std::vector<Mat2> veech_generators(const OrbitTable& table, const std::vector<Mat2>& generators,
                                   const std::string& letters = "RT");

// Follow a word through the generator permutations (rightmost letter first);
// lower-case letters use inverses.
int replay_word(const OrbitTable& table, const std::string& word, int start = 0);

}  // namespace veech
