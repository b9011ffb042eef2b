#include "veech/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace veech {

bool word_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // 'R' < 'T' as characters, compared from the right.
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

namespace {

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t k = threads > 0 ? static_cast<std::size_t>(threads) : std::max(1u, hw);
  k = std::min(k, n);
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < k; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

OrbitTable enumerate_orbit(const TranslationSurface& s, const std::vector<Mat2>& generators,
                           const std::string& letters, const OrbitOptions& opt) {
  if (generators.size() != letters.size()) throw std::invalid_argument("one letter per generator");
  const std::size_t g = generators.size();
  OrbitTable tab;
  std::unordered_multimap<std::size_t, int> by_digest;
  std::vector<std::vector<int>> image(g);

  auto lookup = [&](const CanonicalForm& c) {
    auto range = by_digest.equal_range(c.digest);
    for (auto it = range.first; it != range.second; ++it)
      if (tab.surfaces[static_cast<std::size_t>(it->second)] == c) return it->second;
    return -1;
  };
  auto insert = [&](CanonicalForm c, std::string word) {
    int id = static_cast<int>(tab.surfaces.size());
    by_digest.emplace(c.digest, id);
    tab.surfaces.push_back(std::move(c));
    tab.words.push_back(std::move(word));
    for (auto& im : image) im.push_back(-1);
    return id;
  };

  insert(canonicalize(s), "");
  std::vector<int> level = {0};
  for (int depth = 0; !level.empty(); ++depth) {
    std::vector<CanonicalForm> kids(level.size() * g);
    parallel_for(kids.size(), opt.threads, [&](std::size_t k) {
      const auto& parent = tab.surfaces[static_cast<std::size_t>(level[k / g])].surface;
      kids[k] = canonicalize(apply_matrix(generators[k % g], parent));
    });
    std::vector<int> next;
    for (std::size_t k = 0; k < kids.size(); ++k) {
      int parent = level[k / g];
      int id = lookup(kids[k]);
      if (id < 0) {
        if (static_cast<long>(tab.surfaces.size()) >= opt.cap)
          throw std::runtime_error("orbit exceeds the cap of " + std::to_string(opt.cap) + " surfaces");
        id = insert(std::move(kids[k]), letters[k % g] + tab.words[static_cast<std::size_t>(parent)]);
        next.push_back(id);
      }
      image[k % g][static_cast<std::size_t>(parent)] = id;
    }
    level = std::move(next);
    if (opt.progress) opt.progress(depth + 1, static_cast<int>(tab.surfaces.size()));
  }
  tab.N = static_cast<int>(tab.surfaces.size());
  auto perm_of = [&](char letter) {
    auto pos = letters.find(letter);
    return pos == std::string::npos ? Permutation::identity(tab.N) : Permutation(image[pos]);
  };
  tab.r = perm_of('R');
  tab.t = perm_of('T');
  return tab;
}

TranslationSurface apply_reflection(const Mat2& m, const TranslationSurface& s) {
  if (m.det().sign() >= 0) throw std::invalid_argument("apply_reflection requires det < 0");
  // New vertex k is the image of old vertex -k, so old edge e becomes new
  // edge -e-1.
  TranslationSurface out;
  for (int l = 0; l < s.num_polygons(); ++l) {
    const auto& p = s.polygon(l);
    ConvexPolygon q;
    for (int k = 0; k < p.size(); ++k) q.vertices.push_back(m * p.vertex(-k));
    out.add_polygon(std::move(q));
  }
  auto flip = [&](EdgeRef e) {
    int n = s.polygon(e.label).size();
    return EdgeRef{e.label, ((-e.edge - 1) % n + n) % n};
  };
  for (int l = 0; l < s.num_polygons(); ++l)
    for (int e = 0; e < s.polygon(l).size(); ++e) out.glue(flip({l, e}), flip(s.opposite({l, e})));
  out.set_base_label(s.base_label());
  return out;
}

bool is_j_invariant(const TranslationSurface& s) {
  return canonicalize(apply_reflection(generator_J(), s)) == canonicalize(s);
}

int replay_word(const OrbitTable& table, const std::string& word, int start) {
  Permutation rinv = table.r.inverse(), tinv = table.t.inverse();
  int i = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'R': i = table.r(i); break;
      case 'T': i = table.t(i); break;
      case 'r': i = rinv(i); break;
      case 't': i = tinv(i); break;
      default: throw std::invalid_argument(std::string("bad word letter '") + *it + "'");
    }
  }
  return i;
}

Permutation compute_j(const OrbitTable& table) {
  std::vector<int> img(static_cast<std::size_t>(table.N));
  for (int i = 0; i < table.N; ++i) {
    std::string w = table.words[static_cast<std::size_t>(i)];
    for (char& c : w) c = static_cast<char>(c == 'R' ? 'r' : 't');
    img[static_cast<std::size_t>(i)] = replay_word(table, w);
  }
  return Permutation(std::move(img));
}

Classes equivalence_classes(const OrbitTable& table) {
  if (!table.has_j()) throw std::logic_error("equivalence classes need j");
  std::vector<int> parent(static_cast<std::size_t>(table.N));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (int i = 0; i < table.N; ++i) {
    unite(i, table.t(i));
    unite(i, table.j(i));
  }
  Classes c;
  c.class_of.assign(static_cast<std::size_t>(table.N), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(table.N), -1);
  for (int i = 0; i < table.N; ++i) {
    int r = find(i);
    if (id_of_root[static_cast<std::size_t>(r)] < 0) {
      id_of_root[static_cast<std::size_t>(r)] = c.count();
      c.representative.push_back(i);  // roots are minimal, and i == r here
      c.words.push_back(table.words[static_cast<std::size_t>(i)]);
    }
    c.class_of[static_cast<std::size_t>(i)] = id_of_root[static_cast<std::size_t>(r)];
  }
  return c;
}

std::vector<Mat2> veech_generators(const OrbitTable& table, const std::vector<Mat2>& generators,
                                   const std::string& letters) {
  std::vector<Mat2> word_mats;
  for (auto& w : table.words) word_mats.push_back(word_matrix(w));
  std::vector<Mat2> out;
  for (int i = 0; i < table.N; ++i)
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Permutation& p = letters[g] == 'R' ? table.r : table.t;
      int m = p(i);
      out.push_back(word_mats[static_cast<std::size_t>(m)].inverse() * generators[g] * word_mats[static_cast<std::size_t>(i)]);
    }
  return out;
}

}  // namespace veech
