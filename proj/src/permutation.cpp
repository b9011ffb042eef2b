#include "veech/permutation.hpp"

#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace veech {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  for (auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) v.at(static_cast<std::size_t>(c[i])) = c[(i + 1) % c.size()];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::pow(int k) const {
  Permutation base = k < 0 ? inverse() : *this;
  Permutation out = identity(size());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::map<int, int> Permutation::cycle_type() const {
  std::map<int, int> t;
  for (auto& c : cycles()) ++t[static_cast<int>(c.size())];
  return t;
}

int Permutation::num_cycles() const { return static_cast<int>(cycles().size()); }

int Permutation::order() const {
  long o = 1;
  for (auto& [len, cnt] : cycle_type()) o = std::lcm(o, long(len));
  return static_cast<int>(o);
}

std::string Permutation::cycle_string(bool one_based) const {
  std::string s;
  for (auto& c : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + (one_based ? 1 : 0));
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> v(p.img_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.img_[static_cast<std::size_t>(q.img_[i])];
  Permutation r;
  r.img_ = std::move(v);
  return r;
}

long group_order(const std::vector<Permutation>& gens, long cap) {
  if (gens.empty()) return 1;
  std::set<std::vector<int>> seen;
  std::queue<Permutation> todo;
  auto id = Permutation::identity(gens[0].size());
  seen.insert(id.images());
  todo.push(id);
  while (!todo.empty()) {
    Permutation g = todo.front();
    todo.pop();
    for (auto& h : gens) {
      Permutation gh = g * h;
      if (seen.insert(gh.images()).second) {
        if (static_cast<long>(seen.size()) > cap) throw std::runtime_error("group order exceeds cap");
        todo.push(gh);
      }
    }
  }
  return static_cast<long>(seen.size());
}

bool is_transitive(const std::vector<Permutation>& gens) {
  if (gens.empty()) return true;
  int m = gens[0].size();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto& g : gens)
      for (int y : {g(x), g.inverse()(x)})
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++count;
          stack.push_back(y);
        }
  }
  return count == m;
}

}  // namespace veech
