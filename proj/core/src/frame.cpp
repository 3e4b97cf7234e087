#include "bca/frame.hpp"

#include <numeric>
#include <stdexcept>

namespace bca {

Frame::Frame(std::vector<std::string> worlds) : worlds_(std::move(worlds)) {
  // Validates names and size.
  (void)Algebra(worlds_);
  rows_.assign(worlds_.size(), 0);
}

Frame::Frame(std::vector<std::string> worlds, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Frame(std::move(worlds)) {
  for (auto [u, v] : edges) set(u, v);
}

bool Frame::related(std::size_t u, std::size_t v) const {
  if (u >= worlds_.size() || v >= worlds_.size()) throw std::out_of_range("world index out of range");
  return (rows_[u] >> v) & 1U;
}

void Frame::set(std::size_t u, std::size_t v, bool value) {
  if (u >= worlds_.size() || v >= worlds_.size()) throw std::out_of_range("world index out of range");
  if (value) {
    rows_[u] |= Mask{1} << v;
  } else {
    rows_[u] &= ~(Mask{1} << v);
  }
}

Mask Frame::successors(std::size_t u) const {
  if (u >= worlds_.size()) throw std::out_of_range("world index out of range");
  return rows_[u];
}

bool Frame::is_reflexive() const {
  for (std::size_t u = 0; u < worlds_.size(); ++u) {
    if (!related(u, u)) return false;
  }
  return true;
}

bool Frame::is_symmetric() const {
  for (std::size_t u = 0; u < worlds_.size(); ++u) {
    for (std::size_t v = 0; v < worlds_.size(); ++v) {
      if (related(u, v) != related(v, u)) return false;
    }
  }
  return true;
}

bool Frame::is_transitive() const {
  for (std::size_t u = 0; u < worlds_.size(); ++u) {
    for (std::size_t v = 0; v < worlds_.size(); ++v) {
      if (!related(u, v)) continue;
      if ((rows_[v] & ~rows_[u]) != 0) return false;
    }
  }
  return true;
}

std::vector<Mask> Frame::components() const {
  std::vector<std::size_t> parent(worlds_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t u) {
    while (parent[u] != u) {
      parent[u] = parent[parent[u]];
      u = parent[u];
    }
    return u;
  };
  for (std::size_t u = 0; u < worlds_.size(); ++u) {
    for (std::size_t v = 0; v < worlds_.size(); ++v) {
      if (!related(u, v)) continue;
      auto ru = find(u);
      auto rv = find(v);
      if (ru == rv) continue;
      // Keep the smaller index as root so classes are ordered by least world.
      if (ru < rv) {
        parent[rv] = ru;
      } else {
        parent[ru] = rv;
      }
    }
  }
  std::vector<Mask> out;
  std::vector<int> slot(worlds_.size(), -1);
  for (std::size_t u = 0; u < worlds_.size(); ++u) {
    auto r = find(u);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(0);
    }
    out[static_cast<std::size_t>(slot[r])] |= Mask{1} << u;
  }
  return out;
}

}  // namespace bca
