#pragma once

// Finite Kripke frames: a world list with a binary accessibility relation.

#include <string>
#include <utility>
#include <vector>

#include "bca/boolean.hpp"

namespace bca {

class Frame {
 public:
  /// Empty relation over the given worlds. World names follow atom naming
  /// rules so the powerset over them is an Algebra.
  explicit Frame(std::vector<std::string> worlds);
  Frame(std::vector<std::string> worlds, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t world_count() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }

  bool related(std::size_t u, std::size_t v) const;
  void set(std::size_t u, std::size_t v, bool value = true);
  /// Worlds reachable from u in one step, as an atom mask.
  Mask successors(std::size_t u) const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

  /// Connected components of the symmetric closure, as atom masks ordered by
  /// their least world. For an equivalence relation these are its classes.
  std::vector<Mask> components() const;

  /// The powerset algebra whose atoms are the worlds.
  Algebra algebra() const { return Algebra(worlds_); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> worlds_;
  std::vector<Mask> rows_;
};

}  // namespace bca
