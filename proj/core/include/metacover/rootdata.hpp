#pragma once

// Simply-laced irreducible root systems of types A, D, E in Bourbaki
// numbering.  Roots are written in simple-root coordinates; elements of the
// coroot lattice Y in simple-coroot coordinates.  Since the systems are simply
// laced, alpha and its coroot have the same coordinates.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace metacover::roots {

inline constexpr int kMaxRank = 9;

using Coords = std::array<int, kMaxRank>;

struct CoordsHash {
  std::size_t operator()(const Coords& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 0x100000001b3ull;
    return h;
  }
};

class RootSystem {
 public:
  // type is one of 'A' (rank >= 2), 'D' (rank >= 3), 'E' (rank 6, 7, 8).
  static RootSystem make(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;
  int cartan(int i, int j) const { return cartan_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  const std::vector<Coords>& roots() const { return roots_; }
  const std::vector<Coords>& positive_roots() const { return positive_; }
  const Coords& highest_root() const { return highest_; }
  bool is_root(const Coords& v) const;
  static bool is_positive(const Coords& root);

  // <alpha, y> for a root alpha and y in Y.
  int pairing(const Coords& alpha, const Coords& y) const;
  // <alpha_i, y>.
  int simple_pairing(int i, const Coords& y) const;
  // s_i applied to y in Y (equivalently to a root).
  Coords reflect(int i, const Coords& y) const;
  // w_alpha y = y - <alpha, y> alpha^vee for an arbitrary root alpha.
  Coords reflect_root(const Coords& alpha, const Coords& y) const;

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::vector<Coords> roots_;
  std::vector<Coords> positive_;
  Coords highest_{};
};

bool in_Y_tilde(const RootSystem& sys, const Coords& y);

struct LatticeTable {
  std::vector<Coords> representatives;  // 0/1 vectors, zero first
  int group_order = 0;                // |Y~ / 2Y|
  std::uint64_t index = 0;            // [Y : Y~]
  std::string quotient;               // "1", "Z/2", "Z/2 x Z/2"
  // Odd nodes (1-based) of each nontrivial representative.
  std::vector<std::vector<int>> odd_nodes() const;
};

LatticeTable Ytilde_mod_2Y(const RootSystem& sys);

// o for odd coordinates, * for even, drawn on the Dynkin diagram.
std::string ascii_diagram(const RootSystem& sys, const Coords& parity);

}  // namespace metacover::roots
