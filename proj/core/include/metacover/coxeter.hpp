#pragma once

// The extended affine Weyl group W ⋉ Y~ acting on Y (x) R by
// v -> w(v) + y, with the Coxeter structure coming from the alcove 2A
// = { v : alpha_i(v) > 0, alpha_0(v) > -2 }.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "metacover/rootdata.hpp"

namespace metacover::coxeter {

using roots::Coords;
using roots::kMaxRank;

// Integer matrix acting on coroot coordinates (column vectors).
struct Mat {
  std::array<std::int8_t, kMaxRank * kMaxRank> a{};

  int at(int i, int j) const { return a[i * kMaxRank + j]; }
  void set(int i, int j, int v) { a[i * kMaxRank + j] = static_cast<std::int8_t>(v); }
  static Mat identity(int rank);
  Mat operator*(const Mat& o) const;
  Coords apply(const Coords& v) const;
  bool operator==(const Mat&) const = default;
};

struct AffineElement {
  Mat w;     // finite part
  Mat winv;  // its inverse, kept alongside
  Coords y{};   // translation part, in Y~

  bool operator==(const AffineElement& o) const { return w == o.w && y == o.y; }
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const noexcept;
};

struct ReducedWord {
  AffineElement omega;   // length-zero part
  std::vector<int> word;  // x = s_word[0] * s_word[1] * ... * omega
};

struct OmegaElement {
  AffineElement element;
  Coords parity{};                // class in Y~/2Y
  std::array<int, kMaxRank + 1> node_map{};  // node i -> node_map[i]; 0 is the affine node
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const roots::RootSystem& sys);

  const roots::RootSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }
  // Generators are numbered 0 (affine reflection w_af) and 1..rank.
  int generator_count() const { return sys_.rank() + 1; }

  AffineElement identity() const;
  AffineElement generator(int s) const;
  AffineElement translation(const Coords& y) const;
  AffineElement finite(const Mat& w, const Mat& winv) const;
  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  // x(v) for v = p / denom; returns the numerator over the same denominator.
  Coords act(const AffineElement& x, const Coords& p, int denom) const;

  // Number of hyperplanes H_{alpha,2k} separating 2A from x(2A), counted at
  // the barycenter of 2A with exact integer arithmetic.
  int length_tilde(const AffineElement& x) const;
  // Closed form sum over positive roots with the half-root pairing.
  int length_tilde_formula(const AffineElement& x) const;
  // log_q [I_2 x I_2 : I_2]: affine root subgroups of I_2 not contained in
  // x I_2 x^{-1}.
  int length_two(const AffineElement& x) const;

  ReducedWord reduced_word(const AffineElement& x) const;
  AffineElement from_word(const AffineElement& omega, const std::vector<int>& word) const;
  std::vector<std::vector<int>> all_reduced_words(const AffineElement& x) const;

  const std::vector<OmegaElement>& omega_group() const { return omega_; }
  // Index into omega_group() of the length-zero element.
  int omega_index(const AffineElement& omega) const;

  // Order of s*t for generators s, t.
  int braid_order(int s, int t) const;

  // Elements with length_tilde <= max_len, sorted by length.
  std::vector<AffineElement> enumerate(int max_len) const;

  std::string describe(const AffineElement& x) const;

 private:
  roots::RootSystem sys_;
  std::vector<Coords> positive_;
  std::vector<Coords> all_roots_;
  Coords bary_{};        // P(beta) = sum_i beta_i bary_[i]
  int scale_ = 1;      // L with <alpha, p> = P(alpha) / L
  std::vector<AffineElement> gens_;
  std::vector<OmegaElement> omega_;
};

// True when every word in the set is reachable from the first by braid moves
// s t s ... = t s t ... of length braid_order(s, t).
bool braid_connected(const AffineWeylGroup& group, const std::vector<std::vector<int>>& words);

}  // namespace metacover::coxeter
