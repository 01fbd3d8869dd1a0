#pragma once

// Small dense linear algebra over F_2.  Vectors are bitmasks, bit i is
// coordinate i.  Dimensions stay below 32 everywhere in this library.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace metacover::f2 {

using Vec = std::uint32_t;

inline int parity(Vec v) { return std::popcount(v) & 1; }

inline int dot(Vec a, Vec b) { return parity(a & b); }

// Symmetric bilinear form given by its rows.
inline int form(const std::vector<Vec>& rows, Vec a, Vec b) {
  int s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if ((a >> i) & 1u) s ^= dot(rows[i], b);
  return s;
}

// Reduced echelon basis kept incrementally.  reduce() returns the residue of v
// against the basis, together with the combination of inserted vectors that
// was subtracted.
class Echelon {
 public:
  struct Reduced {
    Vec residue;
    Vec combination;
  };

  Reduced reduce(Vec v) const {
    Vec comb = 0;
    for (const auto& row : rows_) {
      if ((v >> row.pivot) & 1u) {
        v ^= row.value;
        comb ^= row.combination;
      }
    }
    return {v, comb};
  }

  bool contains(Vec v) const { return reduce(v).residue == 0; }

  // Returns false when v is already in the span.
  bool insert(Vec v) {
    auto [res, comb] = reduce(v);
    if (res == 0) return false;
    comb ^= Vec{1} << count_;
    ++count_;
    int pivot = std::countr_zero(res);
    for (auto& row : rows_) {
      if ((row.value >> pivot) & 1u) {
        row.value ^= res;
        row.combination ^= comb;
      }
    }
    rows_.push_back({pivot, res, comb});
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    int pivot;
    Vec value;
    Vec combination;
  };
  std::vector<Row> rows_;
  int count_ = 0;
};

inline int rank(const std::vector<Vec>& vs) {
  Echelon e;
  for (Vec v : vs) e.insert(v);
  return e.rank();
}

// Coordinates of v in the given basis, if v lies in its span.
inline std::optional<Vec> solve(const std::vector<Vec>& basis, Vec v) {
  Echelon e;
  for (Vec b : basis) e.insert(b);
  auto r = e.reduce(v);
  if (r.residue != 0) return std::nullopt;
  return r.combination;
}

// Basis of {x in F_2^n : dot(c, x) = 0 for all c in constraints}.
inline std::vector<Vec> kernel(const std::vector<Vec>& constraints, int n) {
  std::vector<Vec> out;
  std::vector<Vec> rows;
  std::vector<int> pivots;
  for (Vec c : constraints) {
    for (std::size_t k = 0; k < rows.size(); ++k)
      if ((c >> pivots[k]) & 1u) c ^= rows[k];
    if (c == 0) continue;
    int p = std::countr_zero(c);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if ((rows[k] >> p) & 1u) rows[k] ^= c;
    rows.push_back(c);
    pivots.push_back(p);
  }
  Vec pivot_mask = 0;
  for (int p : pivots) pivot_mask |= Vec{1} << p;
  for (int free = 0; free < n; ++free) {
    if ((pivot_mask >> free) & 1u) continue;
    Vec x = Vec{1} << free;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if ((rows[k] >> free) & 1u) x |= Vec{1} << pivots[k];
    out.push_back(x);
  }
  return out;
}

}  // namespace metacover::f2
