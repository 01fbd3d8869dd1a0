#pragma once

// The finite covering torus T~_0 / T_R.  An element is a central sign times
// h~_{alpha_1}(t_1) ... h~_{alpha_r}(t_r) in simple-root order, with each t_i
// a class in V = O^x / R.  V carries the Hilbert pairing, written in the basis
// u_1..u_k, e_1, f_1, ..., e_l, f_l produced by the unit decomposition.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "metacover/f2.hpp"
#include "metacover/padic.hpp"
#include "metacover/rootdata.hpp"

namespace metacover::torus {

using roots::Coords;

// Packed element: bit 63 is the sign, bits [i*d, (i+1)*d) hold t_{i+1}.
using Elem = std::uint64_t;

inline constexpr Elem kSign = Elem{1} << 63;

struct UnitForm {
  int d = 0;
  int k = 0;
  int l = 0;
  std::vector<f2::Vec> gram;  // rows; bit j of gram[i] is 1 when (b_i, b_j) = -1
  f2::Vec minus_one = 0;
  // Coordinate masks of the orthogonal pieces: one per u_i, one per pair.
  std::vector<f2::Vec> factor_masks;

  static UnitForm from_decomposition(const padic::UnitDecomposition& dec);
  // The standard form with k anisotropic lines and l hyperbolic planes.
  static UnitForm standard(int k, int l);

  int pair(f2::Vec a, f2::Vec b) const { return f2::form(gram, a, b); }
  std::vector<f2::Vec> classes() const;
  std::string label(f2::Vec v) const;
};

class CoverTorusGroup {
 public:
  CoverTorusGroup(const roots::RootSystem& sys, UnitForm form);

  const roots::RootSystem& system() const { return sys_; }
  const UnitForm& form() const { return form_; }
  int rank() const { return sys_.rank(); }
  int coord_bits() const { return sys_.rank() * form_.d; }
  std::uint64_t order() const { return std::uint64_t{2} << coord_bits(); }
  Elem coord_mask() const { return (Elem{1} << coord_bits()) - 1; }

  static bool negative(Elem x) { return (x & kSign) != 0; }
  f2::Vec coord(Elem x, int node) const;
  // node is 0-based.
  Elem generator(int node, f2::Vec u) const;

  Elem multiply(Elem a, Elem b) const;
  Elem inverse(Elem a) const;
  bool commute(Elem a, Elem b) const;
  // Sign picked up when commuting a past b: ab = (+-1) ba.
  int commutator_sign(Elem a, Elem b) const;

  // Dense enumeration: index = coords | (sign << coord_bits).
  Elem from_index(std::uint64_t i) const;
  std::uint64_t index(Elem x) const;

  // Canonical h~_gamma(u) for an arbitrary root gamma.  The recursion splits
  // off the lowest-numbered simple root alpha with <gamma, alpha^vee> = 1, or
  // the highest-numbered one when lowest is false.
  Elem root_element(const Coords& gamma, f2::Vec u, bool lowest = true) const;

  // The automorphism induced by conjugation with w~_alpha for a simple root.
  Elem weyl(int node, Elem x) const;

  std::vector<Elem> center() const;
  std::vector<Elem> generated(const std::vector<Elem>& gens) const;
  // Elements whose coordinates lie inside the given mask, including signs.
  std::vector<Elem> masked_elements(Elem mask) const;
  // Coordinate mask selecting the component masked by m at every node.
  Elem spread(f2::Vec m) const;

  std::string describe(Elem x) const;

 private:
  std::uint64_t cocycle(Elem a, Elem b) const;

  roots::RootSystem sys_;
  UnitForm form_;
  int chunks_ = 0;
  // table_[c][byte] = Q applied to byte placed at chunk c; the product sign is
  // parity(Q(a) & b).
  std::vector<std::array<Elem, 256>> table_;
};

struct MNFactorization {
  std::vector<std::vector<Elem>> m;  // one subgroup per u_i
  std::vector<std::vector<Elem>> n;  // one subgroup per hyperbolic pair
  std::uint64_t product_size = 0;
  bool covers_group = false;
  bool order_identity = false;
};

MNFactorization build_MN_factorization(const CoverTorusGroup& group);

// |T~_0 / T_{2e}| = 2 |O^x / U_{2e}|^r.
std::uint64_t order_mod_T2e(const padic::FieldSpec& field, int rank);

}  // namespace metacover::torus
