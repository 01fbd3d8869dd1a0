#pragma once

// Finite extensions of Q_2 given as an Eisenstein extension of the
// unramified extension of degree f.  Elements of the valuation ring are kept
// in the O_K-basis 1, pi, ..., pi^(e-1), each O_K coordinate in the basis
// 1, x, ..., x^(f-1), with integer coefficients taken modulo 2^64.  Every
// ring element also carries the pi-adic precision to which it is known.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metacover/f2.hpp"

namespace metacover::padic {

inline constexpr int kMaxDegree = 6;

struct Integer {
  std::array<std::uint64_t, kMaxDegree> c{};  // index k*f + j is the x^j pi^k coefficient
  int prec = 0;

  bool operator==(const Integer&) const = default;
};

class FieldSpec {
 public:
  // eisenstein lists c_0..c_(e-1) of x^e + c_(e-1)x^(e-1) + ... + c_0; empty
  // selects x^e - 2.
  static FieldSpec make(int e, int f, std::vector<std::int64_t> eisenstein = {});

  int e() const;
  int f() const;
  int degree() const { return e() * f(); }
  int residue_size() const { return 1 << f(); }
  // Working precision N = 4e + 2 in pi-adic digits.
  int precision() const { return 4 * e() + 2; }
  const std::vector<std::int64_t>& eisenstein() const;
  const std::vector<std::int64_t>& unramified_modulus() const;
  std::string describe() const;

  Integer zero(int prec) const;
  Integer from_int(std::int64_t v, int prec) const;
  Integer uniformizer(int prec) const;
  Integer pi_power(int k, int prec) const;
  // Residue-field element sum_j bit_j x^j lifted with 0/1 coefficients.
  Integer residue_lift(std::uint32_t bits, int prec) const;

  Integer add(const Integer& a, const Integer& b) const;
  Integer sub(const Integer& a, const Integer& b) const;
  Integer neg(const Integer& a) const;
  Integer mul(const Integer& a, const Integer& b) const;
  Integer reduce(const Integer& a, int prec) const;

  // nullopt when a vanishes to its precision.
  std::optional<int> valuation(const Integer& a) const;
  bool is_unit(const Integer& a) const;
  // Exact division by pi; requires valuation >= 1 and costs one digit.
  Integer divide_by_pi(const Integer& a) const;
  Integer unit_inverse(const Integer& a) const;
  // Residue of a unit as a bitmask over the basis x^j of the residue field.
  std::uint32_t residue_bits(const Integer& a) const;

  // Residues modulo pi^digits are numbered 0 .. residue_count(digits)-1.
  std::uint64_t residue_count(int digits) const;
  std::uint64_t residue_index(const Integer& a, int digits) const;
  Integer from_residue_index(std::uint64_t index, int digits, int prec) const;

  // sum_k d_k pi^k where d_k lists O_K coordinates (integers).
  Integer from_digits(const std::vector<std::vector<std::int64_t>>& digits, int prec) const;
  // pi-adic digit expansion with digits in {sum_j b_j x^j}.
  std::vector<std::vector<int>> to_digits(const Integer& a) const;

  // Bitset over residues modulo pi^(2e+1) marking squares of units.
  bool is_unit_square_residue(std::uint64_t index) const;
  const std::vector<std::uint64_t>& unit_square_residues() const;

  bool operator==(const FieldSpec& o) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// A nonzero element pi^valuation * unit, or zero.
class Element {
 public:
  static Element zero(const FieldSpec& field);
  static Element from_int(const FieldSpec& field, std::int64_t v);
  // Normalizes a ring element; a value vanishing to precision becomes zero.
  static Element from_integer(const FieldSpec& field, const Integer& a);
  static Element from_unit(const FieldSpec& field, int valuation, const Integer& unit);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return zero_; }
  int valuation() const;
  const Integer& unit() const { return unit_; }

  Element operator*(const Element& o) const;
  Element operator-() const;
  Element inverse() const;
  // Ring element pi^valuation * unit; requires valuation >= 0.
  Integer to_integer() const;

 private:
  FieldSpec field_;
  bool zero_ = true;
  int valuation_ = 0;
  Integer unit_{};
};

bool is_square(const Element& x);

// Finds v with v^2 = u mod pi^target by digit-by-digit lifting, starting from
// a square root modulo pi^(e+1) of a unit u in U_(2e+1).  nullopt if the
// lifting gets stuck, which cannot happen for u in U_(2e+1).
std::optional<Integer> lift_square_root(const FieldSpec& field, const Integer& u, int target);

// Subgroup of F^x/F^x2 tracked as a bitset over keys (valuation parity,
// unit residue modulo pi^(2e+1)), with coordinates relative to the generators
// inserted so far.
class ClassSubgroup {
 public:
  explicit ClassSubgroup(const FieldSpec& field);

  std::uint64_t key(const Element& x) const;
  bool contains_key(std::uint64_t key) const;
  bool contains(const Element& x) const { return contains_key(key(x)); }
  // Coordinates over the inserted generators, or nullopt.
  std::optional<f2::Vec> coordinates(std::uint64_t key) const;
  // Returns false if x already lies in the subgroup.
  bool insert(const Element& x);
  std::uint64_t size() const { return members_.size(); }
  int generator_count() const { return generators_; }
  // Number of keys in the whole group F^x / U_(2e+1) F^x2-compatible universe.
  std::uint64_t universe_size() const { return universe_; }

 private:
  FieldSpec field_;
  int digits_;
  std::uint64_t residues_;
  std::uint64_t universe_;
  std::vector<std::uint16_t> coords_;  // 0xffff marks absence
  std::vector<std::uint64_t> members_;
  int generators_ = 0;
};

// Norm classes {x^2 - a y^2} for a non-square a, enumerated over primitive
// pairs modulo pi^(3e+1) until they fill an index-2 subgroup.
ClassSubgroup norm_subgroup(const Element& a);

// Hilbert symbol by the norm-class method, +1 or -1.
int hilbert(const Element& a, const Element& b);
// Hilbert symbol by searching a Hensel-liftable primitive zero of
// z^2 - a x^2 - b y^2 modulo pi^(2e+1).
int hilbert_conic(const Element& a, const Element& b);

class SquareClassSpace {
 public:
  static SquareClassSpace build(const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  // ef + 2; coordinate 0 belongs to the uniformizer.
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Element>& basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  f2::Vec unit_mask() const;
  f2::Vec coords(const Element& x) const;
  Element representative(f2::Vec v) const;
  // Gram rows over F_2: bit j of row i is set when (b_i, b_j) = -1.
  const std::vector<f2::Vec>& gram() const { return gram_; }
  int symbol(f2::Vec a, f2::Vec b) const;

 private:
  FieldSpec field_;
  std::vector<Element> basis_;
  std::vector<std::string> labels_;
  std::shared_ptr<const ClassSubgroup> table_;
  std::vector<f2::Vec> gram_;
};

struct RadicalReport {
  f2::Vec radical = 0;
  Element generator;
  std::string generator_label;
  bool annihilates_units = false;
  bool u2e_classes_are_radical = false;  // classes of U_2e are exactly {1, radical}
  int u2e_square_count = 0;              // squares among 1 + pi^2e t, t mod pi
  int u2e_residue_count = 0;
  int unit_form_radical_order = 0;       // |R / O^x2| from the unit Gram matrix
  std::uint64_t index_in_units = 0;      // [O^x : R]
  bool odd_pairing = false;              // (u, a pi^k) = -1 for k odd
  bool hensel_lifts = false;             // U_(2e+1) lifts to squares mod pi^N
  bool ok() const;
};

RadicalReport integral_radical(const SquareClassSpace& space);

struct UnitDecomposition {
  int case_number = 0;  // 1: -1 in R, 2: (-1,-1) = -1, 3: otherwise
  int k = 0;            // number of anisotropic generators u_i
  int l = 0;            // number of hyperbolic pairs
  f2::Vec radical = 0;
  std::vector<f2::Vec> basis;  // full class vectors: u_1..u_k, e_1, f_1, ...
  std::vector<Element> representatives;
  std::vector<f2::Vec> gram;  // rows in the basis above
  f2::Vec minus_one = 0;      // -1 in the basis above

  int dimension() const { return static_cast<int>(basis.size()); }
  // Coordinates of a unit class modulo the radical in the basis above.
  f2::Vec reduce(f2::Vec unit_class) const;
};

UnitDecomposition decompose_units(const SquareClassSpace& space);

// Images of U_j / (U_j cap R) for j in {0, 1}, in decomposition coordinates.
std::vector<f2::Vec> filtration_classes(const SquareClassSpace& space,
                                        const UnitDecomposition& dec, int j);

// |O^x / U_k| by enumeration of unit residues.
std::uint64_t unit_quotient_order(const FieldSpec& field, int k);

}  // namespace metacover::padic
