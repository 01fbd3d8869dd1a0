#pragma once

// The Iwahori-Matsumoto algebra of the extended affine Weyl group over
// Z[q, q^{-1}], with basis T_x and a finite Iwahori-Hecke model for SL_3(F_2).

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "metacover/coxeter.hpp"

namespace metacover::hecke {

using coxeter::AffineElement;
using coxeter::AffineElementHash;
using coxeter::AffineWeylGroup;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(long long c);
  static LaurentPoly monomial(long long c, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, long long>& terms() const { return terms_; }
  long long coefficient(int exponent) const;
  // Exact value at an integer q; rejects negative exponents.
  long long evaluate(long long q) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void add_term(int exponent, long long c);
  std::map<int, long long> terms_;
};

class HeckeElement {
 public:
  using Map = std::unordered_map<AffineElement, LaurentPoly, AffineElementHash>;

  HeckeElement() = default;
  static HeckeElement basis(const AffineElement& x, LaurentPoly c = LaurentPoly::constant(1));

  const Map& terms() const { return terms_; }
  void add(const AffineElement& x, const LaurentPoly& c);
  LaurentPoly coefficient(const AffineElement& x) const;
  bool is_zero() const { return terms_.empty(); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const LaurentPoly& c) const;
  bool operator==(const HeckeElement& o) const;

 private:
  Map terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const AffineWeylGroup& group);

  const AffineWeylGroup& group() const { return group_; }

  // T_s^2 = a T_s + b; the default is a = q - 1, b = q for every s.
  void set_quadratic(int s, LaurentPoly a, LaurentPoly b);

  HeckeElement one() const;
  HeckeElement basis(const AffineElement& x) const { return HeckeElement::basis(x); }
  HeckeElement generator(int s) const;
  HeckeElement omega(int i) const;
  // Product of generators along the canonical reduced word of x.
  HeckeElement t_basis(const AffineElement& x) const;
  // Product of T_s along an arbitrary word, followed by T_omega.
  HeckeElement from_word(const std::vector<int>& word, const AffineElement& omega) const;

  HeckeElement mul_generator(const HeckeElement& h, int s) const;
  HeckeElement mul_omega(const HeckeElement& h, const AffineElement& omega) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  // Two-sided inverse of T_x, as a combination of basis elements.
  HeckeElement inverse_basis(const AffineElement& x) const;

  std::string describe(const HeckeElement& h) const;

 private:
  AffineWeylGroup group_;
  std::vector<LaurentPoly> quad_a_, quad_b_;
};

// Product through the twisted tensor presentation C[Omega] (x) H_af, using
// (e1 (x) t_w1)(e2 (x) t_w2) = e1 e2 (x) t_{e2^{-1} w1 e2} t_w2.
HeckeElement twisted_product(const HeckeAlgebra& alg, const AffineElement& x1, const AffineElement& x2);

struct RelationFamily {
  std::string name;
  int checked = 0;
  int failed = 0;
  std::string first_failure;
  bool pass() const { return failed == 0; }
};

struct RelationReport {
  std::string system;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string product_formula_printed;
  std::string product_formula_used;
  std::vector<RelationFamily> families;
  bool pass() const;
};

RelationReport verify_relations(const HeckeAlgebra& alg, int trials, std::uint64_t seed, int max_word = 4);

struct FiniteModelReport {
  int group_order = 0;
  int borel_order = 0;
  int double_cosets = 0;
  int flag_count = 0;        // [G : B]
  std::vector<int> cell_sizes;  // |BwB| / |B| per Weyl element
  bool quadratic = false;     // T_s^2 = (q - 1) T_s + q at q = 2
  bool braid = false;
  bool poincare = false;      // sum of q^{l(w)} equals [G : B]
  bool matches_generic = false;  // every product of finite T_w agrees with the generic algebra at q = 2
  std::vector<std::string> notes;
  bool pass() const;
};

FiniteModelReport finite_iwahori_sl3f2();

}  // namespace metacover::hecke
