#pragma once

// Genuine irreducible representations of the covering torus and of its
// coordinate subgroups, built as monomial matrices over Z[i] by inducing a
// character from a maximal abelian subgroup.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "metacover/covertorus.hpp"

namespace metacover::reps {

using torus::CoverTorusGroup;
using torus::Elem;

struct Gauss {
  long long re = 0;
  long long im = 0;

  Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
  Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
  Gauss conj() const { return {re, -im}; }
  long long norm() const { return re * re + im * im; }
  bool operator==(const Gauss&) const = default;
};

// i^p for p mod 4.
Gauss phase_value(int p);
std::string to_string(const Gauss& z);

// Elements of the covering torus whose coordinates lie in a fixed mask.  The
// coordinate subgroups used here are the whole group, the factors M_i and N_j,
// and the sub-tori obtained by deleting a node.
class TorusSubgroup {
 public:
  // Keeps its own copy of the group, shared between copies of the subgroup.
  TorusSubgroup(const CoverTorusGroup& group, Elem coord_mask);
  TorusSubgroup(std::shared_ptr<const CoverTorusGroup> group, Elem coord_mask);

  const CoverTorusGroup& group() const { return *group_; }
  Elem mask() const { return mask_; }
  std::uint64_t order() const { return std::uint64_t{2} << bits_.size(); }
  Elem element(std::uint64_t i) const;
  std::uint64_t index(Elem x) const;
  bool contains(Elem x) const { return ((x & group_->coord_mask()) & ~mask_) == 0; }
  std::vector<Elem> generators() const;
  std::vector<Elem> center() const;

 private:
  std::shared_ptr<const CoverTorusGroup> group_;
  Elem mask_;
  std::vector<int> bits_;
};

// A character of an abelian subgroup with values in the 4th roots of unity,
// stored as exponents of i.
using PhaseMap = std::unordered_map<Elem, std::uint8_t>;

std::vector<PhaseMap> genuine_central_characters(const TorusSubgroup& h);

struct MonomialMatrix {
  std::vector<int> row;              // column t has its entry in row[t]
  std::vector<std::uint8_t> phase;   // the entry is i^phase[t]
};

class GenuineRep {
 public:
  static GenuineRep construct(const TorusSubgroup& h, const PhaseMap& central);

  const TorusSubgroup& subgroup() const { return h_; }
  int dim() const { return static_cast<int>(transversal_.size()); }
  const std::vector<Elem>& polarization() const { return polarization_; }
  const PhaseMap& central_character() const { return central_; }
  MonomialMatrix matrix(Elem g) const;
  std::vector<Gauss> dense(Elem g) const;
  // Character values indexed by subgroup index.
  const std::vector<Gauss>& character() const { return character_; }
  Gauss character_at(Elem g) const { return character_[h_.index(g)]; }
  // Sum over the group of |chi|^2 divided by the order; 1 for irreducibles.
  bool irreducible() const;

 private:
  explicit GenuineRep(const TorusSubgroup& h) : h_(h) {}

  TorusSubgroup h_;
  PhaseMap central_;
  std::vector<Elem> polarization_;
  std::vector<Elem> transversal_;
  std::vector<int> coset_;          // by subgroup index
  std::vector<std::uint8_t> psi_;   // psi(t^{-1} x) by subgroup index
  std::vector<Gauss> character_;
};

std::vector<GenuineRep> all_genuine_reps(const TorusSubgroup& h);
std::vector<GenuineRep> all_pseudospherical(const CoverTorusGroup& group);

// Characters of the genuine irreducibles obtained by tensoring one
// representation of every M_i and N_j factor.
std::vector<std::vector<Gauss>> tensor_characters(const CoverTorusGroup& group);

bool same_character_sets(std::vector<std::vector<Gauss>> a, std::vector<std::vector<Gauss>> b);

// chi(phi_alpha(g)) = chi(g) for every simple alpha and every g.
bool is_weyl_invariant(const CoverTorusGroup& group, const std::vector<Gauss>& character);

// One-dimensional character with -1 -> 1 sending h_{alpha_node}(u) to
// (-1)^{<functional, u>}; it is not genuine.
std::vector<Gauss> sign_character(const CoverTorusGroup& group, int node, f2::Vec functional);

struct Branching {
  std::string subsystem;
  std::vector<int> multiplicities;  // against all_genuine_reps of the sub-torus
  std::vector<int> dims;
  bool exact = true;  // every multiplicity came out integral
  int constituents() const;
  bool multiplicity_free() const;
};

// Restriction to the sub-torus of A_{r-1} in A_r (deleting node r) or of
// D_{r-1} in D_r (deleting node 1).
Branching restrict_branch(const GenuineRep& rep);

struct XMatrix {
  int dim = 0;
  std::vector<Gauss> numerator;  // dim x dim, row major
  long long denominator = 1;
};

// (1/N) sum over classes v of (v, u) rho(h~_gamma(v)); N = |classes|.
XMatrix x_matrix(const GenuineRep& rep, const roots::Coords& gamma, f2::Vec u, const std::vector<f2::Vec>& classes);

std::vector<Gauss> mat_mul(const std::vector<Gauss>& a, const std::vector<Gauss>& b, int n);
Gauss trace(const std::vector<Gauss>& a, int n);

struct XIdentities {
  bool trace_ok = false;   // Tr X = dim / N
  bool square_ok = false;  // X^2 = (-1, u) N^{-1} rho(h~_gamma(-1))
};

XIdentities check_x_identities(const GenuineRep& rep, const roots::Coords& gamma, f2::Vec u,
                               const std::vector<f2::Vec>& classes);

}  // namespace metacover::reps
