#pragma once

// Named verification checks shared by the command line front end and the
// acceptance runner.  A check records what it compared as strings, so that a
// report can be printed or serialized without knowing where it came from.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "metacover/coxeter.hpp"
#include "metacover/covertorus.hpp"
#include "metacover/imhecke.hpp"
#include "metacover/padic.hpp"
#include "metacover/rootdata.hpp"

namespace metacover::checks {

using Params = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string check;
  Params params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

CheckResult compare(std::string check, Params params, std::string expected, std::string actual);

struct Suite {
  std::string name;
  std::vector<CheckResult> results;
  bool pass() const;
  int failures() const;
  void add(std::vector<CheckResult> more);
};

// A field together with its square classes and unit decomposition.
struct FieldContext {
  padic::FieldSpec field;
  padic::SquareClassSpace space;
  padic::UnitDecomposition dec;

  static FieldContext make(int e, int f, std::vector<std::int64_t> eisenstein = {});
  torus::UnitForm form() const { return torus::UnitForm::from_decomposition(dec); }
  // "e=2,f=1,x^2-2" style label.
  std::string label() const;
};

// Reference rows of the published classification tables.
struct LatticeReference {
  std::string quotient;
  std::uint64_t index = 0;
  std::vector<std::vector<int>> odd_nodes;  // sorted
};
LatticeReference lattice_reference(char type, int rank);

struct RepsReference {
  std::uint64_t dimension = 0;
  std::uint64_t count = 0;
};
RepsReference reps_reference(char type, int rank, int ef);

// Hilbert symbol of two nonzero integers over Q_2 from the classical formula.
int q2_hilbert_closed_form(std::int64_t a, std::int64_t b);

std::vector<CheckResult> lattice_checks(const roots::RootSystem& sys);
// Integral radical and unit filtration facts for one field.
std::vector<CheckResult> field_checks(const FieldContext& fc);
// Norm-class and conic methods on every pair of square-class basis vectors.
std::vector<CheckResult> hilbert_method_checks(const FieldContext& fc);
std::vector<CheckResult> length_checks(const coxeter::AffineWeylGroup& group, int max_len);
std::vector<CheckResult> table2_checks(const torus::CoverTorusGroup& group, const std::string& field_label);
// Exhaustive up to order 2^10, otherwise sampled with at least 10^4 triples.
std::vector<CheckResult> torus_checks(const torus::CoverTorusGroup& group, const std::string& field_label,
                                      std::uint64_t seed);
// Weyl invariance and branching of every pseudo-spherical representation,
// and agreement with the tensor construction for small groups.
std::vector<CheckResult> invariance_checks(const torus::CoverTorusGroup& group, const std::string& field_label);
// Trace and square identities of X over every root, unit class and j in {0, 1}.
std::vector<CheckResult> x_element_checks(const FieldContext& fc, const torus::CoverTorusGroup& group);
std::vector<CheckResult> decomposition_checks(const FieldContext& fc, int expected_case);
std::vector<CheckResult> hecke_checks(const hecke::RelationReport& report);
std::vector<CheckResult> finite_model_checks(const hecke::FiniteModelReport& report);

struct Criterion {
  int id = 0;
  std::string title;
  std::function<Suite(std::uint64_t seed)> run;
};

// The ten acceptance criteria in order.
const std::vector<Criterion>& acceptance_matrix();

}  // namespace metacover::checks
