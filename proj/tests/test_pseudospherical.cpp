#include <algorithm>

#include "doctest.h"
#include "metacover/error.hpp"
#include "metacover/pseudospherical.hpp"

using namespace metacover;
using namespace metacover::reps;
using roots::RootSystem;
using torus::UnitForm;

namespace {

// Dimension exponent (per unit of ef) and count exponent of pseudo-spherical
// representations, transcribed from the published table.
struct TableRow {
  int dim_exp;    // dimension = 2^{ef * dim_exp}
  int count_exp;  // count = 2^{ef * count_exp}
};

TableRow table_row(char type, int rank) {
  switch (type) {
    case 'A': return {rank / 2, rank % 2 == 1 ? 1 : 0};
    case 'D': return rank % 2 == 1 ? TableRow{(rank - 1) / 2, 1} : TableRow{rank / 2 - 1, 2};
    default: return rank == 8 ? TableRow{4, 0} : TableRow{3, rank == 7 ? 1 : 0};
  }
}

padic::UnitDecomposition decomposition(int e, int f, std::vector<std::int64_t> eis = {}) {
  return padic::decompose_units(padic::SquareClassSpace::build(padic::FieldSpec::make(e, f, eis)));
}

CoverTorusGroup q2_group(char t, int r) {
  static const padic::UnitDecomposition q2 = decomposition(1, 1);
  return CoverTorusGroup(RootSystem::make(t, r), UnitForm::from_decomposition(q2));
}

}  // namespace

TEST_CASE("Gaussian integer helpers") {
  CHECK(phase_value(1) * phase_value(1) == Gauss{-1, 0});
  CHECK(phase_value(3) == Gauss{0, -1});
  CHECK(to_string(Gauss{2, -1}) == "2-1i");
  CHECK(to_string(Gauss{0, 3}) == "3i");
}

TEST_CASE("genuine central characters over Q_2") {
  CHECK(genuine_central_characters(TorusSubgroup(q2_group('A', 2), q2_group('A', 2).coord_mask())).size() == 1u);
  CoverTorusGroup A3 = q2_group('A', 3), D4 = q2_group('D', 4);
  CHECK(genuine_central_characters(TorusSubgroup(A3, A3.coord_mask())).size() == 2u);
  CHECK(genuine_central_characters(TorusSubgroup(D4, D4.coord_mask())).size() == 4u);
}

TEST_CASE("dimension and count table at ef = 1") {
  std::vector<std::pair<char, int>> types;
  for (int r = 2; r <= 6; ++r) types.push_back({'A', r});
  for (int r = 3; r <= 6; ++r) types.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) types.push_back({'E', r});
  for (auto [t, r] : types) {
    CAPTURE(t);
    CAPTURE(r);
    CoverTorusGroup G = q2_group(t, r);
    auto reps = all_pseudospherical(G);
    const TableRow row = table_row(t, r);
    CHECK(reps.size() == (std::size_t{1} << row.count_exp));
    std::uint64_t squares = 0;
    for (const auto& rep : reps) {
      CHECK(rep.dim() == (1 << row.dim_exp));
      CHECK(rep.irreducible());
      squares += static_cast<std::uint64_t>(rep.dim()) * rep.dim();
    }
    CHECK(squares == G.order() / 2);
  }
}

TEST_CASE("dimension and count table at ef = 2 and 3") {
  for (auto [e, f] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {3, 1}, {1, 3}}) {
    const UnitForm form = UnitForm::from_decomposition(decomposition(e, f));
    const int ef = e * f;
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}}) {
      CAPTURE(t);
      CAPTURE(r);
      CAPTURE(ef);
      CoverTorusGroup G(RootSystem::make(t, r), form);
      auto reps = all_pseudospherical(G);
      const TableRow row = table_row(t, r);
      CHECK(reps.size() == (std::size_t{1} << (ef * row.count_exp)));
      for (const auto& rep : reps) CHECK(rep.dim() == (1 << (ef * row.dim_exp)));
    }
  }
}

TEST_CASE("characters are genuine, vanish off the center and match the tensor construction") {
  for (auto [e, f] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const UnitForm form = UnitForm::from_decomposition(decomposition(e, f));
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}}) {
      CoverTorusGroup G(RootSystem::make(t, r), form);
      auto reps = all_pseudospherical(G);
      auto center = G.center();
      std::vector<std::vector<Gauss>> direct;
      for (const auto& rep : reps) {
        for (std::uint64_t i = 0; i < G.order(); ++i) {
          const torus::Elem x = G.from_index(i);
          CHECK(rep.character_at(x ^ torus::kSign) == Gauss{} - rep.character_at(x));
          if (std::find(center.begin(), center.end(), x) == center.end()) CHECK(rep.character_at(x) == Gauss{});
        }
        direct.push_back(rep.character());
      }
      CHECK(same_character_sets(direct, tensor_characters(G)));
    }
  }
}

TEST_CASE("monomial matrices form a representation") {
  CoverTorusGroup G(RootSystem::make('A', 3), UnitForm::from_decomposition(decomposition(1, 2)));
  auto reps = all_pseudospherical(G);
  const auto& rep = reps.back();
  const int n = rep.dim();
  for (std::uint64_t i = 0; i < G.order(); i += 5)
    for (std::uint64_t j = 0; j < G.order(); j += 3) {
      const auto x = G.from_index(i), y = G.from_index(j);
      CHECK(mat_mul(rep.dense(x), rep.dense(y), n) == rep.dense(G.multiply(x, y)));
    }
}

TEST_CASE("Weyl invariance") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}, {'E', 6}}) {
    CoverTorusGroup G = q2_group(t, r);
    for (const auto& rep : all_pseudospherical(G)) CHECK(is_weyl_invariant(G, rep.character()));
    CHECK(is_weyl_invariant(G, sign_character(G, 0, 0)));
  }
  CoverTorusGroup A2 = q2_group('A', 2);
  CHECK_FALSE(is_weyl_invariant(A2, sign_character(A2, 0, 1)));
}

TEST_CASE("branching") {
  for (const auto& rep : all_pseudospherical(q2_group('A', 3))) {
    Branching b = restrict_branch(rep);
    CHECK(b.exact);
    CHECK(b.subsystem == "A2");
    CHECK(b.constituents() == 1);
    CHECK(b.multiplicity_free());
  }
  for (const auto& rep : all_pseudospherical(q2_group('A', 4))) {
    Branching b = restrict_branch(rep);
    CHECK(b.exact);
    CHECK(b.constituents() == 2);
    CHECK(b.multiplicity_free());
  }
  for (const auto& rep : all_pseudospherical(q2_group('D', 4))) {
    Branching b = restrict_branch(rep);
    CHECK(b.exact);
    CHECK(b.subsystem == "D3");
    CHECK(b.multiplicity_free());
  }
  CHECK_THROWS_AS(restrict_branch(all_pseudospherical(q2_group('A', 2)).front()), Error);
}

TEST_CASE("X elements") {
  const padic::FieldSpec F = padic::FieldSpec::make(1, 1);
  const padic::SquareClassSpace S = padic::SquareClassSpace::build(F);
  const padic::UnitDecomposition dec = padic::decompose_units(S);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}}) {
    CoverTorusGroup G(RootSystem::make(t, r), UnitForm::from_decomposition(dec));
    for (int j = 0; j < 2; ++j) {
      const auto classes = padic::filtration_classes(S, dec, j);
      CHECK(classes.size() == 2u);
      for (const auto& rep : all_pseudospherical(G))
        for (const auto& gamma : G.system().roots())
          for (f2::Vec u : G.form().classes()) {
            XIdentities id = check_x_identities(rep, gamma, u, classes);
            CHECK(id.trace_ok);
            CHECK(id.square_ok);
            roots::Coords neg = gamma;
            for (int& c : neg) c = -c;
            const XMatrix a = x_matrix(rep, neg, u, classes);
            const XMatrix b = x_matrix(rep, gamma, u ^ G.form().minus_one, classes);
            CHECK(a.numerator == b.numerator);
          }
    }
  }
  // A_2, alpha_1, u = 1: trace of X is dim / 2 = 1.
  CoverTorusGroup A2(RootSystem::make('A', 2), UnitForm::from_decomposition(dec));
  const auto rep = all_pseudospherical(A2).front();
  const XMatrix x = x_matrix(rep, {1, 0}, 0, padic::filtration_classes(S, dec, 1));
  CHECK(x.denominator == 2);
  CHECK(trace(x.numerator, x.dim) == Gauss{2, 0});
}
