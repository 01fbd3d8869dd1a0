#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "metacover/error.hpp"
#include "metacover/padic.hpp"

using namespace metacover;
using namespace metacover::padic;

namespace {

// Closed formula for the Hilbert symbol over Q_2 on nonzero integers.
int q2_hilbert_oracle(std::int64_t a, std::int64_t b) {
  int alpha = 0, beta = 0;
  while (a % 2 == 0) a /= 2, ++alpha;
  while (b % 2 == 0) b /= 2, ++beta;
  auto mod8 = [](std::int64_t u) { return ((u % 8) + 8) % 8; };
  auto eps = [&](std::int64_t u) { return ((mod8(u) - 1) / 2) % 2; };
  auto omega = [&](std::int64_t u) { std::int64_t m = mod8(u); return static_cast<int>(((m * m - 1) / 8) % 2); };
  int exponent = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
  return exponent % 2 ? -1 : 1;
}

struct FieldCase {
  int e, f;
  std::vector<std::int64_t> eis;
};

const std::vector<FieldCase> kFields = {
    {1, 1, {}}, {2, 1, {}}, {3, 1, {}}, {1, 2, {}}, {2, 2, {}}, {1, 3, {}}, {2, 1, {2, 2}},
};

}  // namespace

TEST_CASE("ring arithmetic round trips") {
  for (const auto& fc : kFields) {
    FieldSpec F = FieldSpec::make(fc.e, fc.f, fc.eis);
    const int n = F.precision();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      Integer x = F.from_residue_index(rng() % F.residue_count(n), n, n);
      Integer px = F.mul(F.uniformizer(n), x);
      CHECK(F.divide_by_pi(px) == F.reduce(x, n - 1));
      if (F.is_unit(x)) {
        Integer inv = F.unit_inverse(x);
        CHECK(F.mul(x, inv) == F.from_int(1, n));
      }
      CHECK(F.residue_index(x, n) == F.residue_index(F.from_residue_index(F.residue_index(x, n), n, n), n));
    }
    // pi^e / 2 is a unit.
    auto v = F.valuation(F.pi_power(fc.e, n));
    REQUIRE(v.has_value());
    CHECK(*v == fc.e);
  }
}

TEST_CASE("digit expansion reproduces the element") {
  FieldSpec F = FieldSpec::make(2, 2);
  const int n = F.precision();
  Integer x = F.from_residue_index(123457, n, n);
  auto digits = F.to_digits(x);
  std::vector<std::vector<std::int64_t>> d64;
  for (const auto& d : digits) d64.emplace_back(d.begin(), d.end());
  CHECK(F.from_digits(d64, n) == x);
}

TEST_CASE("square test over Q_2") {
  FieldSpec F = FieldSpec::make(1, 1);
  auto sq = [&](std::int64_t v) { return is_square(Element::from_int(F, v)); };
  CHECK(sq(1));
  CHECK(sq(17));
  CHECK(sq(-7));
  CHECK(sq(68));
  CHECK_FALSE(sq(5));
  CHECK_FALSE(sq(2));
  CHECK_FALSE(sq(-1));
  CHECK_FALSE(sq(3));
  CHECK_THROWS_AS(sq(0), Error);
}

TEST_CASE("Hilbert symbol over Q_2 matches the closed formula") {
  FieldSpec F = FieldSpec::make(1, 1);
  CHECK(hilbert(Element::from_int(F, -1), Element::from_int(F, -1)) == -1);
  CHECK(hilbert(Element::from_int(F, 2), Element::from_int(F, -1)) == 1);
  CHECK(hilbert(Element::from_int(F, 5), Element::from_int(F, 2)) == -1);
  const std::vector<std::int64_t> values = {1, -1, 2, -2, 3, 5, 6, 7, -3, 10, 12, 24, -24, 40, 96, 13};
  for (auto a : values)
    for (auto b : values) {
      const int expected = q2_hilbert_oracle(a, b);
      CHECK_MESSAGE(hilbert(Element::from_int(F, a), Element::from_int(F, b)) == expected, a, ",", b);
      CHECK_MESSAGE(hilbert_conic(Element::from_int(F, a), Element::from_int(F, b)) == expected, a, ",", b);
    }
}

TEST_CASE("square class spaces and both Hilbert methods agree") {
  for (const auto& fc : kFields) {
    FieldSpec F = FieldSpec::make(fc.e, fc.f, fc.eis);
    CAPTURE(F.describe());
    SquareClassSpace S = SquareClassSpace::build(F);
    REQUIRE(S.dimension() == fc.e * fc.f + 2);
    for (int i = 0; i < S.dimension(); ++i) {
      CHECK(S.coords(S.basis()[i]) == (f2::Vec{1} << i));
      for (int j = 0; j < S.dimension(); ++j)
        CHECK(S.symbol(1u << i, 1u << j) == hilbert_conic(S.basis()[i], S.basis()[j]));
    }
    // Nondegeneracy of the full pairing.
    CHECK(f2::rank(S.gram()) == S.dimension());
    // (a, -a) = 1 and (a, a) = (a, -1).
    const f2::Vec m = S.coords(Element::from_int(F, -1));
    for (f2::Vec a = 1; a < (f2::Vec{1} << S.dimension()); ++a) {
      CHECK(S.symbol(a, a ^ m) == 1);
      CHECK(S.symbol(a, a) == S.symbol(a, m));
    }
  }
}

TEST_CASE("Hilbert symbol is bimultiplicative on sampled elements") {
  FieldSpec F = FieldSpec::make(2, 1, {2, 2});
  SquareClassSpace S = SquareClassSpace::build(F);
  const int n = F.precision();
  std::mt19937_64 rng(5);
  auto sample = [&] {
    Integer u = F.from_residue_index(rng() % F.residue_count(n), n, n);
    if (!F.is_unit(u)) u = F.add(u, F.from_int(1, n));
    return Element::from_unit(F, static_cast<int>(rng() % 4), u);
  };
  for (int t = 0; t < 6; ++t) {
    Element a = sample(), b = sample(), c = sample();
    CHECK(hilbert(a, b * c) == hilbert(a, b) * hilbert(a, c));
    CHECK(hilbert(a, b) == hilbert(b, a));
    CHECK(hilbert(a, b) == S.symbol(S.coords(a), S.coords(b)));
    CHECK(hilbert(a, -a) == 1);
  }
}

TEST_CASE("integral radical") {
  for (const auto& fc : kFields) {
    FieldSpec F = FieldSpec::make(fc.e, fc.f, fc.eis);
    CAPTURE(F.describe());
    SquareClassSpace S = SquareClassSpace::build(F);
    RadicalReport r = integral_radical(S);
    CHECK(r.radical != 0);
    CHECK(r.annihilates_units);
    CHECK(r.u2e_classes_are_radical);
    CHECK(r.unit_form_radical_order == 2);
    CHECK(r.index_in_units == (std::uint64_t{1} << (fc.e * fc.f)));
    CHECK(r.u2e_square_count * 2 == r.u2e_residue_count);
    CHECK(r.odd_pairing);
    CHECK(r.hensel_lifts);
  }
  FieldSpec Q2 = FieldSpec::make(1, 1);
  SquareClassSpace S = SquareClassSpace::build(Q2);
  CHECK(integral_radical(S).radical == S.coords(Element::from_int(Q2, 5)));
}

TEST_CASE("unit decomposition cases") {
  struct Expect {
    FieldCase field;
    int case_number;
  };
  const std::vector<Expect> expects = {
      {{1, 1, {}}, 2},        // Q_2
      {{2, 1, {2, 2}}, 1},    // Q_2(sqrt(-1)), uniformizer root of x^2 + 2x + 2
      {{2, 1, {-2, 0}}, 3},   // Q_2(sqrt(2))
      {{3, 1, {}}, 2},
      {{1, 3, {}}, 2},
  };
  for (const auto& ex : expects) {
    FieldSpec F = FieldSpec::make(ex.field.e, ex.field.f, ex.field.eis);
    CAPTURE(F.describe());
    SquareClassSpace S = SquareClassSpace::build(F);
    UnitDecomposition d = decompose_units(S);
    CHECK(d.case_number == ex.case_number);
    CHECK(d.k + 2 * d.l == F.degree());
    for (int i = 0; i < d.dimension(); ++i)
      for (int j = 0; j < d.dimension(); ++j) {
        int expected = 0;
        if (i == j && i < d.k) expected = 1;
        if (i >= d.k && j >= d.k && i != j && (i - d.k) / 2 == (j - d.k) / 2) expected = 1;
        CHECK(((d.gram[i] >> j) & 1u) == static_cast<unsigned>(expected));
      }
  }
  for (const auto& fc : kFields) {
    FieldSpec F = FieldSpec::make(fc.e, fc.f, fc.eis);
    UnitDecomposition d = decompose_units(SquareClassSpace::build(F));
    CHECK(d.k + 2 * d.l == F.degree());
    CHECK(d.k <= 2);
  }
}

TEST_CASE("filtration classes cover all unit classes mod R") {
  FieldSpec F = FieldSpec::make(2, 1);
  SquareClassSpace S = SquareClassSpace::build(F);
  UnitDecomposition d = decompose_units(S);
  CHECK(filtration_classes(S, d, 0).size() == 4u);
  CHECK(filtration_classes(S, d, 1).size() == 4u);
  CHECK_THROWS_AS(filtration_classes(S, d, 2), Error);
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(FieldSpec::make(4, 2), Error);
  CHECK_THROWS_AS(FieldSpec::make(2, 1, {4, 0}), Error);
  CHECK_THROWS_AS(FieldSpec::make(2, 1, {2, 1}), Error);
}
