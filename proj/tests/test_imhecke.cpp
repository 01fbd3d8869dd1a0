#include "doctest.h"
#include "metacover/error.hpp"
#include "metacover/imhecke.hpp"

using namespace metacover;
using namespace metacover::hecke;
using roots::RootSystem;

namespace {

AffineWeylGroup group(char t, int r) { return AffineWeylGroup(RootSystem::make(t, r)); }

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly one = LaurentPoly::constant(1);

}  // namespace

TEST_CASE("Laurent polynomials") {
  const LaurentPoly p = q * q - one;
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(0) == -1);
  CHECK((p - p).is_zero());
  CHECK((LaurentPoly::monomial(1, -1) * q) == one);
  CHECK(p.evaluate(2) == 3);
  CHECK(p.to_string() == "q^2 - 1");
  CHECK((q - one).to_string() == "q - 1");
  CHECK_THROWS_AS(LaurentPoly::monomial(1, -1).evaluate(2), Error);
}

TEST_CASE("quadratic relation and length-zero elements") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}}) {
    HeckeAlgebra alg(group(t, r));
    const HeckeElement e = alg.one();
    for (int s = 0; s < alg.group().generator_count(); ++s) {
      const HeckeElement ts = alg.generator(s);
      CHECK(alg.mul(ts, ts) == ts.scaled(q - one) + e.scaled(q));
    }
    for (std::size_t i = 0; i < alg.group().omega_group().size(); ++i) {
      const HeckeElement te = alg.omega(static_cast<int>(i));
      CHECK(alg.mul(te, te) == e);
    }
  }
}

TEST_CASE("translation basis element in A_2") {
  HeckeAlgebra alg(group('A', 2));
  const AffineElement x = alg.group().translation({2, 0});
  const HeckeElement t = alg.t_basis(x);
  CHECK(t == alg.basis(x));
  CHECK(alg.group().reduced_word(x).word.size() == 4u);
  HeckeAlgebra a3(group('A', 3));
  const AffineElement om = a3.group().omega_group()[1].element;
  CHECK(a3.t_basis(om) == a3.basis(om));
  CHECK(a3.group().reduced_word(om).word.empty());
}

TEST_CASE("relation suites") {
  for (auto [t, r, trials] : std::vector<std::tuple<char, int, int>>{{'A', 2, 200}, {'A', 3, 100}, {'D', 4, 100}}) {
    HeckeAlgebra alg(group(t, r));
    RelationReport rep = verify_relations(alg, trials, 7);
    for (const auto& f : rep.families) {
      CAPTURE(f.name);
      CAPTURE(f.first_failure);
      CHECK(f.pass());
      CHECK(f.checked > 0);
    }
  }
}

TEST_CASE("reports are reproducible from the seed") {
  HeckeAlgebra alg(group('A', 2));
  RelationReport a = verify_relations(alg, 30, 11), b = verify_relations(alg, 30, 11);
  REQUIRE(a.families.size() == b.families.size());
  for (std::size_t i = 0; i < a.families.size(); ++i) CHECK(a.families[i].checked == b.families[i].checked);
}

TEST_CASE("a corrupted quadratic constant is detected") {
  HeckeAlgebra alg(group('A', 2));
  alg.set_quadratic(0, q - LaurentPoly::constant(2), q);
  RelationReport rep = verify_relations(alg, 200, 7);
  CHECK_FALSE(rep.pass());
  bool quad_failed = false, assoc_failed = false;
  for (const auto& f : rep.families) {
    if (f.name == "quadratic") quad_failed = !f.pass();
    if (f.name == "associativity") {
      assoc_failed = !f.pass();
      CHECK(!f.first_failure.empty());
    }
  }
  CHECK(quad_failed);
  CHECK(assoc_failed);
}

TEST_CASE("basis inverses") {
  HeckeAlgebra alg(group('D', 4));
  const auto& G = alg.group();
  for (const auto& x : G.enumerate(2)) {
    const HeckeElement inv = alg.inverse_basis(x);
    CHECK(alg.mul(alg.basis(x), inv) == alg.one());
  }
}

TEST_CASE("finite Iwahori-Hecke model of SL_3(F_2)") {
  FiniteModelReport rep = finite_iwahori_sl3f2();
  CHECK(rep.group_order == 168);
  CHECK(rep.borel_order == 8);
  CHECK(rep.double_cosets == 6);
  CHECK(rep.flag_count == 21);
  CHECK(rep.quadratic);
  CHECK(rep.braid);
  CHECK(rep.poincare);
  CHECK(rep.matches_generic);
  CHECK(rep.notes.empty());
  CHECK(rep.pass());
}
