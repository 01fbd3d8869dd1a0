#include <random>
#include <set>

#include "doctest.h"
#include "metacover/coxeter.hpp"

using namespace metacover;
using namespace metacover::coxeter;
using roots::RootSystem;

namespace {

AffineWeylGroup group(char t, int r) { return AffineWeylGroup(RootSystem::make(t, r)); }

}  // namespace

TEST_CASE("generators have length one and the affine reflection is w_{alpha_0,-2}") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}, {'E', 6}}) {
    AffineWeylGroup G = group(t, r);
    for (int s = 0; s < G.generator_count(); ++s) {
      CHECK(G.length_tilde(G.generator(s)) == 1);
      CHECK(G.length_two(G.generator(s)) == 2);
      CHECK(G.multiply(G.generator(s), G.generator(s)) == G.identity());
    }
    // w_af(v) = v - (<alpha_0, v> + 2) alpha_0^vee with alpha_0 = -theta.
    const auto& sys = G.system();
    const Coords theta = sys.highest_root();
    const Coords p{3, -1, 2, 5, 0, 1, -2, 4};
    Coords v{};
    for (int i = 0; i < r; ++i) v[i] = p[i];
    Coords image = G.act(G.generator(0), v, 1);
    const int a0 = -sys.pairing(theta, v);
    for (int i = 0; i < r; ++i) CHECK(image[i] == v[i] - (a0 + 2) * (-theta[i]));
  }
}

TEST_CASE("translation example in A2") {
  AffineWeylGroup G = group('A', 2);
  AffineElement x = G.translation(Coords{2, 0});  // 2 alpha_1^vee
  CHECK(G.length_tilde(x) == 4);
  CHECK(G.length_two(x) == 8);
  CHECK(G.length_tilde_formula(x) == 4);
}

TEST_CASE("composition matches the action on points") {
  AffineWeylGroup G = group('D', 4);
  std::mt19937_64 rng(3);
  auto random_element = [&] {
    AffineElement x = G.identity();
    for (int k = 0; k < 6; ++k) x = G.multiply(x, G.generator(static_cast<int>(rng() % 5)));
    return x;
  };
  for (int t = 0; t < 100; ++t) {
    AffineElement a = random_element(), b = random_element();
    Coords p{};
    for (int i = 0; i < 4; ++i) p[i] = static_cast<int>(rng() % 21) - 10;
    const int denom = 7;
    Coords lhs = G.act(G.multiply(a, b), p, denom);
    Coords rhs = G.act(a, G.act(b, p, denom), denom);
    CHECK(lhs == rhs);
    CHECK(G.multiply(a, G.inverse(a)) == G.identity());
  }
}

TEST_CASE("length function properties over enumerated elements") {
  for (auto [t, r, L] : std::vector<std::tuple<char, int, int>>{{'A', 2, 5}, {'A', 3, 4}, {'D', 4, 4}, {'E', 6, 3}}) {
    AffineWeylGroup G = group(t, r);
    auto elems = G.enumerate(L);
    for (const auto& x : elems) {
      const int l = G.length_tilde(x);
      CHECK(l <= L);
      CHECK(G.length_tilde_formula(x) == l);
      CHECK(G.length_two(x) == 2 * l);
      CHECK(G.length_tilde(G.inverse(x)) == l);
      for (int s = 0; s < G.generator_count(); ++s) {
        int d = G.length_tilde(G.multiply(x, G.generator(s))) - l;
        CHECK((d == 1 || d == -1));
      }
      ReducedWord rw = G.reduced_word(x);
      CHECK(static_cast<int>(rw.word.size()) == l);
      CHECK(G.from_word(rw.omega, rw.word) == x);
      CHECK(G.length_tilde(rw.omega) == 0);
    }
  }
}

TEST_CASE("length-zero group") {
  CHECK(group('A', 2).omega_group().size() == 1u);
  CHECK(group('A', 3).omega_group().size() == 2u);
  CHECK(group('D', 4).omega_group().size() == 4u);
  CHECK(group('D', 5).omega_group().size() == 2u);
  CHECK(group('E', 6).omega_group().size() == 1u);
  CHECK(group('E', 7).omega_group().size() == 2u);

  AffineWeylGroup A3 = group('A', 3);
  const auto& om = A3.omega_group()[1];
  CHECK(om.node_map[0] == 2);
  CHECK(om.node_map[2] == 0);
  CHECK(om.node_map[1] == 3);
  CHECK(om.node_map[3] == 1);

  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}, {'E', 7}}) {
    AffineWeylGroup G = group(t, r);
    for (const auto& o : G.omega_group()) {
      CHECK(G.length_tilde(o.element) == 0);
      CHECK(G.multiply(o.element, o.element) == G.identity());
      for (int s = 0; s < G.generator_count(); ++s) {
        AffineElement conj = G.multiply(G.multiply(o.element, G.generator(s)), G.inverse(o.element));
        CHECK(conj == G.generator(o.node_map[s]));
      }
    }
  }
}

TEST_CASE("reduced words are connected by braid moves") {
  for (auto [t, r, L] : std::vector<std::tuple<char, int, int>>{{'A', 2, 5}, {'A', 3, 5}, {'D', 4, 4}}) {
    AffineWeylGroup G = group(t, r);
    for (const auto& x : G.enumerate(L)) {
      auto words = G.all_reduced_words(x);
      REQUIRE(!words.empty());
      for (const auto& w : words) CHECK(G.from_word(G.reduced_word(x).omega, w) == x);
      CHECK(braid_connected(G, words));
    }
  }
}

TEST_CASE("braid orders follow the affine diagram") {
  AffineWeylGroup A2 = group('A', 2);
  CHECK(A2.braid_order(0, 1) == 3);
  CHECK(A2.braid_order(1, 2) == 3);
  AffineWeylGroup D4 = group('D', 4);
  CHECK(D4.braid_order(0, 2) == 3);
  CHECK(D4.braid_order(0, 1) == 2);
  CHECK(D4.braid_order(1, 3) == 2);
}
