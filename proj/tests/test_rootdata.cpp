#include <set>
#include <vector>

#include "doctest.h"
#include "metacover/error.hpp"
#include "metacover/rootdata.hpp"

using namespace metacover;
using namespace metacover::roots;

namespace {

// Nontrivial classes of Y~/2Y as odd-node sets, transcribed from the
// classification table in the paper.
std::set<std::vector<int>> expected_classes(char type, int rank) {
  std::set<std::vector<int>> out;
  if (type == 'A' && rank % 2 == 1) {
    std::vector<int> odd;
    for (int i = 1; i <= rank; i += 2) odd.push_back(i);
    out.insert(odd);
  }
  if (type == 'D' && rank % 2 == 1) out.insert({rank - 1, rank});
  if (type == 'D' && rank % 2 == 0) {
    std::vector<int> base;
    for (int i = 1; i <= rank - 3; i += 2) base.push_back(i);
    auto a = base, b = base;
    a.push_back(rank);
    b.push_back(rank - 1);
    out.insert(a);
    out.insert(b);
    out.insert({rank - 1, rank});
  }
  if (type == 'E' && rank == 7) out.insert({2, 5, 7});
  return out;
}

int expected_index_log2(char type, int rank) {
  switch (type) {
    case 'A': return rank % 2 == 1 ? rank - 1 : rank;
    case 'D': return rank % 2 == 1 ? rank - 1 : rank - 2;
    default: return rank == 8 ? 8 : 6;
  }
}

}  // namespace

TEST_CASE("root counts") {
  for (int r = 2; r <= 8; ++r) CHECK(RootSystem::make('A', r).roots().size() == static_cast<std::size_t>(r * (r + 1)));
  for (int r = 3; r <= 8; ++r) CHECK(RootSystem::make('D', r).roots().size() == static_cast<std::size_t>(2 * r * (r - 1)));
  CHECK(RootSystem::make('E', 6).roots().size() == 72u);
  CHECK(RootSystem::make('E', 7).roots().size() == 126u);
  CHECK(RootSystem::make('E', 8).roots().size() == 240u);
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::make('E', 8).highest_root() == Coords{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem::make('D', 5).highest_root() == Coords{1, 2, 2, 1, 1, 0, 0, 0});
  CHECK(RootSystem::make('A', 4).highest_root() == Coords{1, 1, 1, 1, 0, 0, 0, 0});
}

TEST_CASE("reflections preserve the root set") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'D', 5}, {'E', 6}, {'E', 7}}) {
    RootSystem s = RootSystem::make(t, r);
    for (const auto& alpha : s.roots())
      for (const auto& beta : s.roots()) CHECK(s.is_root(s.reflect_root(alpha, beta)));
  }
}

TEST_CASE("Y~/2Y classification table") {
  std::vector<std::pair<char, int>> types;
  for (int r = 2; r <= 9; ++r) types.push_back({'A', r});
  for (int r = 3; r <= 8; ++r) types.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) types.push_back({'E', r});
  for (auto [t, r] : types) {
    CAPTURE(t);
    CAPTURE(r);
    RootSystem s = RootSystem::make(t, r);
    LatticeTable table = Ytilde_mod_2Y(s);
    auto got = table.odd_nodes();
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected_classes(t, r));
    CHECK(table.index == (std::uint64_t{1} << expected_index_log2(t, r)));
    CHECK(table.group_order * table.index == (std::uint64_t{1} << r));
    // Coordinates at adjacent nodes are never both odd.
    for (const auto& v : table.representatives)
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (s.adjacent(i, j)) CHECK((v[i] * v[j]) % 2 == 0);
  }
}

TEST_CASE("D4 and D3 classes") {
  auto d4 = Ytilde_mod_2Y(RootSystem::make('D', 4)).odd_nodes();
  CHECK(std::set<std::vector<int>>(d4.begin(), d4.end()) ==
        std::set<std::vector<int>>{{1, 4}, {1, 3}, {3, 4}});
  auto d3 = Ytilde_mod_2Y(RootSystem::make('D', 3)).odd_nodes();
  CHECK(d3 == std::vector<std::vector<int>>{{2, 3}});
  CHECK(Ytilde_mod_2Y(RootSystem::make('D', 4)).quotient == "Z/2 x Z/2");
}

TEST_CASE("ascii diagrams mark odd nodes") {
  RootSystem s = RootSystem::make('E', 7);
  auto table = Ytilde_mod_2Y(s);
  std::string art = ascii_diagram(s, table.representatives[1]);
  CHECK(art.find('o') != std::string::npos);
  CHECK(std::count(art.begin(), art.end(), 'o') == 3);
}

TEST_CASE("invalid root systems are rejected") {
  CHECK_THROWS_AS(RootSystem::make('A', 1), Error);
  CHECK_THROWS_AS(RootSystem::make('A', 10), Error);
  CHECK_THROWS_AS(RootSystem::make('D', 2), Error);
  CHECK_THROWS_AS(RootSystem::make('E', 5), Error);
  CHECK_THROWS_AS(RootSystem::make('B', 3), Error);
}
