#include "metacover/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "metacover/error.hpp"

namespace metacover::roots {

RootSystem RootSystem::make(char type, int rank) {
  RootSystem s;
  s.type_ = type;
  s.rank_ = rank;
  auto link = [&](int a, int b) {  // 1-based
    s.cartan_[a - 1][b - 1] = -1;
    s.cartan_[b - 1][a - 1] = -1;
  };
  switch (type) {
    case 'A':
      require(rank >= 2 && rank <= kMaxRank, "type A needs 2 <= rank <= 9");
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case 'D':
      require(rank >= 3 && rank <= kMaxRank, "type D needs 3 <= rank <= 9");
      for (int i = 1; i + 1 < rank - 1; ++i) link(i, i + 1);
      link(rank - 2, rank - 1);
      link(rank - 2, rank);
      break;
    case 'E':
      require(rank >= 6 && rank <= 8, "type E needs rank 6, 7 or 8");
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
    default:
      fail(ErrorKind::InvalidArgument, std::string("unsupported root system type ") + type);
  }
  for (int i = 0; i < rank; ++i) s.cartan_[i][i] = 2;

  std::set<Coords> seen;
  std::vector<Coords> frontier;
  for (int i = 0; i < rank; ++i) {
    Coords v{};
    v[i] = 1;
    seen.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& v : frontier)
      for (int i = 0; i < rank; ++i) {
        Coords w = s.reflect(i, v);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  s.roots_.assign(seen.begin(), seen.end());
  for (const auto& r : s.roots_)
    if (is_positive(r)) s.positive_.push_back(r);
  auto height = [](const Coords& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  s.highest_ = *std::max_element(s.positive_.begin(), s.positive_.end(),
                                 [&](const Coords& a, const Coords& b) { return height(a) < height(b); });
  return s;
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

bool RootSystem::is_positive(const Coords& r) {
  for (int x : r) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

bool RootSystem::is_root(const Coords& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

int RootSystem::simple_pairing(int i, const Coords& y) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * y[j];
  return s;
}

int RootSystem::pairing(const Coords& alpha, const Coords& y) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if (alpha[i] != 0) s += alpha[i] * simple_pairing(i, y);
  return s;
}

Coords RootSystem::reflect(int i, const Coords& y) const {
  Coords r = y;
  r[i] -= simple_pairing(i, y);
  return r;
}

Coords RootSystem::reflect_root(const Coords& alpha, const Coords& y) const {
  int p = pairing(alpha, y);
  Coords r = y;
  for (int i = 0; i < rank_; ++i) r[i] -= p * alpha[i];
  return r;
}

bool in_Y_tilde(const RootSystem& sys, const Coords& y) {
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.simple_pairing(i, y) % 2 != 0) return false;
  return true;
}

std::vector<std::vector<int>> LatticeTable::odd_nodes() const {
  std::vector<std::vector<int>> out;
  for (const auto& v : representatives) {
    std::vector<int> nodes;
    for (int i = 0; i < kMaxRank; ++i)
      if (v[i] & 1) nodes.push_back(i + 1);
    if (!nodes.empty()) out.push_back(nodes);
  }
  return out;
}

LatticeTable Ytilde_mod_2Y(const RootSystem& sys) {
  LatticeTable t;
  const int r = sys.rank();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    Coords v{};
    for (int i = 0; i < r; ++i) v[i] = (mask >> i) & 1u;
    if (in_Y_tilde(sys, v)) t.representatives.push_back(v);
  }
  t.group_order = static_cast<int>(t.representatives.size());
  t.index = (std::uint64_t{1} << r) / static_cast<std::uint64_t>(t.group_order);
  switch (t.group_order) {
    case 1: t.quotient = "1"; break;
    case 2: t.quotient = "Z/2"; break;
    case 4: t.quotient = "Z/2 x Z/2"; break;
    default: t.quotient = "(Z/2)^" + std::to_string(std::countr_zero(static_cast<unsigned>(t.group_order)));
  }
  return t;
}

std::string ascii_diagram(const RootSystem& sys, const Coords& parity) {
  auto mark = [&](int node) { return (parity[node - 1] & 1) ? 'o' : '*'; };
  const int r = sys.rank();
  std::ostringstream os;
  if (sys.type() == 'A') {
    for (int i = 1; i <= r; ++i) os << mark(i) << (i < r ? "---" : "");
    os << "\n";
    for (int i = 1; i <= r; ++i) os << i << (i < r ? std::string(4 - std::to_string(i).size(), ' ') : "");
    os << "\n";
  } else if (sys.type() == 'D') {
    // Chain 1..r-2, then the fork r-1 (upper) and r (lower).
    std::ostringstream chain, labels;
    for (int i = 1; i <= r - 2; ++i) {
      chain << mark(i) << (i < r - 2 ? "---" : "");
      labels << i << (i < r - 2 ? std::string(4 - std::to_string(i).size(), ' ') : "");
    }
    std::string pad(chain.str().size() - 1, ' ');
    os << pad << " /" << mark(r - 1) << " " << (r - 1) << "\n";
    os << chain.str() << "\n";
    os << pad << " \\" << mark(r) << " " << r << "\n";
    os << labels.str() << "\n";
  } else {
    // 1-3-4-5-...-r with 2 hanging below 4.
    const int order[] = {1, 3, 4, 5, 6, 7, 8};
    std::ostringstream chain, labels;
    int count = r - 1;
    for (int k = 0; k < count; ++k) {
      int node = order[k];
      chain << mark(node) << (k + 1 < count ? "---" : "");
      labels << node << (k + 1 < count ? "   " : "");
    }
    os << chain.str() << "\n";
    os << "        |\n";
    os << "        " << mark(2) << " 2\n";
    os << labels.str() << "\n";
  }
  return os.str();
}

}  // namespace metacover::roots
