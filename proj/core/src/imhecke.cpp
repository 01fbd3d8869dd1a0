#include "metacover/imhecke.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include "metacover/error.hpp"

namespace metacover::hecke {

LaurentPoly LaurentPoly::constant(long long c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(long long c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, long long c) {
  if (c == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

long long LaurentPoly::evaluate(long long q) const {
  long long total = 0;
  for (const auto& [e, c] : terms_) {
    require(e >= 0, "cannot evaluate a negative power of q over the integers");
    long long p = 1;
    for (int i = 0; i < e; ++i) p *= q;
    total += c * p;
  }
  return total;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const long long a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

HeckeElement HeckeElement::basis(const AffineElement& x, LaurentPoly c) {
  HeckeElement h;
  h.add(x, c);
  return h;
}

void HeckeElement::add(const AffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly HeckeElement::coefficient(const AffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [x, c] : o.terms_) r.add(x, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [x, c] : o.terms_) r.add(x, LaurentPoly{} - c);
  return r;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement r;
  for (const auto& [x, v] : terms_) r.add(x, v * c);
  return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [x, c] : terms_) {
    auto it = o.terms_.find(x);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

HeckeAlgebra::HeckeAlgebra(const AffineWeylGroup& group) : group_(group) {
  const LaurentPoly q = LaurentPoly::q();
  quad_a_.assign(group_.generator_count(), q - LaurentPoly::constant(1));
  quad_b_.assign(group_.generator_count(), q);
}

void HeckeAlgebra::set_quadratic(int s, LaurentPoly a, LaurentPoly b) {
  require(s >= 0 && s < group_.generator_count(), "generator index out of range");
  quad_a_[s] = std::move(a);
  quad_b_[s] = std::move(b);
}

HeckeElement HeckeAlgebra::one() const { return HeckeElement::basis(group_.identity()); }

HeckeElement HeckeAlgebra::generator(int s) const { return HeckeElement::basis(group_.generator(s)); }

HeckeElement HeckeAlgebra::omega(int i) const {
  require(i >= 0 && i < static_cast<int>(group_.omega_group().size()), "length-zero index out of range");
  return HeckeElement::basis(group_.omega_group()[i].element);
}

HeckeElement HeckeAlgebra::t_basis(const AffineElement& x) const {
  const coxeter::ReducedWord rw = group_.reduced_word(x);
  return from_word(rw.word, rw.omega);
}

HeckeElement HeckeAlgebra::from_word(const std::vector<int>& word, const AffineElement& omega) const {
  HeckeElement h = one();
  for (int s : word) h = mul_generator(h, s);
  return mul_omega(h, omega);
}

HeckeElement HeckeAlgebra::mul_generator(const HeckeElement& h, int s) const {
  const AffineElement gen = group_.generator(s);
  HeckeElement out;
  for (const auto& [x, c] : h.terms()) {
    const AffineElement xs = group_.multiply(x, gen);
    if (group_.length_tilde(xs) > group_.length_tilde(x)) {
      out.add(xs, c);
    } else {
      out.add(x, c * quad_a_[s]);
      out.add(xs, c * quad_b_[s]);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_omega(const HeckeElement& h, const AffineElement& omega) const {
  require(group_.length_tilde(omega) == 0, "mul_omega expects a length-zero element");
  HeckeElement out;
  for (const auto& [x, c] : h.terms()) out.add(group_.multiply(x, omega), c);
  return out;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [y, c] : b.terms()) {
    const coxeter::ReducedWord rw = group_.reduced_word(y);
    HeckeElement acc = a;
    for (int s : rw.word) acc = mul_generator(acc, s);
    acc = mul_omega(acc, rw.omega);
    out = out + acc.scaled(c);
  }
  return out;
}

HeckeElement HeckeAlgebra::inverse_basis(const AffineElement& x) const {
  const coxeter::ReducedWord rw = group_.reduced_word(x);
  HeckeElement h = HeckeElement::basis(group_.inverse(rw.omega));
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    const int s = *it;
    const LaurentPoly& b = quad_b_[s];
    if (b.terms().size() != 1 || (b.terms().begin()->second != 1 && b.terms().begin()->second != -1))
      fail(ErrorKind::Unsupported, "quadratic constant is not a unit of Z[q, q^-1]");
    const auto [e, c] = *b.terms().begin();
    const LaurentPoly b_inv = LaurentPoly::monomial(c, -e);
    // T_s^{-1} = b^{-1} (T_s - a).
    h = (mul_generator(h, s) - h.scaled(quad_a_[s])).scaled(b_inv);
  }
  return h;
}

std::string HeckeAlgebra::describe(const HeckeElement& h) const {
  std::vector<std::string> parts;
  for (const auto& [x, c] : h.terms()) parts.push_back("(" + c.to_string() + ") T[" + group_.describe(x) + "]");
  std::sort(parts.begin(), parts.end());
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

namespace {

// x = eps * w' with w' in the affine Weyl group, written as a word.
struct Twisted {
  int eps = 0;
  std::vector<int> word;
};

std::vector<int> inverse_map(const std::array<int, coxeter::kMaxRank + 1>& m, int n) {
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[m[i]] = i;
  return inv;
}

Twisted to_twisted(const AffineWeylGroup& g, const AffineElement& x) {
  const coxeter::ReducedWord rw = g.reduced_word(x);
  Twisted t;
  t.eps = g.omega_index(rw.omega);
  // w omega = omega (omega^{-1} w omega) and omega^{-1} s omega = s_{pi^{-1}(s)}.
  const auto inv = inverse_map(g.omega_group()[t.eps].node_map, g.generator_count());
  for (int s : rw.word) t.word.push_back(inv[s]);
  return t;
}

}  // namespace

HeckeElement twisted_product(const HeckeAlgebra& alg, const AffineElement& x1, const AffineElement& x2) {
  const AffineWeylGroup& g = alg.group();
  const Twisted a = to_twisted(g, x1), b = to_twisted(g, x2);
  const auto inv = inverse_map(g.omega_group()[b.eps].node_map, g.generator_count());
  HeckeElement af = alg.one();
  for (int s : a.word) af = alg.mul_generator(af, inv[s]);
  for (int s : b.word) af = alg.mul_generator(af, s);
  const AffineElement eps = g.multiply(g.omega_group()[a.eps].element, g.omega_group()[b.eps].element);
  HeckeElement out;
  for (const auto& [w, c] : af.terms()) out.add(g.multiply(eps, w), c);
  return out;
}

bool RelationReport::pass() const {
  return std::all_of(families.begin(), families.end(), [](const RelationFamily& f) { return f.pass(); });
}

RelationReport verify_relations(const HeckeAlgebra& alg, int trials, std::uint64_t seed, int max_word) {
  const AffineWeylGroup& g = alg.group();
  const int n = g.generator_count();
  const LaurentPoly q = LaurentPoly::q(), one_c = LaurentPoly::constant(1);
  RelationReport rep;
  rep.system = g.system().name();
  rep.trials = trials;
  rep.seed = seed;
  rep.product_formula_printed = "(e1 x t_w1)(e2 x t_a2) = e1 e2 x t_{e2^-1(a1)} t_a2";
  rep.product_formula_used = "(e1 x t_w1)(e2 x t_w2) = e1 e2 x t_{e2^-1 w1 e2} t_w2";

  auto record = [](RelationFamily& f, bool ok, const std::string& what) {
    ++f.checked;
    if (!ok && f.failed++ == 0) f.first_failure = what;
  };
  auto name = [&](const AffineElement& x) { return g.describe(x); };

  // Trials are drawn up front so the outcome depends only on the seed.
  std::mt19937_64 rng(seed);
  auto random_element = [&] {
    const auto& om = g.omega_group();
    AffineElement x = om[rng() % om.size()].element;
    const int len = static_cast<int>(rng() % (max_word + 1));
    for (int k = 0; k < len; ++k) x = g.multiply(x, g.generator(static_cast<int>(rng() % n)));
    return x;
  };
  std::vector<std::array<AffineElement, 3>> triples;
  for (int t = 0; t < trials; ++t) triples.push_back({random_element(), random_element(), random_element()});

  auto family = [](const char* label) {
    RelationFamily f;
    f.name = label;
    return f;
  };
  RelationFamily quad = family("quadratic"), inv = family("generator inverse"), braid = family("braid"),
                 om_sq = family("length-zero square"), om_conj = family("length-zero conjugation"),
                 words = family("reduced-word independence"), additive = family("length-additive product"),
                 basis_inv = family("basis inverse"), assoc = family("associativity"),
                 twisted = family("twisted tensor agreement");

  const HeckeElement e = alg.one();
  for (int s = 0; s < n; ++s) {
    const HeckeElement t = alg.generator(s);
    record(quad, alg.mul(t, t) == t.scaled(q - one_c) + e.scaled(q), "s" + std::to_string(s));
    const HeckeElement tinv = (t - e.scaled(q - one_c)).scaled(LaurentPoly::monomial(1, -1));
    record(inv, alg.mul(t, tinv) == e && alg.mul(tinv, t) == e, "s" + std::to_string(s));
    for (int u = s + 1; u < n; ++u) {
      const int m = g.braid_order(s, u);
      std::vector<int> w1, w2;
      for (int k = 0; k < m; ++k) {
        w1.push_back(k % 2 ? u : s);
        w2.push_back(k % 2 ? s : u);
      }
      record(braid, alg.from_word(w1, g.identity()) == alg.from_word(w2, g.identity()),
             "s" + std::to_string(s) + ", s" + std::to_string(u) + ", m=" + std::to_string(m));
    }
  }
  for (std::size_t i = 0; i < g.omega_group().size(); ++i) {
    const auto& om = g.omega_group()[i];
    const HeckeElement te = alg.omega(static_cast<int>(i));
    record(om_sq, alg.mul(te, te) == e, "omega" + std::to_string(i));
    const HeckeElement te_inv = HeckeElement::basis(g.inverse(om.element));
    for (int s = 0; s < n; ++s)
      record(om_conj, alg.mul(alg.mul(te, alg.generator(s)), te_inv) == alg.generator(om.node_map[s]),
             "omega" + std::to_string(i) + ", s" + std::to_string(s));
  }

  const int small = std::max(1, trials / 10);
  for (int t = 0; t < small; ++t) {
    const AffineElement& x = triples[t][0];
    const AffineElement omega = g.reduced_word(x).omega;
    const HeckeElement tx = alg.basis(x);
    for (const auto& w : g.all_reduced_words(x)) record(words, alg.from_word(w, omega) == tx, name(x));
    const HeckeElement xi = alg.inverse_basis(x);
    record(basis_inv, alg.mul(tx, xi) == e && alg.mul(xi, tx) == e, name(x));
  }
  for (const auto& [x, y, z] : triples) {
    const HeckeElement tx = alg.basis(x), ty = alg.basis(y), tz = alg.basis(z);
    const HeckeElement xy = alg.mul(tx, ty);
    if (g.length_tilde(g.multiply(x, y)) == g.length_tilde(x) + g.length_tilde(y))
      record(additive, xy == alg.basis(g.multiply(x, y)), name(x) + " * " + name(y));
    record(assoc, alg.mul(xy, tz) == alg.mul(tx, alg.mul(ty, tz)), name(x) + " | " + name(y) + " | " + name(z));
    record(twisted, twisted_product(alg, x, y) == xy, name(x) + " * " + name(y));
  }
  rep.families = {quad, inv, braid, om_sq, om_conj, words, additive, basis_inv, assoc, twisted};
  return rep;
}

// SL_3(F_2) with B the upper unitriangular matrices.

namespace {

using M3 = std::uint16_t;  // bit 3*i + j is entry (i, j)

int entry(M3 m, int i, int j) { return (m >> (3 * i + j)) & 1; }

M3 mul3(M3 a, M3 b) {
  M3 r = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s ^= entry(a, i, k) & entry(b, k, j);
      if (s) r |= static_cast<M3>(1u << (3 * i + j));
    }
  return r;
}

int det3(M3 m) {
  int d = 0;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) d ^= entry(m, 0, p[0]) & entry(m, 1, p[1]) & entry(m, 2, p[2]);
  return d;
}

M3 perm_matrix(const std::array<int, 3>& p) {
  M3 m = 0;
  for (int i = 0; i < 3; ++i) m |= static_cast<M3>(1u << (3 * i + p[i]));
  return m;
}

}  // namespace

bool FiniteModelReport::pass() const {
  return group_order == 168 && borel_order == 8 && double_cosets == 6 && flag_count == 21 && quadratic && braid &&
         poincare && matches_generic;
}

FiniteModelReport finite_iwahori_sl3f2() {
  FiniteModelReport rep;
  std::vector<M3> G;
  for (int m = 0; m < 512; ++m)
    if (det3(static_cast<M3>(m))) G.push_back(static_cast<M3>(m));
  std::vector<M3> B;
  for (M3 g : G)
    if (entry(g, 1, 0) == 0 && entry(g, 2, 0) == 0 && entry(g, 2, 1) == 0) B.push_back(g);
  rep.group_order = static_cast<int>(G.size());
  rep.borel_order = static_cast<int>(B.size());
  std::array<M3, 512> inverse{};
  for (M3 a : G)
    for (M3 b : G)
      if (mul3(a, b) == 0b100010001) inverse[a] = b;

  // Double cosets B w B.
  std::array<int, 512> cell;
  cell.fill(-1);
  std::vector<M3> reps_of_cell;
  for (M3 g : G) {
    if (cell[g] >= 0) continue;
    const int id = static_cast<int>(reps_of_cell.size());
    reps_of_cell.push_back(g);
    for (M3 b1 : B)
      for (M3 b2 : B) cell[mul3(mul3(b1, g), b2)] = id;
  }
  rep.double_cosets = static_cast<int>(reps_of_cell.size());
  std::vector<int> cell_size(reps_of_cell.size(), 0);
  for (M3 g : G) ++cell_size[cell[g]];
  for (int& s : cell_size) s /= rep.borel_order;
  rep.cell_sizes = cell_size;
  rep.flag_count = static_cast<int>(G.size() / B.size());

  // Convolution of cell indicators, read off at each cell representative:
  // (T_u * T_v)(x) = |B|^{-1} #{y in BuB : y^{-1} x in BvB}.
  const int c = rep.double_cosets;
  auto convolve = [&](int u, int v) {
    std::vector<int> coeff(c, 0);
    for (int w = 0; w < c; ++w) {
      const M3 x = reps_of_cell[w];
      int count = 0;
      for (M3 y : G)
        if (cell[y] == u && cell[mul3(inverse[y], x)] == v) ++count;
      coeff[w] = count / rep.borel_order;
    }
    return coeff;
  };

  // Weyl group elements as permutation matrices, with their reduced words in
  // the finite generators 1 and 2 of the affine Weyl group of A_2.
  const AffineWeylGroup W(roots::RootSystem::make('A', 2));
  const M3 s1 = perm_matrix({1, 0, 2}), s2 = perm_matrix({0, 2, 1});
  const std::vector<std::vector<int>> words = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
  std::vector<int> cell_of_word;
  std::vector<AffineElement> elem_of_word;
  for (const auto& w : words) {
    M3 m = 0b100010001;
    for (int s : w) m = mul3(m, s == 1 ? s1 : s2);
    cell_of_word.push_back(cell[m]);
    elem_of_word.push_back(W.from_word(W.identity(), w));
  }
  std::set<int> distinct(cell_of_word.begin(), cell_of_word.end());
  if (static_cast<int>(distinct.size()) != c) rep.notes.push_back("permutation matrices do not separate the cells");

  int poincare = 0;
  for (std::size_t i = 0; i < words.size(); ++i) poincare += 1 << words[i].size();
  rep.poincare = poincare == rep.flag_count;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (cell_size[cell_of_word[i]] != (1 << words[i].size())) rep.poincare = false;

  const int id_cell = cell_of_word[0];
  rep.quadratic = true;
  for (int g : {1, 2}) {
    const std::vector<int> sq = convolve(cell_of_word[g], cell_of_word[g]);
    for (int w = 0; w < c; ++w) {
      const int expected = w == id_cell ? 2 : (w == cell_of_word[g] ? 1 : 0);
      if (sq[w] != expected) rep.quadratic = false;
    }
  }
  // T_1 T_2 T_1 and T_2 T_1 T_2 both equal the indicator of the longest cell.
  auto product = [&](const std::vector<int>& a, int v) {
    std::vector<int> out(c, 0);
    for (int u = 0; u < c; ++u) {
      if (a[u] == 0) continue;
      const std::vector<int> p = convolve(u, v);
      for (int w = 0; w < c; ++w) out[w] += a[u] * p[w];
    }
    return out;
  };
  std::vector<int> t1(c, 0), t2(c, 0);
  t1[cell_of_word[1]] = 1;
  t2[cell_of_word[2]] = 1;
  const std::vector<int> b1 = product(product(t1, cell_of_word[2]), cell_of_word[1]);
  const std::vector<int> b2 = product(product(t2, cell_of_word[1]), cell_of_word[2]);
  std::vector<int> longest(c, 0);
  longest[cell_of_word[5]] = 1;
  rep.braid = b1 == b2 && b1 == longest;

  // Generic structure constants at q = 2 against the convolution table.
  const HeckeAlgebra alg(W);
  rep.matches_generic = true;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      const HeckeElement h = alg.mul(alg.basis(elem_of_word[i]), alg.basis(elem_of_word[j]));
      const std::vector<int> conv = convolve(cell_of_word[i], cell_of_word[j]);
      for (std::size_t k = 0; k < words.size(); ++k)
        if (h.coefficient(elem_of_word[k]).evaluate(2) != conv[cell_of_word[k]]) rep.matches_generic = false;
      long long total = 0;
      for (const auto& [x, coeff] : h.terms()) total += coeff.evaluate(2);
      long long expected = 0;
      for (int v : conv) expected += v;
      if (total != expected) rep.matches_generic = false;
    }
  return rep;
}

}  // namespace metacover::hecke
