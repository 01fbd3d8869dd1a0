#include "metacover/covertorus.hpp"

#include <bit>
#include <sstream>

#include "metacover/error.hpp"

namespace metacover::torus {

namespace {

constexpr std::uint64_t kGroupBudget = std::uint64_t{1} << 21;

int sign_bit(Elem x) { return static_cast<int>(x >> 63); }

}  // namespace

UnitForm UnitForm::from_decomposition(const padic::UnitDecomposition& dec) {
  UnitForm f;
  f.d = dec.dimension();
  f.k = dec.k;
  f.l = dec.l;
  f.gram = dec.gram;
  f.minus_one = dec.minus_one;
  for (int i = 0; i < f.k; ++i) f.factor_masks.push_back(f2::Vec{1} << i);
  for (int p = 0; p < f.l; ++p) f.factor_masks.push_back(f2::Vec{3} << (f.k + 2 * p));
  return f;
}

UnitForm UnitForm::standard(int k, int l) {
  require(k >= 0 && k <= 2 && l >= 0 && k + 2 * l >= 1 && k + 2 * l <= 6, "unsupported unit form shape");
  UnitForm f;
  f.d = k + 2 * l;
  f.k = k;
  f.l = l;
  f.gram.assign(f.d, 0);
  for (int i = 0; i < k; ++i) f.gram[i] = f2::Vec{1} << i;
  for (int p = 0; p < l; ++p) {
    const int e = k + 2 * p;
    f.gram[e] = f2::Vec{1} << (e + 1);
    f.gram[e + 1] = f2::Vec{1} << e;
  }
  // -1 is the vector m with (x, m) = (x, x) for every x.
  f.minus_one = (f2::Vec{1} << k) - 1;
  for (int i = 0; i < k; ++i) f.factor_masks.push_back(f2::Vec{1} << i);
  for (int p = 0; p < l; ++p) f.factor_masks.push_back(f2::Vec{3} << (k + 2 * p));
  return f;
}

std::vector<f2::Vec> UnitForm::classes() const {
  std::vector<f2::Vec> out;
  for (f2::Vec v = 0; v < (f2::Vec{1} << d); ++v) out.push_back(v);
  return out;
}

std::string UnitForm::label(f2::Vec v) const {
  if (v == 0) return "1";
  std::string out;
  for (int i = 0; i < d; ++i) {
    if (!((v >> i) & 1u)) continue;
    if (!out.empty()) out += "+";
    if (i < k) {
      out += "u" + std::to_string(i + 1);
    } else {
      const int p = (i - k) / 2 + 1;
      out += ((i - k) % 2 == 0 ? "e" : "f") + std::to_string(p);
    }
  }
  return out;
}

CoverTorusGroup::CoverTorusGroup(const roots::RootSystem& sys, UnitForm form)
    : sys_(sys), form_(std::move(form)) {
  const int r = sys_.rank(), d = form_.d;
  require(r * d <= 48, "covering torus too large to pack");
  chunks_ = (r * d + 7) / 8;
  std::vector<Elem> rows(r * d, 0);
  // Bringing b into canonical order moves h_j(b_j) left past h_i(a_i) for
  // i > j, which costs (b_j, a_i) for adjacent nodes; merging at node i costs
  // (a_i, b_i).
  for (int i = 0; i < r; ++i)
    for (int p = 0; p < d; ++p) {
      Elem row = Elem{form_.gram[p]} << (i * d);
      for (int j = 0; j < i; ++j)
        if (sys_.adjacent(i, j)) row |= Elem{form_.gram[p]} << (j * d);
      rows[i * d + p] = row;
    }
  table_.assign(chunks_, {});
  for (int c = 0; c < chunks_; ++c)
    for (int byte = 0; byte < 256; ++byte) {
      Elem acc = 0;
      for (int b = 0; b < 8; ++b) {
        const int bit = 8 * c + b;
        if (bit < r * d && ((byte >> b) & 1)) acc ^= rows[bit];
      }
      table_[c][byte] = acc;
    }
}

std::uint64_t CoverTorusGroup::cocycle(Elem a, Elem b) const {
  Elem q = 0;
  for (int c = 0; c < chunks_; ++c) q ^= table_[c][(a >> (8 * c)) & 0xff];
  return static_cast<std::uint64_t>(std::popcount(q & b) & 1);
}

f2::Vec CoverTorusGroup::coord(Elem x, int node) const {
  return static_cast<f2::Vec>((x >> (node * form_.d)) & ((Elem{1} << form_.d) - 1));
}

Elem CoverTorusGroup::generator(int node, f2::Vec u) const {
  require(node >= 0 && node < rank(), "node out of range");
  require(u < (f2::Vec{1} << form_.d), "unit class out of range");
  return Elem{u} << (node * form_.d);
}

Elem CoverTorusGroup::multiply(Elem a, Elem b) const {
  const Elem mask = coord_mask();
  const std::uint64_t s = static_cast<std::uint64_t>(sign_bit(a) ^ sign_bit(b)) ^ cocycle(a & mask, b & mask);
  return ((a ^ b) & mask) | (s << 63);
}

Elem CoverTorusGroup::inverse(Elem a) const {
  const Elem c = a & coord_mask();
  return c | ((static_cast<std::uint64_t>(sign_bit(a)) ^ cocycle(c, c)) << 63);
}

int CoverTorusGroup::commutator_sign(Elem a, Elem b) const {
  const Elem mask = coord_mask();
  return (cocycle(a & mask, b & mask) ^ cocycle(b & mask, a & mask)) ? -1 : 1;
}

bool CoverTorusGroup::commute(Elem a, Elem b) const { return commutator_sign(a, b) == 1; }

Elem CoverTorusGroup::from_index(std::uint64_t i) const {
  return (i & coord_mask()) | (((i >> coord_bits()) & 1u) << 63);
}

std::uint64_t CoverTorusGroup::index(Elem x) const {
  return (x & coord_mask()) | (static_cast<std::uint64_t>(sign_bit(x)) << coord_bits());
}

Elem CoverTorusGroup::root_element(const Coords& gamma, f2::Vec u, bool lowest) const {
  require(sys_.is_root(gamma), "not a root");
  if (!roots::RootSystem::is_positive(gamma)) {
    // h~_{-gamma}(u) = (u, -1) h~_gamma(u^{-1}) and u^{-1} = u modulo R.
    Coords neg = gamma;
    for (int& c : neg) c = -c;
    Elem x = root_element(neg, u, lowest);
    return form_.pair(u, form_.minus_one) ? x ^ kSign : x;
  }
  int height = 0, simple = -1;
  for (int i = 0; i < rank(); ++i) {
    height += gamma[i];
    if (gamma[i] == 1) simple = i;
  }
  if (height == 1) return generator(simple, u);
  int chosen = -1;
  for (int i = 0; i < rank(); ++i) {
    if (sys_.simple_pairing(i, gamma) != 1) continue;
    if (chosen < 0 || !lowest) chosen = i;
    if (lowest) break;
  }
  if (chosen < 0) fail(ErrorKind::Internal, "no simple root splits off a positive root");
  Coords rest = gamma;
  rest[chosen] -= 1;
  return multiply(root_element(rest, u, lowest), generator(chosen, u));
}

Elem CoverTorusGroup::weyl(int node, Elem x) const {
  require(node >= 0 && node < rank(), "node out of range");
  Elem out = x & kSign;
  for (int j = 0; j < rank(); ++j) {
    const f2::Vec c = coord(x, j);
    if (c == 0) continue;
    out = multiply(out, generator(j, c));
    if (sys_.adjacent(node, j)) out = multiply(out, generator(node, c));
  }
  return out;
}

std::vector<Elem> CoverTorusGroup::center() const {
  require(order() <= (std::uint64_t{1} << 16), "center computation limited to groups of order 2^16");
  std::vector<Elem> gens;
  for (int i = 0; i < rank(); ++i)
    for (int p = 0; p < form_.d; ++p) gens.push_back(generator(i, f2::Vec{1} << p));
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i < order(); ++i) {
    const Elem x = from_index(i);
    bool central = true;
    for (Elem g : gens)
      if (!commute(x, g)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<Elem> CoverTorusGroup::generated(const std::vector<Elem>& gens) const {
  require(order() <= kGroupBudget, "group too large for subgroup closure");
  std::vector<char> seen(order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elem g : gens) {
      const Elem y = multiply(out[head], g);
      const std::uint64_t i = index(y);
      if (!seen[i]) {
        seen[i] = 1;
        out.push_back(y);
      }
    }
  return out;
}

Elem CoverTorusGroup::spread(f2::Vec m) const {
  Elem out = 0;
  for (int i = 0; i < rank(); ++i) out |= Elem{m} << (i * form_.d);
  return out;
}

std::vector<Elem> CoverTorusGroup::masked_elements(Elem mask) const {
  mask &= coord_mask();
  std::vector<Elem> out;
  Elem sub = 0;
  do {
    out.push_back(sub);
    out.push_back(sub | kSign);
    sub = (sub - mask) & mask;
  } while (sub != 0);
  return out;
}

std::string CoverTorusGroup::describe(Elem x) const {
  std::ostringstream os;
  os << (negative(x) ? "-" : "+");
  bool any = false;
  for (int i = 0; i < rank(); ++i) {
    const f2::Vec c = coord(x, i);
    if (c == 0) continue;
    os << (any ? " " : "") << "h" << (i + 1) << "(" << form_.label(c) << ")";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

MNFactorization build_MN_factorization(const CoverTorusGroup& group) {
  require(group.order() <= (std::uint64_t{1} << 16), "factorization limited to groups of order 2^16");
  const UnitForm& form = group.form();
  MNFactorization out;
  auto factor = [&](const std::vector<f2::Vec>& units) {
    std::vector<Elem> gens;
    for (const Coords& gamma : group.system().roots())
      for (f2::Vec u : units) gens.push_back(group.root_element(gamma, u));
    return group.generated(gens);
  };
  for (int i = 0; i < form.k; ++i) out.m.push_back(factor({f2::Vec{1} << i}));
  for (int p = 0; p < form.l; ++p) {
    const int e = form.k + 2 * p;
    out.n.push_back(factor({f2::Vec{1} << e, f2::Vec{1} << (e + 1)}));
  }
  std::vector<char> in_product(group.order(), 0);
  std::vector<Elem> product{0};
  in_product[0] = 1;
  std::uint64_t factor_orders = 1;
  auto absorb = [&](const std::vector<Elem>& sub) {
    factor_orders *= sub.size();
    std::vector<Elem> next;
    for (Elem a : product)
      for (Elem b : sub) {
        const Elem c = group.multiply(a, b);
        if (!in_product[group.index(c)]) {
          in_product[group.index(c)] = 1;
          next.push_back(c);
        }
      }
    product.insert(product.end(), next.begin(), next.end());
  };
  for (const auto& m : out.m) absorb(m);
  for (const auto& n : out.n) absorb(n);
  out.product_size = product.size();
  out.covers_group = out.product_size == group.order();
  const int shift = form.k + form.l - 1;
  out.order_identity = shift >= 0 && factor_orders == (out.product_size << shift);
  return out;
}

std::uint64_t order_mod_T2e(const padic::FieldSpec& field, int rank) {
  const std::uint64_t units = padic::unit_quotient_order(field, 2 * field.e());
  std::uint64_t out = 2;
  for (int i = 0; i < rank; ++i) out *= units;
  return out;
}

}  // namespace metacover::torus
