#include "metacover/pseudospherical.hpp"

#include <algorithm>
#include <bit>

#include "metacover/error.hpp"

namespace metacover::reps {

using torus::kSign;

namespace {

constexpr std::uint64_t kRepBudget = std::uint64_t{1} << 17;

PhaseMap extend(const CoverTorusGroup& g, const PhaseMap& m, Elem x, int choice) {
  const Elem sq = g.multiply(x, x);
  auto it = m.find(sq);
  if (it == m.end()) fail(ErrorKind::Internal, "square of a new generator left the subgroup");
  if (it->second % 2 != 0) fail(ErrorKind::Internal, "character has no 4th-root extension");
  const std::uint8_t px = static_cast<std::uint8_t>((it->second / 2 + 2 * choice) % 4);
  PhaseMap out = m;
  for (const auto& [s, p] : m) out[g.multiply(x, s)] = static_cast<std::uint8_t>((px + p) % 4);
  return out;
}

}  // namespace

Gauss phase_value(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string to_string(const Gauss& z) {
  if (z.im == 0) return std::to_string(z.re);
  if (z.re == 0) return std::to_string(z.im) + "i";
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + std::to_string(z.im) + "i";
}

TorusSubgroup::TorusSubgroup(const CoverTorusGroup& group, Elem coord_mask)
    : TorusSubgroup(std::make_shared<const CoverTorusGroup>(group), coord_mask) {}

TorusSubgroup::TorusSubgroup(std::shared_ptr<const CoverTorusGroup> group, Elem coord_mask)
    : group_(std::move(group)), mask_(coord_mask & group_->coord_mask()) {
  for (int b = 0; b < group_->coord_bits(); ++b)
    if ((mask_ >> b) & 1u) bits_.push_back(b);
}

Elem TorusSubgroup::element(std::uint64_t i) const {
  Elem x = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if ((i >> k) & 1u) x |= Elem{1} << bits_[k];
  if ((i >> bits_.size()) & 1u) x |= kSign;
  return x;
}

std::uint64_t TorusSubgroup::index(Elem x) const {
  std::uint64_t i = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if ((x >> bits_[k]) & 1u) i |= std::uint64_t{1} << k;
  if (CoverTorusGroup::negative(x)) i |= std::uint64_t{1} << bits_.size();
  return i;
}

std::vector<Elem> TorusSubgroup::generators() const {
  std::vector<Elem> out;
  for (int b : bits_) out.push_back(Elem{1} << b);
  return out;
}

std::vector<Elem> TorusSubgroup::center() const {
  require(order() <= kRepBudget, "subgroup too large for a brute-force center");
  const auto gens = generators();
  std::vector<Elem> out;
  for (std::uint64_t i = 0; i < order(); ++i) {
    const Elem x = element(i);
    if (std::all_of(gens.begin(), gens.end(), [&](Elem g) { return group_->commute(x, g); })) out.push_back(x);
  }
  return out;
}

std::vector<PhaseMap> genuine_central_characters(const TorusSubgroup& h) {
  const CoverTorusGroup& g = h.group();
  const std::vector<Elem> z = h.center();
  PhaseMap span{{0, 0}, {kSign, 2}};
  std::vector<Elem> gens;
  for (Elem x : z) {
    if (span.count(x)) continue;
    gens.push_back(x);
    span = extend(g, span, x, 0);
  }
  std::vector<PhaseMap> out;
  const PhaseMap base{{0, 0}, {kSign, 2}};
  for (std::uint32_t choice = 0; choice < (1u << gens.size()); ++choice) {
    PhaseMap m = base;
    for (std::size_t k = 0; k < gens.size(); ++k) m = extend(g, m, gens[k], (choice >> k) & 1u);
    out.push_back(std::move(m));
  }
  return out;
}

GenuineRep GenuineRep::construct(const TorusSubgroup& h, const PhaseMap& central) {
  require(h.order() <= kRepBudget, "subgroup too large for representation construction");
  auto minus = central.find(kSign);
  require(minus != central.end() && minus->second == 2, "central character is not genuine");
  const CoverTorusGroup& g = h.group();
  GenuineRep rep(h);
  rep.central_ = central;

  // Polarization: grow an abelian subgroup by scanning in index order until
  // [A : Z]^2 = [H : Z].
  PhaseMap psi = central;
  std::vector<Elem> added;
  const std::uint64_t target = h.order() * central.size();
  for (std::uint64_t i = 0; i < h.order(); ++i) {
    if (static_cast<std::uint64_t>(psi.size()) * psi.size() == target) break;
    const Elem x = h.element(i);
    if (psi.count(x)) continue;
    if (!std::all_of(added.begin(), added.end(), [&](Elem a) { return g.commute(x, a); })) continue;
    added.push_back(x);
    psi = extend(g, psi, x, 0);
  }
  if (static_cast<std::uint64_t>(psi.size()) * psi.size() != target)
    fail(ErrorKind::Internal, "greedy polarization is not maximal");
  for (const auto& [a, p] : psi) rep.polarization_.push_back(a);
  std::sort(rep.polarization_.begin(), rep.polarization_.end(),
            [&](Elem a, Elem b) { return h.index(a) < h.index(b); });

  rep.coset_.assign(h.order(), -1);
  rep.psi_.assign(h.order(), 0);
  for (std::uint64_t i = 0; i < h.order(); ++i) {
    if (rep.coset_[i] >= 0) continue;
    const Elem t = h.element(i);
    const int id = static_cast<int>(rep.transversal_.size());
    rep.transversal_.push_back(t);
    for (const auto& [a, p] : psi) {
      const std::uint64_t j = h.index(g.multiply(t, a));
      rep.coset_[j] = id;
      rep.psi_[j] = p;
    }
  }

  rep.character_.assign(h.order(), Gauss{});
  for (std::uint64_t i = 0; i < h.order(); ++i) {
    const Elem x = h.element(i);
    Gauss sum;
    for (std::size_t t = 0; t < rep.transversal_.size(); ++t) {
      const std::uint64_t j = h.index(g.multiply(x, rep.transversal_[t]));
      if (rep.coset_[j] == static_cast<int>(t)) sum += phase_value(rep.psi_[j]);
    }
    rep.character_[i] = sum;
  }
  return rep;
}

MonomialMatrix GenuineRep::matrix(Elem g) const {
  require(h_.contains(g), "element outside the represented subgroup");
  MonomialMatrix m;
  for (Elem t : transversal_) {
    const std::uint64_t j = h_.index(h_.group().multiply(g, t));
    m.row.push_back(coset_[j]);
    m.phase.push_back(psi_[j]);
  }
  return m;
}

std::vector<Gauss> GenuineRep::dense(Elem g) const {
  const int n = dim();
  const MonomialMatrix m = matrix(g);
  std::vector<Gauss> out(static_cast<std::size_t>(n) * n);
  for (int t = 0; t < n; ++t) out[static_cast<std::size_t>(m.row[t]) * n + t] = phase_value(m.phase[t]);
  return out;
}

bool GenuineRep::irreducible() const {
  long long total = 0;
  for (const Gauss& z : character_) total += z.norm();
  return static_cast<std::uint64_t>(total) == h_.order();
}

std::vector<GenuineRep> all_genuine_reps(const TorusSubgroup& h) {
  std::vector<GenuineRep> out;
  for (const PhaseMap& chi : genuine_central_characters(h)) out.push_back(GenuineRep::construct(h, chi));
  return out;
}

std::vector<GenuineRep> all_pseudospherical(const CoverTorusGroup& group) {
  return all_genuine_reps(TorusSubgroup(group, group.coord_mask()));
}

std::vector<std::vector<Gauss>> tensor_characters(const CoverTorusGroup& group) {
  auto shared = std::make_shared<const CoverTorusGroup>(group);
  const TorusSubgroup full(shared, group.coord_mask());
  std::vector<TorusSubgroup> factors;
  std::vector<std::vector<std::vector<Gauss>>> chars;
  for (f2::Vec fm : group.form().factor_masks) {
    factors.emplace_back(shared, group.spread(fm));
    std::vector<std::vector<Gauss>> cs;
    for (const GenuineRep& r : all_genuine_reps(factors.back())) cs.push_back(r.character());
    chars.push_back(std::move(cs));
  }
  std::vector<std::vector<Gauss>> out;
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<Gauss> chi(full.order());
    for (std::uint64_t i = 0; i < full.order(); ++i) {
      const Elem x = full.element(i);
      Elem prod = 0;
      Gauss value{1, 0};
      for (std::size_t c = 0; c < factors.size(); ++c) {
        const Elem part = x & factors[c].mask();
        prod = group.multiply(prod, part);
        value = value * chars[c][pick[c]][factors[c].index(part)];
      }
      if ((prod & group.coord_mask()) != (x & group.coord_mask()))
        fail(ErrorKind::Internal, "factor decomposition does not reproduce the element");
      // x = (+-1) prod and the tensor product is genuine.
      if (CoverTorusGroup::negative(prod) != CoverTorusGroup::negative(x)) value = Gauss{} - value;
      chi[i] = value;
    }
    out.push_back(std::move(chi));
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == chars[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  return out;
}

bool same_character_sets(std::vector<std::vector<Gauss>> a, std::vector<std::vector<Gauss>> b) {
  auto key = [](const std::vector<Gauss>& v) {
    std::vector<long long> k;
    for (const Gauss& z : v) {
      k.push_back(z.re);
      k.push_back(z.im);
    }
    return k;
  };
  std::vector<std::vector<long long>> ka, kb;
  for (const auto& v : a) ka.push_back(key(v));
  for (const auto& v : b) kb.push_back(key(v));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

bool is_weyl_invariant(const CoverTorusGroup& group, const std::vector<Gauss>& character) {
  require(character.size() == group.order(), "character is not defined on the whole torus");
  for (int node = 0; node < group.rank(); ++node)
    for (std::uint64_t i = 0; i < group.order(); ++i)
      if (character[group.index(group.weyl(node, group.from_index(i)))] != character[i]) return false;
  return true;
}

std::vector<Gauss> sign_character(const CoverTorusGroup& group, int node, f2::Vec functional) {
  std::vector<Gauss> out(group.order());
  for (std::uint64_t i = 0; i < group.order(); ++i)
    out[i] = f2::dot(functional, group.coord(group.from_index(i), node)) ? Gauss{-1, 0} : Gauss{1, 0};
  return out;
}

int Branching::constituents() const {
  int n = 0;
  for (int m : multiplicities) n += m > 0;
  return n;
}

bool Branching::multiplicity_free() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](int m) { return m <= 1; });
}

Branching restrict_branch(const GenuineRep& rep) {
  const TorusSubgroup& h = rep.subgroup();
  const CoverTorusGroup& g = h.group();
  require(h.mask() == g.coord_mask(), "branching starts from a representation of the whole torus");
  const char type = g.system().type();
  const int r = g.rank();
  int node = -1;
  if (type == 'A' && r >= 3) node = r - 1;
  if (type == 'D' && r >= 4) node = 0;
  if (node < 0) fail(ErrorKind::Unsupported, "branching is defined for A_{r-1} in A_r and D_{r-1} in D_r");
  const int d = g.form().d;
  const Elem node_mask = ((Elem{1} << d) - 1) << (node * d);
  const TorusSubgroup sub(g, g.coord_mask() & ~node_mask);
  Branching out;
  out.subsystem = std::string(1, type) + std::to_string(r - 1);
  for (const GenuineRep& s : all_genuine_reps(sub)) {
    Gauss total;
    for (std::uint64_t i = 0; i < sub.order(); ++i) {
      const Elem x = sub.element(i);
      total += rep.character_at(x) * s.character()[i].conj();
    }
    const long long n = static_cast<long long>(sub.order());
    if (total.im != 0 || total.re % n != 0) out.exact = false;
    out.multiplicities.push_back(static_cast<int>(total.re / n));
    out.dims.push_back(s.dim());
  }
  return out;
}

std::vector<Gauss> mat_mul(const std::vector<Gauss>& a, const std::vector<Gauss>& b, int n) {
  std::vector<Gauss> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Gauss x = a[static_cast<std::size_t>(i) * n + k];
      if (x == Gauss{}) continue;
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] += x * b[static_cast<std::size_t>(k) * n + j];
    }
  return out;
}

Gauss trace(const std::vector<Gauss>& a, int n) {
  Gauss t;
  for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
  return t;
}

XMatrix x_matrix(const GenuineRep& rep, const roots::Coords& gamma, f2::Vec u, const std::vector<f2::Vec>& classes) {
  require(!classes.empty(), "empty class list");
  const CoverTorusGroup& g = rep.subgroup().group();
  XMatrix x;
  x.dim = rep.dim();
  x.denominator = static_cast<long long>(classes.size());
  x.numerator.assign(static_cast<std::size_t>(x.dim) * x.dim, Gauss{});
  for (f2::Vec v : classes) {
    const bool minus = g.form().pair(v, u);
    const std::vector<Gauss> m = rep.dense(g.root_element(gamma, v));
    for (std::size_t k = 0; k < m.size(); ++k) x.numerator[k] = minus ? x.numerator[k] - m[k] : x.numerator[k] + m[k];
  }
  return x;
}

XIdentities check_x_identities(const GenuineRep& rep, const roots::Coords& gamma, f2::Vec u,
                               const std::vector<f2::Vec>& classes) {
  const CoverTorusGroup& g = rep.subgroup().group();
  const XMatrix x = x_matrix(rep, gamma, u, classes);
  const int n = x.dim;
  const long long den = x.denominator;
  XIdentities out;
  // Tr(num / den) = dim / den.
  out.trace_ok = trace(x.numerator, n) == Gauss{n, 0};
  // (num / den)^2 = s / den * rho  <=>  num^2 = s * den * rho.
  const std::vector<Gauss> sq = mat_mul(x.numerator, x.numerator, n);
  const long long s = g.form().pair(g.form().minus_one, u) ? -1 : 1;
  const std::vector<Gauss> rho = rep.dense(g.root_element(gamma, g.form().minus_one));
  out.square_ok = true;
  for (std::size_t k = 0; k < sq.size(); ++k)
    if (sq[k] != Gauss{s * den * rho[k].re, s * den * rho[k].im}) out.square_ok = false;
  return out;
}

}  // namespace metacover::reps
