#include "metacover/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "metacover/error.hpp"
#include "metacover/pseudospherical.hpp"

namespace metacover::checks {

namespace {

using torus::CoverTorusGroup;
using torus::Elem;

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

std::string node_sets(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end());
  std::ostringstream os;
  for (const auto& s : sets) {
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
  }
  return sets.empty() ? "none" : os.str();
}

std::string pow2(int k) { return str(std::uint64_t{1} << k); }

// A counted property: passes when nothing failed.
CheckResult counted(std::string check, Params params, std::uint64_t cases, std::uint64_t failures) {
  params.push_back({"cases", str(cases)});
  return compare(std::move(check), std::move(params), "0 failures", str(failures) + " failures");
}

}  // namespace

CheckResult compare(std::string check, Params params, std::string expected, std::string actual) {
  CheckResult r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.pass = expected == actual;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  return r;
}

bool Suite::pass() const { return failures() == 0; }

int Suite::failures() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; }));
}

void Suite::add(std::vector<CheckResult> more) {
  for (auto& r : more) results.push_back(std::move(r));
}

FieldContext FieldContext::make(int e, int f, std::vector<std::int64_t> eisenstein) {
  padic::FieldSpec field = padic::FieldSpec::make(e, f, std::move(eisenstein));
  padic::SquareClassSpace space = padic::SquareClassSpace::build(field);
  padic::UnitDecomposition dec = padic::decompose_units(space);
  return {field, space, dec};
}

std::string FieldContext::label() const { return field.describe(); }

LatticeReference lattice_reference(char type, int rank) {
  LatticeReference ref;
  const int r = rank;
  switch (type) {
    case 'A':
      if (r % 2 == 1) {
        ref.quotient = "Z/2";
        std::vector<int> odd;
        for (int i = 1; i <= r; i += 2) odd.push_back(i);
        ref.odd_nodes.push_back(odd);
      } else {
        ref.quotient = "1";
      }
      ref.index = std::uint64_t{1} << (r % 2 == 1 ? r - 1 : r);
      break;
    case 'D':
      if (r % 2 == 1) {
        ref.quotient = "Z/2";
        ref.odd_nodes.push_back({r - 1, r});
        ref.index = std::uint64_t{1} << (r - 1);
      } else {
        ref.quotient = "Z/2 x Z/2";
        std::vector<int> head;
        for (int i = 1; i <= r - 3; i += 2) head.push_back(i);
        auto a = head, b = head;
        a.push_back(r - 1);
        b.push_back(r);
        ref.odd_nodes = {a, b, {r - 1, r}};
        ref.index = std::uint64_t{1} << (r - 2);
      }
      break;
    case 'E':
      ref.quotient = r == 7 ? "Z/2" : "1";
      if (r == 7) ref.odd_nodes.push_back({2, 5, 7});
      ref.index = std::uint64_t{1} << (r == 8 ? 8 : 6);
      break;
    default:
      fail(ErrorKind::InvalidArgument, std::string("no reference row for type ") + type);
  }
  std::sort(ref.odd_nodes.begin(), ref.odd_nodes.end());
  return ref;
}

RepsReference reps_reference(char type, int rank, int ef) {
  int dim_exp = 0, count_exp = 0;
  switch (type) {
    case 'A':
      dim_exp = rank / 2;
      count_exp = rank % 2;
      break;
    case 'D':
      if (rank % 2 == 1) {
        dim_exp = (rank - 1) / 2;
        count_exp = 1;
      } else {
        dim_exp = rank / 2 - 1;
        count_exp = 2;
      }
      break;
    case 'E':
      dim_exp = rank == 8 ? 4 : 3;
      count_exp = rank == 7 ? 1 : 0;
      break;
    default:
      fail(ErrorKind::InvalidArgument, std::string("no reference row for type ") + type);
  }
  return {std::uint64_t{1} << (ef * dim_exp), std::uint64_t{1} << (ef * count_exp)};
}

int q2_hilbert_closed_form(std::int64_t a, std::int64_t b) {
  require(a != 0 && b != 0, "the Hilbert symbol needs nonzero arguments");
  int alpha = 0, beta = 0;
  while (a % 2 == 0) a /= 2, ++alpha;
  while (b % 2 == 0) b /= 2, ++beta;
  auto mod8 = [](std::int64_t u) { return ((u % 8) + 8) % 8; };
  auto eps = [&](std::int64_t u) { return static_cast<int>((mod8(u) - 1) / 2 % 2); };
  auto omega = [&](std::int64_t u) {
    const std::int64_t m = mod8(u);
    return static_cast<int>((m * m - 1) / 8 % 2);
  };
  return (eps(a) * eps(b) + alpha * omega(b) + beta * omega(a)) % 2 ? -1 : 1;
}

std::vector<CheckResult> lattice_checks(const roots::RootSystem& sys) {
  const roots::LatticeTable table = roots::Ytilde_mod_2Y(sys);
  const LatticeReference ref = lattice_reference(sys.type(), sys.rank());
  const Params p = {{"type", sys.name()}};
  std::vector<CheckResult> out;
  out.push_back(compare("lattice.quotient", p, ref.quotient, table.quotient));
  out.push_back(compare("lattice.index", p, str(ref.index), str(table.index)));
  out.push_back(compare("lattice.odd-nodes", p, node_sets(ref.odd_nodes), node_sets(table.odd_nodes())));
  std::uint64_t bad = 0;
  for (std::size_t k = 1; k < table.representatives.size(); ++k) {
    const std::string art = roots::ascii_diagram(sys, table.representatives[k]);
    const auto odd = table.odd_nodes()[k - 1].size();
    if (static_cast<std::size_t>(std::count(art.begin(), art.end(), 'o')) != odd) ++bad;
  }
  out.push_back(counted("lattice.diagrams", p, table.representatives.size() - 1, bad));
  return out;
}

std::vector<CheckResult> field_checks(const FieldContext& fc) {
  const padic::RadicalReport r = padic::integral_radical(fc.space);
  const int ef = fc.field.degree();
  const Params p = {{"field", fc.label()}};
  std::vector<CheckResult> out;
  out.push_back(compare("field.radical-index", p, pow2(ef), str(r.index_in_units)));
  out.push_back(compare("field.radical-is-U2e-squares", p, "true", str(r.u2e_classes_are_radical)));
  out.push_back(compare("field.U2e+1-in-squares", p, "true", str(r.hensel_lifts)));
  const std::string u2e = r.u2e_square_count == 0 ? "no squares"
                                                   : "index " + str(r.u2e_residue_count / r.u2e_square_count) +
                                                         (r.u2e_residue_count % r.u2e_square_count ? "+" : "");
  out.push_back(compare("field.U2e-square-index", p, "index 2", u2e));
  out.push_back(compare("field.radical-mod-squares", p, "2", str(r.unit_form_radical_order)));
  out.push_back(compare("field.radical-annihilates-units", p, "true", str(r.annihilates_units)));
  out.push_back(compare("field.odd-pairing", p, "true", str(r.odd_pairing)));
  out.push_back(compare("field.unit-form-rank", p, str(ef), str(f2::rank(fc.dec.gram))));
  return out;
}

std::vector<CheckResult> hilbert_method_checks(const FieldContext& fc) {
  const auto& basis = fc.space.basis();
  std::uint64_t bad = 0, cases = 0;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++cases;
      if (padic::hilbert(a, b) != padic::hilbert_conic(a, b)) ++bad;
    }
  return {counted("hilbert.norm-vs-conic", {{"field", fc.label()}}, cases, bad)};
}

std::vector<CheckResult> decomposition_checks(const FieldContext& fc, int expected_case) {
  const padic::UnitDecomposition& d = fc.dec;
  const Params p = {{"field", fc.label()}};
  std::vector<CheckResult> out;
  out.push_back(compare("decomposition.case", p, str(expected_case), str(d.case_number)));
  // D is spanned by the anisotropic basis vectors u_1..u_k.
  const f2::Vec d_mask = (f2::Vec{1} << d.k) - 1;
  out.push_back(compare("decomposition.dim-D", p, str(expected_case - 1), str(d.k)));
  std::string where = d.minus_one == 0 ? "R" : ((d.minus_one & ~d_mask) == 0 ? "D" : "outside D");
  out.push_back(compare("decomposition.minus-one", p, expected_case == 1 ? "R" : "D", where));
  std::uint64_t bad = 0, cases = 0;
  const torus::UnitForm form = fc.form();
  for (f2::Vec u : form.classes()) {
    if (u & d_mask) continue;
    ++cases;
    if (form.pair(u, u) != 0) ++bad;
  }
  out.push_back(counted("decomposition.complement-isotropic", p, cases, bad));
  return out;
}

std::vector<CheckResult> length_checks(const coxeter::AffineWeylGroup& group, int max_len) {
  const auto elements = group.enumerate(max_len);
  std::uint64_t proportional = 0, formula = 0, word = 0;
  for (const auto& x : elements) {
    const int l = group.length_tilde(x);
    if (group.length_two(x) != 2 * l) ++proportional;
    if (group.length_tilde_formula(x) != l) ++formula;
    if (static_cast<int>(group.reduced_word(x).word.size()) != l) ++word;
  }
  const Params p = {{"type", group.system().name()}, {"max_len", str(max_len)}};
  return {counted("weyl.l2-equals-twice-length", p, elements.size(), proportional),
          counted("weyl.length-formula", p, elements.size(), formula),
          counted("weyl.reduced-word-length", p, elements.size(), word)};
}

std::vector<CheckResult> table2_checks(const CoverTorusGroup& group, const std::string& field_label) {
  const auto& sys = group.system();
  const int ef = group.form().d;
  const RepsReference ref = reps_reference(sys.type(), sys.rank(), ef);
  const auto reps = reps::all_pseudospherical(group);
  std::set<int> dims;
  std::uint64_t squares = 0, reducible = 0;
  for (const auto& rep : reps) {
    dims.insert(rep.dim());
    squares += static_cast<std::uint64_t>(rep.dim()) * rep.dim();
    if (!rep.irreducible()) ++reducible;
  }
  std::string dim_list;
  for (int d : dims) dim_list += (dim_list.empty() ? "" : ",") + str(d);
  const Params p = {{"type", sys.name()}, {"field", field_label}, {"ef", str(ef)}};
  return {compare("reps.dimension", p, str(ref.dimension), dim_list),
          compare("reps.count", p, str(ref.count), str(static_cast<std::uint64_t>(reps.size()))),
          compare("reps.sum-of-squares", p, str(group.order() / 2), str(squares)),
          counted("reps.irreducible", p, reps.size(), reducible)};
}

std::vector<CheckResult> torus_checks(const CoverTorusGroup& g, const std::string& field_label, std::uint64_t seed) {
  const auto& sys = g.system();
  const int r = g.rank(), d = g.form().d;
  Params p = {{"type", sys.name()}, {"field", field_label}};
  std::vector<CheckResult> out;
  out.push_back(compare("torus.order", p, str(std::uint64_t{2} << (r * d)), str(g.order())));

  const roots::LatticeTable table = roots::Ytilde_mod_2Y(sys);
  std::uint64_t center = 2;
  for (int i = 0; i < d; ++i) center *= static_cast<std::uint64_t>(table.group_order);
  out.push_back(compare("torus.center-order", p, str(center), str(static_cast<std::uint64_t>(g.center().size()))));

  std::uint64_t cases = 0, bad = 0;
  for (f2::Vec v = 1; v < (f2::Vec{1} << d); ++v)
    for (std::uint32_t pattern = 0; pattern < (1u << r); ++pattern) {
      Elem x = 0;
      roots::Coords y{};
      for (int i = 0; i < r; ++i)
        if ((pattern >> i) & 1u) {
          x = g.multiply(x, g.generator(i, v));
          y[i] = 1;
        }
      bool central = true;
      for (int i = 0; i < r && central; ++i)
        for (int b = 0; b < d && central; ++b) central = g.commute(x, g.generator(i, f2::Vec{1} << b));
      ++cases;
      if (central != roots::in_Y_tilde(sys, y)) ++bad;
    }
  out.push_back(counted("torus.central-parity", p, cases, bad));

  std::mt19937_64 rng(seed);
  cases = bad = 0;
  for (const auto& parity : table.representatives)
    for (f2::Vec t : g.form().classes()) {
      std::vector<int> order(r);
      for (int i = 0; i < r; ++i) order[i] = i;
      auto product = [&] {
        Elem x = 0;
        for (int i : order) x = g.multiply(x, g.generator(i, parity[i] % 2 ? t : 0));
        return x;
      };
      const Elem base = product();
      for (int k = 0; k < 100; ++k) {
        std::shuffle(order.begin(), order.end(), rng);
        ++cases;
        if (product() != base) ++bad;
      }
    }
  Params pp = p;
  pp.push_back({"seed", str(seed)});
  out.push_back(counted("torus.order-independence", pp, cases, bad));

  std::vector<Elem> h(r);
  for (int a = 0; a < r; ++a) h[a] = g.generator(a, g.form().minus_one);
  std::uint64_t n_square = 0, f_square = 0, n_braid = 0, f_braid = 0, n_hom = 0, f_hom = 0, n_assoc = 0, f_assoc = 0;
  auto single = [&](Elem x) {
    for (int a = 0; a < r; ++a) {
      ++n_square;
      if (g.weyl(a, g.weyl(a, x)) != g.multiply(g.multiply(h[a], x), g.inverse(h[a]))) ++f_square;
      for (int b = a + 1; b < r; ++b) {
        ++n_braid;
        const bool ok = sys.adjacent(a, b) ? g.weyl(a, g.weyl(b, g.weyl(a, x))) == g.weyl(b, g.weyl(a, g.weyl(b, x)))
                                           : g.weyl(a, g.weyl(b, x)) == g.weyl(b, g.weyl(a, x));
        if (!ok) ++f_braid;
      }
    }
  };
  auto pair = [&](Elem x, Elem y) {
    const Elem xy = g.multiply(x, y);
    for (int a = 0; a < r; ++a) {
      ++n_hom;
      if (g.weyl(a, xy) != g.multiply(g.weyl(a, x), g.weyl(a, y))) ++f_hom;
    }
  };
  auto triple = [&](Elem x, Elem y, Elem z) {
    ++n_assoc;
    if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z))) ++f_assoc;
  };
  const bool exhaustive = g.order() <= 1024;
  const std::uint64_t n = g.order();
  auto random_element = [&] { return g.from_index(rng() % n); };
  if (exhaustive) {
    for (std::uint64_t i = 0; i < n; ++i) {
      single(g.from_index(i));
      for (std::uint64_t j = 0; j < n; ++j) pair(g.from_index(i), g.from_index(j));
    }
    if (n <= 64) {
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
          for (std::uint64_t k = 0; k < n; ++k) triple(g.from_index(i), g.from_index(j), g.from_index(k));
    } else {
      for (int t = 0; t < 10000; ++t) triple(random_element(), random_element(), random_element());
    }
  } else {
    for (int t = 0; t < 10000; ++t) {
      const Elem x = random_element(), y = random_element(), z = random_element();
      single(x);
      pair(x, y);
      triple(x, y, z);
    }
  }
  Params mode = pp;
  mode.push_back({"mode", exhaustive ? "exhaustive" : "sampled"});
  out.push_back(counted("torus.phi-square", mode, n_square, f_square));
  out.push_back(counted("torus.phi-braid", mode, n_braid, f_braid));
  out.push_back(counted("torus.phi-homomorphism", mode, n_hom, f_hom));
  Params assoc = pp;
  assoc.push_back({"mode", n <= 64 ? "exhaustive" : "sampled"});
  out.push_back(counted("torus.associativity", assoc, n_assoc, f_assoc));

  if (n <= 4096) {
    const torus::MNFactorization mn = torus::build_MN_factorization(g);
    out.push_back(compare("torus.mn-factorization", p, "true", str(mn.covers_group && mn.order_identity)));
  }
  return out;
}

std::vector<CheckResult> invariance_checks(const CoverTorusGroup& group, const std::string& field_label) {
  const auto& sys = group.system();
  const int ef = group.form().d;
  const Params p = {{"type", sys.name()}, {"field", field_label}};
  const auto reps = reps::all_pseudospherical(group);
  std::vector<CheckResult> out;
  std::uint64_t bad = 0;
  for (const auto& rep : reps)
    if (!reps::is_weyl_invariant(group, rep.character())) ++bad;
  out.push_back(counted("reps.weyl-invariance", p, reps.size(), bad));

  const char t = sys.type();
  const int r = sys.rank();
  if ((t == 'A' && r >= 3) || (t == 'D' && r >= 4)) {
    // A_{2r+1} and D_{2r} restrict irreducibly; the others split into 2^ef
    // distinct pieces.
    const bool irreducible = (t == 'A') == (r % 2 == 1);
    const std::uint64_t pieces = irreducible ? 1 : std::uint64_t{1} << ef;
    std::uint64_t wrong = 0, inexact = 0, repeated = 0;
    std::string subsystem;
    for (const auto& rep : reps) {
      const reps::Branching b = reps::restrict_branch(rep);
      subsystem = b.subsystem;
      if (!b.exact) ++inexact;
      if (!b.multiplicity_free()) ++repeated;
      if (static_cast<std::uint64_t>(b.constituents()) != pieces) ++wrong;
    }
    Params bp = p;
    bp.push_back({"subsystem", subsystem});
    out.push_back(counted("reps.branching-integral", bp, reps.size(), inexact));
    out.push_back(counted("reps.branching-multiplicity-free", bp, reps.size(), repeated));
    Params cp = bp;
    cp.push_back({"constituents", str(pieces)});
    out.push_back(counted("reps.branching-constituents", cp, reps.size(), wrong));
  }
  if (group.order() <= 4096) {
    std::vector<std::vector<reps::Gauss>> direct;
    for (const auto& rep : reps) direct.push_back(rep.character());
    out.push_back(compare("reps.tensor-construction", p, "true",
                          str(reps::same_character_sets(direct, reps::tensor_characters(group)))));
  }
  return out;
}

std::vector<CheckResult> x_element_checks(const FieldContext& fc, const CoverTorusGroup& group) {
  const Params p = {{"type", group.system().name()}, {"field", fc.label()}};
  const auto reps = reps::all_pseudospherical(group);
  std::uint64_t cases = 0, trace_bad = 0, square_bad = 0;
  for (int j = 0; j < 2; ++j) {
    const auto classes = padic::filtration_classes(fc.space, fc.dec, j);
    for (const auto& rep : reps)
      for (const auto& gamma : group.system().roots())
        for (f2::Vec u : group.form().classes()) {
          const reps::XIdentities id = reps::check_x_identities(rep, gamma, u, classes);
          ++cases;
          if (!id.trace_ok) ++trace_bad;
          if (!id.square_ok) ++square_bad;
        }
  }
  return {counted("reps.x-trace", p, cases, trace_bad), counted("reps.x-square", p, cases, square_bad)};
}

std::vector<CheckResult> hecke_checks(const hecke::RelationReport& report) {
  std::vector<CheckResult> out;
  for (const auto& fam : report.families) {
    Params p = {{"type", report.system}, {"trials", str(report.trials)}, {"seed", str(report.seed)}};
    if (fam.name == "twisted tensor agreement") {
      p.push_back({"formula_printed", report.product_formula_printed});
      p.push_back({"formula_used", report.product_formula_used});
    }
    if (!fam.first_failure.empty()) p.push_back({"first_failure", fam.first_failure});
    std::string name = "hecke." + fam.name;
    std::replace(name.begin(), name.end(), ' ', '-');
    out.push_back(counted(name, p, static_cast<std::uint64_t>(fam.checked), static_cast<std::uint64_t>(fam.failed)));
  }
  return out;
}

std::vector<CheckResult> finite_model_checks(const hecke::FiniteModelReport& r) {
  const Params p = {{"model", "sl3f2"}};
  std::vector<int> sizes = r.cell_sizes;
  std::sort(sizes.begin(), sizes.end());
  std::string cells;
  for (int c : sizes) cells += (cells.empty() ? "" : ",") + str(c);
  return {compare("finite.group-order", p, "168", str(r.group_order)),
          compare("finite.borel-order", p, "8", str(r.borel_order)),
          compare("finite.double-cosets", p, "6", str(r.double_cosets)),
          compare("finite.flag-count", p, "21", str(r.flag_count)),
          compare("finite.cell-sizes", p, "1,2,2,4,4,8", cells),
          compare("finite.quadratic", p, "true", str(r.quadratic)),
          compare("finite.braid", p, "true", str(r.braid)),
          compare("finite.poincare", p, "true", str(r.poincare)),
          compare("finite.matches-generic", p, "true", str(r.matches_generic))};
}

namespace {

struct TypeCase {
  char type;
  int rank;
};

std::vector<TypeCase> table_types() {
  std::vector<TypeCase> out;
  for (int r = 2; r <= 9; ++r) out.push_back({'A', r});
  for (int r = 3; r <= 8; ++r) out.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) out.push_back({'E', r});
  return out;
}

struct FieldCase {
  int e, f;
  std::vector<std::int64_t> eis;
};

const std::vector<FieldCase> kFieldCases = {{1, 1, {}}, {2, 1, {}}, {3, 1, {}}, {1, 2, {}}, {2, 2, {}}, {1, 3, {}}};

const FieldContext& q2() {
  static const FieldContext fc = FieldContext::make(1, 1);
  return fc;
}

CoverTorusGroup group_over(const FieldContext& fc, char t, int r) {
  return CoverTorusGroup(roots::RootSystem::make(t, r), fc.form());
}

Suite lattice_suite(std::uint64_t) {
  Suite s{"Y~/2Y lattice table", {}};
  for (auto [t, r] : table_types()) s.add(lattice_checks(roots::RootSystem::make(t, r)));
  return s;
}

Suite field_suite(std::uint64_t) {
  Suite s{"unit filtration and integral radical", {}};
  for (const auto& fc : kFieldCases) s.add(field_checks(FieldContext::make(fc.e, fc.f, fc.eis)));
  return s;
}

Suite hilbert_suite(std::uint64_t) {
  Suite s{"Q_2 Hilbert oracle and method agreement", {}};
  const std::vector<std::int64_t> classes = {1, 3, 5, 7, 2, 6, 10, 14};
  const padic::FieldSpec& F = q2().field;
  std::uint64_t bad = 0, cases = 0;
  for (auto a : classes)
    for (auto b : classes) {
      ++cases;
      if (padic::hilbert(padic::Element::from_int(F, a), padic::Element::from_int(F, b)) != q2_hilbert_closed_form(a, b))
        ++bad;
    }
  s.results.push_back(counted("hilbert.q2-closed-form", {{"field", q2().label()}}, cases, bad));
  auto fields = kFieldCases;
  fields.push_back({2, 1, {2, 2}});
  fields.push_back({2, 1, {-2, 0}});
  for (const auto& fc : fields) s.add(hilbert_method_checks(FieldContext::make(fc.e, fc.f, fc.eis)));
  return s;
}

Suite decomposition_suite(std::uint64_t) {
  Suite s{"unit decomposition cases", {}};
  s.add(decomposition_checks(q2(), 2));
  s.add(decomposition_checks(FieldContext::make(2, 1, {2, 2}), 1));   // Q_2(sqrt(-1))
  s.add(decomposition_checks(FieldContext::make(2, 1, {-2, 0}), 3));  // Q_2(sqrt(2))
  return s;
}

Suite length_suite(std::uint64_t) {
  Suite s{"length proportionality", {}};
  for (auto [t, r, l] : std::vector<std::tuple<char, int, int>>{{'A', 2, 6}, {'A', 3, 6}, {'D', 4, 6}, {'E', 6, 3}})
    s.add(length_checks(coxeter::AffineWeylGroup(roots::RootSystem::make(t, r)), l));
  return s;
}

Suite table2_suite(std::uint64_t) {
  Suite s{"pseudo-spherical dimension and count table", {}};
  for (auto [t, r] : table_types()) s.add(table2_checks(group_over(q2(), t, r), q2().label()));
  for (const auto& fc : std::vector<FieldCase>{{2, 1, {}}, {1, 2, {}}, {3, 1, {}}, {1, 3, {}}}) {
    const FieldContext ctx = FieldContext::make(fc.e, fc.f, fc.eis);
    for (auto [t, r] : std::vector<TypeCase>{{'A', 2}, {'A', 3}, {'D', 4}})
      s.add(table2_checks(group_over(ctx, t, r), ctx.label()));
  }
  return s;
}

Suite invariance_suite(std::uint64_t) {
  Suite s{"Weyl invariance and branching", {}};
  for (auto [t, r] : table_types()) s.add(invariance_checks(group_over(q2(), t, r), q2().label()));
  return s;
}

Suite x_suite(std::uint64_t) {
  Suite s{"X-element identities", {}};
  for (auto [t, r] : std::vector<TypeCase>{{'A', 2}, {'A', 3}, {'D', 4}})
    s.add(x_element_checks(q2(), group_over(q2(), t, r)));
  return s;
}

Suite hecke_suite(std::uint64_t seed) {
  Suite s{"Iwahori-Matsumoto relations", {}};
  for (auto [t, r] : std::vector<TypeCase>{{'A', 2}, {'A', 3}, {'D', 4}, {'E', 6}}) {
    hecke::HeckeAlgebra alg{coxeter::AffineWeylGroup(roots::RootSystem::make(t, r))};
    s.add(hecke_checks(hecke::verify_relations(alg, 1000, seed)));
  }
  s.add(finite_model_checks(hecke::finite_iwahori_sl3f2()));
  return s;
}

Suite torus_suite(std::uint64_t seed) {
  Suite s{"covering torus", {}};
  for (const auto& fc : std::vector<FieldCase>{{1, 1, {}}, {2, 1, {}}, {1, 2, {}}, {3, 1, {}}}) {
    const FieldContext ctx = FieldContext::make(fc.e, fc.f, fc.eis);
    for (auto [t, r] : std::vector<TypeCase>{{'A', 2}, {'A', 3}, {'D', 4}})
      s.add(torus_checks(group_over(ctx, t, r), ctx.label(), seed));
  }
  for (auto [t, r] : std::vector<TypeCase>{{'E', 6}, {'E', 7}, {'E', 8}})
    s.add(torus_checks(group_over(q2(), t, r), q2().label(), seed));
  // Both of order 2^13, so the automorphism checks are sampled.
  const FieldContext big = FieldContext::make(2, 2);
  s.add(torus_checks(group_over(big, 'A', 3), big.label(), seed));
  const FieldContext cubic = FieldContext::make(3, 1);
  s.add(torus_checks(group_over(cubic, 'D', 4), cubic.label(), seed));
  return s;
}

}  // namespace

const std::vector<Criterion>& acceptance_matrix() {
  static const std::vector<Criterion> matrix = {
      {1, "Y~/2Y lattice table", lattice_suite},
      {2, "unit filtration and integral radical", field_suite},
      {3, "Q_2 Hilbert oracle and method agreement", hilbert_suite},
      {4, "unit decomposition cases", decomposition_suite},
      {5, "length proportionality", length_suite},
      {6, "pseudo-spherical dimension and count table", table2_suite},
      {7, "Weyl invariance and branching", invariance_suite},
      {8, "X-element identities", x_suite},
      {9, "Iwahori-Matsumoto relations", hecke_suite},
      {10, "covering torus", torus_suite},
  };
  return matrix;
}

}  // namespace metacover::checks
