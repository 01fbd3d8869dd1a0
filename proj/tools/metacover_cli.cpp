#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metacover/checks.hpp"
#include "metacover/coxeter.hpp"
#include "metacover/covertorus.hpp"
#include "metacover/error.hpp"
#include "metacover/imhecke.hpp"
#include "metacover/padic.hpp"
#include "metacover/pseudospherical.hpp"
#include "metacover/rootdata.hpp"

using json = nlohmann::ordered_json;
using namespace metacover;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
  int e = 1;
  int f = 1;
  std::vector<std::int64_t> eisenstein;
  std::string type = "A";
  int rank = 2;
  int max_len = 3;
  int trials = 100;
  std::uint64_t seed = 7;
  std::string format = "table";
  std::string a, b;
  std::string model = "sl3f2";
};

json to_json(const checks::CheckResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"check", r.check}, {"params", params}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}};
}

json to_json(const std::vector<checks::CheckResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

bool all_pass(const json& checks) {
  for (const auto& c : checks)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

// Plain-text rendering: scalars as "key: value", multi-line strings as
// indented blocks, arrays of objects one per line.
void render(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, v, indent + 2);
    } else if (v.is_array()) {
      const bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
      if (flat) {
        os << pad << it.key() << ":";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : " ") << scalar(v[i]);
        os << "\n";
        continue;
      }
      os << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object() && x.contains("check")) {
          os << pad << "  " << (x["pass"].get<bool>() ? "ok   " : "FAIL ") << scalar(x["check"]);
          for (auto p = x["params"].begin(); p != x["params"].end(); ++p) os << " " << p.key() << "=" << scalar(p.value());
          os << " expected [" << scalar(x["expected"]) << "] actual [" << scalar(x["actual"]) << "]\n";
        } else if (x.is_object()) {
          os << pad << "  -";
          bool block = false;
          for (auto p = x.begin(); p != x.end(); ++p) {
            if (p.value().is_string() && p.value().get<std::string>().find('\n') != std::string::npos) {
              block = true;
              continue;
            }
            os << " " << p.key() << "=" << (p.value().is_array() || p.value().is_object() ? p.value().dump() : scalar(p.value()));
          }
          os << "\n";
          if (block)
            for (auto p = x.begin(); p != x.end(); ++p)
              if (p.value().is_string() && p.value().get<std::string>().find('\n') != std::string::npos) {
                std::istringstream lines(p.value().get<std::string>());
                for (std::string line; std::getline(lines, line);) os << pad << "    " << line << "\n";
              }
        } else {
          os << pad << "  - " << x.dump() << "\n";
        }
      }
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << pad << it.key() << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
    } else {
      os << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

int emit(const Config& cfg, json doc) {
  doc["seed"] = cfg.seed;
  bool ok = true;
  if (doc.contains("checks")) {
    ok = all_pass(doc["checks"]);
    doc["pass"] = ok;
  }
  if (cfg.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    render(std::cout, doc);
  return ok ? 0 : kExitFailure;
}

roots::RootSystem root_system(const Config& cfg) {
  require(cfg.type.size() == 1, "--type takes one of A, D, E");
  return roots::RootSystem::make(cfg.type[0], cfg.rank);
}

checks::FieldContext field_context(const Config& cfg) { return checks::FieldContext::make(cfg.e, cfg.f, cfg.eisenstein); }

json field_json(const checks::FieldContext& fc) {
  std::vector<std::int64_t> eis(fc.field.eisenstein().begin(), fc.field.eisenstein().end());
  return {{"e", fc.field.e()}, {"f", fc.field.f()}, {"eisenstein", eis}, {"description", fc.label()}};
}

std::string bits(f2::Vec v, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((v >> i) & 1u) ? '1' : '0';
  return s;
}

// An element given as an integer or as {"val": m, "unit_digits": [[...], ...]}.
padic::Element parse_element(const padic::FieldSpec& F, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    fail(ErrorKind::InvalidArgument, "cannot parse element '" + text + "'");
  }
  if (j.is_number_integer()) {
    require(j.get<std::int64_t>() != 0, "elements must be nonzero");
    return padic::Element::from_int(F, j.get<std::int64_t>());
  }
  require(j.is_object() && j.contains("val") && j.contains("unit_digits"),
          "an element is an integer or an object with val and unit_digits");
  const int val = j["val"].get<int>();
  const auto digits = j["unit_digits"].get<std::vector<std::vector<std::int64_t>>>();
  const padic::Element unit = padic::Element::from_integer(F, F.from_digits(digits, F.precision()));
  require(!unit.is_zero(), "unit_digits describe zero");
  return padic::Element::from_unit(F, val, F.from_int(1, F.precision())) * unit;
}

int field_hilbert(const Config& cfg) {
  const auto fc = field_context(cfg);
  const padic::Element a = parse_element(fc.field, cfg.a), b = parse_element(fc.field, cfg.b);
  const int norm = padic::hilbert(a, b), conic = padic::hilbert_conic(a, b);
  json doc = {{"command", "field hilbert"}, {"field", field_json(fc)}, {"a", cfg.a}, {"b", cfg.b},
              {"a_class", bits(fc.space.coords(a), fc.space.dimension())},
              {"b_class", bits(fc.space.coords(b), fc.space.dimension())}, {"symbol", norm}};
  doc["checks"] = json::array(
      {to_json(checks::compare("hilbert.norm-vs-conic", {{"a", cfg.a}, {"b", cfg.b}}, std::to_string(norm),
                               std::to_string(conic)))});
  return emit(cfg, doc);
}

int field_square_classes(const Config& cfg) {
  const auto fc = field_context(cfg);
  const int n = fc.space.dimension();
  json basis = json::array();
  for (int i = 0; i < n; ++i) basis.push_back({{"index", i}, {"label", fc.space.labels()[i]}});
  json gram = json::array();
  for (f2::Vec row : fc.space.gram()) gram.push_back(bits(row, n));
  return emit(cfg, {{"command", "field square-classes"},
                    {"field", field_json(fc)},
                    {"dimension", n},
                    {"order", std::uint64_t{1} << n},
                    {"basis", basis},
                    {"gram", gram}});
}

int field_radical(const Config& cfg) {
  const auto fc = field_context(cfg);
  const padic::RadicalReport r = padic::integral_radical(fc.space);
  json doc = {{"command", "field radical"},
              {"field", field_json(fc)},
              {"radical_class", bits(r.radical, fc.space.dimension())},
              {"generator", r.generator_label},
              {"index_in_units", r.index_in_units},
              {"u2e_squares", r.u2e_square_count},
              {"u2e_residues", r.u2e_residue_count}};
  doc["checks"] = to_json(checks::field_checks(fc));
  return emit(cfg, doc);
}

int field_unit_decomposition(const Config& cfg) {
  const auto fc = field_context(cfg);
  const padic::UnitDecomposition& d = fc.dec;
  const torus::UnitForm form = fc.form();
  json basis = json::array();
  for (int i = 0; i < d.dimension(); ++i)
    basis.push_back({{"name", form.label(f2::Vec{1} << i)}, {"class", bits(d.basis[i], fc.space.dimension())}});
  json gram = json::array();
  for (f2::Vec row : d.gram) gram.push_back(bits(row, d.dimension()));
  static const char* kCases[] = {"", "(i) -1 in R", "(ii) (-1,-1) = -1", "(iii) (-1,-1) = 1, -1 not in R"};
  return emit(cfg, {{"command", "field unit-decomposition"},
                    {"field", field_json(fc)},
                    {"case", d.case_number},
                    {"case_text", kCases[d.case_number]},
                    {"k", d.k},
                    {"l", d.l},
                    {"minus_one", form.label(d.minus_one)},
                    {"basis", basis},
                    {"gram", gram}});
}

int roots_lattice_table(const Config& cfg) {
  const auto sys = root_system(cfg);
  const roots::LatticeTable t = roots::Ytilde_mod_2Y(sys);
  json classes = json::array();
  const auto odd = t.odd_nodes();
  for (std::size_t k = 1; k < t.representatives.size(); ++k)
    classes.push_back({{"odd_nodes", odd[k - 1]}, {"diagram", roots::ascii_diagram(sys, t.representatives[k])}});
  json doc = {{"command", "roots lattice-table"}, {"type", sys.name()}, {"quotient", t.quotient},
              {"group_order", t.group_order},     {"index", t.index},     {"nontrivial_classes", classes}};
  doc["checks"] = to_json(checks::lattice_checks(sys));
  return emit(cfg, doc);
}

int weyl_lengths(const Config& cfg) {
  require(cfg.max_len >= 0 && cfg.max_len <= 12, "--max-len must lie in 0..12");
  const coxeter::AffineWeylGroup g(root_system(cfg));
  json rows = json::array();
  for (const auto& x : g.enumerate(cfg.max_len)) {
    std::vector<int> y(x.y.begin(), x.y.begin() + g.rank());
    rows.push_back({{"element", g.describe(x)},
                    {"translation", y},
                    {"length", g.length_tilde(x)},
                    {"l2", g.length_two(x)},
                    {"word", g.reduced_word(x).word}});
  }
  json doc = {{"command", "weyl lengths"}, {"type", g.system().name()}, {"max_len", cfg.max_len}, {"elements", rows}};
  doc["checks"] = to_json(checks::length_checks(g, cfg.max_len));
  return emit(cfg, doc);
}

int weyl_omega(const Config& cfg) {
  const coxeter::AffineWeylGroup g(root_system(cfg));
  json rows = json::array();
  for (const auto& om : g.omega_group()) {
    std::vector<int> parity(om.parity.begin(), om.parity.begin() + g.rank());
    std::vector<int> nodes(om.node_map.begin(), om.node_map.begin() + g.rank() + 1);
    rows.push_back({{"parity", parity}, {"node_map", nodes}, {"length", g.length_tilde(om.element)}});
  }
  return emit(cfg, {{"command", "weyl omega"}, {"type", g.system().name()}, {"order", rows.size()}, {"elements", rows}});
}

int torus_command(const Config& cfg, const std::string& verb) {
  const auto fc = field_context(cfg);
  const torus::CoverTorusGroup g(root_system(cfg), fc.form());
  json doc = {{"command", "torus " + verb}, {"type", g.system().name()}, {"field", field_json(fc)}};
  if (verb == "order") {
    doc["order"] = g.order();
    doc["order_mod_T2e"] = torus::order_mod_T2e(fc.field, g.rank());
  } else if (verb == "center") {
    json elems = json::array();
    for (torus::Elem z : g.center()) elems.push_back(g.describe(z));
    doc["order"] = elems.size();
    doc["elements"] = elems;
  } else {
    doc["checks"] = to_json(checks::torus_checks(g, fc.label(), cfg.seed));
  }
  return emit(cfg, doc);
}

json character_on_center(const reps::GenuineRep& rep, const std::vector<torus::Elem>& center) {
  json row = json::array();
  for (torus::Elem z : center) row.push_back(reps::to_string(rep.character_at(z)));
  return row;
}

int reps_command(const Config& cfg, const std::string& verb) {
  const auto fc = field_context(cfg);
  const torus::CoverTorusGroup g(root_system(cfg), fc.form());
  json doc = {{"command", "reps " + verb}, {"type", g.system().name()}, {"field", field_json(fc)}};
  if (verb == "table2") {
    const auto all = reps::all_pseudospherical(g);
    const auto center = g.center();
    json header = json::array();
    for (torus::Elem z : center) header.push_back(g.describe(z));
    json table = json::array();
    for (const auto& rep : all) table.push_back({{"dimension", rep.dim()}, {"character", character_on_center(rep, center)}});
    doc["dimension"] = all.empty() ? 0 : all.front().dim();
    doc["count"] = all.size();
    doc["center"] = header;
    doc["characters"] = table;
    doc["checks"] = to_json(checks::table2_checks(g, fc.label()));
  } else {
    auto results = checks::invariance_checks(g, fc.label());
    auto x = checks::x_element_checks(fc, g);
    results.insert(results.end(), x.begin(), x.end());
    doc["checks"] = to_json(results);
  }
  return emit(cfg, doc);
}

int hecke_verify(const Config& cfg) {
  require(cfg.trials > 0, "--trials must be positive");
  hecke::HeckeAlgebra alg{coxeter::AffineWeylGroup(root_system(cfg))};
  const hecke::RelationReport rep = hecke::verify_relations(alg, cfg.trials, cfg.seed);
  json families = json::array();
  for (const auto& fam : rep.families)
    families.push_back({{"family", fam.name}, {"checked", fam.checked}, {"failed", fam.failed}, {"pass", fam.pass()}});
  json doc = {{"command", "hecke verify"},
              {"type", rep.system},
              {"trials", rep.trials},
              {"product_formula_printed", rep.product_formula_printed},
              {"product_formula_used", rep.product_formula_used},
              {"families", families}};
  doc["checks"] = to_json(checks::hecke_checks(rep));
  return emit(cfg, doc);
}

int hecke_finite(const Config& cfg) {
  require(cfg.model == "sl3f2", "the only finite model is sl3f2");
  const hecke::FiniteModelReport r = hecke::finite_iwahori_sl3f2();
  json doc = {{"command", "hecke finite-iwahori"}, {"model", cfg.model}, {"notes", r.notes}};
  doc["checks"] = to_json(checks::finite_model_checks(r));
  return emit(cfg, doc);
}

int verify_all(const Config& cfg) {
  json criteria = json::array();
  json all = json::array();
  for (const auto& c : checks::acceptance_matrix()) {
    const checks::Suite s = c.run(cfg.seed);
    criteria.push_back({{"criterion", c.id}, {"title", c.title}, {"checks", s.results.size()}, {"failures", s.failures()}, {"pass", s.pass()}});
    for (const auto& r : s.results) {
      json j = to_json(r);
      j["params"]["criterion"] = std::to_string(c.id);
      all.push_back(j);
    }
  }
  if (cfg.format == "json") return emit(cfg, {{"command", "verify-all"}, {"criteria", criteria}, {"checks", all}});
  // The table view keeps to one line per criterion plus any failures.
  json failures = json::array();
  for (const auto& j : all)
    if (!j["pass"].get<bool>()) failures.push_back(j);
  json doc = {{"command", "verify-all"}, {"criteria", criteria}, {"failures", failures}};
  doc["seed"] = cfg.seed;
  doc["pass"] = failures.empty();
  render(std::cout, doc);
  return failures.empty() ? 0 : kExitFailure;
}

void field_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--e", cfg.e, "ramification index")->check(CLI::Range(1, 6));
  cmd->add_option("--f", cfg.f, "inertia degree")->check(CLI::Range(1, 6));
  cmd->add_option("--eisenstein", cfg.eisenstein, "c0,c1,... of the Eisenstein polynomial")->delimiter(',');
}

void type_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--type", cfg.type, "A, D or E")->required()->check(CLI::IsMember({"A", "D", "E"}));
  cmd->add_option("--rank", cfg.rank, "rank")->required();
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"metacover: finite verifications for covering tori, parity lattices and Iwahori-Matsumoto algebras"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks (echoed in the output)");
  app.fallthrough();

  std::function<int(const Config&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->fallthrough();
    return c;
  };

  CLI::App* field = app.add_subcommand("field", "2-adic fields and Hilbert symbols")->require_subcommand(1);
  CLI::App* hil = leaf(field, "hilbert", "Hilbert symbol (A, B)");
  hil->add_option("A", cfg.a, "integer or {\"val\": m, \"unit_digits\": [[...]]}")->required();
  hil->add_option("B", cfg.b, "integer or {\"val\": m, \"unit_digits\": [[...]]}")->required();
  field_options(hil, cfg);
  hil->callback([&] { action = field_hilbert; });
  CLI::App* sq = leaf(field, "square-classes", "basis and Gram matrix of F^x / F^x2");
  field_options(sq, cfg);
  sq->callback([&] { action = field_square_classes; });
  CLI::App* rad = leaf(field, "radical", "integral radical R");
  field_options(rad, cfg);
  rad->callback([&] { action = field_radical; });
  CLI::App* ud = leaf(field, "unit-decomposition", "orthogonal decomposition of O^x / R");
  field_options(ud, cfg);
  ud->callback([&] { action = field_unit_decomposition; });

  CLI::App* rts = app.add_subcommand("roots", "root systems")->require_subcommand(1);
  CLI::App* lat = leaf(rts, "lattice-table", "Y~/2Y with index and diagrams");
  type_options(lat, cfg);
  lat->callback([&] { action = roots_lattice_table; });

  CLI::App* weyl = app.add_subcommand("weyl", "extended affine Weyl group")->require_subcommand(1);
  CLI::App* len = leaf(weyl, "lengths", "elements with their lengths and reduced words");
  type_options(len, cfg);
  len->add_option("--max-len", cfg.max_len, "largest length listed");
  len->callback([&] { action = weyl_lengths; });
  CLI::App* om = leaf(weyl, "omega", "length-zero elements and node permutations");
  type_options(om, cfg);
  om->callback([&] { action = weyl_omega; });

  CLI::App* tor = app.add_subcommand("torus", "covering torus T~_0 / T_R")->require_subcommand(1);
  for (const char* v : {"order", "center", "verify"}) {
    CLI::App* c = leaf(tor, v, std::string("torus ") + v);
    type_options(c, cfg);
    field_options(c, cfg);
    c->callback([&action, v] { action = [v](const Config& c) { return torus_command(c, v); }; });
  }

  CLI::App* reps = app.add_subcommand("reps", "pseudo-spherical representations")->require_subcommand(1);
  for (const char* v : {"table2", "verify"}) {
    CLI::App* c = leaf(reps, v, std::string("reps ") + v);
    type_options(c, cfg);
    field_options(c, cfg);
    c->callback([&action, v] { action = [v](const Config& c) { return reps_command(c, v); }; });
  }

  CLI::App* hk = app.add_subcommand("hecke", "Iwahori-Matsumoto algebra")->require_subcommand(1);
  CLI::App* hv = leaf(hk, "verify", "relation families on random products");
  type_options(hv, cfg);
  hv->add_option("--trials", cfg.trials, "random triples per family");
  hv->callback([&] { action = hecke_verify; });
  CLI::App* fi = leaf(hk, "finite-iwahori", "convolution model over a finite field");
  fi->add_option("--model", cfg.model, "model name")->check(CLI::IsMember({"sl3f2"}));
  fi->callback([&] { action = hecke_finite; });

  CLI::App* va = app.add_subcommand("verify-all", "run the full acceptance matrix");
  va->fallthrough();
  va->callback([&] { action = verify_all; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::Unsupported ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
