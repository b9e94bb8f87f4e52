// conjlab: command-line front end.
//
//   classes     conjugacy classes of a Cayley-table fixture
//   decide      decide one relation on a pair, printing a verified witness
//   compare     inclusion matrix between relations on a fixture
//   inn         partial inner automorphism monoid of a fixture
//   build       emit the Cayley table of a named monoid
//   diagram     operations on partition diagrams
//   gset        operations on abelian G-sets
//   polygrowth  polycyclic growth tables
//   verify      oracle-equivalence suites

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "conjlab/cayley.hpp"
#include "conjlab/conjugacy.hpp"
#include "conjlab/diagram.hpp"
#include "conjlab/fixtures.hpp"
#include "conjlab/gset.hpp"
#include "conjlab/inner.hpp"
#include "conjlab/polycyclic.hpp"
#include "conjlab/transform.hpp"
#include "conjlab/verify.hpp"

using namespace conjlab;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;
constexpr size_t kClassSizeGuard = 5000;

// Route a command's report to stdout or to --output <path>.
struct Report {
  std::ofstream file;
  std::ostream* out = &std::cout;
  explicit Report(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) throw Error(Err::BadInput, "cannot write " + path);
      out = &file;
    }
  }
  std::ostream& stream() { return *out; }
};

CayleyTable load_table(const std::string& path) {
  if (path == "-") return parse_cayley(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  return parse_cayley(in);
}

Relation need_relation(const std::string& name) {
  auto r = relation_from_name(name);
  if (!r) throw Error(Err::BadInput, "unknown relation tag: " + name);
  return *r;
}

std::string witness_str(const ConjugacyEngine& eng, const Witness& w) {
  const CayleyTable& s1 = eng.table_s1();
  auto lab = [&](int x) { return s1.label(x); };
  std::ostringstream out;
  switch (w.kind) {
    case Witness::Kind::PairGH:
      out << "g=" << lab(w.g) << " h=" << lab(w.h);
      break;
    case Witness::Kind::Unit:
      out << "g=" << lab(w.g);
      break;
    case Witness::Kind::SinglePower:
      out << "g=" << lab(w.g) << " h=" << lab(w.h) << " m=" << w.m;
      break;
    case Witness::Kind::Chain: {
      out << "chain=";
      for (size_t i = 0; i < w.chain.size(); ++i) {
        if (i) out << ",";
        out << "(" << lab(w.chain[i].first) << "," << lab(w.chain[i].second) << ")";
      }
      break;
    }
  }
  return out.str();
}

json witness_json(const Witness& w) {
  json j;
  switch (w.kind) {
    case Witness::Kind::PairGH: j = {{"kind", "pair"}, {"g", w.g}, {"h", w.h}}; break;
    case Witness::Kind::Unit: j = {{"kind", "unit"}, {"g", w.g}}; break;
    case Witness::Kind::SinglePower:
      j = {{"kind", "power"}, {"g", w.g}, {"h", w.h}, {"m", w.m}};
      break;
    case Witness::Kind::Chain: {
      j = {{"kind", "chain"}};
      json pairs = json::array();
      for (auto& [u, v] : w.chain) pairs.push_back({u, v});
      j["pairs"] = pairs;
      break;
    }
  }
  return j;
}

int run_classes(const std::string& input, const std::string& relation,
                const std::string& format, bool force, const std::string& output) {
  CayleyTable s = load_table(input);
  if (size_t(s.order()) > kClassSizeGuard && !force)
    throw Error(Err::BoundExceeded, "table above the class-enumeration guard; use --force");
  ConjugacyEngine eng(s);
  ClassPartition part = eng.classes(need_relation(relation));
  auto classes = part.classes();
  Report report(output);
  std::ostream& out = report.stream();
  if (format == "json") {
    json j = {{"relation", relation}, {"classes", json::array()}};
    for (auto& cls : classes) j["classes"].push_back(cls);
    out << j.dump(2) << "\n";
  } else {
    for (size_t c = 0; c < classes.size(); ++c) {
      out << c << "\t" << classes[c].size() << "\t" << s.label(classes[c].front())
          << "\t";
      for (size_t i = 0; i < classes[c].size(); ++i)
        out << (i ? ", " : "") << s.label(classes[c][i]);
      out << "\n";
    }
  }
  return 0;
}

int run_decide(const std::string& input, const std::string& relation, int a, int b,
               const std::string& format, const std::string& output) {
  CayleyTable s = load_table(input);
  ConjugacyEngine eng(s);
  Relation rel = need_relation(relation);
  auto w = eng.decide(rel, a, b);
  if (w && !eng.verify(rel, a, b, *w))
    throw Error(Err::InvalidWitness, "internal: witness failed re-verification");
  Report report(output);
  std::ostream& out = report.stream();
  if (format == "json") {
    json j = {{"relation", relation}, {"a", a}, {"b", b}, {"related", w.has_value()}};
    if (w) j["witness"] = witness_json(*w);
    out << j.dump(2) << "\n";
  } else {
    out << relation << "\t" << s.label(a) << "\t" << s.label(b) << "\t"
        << (w ? "yes" : "no");
    if (w) out << "\t" << witness_str(eng, *w);
    out << "\n";
  }
  return 0;
}

int run_compare(const std::string& input, const std::string& relations,
                const std::string& format, const std::string& output) {
  CayleyTable s = load_table(input);
  ConjugacyEngine eng(s);
  std::vector<Relation> rels;
  std::vector<std::string> names;
  std::istringstream in(relations);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    rels.push_back(need_relation(tok));
    names.push_back(tok);
  }
  auto cmp = eng.compare(rels);
  Report report(output);
  std::ostream& out = report.stream();
  if (format == "json") {
    json j = json::array();
    for (size_t i = 0; i < rels.size(); ++i)
      for (size_t k = 0; k < rels.size(); ++k)
        j.push_back({{"left", names[i]}, {"right", names[k]}, {"result", compare_name(cmp[i][k])}});
    out << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < rels.size(); ++i)
      for (size_t k = 0; k < rels.size(); ++k)
        out << names[i] << "\t" << names[k] << "\t" << compare_name(cmp[i][k]) << "\n";
  }
  return 0;
}

int run_inn(const std::string& input) {
  CayleyTable s = load_table(input);
  InnMonoid inn = generate_inn(s);
  std::cout << "order\t" << inn.elements.size() << "\n";
  std::cout << "generators\t" << inn.generator_count << "\n";
  std::cout << "idempotents\t" << inn.realization.idempotents().size() << "\n";
  GreenData green = green_relations(inn.realization);
  std::cout << "d-classes\t" << green.num_d << "\n";
  for (auto& f : inn.elements) {
    int image = 0;
    for (int v : f.map) image += v >= 0;
    std::cout << "map\t" << f.domain_size() << "\t" << image << "\n";
  }
  return 0;
}

int run_build(const std::string& kind, int n, const std::string& y_literal,
              const std::string& output) {
  CayleyTable table;
  if (kind == "tn") {
    table = realize(enumerate_tn(n)).table;
  } else if (kind == "pn") {
    table = realize(enumerate_pn(n)).table;
  } else if (kind == "in") {
    table = realize(enumerate_in(n)).table;
  } else if (kind == "on") {
    table = realize(enumerate_on(n)).table;
  } else if (kind == "oin") {
    table = realize(enumerate_oin(n)).table;
  } else if (kind == "txy") {
    std::vector<int> y;
    std::string body = y_literal;
    for (char& c : body)
      if (c == '{' || c == '}' || c == ',') c = ' ';
    std::istringstream in(body);
    int v;
    while (in >> v) y.push_back(v - 1);
    table = realize(enumerate_txy(n, y)).table;
  } else if (kind == "partition") {
    table = realize_diagrams(enumerate_diagrams(DiagramKind::Partition, n)).table;
  } else if (kind == "brauer") {
    table = realize_diagrams(enumerate_diagrams(DiagramKind::Brauer, n)).table;
  } else if (kind == "partial-brauer") {
    table = realize_diagrams(enumerate_diagrams(DiagramKind::PartialBrauer, n)).table;
  } else if (kind == "zn") {
    table = cyclic_group(n);
  } else if (kind == "sn") {
    table = symmetric_group_table(n);
  } else if (kind == "truncadd") {
    table = truncated_addition(n);
  } else {
    bool found = false;
    for (auto& [name, t] : fixtures::all())
      if (name == kind) {
        table = t;
        found = true;
      }
    if (!found) throw Error(Err::BadInput, "unknown build kind: " + kind);
  }
  std::string text = format_cayley(table);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw Error(Err::BadInput, "cannot write " + output);
    out << text;
  }
  return 0;
}

int run_diagram(const std::string& op, const std::string& kind_name,
                const std::string& lit_a, const std::string& lit_b) {
  DiagramKind kind = DiagramKind::Partition;
  if (kind_name == "brauer") kind = DiagramKind::Brauer;
  else if (kind_name == "partial-brauer") kind = DiagramKind::PartialBrauer;
  else if (kind_name != "partition")
    throw Error(Err::BadInput, "unknown diagram kind: " + kind_name);
  PartitionDiagram a = PartitionDiagram::parse(lit_a);
  if (op == "stats") {
    DiagramStats st = diagram_stats(a);
    std::cout << "rank\t" << st.rank << "\n";
    std::cout << "group-element\t" << (is_group_element(a) ? "yes" : "no") << "\n";
    std::cout << "idempotent\t" << (is_idempotent_diagram(a) ? "yes" : "no") << "\n";
    auto type = cycle_type_omega_plus_one(a);
    std::cout << "cycle-type\t(";
    if (type.empty()) std::cout << "0";
    for (size_t i = 0; i < type.size(); ++i) std::cout << (i ? "," : "") << type[i];
    std::cout << ")\n";
    return 0;
  }
  if (op == "normalize") {
    NormalizeResult res = normalize_n(a, kind);
    std::cout << "normal\t" << res.normal.str() << "\n";
    std::cout << "steps\t" << res.steps.size() << "\n";
    return 0;
  }
  PartitionDiagram b = PartitionDiagram::parse(lit_b);
  if (op == "multiply") {
    std::cout << a.multiply(b).str() << "\n";
  } else if (op == "decide-n") {
    std::cout << (conj_n_diagram(a, b, kind) ? "yes" : "no") << "\n";
  } else if (op == "decide-tr") {
    std::cout << (conj_tr_diagram(a, b) ? "yes" : "no") << "\n";
  } else if (op == "decide-o") {
    std::cout << (conj_o_diagram(a, b, kind) ? "yes" : "no") << "\n";
  } else if (op == "decide-c") {
    std::cout << (conj_c_diagram(a, b, kind) ? "yes" : "no") << "\n";
  } else {
    throw Error(Err::BadInput, "unknown diagram op: " + op);
  }
  return 0;
}

GEndomorphism parse_endo(const GSetSpec& spec, const std::string& literal) {
  GEndomorphism f;
  size_t i = 0;
  while (i < literal.size()) {
    if (literal[i] != '(') {
      ++i;
      continue;
    }
    size_t close = literal.find(')', i);
    // allow a nested tuple for the coset element
    size_t inner = literal.find('(', i + 1);
    if (inner != std::string::npos && inner < close) close = literal.find(')', close + 1);
    if (close == std::string::npos) throw Error(Err::ParseError, "unclosed endo tuple");
    std::string body = literal.substr(i + 1, close - i - 1);
    size_t comma = body.find(',');
    int orbit = std::stoi(body.substr(0, comma)) - 1;
    std::string coset = body.substr(comma + 1);
    std::vector<int> tup;
    for (char& c : coset)
      if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream ts(coset);
    int v;
    while (ts >> v) tup.push_back(v);
    if (orbit < 0 || orbit >= spec.num_orbits())
      throw Error(Err::IndexOutOfRange, "orbit index");
    f.image.push_back({orbit, spec.coset_rep(orbit, spec.group.from_tuple(tup))});
    i = close + 1;
  }
  if (int(f.image.size()) != spec.num_orbits())
    throw Error(Err::BadInput, "endomorphism literal arity mismatch");
  return f;
}

int run_gset(const std::string& input, const std::string& op, const std::string& lit_f,
             const std::string& lit_g) {
  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) throw Error(Err::ParseError, "cannot open " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  GSetSpec spec = parse_gset(text);
  if (op == "end") {
    for (auto& f : enumerate_end(spec)) std::cout << end_str(spec, f) << "\n";
    return 0;
  }
  GEndomorphism f = parse_endo(spec, lit_f);
  if (op == "trim") {
    LabeledOrbitGraph t = g_trim(spec, f);
    for (size_t i = 0; i < t.orbits.size(); ++i) {
      std::cout << "orbit " << t.orbits[i] + 1 << " -> " << t.out[i] + 1 << "\tstab={";
      for (size_t k = 0; k < t.stab[i].size(); ++k)
        std::cout << (k ? "," : "") << spec.group.tuple_str(t.stab[i][k]);
      std::cout << "}";
      if (t.label[i] >= 0) std::cout << "\tlabel=" << spec.group.tuple_str(t.label[i]);
      std::cout << "\n";
    }
    return 0;
  }
  if (op == "decide") {
    GEndomorphism g = parse_endo(spec, lit_g);
    std::cout << (conj_n_gset(spec, f, g) ? "yes" : "no") << "\n";
    return 0;
  }
  throw Error(Err::BadInput, "unknown gset op: " + op);
}

int run_polygrowth(int n, int max_m, const std::string& relation, bool with_oracle) {
  GrowthTable closed = growth_function(n, max_m, relation);
  GrowthTable oracle;
  if (with_oracle) oracle = ball_oracle(n, max_m, relation);
  for (int m = 0; m <= max_m; ++m) {
    std::cout << m << "\t" << closed.values[m];
    if (with_oracle) std::cout << "\t" << oracle.values[m];
    std::cout << "\n";
  }
  if (with_oracle && closed.values != oracle.values) {
    std::cerr << "mismatch between closed form and oracle\n";
    return 1;
  }
  return 0;
}

int run_verify(const std::string& suite, int n, int max_m) {
  CheckList checks;
  if (suite == "inclusions") {
    checks = verify_inclusions(n > 0 ? n : 4);
  } else if (suite == "idempotents") {
    checks = verify_paper_fixtures();
  } else if (suite == "transformations") {
    int cap = n > 0 ? n : 4;
    checks = verify_transformations(std::min(cap, 5), std::min(cap, 4), std::min(cap, 4),
                                    std::min(cap, 5), std::min(cap, 5), std::min(cap, 4));
  } else if (suite == "diagrams") {
    int cap = n > 0 ? n : 3;
    checks = verify_diagrams(std::min(cap, 3), std::min(cap, 3), std::min(cap + 1, 4));
  } else if (suite == "gsets") {
    checks = verify_gsets(3, n > 0 ? n : 6);
  } else if (suite == "inn") {
    checks = verify_inn(n > 0 ? std::min(n, 3) : 3, 3, 10000);
    CheckList rees = verify_rees(2, 2);
    checks.insert(checks.end(), rees.begin(), rees.end());
  } else if (suite == "polycyclic") {
    checks = verify_polycyclic(max_m > 0 ? std::min(max_m, 6) : 6, 10);
  } else {
    throw Error(Err::BadInput, "unknown suite: " + suite);
  }
  bool ok = true;
  for (auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "\t" << c.name << "\t" << c.seconds << "s";
    if (!c.detail.empty()) std::cout << "\t" << c.detail;
    std::cout << "\n";
    ok &= c.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy relations on finite semigroups"};
  app.require_subcommand(1);

  std::string input = "-", relation = "n", format = "tsv", relations = "n,pstar,o";
  std::string kind = "tn", dkind = "partition", op = "stats", lit_a, lit_b, output;
  std::string suite = "inclusions";
  int a = 0, b = 0, n = 3, max_m = 6, vn = 0, vmax = 0;
  bool force = false, with_oracle = false;

  auto* classes = app.add_subcommand("classes", "conjugacy classes of a fixture");
  classes->add_option("--input", input);
  classes->add_option("--relation", relation);
  classes->add_option("--format", format);
  classes->add_option("--output", output);
  classes->add_flag("--force", force);

  auto* decide = app.add_subcommand("decide", "decide one pair");
  decide->add_option("--input", input);
  decide->add_option("--relation", relation);
  decide->add_option("-a", a)->required();
  decide->add_option("-b", b)->required();
  decide->add_option("--format", format);
  decide->add_option("--output", output);

  auto* compare = app.add_subcommand("compare", "inclusion matrix");
  compare->add_option("--input", input);
  compare->add_option("--relations", relations);
  compare->add_option("--format", format);
  compare->add_option("--output", output);

  auto* inn = app.add_subcommand("inn", "partial inner automorphism monoid");
  inn->add_option("--input", input);

  auto* build = app.add_subcommand("build", "emit a named monoid");
  build->add_option("--kind", kind);
  build->add_option("--n", n);
  build->add_option("--y", lit_a);
  build->add_option("--output", output);

  auto* diagram = app.add_subcommand("diagram", "partition diagram operations");
  diagram->add_option("--op", op);
  diagram->add_option("--kind", dkind);
  diagram->add_option("-a", lit_a);
  diagram->add_option("-b", lit_b);

  auto* gset = app.add_subcommand("gset", "abelian G-set operations");
  gset->add_option("--input", input);
  gset->add_option("--op", op);
  gset->add_option("-f", lit_a);
  gset->add_option("-g", lit_b);

  auto* poly = app.add_subcommand("polygrowth", "polycyclic growth tables");
  poly->add_option("--n", n);
  poly->add_option("--max", max_m);
  poly->add_option("--relation", relation);
  poly->add_flag("--verify", with_oracle);

  auto* verify = app.add_subcommand("verify", "oracle-equivalence suites");
  verify->add_option("suite", suite);
  verify->add_option("--n", vn);
  verify->add_option("--max", vmax);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classes->parsed()) return run_classes(input, relation, format, force, output);
    if (decide->parsed()) return run_decide(input, relation, a, b, format, output);
    if (compare->parsed()) return run_compare(input, relations, format, output);
    if (inn->parsed()) return run_inn(input);
    if (build->parsed()) return run_build(kind, n, lit_a, output);
    if (diagram->parsed()) return run_diagram(op, dkind, lit_a, lit_b);
    if (gset->parsed()) return run_gset(input, op, lit_a, lit_b);
    if (poly->parsed()) return run_polygrowth(n, max_m, relation, with_oracle);
    if (verify->parsed()) return run_verify(suite, vn, vmax);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == Err::BoundExceeded ? kExitBound : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
