// Command-line front end for the tangency library.
//
// Every command builds a JSON payload, a plain-text table and, where the
// result is a graded structure, a Graphviz digraph; --format picks one.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tangency/cells.hpp"
#include "tangency/classifier.hpp"
#include "tangency/composition.hpp"
#include "tangency/error.hpp"
#include "tangency/io.hpp"
#include "tangency/markers.hpp"
#include "tangency/poset.hpp"
#include "tangency/trajectory.hpp"
#include "tangency/verify.hpp"

namespace {

using namespace tangency;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  std::string table;
  std::optional<std::string> dot;
  int exit = kOk;
};

std::string paren(const Composition& w) { return "(" + (w.empty() ? std::string() : to_string(w)) + ")"; }

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Composition comp_arg(const std::string& text) { return parse_composition(text); }

OrderKind kind_arg(const std::string& text) { return text == "bullet" ? OrderKind::Bullet : OrderKind::Omega; }

std::vector<Composition> generate(const std::string& poset, int d, int n, const std::string& mode) {
  if (poset == "bullet") {
    if (n < 0) throw UsageError("--n must be a nonnegative integer for the bullet poset");
    return generate_bullet(n);
  }
  if (d < 0) throw UsageError("--d must be a nonnegative integer for the omega poset");
  return generate_omega(d, mode == "exact" ? GenMode::Exact : GenMode::UpTo);
}

// ------------------------------------------------------------------ commands

struct GenArgs {
  std::string poset = "omega";
  int d = -1;
  int n = -1;
  std::string mode = "upto";
};

Output cmd_gen(const GenArgs& a) {
  const auto elems = generate(a.poset, a.d, a.n, a.mode);
  Output out;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& w : elems) {
    list.push_back(to_json(w));
    t << paren(w) << "  |w|=" << w.norm() << " |w|'=" << w.reduced_norm() << "\n";
  }
  t << elems.size() << " elements\n";
  out.json = Json{{"poset", a.poset}, {"count", elems.size()}, {"elements", list}};
  out.table = t.str();
  return out;
}

Output cmd_hasse(const GenArgs& a) {
  const auto poset = hasse(generate(a.poset, a.d, a.n, a.mode), kind_arg(a.poset));
  Output out;
  out.json = to_json(poset);
  std::ostringstream t;
  for (auto [big, small] : poset.covers) {
    t << paren(poset.elements[static_cast<std::size_t>(big)]) << " > " << paren(poset.elements[static_cast<std::size_t>(small)]) << "\n";
  }
  t << poset.elements.size() << " elements, " << poset.covers.size() << " covers\n";
  out.table = t.str();
  out.dot = to_dot(poset);
  return out;
}

Output cmd_order(const std::string& kind, const std::string& sa, const std::string& sb) {
  const auto a = comp_arg(sa), b = comp_arg(sb);
  Output out;
  Json witness = nullptr;
  bool holds = false;
  if (kind == "bullet") {
    holds = bullet_geq(a, b);
    const auto maps = bullet_mor_enumerate(a, b);
    if (!maps.empty()) witness = to_json(maps.front());
    out.json = Json{{"kind", kind}, {"a", to_json(a)}, {"b", to_json(b)}, {"holds", holds}, {"mor_bullet_nonempty", !maps.empty()},
                    {"witness", witness}};
  } else {
    const auto maps = mor_enumerate(a, b);
    holds = !maps.empty();
    if (holds) witness = to_json(maps.front());
    out.json = Json{{"kind", kind}, {"a", to_json(a)}, {"b", to_json(b)}, {"holds", holds}, {"witness", witness}};
  }
  out.table = paren(a) + (kind == "bullet" ? " >=bullet " : " >= ") + paren(b) + ": " + (holds ? "true" : "false") + "\n";
  return out;
}

Output cmd_mor(const std::string& kind, const std::string& sa, const std::string& sb) {
  const auto a = comp_arg(sa), b = comp_arg(sb);
  const auto maps = kind == "bullet" ? bullet_mor_enumerate(a, b) : mor_enumerate(a, b);
  Output out;
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& m : maps) {
    list.push_back(m.map);
    t << "[";
    for (std::size_t i = 0; i < m.map.size(); ++i) t << (i ? "," : "") << m.map[i];
    t << "]\n";
  }
  t << maps.size() << " morphisms " << paren(a) << " -> " << paren(b) << "\n";
  out.json = Json{{"kind", kind}, {"source", to_json(a)}, {"target", to_json(b)}, {"count", maps.size()}, {"maps", list}};
  out.table = t.str();
  return out;
}

Output cmd_cells(int d, const std::string& ambient) {
  if (d < 1) throw UsageError("--d must be a positive integer");
  const Ambient amb = parse_ambient(ambient);
  const auto f = f_vector(d, amb);
  Output out;
  Json cells = Json::array();
  std::ostringstream t;
  for (const auto& w : generate_omega(d, GenMode::UpTo)) {
    const int count = cell_count(w, d, amb);
    if (count == 0) continue;
    const int dim = cell_dimension(w, d, amb);
    cells.push_back(Json{{"label", to_json(w)}, {"dim", dim}, {"count", count}});
    t << paren(w) << "  dim " << dim << (count > 1 ? "  x" + std::to_string(count) : "") << "\n";
  }
  out.json = to_json(f);
  out.json["euler_characteristic"] = euler_characteristic(f);
  out.json["cells"] = cells;
  t << "f-vector (dim 0..): " << join(f.counts) << "\nchi = " << euler_characteristic(f) << "\n";
  out.table = t.str();
  return out;
}

Output cmd_star(const std::string& omega, int d) {
  const auto star = normal_star(comp_arg(omega), d);
  Output out;
  out.json = to_json(star);
  std::ostringstream t;
  for (const auto& c : star.cells) t << paren(c.label) << "  dim " << c.dim << "\n";
  t << star.cells.size() << " cells around " << paren(star.center) << "\n";
  out.table = t.str();
  out.dot = to_dot(star);
  return out;
}

Output cmd_ram(const std::string& omega, const std::string& tilde) {
  const auto w = comp_arg(omega), wt = comp_arg(tilde);
  const int o = ramification_o(w, wt);
  Output out;
  out.json = Json{{"omega", to_json(w)}, {"omega_tilde", to_json(wt)}, {"o", o}, {"star_multiplicity", star_multiplicity(wt)}};
  out.table = "o" + paren(w) + paren(wt) + " = " + std::to_string(o) + "\nstar multiplicity of " + paren(wt) + " = " +
              std::to_string(star_multiplicity(wt)) + "\n";
  return out;
}

struct MarkerArgs {
  std::string omega;
  int marker = 0;
  std::string target;
  int merge_j = -1;
  int insert_j = -1;
};

Output cmd_markers(const MarkerArgs& a) {
  const auto w = comp_arg(a.omega);
  Output out;
  std::ostringstream t;
  if (a.marker == 0) {
    Json blocks_json = Json::array();
    for (const auto& b : blocks(w).blocks) {
      const auto xi = xi_at_marker(MarkedComposition{w, b.marker});
      blocks_json.push_back(Json{{"marker", b.marker}, {"members", b.members}, {"xi", to_json(xi)}});
      t << "marker " << b.marker << "  block [" << b.members.front() << "," << b.members.back() << "]  xi " << paren(xi) << "\n";
    }
    out.json = Json{{"omega", to_json(w)}, {"markers", marker_set(w)}, {"blocks", blocks_json}};
    out.table = t.str();
    return out;
  }
  const auto m = make_marked(w, a.marker);
  out.json = to_json(m);
  out.json["xi"] = to_json(xi_at_marker(m));
  if (a.merge_j >= 0) {
    const auto r = marked_merge(m, a.merge_j);
    out.json["merge"] = Json{{"j", a.merge_j}, {"result", to_json(r)}};
    t << "merge " << a.merge_j << ": " << paren(r.omega) << " @" << r.marker << "\n";
  }
  if (a.insert_j >= 0) {
    const auto r = marked_insert(m, a.insert_j);
    out.json["insert"] = Json{{"j", a.insert_j}, {"result", to_json(r)}};
    t << "insert " << a.insert_j << ": " << paren(r.omega) << " @" << r.marker << "\n";
  }
  if (!a.target.empty()) {
    const auto target = comp_arg(a.target);
    const auto all = transport_all(m, target);
    Json per = Json::array();
    for (const auto& alpha : mor_enumerate(w, target)) {
      const int k = transport_along(m, alpha);
      per.push_back(Json{{"map", alpha.map}, {"marker", k}});
      t << "along [";
      for (std::size_t i = 0; i < alpha.map.size(); ++i) t << (i ? "," : "") << alpha.map[i];
      t << "] -> marker " << k << "\n";
    }
    out.json["transport"] = Json{{"target", to_json(target)}, {"markers", all}, {"unique", all.size() == 1}, {"by_morphism", per}};
    t << paren(w) << "@" << a.marker << " -> " << paren(target) << ": "
      << (all.size() == 1 ? "marker " + std::to_string(all.front()) : "ambiguous, " + std::to_string(all.size()) + " markers")
      << "\n";
  }
  if (t.str().empty()) t << paren(w) << "@" << a.marker << "  xi " << paren(xi_at_marker(m)) << "\n";
  out.table = t.str();
  return out;
}

Output cmd_tmodel(const std::string& omega, bool link, bool fibers) {
  const auto w = comp_arg(omega);
  Output out;
  std::ostringstream t;
  if (fibers) {
    Json list = Json::array();
    for (const auto& [label, n] : fiber_report(w)) {
      list.push_back(Json{{"label", to_json(label)}, {"markers", n}});
      t << to_string(label) << "  " << n << "\n";
    }
    out.json = Json{{"base", to_json(w)}, {"fibers", list}};
    out.table = t.str();
    return out;
  }
  if (link) {
    const auto lc = link_complex(w);
    out.json = to_json(lc);
    out.json["base"] = to_json(w);
    t << "link f-vector (dim 0..): " << join(lc.f_vector()) << "\n";
    out.table = t.str();
    out.dot = to_dot(lc, "link");
    return out;
  }
  const auto tc = build_t_model(w);
  out.json = to_json(tc);
  for (const auto& c : tc.cells) t << to_string(c.label) << " @" << c.marker << "  dim " << c.dim << "  stratum " << paren(c.stratum) << "\n";
  t << "f-vector (dim 0..): " << join(tc.f_vector()) << "\n" << tc.covers.size() << " covers\n";
  out.table = t.str();
  out.dot = to_dot(tc.as_cell_complex(), "tmodel");
  return out;
}

// "r:m,r:m" and "re:im:m,..." lists for divisor input.
std::vector<std::vector<Rational>> colon_list(const std::string& text, std::size_t arity) {
  std::vector<std::vector<Rational>> out;
  if (text.empty()) return out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<Rational> parts;
    std::stringstream fields(item);
    std::string f;
    while (std::getline(fields, f, ':')) parts.push_back(parse_rational(f));
    if (parts.size() != arity) throw UsageError("bad divisor entry '" + item + "'");
    out.push_back(std::move(parts));
  }
  return out;
}

int as_multiplicity(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw UsageError("multiplicity must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

struct ClassifyArgs {
  std::string poly;
  std::string real;
  std::string pairs;
  bool negativity = false;
};

Output cmd_classify(const ClassifyArgs& a) {
  RationalPolynomial p;
  if (!a.poly.empty()) {
    p = parse_polynomial(a.poly);
  } else if (!a.real.empty() || !a.pairs.empty()) {
    std::vector<RealRootSpec> real;
    for (const auto& e : colon_list(a.real, 2)) real.push_back({e[0], as_multiplicity(e[1])});
    std::vector<ConjugatePairSpec> pairs;
    for (const auto& e : colon_list(a.pairs, 3)) pairs.push_back({e[0], e[1], as_multiplicity(e[2])});
    p = expand_from_divisor(real, pairs);
  } else {
    throw UsageError("classify needs --poly or --real/--pairs");
  }
  const auto type = classify(p);
  Output out;
  Json roots = Json::array();
  for (const auto& r : real_roots(p)) roots.push_back(to_json(r));
  Json sqf = Json::array();
  for (const auto& f : squarefree_decomposition(p)) sqf.push_back(Json{{"factor", to_json(f.factor)}, {"multiplicity", f.multiplicity}});
  out.json = to_json(p);
  out.json["type"] = to_json(type);
  out.json["roots"] = roots;
  out.json["squarefree"] = sqf;
  std::ostringstream t;
  t << "P = [" << to_string(p) << "]\ntype " << paren(type) << "\n";
  if (a.negativity) {
    Json comps = Json::array();
    for (const auto& c : negativity_components(p)) {
      comps.push_back(to_json(c));
      t << (c.point ? "point " : "interval ") << "roots " << c.first_root << ".." << c.last_root << "  type " << paren(c.type)
        << "  marker " << c.marker_root_index << "\n";
    }
    out.json["negativity"] = comps;
  }
  out.table = t.str();
  return out;
}

Output cmd_family(const std::string& family, const std::string& samples) {
  std::vector<Rational> ts;
  std::stringstream ss(samples);
  std::string item;
  while (std::getline(ss, item, ',')) ts.push_back(parse_rational(item));
  const auto report = classify_family(parse_family(family), ts);
  Output out;
  out.json = to_json(report);
  std::ostringstream t;
  for (std::size_t i = 0; i < ts.size(); ++i) t << "t = " << to_string(ts[i]) << "  " << paren(report.types[i]) << "\n";
  for (const auto& tr : report.transitions) {
    t << paren(tr.from) << " -> " << paren(tr.to) << "  geq " << (tr.geq_ok ? "yes" : "NO") << "  |.|' up "
      << (tr.reduced_norm_ok ? "yes" : "NO") << "\n";
  }
  t << (report.consistent() ? "consistent\n" : "INCONSISTENT\n");
  out.table = t.str();
  out.exit = report.consistent() ? kOk : kVerifyFailed;
  return out;
}

Output cmd_verify(const std::string& suite, const VerifyOptions& opts) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  const auto r = run_suite(suite, opts);
  Output out;
  out.json = to_json(r);
  std::ostringstream t;
  t << r.name << ": " << r.status() << " (" << r.checks << " checks, " << r.failure_count << " failures, " << r.deviation_count
    << " deviations)\n";
  for (const auto& f : r.failures) t << "  FAIL " << f << "\n";
  for (const auto& dv : r.deviations) t << "  DEVIATION " << dv << "\n";
  out.table = t.str();
  out.exit = r.passed() ? kOk : kVerifyFailed;
  return out;
}

int emit(const Output& out, const std::string& format, const std::string& path) {
  std::string text;
  if (format == "json") {
    text = out.json.dump(2) + "\n";
  } else if (format == "table") {
    text = out.table;
  } else {
    if (!out.dot) throw UsageError("this command has no DOT view");
    text = *out.dot;
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
  }
  return out.exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangency patterns, their posets and cell structures"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.fallthrough();

  std::function<Output()> run;

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "List the elements of a poset");
  c_gen->add_option("--poset", gen.poset)->check(CLI::IsMember({"omega", "bullet"}));
  c_gen->add_option("--d", gen.d, "Degree bound for omega");
  c_gen->add_option("--n", gen.n, "Reduced-norm bound for bullet");
  c_gen->add_option("--mode", gen.mode)->check(CLI::IsMember({"exact", "upto"}));
  c_gen->callback([&] { run = [&] { return cmd_gen(gen); }; });

  GenArgs hs;
  auto* c_hasse = app.add_subcommand("hasse", "Cover relations of a poset");
  c_hasse->add_option("--poset", hs.poset)->check(CLI::IsMember({"omega", "bullet"}));
  c_hasse->add_option("--d", hs.d);
  c_hasse->add_option("--n", hs.n);
  c_hasse->add_option("--mode", hs.mode)->check(CLI::IsMember({"exact", "upto"}));
  c_hasse->callback([&] { run = [&] { return cmd_hasse(hs); }; });

  std::string kind = "omega", ca, cb;
  auto* c_order = app.add_subcommand("order", "Decide a >= b");
  c_order->add_option("--kind", kind)->check(CLI::IsMember({"omega", "bullet"}));
  c_order->add_option("a", ca)->required();
  c_order->add_option("b", cb)->required();
  c_order->callback([&] { run = [&] { return cmd_order(kind, ca, cb); }; });

  auto* c_mor = app.add_subcommand("mor", "Enumerate morphisms a -> b");
  c_mor->add_option("--kind", kind)->check(CLI::IsMember({"omega", "bullet"}));
  c_mor->add_option("a", ca)->required();
  c_mor->add_option("b", cb)->required();
  c_mor->callback([&] { run = [&] { return cmd_mor(kind, ca, cb); }; });

  int cells_d = -1;
  std::string ambient = "full";
  auto* c_cells = app.add_subcommand("cells", "Cell counts of the polynomial space");
  c_cells->add_option("--d", cells_d)->required();
  c_cells->add_option("--ambient", ambient)->check(CLI::IsMember({"full", "balanced", "sphere", "balanced_sphere"}));
  c_cells->callback([&] { run = [&] { return cmd_cells(cells_d, ambient); }; });

  std::string omega, tilde;
  int star_d = -1;
  auto* c_star = app.add_subcommand("star", "Normal star of a stratum");
  c_star->add_option("--omega", omega)->required();
  c_star->add_option("--d", star_d)->required();
  c_star->callback([&] { run = [&] { return cmd_star(omega, star_d); }; });

  auto* c_ram = app.add_subcommand("ram", "Ramification number o(omega, omega~)");
  c_ram->add_option("--omega", omega)->required();
  c_ram->add_option("--tilde", tilde)->required();
  c_ram->callback([&] { run = [&] { return cmd_ram(omega, tilde); }; });

  MarkerArgs mk;
  auto* c_markers = app.add_subcommand("markers", "Markers, blocks, marked operations and transport");
  c_markers->add_option("--omega", mk.omega)->required();
  c_markers->add_option("--marker", mk.marker, "1-based marker position");
  c_markers->add_option("--target", mk.target, "Transport the marker down to this composition");
  c_markers->add_option("--merge", mk.merge_j, "Apply the marked merge M_j");
  c_markers->add_option("--insert", mk.insert_j, "Apply the marked insert I_j");
  c_markers->callback([&] { run = [&] { return cmd_markers(mk); }; });

  bool link = false, fibers = false;
  auto* c_tmodel = app.add_subcommand("tmodel", "Local model of the trajectory space");
  c_tmodel->add_option("--omega", omega)->required();
  c_tmodel->add_flag("--link", link, "Emit the link instead of the full model");
  c_tmodel->add_flag("--fibers", fibers, "Emit marker counts per label");
  c_tmodel->callback([&] { run = [&] { return cmd_tmodel(omega, link, fibers); }; });

  ClassifyArgs cl;
  auto* c_classify = app.add_subcommand("classify", "Real-root multiplicity pattern of a polynomial");
  c_classify->add_option("--poly", cl.poly, "Ascending coefficients, e.g. -2,5,-4,1");
  c_classify->add_option("--real", cl.real, "Real roots as root:mult,...");
  c_classify->add_option("--pairs", cl.pairs, "Conjugate pairs as re:im:mult,...");
  c_classify->add_flag("--negativity", cl.negativity, "Also report the components of {P <= 0}");
  c_classify->callback([&] { run = [&] { return cmd_classify(cl); }; });

  std::string family, samples;
  auto* c_family = app.add_subcommand("family", "Classify a one-parameter family at sample values");
  c_family->add_option("--family", family, "u-coefficients separated by ';', each ascending in t")->required();
  c_family->add_option("--samples", samples, "Comma-separated t values, ending at the degenerate one")->required();
  c_family->callback([&] { run = [&] { return cmd_family(family, samples); }; });

  std::string suite;
  VerifyOptions vopts;
  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("--suite", suite)->required();
  c_verify->add_option("--max-d", vopts.max_d);
  c_verify->add_option("--max-n", vopts.max_n);
  c_verify->add_option("--seed", vopts.seed);
  c_verify->callback([&] { run = [&] { return cmd_verify(suite, vopts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return emit(run(), format, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Parse ? kUsage : kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}
