#include "tangency/io.hpp"

#include <map>
#include <sstream>

#include "tangency/error.hpp"

namespace tangency {

namespace {

std::string kind_name(OrderKind k) { return k == OrderKind::Omega ? "omega" : "bullet"; }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string(what) + ": " + e.what());
  }
}

Json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Shared DOT writer: nodes grouped by grade into rank=same clusters.
std::string write_dot(const std::string& name, const std::vector<std::string>& labels, const std::vector<int>& grades,
                      const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=TB;\n  node [shape=box];\n";
  std::map<int, std::vector<int>> by_grade;
  for (std::size_t i = 0; i < labels.size(); ++i) by_grade[grades[i]].push_back(static_cast<int>(i));
  for (const auto& [g, members] : by_grade) {
    os << "  subgraph \"rank_" << g << "\" {\n    rank=same;\n";
    for (int i : members) os << "    n" << i << " [label=" << quoted(labels[static_cast<std::size_t>(i)]) << "];\n";
    os << "  }\n";
  }
  for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

Json to_json(const Composition& w) { return Json(w.entries()); }

Composition composition_from_json(const Json& j) {
  return guarded("composition", [&] {
    if (!j.is_array()) throw Error(ErrorCode::Parse, "composition must be a JSON array");
    return Composition(j.get<std::vector<int>>());
  });
}

Json to_json(const Morphism& m) {
  return Json{{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"map", m.map}};
}

Json to_json(const FinitePoset& p) {
  Json elems = Json::array();
  for (const auto& w : p.elements) elems.push_back(to_json(w));
  return Json{{"kind", kind_name(p.kind)}, {"elements", elems}, {"covers", pairs_json(p.covers)}};
}

FinitePoset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    FinitePoset p;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "omega") {
      p.kind = OrderKind::Omega;
    } else if (kind == "bullet") {
      p.kind = OrderKind::Bullet;
    } else {
      throw Error(ErrorCode::Parse, "unknown poset kind '" + kind + "'");
    }
    for (const auto& e : j.at("elements")) p.elements.push_back(composition_from_json(e));
    const int n = static_cast<int>(p.elements.size());
    for (const auto& c : j.at("covers")) {
      auto pr = c.get<std::pair<int, int>>();
      if (pr.first < 0 || pr.first >= n || pr.second < 0 || pr.second >= n) {
        throw Error(ErrorCode::Parse, "cover index out of range");
      }
      p.covers.push_back(pr);
    }
    return p;
  });
}

Json to_json(const FVector& f) {
  return Json{{"ambient", std::string(to_string(f.ambient))}, {"d", f.d}, {"counts", f.counts}};
}

Json to_json(const StarComplex& s) {
  Json cells = Json::array();
  for (const auto& c : s.cells) cells.push_back(Json{{"label", to_json(c.label)}, {"dim", c.dim}});
  return Json{{"center", to_json(s.center)}, {"dim", s.ambient_dim}, {"cells", cells}, {"covers", pairs_json(s.covers)}};
}

Json to_json(const MarkedComposition& m) { return Json{{"omega", to_json(m.omega)}, {"marker", m.marker}}; }

MarkedComposition marked_from_json(const Json& j) {
  return guarded("marked composition", [&] {
    return make_marked(composition_from_json(j.at("omega")), j.at("marker").get<int>());
  });
}

Json to_json(const ProductLabel& label) {
  Json out = Json::array();
  for (const auto& c : label.components) out.push_back(to_json(c));
  return out;
}

Json to_json(const TrajectoryComplex& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    cells.push_back(Json{{"label", to_json(c.label)}, {"marker", c.marker}, {"dim", c.dim}, {"stratum", to_json(c.stratum)}});
  }
  return Json{{"base", to_json(t.base)}, {"f_vector", t.f_vector()}, {"cells", cells}, {"covers", pairs_json(t.covers)}};
}

Json to_json(const CellComplex& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells) cells.push_back(Json{{"label", cell.label}, {"dim", cell.dim}});
  return Json{{"f_vector", c.f_vector()}, {"cells", cells}, {"covers", pairs_json(c.covers)}};
}

Json to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coeffs", coeffs}};
}

RationalPolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(c.is_number_integer() ? Rational(std::to_string(c.get<long long>())) : parse_rational(c.get<std::string>()));
    }
    return RationalPolynomial(std::move(coeffs));
  });
}

Json to_json(const IsolatedRoot& r) {
  Json out{{"multiplicity", r.multiplicity}};
  if (r.exact) {
    out["point"] = to_string(r.hi);
  } else {
    out["interval"] = {to_string(r.lo), to_string(r.hi)};
  }
  return out;
}

Json to_json(const NegativityComponent& c) {
  Json out{{"type", to_json(c.type)}, {"marker_root_index", c.marker_root_index}, {"roots", {c.first_root, c.last_root}}};
  out["kind"] = c.point ? "point" : "interval";
  out["bounds"] = {to_string(c.lo), to_string(c.hi)};
  return out;
}

Json to_json(const FamilyReport& r) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    samples.push_back(Json{{"t", to_string(r.samples[i])}, {"type", to_json(r.types[i])}});
  }
  Json transitions = Json::array();
  for (const auto& t : r.transitions) {
    transitions.push_back(Json{{"from", to_json(t.from)},
                               {"to", to_json(t.to)},
                               {"samples", {t.from_index, t.to_index}},
                               {"geq", t.geq_ok},
                               {"reduced_norm_increases", t.reduced_norm_ok}});
  }
  return Json{{"samples", samples}, {"transitions", transitions}, {"consistent", r.consistent()}};
}

std::string to_dot(const FinitePoset& p) {
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const auto& w : p.elements) {
    labels.push_back("(" + (w.empty() ? std::string() : to_string(w)) + ")");
    grades.push_back(w.reduced_norm());
  }
  return write_dot(kind_name(p.kind), labels, grades, p.covers);
}

std::string to_dot(const StarComplex& s) {
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const auto& c : s.cells) {
    labels.push_back("(" + (c.label.empty() ? std::string() : to_string(c.label)) + ") dim " + std::to_string(c.dim));
    grades.push_back(-c.dim);
  }
  return write_dot("star", labels, grades, s.covers);
}

std::string to_dot(const CellComplex& c, const std::string& name) {
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const auto& cell : c.cells) {
    labels.push_back(cell.label + " dim " + std::to_string(cell.dim));
    grades.push_back(-cell.dim);
  }
  return write_dot(name, labels, grades, c.covers);
}

}  // namespace tangency
