#include "weilkit/json_io.hpp"

#include <fstream>
#include <sstream>


namespace weilkit {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // recover line/column from the byte offset
    size_t line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') { ++line; col = 1; }
      else ++col;
    }
    std::ostringstream os;
    os << path << ":" << line << ":" << col << ": malformed JSON: " << e.what();
    throw InputError(os.str());
  }
}

std::string json_type_of(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InputError("missing \"type\" field");
  return j["type"].get<std::string>();
}

namespace {

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(std::string("bad rational: ") + e.what());
    }
  }
  throw InputError("rationals must be integers or \"p/q\" strings");
}

const Json& require_field(const Json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

LieAlgebraData parse_lie_algebra(const Json& j) {
  if (json_type_of(j) != "lie_algebra") throw InputError("expected type \"lie_algebra\"");
  int dim = require_field(j, "dim").get<int>();
  if (dim < 0 || dim > 16) throw InputError("dimension out of supported range");
  std::vector f(static_cast<size_t>(dim),
                std::vector(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim))));
  if (j.contains("brackets"))
    for (const auto& e : j.at("brackets")) {
      int i = require_field(e, "i").get<int>(), jj = require_field(e, "j").get<int>(),
          k = require_field(e, "k").get<int>();
      if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
        throw InputError("bracket index out of range (indices are 1-based)");
      f[static_cast<size_t>(i - 1)][static_cast<size_t>(jj - 1)][static_cast<size_t>(k - 1)] =
          parse_rational(require_field(e, "c"));
    }
  std::string name = j.value("name", std::string{});
  return LieAlgebraData(dim, std::move(f), name);
}

GradedElement parse_element(const Json& j, const TablePtr& table) {
  if (!j.is_array()) throw InputError("elements are arrays of terms");
  GradedElement x(table);
  for (const auto& term : j) {
    Rational c = parse_rational(require_field(term, "c"));
    Monomial m;
    if (term.contains("m"))
      for (const auto& factor : term.at("m")) {
        if (!factor.is_array() || factor.size() != 2)
          throw InputError("monomial factors are [generator, exponent] pairs");
        const std::string name = factor[0].get<std::string>();
        int idx = table->index_of(name);
        if (idx < 0) throw InputError("unknown generator '" + name + "'");
        int e = factor[1].get<int>();
        if (e < 1) throw InputError("exponents must be positive");
        m.factors.emplace_back(idx, e);
      }
    std::sort(m.factors.begin(), m.factors.end());
    for (size_t i = 0; i + 1 < m.factors.size(); ++i)
      if (m.factors[i].first == m.factors[i + 1].first)
        throw InputError("repeated generator in one monomial");
    try {
      x += GradedElement::monomial(table, std::move(m), c);
    } catch (const PresentationError& e) {
      throw InputError(e.what());
    }
  }
  return x;
}

Json element_to_json(const GradedElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json term;
    term["c"] = c.str();
    Json mono = Json::array();
    for (auto [g, e] : m.factors) mono.push_back({x.table()->gen(g).name, e});
    term["m"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  return terms;
}

GVector parse_gvector(const Json& j, const TablePtr& table) {
  if (!j.is_array()) throw InputError("connections are arrays of components");
  GVector v;
  for (const auto& comp : j) v.comps.push_back(parse_element(comp, table));
  return v;
}

GDAlgebra parse_gd_algebra(const Json& j) {
  if (json_type_of(j) != "gd_algebra") throw InputError("expected type \"gd_algebra\"");
  std::vector<Generator> gens;
  for (const auto& g : require_field(j, "generators")) {
    Generator gen;
    gen.name = require_field(g, "name").get<std::string>();
    gen.degree = require_field(g, "degree").get<int>();
    gen.tag = g.value("tag", gen.name);
    if (gen.degree < 0) throw InputError("generator degrees must be non-negative");
    gens.push_back(std::move(gen));
  }
  TablePtr table;
  try {
    table = make_table(std::move(gens));
  } catch (const PresentationError& e) {
    throw InputError(e.what());
  }
  auto parse_images = [&](const Json& map) {
    std::vector<GradedElement> images(static_cast<size_t>(table->size()),
                                      GradedElement::zero(table));
    for (auto it = map.begin(); it != map.end(); ++it) {
      int idx = table->index_of(it.key());
      if (idx < 0) throw InputError("image for unknown generator '" + it.key() + "'");
      images[static_cast<size_t>(idx)] = parse_element(it.value(), table);
    }
    return images;
  };
  std::vector<GradedElement> d_images = parse_images(require_field(j, "d"));
  std::vector<LieAction> actions;
  for (const auto& act : require_field(j, "actions")) {
    LieAction action{parse_lie_algebra(require_field(act, "lie")), {}};
    const Json& rows = require_field(act, "contraction");
    if (static_cast<int>(rows.size()) != action.lie.dim())
      throw InputError("contraction rows must match the Lie algebra dimension");
    for (const auto& row : rows) action.contraction.push_back(parse_images(row));
    actions.push_back(std::move(action));
  }
  return GDAlgebra(table, std::move(d_images), std::move(actions));
}

InvariantPolynomial parse_invariant_polynomial(const Json& j, const LieAlgebraData& lie) {
  if (json_type_of(j) != "invariant_polynomial")
    throw InputError("expected type \"invariant_polynomial\"");
  if (require_field(j, "dim").get<int>() != lie.dim())
    throw InputError("polynomial dimension does not match the Lie algebra");
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& t : require_field(j, "terms")) {
    std::vector<int> exps = require_field(t, "e").get<std::vector<int>>();
    terms.emplace_back(std::move(exps), parse_rational(require_field(t, "c")));
  }
  return InvariantPolynomial::from_exponents(lie, terms);
}

FiniteGroup parse_group(const Json& j) {
  if (json_type_of(j) != "group") throw InputError("expected type \"group\"");
  std::vector<std::string> elements =
      require_field(j, "elements").get<std::vector<std::string>>();
  auto index_of = [&](const std::string& n) {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == n) return static_cast<int>(i);
    throw InputError("unknown group element '" + n + "'");
  };
  std::vector<std::vector<int>> table;
  for (const auto& row : require_field(j, "table")) {
    std::vector<int> r;
    for (const auto& cell : row) r.push_back(index_of(cell.get<std::string>()));
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(elements), std::move(table));
}

FiniteGroupoid parse_groupoid(const Json& j) {
  if (json_type_of(j) != "groupoid") throw InputError("expected type \"groupoid\"");
  std::vector<std::string> objects = require_field(j, "objects").get<std::vector<std::string>>();
  auto obj_index = [&](const std::string& n) {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == n) return static_cast<int>(i);
    throw InputError("unknown object '" + n + "'");
  };
  std::vector<FiniteGroupoid::Arrow> arrows;
  std::vector<std::string> arrow_names;
  for (const auto& a : require_field(j, "arrows")) {
    FiniteGroupoid::Arrow ar;
    ar.name = require_field(a, "id").get<std::string>();
    ar.src = obj_index(require_field(a, "src").get<std::string>());
    ar.tgt = obj_index(require_field(a, "tgt").get<std::string>());
    arrow_names.push_back(ar.name);
    arrows.push_back(std::move(ar));
  }
  auto arrow_index = [&](const std::string& n) {
    for (size_t i = 0; i < arrow_names.size(); ++i)
      if (arrow_names[i] == n) return static_cast<int>(i);
    throw InputError("unknown arrow '" + n + "'");
  };
  std::map<std::pair<int, int>, int> compose;
  for (const auto& c : require_field(j, "compose")) {
    if (!c.is_array() || c.size() != 3)
      throw InputError("compose entries are [first, second, result] triples");
    compose[{arrow_index(c[0].get<std::string>()), arrow_index(c[1].get<std::string>())}] =
        arrow_index(c[2].get<std::string>());
  }
  std::vector<int> identity(objects.size(), -1);
  for (auto it = require_field(j, "identity").begin(); it != require_field(j, "identity").end(); ++it)
    identity[static_cast<size_t>(obj_index(it.key()))] = arrow_index(it.value().get<std::string>());
  for (int v : identity)
    if (v < 0) throw InputError("identity table does not cover every object");
  std::vector<int> inverse(arrows.size(), -1);
  for (auto it = require_field(j, "inverse").begin(); it != require_field(j, "inverse").end(); ++it)
    inverse[static_cast<size_t>(arrow_index(it.key()))] = arrow_index(it.value().get<std::string>());
  for (int v : inverse)
    if (v < 0) throw InputError("inverse table does not cover every arrow");
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                        std::move(identity), std::move(inverse));
}

BundleCocycle parse_bundle(const Json& j, const FiniteGroupoid& base, const FiniteGroup& group) {
  if (json_type_of(j) != "bundle") throw InputError("expected type \"bundle\"");
  std::vector<int> psi(static_cast<size_t>(base.num_arrows()), -1);
  for (auto it = require_field(j, "psi").begin(); it != require_field(j, "psi").end(); ++it) {
    int a = base.arrow_index(it.key());
    if (a < 0) throw InputError("psi refers to unknown arrow '" + it.key() + "'");
    psi[static_cast<size_t>(a)] = group.index_of(it.value().get<std::string>());
  }
  for (int v : psi)
    if (v < 0) throw InputError("psi does not cover every arrow");
  BundleCocycle b{&base, &group, std::move(psi)};
  auto rep = b.validate();
  if (!rep.ok) throw PresentationError("bundle cocycle invalid: " + rep.detail);
  return b;
}

LoadedBundle parse_bundle_file(const Json& j, const FiniteGroupoid& base) {
  LoadedBundle lb;
  lb.group = std::make_unique<FiniteGroup>(parse_group(require_field(j, "group")));
  BundleCocycle b = parse_bundle(j, base, *lb.group);
  lb.psi = b.psi;
  return lb;
}

BundleCocycle LoadedBundle::bind(const FiniteGroupoid& base) const {
  return BundleCocycle{&base, group.get(), psi};
}

Json cocycle_to_json(const BigradedElement& x) {
  Json out;
  out["type"] = "cocycle";
  Json levels = Json::object();
  for (const auto& [n, e] : x.levels()) levels[std::to_string(n)] = element_to_json(e);
  out["levels"] = std::move(levels);
  return out;
}

BigradedElement parse_cocycle(const Json& j, const SimplicialGDA& host) {
  if (json_type_of(j) != "cocycle") throw InputError("expected type \"cocycle\"");
  BigradedElement out(&host);
  const Json& levels = require_field(j, "levels");
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    int n = std::stoi(it.key());
    out.add(n, parse_element(it.value(), host.level(n).table()));
  }
  return out;
}

namespace {

std::string latex_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '@') continue;
    out += c;
  }
  return "\\mathrm{" + out + "}";
}

}  // namespace

std::string element_to_latex(const GradedElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mag != "1" || m.is_unit()) {
      auto slash = mag.find('/');
      if (slash == std::string::npos) os << mag;
      else os << "\\tfrac{" << mag.substr(0, slash) << "}{" << mag.substr(slash + 1) << "}";
    }
    for (auto [g, e] : m.factors) {
      os << latex_name(x.table()->gen(g).name);
      if (e > 1) os << "^{" << e << "}";
      os << " ";
    }
    first = false;
  }
  return os.str();
}

std::string cocycle_to_latex(const BigradedElement& x) {
  std::ostringstream os;
  os << "\\begin{aligned}\n";
  for (const auto& [n, e] : x.levels())
    os << "  \\text{level } " << n << ": &\\quad " << element_to_latex(e) << " \\\\\n";
  os << "\\end{aligned}\n";
  return os.str();
}

Json lie_to_json(const LieAlgebraData& lie) {
  Json out;
  out["type"] = "lie_algebra";
  out["name"] = lie.name();
  out["dim"] = lie.dim();
  Json brackets = Json::array();
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = 0; j < lie.dim(); ++j)
      for (int k = 0; k < lie.dim(); ++k)
        if (!lie.f(i, j, k).is_zero()) {
          Json b;
          b["i"] = i + 1;
          b["j"] = j + 1;
          b["k"] = k + 1;
          b["c"] = lie.f(i, j, k).str();
          brackets.push_back(std::move(b));
        }
  out["brackets"] = std::move(brackets);
  return out;
}

Json gd_algebra_to_json(const GDAlgebra& a) {
  Json out;
  out["type"] = "gd_algebra";
  Json gens = Json::array();
  for (int g = 0; g < a.tbl().size(); ++g) {
    Json gen;
    gen["name"] = a.tbl().gen(g).name;
    gen["degree"] = a.tbl().gen(g).degree;
    gen["tag"] = a.tbl().gen(g).tag;
    gens.push_back(std::move(gen));
  }
  out["generators"] = std::move(gens);
  Json d = Json::object();
  for (int g = 0; g < a.tbl().size(); ++g)
    if (!a.d_images()[static_cast<size_t>(g)].is_zero())
      d[a.tbl().gen(g).name] = element_to_json(a.d_images()[static_cast<size_t>(g)]);
  out["d"] = std::move(d);
  Json actions = Json::array();
  for (int act = 0; act < a.num_actions(); ++act) {
    Json entry;
    entry["lie"] = lie_to_json(a.lie(act));
    Json rows = Json::array();
    for (int j = 0; j < a.lie(act).dim(); ++j) {
      Json row = Json::object();
      for (int g = 0; g < a.tbl().size(); ++g) {
        const GradedElement& im =
            a.action(act).contraction[static_cast<size_t>(j)][static_cast<size_t>(g)];
        if (!im.is_zero()) row[a.tbl().gen(g).name] = element_to_json(im);
      }
      rows.push_back(std::move(row));
    }
    entry["contraction"] = std::move(rows);
    actions.push_back(std::move(entry));
  }
  out["actions"] = std::move(actions);
  return out;
}

}  // namespace weilkit
