#include "linfmap/problem.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "linfmap/examples.hpp"

namespace linfmap {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path, "missing field '" + key + "'");
  return *it;
}

void expect_object(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::find_if(keys.begin(), keys.end(), [&](const char* a) { return k == a; }) == keys.end())
      throw ParseError(at(path, k), "unknown field");
}

const json& expect_array(const json& j, const std::string& path, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  if (size && j.size() != *size) throw ParseError(path, "expected " + std::to_string(*size) + " entries");
  return j;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "rationals are written as \"p/q\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw ParseError(path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

GradedSpace parse_basis(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<BasisElement> basis;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = at(path, i);
    expect_array(j[i], p, 2);
    BasisElement e{get_string(j[i][0], at(p, 0)), get_int(j[i][1], at(p, 1))};
    if (e.name.empty()) throw ParseError(p, "empty name");
    if (!seen.insert(e.name).second) throw ParseError(p, "duplicate name '" + e.name + "'");
    basis.push_back(std::move(e));
  }
  return GradedSpace(std::move(basis));
}

std::size_t lookup(const GradedSpace& s, const json& j, const std::string& path) {
  const std::string name = get_string(j, path);
  auto i = s.find(name);
  if (!i) throw ParseError(path, "unknown name '" + name + "'");
  return *i;
}

ordered basis_json(const GradedSpace& s) {
  ordered out = ordered::array();
  for (const auto& e : s.basis()) out.push_back(ordered::array({e.name, e.degree}));
  return out;
}

DGCoalgebra parse_coalgebra(const json& j, const std::string& path) {
  expect_object(j, path, {"basis", "unit", "diagonal", "differential"});
  GradedSpace space = parse_basis(field(j, "basis", path), at(path, "basis"));
  const std::string unit = get_string(field(j, "unit", path), at(path, "unit"));
  if (!space.find(unit)) throw ParseError(at(path, "unit"), "unit '" + unit + "' is not a basis element");
  std::vector<Tensor> diagonal(space.size());
  const auto dpath = at(path, "diagonal");
  const json& dj = expect_array(field(j, "diagonal", path), dpath);
  for (std::size_t i = 0; i < dj.size(); ++i) {
    const auto p = at(dpath, i);
    expect_array(dj[i], p, 3);
    const auto c = lookup(space, dj[i][0], at(p, 0));
    expect_array(dj[i][1], at(p, 1), 2);
    const std::vector<std::size_t> factors{lookup(space, dj[i][1][0], at(at(p, 1), 0)),
                                           lookup(space, dj[i][1][1], at(at(p, 1), 1))};
    add_to(diagonal[c], factors, get_rational(dj[i][2], at(p, 2)));
  }
  std::vector<GradedVector> differential(space.size());
  if (j.contains("differential")) {
    const auto ppath = at(path, "differential");
    const json& dd = expect_array(j["differential"], ppath);
    for (std::size_t i = 0; i < dd.size(); ++i) {
      const auto p = at(ppath, i);
      expect_array(dd[i], p, 3);
      differential[lookup(space, dd[i][0], at(p, 0))].add_term(lookup(space, dd[i][1], at(p, 1)),
                                                              get_rational(dd[i][2], at(p, 2)));
    }
  }
  return DGCoalgebra(std::move(space), unit, std::move(diagonal), std::move(differential));
}

ordered coalgebra_json(const DGCoalgebra& c) {
  const auto& s = c.space();
  ordered diag = ordered::array(), diff = ordered::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& [f, k] : c.diagonal(i))
      diag.push_back(ordered::array({s.name(i), ordered::array({s.name(f[0]), s.name(f[1])}), format_rational(k)}));
    for (const auto& [y, k] : c.differential(i).terms())
      diff.push_back(ordered::array({s.name(i), s.name(y), format_rational(k)}));
  }
  ordered out = ordered::object();
  out["basis"] = basis_json(s);
  out["unit"] = s.name(c.unit());
  out["diagonal"] = diag;
  out["differential"] = diff;
  return out;
}

CDGAlgebra parse_cdga(const json& j, const std::string& path) {
  expect_object(j, path, {"basis", "unit", "products", "differential"});
  GradedSpace space = parse_basis(field(j, "basis", path), at(path, "basis"));
  const std::string unit = get_string(field(j, "unit", path), at(path, "unit"));
  if (!space.find(unit)) throw ParseError(at(path, "unit"), "unit '" + unit + "' is not a basis element");
  std::map<std::pair<std::size_t, std::size_t>, GradedVector> products;
  if (j.contains("products")) {
    const auto ppath = at(path, "products");
    const json& pj = expect_array(j["products"], ppath);
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const auto p = at(ppath, i);
      expect_array(pj[i], p, 4);
      const auto a = lookup(space, pj[i][0], at(p, 0)), b = lookup(space, pj[i][1], at(p, 1));
      products[{a, b}].add_term(lookup(space, pj[i][2], at(p, 2)), get_rational(pj[i][3], at(p, 3)));
    }
  }
  std::vector<GradedVector> differential(space.size());
  if (j.contains("differential")) {
    const auto dpath = at(path, "differential");
    const json& dj = expect_array(j["differential"], dpath);
    for (std::size_t i = 0; i < dj.size(); ++i) {
      const auto p = at(dpath, i);
      expect_array(dj[i], p, 3);
      differential[lookup(space, dj[i][0], at(p, 0))].add_term(lookup(space, dj[i][1], at(p, 1)),
                                                              get_rational(dj[i][2], at(p, 2)));
    }
  }
  return CDGAlgebra(std::move(space), unit, std::move(products), std::move(differential));
}

ordered cdga_json(const CDGAlgebra& b) {
  const auto& s = b.space();
  ordered prod = ordered::array(), diff = ordered::array();
  for (const auto& [key, v] : b.products()) {
    if (key.first > key.second) continue;
    for (const auto& [y, k] : v.terms())
      prod.push_back(ordered::array({s.name(key.first), s.name(key.second), s.name(y), format_rational(k)}));
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& [y, k] : b.differential(i).terms())
      diff.push_back(ordered::array({s.name(i), s.name(y), format_rational(k)}));
  ordered out = ordered::object();
  out["basis"] = basis_json(s);
  out["unit"] = s.name(b.unit());
  out["products"] = prod;
  out["differential"] = diff;
  return out;
}

LInfinity parse_target(const json& j, const std::string& path) {
  expect_object(j, path, {"basis", "max_arity", "brackets"});
  GradedSpace space = parse_basis(field(j, "basis", path), at(path, "basis"));
  const int max_arity = get_int(field(j, "max_arity", path), at(path, "max_arity"));
  if (max_arity < 1) throw ParseError(at(path, "max_arity"), "must be at least 1");
  LInfinity L(std::move(space), max_arity);
  if (j.contains("brackets")) {
    const auto bpath = at(path, "brackets");
    const json& bj = expect_array(j["brackets"], bpath);
    for (std::size_t i = 0; i < bj.size(); ++i) {
      const auto p = at(bpath, i);
      expect_array(bj[i], p, 4);
      const int k = get_int(bj[i][0], at(p, 0));
      const json& args = expect_array(bj[i][1], at(p, 1));
      if (k < 1 || std::size_t(k) != args.size()) throw ParseError(at(p, 0), "arity does not match the tuple");
      ArgTuple tuple;
      for (std::size_t a = 0; a < args.size(); ++a) tuple.push_back(lookup(L.space(), args[a], at(at(p, 1), a)));
      const auto value = lookup(L.space(), bj[i][2], at(p, 2));
      try {
        L.add_bracket(tuple, GradedVector::unit(value, get_rational(bj[i][3], at(p, 3))));
      } catch (const AlgebraError& e) {
        throw AlgebraError(p + ": " + e.what());
      }
    }
  }
  return L;
}

ordered target_json(const LInfinity& L) {
  const auto& s = L.space();
  ordered brackets = ordered::array();
  for (int k = 1; k <= L.max_arity(); ++k)
    for (const auto& [args, v] : L.table(k)) {
      ordered names = ordered::array();
      for (auto a : args) names.push_back(s.name(a));
      for (const auto& [y, c] : v.terms()) brackets.push_back(ordered::array({k, names, s.name(y), format_rational(c)}));
    }
  ordered out = ordered::object();
  out["basis"] = basis_json(s);
  out["max_arity"] = L.max_arity();
  out["brackets"] = brackets;
  return out;
}

SullivanCDGA parse_sullivan(const json& j, const std::string& path) {
  expect_object(j, path, {"generators", "differential"});
  GradedSpace gens = parse_basis(field(j, "generators", path), at(path, "generators"));
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, Rational>>> d;
  if (j.contains("differential")) {
    const auto dpath = at(path, "differential");
    const json& dj = expect_array(j["differential"], dpath);
    for (std::size_t i = 0; i < dj.size(); ++i) {
      const auto p = at(dpath, i);
      expect_array(dj[i], p, 3);
      const auto v = lookup(gens, dj[i][0], at(p, 0));
      const json& fj = expect_array(dj[i][1], at(p, 1));
      std::vector<std::string> factors;
      for (std::size_t a = 0; a < fj.size(); ++a) factors.push_back(gens.name(lookup(gens, fj[a], at(at(p, 1), a))));
      d[gens.name(v)].push_back({factors, get_rational(dj[i][2], at(p, 2))});
    }
  }
  return SullivanCDGA::from_names(gens.basis(), d);
}

ordered sullivan_json(const SullivanCDGA& A) {
  const auto& g = A.generators();
  ordered diff = ordered::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& [m, c] : A.differential(i)) {
      ordered names = ordered::array();
      for (auto e : m) names.push_back(g.name(e));
      diff.push_back(ordered::array({g.name(i), names, format_rational(c)}));
    }
  ordered out = ordered::object();
  out["generators"] = basis_json(g);
  out["differential"] = diff;
  return out;
}

// Arrays of scalars stay on one line, as do the entries of arrays of arrays.
void write(std::string& out, const ordered& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ordered(k).dump() + ": ";
      write(out, v, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const ordered& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      if (j[i].is_object())
        write(out, j[i], indent + 2);
      else
        out += j[i].dump();
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "syntax error");
  }
  expect_object(j, "", {"format_version", "coalgebra", "target", "mc", "window", "options", "sullivan"});
  ProblemFile p;
  p.format_version = get_string(field(j, "format_version", ""), "/format_version");
  if (p.format_version != "1") throw ParseError("/format_version", "unsupported version '" + p.format_version + "'");
  if (j.contains("coalgebra")) {
    const json& c = j["coalgebra"];
    if (c.is_object() && c.contains("dual_of")) {
      expect_object(c, "/coalgebra", {"dual_of"});
      p.dual_of = parse_cdga(c["dual_of"], "/coalgebra/dual_of");
      p.coalgebra = dualize_cdga(*p.dual_of);
    } else {
      p.coalgebra = parse_coalgebra(c, "/coalgebra");
    }
  }
  if (j.contains("target")) p.target = parse_target(j["target"], "/target");
  if (j.contains("mc")) {
    const json& mj = expect_array(j["mc"], "/mc");
    for (std::size_t i = 0; i < mj.size(); ++i) {
      const auto path = at("/mc", i);
      expect_array(mj[i], path, 3);
      const auto c = lookup(p.coalgebra.space(), mj[i][0], at(path, 0));
      const auto x = lookup(p.target.space(), mj[i][1], at(path, 1));
      p.mc.emplace_back(p.coalgebra.space().name(c), p.target.space().name(x), get_rational(mj[i][2], at(path, 2)));
    }
  }
  if (j.contains("window")) {
    const json& w = expect_array(j["window"], "/window", 2);
    p.window = DegreeWindow{get_int(w[0], "/window/0"), get_int(w[1], "/window/1")};
    if (p.window->lo > p.window->hi) throw ParseError("/window", "empty window");
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    expect_object(o, "/options", {"max_arity", "j_max", "pointed"});
    if (o.contains("max_arity")) p.options.max_arity = get_int(o["max_arity"], "/options/max_arity");
    if (o.contains("j_max")) p.options.j_max = get_int(o["j_max"], "/options/j_max");
    if (o.contains("pointed")) {
      if (!o["pointed"].is_boolean()) throw ParseError("/options/pointed", "expected a boolean");
      p.options.pointed = o["pointed"].get<bool>();
    }
    if (p.options.max_arity < 1) throw ParseError("/options/max_arity", "must be at least 1");
    if (p.options.j_max < 1) throw ParseError("/options/j_max", "must be at least 1");
  }
  if (j.contains("sullivan")) p.sullivan = parse_sullivan(j["sullivan"], "/sullivan");
  return p;
}

std::string emit_problem(const ProblemFile& p) {
  ordered j = ordered::object();
  j["format_version"] = p.format_version;
  if (p.dual_of)
    j["coalgebra"] = ordered{{"dual_of", cdga_json(*p.dual_of)}};
  else
    j["coalgebra"] = coalgebra_json(p.coalgebra);
  j["target"] = target_json(p.target);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> mc;
  for (const auto& [c, x, k] : p.mc) mc.emplace_back(p.coalgebra.space().index_of(c), p.target.space().index_of(x), k);
  std::sort(mc.begin(), mc.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  ordered mj = ordered::array();
  for (std::size_t i = 0; i < mc.size(); ++i) {
    auto [c, x, k] = mc[i];
    while (i + 1 < mc.size() && std::get<0>(mc[i + 1]) == c && std::get<1>(mc[i + 1]) == x) k += std::get<2>(mc[++i]);
    if (k != 0)
      mj.push_back(ordered::array({p.coalgebra.space().name(c), p.target.space().name(x), format_rational(k)}));
  }
  j["mc"] = mj;
  if (p.window) j["window"] = ordered::array({p.window->lo, p.window->hi});
  j["options"] = ordered{{"max_arity", p.options.max_arity}, {"j_max", p.options.j_max}, {"pointed", p.options.pointed}};
  if (p.sullivan) j["sullivan"] = sullivan_json(*p.sullivan);
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

DegreeWindow parse_window(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') t += ch;
  const auto comma = t.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    DegreeWindow w{std::stoi(t.substr(0, comma), &used), 0};
    if (used != comma) throw std::invalid_argument("trailing text");
    const auto rest = t.substr(comma + 1);
    w.hi = std::stoi(rest, &used);
    if (used != rest.size() || w.lo > w.hi) throw std::invalid_argument("bad bounds");
    return w;
  } catch (const std::exception&) {
    throw ParseError("LINFTY_WINDOW", "expected \"lo,hi\", got '" + text + "'");
  }
}

DegreeWindow effective_window(const ProblemFile& p) {
  if (p.window) return *p.window;
  if (const char* env = std::getenv("LINFTY_WINDOW"); env && *env) return parse_window(env);
  return DegreeWindow{-2, 12};
}

GradedVector mc_vector(const ProblemFile& p, const ConvolutionAlgebra& A) {
  GradedVector phi;
  for (const auto& [c, x, k] : p.mc) {
    const auto ci = A.coalgebra.space().index_of(c), xi = A.target.space().index_of(x);
    auto i = A.index_of(ci, xi);
    if (!i) {
      if (A.reduced && ci == A.coalgebra.unit()) throw AlgebraError("mc: φ(1) must vanish");
      throw AlgebraError("mc: " + c + "->" + x + " lies outside the window");
    }
    phi.add_term(*i, k);
  }
  return phi;
}

std::vector<std::string> builtin_names() { return {"regular-seq-i2", "cp2-connected-sum", "s3y", "free-lie-cpinf"}; }

ProblemFile builtin_problem(const std::string& name) {
  ProblemFile p;
  if (name == "regular-seq-i2") {
    p.coalgebra = projective_coalgebra(1);
    p.target = examples::regular_sequence_target(2);
    p.mc = {{"u1", "z", 1}, {"u1", "y1", 1}};
    p.options.max_arity = 4;
  } else if (name == "cp2-connected-sum" || name == "cp2") {
    p.coalgebra = projective_coalgebra(2);
    p.target = examples::connected_sum_target(2);
    p.mc = {{"u1", "a", 1}};
  } else if (name == "s3y") {
    p.coalgebra = sphere_coalgebra(3);
    p.target = examples::s3y_target();
    p.mc = {{"alpha", "b", 1}};
  } else if (name == "free-lie-cpinf") {
    p.coalgebra = projective_coalgebra(4);
    p.target = examples::free_lie_target();
  } else {
    throw std::out_of_range("unknown example '" + name + "'");
  }
  return p;
}

}  // namespace linfmap
