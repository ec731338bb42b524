#include "filiform/json_io.hpp"

#include <fstream>
#include <sstream>

namespace filiform::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string child(const std::string& where, const char* key) { return where + "." + key; }
std::string child(const std::string& where, std::size_t index) { return where + "[" + std::to_string(index) + "]"; }

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const auto& a = field(j, key, where);
  if (!a.is_array()) fail(child(where, key), "expected an array");
  return a;
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

// 1-based index in 1..n, returned 0-based.
std::size_t index(const Json& j, std::size_t n, const std::string& where) {
  long v = integer(j, where);
  if (v < 1 || static_cast<std::size_t>(v) > n) fail(where, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

std::size_t dimension(const Json& j, const char* key, const std::string& where) {
  long n = integer(field(j, key, where), child(where, key));
  if (n < 1 || static_cast<std::size_t>(n) > kMaxCochainDim)
    fail(child(where, key), "dimension must lie in 1.." + std::to_string(kMaxCochainDim));
  return static_cast<std::size_t>(n);
}

Json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Messages read "[json.exception.parse_error.101] parse error at line L, column C: ...".
    std::string message = e.what();
    auto at = message.find("parse error");
    throw InputError(source + ": " + (at == std::string::npos ? message : message.substr(at)));
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

Kind kind_of(const Json& j) {
  if (!j.is_object()) return Kind::unknown;
  if (j.contains("brackets")) return Kind::algebra;
  if (j.contains("components")) return Kind::deformation;
  if (j.contains("x")) return Kind::point;
  if (j.contains("degree")) return Kind::cochain;
  if (j.contains("terms") && j["terms"].is_array()) {
    for (const auto& t : j["terms"])
      if (t.is_object()) return t.contains("j") ? Kind::two_form : Kind::one_form;
    return Kind::two_form;
  }
  return Kind::unknown;
}

Json to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& [ij, v] : g.brackets()) {
    if (v.empty()) continue;
    Json terms = Json::array();
    for (const auto& [k, c] : v.entries()) terms.push_back({{"k", k + 1}, {"c", rational_json(c)}});
    brackets.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"terms", terms}});
  }
  return {{"name", g.name()},
          {"dim", g.dim()},
          {"weights", g.weights()},
          {"flavor", to_string(g.flavor())},
          {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::string where = "algebra";
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  std::size_t n = dimension(j, "dim", where);
  std::vector<int> weights;
  if (j.contains("weights")) {
    const auto& w = array_field(j, "weights", where);
    if (w.size() != n) fail(child(where, "weights"), "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < w.size(); ++i)
      weights.push_back(static_cast<int>(integer(w[i], child(child(where, "weights"), i))));
  } else {
    for (std::size_t i = 1; i <= n; ++i) weights.push_back(static_cast<int>(i));
  }
  Flavor flavor = Flavor::plain;
  if (j.contains("flavor")) {
    if (!j["flavor"].is_string()) fail(child(where, "flavor"), "expected a string");
    try {
      flavor = parse_flavor(j["flavor"].get<std::string>());
    } catch (const Error& e) {
      fail(child(where, "flavor"), e.what());
    }
  }
  LieAlgebra::Brackets brackets;
  const auto& rows = array_field(j, "brackets", where);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto at = child(child(where, "brackets"), r);
    std::size_t i = index(field(rows[r], "i", at), n, child(at, "i"));
    std::size_t jj = index(field(rows[r], "j", at), n, child(at, "j"));
    if (i == jj) fail(at, "bracket of a vector with itself");
    const auto& terms = array_field(rows[r], "terms", at);
    SparseVector v;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      auto tat = child(child(at, "terms"), t);
      std::size_t k = index(field(terms[t], "k", tat), n, child(tat, "k"));
      v.add_scaled(SparseVector::unit(k), rational(field(terms[t], "c", tat), child(tat, "c")));
    }
    auto key = i < jj ? std::pair{i, jj} : std::pair{jj, i};
    if (i > jj) v.scale(Rational(-1));
    if (brackets.contains(key)) fail(at, "pair listed twice");
    brackets.emplace(key, std::move(v));
  }
  try {
    return LieAlgebra(name, std::move(weights), flavor, std::move(brackets));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json to_json(const Cochain& c) {
  Json terms = Json::array();
  for (const auto& [m, v] : c.terms()) {
    Json args = Json::array();
    for (auto i : m.indices()) args.push_back(i + 1);
    Json t = {{"args", args}};
    if (c.is_adjoint()) t["k"] = m.target + 1;
    t["c"] = rational_json(v);
    terms.push_back(t);
  }
  return {{"n", c.dim()}, {"degree", c.degree()}, {"coefficients", to_string(c.coefficients())}, {"terms", terms}};
}

Cochain cochain_from_json(const Json& j) {
  const std::string where = "cochain";
  std::size_t n = dimension(j, "n", where);
  long q = integer(field(j, "degree", where), child(where, "degree"));
  if (q < 0 || static_cast<std::size_t>(q) > n) fail(child(where, "degree"), "degree outside 0..n");
  Coefficients co = Coefficients::trivial;
  if (j.contains("coefficients")) {
    if (!j["coefficients"].is_string()) fail(child(where, "coefficients"), "expected a string");
    try {
      co = parse_coefficients(j["coefficients"].get<std::string>());
    } catch (const Error& e) {
      fail(child(where, "coefficients"), e.what());
    }
  }
  Cochain c(n, static_cast<int>(q), co);
  const auto& terms = array_field(j, "terms", where);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto at = child(child(where, "terms"), t);
    const auto& args = array_field(terms[t], "args", at);
    if (args.size() != static_cast<std::size_t>(q)) fail(child(at, "args"), "expected " + std::to_string(q) + " indices");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < args.size(); ++a) idx.push_back(index(args[a], n, child(child(at, "args"), a)));
    int target = -1;
    if (co == Coefficients::adjoint) target = static_cast<int>(index(field(terms[t], "k", at), n, child(at, "k")));
    // Sort with the sign of the permutation; repeated indices are an error.
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) fail(child(at, "args"), "repeated index");
        if (idx[a] > idx[b]) sign = -sign;
      }
    std::sort(idx.begin(), idx.end());
    c.add(Monomial::of(idx, target), sign * rational(field(terms[t], "c", at), child(at, "c")));
  }
  return c;
}

Json to_json(const Deformation& d) {
  Json components = Json::array();
  for (const auto& [w, c] : d.components) {
    Json terms = Json::array();
    for (const auto& [m, v] : c.terms()) {
      auto idx = m.indices();
      terms.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"k", m.target + 1}, {"c", rational_json(v)}});
    }
    components.push_back({{"weight", w}, {"terms", terms}});
  }
  return {{"n", d.n}, {"components", components}};
}

Deformation deformation_from_json(const Json& j) {
  const std::string where = "deformation";
  std::size_t n = dimension(j, "n", where);
  std::vector<int> weights;
  for (std::size_t i = 1; i <= n; ++i) weights.push_back(static_cast<int>(i));
  Deformation d;
  d.n = n;
  const auto& components = array_field(j, "components", where);
  for (std::size_t r = 0; r < components.size(); ++r) {
    auto at = child(child(where, "components"), r);
    long w = integer(field(components[r], "weight", at), child(at, "weight"));
    if (w <= 0) fail(child(at, "weight"), "weights must be positive");
    Cochain c(n, 2, Coefficients::adjoint);
    const auto& terms = array_field(components[r], "terms", at);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      auto tat = child(child(at, "terms"), t);
      std::size_t i = index(field(terms[t], "i", tat), n, child(tat, "i"));
      std::size_t jj = index(field(terms[t], "j", tat), n, child(tat, "j"));
      std::size_t k = index(field(terms[t], "k", tat), n, child(tat, "k"));
      if (i == jj) fail(tat, "i and j coincide");
      Monomial m = Monomial::of({std::min(i, jj), std::max(i, jj)}, static_cast<int>(k));
      if (monomial_weight(m, weights) != w)
        fail(tat, "term has weight " + std::to_string(monomial_weight(m, weights)) + ", component says " + std::to_string(w));
      Rational v = rational(field(terms[t], "c", tat), child(tat, "c"));
      c.add(m, i < jj ? v : Rational(-v));
    }
    if (d.components.contains(static_cast<int>(w))) fail(at, "weight listed twice");
    if (!c.empty()) d.components.emplace(static_cast<int>(w), std::move(c));
  }
  return d;
}

Json to_json(const ModuliPoint& p) {
  Json x = Json::array();
  for (const auto& v : p.x) x.push_back(rational_json(v));
  return {{"n", p.n}, {"x", x}};
}

ModuliPoint point_from_json(const Json& j) {
  const std::string where = "point";
  ModuliPoint p;
  p.n = dimension(j, "n", where);
  const auto& x = array_field(j, "x", where);
  if (x.size() != 5) fail(child(where, "x"), "expected 5 coordinates");
  for (std::size_t i = 0; i < 5; ++i) p.x[i] = rational(x[i], child(child(where, "x"), i));
  return p;
}

Json two_form_json(const TwoForm& omega) {
  Json terms = Json::array();
  for (const auto& [m, v] : omega.terms()) {
    auto idx = m.indices();
    terms.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"c", rational_json(v)}});
  }
  return {{"n", omega.dim()}, {"terms", terms}};
}

TwoForm two_form_from_json(const Json& j) {
  const std::string where = "two-form";
  std::size_t n = dimension(j, "n", where);
  TwoForm omega(n, 2, Coefficients::trivial);
  const auto& terms = array_field(j, "terms", where);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto at = child(child(where, "terms"), t);
    std::size_t i = index(field(terms[t], "i", at), n, child(at, "i"));
    std::size_t jj = index(field(terms[t], "j", at), n, child(at, "j"));
    if (i == jj) fail(at, "i and j coincide");
    Rational v = rational(field(terms[t], "c", at), child(at, "c"));
    omega.add(Monomial::of({std::min(i, jj), std::max(i, jj)}), i < jj ? v : Rational(-v));
  }
  return omega;
}

Json one_form_json(const Cochain& theta) {
  Json terms = Json::array();
  for (const auto& [m, v] : theta.terms()) terms.push_back({{"i", m.indices()[0] + 1}, {"c", rational_json(v)}});
  return {{"n", theta.dim()}, {"terms", terms}};
}

Cochain one_form_from_json(const Json& j) {
  const std::string where = "one-form";
  std::size_t n = dimension(j, "n", where);
  Cochain theta(n, 1, Coefficients::trivial);
  const auto& terms = array_field(j, "terms", where);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto at = child(child(where, "terms"), t);
    std::size_t i = index(field(terms[t], "i", at), n, child(at, "i"));
    theta.add(Monomial::of({i}), rational(field(terms[t], "c", at), child(at, "c")));
  }
  return theta;
}

Json to_json(const CohomologyReport& r) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json block;
    block["weight"] = b.weight ? Json(*b.weight) : Json(nullptr);
    block["cochains"] = b.cochains;
    block["cocycles"] = b.cocycles;
    block["coboundaries"] = b.coboundaries;
    block["dim"] = b.dim();
    if (!b.representatives.empty()) {
      Json reps = Json::array();
      for (const auto& c : b.representatives) reps.push_back(to_json(c));
      block["representatives"] = reps;
    }
    blocks.push_back(block);
  }
  return {{"degree", r.degree},
          {"coefficients", to_string(r.coefficients)},
          {"total", r.total()},
          {"weights", r.weight_multiset()},
          {"blocks", blocks}};
}

Json to_json(const BasisChange& phi) {
  // Column a lists the nonzero entries of phi(e_a).
  Json columns = Json::array();
  for (std::size_t a = 0; a < phi.dim(); ++a) {
    Json col = Json::array();
    for (std::size_t r = 0; r < phi.dim(); ++r)
      if (phi.entry(r, a) != 0) col.push_back({{"k", r + 1}, {"c", rational_json(phi.entry(r, a))}});
    columns.push_back(col);
  }
  return {{"n", phi.dim()}, {"columns", columns}};
}

}  // namespace filiform::io
