#include "filiform/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "filiform/catalog.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/deformation.hpp"
#include "filiform/json_io.hpp"
#include "filiform/symplectic.hpp"

#ifndef FILIFORM_GOLDEN_DIR
#define FILIFORM_GOLDEN_DIR "golden"
#endif

namespace filiform::cli {

namespace {

using io::Json;

std::string sha256(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t max_dimension() {
  const char* env = std::getenv("FILIFORM_MAX_N");
  if (!env || !*env) return 24;
  try {
    std::size_t pos = 0;
    long v = std::stol(env, &pos);
    if (pos != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return std::min<std::size_t>(static_cast<std::size_t>(v), kMaxCochainDim);
  } catch (const std::exception&) {
    throw InputError(std::string("FILIFORM_MAX_N: not a positive integer: '") + env + "'");
  }
}

void check_dimension(std::size_t n) {
  auto cap = max_dimension();
  if (n > cap) throw InputError("dimension " + std::to_string(n) + " exceeds FILIFORM_MAX_N = " + std::to_string(cap));
}

struct Session {
  std::ostream& out;
  std::ostream& err;
  Json inputs = Json::array();
  bool json = false;

  Json load(const std::string& path) {
    auto bytes = slurp(path);
    auto j = io::parse(bytes, path);
    inputs.push_back({{"path", path}, {"sha256", sha256(bytes)}});
    if (j.is_object())
      for (const char* key : {"dim", "n"})
        if (j.contains(key) && j[key].is_number_unsigned()) check_dimension(j[key].get<std::size_t>());
    return j;
  }

  LieAlgebra algebra(const std::string& path) {
    auto j = load(path);
    if (io::kind_of(j) != io::Kind::algebra) throw InputError(path + ": expected an algebra");
    return io::algebra_from_json(j);
  }

  // Deformations of V(n) may be given directly or as an algebra to compare with V(n).
  Deformation deformation(const std::string& path) {
    auto j = load(path);
    switch (io::kind_of(j)) {
      case io::Kind::deformation:
        return io::deformation_from_json(j);
      case io::Kind::point:
        return moduli_deformation(io::point_from_json(j));
      case io::Kind::algebra: {
        auto g = io::algebra_from_json(j);
        return extract_deformation(g, catalog::V(g.dim()));
      }
      default:
        throw InputError(path + ": expected a deformation, moduli point or algebra");
    }
  }

  ModuliPoint point(const std::string& path) {
    auto j = load(path);
    if (io::kind_of(j) != io::Kind::point) throw InputError(path + ": expected a moduli point");
    return io::point_from_json(j);
  }

  // Prints the bundle with --json, otherwise the text rendering of the same result.
  void emit(const std::string& command, const Json& result, const std::string& text) {
    if (json) {
      Json bundle = {{"tool", std::string("filiform ") + kVersion},
                     {"command", command},
                     {"inputs", inputs},
                     {"result", result}};
      out << bundle.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError(path + ": cannot write");
  file << j.dump(2) << "\n";
}

std::string term_text(const Monomial& m) {
  std::string s;
  if (m.target >= 0) s = "e_" + std::to_string(m.target + 1) + " (x) ";
  bool first = true;
  for (auto i : m.indices()) {
    s += (first ? "e^" : "^e^") + std::to_string(i + 1);
    first = false;
  }
  if (first) s += "1";
  return s;
}

std::string cochain_text(const Cochain& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [m, v] : c.terms()) {
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    Rational a = abs(v);
    if (a != 1) s += to_string(a) + " ";
    s += term_text(m);
  }
  return s;
}

std::string rationals_text(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get<std::string>();
  return s + ")";
}

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& option) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected)
    throw InputError(option + ": expected " + std::to_string(expected) + " comma-separated rationals");
  return out;
}

// ---- algebra verify ----------------------------------------------------------

int algebra_verify(Session& s, const std::string& path) {
  auto g = s.algebra(path);
  auto failures = jacobi_residual(g);
  Json list = Json::array();
  std::ostringstream text;
  text << g.name() << ": dim " << g.dim() << ", " << to_string(g.flavor()) << "\n";
  for (const auto& f : failures) {
    Json terms = Json::array();
    std::string r;
    for (const auto& [k, c] : f.residual.entries()) {
      terms.push_back({{"k", k + 1}, {"c", to_string(c)}});
      r += (r.empty() ? "" : " + ") + to_string(c) + " e_" + std::to_string(k + 1);
    }
    list.push_back({{"i", f.i + 1}, {"j", f.j + 1}, {"k", f.k + 1}, {"residual", terms}});
    text << "jacobi (" << f.i + 1 << ", " << f.j + 1 << ", " << f.k + 1 << "): " << r << "\n";
  }
  Json result = {{"name", g.name()}, {"dim", g.dim()}, {"flavor", to_string(g.flavor())}, {"jacobi", list},
                 {"lie", failures.empty()}};
  if (failures.empty()) {
    auto s_index = nil_index(g);
    result["nil_index"] = s_index ? Json(*s_index) : Json(nullptr);
    result["filiform"] = is_filiform(g);
    text << "jacobi: ok\n";
    text << "nil-index: " << (s_index ? std::to_string(*s_index) : "none") << (is_filiform(g) ? " (filiform)" : "")
         << "\n";
  } else {
    text << failures.size() << " failing triple(s)\n";
  }
  s.emit("algebra verify", result, text.str());
  return failures.empty() ? ok : negative;
}

// ---- catalog -----------------------------------------------------------------

struct CatalogArgs {
  std::string name;
  std::string param;
  std::size_t dim = 0;
  std::string x;
  std::string x5;
  std::string of;
  int l = 0;
  std::string out;
};

Rational required_param(const CatalogArgs& a) {
  if (a.param.empty()) throw InputError(a.name + " needs --param");
  return parse_rational(a.param);
}

std::size_t required_dim(const CatalogArgs& a) {
  if (a.dim == 0) throw InputError(a.name + " needs --dim");
  check_dimension(a.dim);
  return a.dim;
}

ModuliPoint point_arg(const CatalogArgs& a) {
  ModuliPoint p;
  p.n = required_dim(a);
  if (a.x.empty()) throw InputError(a.name + " needs --x x1,x2,x3,x4,x5");
  auto xs = parse_list(a.x, 5, "--x");
  std::copy(xs.begin(), xs.end(), p.x.begin());
  return p;
}

int catalog_command(Session& s, CatalogArgs a) {
  std::string name = a.name;
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  Json j;
  if (name == "m0") {
    j = io::to_json(catalog::m0(required_dim(a)));
  } else if (name == "m1") {
    j = io::to_json(catalog::m1(required_dim(a)));
  } else if (name == "m2") {
    j = io::to_json(catalog::m2(required_dim(a)));
  } else if (name == "v") {
    j = io::to_json(catalog::V(required_dim(a)));
  } else if (name == "g8") {
    j = io::to_json(catalog::g8(required_param(a)));
  } else if (name == "g10") {
    j = io::to_json(catalog::g10(required_param(a)));
  } else if (name == "gx") {
    auto xs = parse_list(a.x, 4, "--x");
    j = io::to_json(catalog::gX(required_dim(a), {xs[0], xs[1], xs[2], xs[3]}));
  } else if (name == "psi") {
    j = io::to_json(catalog::psi(required_dim(a), a.l));
  } else if (name == "omega") {
    std::size_t n = required_dim(a);
    if (!a.x.empty()) {
      auto xs = parse_list(a.x, 4, "--x");
      Rational x5 = a.x5.empty() ? Rational(0) : parse_rational(a.x5);
      j = io::two_form_json(catalog::omega_X(n, {xs[0], xs[1], xs[2], xs[3]}, x5));
    } else {
      if (a.of.empty()) throw InputError("omega needs --of <algebra> or --x");
      std::optional<Rational> alpha;
      if (!a.param.empty()) alpha = parse_rational(a.param);
      j = io::two_form_json(catalog::omega_catalog(a.of, n, alpha));
    }
  } else if (name == "theta") {
    std::size_t n = required_dim(a);
    Cochain theta(n, 1, Coefficients::trivial);
    theta.add(Monomial::of({n - 1}), Rational(1));
    j = io::one_form_json(theta);
  } else if (name == "deformation") {
    j = io::to_json(moduli_deformation(point_arg(a)));
  } else if (name == "point") {
    j = io::to_json(point_arg(a));
  } else {
    throw InputError("unknown catalog entry '" + a.name + "'");
  }
  write_json(j, a.out, s.out);
  return ok;
}

// ---- cohomology --------------------------------------------------------------

int cohomology_command(Session& s, const std::string& path, int q, const std::string& coeff, std::optional<int> weight,
                       bool reps) {
  auto g = s.algebra(path);
  auto co = parse_coefficients(coeff);
  CohomologyOptions options;
  options.representatives = reps;
  options.weight = weight;
  auto report = cohomology(g, q, co, options);
  Json result = io::to_json(report);
  result["algebra"] = g.name();
  std::ostringstream text;
  text << "H^" << q << "(" << (g.name().empty() ? "g" : g.name()) << ", " << coeff << ")\n";
  text << std::setw(8) << "weight" << std::setw(10) << "cochains" << std::setw(10) << "cocycles" << std::setw(14)
       << "coboundaries" << std::setw(6) << "dim" << "\n";
  for (const auto& b : report.blocks) {
    text << std::setw(8) << (b.weight ? std::to_string(*b.weight) : "all") << std::setw(10) << b.cochains
         << std::setw(10) << b.cocycles << std::setw(14) << b.coboundaries << std::setw(6) << b.dim() << "\n";
    for (const auto& r : b.representatives) text << "    " << cochain_text(r) << "\n";
  }
  text << "total " << report.total() << "\n";
  s.emit("cohomology", result, text.str());
  return ok;
}

// ---- deform ------------------------------------------------------------------

int deform_residual(Session& s, const std::string& path) {
  auto psi = s.deformation(path);
  auto residual = deformation_residual(catalog::V(psi.n), psi);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& [w, c] : residual) {
    list.push_back({{"weight", w}, {"terms", c.size()}, {"cochain", io::to_json(c)}});
    text << "weight " << w << ": " << c.size() << " term(s)\n";
  }
  text << (residual.empty() ? "residual: 0\n" : "residual: nonzero\n");
  s.emit("deform residual", {{"n", psi.n}, {"zero", residual.empty()}, {"residual", list}}, text.str());
  return residual.empty() ? ok : negative;
}

int deform_canonicalize(Session& s, const std::string& path) {
  auto psi = s.deformation(path);
  auto c = canonicalize(psi);
  auto nf = moduli_normal_form(c.point);
  Json point = io::to_json(c.point);
  Json normal = io::to_json(nf);
  Json result = {{"point", point}, {"normal_form", normal}, {"steps", c.trail.size()}, {"composed", io::to_json(c.composed)}};
  std::ostringstream text;
  text << "x = " << rationals_text(point["x"]) << "\n";
  text << "normal form = " << rationals_text(normal["x"]) << "\n";
  text << "basis changes: " << c.trail.size() << "\n";
  s.emit("deform canonicalize", result, text.str());
  return ok;
}

int deform_orbit_eq(Session& s, const std::string& p_path, const std::string& q_path) {
  auto p = s.point(p_path);
  auto q = s.point(q_path);
  auto answer = orbit_equivalent(p, q);
  Json result = {{"equivalent", answer.has_value()}};
  std::ostringstream text;
  if (!answer) {
    text << "not equivalent\n";
  } else if (answer->any) {
    result["any"] = true;
    result["alphas"] = Json::array();
    text << "equivalent: both points are zero, any alpha\n";
  } else {
    Json alphas = Json::array();
    std::string list;
    for (const auto& a : answer->alphas) {
      alphas.push_back(to_string(a));
      list += (list.empty() ? "" : ", ") + to_string(a);
    }
    result["any"] = false;
    result["alphas"] = alphas;
    text << "equivalent: alpha in {" << list << "}\n";
  }
  s.emit("deform orbit-eq", result, text.str());
  return answer ? ok : negative;
}

int deform_normal_form(Session& s, const std::string& path) {
  auto p = s.point(path);
  Json normal = io::to_json(moduli_normal_form(p));
  bool nonsingular = nonsingular_classify(p);
  s.emit("deform normal-form", {{"normal_form", normal}, {"nonsingular", nonsingular}},
         "normal form = " + rationals_text(normal["x"]) + "\n" + (nonsingular ? "nonsingular\n" : "singular\n"));
  return ok;
}

int deform_tangent_dims(Session& s, const std::string& path) {
  auto psi = s.deformation(path);
  auto t = tangent_dims(psi);
  Json result = {{"kernel", t.kernel}, {"orbit", t.orbit}, {"cocycles", t.cocycles}, {"stabilizer", t.stabilizer}};
  std::ostringstream text;
  text << "ker d on C^1_{>0}: " << t.kernel << "\norbit: " << t.orbit << "\nZ^2_{>0}: " << t.cocycles
       << "\nstabilizer: " << t.stabilizer << "\n";
  s.emit("deform tangent-dims", result, text.str());
  return ok;
}

int deform_massey(Session& s, const std::string& path, int k) {
  auto psi = s.deformation(path);
  Deformation partial{psi.n, {}};
  for (const auto& [w, c] : psi.components)
    if (w < k) partial.components.emplace(w, c);
  auto obstruction = massey_obstruction(catalog::V(psi.n), partial, k);
  Json coords = Json::array();
  for (const auto& v : obstruction.coordinates) coords.push_back(to_string(v));
  Json result = {{"weight", k}, {"zero", obstruction.is_zero()}, {"coordinates", coords},
                 {"representative", io::to_json(obstruction.representative)}};
  std::ostringstream text;
  text << "obstruction at weight " << k << ": " << (obstruction.is_zero() ? "zero" : "nonzero") << "\n";
  if (!coords.empty()) text << "coordinates " << rationals_text(coords) << "\n";
  s.emit("deform massey", result, text.str());
  return obstruction.is_zero() ? ok : negative;
}

// ---- symplectic, extend, contact ---------------------------------------------

int symplectic_decide(Session& s, const std::string& path, std::uint64_t seed, std::size_t trials) {
  auto g = s.algebra(path);
  auto d = symplectic_decision(g, seed, trials);
  Json result = {{"verdict", to_string(d.verdict)},
                 {"cocycles", d.cocycles},
                 {"trials", d.trials},
                 {"seed", seed},
                 {"certificate", d.certificate},
                 {"witness", d.witness ? io::two_form_json(*d.witness) : Json(nullptr)}};
  std::ostringstream text;
  text << "verdict: " << to_string(d.verdict) << "\n";
  text << "dim Z^2: " << d.cocycles << ", trials: " << d.trials << " (seed " << seed << ")\n";
  if (!d.certificate.empty()) text << "certificate: " << d.certificate << "\n";
  if (d.witness) text << "witness: " << cochain_text(*d.witness) << "\n";
  s.emit("symplectic decide", result, text.str());
  switch (d.verdict) {
    case Verdict::exists:
      return ok;
    case Verdict::certified_none:
      return negative;
    default:
      return undecided;
  }
}

TwoForm load_two_form(Session& s, const std::string& path) {
  auto j = s.load(path);
  if (io::kind_of(j) != io::Kind::two_form) throw InputError(path + ": expected a two-form");
  return io::two_form_from_json(j);
}

int symplectic_verify(Session& s, const std::string& alg, const std::string& form) {
  auto g = s.algebra(alg);
  auto omega = load_two_form(s, form);
  bool closed = is_closed(g, omega);
  bool nondeg = nondegenerate(g, omega);
  std::ostringstream text;
  text << "closed: " << (closed ? "yes" : "no") << "\nnondegenerate: " << (nondeg ? "yes" : "no") << "\n";
  s.emit("symplectic verify", {{"closed", closed}, {"nondegenerate", nondeg}, {"symplectic", closed && nondeg}},
         text.str());
  return closed && nondeg ? ok : negative;
}

int extend_command(Session& s, const std::string& alg, const std::string& form, const std::string& out_path) {
  auto g = s.algebra(alg);
  auto c = load_two_form(s, form);
  auto e = central_extension(g, c);
  Json j = io::to_json(e);
  if (out_path.empty()) {
    s.out << j.dump(2) << "\n";
    return ok;
  }
  write_json(j, out_path, s.out);
  bool filiform = is_filiform(e);
  std::ostringstream text;
  text << "wrote " << out_path << ": dim " << e.dim() << ", " << to_string(e.flavor())
       << ", new weight " << e.weights().back() << (filiform ? ", filiform" : "") << "\n";
  s.emit("extend", {{"out", out_path}, {"dim", e.dim()}, {"flavor", to_string(e.flavor())},
                    {"weight", e.weights().back()}, {"filiform", filiform}},
         text.str());
  return ok;
}

int contact_command(Session& s, const std::string& alg, const std::string& form) {
  auto g = s.algebra(alg);
  auto j = s.load(form);
  if (io::kind_of(j) != io::Kind::one_form) throw InputError(form + ": expected a one-form");
  auto theta = io::one_form_from_json(j);
  bool contact = contact_check(g, theta);
  s.emit("contact", {{"contact", contact}}, std::string("contact: ") + (contact ? "yes" : "no") + "\n");
  return contact ? ok : negative;
}

// ---- paper tables ------------------------------------------------------------

int paper_tables_command(Session& s, const std::string& dir, bool update) {
  namespace fs = std::filesystem;
  auto tables = paper_tables();
  if (update) fs::create_directories(dir);
  for (const auto& t : tables) {
    auto path = (fs::path(dir) / t.file).string();
    auto text = render(t);
    if (update) {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw InputError(path + ": cannot write");
      file << text;
      s.out << "wrote " << path << " (" << t.rows.size() - 1 << " rows)\n";
      continue;
    }
    if (!fs::exists(path)) {
      s.out << "FAIL " << path << ": missing golden file\n";
      return negative;
    }
    auto diff = first_divergence(t, slurp(path));
    if (!diff.empty()) {
      s.out << "FAIL " << path << ": " << diff << "\n";
      return negative;
    }
    s.out << "ok   " << path << " (" << t.rows.size() - 1 << " rows)\n";
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s{out, err};
  CLI::App app{"Exact cohomology and deformations of filiform Lie algebras", "filiform"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("filiform ") + kVersion);
  int code = ok;
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", s.json, "Print the JSON report"); };

  auto* algebra = app.add_subcommand("algebra", "Algebra checks")->require_subcommand(1);
  std::string path, path2, out_path;
  auto* verify = algebra->add_subcommand("verify", "Jacobi residual report");
  verify->add_option("file", path, "Algebra JSON")->required();
  json_flag(verify);
  verify->callback([&] { code = algebra_verify(s, path); });

  CatalogArgs cat;
  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named algebra, cochain or form as JSON");
  catalog_cmd->add_option("name", cat.name,
                          "m0 m1 m2 v g8 g10 gx psi omega theta deformation point")
      ->required();
  catalog_cmd->add_option("--param,--alpha", cat.param, "Parameter alpha of g8 and g10");
  catalog_cmd->add_option("--dim,--n", cat.dim, "Dimension");
  catalog_cmd->add_option("--x", cat.x, "Comma-separated coordinates");
  catalog_cmd->add_option("--x5", cat.x5, "x5 for omega");
  catalog_cmd->add_option("--of", cat.of, "Algebra whose listed form omega emits");
  catalog_cmd->add_option("--l", cat.l, "Index l of psi_{n,l}");
  catalog_cmd->add_option("--out", cat.out, "Output file (default stdout)");
  catalog_cmd->callback([&] { code = catalog_command(s, cat); });

  int degree = 0;
  std::string coeff = "adjoint";
  std::optional<int> weight;
  bool reps = false;
  auto* coh = app.add_subcommand("cohomology", "Per-weight cohomology table");
  coh->add_option("file", path, "Algebra JSON")->required();
  coh->add_option("--deg", degree, "Degree q")->required();
  coh->add_option("--coeff", coeff, "adjoint or trivial")->check(CLI::IsMember({"adjoint", "trivial"}));
  coh->add_option("--weight", weight, "Single weight block");
  coh->add_flag("--reps", reps, "Print representatives");
  json_flag(coh);
  coh->callback([&] { code = cohomology_command(s, path, degree, coeff, weight, reps); });

  auto* deform_cmd = app.add_subcommand("deform", "Deformations of V(n)")->require_subcommand(1);
  auto* residual = deform_cmd->add_subcommand("residual", "d Psi + 1/2 [Psi, Psi] per weight");
  residual->add_option("file", path, "Deformation, moduli point or algebra JSON")->required();
  json_flag(residual);
  residual->callback([&] { code = deform_residual(s, path); });
  auto* canon = deform_cmd->add_subcommand("canonicalize", "Moduli coordinates of a deformation");
  canon->add_option("file", path, "Deformation, moduli point or algebra JSON")->required();
  json_flag(canon);
  canon->callback([&] { code = deform_canonicalize(s, path); });
  auto* orbit = deform_cmd->add_subcommand("orbit-eq", "Are two moduli points in one scaling orbit");
  orbit->add_option("p", path, "Moduli point JSON")->required();
  orbit->add_option("q", path2, "Moduli point JSON")->required();
  json_flag(orbit);
  orbit->callback([&] { code = deform_orbit_eq(s, path, path2); });
  auto* normal = deform_cmd->add_subcommand("normal-form", "Orbit representative of a moduli point");
  normal->add_option("file", path, "Moduli point JSON")->required();
  json_flag(normal);
  normal->callback([&] { code = deform_normal_form(s, path); });
  auto* tangent = deform_cmd->add_subcommand("tangent-dims", "Kernel, orbit, cocycle and stabilizer dimensions");
  tangent->add_option("file", path, "Deformation, moduli point or algebra JSON")->required();
  json_flag(tangent);
  tangent->callback([&] { code = deform_tangent_dims(s, path); });
  int massey_weight = 0;
  auto* massey = deform_cmd->add_subcommand("massey", "Obstruction class at one weight");
  massey->add_option("file", path, "Deformation JSON; components of weight >= k are ignored")->required();
  massey->add_option("--weight", massey_weight, "Weight k")->required();
  json_flag(massey);
  massey->callback([&] { code = deform_massey(s, path, massey_weight); });

  std::uint64_t seed = 0;
  std::size_t trials = 64;
  auto* symp = app.add_subcommand("symplectic", "Symplectic structures")->require_subcommand(1);
  auto* decide = symp->add_subcommand("decide", "Exists, certified-none or undecided");
  decide->add_option("file", path, "Algebra JSON")->required();
  decide->add_option("--seed", seed, "Seed of the random search");
  decide->add_option("--trials", trials, "Random combinations to try");
  json_flag(decide);
  decide->callback([&] { code = symplectic_decide(s, path, seed, trials); });
  auto* sverify = symp->add_subcommand("verify", "Closed and nondegenerate");
  sverify->add_option("algebra", path, "Algebra JSON")->required();
  sverify->add_option("form", path2, "Two-form JSON")->required();
  json_flag(sverify);
  sverify->callback([&] { code = symplectic_verify(s, path, path2); });

  auto* extend = app.add_subcommand("extend", "Central extension by a closed two-form");
  extend->add_option("algebra", path, "Algebra JSON")->required();
  extend->add_option("form", path2, "Two-form JSON")->required();
  extend->add_option("--out", out_path, "Output file (default stdout)");
  json_flag(extend);
  extend->callback([&] { code = extend_command(s, path, path2, out_path); });

  auto* contact = app.add_subcommand("contact", "theta ^ (d theta)^k != 0");
  contact->add_option("algebra", path, "Algebra JSON")->required();
  contact->add_option("form", path2, "One-form JSON")->required();
  json_flag(contact);
  contact->callback([&] { code = contact_command(s, path, path2); });

  std::string golden = FILIFORM_GOLDEN_DIR;
  bool update = false;
  auto* tables = app.add_subcommand("paper-tables", "Regenerate the golden tables and diff them");
  tables->add_option("--golden", golden, "Golden directory");
  tables->add_flag("--update", update, "Overwrite the golden files");
  tables->callback([&] { code = paper_tables_command(s, golden, update); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, out, err);
    return status == 0 ? ok : input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return code;
}

}  // namespace filiform::cli
