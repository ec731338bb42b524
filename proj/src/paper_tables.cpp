#include <random>
#include <sstream>

#include "filiform/catalog.hpp"
#include "filiform/cli.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/deformation.hpp"

namespace filiform::cli {

namespace {

using Row = std::vector<std::string>;

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(const Rational& q) { return to_string(q); }

void structure_rows(Table& t, const std::string& label, const LieAlgebra& g) {
  for (const auto& [ij, v] : g.brackets())
    for (const auto& [k, c] : v.entries()) t.rows.push_back({label, str(ij.first + 1), str(ij.second + 1), str(k + 1), str(c)});
}

Table catalog_table() {
  Table t{"catalog.tsv", 4, {{"algebra", "i", "j", "k", "c"}}};
  structure_rows(t, "m0(12)", catalog::m0(12));
  structure_rows(t, "m1(12)", catalog::m1(12));
  structure_rows(t, "m2(12)", catalog::m2(12));
  structure_rows(t, "V(12)", catalog::V(12));
  structure_rows(t, "g8(3)", catalog::g8(Rational(3)));
  structure_rows(t, "g10(1)", catalog::g10(Rational(1)));
  structure_rows(t, "gX(16;1,2,3,4)", catalog::gX(16, {Rational(1), Rational(2), Rational(3), Rational(4)}));
  return t;
}

Table poly_table() {
  Table t{"polynomials.tsv", 2, {{"family", "j", "value"}}};
  using catalog::Poly;
  for (auto p : {Poly::P1, Poly::P2, Poly::P3, Poly::Q1, Poly::Q2, Poly::Q3, Poly::Z1, Poly::Z2, Poly::Z3, Poly::Z4})
    for (long j = 2; j <= 12; ++j) t.rows.push_back({catalog::to_string(p), std::to_string(j), str(catalog::poly(p, j))});
  return t;
}

Table psi_table() {
  Table t{"psi.tsv", 5, {{"n", "l", "i", "j", "k", "c"}}};
  for (std::size_t n : {12, 16, 20})
    for (int l = 7; l <= 11; ++l)
      for (auto p = catalog::psi(n, l); const auto& [m, c] : p.terms()) {
        auto idx = m.indices();
        t.rows.push_back({str(n), str(l), str(idx[0] + 1), str(idx[1] + 1), str(m.target + 1), str(c)});
      }
  return t;
}

void form_rows(Table& t, const std::string& label, const TwoForm& omega) {
  for (const auto& [m, c] : omega.terms()) {
    auto idx = m.indices();
    t.rows.push_back({label, str(idx[0] + 1), str(idx[1] + 1), str(c)});
  }
}

Table form_table() {
  Table t{"forms.tsv", 3, {{"form", "i", "j", "c"}}};
  for (std::size_t n : {4, 6, 8, 10, 12, 14, 16, 18, 20}) {
    form_rows(t, "m0(" + str(n) + ")", catalog::omega_catalog("m0", n));
    form_rows(t, "V(" + str(n) + ")", catalog::omega_catalog("V", n));
  }
  form_rows(t, "g8(3)", catalog::omega_catalog("g8", 8, Rational(3)));
  form_rows(t, "g10(1)", catalog::omega_catalog("g10", 10, Rational(1)));
  form_rows(t, "X(16;1,2,3,4;5)",
            catalog::omega_X(16, {Rational(1), Rational(2), Rational(3), Rational(4)}, Rational(5)));
  return t;
}

struct Degree {
  Coefficients co;
  int q;
};
constexpr Degree kDegrees[] = {{Coefficients::adjoint, 0},
                               {Coefficients::adjoint, 1},
                               {Coefficients::adjoint, 2},
                               {Coefficients::trivial, 2},
                               {Coefficients::trivial, 3}};

std::vector<Table> cohomology_tables() {
  Table blocks{"cohomology.tsv", 4, {{"n", "coeff", "deg", "weight", "cochains", "cocycles", "coboundaries", "dim"}}};
  Table totals{"cohomology_totals.tsv", 3, {{"n", "coeff", "deg", "total", "weights"}}};
  for (std::size_t n = 12; n <= 20; ++n) {
    auto g = catalog::V(n);
    for (const auto& d : kDegrees) {
      auto report = cohomology(g, d.q, d.co);
      for (const auto& b : report.blocks)
        blocks.rows.push_back({str(n), to_string(d.co), str(d.q), str(*b.weight), str(b.cochains), str(b.cocycles),
                               str(b.coboundaries), str(b.dim())});
      std::string weights;
      for (int w : report.weight_multiset()) weights += (weights.empty() ? "" : ",") + str(w);
      totals.rows.push_back({str(n), to_string(d.co), str(d.q), str(report.total()), weights});
    }
  }
  return {blocks, totals};
}

// Raw engine output only, so the log does not depend on distribution implementations.
Rational draw(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 7) - 3;
  long den = static_cast<long>(rng() % 3) + 1;
  return ratio(num, den);
}

Table moduli_table() {
  Table t{"moduli.tsv", 2, {{"n", "case", "x", "phi_terms", "canonical", "normal_form", "steps"}}};
  std::mt19937_64 rng(0);
  auto list = [](const ModuliPoint& p) {
    std::string s;
    for (const auto& v : p.x) s += (s.empty() ? "" : ",") + to_string(v);
    return s;
  };
  for (std::size_t n : {16, 17}) {
    for (int c = 0; c < 4; ++c) {
      ModuliPoint p;
      p.n = n;
      for (auto& v : p.x) v = draw(rng);
      std::vector<Vector> columns(n, Vector(n));
      std::size_t terms = 0;
      for (std::size_t col = 0; col < n; ++col) {
        columns[col][col] = Rational(1);
        for (std::size_t row = col + 1; row < n; ++row)
          if (rng() % 4 == 0) {
            columns[col][row] = draw(rng);
            if (columns[col][row] != 0) ++terms;
          }
      }
      BasisChange phi(columns);
      auto v = catalog::V(n);
      auto moved = apply_basis_change(deform(v, moduli_deformation(p)), phi);
      auto canon = canonicalize(extract_deformation(moved, v));
      t.rows.push_back({str(n), str(c), list(p), str(terms), list(canon.point), list(moduli_normal_form(canon.point)),
                        str(canon.trail.size())});
    }
  }
  return t;
}

std::string key_of(const Table& t, const Row& row) {
  std::string s;
  for (std::size_t c = 0; c < t.keys && c < row.size(); ++c)
    s += (s.empty() ? "" : " ") + t.rows[0][c] + "=" + row[c];
  return s;
}

std::vector<Row> parse_tsv(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    Row row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '\t')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<Table> paper_tables() {
  std::vector<Table> out{catalog_table(), poly_table(), psi_table(), form_table()};
  for (auto& t : cohomology_tables()) out.push_back(std::move(t));
  out.push_back(moduli_table());
  return out;
}

std::string render(const Table& t) {
  std::string s;
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) s += (c ? "\t" : "") + row[c];
    s += "\n";
  }
  return s;
}

std::string first_divergence(const Table& t, const std::string& golden) {
  auto expected = parse_tsv(golden);
  for (std::size_t r = 0; r < std::max(expected.size(), t.rows.size()); ++r) {
    std::string line = "line " + std::to_string(r + 1);
    if (r >= expected.size()) return line + ": computed row (" + key_of(t, t.rows[r]) + ") missing from golden file";
    if (r >= t.rows.size()) return line + ": golden row has no computed counterpart";
    const auto& want = expected[r];
    const auto& got = t.rows[r];
    for (std::size_t c = 0; c < std::max(want.size(), got.size()); ++c) {
      std::string w = c < want.size() ? want[c] : "<none>";
      std::string g = c < got.size() ? got[c] : "<none>";
      if (w == g) continue;
      std::string column = c < t.rows[0].size() ? t.rows[0][c] : std::to_string(c + 1);
      std::string key = r == 0 ? "header" : key_of(t, got);
      return line + ", cell (" + key + ") column " + column + ": golden " + w + ", computed " + g;
    }
  }
  return "";
}

}  // namespace filiform::cli
