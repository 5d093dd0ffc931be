#pragma once

// Text and JSON forms of words, matrices, reports and trajectories.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "braidrep/braid.hpp"
#include "braidrep/collinearity.hpp"
#include "braidrep/error.hpp"
#include "braidrep/gn3.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

using Json = nlohmann::json;

inline Json to_json(const Permutation& p) { return Json(p.images()); }

// [[i, j, k, e], ...]
inline Json to_json(const GnWord& w) {
  Json out = Json::array();
  for (const GnLetter& l : w.letters()) out.push_back({l.gen.i, l.gen.j, l.gen.k, l.exponent});
  return out;
}

inline GnWord gn_word_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("word JSON must be an array");
  GnWord w(n);
  for (const Json& letter : j) {
    if (!letter.is_array() || letter.size() != 4) throw ParseError("word letter must be [i, j, k, e]");
    for (const Json& x : letter) {
      if (!x.is_number_integer()) throw ParseError("word letter entries must be integers");
    }
    auto idx = [&](std::size_t at) {
      const long v = letter[at].get<long>();
      if (v < 1) throw DomainError("generator index out of range");
      return static_cast<std::size_t>(v);
    };
    w.push_back({{idx(0), idx(1), idx(2)}, letter[3].get<int>()});
  }
  return w;
}

// Whitespace-separated "a(i,j,k)" or "a(i,j,k)^-1".
inline GnWord parse_gn_word(std::string_view text, std::size_t n) {
  GnWord w(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError("expected an index", start);
    return static_cast<std::size_t>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  skip_ws();
  while (pos < text.size()) {
    expect('a');
    expect('(');
    const std::size_t i = number();
    expect(',');
    const std::size_t j = number();
    expect(',');
    const std::size_t k = number();
    expect(')');
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (text.substr(pos, 2) == "-1") {
        e = -1;
        pos += 2;
      } else if (text.substr(pos, 1) == "1") {
        pos += 1;
      } else {
        throw ParseError("exponent must be 1 or -1", pos);
      }
    }
    w.push_back({{i, j, k}, e});
    skip_ws();
  }
  return w;
}

inline Json to_json(const SemidirectElement& e) {
  return {{"n", e.perm.size()}, {"permutation", to_json(e.perm)}, {"word", to_json(e.word)}, {"text", e.word.to_string()}};
}

// {"n", "dim", "basis", "entries": [{"row", "col", "value"}]} with entries
// sorted by (row, col).
inline Json to_json(const RepMatrix& m, std::size_t n) {
  Json basis_labels = Json::array();
  for (const BasisIndex& b : basis(n)) basis_labels.push_back(b.label());
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back({{"row", r}, {"col", c}, {"value", format(v)}});
  return {{"n", n}, {"dim", m.rows()}, {"basis", basis_labels}, {"entries", entries}};
}

inline Json to_json(const NumericMatrix& m, std::size_t n) {
  Json basis_labels = Json::array();
  for (const BasisIndex& b : basis(n)) basis_labels.push_back(b.label());
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back({{"row", r}, {"col", c}, {"value", format_rational(v)}});
  return {{"n", n}, {"dim", m.rows()}, {"basis", basis_labels}, {"entries", entries}};
}

inline RepMatrix rep_matrix_from_json(const Json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim != module_rank(n)) throw ParseError("matrix dim does not equal n(n-1)");
  RepMatrix m(dim, dim, LaurentPoly::zero(n));
  for (const Json& e : j.at("entries")) {
    m.set(e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(), parse_poly(e.at("value").get<std::string>(), n));
  }
  return m;
}

// Burau matrices have no x_pq basis; the variable t is printed as t1.
inline Json burau_to_json(const BurauMatrix& m, std::size_t n, bool reduced) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back({{"row", r}, {"col", c}, {"value", format(v)}});
  return {{"n", n}, {"dim", m.rows()}, {"reduced", reduced}, {"variable", "t1"}, {"identity", m.is_identity()}, {"entries", entries}};
}

inline Json burau_to_json(const SparseMatrix<Rational>& m, std::size_t n, bool reduced) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back({{"row", r}, {"col", c}, {"value", format_rational(v)}});
  return {{"n", n}, {"dim", m.rows()}, {"reduced", reduced}, {"identity", m.is_identity()}, {"entries", entries}};
}

inline Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  Json failures = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"relation", c.relation}, {"instance", c.instance}, {"passed", c.passed}});
    if (!c.passed) failures.push_back(c.relation + " " + c.instance);
  }
  return {{"n", r.n}, {"passed", r.all_passed()}, {"count", r.checks.size()}, {"failures", failures}, {"checks", checks}};
}

inline Json to_json(const std::vector<CollinearityEvent>& events) {
  Json out = Json::array();
  for (const auto& e : events) {
    out.push_back({{"time", e.time},
                   {"paths", {e.paths[0], e.paths[1], e.paths[2]}},
                   {"triple", {e.triple.i, e.triple.j, e.triple.k}}});
  }
  return out;
}

inline Json to_json(const CalibrationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"i", e.generator},
                       {"events", e.events},
                       {"status", to_string(e.status)},
                       {"geometric", to_json(e.geometric)},
                       {"algebraic", to_json(e.algebraic)}});
  }
  return {{"n", r.n}, {"passed", r.all_exact()}, {"entries", entries}};
}

// {"n": int, "paths": [[[t, x, y], ...], ...]}
inline Json to_json(const TrajectorySet& ts) {
  Json paths = Json::array();
  for (const Path& p : ts.paths()) {
    Json path = Json::array();
    for (const Breakpoint& b : p) path.push_back({b.time, b.pos.x, b.pos.y});
    paths.push_back(path);
  }
  return {{"n", ts.points()}, {"paths", paths}};
}

inline TrajectorySet trajectories_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("paths")) throw ParseError("trajectory JSON needs \"n\" and \"paths\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) throw ParseError("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  const Json& paths = j["paths"];
  if (!paths.is_array() || paths.size() != n) throw ParseError("\"paths\" must be an array of n paths");
  std::vector<Path> out;
  for (const Json& path : paths) {
    if (!path.is_array()) throw ParseError("each path must be an array of [t, x, y]");
    Path p;
    for (const Json& b : path) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_number() || !b[1].is_number() || !b[2].is_number()) {
        throw ParseError("breakpoints must be [t, x, y] numbers");
      }
      p.push_back({b[0].get<double>(), {b[1].get<double>(), b[2].get<double>()}});
    }
    out.push_back(std::move(p));
  }
  return TrajectorySet(std::move(out));
}

inline TrajectorySet load_trajectories(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON in ") + file + ": " + e.what());
  }
  return trajectories_from_json(j);
}

inline void save_trajectories(const TrajectorySet& ts, const std::string& file) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file);
  out << to_json(ts).dump(1) << '\n';
}

}  // namespace braidrep
