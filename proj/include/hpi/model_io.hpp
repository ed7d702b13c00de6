#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hpi/algebra.hpp"
#include "hpi/errors.hpp"
#include "hpi/haction.hpp"
#include "hpi/matrix.hpp"
#include "hpi/rational.hpp"

namespace hpi {

struct Model {
  std::string name;
  Algebra alg;
  std::optional<Vec> unit;  // declared unit coordinates, if any
  std::vector<HOperator> generators;
};

// Text format, one directive per line, '#' starts a comment:
//
//   hpi-model v1
//   name <token>
//   dim <k>
//   labels <k tokens>            (optional, defaults to e0..e{k-1})
//   unit <k rationals>           (optional)
//   sc <i> <j> <k> <p/q>         (repeatable, entries accumulate)
//   op <name> automorphism|antiautomorphism|derivation|generalized
//   row <k rationals>            (k rows: the operator matrix)
//   sym                          (generalized only; followed by 2k rows)
//   twist                        (generalized only; followed by 2k rows)
//   end                          (closes a generalized op block)
//
// Indices are 0-based.  Parsing validates associativity, the declared unit,
// and every operator's product rule.

namespace io_detail {

struct Line {
  std::size_t no;
  std::vector<std::string> tok;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string t;
    while (ls >> t) line.tok.push_back(t);
    if (!line.tok.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

inline std::size_t parse_index(const Line& l, std::size_t pos, std::size_t bound,
                               const char* what) {
  unsigned long v = 0;
  try {
    std::size_t used = 0;
    v = std::stoul(l.tok[pos], &used);
    if (used != l.tok[pos].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(l.no, std::string("expected a nonnegative integer ") + what);
  }
  if (bound && v >= bound) fail(l.no, std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

inline Rat parse_rat_at(const Line& l, std::size_t pos) {
  try {
    return parse_rat(l.tok[pos]);
  } catch (const Error& e) {
    fail(l.no, e.what());
  }
}

inline Vec parse_row(const Line& l, std::size_t dim, const char* what) {
  if (l.tok.size() != dim + 1) fail(l.no, std::string("expected ") + what);
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = parse_rat_at(l, i + 1);
  return v;
}

// Reads `dim` consecutive `row` lines into a matrix.
inline Matrix parse_matrix(const std::vector<Line>& lines, std::size_t& i, std::size_t dim,
                           std::size_t at) {
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (i >= lines.size() || lines[i].tok[0] != "row")
      fail(i < lines.size() ? lines[i].no : at, "expected a row line");
    Vec v = parse_row(lines[i], dim, "row with dim rational entries");
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = std::move(v[c]);
    ++i;
  }
  return m;
}

inline const char* kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::Automorphism: return "automorphism";
    case RuleKind::AntiAutomorphism: return "antiautomorphism";
    case RuleKind::Derivation: return "derivation";
    case RuleKind::Generalized: return "generalized";
    case RuleKind::Unit: break;
  }
  return "generalized";  // identity operators serialize by their matrix pairs
}

}  // namespace io_detail

inline Model parse_model(const std::string& text) {
  using io_detail::fail;
  auto lines = io_detail::tokenize(text);
  if (lines.empty() || lines[0].tok != std::vector<std::string>{"hpi-model", "v1"})
    fail(lines.empty() ? 1 : lines[0].no, "expected header 'hpi-model v1'");

  Model m;
  bool have_name = false, have_dim = false, have_labels = false;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::optional<Vec> unit;
  struct ScEntry { std::size_t i, j, k; Rat c; };
  std::vector<ScEntry> sc;
  struct OpEntry { std::string name; RuleKind kind; Matrix mat; ProductRule rule; };
  std::vector<OpEntry> ops;

  std::size_t i = 1;
  while (i < lines.size()) {
    const auto& l = lines[i];
    const std::string& key = l.tok[0];
    if (key == "name") {
      if (have_name) fail(l.no, "duplicate name");
      if (l.tok.size() != 2) fail(l.no, "expected: name <token>");
      m.name = l.tok[1];
      have_name = true;
      ++i;
    } else if (key == "dim") {
      if (have_dim) fail(l.no, "duplicate dim");
      if (l.tok.size() != 2) fail(l.no, "expected: dim <k>");
      dim = io_detail::parse_index(l, 1, 0, "dimension");
      if (dim == 0) fail(l.no, "dimension must be positive");
      if (dim > 64) throw Error(ErrorCode::SizeLimit, "dimension above the supported cap of 64");
      have_dim = true;
      ++i;
    } else if (key == "labels") {
      if (!have_dim) fail(l.no, "labels before dim");
      if (have_labels) fail(l.no, "duplicate labels");
      if (l.tok.size() != dim + 1) fail(l.no, "expected one label per basis element");
      labels.assign(l.tok.begin() + 1, l.tok.end());
      have_labels = true;
      ++i;
    } else if (key == "unit") {
      if (!have_dim) fail(l.no, "unit before dim");
      if (unit) fail(l.no, "duplicate unit");
      unit = io_detail::parse_row(l, dim, "unit with dim rational entries");
      ++i;
    } else if (key == "sc") {
      if (!have_dim) fail(l.no, "sc before dim");
      if (l.tok.size() != 5) fail(l.no, "expected: sc <i> <j> <k> <p/q>");
      ScEntry e;
      e.i = io_detail::parse_index(l, 1, dim, "index i");
      e.j = io_detail::parse_index(l, 2, dim, "index j");
      e.k = io_detail::parse_index(l, 3, dim, "index k");
      e.c = io_detail::parse_rat_at(l, 4);
      sc.push_back(std::move(e));
      ++i;
    } else if (key == "op") {
      if (!have_dim) fail(l.no, "op before dim");
      if (l.tok.size() != 3) fail(l.no, "expected: op <name> <kind>");
      OpEntry op;
      op.name = l.tok[1];
      const std::string& kind = l.tok[2];
      std::size_t at = l.no;
      ++i;
      op.mat = io_detail::parse_matrix(lines, i, dim, at);
      if (kind == "automorphism" || kind == "antiautomorphism" || kind == "derivation") {
        op.kind = kind == "automorphism"     ? RuleKind::Automorphism
                  : kind == "antiautomorphism" ? RuleKind::AntiAutomorphism
                                               : RuleKind::Derivation;
      } else if (kind == "generalized") {
        op.kind = RuleKind::Generalized;
        op.rule.kind = RuleKind::Generalized;
        bool closed = false;
        while (i < lines.size() && !closed) {
          const std::string& sect = lines[i].tok[0];
          if (sect == "sym" || sect == "twist") {
            if (lines[i].tok.size() != 1) fail(lines[i].no, "expected a bare sym/twist line");
            ++i;
            Matrix left = io_detail::parse_matrix(lines, i, dim, at);
            Matrix right = io_detail::parse_matrix(lines, i, dim, at);
            auto& list = sect == "sym" ? op.rule.sym : op.rule.twist;
            list.emplace_back(std::move(left), std::move(right));
          } else if (sect == "end") {
            if (lines[i].tok.size() != 1) fail(lines[i].no, "expected a bare end line");
            ++i;
            closed = true;
          } else {
            fail(lines[i].no, "expected sym, twist, or end inside a generalized op");
          }
        }
        if (!closed) fail(at, "generalized op is missing its end line");
      } else {
        fail(at, "unknown operator kind '" + kind + "'");
      }
      ops.push_back(std::move(op));
    } else {
      fail(l.no, "unknown directive '" + key + "'");
    }
  }

  if (!have_name) throw Error(ErrorCode::ParseError, "model has no name line");
  if (!have_dim) throw Error(ErrorCode::ParseError, "model has no dim line");

  m.alg = have_labels ? Algebra(dim, labels) : Algebra(dim);
  for (const auto& e : sc) m.alg.add_structure_constant(e.i, e.j, e.k, e.c);
  m.alg.check_associativity();

  if (unit) {
    for (std::size_t b = 0; b < dim; ++b) {
      Vec e = m.alg.basis_vec(b);
      if (m.alg.multiply(*unit, e) != e || m.alg.multiply(e, *unit) != e)
        throw Error(ErrorCode::ValidationError, "declared unit is not a two-sided unit");
    }
    m.unit = std::move(unit);
  }

  for (auto& op : ops) {
    HOperator h;
    h.name = std::move(op.name);
    h.mat = std::move(op.mat);
    h.rule = op.kind == RuleKind::Generalized ? std::move(op.rule)
                                              : make_rule(op.kind, h.mat, dim);
    if (!verify_product_rule(m.alg, h.mat, h.rule))
      throw Error(ErrorCode::ValidationError,
                  "operator '" + h.name + "' violates its declared product rule");
    m.generators.push_back(std::move(h));
  }
  return m;
}

namespace io_detail {

inline void emit_matrix(std::string& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "row";
    for (std::size_t c = 0; c < m.cols(); ++c) out += " " + rat_str(m.at(r, c));
    out += "\n";
  }
}

}  // namespace io_detail

// Canonical serialization: directives in fixed order, structure constants
// sorted by (i, j, k) with zero entries dropped.  parse(serialize(m)) == m,
// and serialize(parse(text)) is a fixed point on canonical text.
inline std::string serialize_model(const Model& m) {
  std::string out = "hpi-model v1\n";
  out += "name " + m.name + "\n";
  out += "dim " + std::to_string(m.alg.dim()) + "\n";
  out += "labels";
  for (const auto& l : m.alg.labels()) out += " " + l;
  out += "\n";
  if (m.unit) {
    out += "unit";
    for (const Rat& c : *m.unit) out += " " + rat_str(c);
    out += "\n";
  }
  for (std::size_t i = 0; i < m.alg.dim(); ++i)
    for (std::size_t j = 0; j < m.alg.dim(); ++j) {
      Algebra::SparseVec entries = m.alg.basis_product(i, j);
      std::sort(entries.begin(), entries.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [k, c] : entries)
        if (!is_zero(c))
          out += "sc " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
                 " " + rat_str(c) + "\n";
    }
  for (const HOperator& h : m.generators) {
    out += "op " + h.name + " " + io_detail::kind_name(h.rule.kind) + "\n";
    io_detail::emit_matrix(out, h.mat);
    if (h.rule.kind == RuleKind::Generalized || h.rule.kind == RuleKind::Unit) {
      for (const auto& [l, r] : h.rule.sym) {
        out += "sym\n";
        io_detail::emit_matrix(out, l);
        io_detail::emit_matrix(out, r);
      }
      for (const auto& [l, r] : h.rule.twist) {
        out += "twist\n";
        io_detail::emit_matrix(out, l);
        io_detail::emit_matrix(out, r);
      }
      out += "end\n";
    }
  }
  return out;
}

inline bool models_equal(const Model& a, const Model& b) {
  if (a.name != b.name || !(a.alg == b.alg)) return false;
  if (a.unit.has_value() != b.unit.has_value()) return false;
  if (a.unit && *a.unit != *b.unit) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const HOperator& x = a.generators[i];
    const HOperator& y = b.generators[i];
    if (x.name != y.name || !(x.mat == y.mat) || x.rule.kind != y.rule.kind) return false;
    if (x.rule.sym != y.rule.sym || x.rule.twist != y.rule.twist) return false;
  }
  return true;
}

}  // namespace hpi
