#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hpi/codimension.hpp"
#include "hpi/errors.hpp"
#include "hpi/exponent.hpp"
#include "hpi/model_io.hpp"
#include "hpi/radical.hpp"
#include "hpi/reports.hpp"
#include "hpi/semisimple.hpp"
#include "hpi/zoo.hpp"

namespace hpi {

struct CliResult {
  int exit_code = 0;
  std::string out;
};

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::ValidationError: return 3;
    case ErrorCode::SplitFailure: return 4;
    case ErrorCode::NotHInvariant: return 5;
    case ErrorCode::NotHSimple: return 6;
    case ErrorCode::SizeLimit: return 7;
    case ErrorCode::InternalCheck: return 8;
  }
  return 8;
}

namespace cli_detail {

inline const char* usage_text() {
  return "usage: hpi <command> <model> [flags]\n"
         "\n"
         "models:   zoo:<name> or a path to an hpi-model v1 file\n"
         "commands:\n"
         "  check <model>                  validate the model and its operators\n"
         "  radical <model>                radical dimension, nilpotency index, basis\n"
         "  decompose <model>              simple components of the semisimple quotient\n"
         "  exponent <model>               PI-exponent, blocks, witness chain\n"
         "  codim <model> --n N            codimension at degree N\n"
         "      [--method rank|cochar|both]\n"
         "  cochar <model> --n N           cocharacter multiplicities at degree N\n"
         "  vanishing <model> --n N        vanishing constraint cross-check\n"
         "  growth <model> --max-n N       growth table as CSV [--band B] [--out FILE]\n"
         "  dump <model>                   canonical model text\n"
         "flags:    --limit-rows R  --limit-cols C  --threads K\n";
}

struct Options {
  std::string command;
  std::string model_uri;
  std::size_t n = 0;
  bool have_n = false;
  std::size_t max_n = 0;
  bool have_max_n = false;
  int band = 3;
  std::string method = "rank";
  std::string out_path;
  EvalLimits lim;
};

inline bool parse_u64(const std::string& s, std::uint64_t& v) {
  try {
    std::size_t used = 0;
    v = std::stoull(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

// Returns empty string on success, else a usage complaint.
inline std::string parse_options(const std::vector<std::string>& args, Options& o) {
  if (args.empty()) return "missing command";
  o.command = args[0];
  std::size_t i = 1;
  for (; i < args.size(); ++i) {
    const std::string& t = args[i];
    if (t.rfind("--", 0) != 0) {
      if (!o.model_uri.empty()) return "unexpected extra argument '" + t + "'";
      o.model_uri = t;
      continue;
    }
    if (i + 1 >= args.size()) return "flag " + t + " needs a value";
    const std::string& v = args[++i];
    std::uint64_t num = 0;
    if (t == "--n") {
      if (!parse_u64(v, num)) return "bad value for --n";
      o.n = static_cast<std::size_t>(num);
      o.have_n = true;
    } else if (t == "--max-n") {
      if (!parse_u64(v, num)) return "bad value for --max-n";
      o.max_n = static_cast<std::size_t>(num);
      o.have_max_n = true;
    } else if (t == "--band") {
      if (!parse_u64(v, num) || num > 16) return "bad value for --band";
      o.band = static_cast<int>(num);
    } else if (t == "--method") {
      if (v != "rank" && v != "cochar" && v != "both") return "bad value for --method";
      o.method = v;
    } else if (t == "--out") {
      o.out_path = v;
    } else if (t == "--limit-rows") {
      if (!parse_u64(v, num)) return "bad value for --limit-rows";
      o.lim.max_rows = num;
    } else if (t == "--limit-cols") {
      if (!parse_u64(v, num)) return "bad value for --limit-cols";
      o.lim.max_cols = num;
    } else if (t == "--threads") {
      if (!parse_u64(v, num) || num == 0 || num > 64) return "bad value for --threads";
      o.lim.threads = static_cast<int>(num);
    } else {
      return "unknown flag " + t;
    }
  }
  if (o.model_uri.empty()) return "missing model";
  return "";
}

inline Model load_model(const std::string& uri) {
  if (uri.rfind("zoo:", 0) == 0) {
    ZooModel z = zoo_model(uri.substr(4));
    Model m;
    m.name = z.name;
    m.alg = std::move(z.alg);
    m.unit = m.alg.find_unit();
    m.generators = std::move(z.generators);
    return m;
  }
  std::ifstream in(uri);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read model file '" + uri + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline void print_rank_block(std::ostream& os, const RankCertificate& cert) {
  os << "c " << cert.c << "\n";
  os << "primes " << cert.p1 << " " << cert.p2 << "\n";
  os << "certified " << yesno(cert.agreed) << "\n";
  os << "exact-fallback " << yesno(cert.exact_fallback) << "\n";
}

inline void print_cochar_block(std::ostream& os, const CocharacterResult& cc) {
  os << "c " << cc.c << "\n";
  os << "colength " << cc.colength << "\n";
  for (const auto& [lam, m] : cc.mult)
    if (m != 0) os << "mult " << partition_str(lam) << " " << m << "\n";
}

inline int run_loaded(const Options& o, const Model& m, std::ostream& os) {
  const Algebra& a = m.alg;
  if (o.command == "check") {
    // Loading already validated associativity, the unit, and declared rules;
    // closing the operator set re-verifies every composed rule as well.
    HActionData act = operator_algebra_basis(a, m.generators);
    os << "model " << m.name << "\n";
    os << "dim " << a.dim() << "\n";
    os << "unit " << yesno(m.unit.has_value()) << "\n";
    os << "operators " << m.generators.size() << "\n";
    os << "zeta " << act.zeta.size() << "\n";
    os << "ok\n";
    return 0;
  }
  if (o.command == "radical") {
    RadicalData rad = jacobson_radical(a);
    os << "model " << m.name << "\n";
    os << "dim " << a.dim() << "\n";
    os << "radical dim " << rad.radical.dim() << "\n";
    os << "nil index " << rad.index << "\n";
    os << "nilpotent " << yesno(rad.whole_algebra) << "\n";
    for (std::size_t i = 0; i < rad.radical.dim(); ++i) {
      os << "j";
      for (const Rat& c : rad.radical.basis_vector(i)) os << " " << rat_str(c);
      os << "\n";
    }
    return 0;
  }
  if (o.command == "decompose") {
    RadicalData rad = jacobson_radical(a);
    QuotientMap qm(a, rad.radical);
    os << "model " << m.name << "\n";
    os << "radical dim " << rad.radical.dim() << "\n";
    os << "semisimple dim " << qm.quotient().dim() << "\n";
    SemisimpleDecomposition dec = simple_decomposition(qm.quotient());
    os << "components " << dec.components.size() << "\n";
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      MatrixUnits mu = matrix_units(qm.quotient(), dec.components[i], dec.idempotents[i]);
      os << "component " << i << " dim " << dec.components[i].dim() << " matrix-size " << mu.k
         << "\n";
    }
    return 0;
  }
  if (o.command == "exponent") {
    ExponentAnalysis an = pi_exponent(a, m.generators);
    os << "model " << m.name << "\n";
    os << "exponent " << an.result.d << "\n";
    os << "nilpotent " << yesno(an.result.nilpotent) << "\n";
    os << "blocks " << an.result.block_dims.size() << "\n";
    for (std::size_t i = 0; i < an.result.block_dims.size(); ++i)
      os << "block " << i << " dim " << an.result.block_dims[i] << "\n";
    os << "witness";
    if (an.result.witness_chain.empty()) os << " none";
    for (std::size_t b : an.result.witness_chain) os << " " << b;
    os << "\n";
    os << "witness product dim " << an.result.witness_product_dim << "\n";
    os << "witness verified " << yesno(verify_exponent_witness(a, an)) << "\n";
    return 0;
  }
  if (o.command == "codim" || o.command == "cochar") {
    HActionData act = operator_algebra_basis(a, m.generators);
    std::string method = o.command == "cochar" ? "cochar" : o.method;
    os << "model " << m.name << "\n";
    os << "n " << o.n << "\n";
    if (method == "rank") {
      print_rank_block(os, codimension_rank(a, act, o.n, o.lim));
    } else if (method == "cochar") {
      CocharacterResult cc = cocharacter_multiplicities(a, act, o.n, o.lim);
      print_cochar_block(os, cc);
      os << "certified " << yesno(cc.cert.agreed) << "\n";
    } else {
      RankCertificate cert = codimension_rank(a, act, o.n, o.lim);
      CocharacterResult cc = cocharacter_multiplicities(a, act, o.n, o.lim);
      if (cert.c != cc.c)
        throw Error(ErrorCode::InternalCheck, "rank and cocharacter methods disagree");
      print_rank_block(os, cert);
      print_cochar_block(os, cc);
      os << "methods agree yes\n";
    }
    return 0;
  }
  if (o.command == "vanishing") {
    VanishingReport rep = vanishing_report(a, m.generators, o.n, o.lim);
    os << "model " << m.name << "\n";
    os << "n " << rep.n << "\n";
    os << "exponent " << rep.d << "\n";
    os << "nil index " << rep.nil_index << "\n";
    os << "constrained " << rep.constrained.size() << "\n";
    if (rep.constrained.empty()) {
      os << "no constrained partitions\n";
      return 0;
    }
    for (const Partition& lam : rep.constrained) os << "shape " << partition_str(lam) << "\n";
    os << "multiplicity check " << (rep.multiplicities_checked ? "done" : "skipped") << "\n";
    os << "direct check " << (rep.direct_checked ? "done" : "skipped") << "\n";
    for (const auto& v : rep.violations)
      os << "violation " << partition_str(v.lam) << " " << v.kind << ": " << v.detail << "\n";
    os << "result " << (rep.ok() ? "ok" : "FAIL") << "\n";
    return rep.ok() ? 0 : exit_code_for(ErrorCode::InternalCheck);
  }
  if (o.command == "growth") {
    GrowthTable t = growth_report(a, m.generators, o.max_n, o.band, o.lim);
    std::string csv = growth_csv(t);
    if (!o.out_path.empty()) {
      std::ofstream f(o.out_path);
      if (!f) throw Error(ErrorCode::ValidationError, "cannot write '" + o.out_path + "'");
      f << csv;
    }
    os << csv;
    return 0;
  }
  if (o.command == "dump") {
    os << serialize_model(m);
    return 0;
  }
  os << "error usage: unknown command '" << o.command << "'\n" << usage_text();
  return 1;
}

}  // namespace cli_detail

// Whole CLI as a library call: deterministic text out, stable exit codes.
// Output bytes depend only on the arguments, never on thread scheduling.
inline CliResult run_command(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream os;
  cli_detail::Options o;
  std::string usage_err = cli_detail::parse_options(args, o);
  if (usage_err.empty()) {
    bool needs_n = o.command == "codim" || o.command == "cochar" || o.command == "vanishing";
    if (needs_n && !o.have_n) usage_err = o.command + " needs --n";
    if (o.command == "growth" && !o.have_max_n) usage_err = "growth needs --max-n";
  }
  if (!usage_err.empty()) {
    os << "error usage: " << usage_err << "\n" << cli_detail::usage_text();
    res.exit_code = 1;
    res.out = os.str();
    return res;
  }
  try {
    Model m = cli_detail::load_model(o.model_uri);
    res.exit_code = cli_detail::run_loaded(o, m, os);
  } catch (const Error& e) {
    os << "error " << error_code_name(e.code()) << ": " << e.what() << "\n";
    res.exit_code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    os << "error INTERNAL_CHECK: " << e.what() << "\n";
    res.exit_code = exit_code_for(ErrorCode::InternalCheck);
  }
  res.out = os.str();
  return res;
}

}  // namespace hpi
