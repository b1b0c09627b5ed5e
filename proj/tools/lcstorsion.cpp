// Command line front end: membership and order queries against graded
// ideals, the claim registry, and standalone HNF/SNF on integer
// matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcstorsion/exprparse.hpp"
#include "lcstorsion/ideals.hpp"
#include "lcstorsion/registry.hpp"
#include "lcstorsion/report.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lcs::BigInt parse_bigint(const std::string& tok) {
  try {
    return lcs::BigInt(tok);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + tok + "'");
  }
}

// Whitespace-separated integers, one matrix row per line; blank lines
// are ignored.
lcs::IntMatrix read_matrix(std::istream& in, const std::string& name) {
  std::vector<lcs::Row> rows;
  std::size_t cols = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    lcs::Row r;
    std::string tok;
    while (ls >> tok) r.push_back(parse_bigint(tok));
    if (r.empty()) continue;
    if (rows.empty()) {
      cols = r.size();
    } else if (r.size() != cols) {
      throw UsageError(name + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(cols) + " entries, got " +
                       std::to_string(r.size()));
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw UsageError(name + ": empty matrix");
  return lcs::IntMatrix::from_rows(cols, rows);
}

lcs::IntMatrix read_matrix_arg(const std::string& path) {
  if (path == "-") return read_matrix(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file: " + path);
  return read_matrix(in, path);
}

lcs::IdealSpec load_custom_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file: " + path);
  std::vector<lcs::Poly> gens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      gens.push_back(lcs::eval_string(line));
    } catch (const lcs::ParseError& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    return lcs::IdealSpec::custom(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::optional<unsigned long> parse_suffix_number(const std::string& tok,
                                                 std::size_t prefix_len) {
  if (tok.size() <= prefix_len) return std::nullopt;
  unsigned long n = 0;
  for (std::size_t i = prefix_len; i < tok.size(); ++i) {
    char c = tok[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (n > 100000) return std::nullopt;
    n = n * 10 + static_cast<unsigned long>(c - '0');
  }
  return n;
}

// Spec tokens: T<n> with n >= 2 (the literal T32 names the (3,2) ideal),
// I32, gamma<n>, custom (with --spec-file) or custom:<path>.
lcs::IdealSpec parse_spec(const std::string& tok, const std::string& spec_file) {
  if (tok == "T32") return lcs::IdealSpec::t32();
  if (tok == "I32") return lcs::IdealSpec::i32();
  if (tok.rfind("custom", 0) == 0) {
    std::string path = spec_file;
    if (tok.size() > 6) {
      if (tok[6] != ':' || tok.size() == 7)
        throw UsageError("bad spec '" + tok + "': use custom:<path>");
      path = tok.substr(7);
    }
    if (path.empty())
      throw UsageError("spec 'custom' needs --spec-file or the custom:<path> form");
    return load_custom_spec(path);
  }
  if (tok.rfind("gamma", 0) == 0) {
    auto n = parse_suffix_number(tok, 5);
    if (n && *n >= 1) return lcs::IdealSpec::gamma(static_cast<unsigned>(*n));
    throw UsageError("bad spec '" + tok + "': gamma<n> needs n >= 1");
  }
  if (!tok.empty() && tok[0] == 'T') {
    auto n = parse_suffix_number(tok, 1);
    if (n && *n >= 2) return lcs::IdealSpec::tn(static_cast<unsigned>(*n));
    throw UsageError("bad spec '" + tok + "': T<n> needs n >= 2");
  }
  throw UsageError("unknown spec '" + tok +
                   "' (expected T<n>, T32, I32, gamma<n>, or custom)");
}

void emit(const lcs::Json& j) { std::cout << j.dump() << "\n"; }

void print_matrix(const lcs::IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) std::cout << ' ';
      std::cout << m.at(i, j).str();
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integer computations in graded quotients of the free ring"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  int max_degree = -1;
  int max_var = -1;
  bool transforms = false;
  std::string spec_file;
  app.add_flag("--json", json, "emit one JSON object per report line");
  app.add_option("--max-degree", max_degree, "sweep bound on the total degree")
      ->check(CLI::Range(0, 16));
  app.add_option("--max-var", max_var, "sweep bound on the variable index")
      ->check(CLI::Range(0, 16));
  app.add_flag("--transforms", transforms,
               "attach unimodular transforms to SNF and HNF output");
  app.add_option("--spec-file", spec_file,
                 "file with one generator expression per line, for spec 'custom'");

  std::string member_spec, member_expr;
  auto* member_cmd =
      app.add_subcommand("member", "decide whether an element lies in a graded ideal");
  member_cmd->add_option("spec", member_spec, "ideal spec")->required();
  member_cmd->add_option("element", member_expr, "element expression")->required();

  std::string order_spec, order_expr;
  auto* order_cmd = app.add_subcommand(
      "order", "order of the class of an element in the quotient by a graded ideal");
  order_cmd->add_option("spec", order_spec, "ideal spec")->required();
  order_cmd->add_option("element", order_expr, "element expression")->required();

  std::vector<std::string> verify_claims;
  auto* verify_cmd =
      app.add_subcommand("verify", "run registered claims and report their status");
  verify_cmd->add_option("claims", verify_claims,
                         "claim identifiers (default: the whole registry)");

  std::string hnf_path = "-";
  auto* hnf_cmd = app.add_subcommand(
      "hnf", "row Hermite normal form of an integer matrix (rows from a file or stdin)");
  hnf_cmd->add_option("matrix", hnf_path, "matrix file, '-' for stdin");

  std::string snf_path = "-";
  auto* snf_cmd = app.add_subcommand(
      "snf", "Smith normal form of an integer matrix (rows from a file or stdin)");
  snf_cmd->add_option("matrix", snf_path, "matrix file, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*member_cmd) {
      auto spec = parse_spec(member_spec, spec_file);
      lcs::Poly f = lcs::eval_string(member_expr);
      bool in = lcs::ideal_member(f, spec);
      if (json) {
        lcs::Json j;
        j["command"] = "member";
        j["spec"] = member_spec;
        j["element"] = member_expr;
        j["member"] = in;
        emit(j);
      } else {
        std::cout << (in ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*order_cmd) {
      auto spec = parse_spec(order_spec, spec_file);
      lcs::Poly f = lcs::eval_string(order_expr);
      auto ord = lcs::order_mod_ideal(f, spec);
      if (json) {
        lcs::Json j;
        j["command"] = "order";
        j["spec"] = order_spec;
        j["element"] = order_expr;
        j["order"] = lcs::json_order(ord);
        emit(j);
      } else {
        std::cout << lcs::json_order(ord) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      for (const auto& c : verify_claims)
        if (!lcs::is_claim_id(c)) throw UsageError("unknown claim: " + c);
      lcs::VerifyOptions opt;
      if (max_degree >= 0) opt.max_degree = static_cast<std::uint32_t>(max_degree);
      if (max_var >= 0) opt.max_var = static_cast<lcs::Var>(max_var);
      opt.transforms = transforms;

      std::vector<std::string> wanted;
      for (const auto& id : lcs::claim_ids()) {
        if (verify_claims.empty() ||
            std::find(verify_claims.begin(), verify_claims.end(), id) !=
                verify_claims.end())
          wanted.push_back(id);
      }
      bool any_failed = false;
      for (const auto& id : wanted) {
        auto rep = lcs::run_claim(id, opt);
        if (json) {
          for (const auto& rec : rep.records) emit(rec);
          emit(rep.summary_json());
        } else {
          std::cout << rep.claim << ": " << rep.status() << " (" << rep.elapsed_ms
                    << " ms)" << std::endl;
        }
        if (!rep.skipped && !rep.verified) any_failed = true;
      }
      return any_failed ? 1 : 0;
    }

    if (*hnf_cmd) {
      auto m = read_matrix_arg(hnf_path);
      auto res = lcs::hnf(m);
      std::size_t rank = 0;
      for (std::size_t i = 0; i < res.h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < res.h.cols(); ++j)
          if (!res.h.at(i, j).is_zero()) nonzero = true;
        if (nonzero) rank = i + 1;
      }
      lcs::IntMatrix basis(rank, res.h.cols());
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < res.h.cols(); ++j) basis.at(i, j) = res.h.at(i, j);
      if (json) {
        lcs::Json j;
        j["command"] = "hnf";
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        j["rank"] = rank;
        j["basis"] = lcs::json_matrix(basis);
        if (transforms) j["transform"] = lcs::json_matrix(res.u);
        emit(j);
      } else {
        std::cout << "rank " << rank << "\n";
        print_matrix(basis);
        if (transforms) {
          std::cout << "transform\n";
          print_matrix(res.u);
        }
      }
      return 0;
    }

    if (*snf_cmd) {
      auto m = read_matrix_arg(snf_path);
      auto res = lcs::snf(m, transforms);
      if (json) {
        lcs::Json j;
        j["command"] = "snf";
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        j["rank"] = res.rank;
        j["diagonal"] = lcs::json_factors(res.d);
        if (transforms) {
          j["row_transform"] = lcs::json_matrix(*res.u);
          j["column_transform"] = lcs::json_matrix(*res.v);
        }
        emit(j);
      } else {
        std::cout << "rank " << res.rank << "\n";
        std::cout << "diagonal";
        for (const auto& d : res.d) std::cout << ' ' << d.str();
        std::cout << "\n";
        if (transforms) {
          std::cout << "row transform\n";
          print_matrix(*res.u);
          std::cout << "column transform\n";
          print_matrix(*res.v);
        }
      }
      return 0;
    }
  } catch (const lcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
