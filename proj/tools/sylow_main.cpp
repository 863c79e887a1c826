// Command-line surface for the Sylow p-number toolkit.
//
// Subcommands: census, constants, sym-index, catalog, closure, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylow/arith.hpp"
#include "sylow/census.hpp"
#include "sylow/constants.hpp"
#include "sylow/density.hpp"
#include "sylow/multfn.hpp"
#include "sylow/oracle.hpp"
#include "sylow/simple_catalog.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts plain integers and scientific notation with an integral
// mantissa-times-power value ("1e8", "2.5e3"). Rejects non-integral results.
std::uint64_t parse_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    if (s.find_first_of("eE.") == std::string::npos) {
      std::uint64_t v = std::stoull(s, &pos);
      if (pos != s.size()) throw UsageError("trailing characters in '" + s + "'");
      return v;
    }
    double d = std::stod(s, &pos);
    if (pos != s.size()) throw UsageError("trailing characters in '" + s + "'");
    if (d < 0 || d > 1.8e19 || std::floor(d) != d)
      throw UsageError("'" + s + "' is not a non-negative integer");
    return static_cast<std::uint64_t>(d);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse integer '" + s + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("integer '" + s + "' out of range");
  }
}

void require_prime(std::uint64_t p) {
  if (!sylow::is_prime(p)) throw UsageError("p must be prime");
}

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

struct Common {
  std::string p_str = "3";
  std::string format_str = "text";
  std::string cache_dir;
  unsigned threads = 0;
};

int run_census(const Common& common, const std::string& x_str,
               const std::string& checkpoints_str) {
  std::uint64_t p = parse_count(common.p_str);
  require_prime(p);
  Format fmt = parse_format(common.format_str);
  std::vector<std::uint64_t> xs;
  if (!checkpoints_str.empty()) {
    std::stringstream ss(checkpoints_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(parse_count(tok));
  } else {
    xs.push_back(parse_count(x_str));
  }
  if (fmt == Format::Csv) std::cout << sylow::csv_header_census() << "\n";
  for (std::uint64_t x : xs) {
    if (x == 0) throw UsageError("x must be >= 1");
    sylow::CensusReport rep = sylow::census(p, x);
    switch (fmt) {
      case Format::Json:
        std::cout << sylow::to_json(rep) << "\n";
        break;
      case Format::Csv:
        std::cout << sylow::to_csv_row(rep) << "\n";
        break;
      case Format::Text:
        std::cout << "p=" << rep.p << " x=" << rep.x
                  << " beta_s=" << rep.beta_s << " alpha=" << rep.alpha
                  << " ratio=" << rep.ratio << "\n";
        break;
    }
  }
  return kExitOk;
}

int run_constants(const Common& common, const std::string& q_str,
                  const std::string& table_str) {
  std::uint64_t p = parse_count(common.p_str);
  require_prime(p);
  if (p < 3) throw UsageError("constants require an odd prime p");
  Format fmt = parse_format(common.format_str);
  std::vector<std::uint64_t> qs;
  if (!table_str.empty()) {
    std::stringstream ss(table_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) qs.push_back(parse_count(tok));
  } else {
    qs.push_back(parse_count(q_str));
  }
  if (fmt == Format::Csv) std::cout << sylow::csv_header_constants() << "\n";
  for (std::uint64_t Q : qs) {
    sylow::ConstantEstimate e = sylow::cp(p, Q);
    switch (fmt) {
      case Format::Json:
        std::cout << sylow::to_json(e) << "\n";
        break;
      case Format::Csv:
        std::cout << sylow::to_csv_row(e) << "\n";
        break;
      case Format::Text:
        std::cout << "p=" << e.p << " Q=" << e.prime_bound_Q
                  << " C_p=" << e.C_p << " hp_sum=" << e.hp_sum
                  << " c_p=" << e.c_p << "\n";
        break;
    }
  }
  return kExitOk;
}

int run_sym_index(const Common& common, const std::string& n_str) {
  std::uint64_t p = parse_count(common.p_str);
  require_prime(p);
  std::uint64_t n = parse_count(n_str);
  if (n == 0) throw UsageError("n must be >= 1");
  sylow::SymSylowRecord rec = sylow::sym_sylow_index(n, p);
  Format fmt = parse_format(common.format_str);
  if (fmt == Format::Json) {
    nlohmann::json j{{"n", rec.n},
                     {"p", rec.p},
                     {"normalizer_order", rec.normalizer_order.to_string()},
                     {"index", rec.index.to_string()},
                     {"lower_bound_holds", rec.lower_bound_holds},
                     {"p_bound_holds", rec.p_bound_holds}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << rec.n << " p=" << rec.p
              << " normalizer=" << rec.normalizer_order
              << " index=" << rec.index << "\n";
  }
  return kExitOk;
}

int run_catalog(const Common& common, const std::string& limit_str,
                const std::string& family) {
  std::uint64_t p = parse_count(common.p_str);
  require_prime(p);
  if (p < 3) throw UsageError("catalog requires an odd prime p");
  std::uint64_t limit = parse_count(limit_str);
  if (limit == 0) throw UsageError("limit must be >= 1");
  if (family != "alt" && family != "psl2" && family != "all")
    throw UsageError("family must be alt, psl2 or all");
  if (family == "alt" || family == "all")
    for (const auto& d : sylow::alt_catalog(p, limit))
      std::cout << sylow::to_jsonl(d) << "\n";
  if (family == "psl2" || family == "all")
    for (const auto& d : sylow::psl2_catalog(p, limit))
      std::cout << sylow::to_jsonl(d) << "\n";
  return kExitOk;
}

int run_closure(const std::string& gens_str, const std::string& limit_str,
                bool json_sidecar) {
  std::uint64_t limit = parse_count(limit_str);
  if (limit == 0) throw UsageError("limit must be >= 1");
  std::vector<std::uint64_t> gens;
  if (!gens_str.empty()) {
    std::stringstream ss(gens_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::uint64_t g = parse_count(tok);
      if (g < 2) throw UsageError("generators must be >= 2");
      gens.push_back(g);
    }
  }
  std::vector<std::uint64_t> closure = sylow::semigroup_closure(gens, limit);
  for (std::uint64_t b : closure) std::cout << b << "\n";
  if (json_sidecar) {
    sylow::TailSums sums = sylow::tail_and_reciprocal_sums(closure, limit);
    nlohmann::json j{{"generators", gens},
                     {"limit", limit},
                     {"size", closure.size()},
                     {"reciprocal_sum", sums.reciprocal_sum},
                     {"tail_sum", sums.tail}};
    std::cerr << j.dump() << "\n";
  }
  return kExitOk;
}

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

SuiteResult suite_convolution(std::uint64_t p, std::uint64_t limit) {
  sylow::ConvolutionCheck chk = sylow::convolution_identity_check(p, limit);
  std::string detail = std::to_string(chk.mismatches) + " mismatches over n <= " +
                       std::to_string(limit);
  if (chk.first_mismatch)
    detail += ", first at n = " + std::to_string(*chk.first_mismatch);
  return {"convolution", chk.mismatches == 0, detail};
}

SuiteResult suite_bprime(std::uint64_t limit) {
  sylow::BBprimeReport rep = sylow::compare_B_Bprime(limit);
  bool pass = rep.b_subset_bprime && rep.difference_all_multiples_of_3;
  // triple agreement on the 3-coprime slice: product criterion vs
  // factorization criterion vs witness search
  std::uint64_t witness_checked = std::min<std::uint64_t>(limit, 20000);
  for (std::uint64_t n = 1; n <= witness_checked && pass; ++n) {
    if (n % 3 == 0) continue;
    bool by_factors = sylow::bprime3_criterion(sylow::factorize(n));
    bool by_witness = sylow::represent_x2_3y2(n).has_value();
    if (by_factors != by_witness) pass = false;
  }
  return {"bprime",
          pass,
          "|B|=" + std::to_string(rep.b_count) +
              " |B'|=" + std::to_string(rep.bprime_count) +
              " subset=" + (rep.b_subset_bprime ? "yes" : "no")};
}

SuiteResult suite_sym() {
  struct Case {
    unsigned n, p;
  };
  bool pass = true;
  std::string detail;
  for (Case c : {Case{3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 3}, {5, 5}, {7, 7}}) {
    std::uint64_t brute = sylow::oracle::sym_sylow_count(c.n, c.p);
    std::uint64_t formula = sylow::sym_sylow_index(c.n, c.p).index.to_u64();
    if (brute != formula) {
      pass = false;
      detail += " (" + std::to_string(c.n) + "," + std::to_string(c.p) +
                "): formula " + std::to_string(formula) + " != brute " +
                std::to_string(brute);
    }
  }
  if (pass) detail = "formula matches brute force on all checked (n,p)";
  return {"sym", pass, detail};
}

SuiteResult suite_psl2() {
  bool pass = true;
  std::string detail;
  for (unsigned q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    std::uint64_t order =
        static_cast<std::uint64_t>(q) * (q - 1) * (q + 1) / (q % 2 ? 2 : 1);
    for (unsigned p = 3; p <= q + 1; p += 2) {
      if (!sylow::is_prime(p) || order % p != 0) continue;
      std::uint64_t brute = sylow::oracle::psl2_sylow_count(q, p);
      std::uint64_t formula =
          sylow::psl2_sylow_count(q, p).sylow_count.to_u64();
      if (brute != formula) {
        pass = false;
        detail += " (q=" + std::to_string(q) + ",p=" + std::to_string(p) +
                  "): formula " + std::to_string(formula) + " != brute " +
                  std::to_string(brute);
      }
    }
  }
  if (pass) detail = "formula matches brute force for q in {5,7,8,9,11,13}";
  return {"psl2", pass, detail};
}

SuiteResult suite_lemma(std::uint64_t limit) {
  bool pass = true;
  std::string detail;
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    for (std::uint64_t x = 1000; x <= limit; x *= 10) {
      sylow::LemmaAltReport rep = sylow::verify_lemma_alt(p, x);
      if (!rep.pass) {
        pass = false;
        detail += " (p=" + std::to_string(p) + ",x=" + std::to_string(x) +
                  "): max n " + std::to_string(rep.max_admissible_n) +
                  " > bound";
      }
    }
  }
  if (pass) detail = "max admissible n <= e log x for p in {3,5,7}";
  return {"lemma", pass, detail};
}

SuiteResult suite_congruence(std::uint64_t limit) {
  bool pass = true;
  std::string detail = "index = 1 (mod p) and normalizer <= p^n";
  std::uint64_t n_max = std::min<std::uint64_t>(limit, 400);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t n = 1; n <= n_max && pass; ++n) {
      sylow::SymSylowRecord rec = sylow::sym_sylow_index(n, p);
      if (rec.index.mod_u64(p) != 1 || !rec.p_bound_holds ||
          !rec.lower_bound_holds) {
        pass = false;
        detail = "violation at n=" + std::to_string(n) +
                 " p=" + std::to_string(p);
      }
    }
  }
  for (std::uint64_t q = 4; q <= 101 && pass; ++q) {
    if (!sylow::prime_power_form(q)) continue;
    for (std::uint64_t p = 3; p <= 101 && pass; p += 2) {
      if (!sylow::is_prime(p)) continue;
      auto d = sylow::psl2_sylow_count(q, p);
      if (d.sylow_count.mod_u64(p) != 1 ||
          !d.sylow_count.divides(d.group_order)) {
        pass = false;
        detail = "PSL2 violation at q=" + std::to_string(q) +
                 " p=" + std::to_string(p);
      }
    }
  }
  return {"congruence", pass, detail};
}

int run_verify(const Common& common, const std::string& suite,
               const std::string& limit_str) {
  std::uint64_t p = parse_count(common.p_str);
  require_prime(p);
  std::uint64_t limit = parse_count(limit_str);
  if (limit == 0) throw UsageError("limit must be >= 1");
  std::vector<SuiteResult> results;
  if (suite == "convolution" || suite == "all")
    results.push_back(suite_convolution(p, std::min<std::uint64_t>(limit, 1000000)));
  if (suite == "bprime" || suite == "all")
    results.push_back(suite_bprime(std::min<std::uint64_t>(limit, 100000)));
  if (suite == "sym" || suite == "all") results.push_back(suite_sym());
  if (suite == "psl2" || suite == "all") results.push_back(suite_psl2());
  if (suite == "lemma" || suite == "all")
    results.push_back(suite_lemma(std::min<std::uint64_t>(limit, 1000000000ULL)));
  if (suite == "congruence" || suite == "all")
    results.push_back(suite_congruence(limit));
  if (results.empty())
    throw UsageError("unknown suite '" + suite +
                     "' (convolution, bprime, sym, psl2, lemma, congruence, all)");
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": "
              << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow p-number census, constants and catalog toolkit"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--p", common.p_str, "prime p")->capture_default_str();
  app.add_option("--format", common.format_str, "json, csv or text")
      ->capture_default_str();
  app.add_option("--cache-dir", common.cache_dir,
                 "prime segment cache directory (or SYLOW_CACHE_DIR)");
  app.add_option("--threads", common.threads, "thread budget (0 = auto)");

  std::string x_str = "1000", checkpoints_str, q_str = "1000000",
              table_str, n_str = "1", limit_str = "1000000",
              family = "all", gens_str, suite = "all";
  bool json_sidecar = false;

  auto* census_cmd = app.add_subcommand("census", "count beta_s(p,x) and alpha(p,x)");
  census_cmd->add_option("--x", x_str, "upper bound (1e8 accepted)");
  census_cmd->add_option("--checkpoints", checkpoints_str,
                         "comma-separated x values");

  auto* constants_cmd =
      app.add_subcommand("constants", "evaluate C_p, sum h_p(n)/n and c_p");
  constants_cmd->add_option("--Q", q_str, "prime truncation bound");
  constants_cmd->add_option("--table", table_str,
                            "comma-separated Q values for a convergence table");

  auto* sym_cmd =
      app.add_subcommand("sym-index", "exact Sylow count of Sym(n)/Alt(n)");
  sym_cmd->add_option("--n", n_str, "degree");

  auto* catalog_cmd =
      app.add_subcommand("catalog", "simple-group Sylow numbers (JSON lines)");
  catalog_cmd->add_option("--limit", limit_str, "largest count to include");
  catalog_cmd->add_option("--family", family, "alt, psl2 or all");

  auto* closure_cmd =
      app.add_subcommand("closure", "multiplicative semigroup closure");
  closure_cmd->add_option("--gen", gens_str, "comma-separated generators");
  closure_cmd->add_option("--limit", limit_str, "closure bound");
  closure_cmd->add_flag("--json", json_sidecar,
                        "emit a JSON summary on stderr");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite,
                         "convolution, bprime, sym, psl2, lemma, congruence, all");
  verify_cmd->add_option("--limit", limit_str, "suite size bound");

  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (!common.cache_dir.empty())
    setenv("SYLOW_CACHE_DIR", common.cache_dir.c_str(), 1);
  sylow::set_default_threads(common.threads);

  try {
    if (census_cmd->parsed()) return run_census(common, x_str, checkpoints_str);
    if (constants_cmd->parsed()) return run_constants(common, q_str, table_str);
    if (sym_cmd->parsed()) return run_sym_index(common, n_str);
    if (catalog_cmd->parsed()) return run_catalog(common, limit_str, family);
    if (closure_cmd->parsed())
      return run_closure(gens_str, limit_str, json_sidecar);
    if (verify_cmd->parsed()) return run_verify(common, suite, limit_str);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sylow::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
