// qpchar -- compute principally specialized characters of Verma and
// standard affine sl2 modules, list quasi-particle basis monomials, and run
// the Rogers-Ramanujan-type identity verification suites.
//
// Exit codes: 0 success / all checks match, 1 verification mismatch,
// 2 usage or configuration error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qpchar/qpchar.hpp"
#include "qpchar/serialize.hpp"

namespace {

using namespace qpchar;

constexpr int kListSafetyLimit = 40;

struct CliConfig {
  int order = 60;
  std::string format = "text"; // text | json | csv
  std::optional<std::string> cache_dir;
  bool oracle = false;
};

// ---------------------------------------------------------------------------
// series cache: one JSON file per (operation, canonical params, order) key
// ---------------------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_file_name(const std::string& key) {
  std::string name;
  for (char c : key)
    name += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')
                ? c
                : '-';
  return name + ".json";
}

std::optional<TruncatedSeries> cache_load(const std::string& dir, const std::string& key) {
  const auto path = std::filesystem::path(dir) / cache_file_name(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    return series_from_json(j);
  } catch (const std::exception&) {
    return std::nullopt; // unreadable entries are treated as misses
  }
}

void cache_store(const std::string& dir, const std::string& key, const TruncatedSeries& s) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = std::filesystem::path(dir) / cache_file_name(key);
  std::ofstream out(path);
  if (out) out << series_to_json(s).dump() << "\n";
}

// ---------------------------------------------------------------------------
// char command
// ---------------------------------------------------------------------------

TruncatedSeries compute_route(const std::optional<HighestWeight>& w, const std::string& method,
                              const CliConfig& cfg) {
  if (!w) {
    if (method == "product") return verma_char(cfg.order);
    if (method == "sum") return verma_char_sum(cfg.order);
    return verma_char_enumerated(cfg.order);
  }
  if (method == "product") return standard_char_product(*w, cfg.order);
  if (method == "sum") return standard_char_sum(*w, cfg.order, cfg.oracle);
  return standard_char_enumerated(*w, cfg.order);
}

std::string char_cache_key(const std::optional<HighestWeight>& w, const std::string& method,
                           int order) {
  std::string key = "char:";
  key += w ? "standard:k0=" + std::to_string(w->k0) + ":k1=" + std::to_string(w->k1) : "verma";
  return key + ":method=" + method + ":order=" + std::to_string(order);
}

TruncatedSeries cached_route(const std::optional<HighestWeight>& w, const std::string& method,
                             const CliConfig& cfg) {
  if (!cfg.cache_dir) return compute_route(w, method, cfg);
  const std::string key = char_cache_key(w, method, cfg.order);
  if (auto hit = cache_load(*cfg.cache_dir, key)) {
    if (hit->order() == cfg.order) {
      if (cfg.oracle) {
        // probe one key-determined coefficient against a clean recomputation
        const auto fresh = compute_route(w, method, cfg);
        const int probe = static_cast<int>(fnv1a(key) % (static_cast<std::uint64_t>(cfg.order) + 1));
        if (hit->coefficient(probe) != fresh.coefficient(probe))
          throw std::logic_error("cache entry '" + key + "' is corrupt at n=" +
                                 std::to_string(probe) + " (cached " +
                                 hit->coefficient(probe).str() + ", recomputed " +
                                 fresh.coefficient(probe).str() + ")");
      }
      return *hit;
    }
  }
  const auto fresh = compute_route(w, method, cfg);
  cache_store(*cfg.cache_dir, key, fresh);
  return fresh;
}

void emit_series_text(const TruncatedSeries& s, std::ostream& os) {
  for (int n = 0; n <= s.order(); ++n) os << n << "\t" << s.coefficient(n).str() << "\n";
}

// Brute-force cross-checks behind --oracle: all three routes must agree, and
// at small orders the explicit basis listing must reproduce the coefficients.
void oracle_check_char(const std::optional<HighestWeight>& w, const CliConfig& cfg) {
  const auto product = compute_route(w, "product", cfg);
  const auto sum = compute_route(w, "sum", cfg);
  const auto enumerated = compute_route(w, "enumerate", cfg);
  if (!(product == sum) || !(product == enumerated))
    throw std::logic_error("oracle: character routes disagree");

  const int depth = std::min(cfg.order, 18);
  const ModuleSpec spec = w ? ModuleSpec::standard(*w) : ModuleSpec::verma();
  std::vector<Integer> counts(static_cast<std::size_t>(depth) + 1);
  for (const auto& m : basis_enumerate(spec, depth))
    counts[static_cast<std::size_t>(m.exponent())] += 1;
  for (int n = 0; n <= depth; ++n)
    if (counts[static_cast<std::size_t>(n)] != product.coefficient(n))
      throw std::logic_error("oracle: basis listing disagrees with character at n=" +
                             std::to_string(n));
}

int run_char(const std::optional<HighestWeight>& w, const std::string& method,
             const CliConfig& cfg) {
  if (cfg.oracle) oracle_check_char(w, cfg);

  if (method != "all") {
    const auto s = cached_route(w, method, cfg);
    if (cfg.format == "json")
      std::cout << series_to_json(s).dump() << "\n";
    else if (cfg.format == "csv")
      std::cout << series_to_csv(s);
    else
      emit_series_text(s, std::cout);
    return 0;
  }

  const auto product = cached_route(w, "product", cfg);
  const auto sum = cached_route(w, "sum", cfg);
  const auto enumerated = cached_route(w, "enumerate", cfg);
  const bool agree = product == sum && product == enumerated;

  if (cfg.format == "json") {
    Json j;
    j["order"] = cfg.order;
    j["routes"]["product"] = series_to_json(product);
    j["routes"]["sum"] = series_to_json(sum);
    j["routes"]["enumerated"] = series_to_json(enumerated);
    j["agreement"] = agree ? "match" : "mismatch";
    std::cout << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "n,product,sum,enumerated\n";
    for (int n = 0; n <= cfg.order; ++n)
      std::cout << n << "," << product.coefficient(n).str() << "," << sum.coefficient(n).str()
                << "," << enumerated.coefficient(n).str() << "\n";
  } else {
    std::cout << "# product\n";
    emit_series_text(product, std::cout);
    std::cout << "# sum\n";
    emit_series_text(sum, std::cout);
    std::cout << "# enumerated\n";
    emit_series_text(enumerated, std::cout);
    std::cout << "agreement: " << (agree ? "match" : "mismatch") << "\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// list command
// ---------------------------------------------------------------------------

int run_list(const ModuleSpec& spec, int max_exponent, const CliConfig& cfg) {
  if (max_exponent > kListSafetyLimit)
    throw std::invalid_argument("list: max exponent " + std::to_string(max_exponent) +
                                " exceeds the safety limit " +
                                std::to_string(kListSafetyLimit) +
                                "; use `char` for coefficient tables at large orders");
  const auto basis = basis_enumerate(spec, max_exponent);

  std::vector<std::vector<const QPMonomial*>> by_exponent(
      static_cast<std::size_t>(max_exponent) + 1);
  for (const auto& m : basis) by_exponent[static_cast<std::size_t>(m.exponent())].push_back(&m);

  if (cfg.format == "json") {
    Json j;
    if (spec.is_standard()) {
      j["module"]["k0"] = spec.weight().k0;
      j["module"]["k1"] = spec.weight().k1;
    } else {
      j["module"] = "verma";
    }
    j["max_exponent"] = max_exponent;
    Json levels = Json::array();
    for (int e = 0; e <= max_exponent; ++e) {
      Json level;
      level["exponent"] = e;
      level["count"] = by_exponent[static_cast<std::size_t>(e)].size();
      Json monos = Json::array();
      for (const auto* m : by_exponent[static_cast<std::size_t>(e)])
        monos.push_back(monomial_to_json(*m));
      level["monomials"] = std::move(monos);
      levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    std::cout << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "exponent,monomial\n";
    for (const auto& m : basis) std::cout << m.exponent() << "," << m.to_string() << "\n";
  } else {
    for (int e = 0; e <= max_exponent; ++e) {
      const auto& level = by_exponent[static_cast<std::size_t>(e)];
      std::cout << "# exponent " << e << ": " << level.size()
                << (level.size() == 1 ? " monomial\n" : " monomials\n");
      for (const auto* m : level) std::cout << m->to_string() << "\n";
    }
    std::cout << "# total: " << basis.size() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify command
// ---------------------------------------------------------------------------

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << ms;
  return os.str();
}

// RFC 4180 quoting; labels contain commas.
std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_verify(const SuiteConfig& suite, const CliConfig& cfg) {
  const auto reports = run_suite(suite);
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.ok();

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "label,status,order,first_mismatch,lhs,rhs\n";
    for (const auto& r : reports) {
      std::cout << csv_quote(r.label) << "," << (r.ok() ? "match" : "mismatch") << ","
                << r.order << ",";
      if (r.first_mismatch) std::cout << *r.first_mismatch;
      std::cout << ",";
      if (r.lhs) std::cout << r.lhs->str();
      std::cout << ",";
      if (r.rhs) std::cout << r.rhs->str();
      std::cout << "\n";
    }
  } else {
    for (const auto& r : reports) {
      if (r.ok()) {
        std::cout << "[ ok ] " << r.label << " (order " << r.order << ", "
                  << format_ms(r.elapsed_ms) << " ms)\n";
      } else {
        std::cout << "[FAIL] " << r.label << ": first mismatch at n=";
        if (r.first_mismatch) std::cout << *r.first_mismatch;
        std::cout << ", lhs=" << (r.lhs ? r.lhs->str() : "?")
                  << ", rhs=" << (r.rhs ? r.rhs->str() : "?") << "\n";
      }
    }
    std::cout << (all_ok ? "all checks match" : "MISMATCH detected") << " (" << reports.size()
              << " reports)\n";
  }
  return all_ok ? 0 : 1;
}

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--order", cfg.order, "truncation order N (default 60)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", cfg.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--cache-dir", cfg.cache_dir,
                  "series cache directory (env QPCHAR_CACHE is the fallback)");
  cmd->add_flag("--oracle", cfg.oracle, "force brute-force cross-checks");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters and Rogers-Ramanujan-type identity checks for affine sl2"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("QPCHAR_CACHE")) cfg.cache_dir = std::string(env);

  // --- char ---------------------------------------------------------------
  auto* char_cmd = app.add_subcommand("char", "print a character coefficient table");
  std::string target;
  char_cmd->add_option("target", target, "verma | standard")
      ->required()
      ->check(CLI::IsMember({"verma", "standard"}));
  int k0 = -1, k1 = -1;
  char_cmd->add_option("--k0", k0, "k0 of the highest weight (standard target)");
  char_cmd->add_option("--k1", k1, "k1 of the highest weight (standard target)");
  std::string method = "product";
  char_cmd->add_option("--method", method, "product | sum | enumerate | all")
      ->check(CLI::IsMember({"product", "sum", "enumerate", "all"}));
  add_common_options(char_cmd, cfg);

  // --- list ---------------------------------------------------------------
  auto* list_cmd = app.add_subcommand("list", "list basis monomials up to an exponent");
  bool list_verma = false;
  int list_k0 = -1, list_k1 = -1, max_exponent = 0;
  list_cmd->add_flag("--verma", list_verma, "list the Verma module basis");
  list_cmd->add_option("--k0", list_k0, "k0 of the highest weight");
  list_cmd->add_option("--k1", list_k1, "k1 of the highest weight");
  list_cmd->add_option("--max-exponent", max_exponent, "largest exponent to list")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common_options(list_cmd, cfg);

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  std::string selector;
  verify_cmd
      ->add_option("selector", selector,
                   "grr | module | verma | complement | section8 | liealg | oracle | all")
      ->required()
      ->check(CLI::IsMember(
          {"grr", "module", "verma", "complement", "section8", "liealg", "oracle", "all"}));
  int grr_l = -1, grr_s = -1, grr_r = -1;
  verify_cmd->add_option("--l", grr_l, "grr family: l");
  verify_cmd->add_option("--s", grr_s, "grr family: s");
  verify_cmd->add_option("--r", grr_r, "grr family: r");
  int ver_k0 = -1, ver_k1 = -1;
  verify_cmd->add_option("--k0", ver_k0, "restrict module/complement checks to one weight");
  verify_cmd->add_option("--k1", ver_k1, "restrict module/complement checks to one weight");
  int max_level = 7;
  verify_cmd->add_option("--max-level", max_level, "largest level k for module sweeps");
  add_common_options(verify_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (char_cmd->parsed()) {
      std::optional<HighestWeight> w;
      if (target == "standard") {
        if (k0 < 0 || k1 < 0)
          throw std::invalid_argument("char standard requires nonnegative --k0 and --k1");
        w = HighestWeight(k0, k1);
        ModuleSpec::standard(*w); // rejects level 0
      } else if (k0 >= 0 || k1 >= 0) {
        throw std::invalid_argument("char verma takes no --k0/--k1");
      }
      return run_char(w, method, cfg);
    }

    if (list_cmd->parsed()) {
      if (list_verma == (list_k0 >= 0 || list_k1 >= 0))
        throw std::invalid_argument("list requires either --verma or --k0/--k1");
      ModuleSpec spec = ModuleSpec::verma();
      if (!list_verma) {
        if (list_k0 < 0 || list_k1 < 0)
          throw std::invalid_argument("list requires both --k0 and --k1");
        spec = ModuleSpec::standard(HighestWeight(list_k0, list_k1));
      }
      return run_list(spec, max_exponent, cfg);
    }

    // verify
    SuiteConfig suite;
    suite.select = selector == "all" ? SuiteConfig::known_selectors()
                                     : std::set<std::string>{selector};
    if (verify_cmd->count("--order") > 0) {
      suite.order = cfg.order;
      suite.grr_order = cfg.order;
      suite.section8_order = cfg.order;
    }
    suite.max_level = max_level;
    const int grr_given = (grr_l >= 0) + (grr_s >= 0) + (grr_r >= 0);
    if (grr_given == 3)
      suite.grr_point = GRRParams(grr_l, grr_s, grr_r);
    else if (grr_given != 0)
      throw std::invalid_argument("verify grr needs all of --l, --s, --r (or none)");
    const int w_given = (ver_k0 >= 0) + (ver_k1 >= 0);
    if (w_given == 2)
      suite.weight_point = HighestWeight(ver_k0, ver_k1);
    else if (w_given != 0)
      throw std::invalid_argument("verify needs both --k0 and --k1 (or neither)");
    return run_verify(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
