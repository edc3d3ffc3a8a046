#include "siegelchar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "siegelchar/character.hpp"
#include "siegelchar/error.hpp"

namespace siegelchar::cli {
namespace {

using json_io::Json;

constexpr std::size_t kMaxDiagnostics = 10;

void note(SuiteResult& result, std::string message) {
  if (result.diagnostics.size() < kMaxDiagnostics) result.diagnostics.push_back(std::move(message));
}

void record(SuiteResult& result, bool ok, const std::function<std::string()>& describe) {
  if (ok) {
    ++result.passed;
  } else {
    ++result.failed;
    note(result, describe());
  }
}

std::size_t random_length(Engine& engine, std::size_t max_length) {
  return max_length == 0 ? 0 : 1 + draw_below(engine, max_length);
}

std::string word_text(const GeneratorWord& w) { return json_io::to_json(w).dump(); }

std::string matrix_text(const SymplecticMatrix& m) { return json_io::to_json(m).dump(); }

Characteristic random_characteristic(std::size_t g, Engine& engine, long spread) {
  IntVector flat(2 * g);
  for (auto& x : flat)
    x = static_cast<long>(draw_below(engine, static_cast<std::uint64_t>(2 * spread + 1))) - spread;
  return Characteristic::from_flat(flat);
}

Characteristic shifted(const Characteristic& m, const Characteristic& k) {
  IntVector flat = m.flat();
  const IntVector shift = k.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += 2 * shift[i];
  return Characteristic::from_flat(flat);
}

std::size_t thread_cap() {
  if (const char* env = std::getenv("SIEGEL_CHAR_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<std::size_t>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return Json::parse(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot open " + path);
  return Json::parse(file);
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot write " + path);
  file << text;
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  write_text(j.dump(2) + "\n", path, out);
}

Characteristic parse_characteristic(const std::string& text) {
  IntVector flat;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0)
      throw Error(ErrorKind::Parse, "bad characteristic entry '" + item + "'");
    flat.push_back(x);
  }
  return Characteristic::from_flat(flat);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::BadShape:
      return kParseError;
    case ErrorKind::InterpolationInconsistent:
      return kInternalMismatch;
    default:
      return kPreconditionFailed;
  }
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.g == 0) throw Error(ErrorKind::Parse, "--g must be at least 1");
  if (config.trials == 0) throw Error(ErrorKind::Parse, "--trials must be at least 1");
  if (!(config.tol > 0.0)) throw Error(ErrorKind::Parse, "--tol must be positive");
  if (!(config.tail_tol > 0.0)) throw Error(ErrorKind::Parse, "--tail-tol must be positive");
}

Json SuiteResult::to_json() const {
  return {{"name", name},       {"passed", passed},          {"failed", failed},
          {"ok", ok()},         {"diagnostics", diagnostics}, {"detail", detail}};
}

SuiteResult suite_homomorphism(const RunConfig& config) {
  SuiteResult result;
  result.name = "homomorphism";
  Engine engine(config.seed + 1);
  const auto chars = enumerate_all_mod2(config.g);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto w1 = random_word(config.g, random_length(engine, config.word_length), engine);
    const auto w2 = random_word(config.g, random_length(engine, config.word_length), engine);
    const auto m1 = word_to_matrix(w1);
    const auto m2 = word_to_matrix(w2);
    const auto product = m1 * m2;
    bool ok = true;
    for (const auto& m : chars) ok = ok && chi(m, product) == chi(m, m1) * chi(m, m2);
    record(result, ok, [&] { return "chi not multiplicative on " + word_text(w1) + " * " + word_text(w2); });
  }
  result.detail = {{"characteristics_per_pair", chars.size()}};
  return result;
}

SuiteResult suite_triviality(const RunConfig& config) {
  SuiteResult result;
  result.name = "triviality";
  Engine engine(config.seed + 2);
  const auto chars = enumerate_all_mod2(config.g);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto m = random_igusa48(config.g, engine);
    bool ok = is_igusa48(m);
    for (const auto& ch : chars) ok = ok && chi(ch, m).is_one();
    record(result, ok, [&] { return "chi != 1 on Gamma(4,8) element " + matrix_text(m); });
  }
  return result;
}

SuiteResult suite_numeric(const RunConfig& config) {
  SuiteResult result;
  result.name = "numeric";
  Engine engine(config.seed + 3);
  const std::size_t cap = std::min(config.word_length, kNumericWordCap);
  const auto evens = enumerate_even_mod2(config.g);
  double worst_character = 0.0;
  double worst_product = 0.0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto word = random_word(config.g, random_length(engine, cap), engine);
    const auto m = word_to_matrix(word);
    const auto tau = random_siegel_point(config.g, engine);
    const auto& first = evens[draw_below(engine, evens.size())];
    const auto& second = evens[draw_below(engine, evens.size())];
    try {
      const auto character = verify_character(m, tau, config.tol, config.tail_tol);
      const auto product = verify_igusa_product(first, second, m, tau, config.tol, config.tail_tol);
      worst_character = std::max(worst_character, character.max_deviation);
      worst_product = std::max(worst_product, product.max_deviation);
      record(result, character.passed && product.passed, [&] {
        std::ostringstream os;
        os << "word " << word_text(word) << ": character deviation " << character.max_deviation
           << ", product deviation " << product.max_deviation;
        return os.str();
      });
    } catch (const Error& e) {
      record(result, false, [&] { return "word " + word_text(word) + ": " + e.what(); });
    }
  }
  result.detail = {{"max_deviation_character", worst_character},
                   {"max_deviation_product", worst_product},
                   {"word_length_cap", cap}};
  if (!result.ok() && config.tol <= config.tail_tol) {
    std::ostringstream os;
    os << "TooTight: tol " << config.tol << " is not above tail_tol " << config.tail_tol
       << "; truncated binary64 theta sums cannot resolve it";
    result.diagnostics.insert(result.diagnostics.begin(), os.str());
  }
  return result;
}

SuiteResult suite_equivalence(const RunConfig& config) {
  SuiteResult result;
  result.name = "equivalence";
  Engine engine(config.seed + 4);
  std::size_t pool = 0;
  std::size_t igusa = 0;
  std::size_t sign_twisted = 0;
  auto check = [&](const SymplecticMatrix& m, const char* source) {
    ++pool;
    const bool constant = is_chi_constant_over_even(m);
    const bool member = is_igusa48(m);
    igusa += member ? 1 : 0;
    const bool twisted = !member && is_igusa48_up_to_sign(m);
    sign_twisted += (constant != member && twisted) ? 1 : 0;
    record(result, constant == member, [&] {
      return std::string(source) + " element " + matrix_text(m) + ": chi constant = " +
             (constant ? "true" : "false") + ", in Gamma(4,8) = " + (member ? "true" : "false") +
             (twisted ? " (-M is in Gamma(4,8))" : "");
    });
  };
  const auto alphabet = generator_alphabet(config.g);
  for (std::size_t t = 0; t < config.trials; ++t) {
    check(word_to_matrix(random_word(config.g, random_length(engine, config.word_length), engine)),
          "word");
    check(random_igusa48(config.g, engine), "Gamma(4,8)");
    // B_ii^2 or C_ii^2 times a Gamma(4,8) element: = I mod 4 with a diagonal entry 4 mod 8
    const int i = 1 + static_cast<int>(draw_below(engine, config.g));
    const auto kind = (engine() & 1U) ? GeneratorKind::B : GeneratorKind::C;
    const long sign = (engine() & 1U) ? 1 : -1;
    check(power(generator(kind, i, i, config.g), 2 * sign) * random_igusa48(config.g, engine),
          "near-miss");
  }
  result.detail = {{"pool_size", pool},
                   {"igusa48_members", igusa},
                   {"discrepancies_with_minus_m_in_igusa48", sign_twisted}};
  return result;
}

SuiteResult suite_lemmas(const RunConfig& config) {
  SuiteResult result;
  result.name = "lemmas";
  Engine engine(config.seed + 5);
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto w = random_word(config.g, random_length(engine, config.word_length), engine);
    const auto wp = random_word(config.g, random_length(engine, config.word_length), engine);
    const auto m = word_to_matrix(w);
    const auto mp = word_to_matrix(wp);
    const auto ch = random_characteristic(config.g, engine, 4);
    const auto k = random_characteristic(config.g, engine, 3);
    const auto phi = phi_level2(ch, m);
    const bool shift_ok = phi_level2(shifted(ch, k), m) == phi;
    const bool action_ok = phi_level2(act(mp, ch), m) == phi;
    const bool full_ok = phi_full(ch, m) == phi;
    const bool chi_ok = chi(shifted(ch, k), m) == chi(ch, m);
    record(result, shift_ok && action_ok && full_ok && chi_ok, [&] {
      std::ostringstream os;
      os << "m=" << ch << " M=" << word_text(w) << ": shift " << shift_ok << ", action "
         << action_ok << ", full " << full_ok << ", chi mod 2 " << chi_ok;
      return os.str();
    });
  }
  return result;
}

Json run_verify(const RunConfig& config) {
  validate(config);
  const std::vector<std::pair<std::string, SuiteResult (*)(const RunConfig&)>> suites{
      {"A", &suite_homomorphism}, {"B", &suite_triviality}, {"C", &suite_numeric},
      {"D", &suite_equivalence},  {"E", &suite_lemmas}};
  std::vector<SuiteResult> results(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < suites.size(); k = next++) {
      try {
        results[k] = suites[k].second(config);
      } catch (const std::exception& e) {
        results[k].name = suites[k].first;
        results[k].failed = 1;
        results[k].diagnostics.push_back(std::string("suite aborted: ") + e.what());
      }
    }
  };
  const std::size_t threads = std::min(thread_cap(), suites.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  Json report = {{"command", "verify"},
                 {"config",
                  {{"g", config.g},
                   {"seed", config.seed},
                   {"trials", config.trials},
                   {"word_length", config.word_length},
                   {"tol", config.tol},
                   {"tail_tol", config.tail_tol},
                   {"prng", "mt19937_64"}}}};
  Json by_name = Json::object();
  bool ok = true;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    by_name[suites[k].first] = results[k].to_json();
    ok = ok && results[k].ok();
  }
  report["suites"] = std::move(by_name);
  report["ok"] = ok;
  if (config.timestamp) report["timestamp"] = utc_timestamp();
  return report;
}

Json generator_table(std::size_t g) {
  Json rows = Json::array();
  bool all_match = true;
  const auto chars = enumerate_all_mod2(g);
  for (const auto& letter : generator_alphabet(g)) {
    const auto m = generator(letter.kind, letter.i, letter.j, g);
    for (const auto& ch : chars) {
      const EighthRoot by_formula = chi(ch, m);
      const EighthRoot closed = chi_generator(ch, letter.kind, letter.i, letter.j);
      const bool match = by_formula == closed;
      all_match = all_match && match;
      rows.push_back({{"generator", generator_name(letter.kind, letter.i, letter.j)},
                      {"kind", std::string(1, to_char(letter.kind))},
                      {"i", letter.i},
                      {"j", letter.j},
                      {"m", json_io::to_json(ch)},
                      {"chi", by_formula.exponent()},
                      {"closed_form", closed.exponent()},
                      {"value", by_formula.name()},
                      {"match", match}});
    }
  }
  return {{"g", g}, {"rows", std::move(rows)}, {"all_match", all_match}};
}

std::string generator_table_markdown(const Json& table) {
  std::ostringstream os;
  os << "| generator | m | chi (exponent) | closed form (exponent) | value | match |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& row : table.at("rows")) {
    os << "| " << row.at("generator").get<std::string>() << " | " << row.at("m").dump() << " | "
       << row.at("chi").get<int>() << " | " << row.at("closed_form").get<int>() << " | "
       << row.at("value").get<std::string>() << " | "
       << (row.at("match").get<bool>() ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact characters of the level-2 Siegel modular group"};
  app.name("siegel_char");
  app.require_subcommand(1);

  RunConfig config;
  std::string matrix_path;
  std::string char_text;
  std::string output = "-";
  std::size_t length = 8;
  bool markdown = false;
  bool no_timestamp = false;

  auto* chi_cmd = app.add_subcommand("chi", "Evaluate chi_m(M) for M in Gamma_g(2)");
  chi_cmd->add_option("--matrix", matrix_path, "Matrix JSON file, or - for stdin")->required();
  chi_cmd->add_option("--char", char_text, "Characteristic c1,...,c2g")->required();
  chi_cmd->add_option("--output", output);

  auto* table_cmd = app.add_subcommand("table", "Generator value table for g in {1,2,3}");
  table_cmd->add_option("--g", config.g)->required();
  table_cmd->add_flag("--markdown", markdown, "Render a markdown table instead of JSON");
  table_cmd->add_option("--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact and numeric verification suites");
  verify_cmd->add_option("--g", config.g);
  verify_cmd->add_option("--seed", config.seed);
  verify_cmd->add_option("--trials", config.trials);
  verify_cmd->add_option("--word-length", config.word_length);
  verify_cmd->add_option("--tol", config.tol);
  verify_cmd->add_option("--tail-tol", config.tail_tol);
  verify_cmd->add_option("--output", output);
  verify_cmd->add_flag("--no-timestamp", no_timestamp);

  auto* member_cmd = app.add_subcommand("member", "Symplectic and congruence-subgroup membership");
  member_cmd->add_option("--matrix", matrix_path)->required();
  member_cmd->add_option("--output", output);

  auto* random_cmd = app.add_subcommand("random", "Sample a seeded random word over the generators");
  random_cmd->add_option("--g", config.g)->required();
  random_cmd->add_option("--length,--word-length", length);
  random_cmd->add_option("--seed", config.seed);
  random_cmd->add_option("--output", output);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Recover generator exponents modulo the commutator subgroup");
  decompose_cmd->add_option("--matrix", matrix_path)->required();
  decompose_cmd->add_option("--output", output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*chi_cmd) {
      const auto m = json_io::matrix_from_json(read_json(matrix_path, in));
      const auto ch = parse_characteristic(char_text);
      const auto detail = chi_breakdown(ch, m);
      write_json({{"exponent", detail.value.exponent()},
                  {"value", detail.value.name()},
                  {"e", detail.value.formula()},
                  {"phi_mod1", detail.phi.to_string()},
                  {"delta_sign", detail.delta_sign},
                  {"characteristic", json_io::to_json(ch)},
                  {"preimage", json_io::to_json(detail.preimage)}},
                 output, out);
      return kOk;
    }
    if (*table_cmd) {
      if (config.g < 1 || config.g > 3) {
        err << "table supports g in {1, 2, 3}\n";
        return kPreconditionFailed;
      }
      const Json table = generator_table(config.g);
      if (markdown) {
        write_text(generator_table_markdown(table), output, out);
      } else {
        write_json(table, output, out);
      }
      if (!table.at("all_match").get<bool>()) {
        err << "generator table mismatch\n";
        return kInternalMismatch;
      }
      return kOk;
    }
    if (*verify_cmd) {
      config.timestamp = !no_timestamp;
      config.output = output;
      validate(config);
      const Json report = run_verify(config);
      write_json(report, output, out);
      return report.at("ok").get<bool>() ? kOk : kSuiteFailure;
    }
    if (*member_cmd) {
      const IntMatrix raw = json_io::int_matrix_from_json(read_json(matrix_path, in));
      Json result = {{"sp", false}, {"level2", false}, {"level4", false}, {"igusa48", false}};
      if (is_symplectic(raw)) {
        const auto m = make_matrix(raw);
        result = {{"sp", true},
                  {"level2", is_level2(m)},
                  {"level4", is_level4(m)},
                  {"igusa48", is_igusa48(m)}};
      }
      write_json(result, output, out);
      return kOk;
    }
    if (*random_cmd) {
      const auto word = random_word(config.g, length, config.seed);
      write_json({{"seed", config.seed},
                  {"word", json_io::to_json(word)},
                  {"matrix", json_io::to_json(word_to_matrix(word))}},
                 output, out);
      return kOk;
    }
    if (*decompose_cmd) {
      const auto m = json_io::matrix_from_json(read_json(matrix_path, in));
      const auto exponents = extract_abelian_exponents(m);
      Json mismatches = Json::array();
      const auto chars = enumerate_all_mod2(m.degree());
      for (const auto& ch : chars)
        if (theorem34_eval(ch, exponents) != chi(ch, m)) mismatches.push_back(json_io::to_json(ch));
      const bool ok = mismatches.empty();
      write_json({{"exponents", json_io::to_json(exponents)},
                  {"residual_check", ok ? "ok" : "mismatch"},
                  {"checked", chars.size()},
                  {"mismatches", std::move(mismatches)}},
                 output, out);
      return ok ? kOk : kInternalMismatch;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalMismatch;
  }
  return kParseError;
}

}  // namespace siegelchar::cli
