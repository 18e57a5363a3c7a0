#include "weylalt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "weylalt/errors.hpp"
#include "weylalt/lattice.hpp"
#include "weylalt/multiplicity.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt::cli {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------- weight specs

class WeightParser {
 public:
  WeightParser(std::string_view text, const RootSystem& rs) : s_(text), rs_(rs) {}

  RationalVector parse() {
    RationalVector total = rs_.zero();
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end()) {
        if (first) fail("empty weight spec");
        break;
      }
      long sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += Rational(sign) * term();
      first = false;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad weight spec '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  bool consume(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // Unsigned p or p/q.
  std::optional<Rational> number() {
    if (!digit()) return std::nullopt;
    std::string text = digits();
    if (!at_end() && s_[pos_] == '/') {
      ++pos_;
      if (!digit()) fail("expected a denominator");
      text += '/' + digits();
    }
    try {
      return Rational::parse(text);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Rational signed_number() {
    skip_ws();
    long sign = 1;
    if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    auto n = number();
    if (!n) fail("expected a number");
    skip_ws();
    return Rational(sign) * *n;
  }

  RationalVector term() {
    skip_ws();
    const auto factor = number();
    skip_ws();
    if (factor && !at_end() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
    }
    if (at_end() || s_[pos_] == '+' || s_[pos_] == '-') {
      if (!factor) fail("missing term");
      if (!factor->is_zero()) fail("a bare number other than 0 is not a weight");
      return rs_.zero();
    }
    const RationalVector v = atom();
    return factor ? *factor * v : v;
  }

  RationalVector atom() {
    if (consume("highest-root")) return rs_.highest_root();
    if (consume("sum-simple")) {
      RationalVector v = rs_.zero();
      for (const auto& a : rs_.simple_roots()) v += a;
      return v;
    }
    if (consume("rho")) return rs_.rho();
    if (consume("eps:")) return eps_list();
    if (consume("w")) {
      if (!digit()) fail("expected an index after 'w'");
      const std::string idx = digits();
      const long i = idx.size() > 3 ? 0 : std::stol(idx);
      if (i < 1 || i > rs_.rank())
        fail("fundamental weight index must be in 1.." + std::to_string(rs_.rank()));
      return rs_.fundamental_weights()[static_cast<std::size_t>(i - 1)];
    }
    fail("unknown term");
  }

  RationalVector eps_list() {
    char close = 0;
    if (!at_end()) {
      if (s_[pos_] == '<') close = '>';
      if (s_[pos_] == '(') close = ')';
      if (s_[pos_] == '[') close = ']';
      if (close) ++pos_;
    }
    std::vector<Rational> coords{signed_number()};
    while (!at_end() && s_[pos_] == ',') {
      ++pos_;
      coords.push_back(signed_number());
    }
    if (close) {
      if (at_end() || s_[pos_] != close) fail(std::string("expected '") + close + "'");
      ++pos_;
    }
    if (coords.size() != rs_.ambient_dim())
      fail("eps: needs " + std::to_string(rs_.ambient_dim()) + " coordinates for " + rs_.label() + ", got " +
           std::to_string(coords.size()));
    return RationalVector(std::move(coords));
  }

  std::string_view s_;
  const RootSystem& rs_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- serialization

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(c.str());
  return out;
}

json polynomial_json(const QPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_json(c));
  return out;
}

json weight_json(const RationalVector& w, const RootSystem& rs) {
  return json{{"eps", vector_json(w)}, {"fundamental", vector_json(to_fundamental_coords(w, rs))}};
}

json root_json(const RationalVector& v, const RootSystem& rs) {
  const RationalVector c = to_simple_root_coords(v, rs);
  Rational h;
  for (const auto& x : c.coords()) h += x;
  return json{{"eps", vector_json(v)}, {"simple", vector_json(c)}, {"height", h.str()}};
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (int i : word) out += (out.empty() ? "s" : " s") + std::to_string(i);
  return out;
}

std::string ints_string(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

// A table for the text and csv renderings.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  RunReport report;
  std::vector<std::pair<std::string, std::string>> summary;
  Table table;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r);
}

void write_aligned(const Table& t, std::ostream& out) {
  if (t.rows.empty()) return;
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t c = 0; c < t.headers.size(); ++c) {
    width[c] = t.headers[c].size();
    for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(t.headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

void write_text(const Outcome& o, std::ostream& out) {
  for (const auto& [k, v] : o.summary) out << k << ": " << v << '\n';
  if (!o.table.rows.empty()) {
    out << '\n';
    write_aligned(o.table, out);
  }
  if (o.report.command != "verify" && !o.report.checks.empty()) {
    out << '\n';
    for (const auto& c : o.report.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " (expected " << c.expected << ", got " << c.actual << ")\n";
  }
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string type;
  int rank = 0;
  std::string format = "text";
  std::uint64_t cap = kDefaultWeylCap;
  unsigned threads = 1;
  std::string cache_file;
};

RationalVector integral_weight(const std::string& spec, const RootSystem& rs, const char* what) {
  const RationalVector w = parse_weight(spec, rs);
  if (!to_fundamental_coords(w, rs).is_integral())
    throw ParseError(std::string(what) + " '" + spec + "' is not an integral weight of " + rs.label());
  return w;
}

Outcome cmd_roots(const RootSystem& rs) {
  Outcome o;
  json& r = o.report.results;
  r["system"] = rs.label();
  r["type"] = to_string(rs.type());
  r["rank"] = rs.rank();
  r["ambient_dim"] = rs.ambient_dim();
  r["weyl_group_order"] = integer_json(rs.weyl_group_order());
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(row);
  }
  r["cartan_matrix"] = cartan;
  r["simple_roots"] = json::array();
  for (const auto& a : rs.simple_roots()) r["simple_roots"].push_back(root_json(a, rs));
  r["positive_roots"] = json::array();
  for (const auto& a : rs.positive_roots()) r["positive_roots"].push_back(root_json(a, rs));
  r["fundamental_weights"] = json::array();
  for (const auto& w : rs.fundamental_weights()) r["fundamental_weights"].push_back(root_json(w, rs));
  r["rho"] = root_json(rs.rho(), rs);
  r["highest_root"] = root_json(rs.highest_root(), rs);

  o.summary = {{"system", rs.label()},
               {"ambient dimension", std::to_string(rs.ambient_dim())},
               {"positive roots", std::to_string(rs.positive_roots().size())},
               {"Weyl group order", rs.weyl_group_order().get_str()}};
  std::string cartan_text;
  for (int i = 0; i < rs.rank(); ++i) {
    cartan_text += i ? " / " : "";
    for (int j = 0; j < rs.rank(); ++j) cartan_text += (j ? " " : "") + std::to_string(rs.cartan(i, j));
  }
  o.summary.emplace_back("Cartan matrix", cartan_text);

  o.table.headers = {"kind", "index", "eps", "simple", "height"};
  const auto add = [&](const std::string& kind, std::size_t idx, const RationalVector& v) {
    const json j = root_json(v, rs);
    std::string simple = "(";
    for (std::size_t k = 0; k < j["simple"].size(); ++k)
      simple += (k ? ", " : "") + j["simple"][k].get<std::string>();
    o.table.rows.push_back({kind, idx ? std::to_string(idx) : "", v.str(), simple + ")", j["height"]});
  };
  for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) add("simple", i + 1, rs.simple_roots()[i]);
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) add("positive", i + 1, rs.positive_roots()[i]);
  for (std::size_t i = 0; i < rs.fundamental_weights().size(); ++i)
    add("fundamental", i + 1, rs.fundamental_weights()[i]);
  add("rho", 0, rs.rho());
  add("highest-root", 0, rs.highest_root());
  return o;
}

Outcome cmd_weyl_alt(MultiplicityEngine& engine, const RationalVector& lambda, const RationalVector& mu) {
  const auto& rs = engine.root_system();
  const auto set = engine.alternation_set(lambda, mu);
  Outcome o;
  json& r = o.report.results;
  r["system"] = rs.label();
  r["lambda"] = weight_json(lambda, rs);
  r["mu"] = weight_json(mu, rs);
  r["cardinality"] = set.size();
  r["elements"] = json::array();
  o.table.headers = {"word", "length"};
  for (const auto& w : set.elements) {
    r["elements"].push_back(json{{"word", w.word()}, {"length", w.length()}});
    o.table.rows.push_back({word_string(w.word()), std::to_string(w.length())});
  }
  o.summary = {{"system", rs.label()},
               {"lambda", lambda.str()},
               {"mu", mu.str()},
               {"cardinality", std::to_string(set.size())}};
  return o;
}

Outcome cmd_mult(MultiplicityEngine& engine, const RationalVector& lambda, const RationalVector& mu, bool q) {
  const auto& rs = engine.root_system();
  const auto terms = engine.terms(lambda, mu);
  QPolynomial mq;
  for (const auto& t : terms) mq.add_shifted(t.pq, 0, t.length % 2 ? -1 : 1);
  const mpz_class m = mq.at_one();

  Outcome o;
  json& r = o.report.results;
  r["system"] = rs.label();
  r["lambda"] = weight_json(lambda, rs);
  r["mu"] = weight_json(mu, rs);
  r["multiplicity"] = integer_json(m);
  if (q) r["q_multiplicity"] = polynomial_json(mq);
  r["terms"] = json::array();
  o.table.headers = {"word", "length", "argument", q ? "p_q" : "p"};
  for (const auto& t : terms) {
    r["terms"].push_back(json{{"word", t.word},
                              {"length", t.length},
                              {"argument", t.argument},
                              {"p", integer_json(t.pq.at_one())},
                              {"p_q", polynomial_json(t.pq)}});
    o.table.rows.push_back({word_string(t.word), std::to_string(t.length), ints_string(t.argument),
                            q ? t.pq.str() : t.pq.at_one().get_str()});
  }
  o.summary = {{"system", rs.label()}, {"lambda", lambda.str()}, {"mu", mu.str()}};
  if (q) {
    o.summary.emplace_back("m_q(lambda, mu)", mq.str());
  } else {
    o.summary.emplace_back("m(lambda, mu)", m.get_str());
  }
  return o;
}

Outcome cmd_diagram(MultiplicityEngine& engine, const RationalVector& lambda) {
  const auto& rs = engine.root_system();
  const auto diagram = engine.weight_diagram(lambda);
  Outcome o;
  json& r = o.report.results;
  r["system"] = rs.label();
  r["lambda"] = weight_json(lambda, rs);
  r["weights"] = json::array();
  mpz_class dimension = 0;
  o.table.headers = {"eps", "fundamental", "multiplicity"};
  for (const auto& e : diagram) {
    json w = weight_json(e.weight, rs);
    w["multiplicity"] = integer_json(e.multiplicity);
    r["weights"].push_back(w);
    dimension += e.multiplicity;
    o.table.rows.push_back({e.weight.str(), to_fundamental_coords(e.weight, rs).str(), e.multiplicity.get_str()});
  }
  r["distinct_weights"] = diagram.size();
  r["dimension"] = integer_json(dimension);
  o.summary = {{"system", rs.label()},
               {"lambda", lambda.str()},
               {"distinct weights", std::to_string(diagram.size())},
               {"dimension", dimension.get_str()}};
  return o;
}

Outcome cmd_verify(const std::string& suite, const SuiteOptions& options, EngineSet& engines) {
  Outcome o;
  o.report.checks = run_suite(suite, options, engines);
  const auto failed = std::count_if(o.report.checks.begin(), o.report.checks.end(),
                                    [](const Check& c) { return !c.pass; });
  json& r = o.report.results;
  r["suite"] = suite;
  r["checks_total"] = o.report.checks.size();
  r["checks_failed"] = failed;
  o.summary = {{"suite", suite},
               {"checks", std::to_string(o.report.checks.size())},
               {"failed", std::to_string(failed)}};
  o.table.headers = {"status", "check", "expected", "actual"};
  for (const auto& c : o.report.checks)
    o.table.rows.push_back({c.pass ? "PASS" : "FAIL", c.name, c.expected, c.actual});
  return o;
}

std::optional<std::uint64_t> env_cap() {
  const char* v = std::getenv("WEYLALT_CAP");
  if (!v || !*v) return std::nullopt;
  std::uint64_t out = 0;
  std::istringstream in(v);
  if (!(in >> out) || !in.eof()) throw ParseError(std::string("WEYLALT_CAP is not a positive integer: ") + v);
  return out;
}

}  // namespace

RationalVector parse_weight(std::string_view spec, const RootSystem& rs) {
  return WeightParser(spec, rs).parse();
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json to_json(const RunReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return json{{"command", report.command},
              {"parameters", report.parameters},
              {"results", report.results},
              {"checks", checks},
              {"elapsed_ms", report.elapsed_ms}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight multiplicities, q-analogs and Weyl alternation sets", "weylalt"};
  app.require_subcommand(1);

  Common common;
  std::string lambda_spec = "0", mu_spec = "0", suite;
  bool q_flag = false;
  SuiteOptions suite_options;
  std::string box_bound = "1";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };
  const auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--cap", common.cap, "Largest Weyl group order a computation may traverse "
                                         "(default 2000000, or WEYLALT_CAP)");
    sub->add_option("--threads", common.threads, "Worker threads for the Weyl sums")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sub->add_option("--cache-file", common.cache_file,
                    "Partition-function cache: loaded if present, written on exit");
  };
  const auto add_system = [&](CLI::App* sub) {
    sub->add_option("--type", common.type, "Lie type: A B C D G2 F4 E6 E7 E8")->required();
    sub->add_option("--rank", common.rank, "Rank")->required();
    add_format(sub);
  };

  auto* roots = app.add_subcommand("roots", "Print simple roots, positive roots, fundamental weights and rho");
  add_system(roots);
  auto* alt = app.add_subcommand("weyl-alt", "List the Weyl alternation set of (lambda, mu)");
  add_system(alt);
  add_engine(alt);
  alt->add_option("--lambda", lambda_spec, "Weight spec for lambda")->capture_default_str();
  alt->add_option("--mu", mu_spec, "Weight spec for mu")->capture_default_str();
  auto* mult = app.add_subcommand("mult", "Weight multiplicity m(lambda, mu) by Kostant's formula");
  add_system(mult);
  add_engine(mult);
  mult->add_option("--lambda", lambda_spec, "Weight spec for lambda")->capture_default_str();
  mult->add_option("--mu", mu_spec, "Weight spec for mu")->capture_default_str();
  mult->add_flag("--q", q_flag, "Report the q-analog m_q(lambda, mu)");
  auto* diagram = app.add_subcommand("diagram", "All weights of L(lambda) with multiplicities");
  add_system(diagram);
  add_engine(diagram);
  diagram->add_option("--lambda", lambda_spec, "Dominant integral highest weight")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-rank", suite_options.max_rank, "Largest rank to test (0 = suite default)");
  verify->add_option("--box-bound", box_bound, "Bound on k_1 for the nonzero-mu scan")->capture_default_str();
  verify->add_option("--samples", suite_options.samples, "Oracle sample count")->capture_default_str();
  verify->add_option("--seed", suite_options.seed, "Oracle seed")->capture_default_str();
  add_format(verify);
  add_engine(verify);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (auto cap = env_cap()) common.cap = *cap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    EngineSet engines({common.cap, common.threads});
    if (!common.cache_file.empty() && std::filesystem::exists(common.cache_file)) {
      std::ifstream in(common.cache_file);
      if (!in) throw ParseError("cannot read cache file " + common.cache_file);
      engines.load_caches(in);
    }

    Outcome outcome;
    std::map<std::string, std::string> params;
    if (app.got_subcommand(verify)) {
      suite_options.box_bound = Rational::parse(box_bound);
      if (suite_options.box_bound.sign() < 0) throw ParseError("--box-bound must be nonnegative");
      outcome = cmd_verify(suite, suite_options, engines);
      outcome.report.command = "verify";
      params = {{"suite", suite},
                {"max_rank", std::to_string(suite_options.max_rank)},
                {"cap", std::to_string(common.cap)},
                {"box_bound", suite_options.box_bound.str()},
                {"samples", std::to_string(suite_options.samples)},
                {"seed", std::to_string(suite_options.seed)}};
    } else {
      const RootSystem rs = RootSystem::build(parse_lie_type(common.type), common.rank);
      params = {{"type", to_string(rs.type())}, {"rank", std::to_string(rs.rank())}};
      if (app.got_subcommand(roots)) {
        outcome = cmd_roots(rs);
        outcome.report.command = "roots";
      } else {
        auto& engine = engines.get(rs.type(), rs.rank());
        params["cap"] = std::to_string(common.cap);
        params["lambda"] = lambda_spec;
        const RationalVector lambda = integral_weight(lambda_spec, rs, "lambda");
        if (app.got_subcommand(diagram)) {
          outcome = cmd_diagram(engine, lambda);
          outcome.report.command = "diagram";
        } else {
          params["mu"] = mu_spec;
          const RationalVector mu = integral_weight(mu_spec, rs, "mu");
          if (app.got_subcommand(alt)) {
            outcome = cmd_weyl_alt(engine, lambda, mu);
            outcome.report.command = "weyl-alt";
          } else {
            outcome = cmd_mult(engine, lambda, mu, q_flag);
            outcome.report.command = "mult";
            params["q"] = q_flag ? "true" : "false";
          }
        }
      }
    }
    outcome.report.parameters = std::move(params);
    outcome.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();

    if (!common.cache_file.empty()) {
      std::ofstream cache(common.cache_file);
      if (!cache) throw std::runtime_error("cannot write cache file " + common.cache_file);
      engines.save_caches(cache);
    }

    if (common.format == "json") {
      out << to_json(outcome.report).dump(2) << '\n';
    } else if (common.format == "csv") {
      write_csv(outcome.table, out);
    } else {
      write_text(outcome, out);
      if (outcome.report.command == "verify") {
        out << '\n' << (outcome.report.passed() ? "all checks passed" : "SOME CHECKS FAILED") << '\n';
      }
    }
    return outcome.report.passed() ? kOk : kCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const HeightExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace weylalt::cli
