#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "zaremba/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

using namespace zaremba;

Natural parse_natural(const std::string& text, const std::string& name) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidInputError(name + " must be a nonnegative decimal integer, got '" +
                            text + "'");
  return Natural(text);
}

std::string format_word(const ContinuedFraction& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.quotients.size(); ++i) {
    if (i) s += ", ";
    s += w.quotients[i].str();
  }
  return s + "]";
}

void print_certificate_text(const Certificate& c) {
  std::cout << "q = " << c.q.str() << "\n"
            << "a = " << c.a.str() << "\n"
            << "cf = " << format_word(c.word) << "\n"
            << "K = " << c.achieved_k.str() << "\n"
            << "bound = " << c.claimed_bound.str() << "\n"
            << "method = " << method_name(c.method) << "\n"
            << "trace:\n";
  for (std::size_t i = 0; i < c.trace.size(); ++i)
    std::cout << "  " << (i + 1) << ". " << c.trace[i].description << "\n";
}

struct CommandSettings {
  bool json = false;
  std::string limit;  // empty = defaults

  // --limit (or ZAREMBA_ORACLE_LIMIT) overrides both the oracle modulus
  // limit and the factorization effort cap.
  OracleOptions oracle_options() const {
    OracleOptions opts;
    std::string override_text;
    if (const char* env = std::getenv("ZAREMBA_ORACLE_LIMIT")) override_text = env;
    if (!limit.empty()) override_text = limit;
    if (!override_text.empty()) {
      opts.limit = parse_natural(override_text, "--limit");
      opts.factorize.rho_iteration_limit =
          opts.limit > Natural(UINT64_MAX) ? UINT64_MAX
                                           : opts.limit.convert_to<std::uint64_t>();
    }
    return opts;
  }
};

void emit(const CommandSettings& settings, const std::string& command,
          Json payload, const std::string& text) {
  if (settings.json)
    std::cout << dump(envelope(command, std::move(payload)));
  else
    std::cout << text;
}

int run_construct(const CommandSettings& settings, const std::string& q_text,
                  bool verify) {
  Natural q = parse_natural(q_text, "q");
  if (q < 2) throw InvalidInputError("q must be >= 2");
  OracleOptions opts = settings.oracle_options();
  Certificate cert = construct(q, opts.factorize);
  if (verify) {
    VerificationResult vr = verify_certificate(cert, opts.factorize);
    if (!vr.ok) {
      std::cerr << "error: certificate failed verification:\n";
      for (const std::string& r : vr.reasons) std::cerr << "  - " << r << "\n";
      return kExitComputation;
    }
  }
  if (settings.json) {
    Json payload = to_json(cert);
    if (verify) payload["verified"] = true;
    std::cout << dump(envelope("construct", std::move(payload)));
  } else {
    print_certificate_text(cert);
    if (verify) std::cout << "verified = true\n";
  }
  return kExitOk;
}

int run_verify(const CommandSettings& settings, const std::string& q_text,
               const std::string& a_text) {
  Natural q = parse_natural(q_text, "q");
  Natural a = parse_natural(a_text, "a");
  if (q < 2) throw InvalidInputError("q must be >= 2");
  if (a < 1 || a >= q) throw InvalidInputError("a must satisfy 1 <= a < q");
  OracleOptions opts = settings.oracle_options();

  std::vector<std::string> reasons;
  bool ok = true;
  Json payload;
  payload["q"] = q.str();
  payload["a"] = a.str();
  std::string text = "q = " + q.str() + "\na = " + a.str() + "\n";

  if (gcd(a, q) != 1) {
    ok = false;
    reasons.push_back("gcd(a, q) != 1");
    payload["ok"] = false;
    payload["reasons"] = reasons;
    text += "ok = false (gcd(a, q) != 1)\n";
    emit(settings, "verify", std::move(payload), text);
    return kExitComputation;
  }

  Factorization f = factorize(q, opts.factorize);
  const auto& fs = f.factors;
  const bool pow2or3 = fs.size() == 1 && (fs[0].prime == 2 || fs[0].prime == 3);
  Natural bound = pow2or3 ? Natural(3) : Natural(radical(f) - 1);
  // either expansion of a/q may witness the bound
  ContinuedFraction w = expand(Rational{a, q});
  Natural k_canonical = partial_quotient_max(w);
  Natural k_alt = partial_quotient_max(alternate_rep(w));
  const Natural& k_best = k_alt < k_canonical ? k_alt : k_canonical;
  if (k_best > bound) {
    ok = false;
    reasons.push_back("K = " + k_best.str() + " under the better of the two " +
                      "expansions exceeds bound " + bound.str());
  }
  payload["cf"] = to_json(w);
  payload["K"] = k_canonical.str();
  payload["K_best_rep"] = k_best.str();
  payload["bound"] = bound.str();
  payload["ok"] = ok;
  payload["reasons"] = reasons;
  text += "cf = " + format_word(w) + "\nK = " + k_canonical.str() +
          "\nK_best_rep = " + k_best.str() + "\nbound = " + bound.str() +
          "\nok = " + (ok ? "true" : "false") + "\n";
  emit(settings, "verify", std::move(payload), text);
  return ok ? kExitOk : kExitComputation;
}

int run_oracle(const CommandSettings& settings, const std::string& q_text) {
  Natural q = parse_natural(q_text, "q");
  if (q < 2) throw InvalidInputError("q must be >= 2");
  OracleReport report = min_k(q, settings.oracle_options());
  std::string text = "q = " + report.q.str() + "\nmin_k_canonical = " +
                     report.min_k_canonical.str() + "\nmin_k_best_rep = " +
                     report.min_k_best_rep.str() + "\nminimizers_canonical =";
  for (const Natural& m : report.minimizers_canonical) text += " " + m.str();
  text += "\nminimizers_best_rep =";
  for (const Natural& m : report.minimizers_best_rep) text += " " + m.str();
  text += "\n";
  emit(settings, "oracle", to_json(report), text);
  return kExitOk;
}

int run_scan(const CommandSettings& settings, const std::string& lo_text,
             const std::string& hi_text, const std::string& out_format,
             unsigned threads) {
  Natural lo = parse_natural(lo_text, "lo");
  Natural hi = parse_natural(hi_text, "hi");
  OracleOptions opts = settings.oracle_options();
  opts.threads = threads;
  std::vector<ScanRow> rows = scan_range(lo, hi, opts);
  if (out_format == "json") {
    Json payload;
    payload["lo"] = lo.str();
    payload["hi"] = hi.str();
    payload["rows"] = to_json(rows);
    std::cout << dump(envelope("scan", std::move(payload)));
  } else {
    std::cout << scan_to_csv(rows);
  }
  return kExitOk;
}

int run_chain(const CommandSettings& settings, const std::string& q_text) {
  Natural q = parse_natural(q_text, "q");
  if (q < 2) throw InvalidInputError("q must be >= 2");
  OracleOptions opts = settings.oracle_options();
  DecompositionChain chain = decompose_chain(q, opts.factorize);
  std::string text = "q = " + chain.q0.str() + "\nN = " +
                     std::to_string(chain.n_index) + "\nlevels =";
  for (const auto& level : chain.levels)
    text += " (" + level.p_level.str() + ", " + level.q_level.str() + ")";
  text += "\n";
  emit(settings, "chain", to_json(chain), text);
  return kExitOk;
}

int run_fold(const CommandSettings& settings, const std::string& a_text,
             const std::string& q_text, const std::string& b_text) {
  Natural a = parse_natural(a_text, "a");
  Natural q = parse_natural(q_text, "q");
  Natural b = parse_natural(b_text, "b");
  if (q < 2 || a < 1 || a >= q) throw InvalidInputError("need 1 <= a < q, q >= 2");
  if (gcd(a, q) != 1) throw InvalidInputError("a/q must be in lowest terms");
  if (b < 1) throw InvalidInputError("b must be >= 1");
  ContinuedFraction seed = expand(Rational{a, q});
  FoldResult result = fold(seed, b);
  Json payload;
  payload["seed"] = Json{{"num", a.str()}, {"den", q.str()}, {"cf", to_json(seed)}};
  payload["b"] = b.str();
  payload["value"] = to_json(result.value);
  payload["cf"] = to_json(result.word);
  std::string text = "seed = " + a.str() + "/" + q.str() + " = " +
                     format_word(seed) + "\nvalue = " + result.value.num.str() +
                     "/" + result.value.den.str() + "\ncf = " +
                     format_word(result.word) + "\n";
  emit(settings, "fold", std::move(payload), text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continued fraction certificates with radical-bounded partial "
               "quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandSettings settings;
  app.add_option("--limit", settings.limit,
                 "override the oracle modulus limit and factorization effort "
                 "(also via ZAREMBA_ORACLE_LIMIT)");

  std::string q_arg, a_arg, b_arg, lo_arg, hi_arg;
  bool verify_flag = false;
  std::string out_format = "csv";
  unsigned threads = 1;

  CLI::App* c_construct =
      app.add_subcommand("construct", "build a bounded-quotient certificate");
  c_construct->add_option("q", q_arg, "modulus (>= 2)")->required();
  c_construct->add_flag("--json", settings.json, "emit a JSON envelope");
  c_construct->add_flag("--verify", verify_flag,
                        "re-check every certificate invariant before emitting");

  CLI::App* c_verify =
      app.add_subcommand("verify", "check a numerator against the bound for q");
  c_verify->add_option("q", q_arg, "modulus (>= 2)")->required();
  c_verify->add_option("a", a_arg, "numerator (1 <= a < q)")->required();
  c_verify->add_flag("--json", settings.json, "emit a JSON envelope");

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "exhaustive minimum of K over numerators coprime to q");
  c_oracle->add_option("q", q_arg, "modulus (>= 2)")->required();
  c_oracle->add_flag("--json", settings.json, "emit a JSON envelope");

  CLI::App* c_scan = app.add_subcommand(
      "scan", "oracle minima and constructed K for every q in [lo, hi]");
  c_scan->add_option("lo", lo_arg, "first modulus (>= 2)")->required();
  c_scan->add_option("hi", hi_arg, "last modulus")->required();
  c_scan->add_option("--out", out_format, "output format: csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  c_scan->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* c_chain =
      app.add_subcommand("chain", "iterated p*q^2 decomposition of q");
  c_chain->add_option("q", q_arg, "modulus (>= 2)")->required();
  c_chain->add_flag("--json", settings.json, "emit a JSON envelope");

  CLI::App* c_fold = app.add_subcommand(
      "fold", "fold the expansion of a/q with multiplier b");
  c_fold->add_option("a", a_arg, "numerator")->required();
  c_fold->add_option("q", q_arg, "denominator (>= 2)")->required();
  c_fold->add_option("b", b_arg, "fold multiplier (>= 1)")->required();
  c_fold->add_flag("--json", settings.json, "emit a JSON envelope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_construct))
      return run_construct(settings, q_arg, verify_flag);
    if (app.got_subcommand(c_verify)) return run_verify(settings, q_arg, a_arg);
    if (app.got_subcommand(c_oracle)) return run_oracle(settings, q_arg);
    if (app.got_subcommand(c_scan))
      return run_scan(settings, lo_arg, hi_arg, out_format, threads);
    if (app.got_subcommand(c_chain)) return run_chain(settings, q_arg);
    if (app.got_subcommand(c_fold))
      return run_fold(settings, a_arg, q_arg, b_arg);
  } catch (const InvalidInputError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleLimitError& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const FactorizationLimitError& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
