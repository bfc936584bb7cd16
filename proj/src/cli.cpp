#include "seidelpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "seidelpoly/enumerate.hpp"
#include "seidelpoly/interlace_lp.hpp"
#include "seidelpoly/modcheck.hpp"
#include "seidelpoly/real_roots.hpp"
#include "seidelpoly/seidel_oracle.hpp"

namespace seidelpoly {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string format = "jsonl";
  std::string output;
  unsigned threads = 0;
  int precision_digits = 75;
  bool timing = true;
};

// Coefficients as a JSON array; big integers are written as bare numbers.
std::string json_coeffs(const IntPoly& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) s += ",";
    s += p[k].get_str();
  }
  return s + "]";
}

class Emitter {
 public:
  Emitter(const Config& config, std::ostream& out) : config_(config), out_(&out) {
    if (!config.output.empty()) {
      file_ = std::make_unique<std::ofstream>(config.output);
      require(file_->good(), "cannot open output file " + config.output);
      out_ = file_.get();
    }
  }

  bool jsonl() const { return config_.format == "jsonl"; }

  void poly(const IntPoly& p, const IntPoly* divisor = nullptr) {
    if (!jsonl()) {
      *out_ << to_string(p) << "\n";
      return;
    }
    *out_ << "{\"degree\":" << p.degree() << ",\"coeffs\":" << json_coeffs(p);
    if (divisor) *out_ << ",\"factored\":{\"q\":" << json_coeffs(*divisor) << ",\"cofactor\":" << json_coeffs(exact_div(p, *divisor)) << "}";
    *out_ << "}\n";
  }

  void value(const std::string& key, bool v) {
    if (jsonl())
      *out_ << json{{key, v}}.dump() << "\n";
    else
      *out_ << (v ? "true" : "false") << "\n";
  }

  void object(const json& j, const std::string& plain) {
    if (jsonl())
      *out_ << j.dump() << "\n";
    else
      *out_ << plain << "\n";
  }

  void summary(const EnumReport& r) {
    json s;
    s["summary"] = true;
    json input = json::object();
    for (const auto& [k, v] : r.input) input[k] = v;
    s["input"] = input;
    s["count"] = r.results.size();
    if (config_.timing) s["elapsed_ms"] = r.elapsed_ms;
    s["pruned_branches"] = r.stats.pruned_branches;
    s["filtered"] = r.stats.filtered;
    s["nodes_per_level"] = r.stats.nodes_per_level;
    if (jsonl()) *out_ << s.dump() << "\n";
  }

  void report(const EnumReport& r, const IntPoly* divisor = nullptr) {
    for (const auto& p : r.results) poly(p, divisor);
    summary(r);
  }

  void flush() { out_->flush(); }

 private:
  const Config& config_;
  std::ostream* out_;
  std::unique_ptr<std::ofstream> file_;
};

// --poly (or --q) multiplied by every --factor.
IntPoly combine(const std::string& text, const std::vector<std::string>& factors) {
  IntPoly p = text.empty() ? IntPoly{1} : parse_int_poly(text);
  for (const auto& f : factors) p = p * parse_int_poly(f);
  return p;
}

std::vector<Integer> parse_prefix(const std::string& text) {
  // Kept verbatim: leading zeros are an error rather than a lower degree.
  std::vector<Integer> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    IntPoly single = parse_int_poly(tok.empty() ? "x" : tok);
    v.push_back(single.is_zero() ? Integer(0) : single[0]);
  }
  require(!v.empty() && v.front() != 0, "prefix must start with a nonzero coefficient");
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  if (const char* env = std::getenv("SEIDELPOLY_PRECISION")) {
    try {
      config.precision_digits = std::stoi(env);
    } catch (const std::exception&) {
      err << "error: SEIDELPOLY_PRECISION must be an integer\n";
      return 1;
    }
  }

  CLI::App app{"Exact enumeration of real-rooted, Seidel-feasible and interlacing integer polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"jsonl", "plain"}));
  app.add_option("--output", config.output, "Write results to this file instead of stdout");
  app.add_option("--threads", config.threads, "Worker threads (0 = hardware threads)");
  app.add_option("--precision-digits", config.precision_digits, "Significant digits for the LP path (>= 30)");
  app.add_flag("!--no-timing", config.timing, "Omit elapsed_ms so output is byte-reproducible");

  std::string poly_text, q_text, prefix_text;
  std::vector<std::string> factors;
  int n = 0, t = 3, delta = 0, d = 0, i = 0, delta_lo = 4;
  long lambda = 0;
  bool allow_large = false;

  std::function<void(Emitter&)> action;
  auto poly_options = [&](CLI::App* sub) {
    sub->add_option("--poly", poly_text, "Descending comma-separated coefficients");
    sub->add_option("--factor", factors, "Factor multiplied into the polynomial (repeatable)");
  };
  auto need_poly = [&]() {
    require(!poly_text.empty() || !factors.empty(), "a polynomial is required (--poly or --factor)");
    return combine(poly_text, factors);
  };

  auto* rr = app.add_subcommand("is-real-rooted", "Decide whether every root is real");
  poly_options(rr);
  rr->callback([&] { action = [&](Emitter& e) { e.value("real_rooted", is_real_rooted(need_poly())); }; });

  auto* arr = app.add_subcommand("all-real-rooted", "Real-rooted integer polynomials with a fixed leading prefix");
  arr->add_option("--prefix", prefix_text, "Leading coefficients (the first t are fixed)")->required();
  arr->add_option("--t", t, "Number of fixed leading coefficients");
  arr->add_option("--n", n, "Degree (default: prefix length - 1)");
  arr->callback([&] {
    action = [&](Emitter& e) {
      std::vector<Integer> v = parse_prefix(prefix_text);
      int degree = n ? n : static_cast<int>(v.size()) - 1;
      require(static_cast<int>(v.size()) <= degree + 1, "prefix longer than the degree allows");
      require(static_cast<int>(v.size()) >= t, "prefix shorter than t");
      v.resize(static_cast<std::size_t>(degree) + 1, 0);
      EnumOptions o{config.threads};
      e.report(all_real_rooted(IntPoly(v), t, o));
    };
  });

  auto* fe = app.add_subcommand("feasible-even", "Seidel-feasible polynomials of even degree divisible by q");
  fe->add_option("--n", n, "Degree")->required();
  fe->add_option("--q", q_text, "Monic divisor (default 1)");
  fe->add_option("--factor", factors, "Factor multiplied into q (repeatable)");
  fe->callback([&] {
    action = [&](Emitter& e) {
      IntPoly q = combine(q_text, factors);
      e.report(feasible_even(n, q, EnumOptions{config.threads}), q.degree() > 0 ? &q : nullptr);
    };
  });

  auto* fp = app.add_subcommand("feasible-partial", "delta-partial feasible polynomials of odd degree divisible by q");
  fp->add_option("--n", n, "Degree")->required();
  fp->add_option("--q", q_text, "Monic divisor (default 1)");
  fp->add_option("--factor", factors, "Factor multiplied into q (repeatable)");
  fp->add_option("--delta", delta, "Congruence depth")->required();
  fp->callback([&] {
    action = [&](Emitter& e) {
      IntPoly q = combine(q_text, factors);
      e.report(feasible_partial(n, q, delta, EnumOptions{config.threads}), q.degree() > 0 ? &q : nullptr);
    };
  });

  auto* gs = app.add_subcommand("g-set", "delta-partial feasible polynomials divisible by (x - lambda)^(n - d)");
  gs->add_option("--n", n)->required();
  gs->add_option("--delta", delta)->required();
  gs->add_option("--d", d)->required();
  gs->add_option("--lambda", lambda)->required();
  gs->callback([&] {
    action = [&](Emitter& e) {
      IntPoly q = linear_power(lambda, n - d);
      e.report(g_set(n, delta, d, lambda, EnumOptions{config.threads}), &q);
    };
  });

  auto* ds = app.add_subcommand("delta-sweep", "g-set over a delta range with the stabilization point");
  ds->add_option("--n", n)->required();
  ds->add_option("--d", d)->required();
  ds->add_option("--lambda", lambda)->required();
  ds->add_option("--delta-lo", delta_lo, "Smallest delta to try (raised to max(4, d))");
  ds->callback([&] {
    action = [&](Emitter& e) {
      auto t0 = std::chrono::steady_clock::now();
      DeltaSweep sweep = delta_sweep(n, d, lambda, delta_lo, EnumOptions{config.threads});
      for (const auto& [dl, count] : sweep.counts)
        e.object(json{{"delta", dl}, {"count", count}}, std::to_string(dl) + " " + std::to_string(count));
      json s{{"summary", true}, {"stabilization", sweep.stabilization}, {"nested", sweep.nested}};
      if (config.timing)
        s["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      e.object(s, "stabilization " + std::to_string(sweep.stabilization));
    };
  });

  auto* mc = app.add_subcommand("mod-check", "Divisibility / congruence test on a shifted polynomial");
  poly_options(mc);
  mc->add_option("--i", i, "Coefficient index")->required();
  mc->callback([&] { action = [&](Emitter& e) { e.value("mod_check", mod_check(need_poly(), i)); }; });

  auto* ie = app.add_subcommand("interlacing-even", "Seidel interlacing polynomials of an odd-degree trace polynomial");
  poly_options(ie);
  ie->callback([&] {
    action = [&](Emitter& e) {
      InterlaceOptions o{config.precision_digits, config.threads};
      e.report(interlacing_even(need_poly(), o));
    };
  });

  auto* ip = app.add_subcommand("interlacing-partial", "delta-partial Seidel interlacing polynomials of an even-degree trace polynomial");
  poly_options(ip);
  ip->add_option("--delta", delta)->required();
  ip->callback([&] {
    action = [&](Emitter& e) {
      InterlaceOptions o{config.precision_digits, config.threads};
      e.report(interlacing_partial(need_poly(), delta, o));
    };
  });

  auto* orr = app.add_subcommand("oracle-realisable", "Characteristic polynomials of all Seidel matrices of order n");
  orr->add_option("--n", n)->required();
  orr->add_flag("--allow-large", allow_large, "Permit n > 6");
  orr->callback([&] {
    action = [&](Emitter& e) {
      auto t0 = std::chrono::steady_clock::now();
      RealisableOptions o;
      o.allow_large = allow_large;
      o.threads = config.threads;
      EnumReport r;
      r.input = {{"n", std::to_string(n)}};
      r.results = realisable_set(n, o);
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      e.report(r);
    };
  });

  auto* ot = app.add_subcommand("oracle-T", "Coefficient-box brute force for real-rooted polynomials with a prefix");
  ot->add_option("--n", n)->required();
  ot->add_option("--prefix", prefix_text, "The fixed leading coefficients")->required();
  ot->add_flag("--allow-large", allow_large, "Permit n > 5");
  ot->callback([&] {
    action = [&](Emitter& e) {
      auto t0 = std::chrono::steady_clock::now();
      EnumReport r;
      r.input = {{"n", std::to_string(n)}, {"prefix", prefix_text}};
      r.results = brute_force_T(n, parse_prefix(prefix_text), allow_large);
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      e.report(r);
    };
  });

  auto* vf = app.add_subcommand("verify", "Trace-polynomial and feasibility checks");
  poly_options(vf);
  vf->callback([&] {
    action = [&](Emitter& e) {
      IntPoly p = need_poly();
      bool trace = verify_trace_poly(p);
      bool feasible = trace && is_seidel_feasible(p);
      e.object(json{{"degree", p.degree()}, {"trace_polynomial", trace}, {"seidel_feasible", feasible}},
               std::string("trace_polynomial ") + (trace ? "true" : "false") + "\nseidel_feasible " + (feasible ? "true" : "false"));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    require(config.precision_digits >= 30, "precision digits must be at least 30");
    Emitter emitter(config, out);
    action(emitter);
    emitter.flush();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace seidelpoly
