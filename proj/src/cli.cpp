#include "lisgf/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lisgf/asymptotics.hpp"
#include "lisgf/catalog.hpp"
#include "lisgf/cheb.hpp"
#include "lisgf/combinatorics.hpp"
#include "lisgf/errors.hpp"
#include "lisgf/gf_engine.hpp"
#include "lisgf/verify.hpp"

namespace lisgf {

using Json = nlohmann::ordered_json;

std::string to_decimal(const Rational& value, int digits) {
  digits = std::max(digits, 0);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(value) < 0;
  const Rational scaled = abs(value) * scale + Rational(1, 2);
  Integer units = scaled.get_num() / scaled.get_den();
  std::string s = units.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && units != 0) s.insert(0, "-");
  return s;
}

std::string to_decimal(const HighFloat& value, int digits) {
  return value.str(std::clamp(digits, 0, 36), std::ios_base::fixed);
}

namespace {

enum class Format { text, csv, json };

struct Options {
  std::string tau;
  int n = 10;
  int m = 4;
  std::string family = "decreasing";
  Format format = Format::text;
  int digits = 15;
  int cap = default_oracle_cap();
};

Permutation pattern_arg(const std::string& text, std::ostream& err) {
  if (text.empty()) throw InvalidInput("--tau is required");
  Permutation tau = parse_permutation(text);
  if (tau.size() >= 8) {
    err << "warning: pattern of length " << tau.size()
        << " produces generating functions of high degree; this may take a while\n";
  }
  return tau;
}

Json terms_json(const BPoly& p) {
  Json out = Json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back(Json::array({mono.x_deg, mono.q_deg, c.get_str()}));
  return out;
}

std::string histogram_text(const std::map<int, Integer>& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, c] : h) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ":" + c.get_str();
  }
  return s + "}";
}

Json histogram_json(const std::map<int, Integer>& h) {
  Json out = Json::object();
  for (const auto& [k, c] : h) out[std::to_string(k)] = c.get_str();
  return out;
}

int cmd_gf(const Options& o, std::ostream& out, std::ostream& err) {
  const Permutation tau = pattern_arg(o.tau, err);
  const RationalGF F = f_tau(tau);
  if (o.format == Format::json) {
    Json j;
    j["pattern"] = tau.to_string();
    j["numerator"] = terms_json(F.num());
    j["denominator"] = terms_json(F.den());
    out << j.dump() << "\n";
  } else {
    out << F.to_string() << "\n";
  }
  return 0;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  const Permutation tau = pattern_arg(o.tau, err);
  if (o.n < 0) throw InvalidInput("--n must be nonnegative");
  const SeriesTable table = series(f_tau(tau), o.n);
  if (o.format == Format::json) {
    Json rows = Json::array();
    for (int n = 0; n <= o.n; ++n) {
      for (int k = 0; k <= o.n; ++k) {
        const Integer c = as_count(table[n][k]);
        if (c != 0) rows.push_back({{"n", n}, {"k", k}, {"count", c.get_str()}});
      }
    }
    out << Json{{"pattern", tau.to_string()}, {"rows", rows}}.dump() << "\n";
    return 0;
  }
  out << "n,k,count\n";
  for (int n = 0; n <= o.n; ++n) {
    for (int k = 0; k <= o.n; ++k) {
      const Integer c = as_count(table[n][k]);
      if (c != 0) out << n << "," << k << "," << c.get_str() << "\n";
    }
  }
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const Permutation tau = pattern_arg(o.tau, err);
  if (o.n < 1) throw InvalidInput("--n must be at least 1");
  const StatSeries s = stats(tau, o.n, StatsOptions{false});
  Json rows = Json::array();
  if (o.format == Format::csv) {
    out << "n,count,mean,mean_decimal,second_moment,second_moment_decimal,variance,variance_decimal\n";
  }
  for (const auto& row : s.rows) {
    if (row.n == 0) continue;
    if (!row.mean) {
      if (o.format == Format::json) {
        rows.push_back({{"n", row.n}, {"count", "0"}});
      } else if (o.format == Format::csv) {
        out << row.n << ",0,,,,,,\n";
      } else {
        out << "n=" << row.n << " count=0\n";
      }
      continue;
    }
    const Rational& e = *row.mean;
    const Rational& e2 = *row.second_moment;
    const Rational& var = *row.variance;
    switch (o.format) {
      case Format::json:
        rows.push_back({{"n", row.n},
                        {"count", row.count.get_str()},
                        {"mean", e.get_str()},
                        {"mean_decimal", to_decimal(e, o.digits)},
                        {"second_moment", e2.get_str()},
                        {"second_moment_decimal", to_decimal(e2, o.digits)},
                        {"variance", var.get_str()},
                        {"variance_decimal", to_decimal(var, o.digits)}});
        break;
      case Format::csv:
        out << row.n << "," << row.count.get_str() << "," << e.get_str() << "," << to_decimal(e, o.digits) << ","
            << e2.get_str() << "," << to_decimal(e2, o.digits) << "," << var.get_str() << ","
            << to_decimal(var, o.digits) << "\n";
        break;
      case Format::text:
        out << "n=" << row.n << " count=" << row.count.get_str() << " E=" << e.get_str() << " ("
            << to_decimal(e, o.digits) << ") E2=" << e2.get_str() << " (" << to_decimal(e2, o.digits)
            << ") Var=" << var.get_str() << " (" << to_decimal(var, o.digits) << ")\n";
        break;
    }
  }
  if (o.format == Format::json) out << Json{{"pattern", tau.to_string()}, {"rows", rows}}.dump() << "\n";
  return 0;
}

std::string moments_check(const Permutation& tau) {
  if (!printed_moments(tau, 1)) return "n/a";
  const StatSeries s = stats(tau, 10, StatsOptions{false});
  for (int n = 1; n <= 10; ++n) {
    const auto f = printed_moments(tau, n);
    if (*s.rows[n].mean != f->mean || *s.rows[n].second_moment != f->second_moment) {
      return "mismatch at n=" + std::to_string(n);
    }
  }
  return "ok";
}

int cmd_table4(const Options& o, std::ostream& out) {
  const int digits = o.digits;
  bool all_ok = true;
  Json rows = Json::array();
  int index = 0;
  for (const auto& row : table4()) {
    ++index;
    std::string names;
    for (const auto& p : row.patterns) names += (names.empty() ? "" : ",") + p.to_string();
    const std::string kind = row.linear ? "slope" : "limit";
    if (o.format == Format::text) {
      out << "row " << index << ": " << names << "\n";
      out << "  table gf: " << row.gf_text << "\n";
      out << "  table " << kind << ": " << row.slope_text << " = " << to_decimal(row.slope, digits) << "\n";
    }
    Json entries = Json::array();
    for (const auto& p : row.patterns) {
      const RationalGF F = f_tau(p);
      const bool gf_ok = equivalent(F, row.gf);
      const std::string moments = moments_check(p);
      const ExpectationLaw law = expectation_law(F);
      const std::string law_kind = law.power == 1 ? "slope" : law.power == 0 ? "limit" : "n^" + std::to_string(law.power);
      using boost::multiprecision::abs;
      const bool slope_ok = law.power == (row.linear ? 1 : 0) &&
                            abs(law.coefficient - row.slope) <= HighFloat("1e-25") * abs(row.slope);
      all_ok = all_ok && gf_ok && slope_ok && (moments == "ok" || moments == "n/a");
      if (o.format == Format::text) {
        out << "  " << p.to_string() << ": gf " << (gf_ok ? "matches" : "DIFFERS") << ", moments n=1..10 "
            << moments << ", engine " << law_kind << " " << to_decimal(law.coefficient, digits)
            << (slope_ok ? " (agrees)" : " (DIFFERS)") << "\n";
        if (!gf_ok) out << "    engine gf: " << F.to_string() << "\n";
      } else {
        entries.push_back({{"pattern", p.to_string()},
                           {"gf", F.to_string()},
                           {"gf_matches_table", gf_ok},
                           {"moments", moments},
                           {"engine_law", law_kind},
                           {"engine_value", to_decimal(law.coefficient, digits)},
                           {"engine_matches_table", slope_ok}});
      }
    }
    if (o.format != Format::text) {
      rows.push_back({{"patterns", names},
                      {"table_gf", row.gf_text},
                      {"table_" + kind, row.slope_text},
                      {"table_value", to_decimal(row.slope, digits)},
                      {"entries", entries}});
    }
  }
  if (o.format != Format::text) out << Json{{"rows", rows}, {"all_match", all_ok}}.dump() << "\n";
  return all_ok ? 0 : 1;
}

void emit(Json& j, std::ostream& out, Format format) {
  if (format == Format::json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

int cmd_asymptotics(const Options& o, std::ostream& out, std::ostream& err) {
  const int d = o.digits;
  Json j;
  j["family"] = o.family;
  auto growth_fields = [&](const UnivariateRGF& g) {
    const RealInterval iv = growth_rate(g);
    j["growth"] = to_decimal(iv.midpoint(), d);
    j["growth_interval"] = Json::array({to_decimal(iv.lo, 25), to_decimal(iv.hi, 25)});
  };
  if (o.family == "decreasing") {
    if (o.m < 2) throw InvalidInput("--m must be at least 2 for the decreasing family");
    j["m"] = o.m;
    j["pattern"] = Permutation::decreasing(o.m).to_string();
    growth_fields(at_q1(f_decreasing(o.m)));
    const HighFloat c = boost::multiprecision::cos(pi_hf() / (o.m + 1));
    j["growth_closed_form"] = to_decimal(HighFloat(4 * c * c), d);
    j["slope"] = to_decimal(slope_decreasing(o.m), d);
    const AlphaConstants a = alpha_constants(o.m);
    j["alpha"] = to_decimal(a.alpha, d);
    j["alpha_tilde"] = to_decimal(a.alpha_tilde, d);
  } else if (o.family == "hat") {
    if (o.m < 4) throw InvalidInput("--m must be at least 4 for the hat family");
    j["m"] = o.m;
    j["pattern"] = hat_pattern(o.m).to_string();
    const RationalGF F = f_hat(o.m);
    growth_fields(at_q1(F));
    j["slope"] = to_decimal(slope_hat(o.m), d);
    j["slope_from_series"] = to_decimal(expectation_law(F).coefficient, d);
  } else if (o.family == "increasing") {
    if (o.m < 3) throw InvalidInput("--m must be at least 3 for the increasing family");
    const IncreasingAsymptotics a = increasing_asymptotics(o.m);
    j["m"] = o.m;
    j["pattern"] = Permutation::identity(o.m).to_string();
    j["count_exponent"] = a.exponent;
    j["count_coefficient"] = a.lead_coefficient.get_str();
    j["count_coefficient_decimal"] = to_decimal(a.lead_coefficient, d);
    j["limit"] = a.expected_limit;
  } else if (o.family == "pattern") {
    const Permutation tau = pattern_arg(o.tau, err);
    const RationalGF F = f_tau(tau);
    j["pattern"] = tau.to_string();
    growth_fields(at_q1(F));
    const ExpectationLaw law = expectation_law(F);
    j["expectation_power"] = law.power;
    j["expectation_coefficient"] = to_decimal(law.coefficient, d);
  } else {
    throw InvalidInput("unknown family '" + o.family + "'");
  }
  emit(j, out, o.format);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Permutation tau = pattern_arg(o.tau, err);
  OracleOptions opts;
  opts.cap = o.cap;
  const VerificationReport r = verify_series(tau, o.n, opts);
  if (o.format == Format::json) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"oracle", histogram_json(row.oracle)},
                      {"engine", histogram_json(row.engine)},
                      {"match", row.match}});
    }
    Json j{{"pattern", tau.to_string()}, {"n_max", r.n_max}, {"match", r.match}, {"rows", rows}};
    if (r.first_mismatch) {
      j["first_mismatch"] = {{"n", r.first_mismatch->n},
                             {"k", r.first_mismatch->k},
                             {"oracle", r.first_mismatch->oracle.get_str()},
                             {"engine", r.first_mismatch->engine.get_str()}};
    }
    out << j.dump() << "\n";
  } else {
    for (const auto& row : r.rows) {
      out << "n=" << row.n << " " << (row.match ? "match" : "MISMATCH") << " oracle=" << histogram_text(row.oracle);
      if (!row.match) out << " engine=" << histogram_text(row.engine);
      out << "\n";
    }
    if (r.first_mismatch) {
      out << "first mismatch: n=" << r.first_mismatch->n << " k=" << r.first_mismatch->k
          << " oracle=" << r.first_mismatch->oracle.get_str() << " engine=" << r.first_mismatch->engine.get_str()
          << "\n";
    }
    out << tau.to_string() << " up to n=" << r.n_max << ": " << (r.match ? "all rows match" : "mismatch") << "\n";
  }
  return r.match ? 0 : 1;
}

int cmd_chebyshev(const Options& o, std::ostream& out) {
  if (o.m < 0) throw InvalidInput("--m must be nonnegative");
  const ChebPoly u = cheb_u(o.m);
  int agree = 0;
  const int points = 20;
  bool product_ok = true;
  if (o.m >= 1) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(o.m));
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int i = 0; i < points; ++i) {
      if (cheb_product_check(o.m, HighFloat(dist(rng)))) ++agree;
    }
    product_ok = agree == points;
  }
  const bool certificate = kernel_p_certificate(o.m);
  Json j;
  j["m"] = o.m;
  j["U"] = u.to_upoly().to_string("t");
  if (o.m >= 1) j["product_identity"] = std::to_string(agree) + "/" + std::to_string(points);
  j["P"] = kernel_p(o.m).to_string();
  j["P_certificate"] = certificate ? "pass" : "fail";
  emit(j, out, o.format);
  return product_ok && certificate ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions for 312-avoiding permutation classes by longest increasing subsequence"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

  auto add_tau = [&](CLI::App* c) { c->add_option("--tau", o.tau, "pattern, e.g. 1243 or 10,1,2,3")->required(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")->transform(CLI::CheckedTransformer(formats));
  };
  // Per-command defaults are applied after parsing, since all commands share one Options.
  std::map<CLI::App*, std::pair<CLI::Option*, int>> n_defaults;
  std::map<CLI::App*, std::pair<CLI::Option*, int>> digit_defaults;
  auto add_n = [&](CLI::App* c, int def) {
    n_defaults[c] = {c->add_option("--n", o.n, "largest length (default " + std::to_string(def) + ")"), def};
  };
  auto add_digits = [&](CLI::App* c, int def) {
    auto* opt = c->add_option("--digits", o.digits, "decimal places (default " + std::to_string(def) + ")")
                    ->check(CLI::Range(0, 36));
    digit_defaults[c] = {opt, def};
  };

  auto* gf = app.add_subcommand("gf", "print the generating function F_tau(x,q)");
  add_tau(gf);
  add_format(gf);

  auto* ser = app.add_subcommand("series", "coefficient table n,k,count");
  add_tau(ser);
  add_n(ser, 10);
  add_format(ser);

  auto* st = app.add_subcommand("stats", "counts, E(L_n), E(L_n^2), Var(L_n)");
  add_tau(st);
  add_n(st, 10);
  add_format(st);
  add_digits(st, 15);

  auto* t4 = app.add_subcommand("table4", "summary table for the fourteen patterns of S_4(312)");
  add_format(t4);
  add_digits(t4, 12);

  auto* as = app.add_subcommand("asymptotics", "growth rates and expectation slopes");
  as->add_option("--family", o.family, "increasing, decreasing, hat or pattern")
      ->check(CLI::IsMember({"increasing", "decreasing", "hat", "pattern"}));
  as->add_option("--m", o.m, "pattern length for the families");
  as->add_option("--tau", o.tau, "pattern for --family pattern");
  add_format(as);
  add_digits(as, 15);

  auto* ve = app.add_subcommand("verify", "compare the series with brute-force enumeration");
  add_tau(ve);
  add_n(ve, 8);
  ve->add_option("--cap", o.cap, "largest length the enumerator accepts");
  add_format(ve);

  auto* ch = app.add_subcommand("chebyshev", "U_m, the product identity and the rationalized kernel P_m");
  ch->add_option("--m", o.m, "index (default 4)");
  add_format(ch);

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (auto* sub : app.get_subcommands()) {
    if (auto it = n_defaults.find(sub); it != n_defaults.end() && it->second.first->count() == 0) {
      o.n = it->second.second;
    }
    if (auto it = digit_defaults.find(sub); it != digit_defaults.end() && it->second.first->count() == 0) {
      o.digits = it->second.second;
    }
  }

  try {
    if (gf->parsed()) return cmd_gf(o, out, err);
    if (ser->parsed()) return cmd_series(o, out, err);
    if (st->parsed()) return cmd_stats(o, out, err);
    if (t4->parsed()) return cmd_table4(o, out);
    if (as->parsed()) return cmd_asymptotics(o, out, err);
    if (ve->parsed()) return cmd_verify(o, out, err);
    if (ch->parsed()) return cmd_chebyshev(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lisgf
