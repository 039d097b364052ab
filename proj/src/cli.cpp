#include "etaforge/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaforge/basisfind.hpp"
#include "etaforge/dims.hpp"
#include "etaforge/etaq.hpp"
#include "etaforge/gaussian.hpp"
#include "etaforge/legendre.hpp"

namespace etaforge::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Mismatch, Error };

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Status status = Status::Ok;
  std::string message;
  std::ostringstream plain;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "error";
}

Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

struct PrimeRange {
  std::int64_t lo = 0, hi = 0;
};

PrimeRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::int64_t p = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("");
      return {p, p};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const std::int64_t lo = std::stoll(a, &used);
    if (used != a.size()) throw ParseError("");
    const std::int64_t hi = std::stoll(b, &used);
    if (used != b.size()) throw ParseError("");
    if (lo > hi) throw ParseError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("invalid prime range '" + text + "' (expected p1..p2)");
  }
}

std::size_t precision_from_env(std::size_t fallback) {
  const char* env = std::getenv("ETAFORGE_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("ETAFORGE_PRECISION must be a positive integer, got '") + env + "'");
}

Json combination_json(const Combination& combo) {
  Json arr = Json::array();
  for (const auto& [c, q] : combo) arr.push_back({{"coefficient", c.to_string()}, {"quotient", format_bracket(q)}});
  return arr;
}

std::string combination_text(const Combination& combo) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, q] : combo) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != Rational(1)) os << mag.to_string() << "*";
    os << format_bracket(q);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void cmd_expand(RunReport& r, const std::string& bracket, std::size_t terms) {
  const EtaQuotient f = parse_bracket(bracket);
  const QExpansion e = expand_eta_quotient(f, terms);
  r.inputs = {{"quotient", bracket}, {"terms", terms}};
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(big_json(c));
  r.results = {{"quotient", format_bracket(f)}, {"offset", e.offset().to_string()}, {"truncation", e.truncation()},
               {"coefficients", coeffs}};
  r.plain << format_bracket(f) << " = " << e.to_string(e.truncation()) << "\n";
}

void cmd_membership(RunReport& r, const std::string& bracket, std::int64_t level) {
  const EtaQuotient f = parse_bracket(bracket);
  const MembershipResult m = is_cusp_form(f, level);
  r.inputs = {{"quotient", bracket}, {"level", level}};
  Json orders = Json::array();
  for (const auto& e : m.report.entries) orders.push_back({{"d", e.divisor}, {"order", e.order.to_string()}});
  r.results = {{"quotient", format_bracket(f)},
               {"level", level},
               {"weight", f.weight().to_string()},
               {"weight_ok", m.weight_ok},
               {"congruences_ok", m.congruences_ok},
               {"character_trivial", m.character_trivial},
               {"orders_positive", m.orders_positive},
               {"is_cusp_form", m.is_cusp_form},
               {"cusp_orders", orders}};
  r.plain << format_bracket(f) << " at level " << level << ": "
          << (m.is_cusp_form ? "in S2(Gamma0(N))" : "not in S2(Gamma0(N))") << "\n";
  r.plain << "  weight 2: " << (m.weight_ok ? "yes" : "no") << ", mod-24 conditions: "
          << (m.congruences_ok ? "yes" : "no") << ", square product: " << (m.character_trivial ? "yes" : "no") << "\n";
  r.plain << "  d      order\n";
  for (const auto& e : m.report.entries)
    r.plain << "  " << std::left << std::setw(6) << e.divisor << " " << e.order.to_string() << "\n";
}

void cmd_dimension(RunReport& r, std::int64_t level) {
  const DimensionBreakdown d = dim_S2(level);
  r.inputs = {{"level", level}};
  r.results = {{"level", level},
               {"index_term", d.index_term.to_string()},
               {"ramification_term", d.ramification_term.to_string()},
               {"elliptic4_count", d.elliptic4_count},
               {"elliptic3_count", d.elliptic3_count},
               {"dimension", d.dimension}};
  r.plain << "dim S2(Gamma0(" << level << ")) = " << d.dimension << "\n"
          << "  = 1 + " << d.index_term << " - " << d.ramification_term << " - " << d.elliptic4_count << "/4 - "
          << d.elliptic3_count << "/3\n";
}

Json reduction_json(const ReductionData& rd) {
  return {{"prime", rd.prime},
          {"kodaira", rd.kodaira.to_string()},
          {"conductor_exponent", rd.conductor_exponent},
          {"discriminant_valuation", rd.discriminant_valuation},
          {"local_ap", rd.local_ap},
          {"minimal_model", rd.minimal_model.to_string()}};
}

void cmd_conductor(RunReport& r, const std::string& lam_text) {
  const Rational lam = Rational::parse(lam_text);
  const IntegralModel model = integral_model(lam);
  const ConductorResult c = conductor(lam);
  r.inputs = {{"lambda", lam_text}};
  Json local = Json::array();
  for (const auto& rd : c.local) local.push_back(reduction_json(rd));
  r.results = {{"lambda", lam.to_string()},
               {"integral_model", model.to_string()},
               {"conductor", c.conductor},
               {"local_data", local}};
  r.plain << "E_lambda, lambda = " << lam << ": Y^2 = X^3 + (" << model.a2.get_str() << ")X^2 + ("
          << model.a4.get_str() << ")X\n";
  r.plain << "conductor N = " << c.conductor << "\n";
  r.plain << "  p      type    f_p  a_p\n";
  for (const auto& rd : c.local)
    r.plain << "  " << std::left << std::setw(6) << rd.prime << " " << std::setw(7) << rd.kodaira.to_string() << " "
            << std::setw(4) << rd.conductor_exponent << " " << rd.local_ap << "\n";
}

void cmd_ap(RunReport& r, const std::string& lam_text, const std::string& range_text) {
  const Rational lam = Rational::parse(lam_text);
  const PrimeRange range = parse_range(range_text);
  const ConductorResult c = conductor(lam);
  r.inputs = {{"lambda", lam_text}, {"primes", range_text}};
  Json rows = Json::array();
  r.plain << "  p      a(p)\n";
  for (std::int64_t p : primes_in_range(range.lo, range.hi)) {
    Json row = {{"p", p}};
    auto it = std::find_if(c.local.begin(), c.local.end(), [p](const ReductionData& d) { return d.prime == p; });
    const bool bad = it != c.local.end() && it->conductor_exponent > 0;
    r.plain << "  " << std::left << std::setw(6) << p << " ";
    if (bad) {
      row["reduction"] = "bad";
      row["a_p"] = nullptr;
      row["note"] = "skipped: bad reduction";
      r.plain << "skipped: bad reduction\n";
    } else {
      const std::int64_t ap = it != c.local.end() ? it->local_ap : ap_good(lam, p);
      row["reduction"] = "good";
      row["a_p"] = ap;
      r.plain << ap << "\n";
    }
    rows.push_back(row);
  }
  r.results = {{"lambda", lam.to_string()}, {"conductor", c.conductor}, {"rows", rows}};
}

void cmd_candidates(RunReport& r, std::int64_t level, int bound) {
  const CandidateSet c = enumerate_candidates(level, bound);
  const DimensionBreakdown d = dim_S2(level);
  r.inputs = {{"level", level}, {"bound", bound}};
  Json list = Json::array();
  for (const auto& q : c.quotients) list.push_back(format_bracket(q));
  r.results = {{"level", level}, {"bound", bound}, {"dimension", d.dimension}, {"count", c.quotients.size()},
               {"quotients", list}};
  r.plain << c.quotients.size() << " eta-quotients in S2(Gamma0(" << level << ")) with |r| <= " << bound
          << " (dimension " << d.dimension << ")\n";
  for (const auto& q : c.quotients) r.plain << "  " << format_bracket(q) << "\n";
}

void cmd_theorem1(RunReport& r, const std::string& lam_text, std::optional<std::size_t> precision, int bound,
                  const std::vector<std::string>& prefer) {
  const Rational lam = Rational::parse(lam_text);
  DiscoveryOptions opts;
  opts.bound = bound;
  opts.precision = precision;
  // CLI11 strips the outer brackets from vector arguments, so accept either form.
  for (const auto& text : prefer) opts.preferred.push_back(parse_bracket(text.starts_with('[') ? text : "[" + text + "]"));
  const auto tabulated = tabulated_representation(lam);
  if (opts.preferred.empty() && tabulated)
    for (const auto& [c, q] : *tabulated) opts.preferred.push_back(q);

  const DiscoveryReport rep = discover_representation(lam, opts);
  r.inputs = {{"lambda", lam_text}, {"bound", bound}};
  if (precision) r.inputs["precision"] = *precision;
  if (!prefer.empty()) r.inputs["prefer"] = prefer;

  Json basis = Json::array();
  for (const auto& q : rep.basis) basis.push_back(format_bracket(q));
  Json coeffs = Json::array();
  for (const auto& c : rep.solution.coefficients) coeffs.push_back(c.to_string());
  const Combination combo = rep.combination();

  std::optional<bool> table_match;
  if (tabulated && rep.in_span) table_match = combo == *tabulated;

  r.results = {{"lambda", lam.to_string()},
               {"conductor", rep.conductor.conductor},
               {"dimension", rep.dimension.dimension},
               {"candidate_count", rep.candidates.quotients.size()},
               {"basis", basis},
               {"complete_basis", rep.complete_basis},
               {"witness_indices", rep.witness.indices},
               {"precision", rep.precision},
               {"in_span", rep.in_span},
               {"basis_coefficients", coeffs},
               {"combination", combination_json(combo)},
               {"verified_to", rep.solution.verified_to}};
  r.results["tabulated_match"] = table_match ? Json(*table_match) : Json(nullptr);

  r.plain << "lambda = " << lam << ", conductor N = " << rep.conductor.conductor << ", dim S2 = "
          << rep.dimension.dimension << ", " << rep.candidates.quotients.size() << " candidates\n";
  r.plain << "basis (" << rep.basis.size() << (rep.complete_basis ? ", complete" : ", incomplete") << "):\n";
  for (const auto& q : rep.basis) r.plain << "  " << format_bracket(q) << "\n";
  r.plain << "independence indices:";
  for (auto t : rep.witness.indices) r.plain << " " << t;
  r.plain << "\n";
  if (rep.in_span) {
    r.plain << "f_lambda = " << combination_text(combo) << "\n";
    r.plain << "verified for n <= " << rep.solution.verified_to << "\n";
  } else {
    r.plain << "not in span: " << rep.failure << "\n";
  }

  if (!rep.in_span) {
    r.status = Status::Mismatch;
    r.message = rep.failure;
  } else if (table_match && !*table_match) {
    r.status = Status::Mismatch;
    r.message = "recovered combination differs from the tabulated one";
  }
}

void cmd_hyper(RunReport& r, const std::string& lam_text, std::int64_t p) {
  const Rational lam = Rational::parse(lam_text);
  const CharContext ctx(p);
  const std::int64_t lbar = mod_p(lam, p);
  const Rational value = two_f1(ctx, lbar);
  const std::int64_t ap = ap_good(lam, p);
  const std::int64_t phi_minus_one = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
  const Rational expected = Rational(-phi_minus_one * ap) / Rational(p);
  const bool holds = verify_eq5(lam, p);
  r.inputs = {{"lambda", lam_text}, {"prime", p}};
  r.results = {{"lambda", lam.to_string()},
               {"prime", p},
               {"lambda_mod_p", lbar},
               {"generator", ctx.generator()},
               {"two_f1", value.to_string()},
               {"a_p", ap},
               {"phi_minus_one", phi_minus_one},
               {"expected", expected.to_string()},
               {"identity_holds", holds}};
  r.plain << "2F1(" << lbar << ") over GF(" << p << ") = " << value << "\n"
          << "-phi(-1) a(p)/p = " << expected << " (a(p) = " << ap << ")\n"
          << (holds ? "identity holds" : "IDENTITY FAILS") << "\n";
  if (!holds) {
    r.status = Status::Mismatch;
    r.message = "2F1 value differs from -phi(-1)a(p)/p";
  }
}

void cmd_apery(RunReport& r, std::int64_t n, std::int64_t m, std::int64_t l, const std::string& r_text) {
  const Rational x = Rational::parse(r_text);
  const Rational d = apery_D(n, m, l, x);
  r.inputs = {{"n", n}, {"m", m}, {"l", l}, {"r", r_text}};
  r.results = {{"D", d.to_string()}};
  r.plain << "D(" << n << ";" << m << "," << l << "," << x << ") = " << d << "\n";
}

void cmd_theorem2(RunReport& r, const std::string& lam_text, const std::string& range_text) {
  const Rational lam = Rational::parse(lam_text);
  const PrimeRange range = parse_range(range_text);
  LegendreCurve curve(lam);
  r.inputs = {{"lambda", lam_text}, {"primes", range_text}};
  Json rows = Json::array();
  bool all_match = true;
  std::size_t checked = 0;
  r.plain << "  p      a(p)          B(p)   match\n";
  for (std::int64_t p : primes_in_range(range.lo, range.hi)) {
    Json row = {{"p", p}};
    r.plain << "  " << std::left << std::setw(6) << p << " ";
    if (p == 2) {
      row["note"] = "skipped: p = 2";
      r.plain << "skipped: p = 2\n";
    } else if (ord_p(lam, p) != 0 || ord_p(lam - Rational(1), p) != 0) {
      row["note"] = "skipped: bad reduction";
      r.plain << "skipped: bad reduction\n";
    } else {
      const std::int64_t ap = ap_good(lam, p);
      const std::int64_t b = theorem2_rhs(p, lam);
      const bool match = mod_p(ap, p) == b;
      all_match = all_match && match;
      ++checked;
      row["a_p"] = ap;
      row["a_p_mod_p"] = mod_p(ap, p);
      row["B"] = b;
      row["match"] = match;
      std::ostringstream apcol;
      apcol << ap << " = " << mod_p(ap, p);
      r.plain << std::setw(13) << apcol.str() << " " << std::setw(6) << b << " " << (match ? "yes" : "NO") << "\n";
    }
    rows.push_back(row);
  }
  r.results = {{"lambda", lam.to_string()}, {"checked", checked}, {"all_match", all_match}, {"rows", rows}};
  if (!all_match) {
    r.status = Status::Mismatch;
    r.message = "congruence fails for at least one prime";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"etaforge: eta-quotients, Legendre curves and Gaussian hypergeometric congruences"};
  app.name("etaforge");
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "Human-readable tables instead of JSON");

  std::string bracket, lam_text, range_text, r_text;
  std::int64_t level = 0, prime = 0, n = 0, m = 0, l = 0;
  std::optional<std::size_t> terms, precision;
  int bound = 3;
  std::vector<std::string> prefer;

  auto* expand = app.add_subcommand("expand", "q-expansion of an eta-quotient");
  expand->add_option("quotient", bracket, "e.g. \"[1^2 11^2]\"")->required();
  expand->add_option("--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);

  auto* membership = app.add_subcommand("membership", "S2(Gamma0(N)) membership and cusp orders");
  membership->add_option("quotient", bracket)->required();
  membership->add_option("--level", level)->required()->check(CLI::PositiveNumber);

  auto* dimension = app.add_subcommand("dimension", "dim S2(Gamma0(N))");
  dimension->add_option("level", level)->required()->check(CLI::PositiveNumber);

  auto* cond = app.add_subcommand("conductor", "Conductor and local data of E_lambda");
  cond->add_option("lambda", lam_text)->required();

  auto* ap = app.add_subcommand("ap", "a(p; lambda) over a prime range");
  ap->add_option("lambda", lam_text)->required();
  ap->add_option("--primes", range_text, "p1..p2")->required();

  auto* cands = app.add_subcommand("candidates", "Eta-quotients in S2(Gamma0(N))");
  cands->add_option("level", level)->required()->check(CLI::PositiveNumber);
  cands->add_option("--bound", bound, "Exponent bound B")->check(CLI::PositiveNumber);

  auto* thm1 = app.add_subcommand("verify-theorem1", "Find and verify an eta-quotient representation of f_lambda");
  thm1->add_option("lambda", lam_text)->required();
  thm1->add_option("--precision", precision, "Coefficients to verify")->check(CLI::PositiveNumber);
  thm1->add_option("--bound", bound, "Exponent bound B")->check(CLI::PositiveNumber);
  thm1->add_option("--prefer", prefer, "Eta-quotients to try first when building the basis");

  auto* hyper = app.add_subcommand("hyper", "2F1(lambda) over GF(p) and the a(p) identity");
  hyper->add_option("lambda", lam_text)->required();
  hyper->add_option("--prime", prime)->required();

  auto* apery = app.add_subcommand("apery", "Generalized Apery number D(n; m, l, r)");
  apery->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  apery->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  apery->add_option("l", l)->required()->check(CLI::NonNegativeNumber);
  apery->add_option("r", r_text)->required();

  auto* thm2 = app.add_subcommand("verify-theorem2", "a(p; lambda) against the Apery-sum congruence");
  thm2->add_option("lambda", lam_text)->required();
  thm2->add_option("--primes", range_text, "p1..p2")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return static_cast<int>(ExitCode::Error);
  }

  RunReport report;
  try {
    if (*expand) {
      report.command = "expand";
      cmd_expand(report, bracket, terms ? *terms : precision_from_env(kDefaultPrecision));
    } else if (*membership) {
      report.command = "membership";
      cmd_membership(report, bracket, level);
    } else if (*dimension) {
      report.command = "dimension";
      cmd_dimension(report, level);
    } else if (*cond) {
      report.command = "conductor";
      cmd_conductor(report, lam_text);
    } else if (*ap) {
      report.command = "ap";
      cmd_ap(report, lam_text, range_text);
    } else if (*cands) {
      report.command = "candidates";
      cmd_candidates(report, level, bound);
    } else if (*thm1) {
      report.command = "verify-theorem1";
      if (!precision) precision = precision_from_env(kDefaultPrecision);
      cmd_theorem1(report, lam_text, precision, bound, prefer);
    } else if (*hyper) {
      report.command = "hyper";
      cmd_hyper(report, lam_text, prime);
    } else if (*apery) {
      report.command = "apery";
      cmd_apery(report, n, m, l, r_text);
    } else if (*thm2) {
      report.command = "verify-theorem2";
      cmd_theorem2(report, lam_text, range_text);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return static_cast<int>(ExitCode::Error);
  } catch (const std::exception& e) {
    report.status = Status::Error;
    report.message = e.what();
    report.plain.str("");
    report.plain << "error: " << e.what() << "\n";
  }

  if (plain) {
    out << report.plain.str();
    if (report.status != Status::Ok && report.status != Status::Error) out << "status: " << status_name(report.status) << ": " << report.message << "\n";
  } else {
    Json doc;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    doc["results"] = report.results;
    doc["status"] = status_name(report.status);
    if (!report.message.empty()) doc["message"] = report.message;
    out << doc.dump(2) << "\n";
  }
  switch (report.status) {
    case Status::Ok: return static_cast<int>(ExitCode::Ok);
    case Status::Mismatch: return static_cast<int>(ExitCode::Mismatch);
    case Status::Error: break;
  }
  return static_cast<int>(ExitCode::Error);
}

}  // namespace etaforge::cli
