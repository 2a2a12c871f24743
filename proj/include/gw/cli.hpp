#pragma once

// The `gw` command line: argument parsing, dispatch, and JSON reports.

#include <gw/degeneration.hpp>
#include <gw/error.hpp>
#include <gw/partitions.hpp>
#include <gw/quantum.hpp>
#include <gw/rational.hpp>
#include <gw/relative.hpp>
#include <gw/ring.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gw::cli {

using Json = nlohmann::ordered_json;

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Unsupported: return 2;
    case ErrorKind::HypothesisViolated:
    case ErrorKind::Inapplicable: return 3;
    case ErrorKind::Parameter:
    case ErrorKind::Precondition: return 1;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

inline std::string str(const Rational& r) { return to_string(r); }

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<RingElement> parse_classes(const Space& space, std::string_view list) {
  std::vector<RingElement> out;
  for (const auto& s : split(list, ',')) out.push_back(RingElement::parse(space, s));
  return out;
}

/// "p1:c1=1", "pt", "gr:2:4:c1=2"; c1 defaults to 0.
inline BundleSpec parse_bundle(std::string_view text) {
  auto pos = text.rfind(":c1=");
  if (pos == std::string_view::npos) return BundleSpec{parse_space(text), 0};
  auto num = text.substr(pos + 4);
  long c = 0;
  try {
    std::size_t used = 0;
    c = std::stol(std::string(num), &used);
    if (used != num.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorKind::Parameter, "bad c1 value: " + std::string(text));
  }
  return BundleSpec{parse_space(text.substr(0, pos)), c};
}

/// "2F", "F", "1B", "1B+2F".
inline BundleClass parse_bundle_class(std::string_view text) {
  BundleClass c;
  bool any = false;
  for (const auto& part : split(text, '+')) {
    if (part.empty()) fail(ErrorKind::Parameter, "bad class: " + std::string(text));
    char tag = part.back();
    std::string num = part.substr(0, part.size() - 1);
    long v = 1;
    if (!num.empty()) {
      if (num.find_first_not_of("0123456789") != std::string::npos || num.size() > 6)
        fail(ErrorKind::Parameter, "bad class: " + std::string(text));
      v = std::stol(num);
    }
    if (tag == 'F')
      c.fiber += v;
    else if (tag == 'B')
      c.base_degree += v;
    else
      fail(ErrorKind::Parameter, "bad class: " + std::string(text));
    any = true;
  }
  if (!any) fail(ErrorKind::Parameter, "empty class");
  return c;
}

/// "zs:pt", "pb:h", "zs:pt@3" (τ_2 on the zero-section class).
inline RelInsertion parse_rel_insertion(const Space& base, std::string_view text) {
  int psi = 0;
  auto at = text.find('@');
  std::string_view body = text.substr(0, at);
  if (at != std::string_view::npos) {
    auto num = std::string(text.substr(at + 1));
    if (num.empty() || num.size() > 3 || num.find_first_not_of("0123456789") != std::string::npos || std::stoi(num) < 1)
      fail(ErrorKind::Parameter, "bad descendent index: " + std::string(text));
    psi = std::stoi(num) - 1;
  }
  if (body.starts_with("zs:")) return RelInsertion::zero_section(RingElement::parse(base, body.substr(3)), psi);
  if (body.starts_with("pb:")) {
    if (psi) fail(ErrorKind::Parameter, "descendents are only allowed on zero-section insertions");
    return RelInsertion::pullback(RingElement::parse(base, body.substr(3)));
  }
  fail(ErrorKind::Parameter, "insertion must start with zs: or pb: " + std::string(text));
}

inline Json term_json(const DegenerationTerm& t, bool verbose) {
  Json j;
  j["partition"] = t.x_side.partition.to_string();
  j["delta"] = t.delta.str();
  j["value"] = str(t.value);
  if (verbose) {
    j["x_side"] = key_string(t.x_side);
    j["x_value"] = str(t.x_value);
    j["y_value"] = str(t.y_value);
    Json ys = Json::array();
    for (const auto& y : t.y_side) ys.push_back({{"query", y.query.to_string()}, {"value", str(y.value)}});
    j["y_side"] = ys;
  }
  return j;
}

inline Json report_json(const ComparisonReport& r, bool verbose) {
  Json j;
  j["query"] = r.query;
  j["equal"] = r.equal;
  j["lhs"] = str(r.lhs);
  j["rhs"] = str(r.rhs);
  Json terms = Json::array();
  for (const auto& t : r.enumeration.terms) terms.push_back(term_json(t, verbose));
  j["terms"] = terms;
  if (verbose) {
    Json pruned = Json::array();
    for (const auto& p : r.enumeration.pruned) pruned.push_back({{"component", p.query.to_string()}, {"reason", p.reason}});
    j["pruned"] = pruned;
    j["notes"] = r.enumeration.notes;
  }
  return j;
}

inline std::vector<std::string> labels(const std::vector<RingElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

inline std::vector<std::vector<int>> multisets(int rank, int size, int lo = 0) {
  if (size == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = lo; i < rank; ++i)
    for (auto rest : multisets(rank, size - 1, i)) {
      rest.insert(rest.begin(), i);
      out.push_back(rest);
    }
  return out;
}

/// Point classes of X filling the dimension left by the shrieked betas; empty
/// when no count fits.
inline std::vector<RingElement> default_alphas(const Cut& cut, long d, const std::vector<RingElement>& betas) {
  const Space& x = cut.ambient();
  long need = virtual_dimension(x, d, static_cast<long>(betas.size()));
  for (const auto& b : betas) need -= b.degree().value_or(0) + 2;
  long per = 2L * x.complex_dimension() - 2;
  if (need < 0 || per <= 0 || need % per) return {};
  return std::vector<RingElement>(need / per, RingElement::point_class(x));
}

struct Options {
  std::string space = "p2";
  long degree = 1;
  std::string insertions;
  int nd_max = 5;
  std::string product;
  bool quantum = false;
  std::string bundle = "p1:c1=1";
  std::string cls = "F";
  std::string partition;
  std::string testbed = "p1-pt";
  int points = 2;
  int max_degree = 0;
  std::string alphas;
  std::string betas;
  bool alphas_given = false;
  int k = 2;
  bool force_relative = false;
  bool verbose = false;
};

inline Json cmd_abs(const Options& o, std::ostream& err) {
  Space s = parse_space(o.space);
  InvariantQuery q{s, o.degree, parse_classes(s, o.insertions)};
  Rational v = gw_invariant(q);
  err << q.to_string() << " = " << str(v) << "\n";
  return Json{{"query", q.to_string()}, {"status", "ok"}, {"value", str(v)}};
}

inline Json cmd_nd(const Options& o, std::ostream& err) {
  auto N = plane_curve_counts(o.nd_max);
  Json j = Json::object();
  for (int d = 1; d <= o.nd_max; ++d) j[std::to_string(d)] = N[d].str();
  err << "N_1 .. N_" << o.nd_max << "\n";
  return j;
}

inline Json cmd_ring(const Options& o, std::ostream& err) {
  Space s = parse_space(o.space);
  Json j;
  j["space"] = s.name();
  if (o.product.empty()) {
    auto dual = dual_basis(s);
    Json basis = Json::array();
    for (const auto& b : s.basis())
      basis.push_back({{"label", b.label}, {"degree", b.real_degree}, {"dual", s.basis()[dual[b.index]].label}});
    j["basis"] = basis;
    err << s.name() << ": rank " << s.rank() << "\n";
    return j;
  }
  auto factors = parse_classes(s, o.product);
  j["factors"] = labels(factors);
  if (o.quantum) {
    QuantumClass acc = as_quantum(RingElement::unit(s));
    for (const auto& f : factors) acc = quantum_multiply(acc, as_quantum(f));
    j["product"] = acc.to_string();
  } else {
    j["product"] = cup_all(s, factors).to_string();
  }
  err << j["product"].get<std::string>() << "\n";
  return j;
}

inline Json cmd_rel(const Options& o, std::ostream& err) {
  BundleSpec b = parse_bundle(o.bundle);
  RelQuery q{b, parse_bundle_class(o.cls), {}, parse_partition(b.base, o.partition)};
  for (const auto& s : split(o.insertions, ',')) q.insertions.push_back(parse_rel_insertion(b.base, s));
  RelValue v = evaluate(q);
  Json j;
  j["query"] = q.to_string();
  j["bundle"] = b.to_string();
  if (v.vanishes) {
    j["status"] = "vanishes";
    j["value"] = "0";
  } else {
    j["status"] = "ok";
    j["value"] = str(v.value);
  }
  j["reason"] = v.reason;
  err << q.to_string() << " = " << str(v.value) << " (" << v.reason << ")\n";
  return j;
}

inline Json cmd_rc(const Options& o, std::ostream& err) {
  Space s = parse_space(o.space);
  int bound = o.max_degree > 0 ? o.max_degree : 2;
  auto w = rc_certificate(s, o.k, bound);
  Json j;
  j["space"] = s.name();
  j["k"] = o.k;
  j["max_degree"] = bound;
  j["status"] = "ok";
  j["certified"] = w.has_value();
  if (w) {
    j["query"] = w->query.to_string();
    j["degree"] = w->query.degree;
    j["value"] = str(w->value);
  }
  err << s.name() << (w ? " is " : " is not certified ") << o.k << "-point rationally connected"
      << (w ? " by " + w->query.to_string() : "") << "\n";
  return j;
}

inline RelativeOracle source_for(const Cut& cut, long d, const std::vector<RingElement>& alphas,
                                 const std::vector<RingElement>& betas) {
  if (cut.name == "p1-pt") return bundle_oracle(cut);
  return table_oracle(solve_relative(cut, d, alphas, betas));
}

inline Json cmd_verify(const Options& o, std::ostream& err) {
  Cut cut = testbed(o.testbed);
  const Space& x = cut.ambient();
  const Space& z = cut.base();
  if (o.max_degree > 0) {
    Json reports = Json::array();
    int checked = 0, skipped = 0;
    bool all = true;
    auto V = cut.V();
    int max_l = static_cast<int>(V ? std::min<long>(*V, 2) : 2);
    for (long d = 1; d <= o.max_degree; ++d)
      for (int m = 0; m <= 3; ++m)
        for (const auto& ai : multisets(static_cast<int>(x.rank()) - 1, m))
          for (int l = 0; l <= max_l; ++l)
            for (const auto& bi : multisets(static_cast<int>(z.rank()), l)) {
              std::vector<RingElement> alphas, betas;
              for (int i : ai) alphas.push_back(RingElement::basis(x, i + 1));
              for (int i : bi) betas.push_back(RingElement::basis(z, i));
              long deg = 0;
              for (const auto& a : alphas) deg += *a.degree();
              for (const auto& b : betas) deg += *b.degree() + 2;
              if (deg != virtual_dimension(x, d, m + l)) continue;
              try {
                auto r = verify_comparison(cut, d, alphas, betas, source_for(cut, d, alphas, betas));
                all = all && r.equal;
                ++checked;
                reports.push_back(report_json(r, o.verbose));
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::Unsupported) throw;
                ++skipped;
              }
            }
    err << cut.name << ": " << checked << " identities checked, " << skipped << " unsupported, "
        << (all ? "all equal" : "MISMATCH") << "\n";
    return Json{{"testbed", cut.name}, {"max_degree", o.max_degree}, {"equal", all}, {"checked", checked},
                {"skipped", skipped}, {"reports", reports}};
  }
  std::vector<RingElement> alphas, betas;
  long d = o.degree;
  if (o.alphas_given || !o.betas.empty()) {
    betas = parse_classes(z, o.betas);
    alphas = o.alphas_given ? parse_classes(x, o.alphas) : default_alphas(cut, d, betas);
  } else {
    // m point insertions, one of them carried to the Y side
    if (o.points < 1) fail(ErrorKind::Parameter, "--points must be positive");
    alphas.assign(o.points - 1, RingElement::point_class(x));
    betas.push_back(RingElement::point_class(z));
    if (cut.name != "p1-pt") {
      alphas.push_back(RingElement::point_class(x));
      betas.clear();
    }
  }
  auto r = verify_comparison(cut, d, alphas, betas, source_for(cut, d, alphas, betas));
  err << r.query << ": lhs " << str(r.lhs) << ", rhs " << str(r.rhs) << "\n";
  Json j = report_json(r, o.verbose);
  j["testbed"] = cut.name;
  return j;
}

inline Json cmd_solve(const Options& o, std::ostream& err) {
  Cut cut = testbed(o.testbed);
  const Space& x = cut.ambient();
  const Space& z = cut.base();
  auto betas = parse_classes(z, o.betas);
  auto alphas = o.alphas_given ? parse_classes(x, o.alphas) : default_alphas(cut, o.degree, betas);
  SolveResult s = solve_relative(cut, o.degree, alphas, betas);
  auto oracle = table_oracle(s);
  Json j;
  j["testbed"] = cut.name;
  j["query"] = describe_query(cut, o.degree, alphas, betas);
  Json table = Json::array();
  for (const auto& [k, e] : s.table) table.push_back({{"key", k}, {"value", str(e.value)}});
  j["table"] = table;
  Json eqs = Json::array();
  for (const auto& eq : s.equations) {
    std::vector<RingElement> bs;
    for (int i : eq.subset) bs.push_back(betas[i]);
    eqs.push_back({{"betas", labels(bs)}, {"lhs", str(eq.lhs)}, {"rhs", str(comparison_rhs(oracle, cut, o.degree, alphas, bs))}});
  }
  j["equations"] = eqs;
  j["refused"] = s.refused;
  j["consistent"] = s.consistent();
  Rational lhs = comparison_lhs(cut, o.degree, alphas, betas);
  j["lhs"] = str(lhs);
  Json terms = Json::array();
  Rational rhs = 0;
  require_comparison_hypotheses(cut, betas.size());
  for (const auto& cp : comparison_partitions(z, betas, cut.divisor.intersection(o.degree))) {
    InvariantKey key{o.degree, 0, alphas, cp.partition};
    Rational v = cp.coefficient * Rational(cp.orderings) * oracle(key);
    rhs += v;
    terms.push_back({{"partition", cp.partition.to_string()}, {"delta", cp.partition.delta_factor().str()},
                     {"orderings", cp.orderings.str()}, {"value", str(v)}});
  }
  j["rhs"] = str(rhs);
  j["terms"] = terms;
  j["equal"] = lhs == rhs;
  err << j["query"].get<std::string>() << ": " << s.table.size() << " relative values recovered\n";
  return j;
}

inline Json cmd_lift(const Options& o, std::ostream& err) {
  Cut cut = testbed(o.testbed);
  DivisorWitness w = default_divisor_witness(cut, o.k);
  LiftResult r = rc_lift(cut, w, o.force_relative);
  std::string q = "<";
  for (std::size_t i = 0; i < r.labels.size(); ++i) q += (i ? "," : "") + r.labels[i];
  q += ">^{" + cut.ambient().name() + "}_" + std::to_string(r.x_query.degree);
  std::string zq = "<";
  bool first = true;
  for (int i = 0; i < w.points; ++i) zq += (std::exchange(first, false) ? "" : ",") + std::string("pt");
  for (const auto& b : w.betas) zq += (std::exchange(first, false) ? "" : ",") + b.to_string();
  zq += ">^{" + cut.base().name() + "}_" + std::to_string(w.degree);
  Json j;
  j["testbed"] = cut.name;
  j["query"] = q;
  j["status"] = "ok";
  j["value"] = str(r.value);
  j["points"] = r.points;
  j["route"] = r.route;
  j["divisor_witness"] = zq;
  j["divisor_value"] = str(r.divisor_value);
  if (r.relative_key) j["relative_key"] = key_string(*r.relative_key);
  err << cut.name << ": " << zq << " = " << str(r.divisor_value) << " lifts to " << q << " = " << str(r.value) << "\n";
  return j;
}

/// Runs one command line (without the program name). Reports go to `out` as
/// one line of JSON, human summaries and usage to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-zero Gromov-Witten invariants with exact arithmetic", "gw"};
  app.require_subcommand(1);
  Options o;
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Add term breakdowns");

  auto* abs = app.add_subcommand("abs", "Absolute invariant <insertions>^X_d");
  abs->add_option("--space", o.space, "pt | pN | pn:N | gr:k:n")->required();
  abs->add_option("--degree", o.degree, "Curve degree")->required();
  abs->add_option("--insertions", o.insertions, "Comma-separated basis labels");

  auto* nd = app.add_subcommand("nd", "Rational plane curve counts N_d");
  nd->add_option("--max", o.nd_max, "Largest degree")->check(CLI::Range(1, 60));

  auto* ring = app.add_subcommand("ring", "Basis, cup and quantum products");
  ring->add_option("--space", o.space)->required();
  ring->add_option("--product", o.product, "Comma-separated factors");
  ring->add_flag("--quantum", o.quantum, "Small quantum product");

  auto* rel = app.add_subcommand("rel", "Relative invariant of a P^1-bundle");
  rel->add_option("--bundle", o.bundle, "base:c1=N, e.g. p1:c1=1")->required();
  rel->add_option("--class", o.cls, "sF, aB or aB+sF")->required();
  rel->add_option("--partition", o.partition, "e.g. (2,pt)+(1,1)");
  rel->add_option("--insertions", o.insertions, "zs:<class>[@d] or pb:<class>, comma-separated");

  auto* rc = app.add_subcommand("rc", "k-point rational connectedness certificate");
  rc->add_option("--space", o.space)->required();
  rc->add_option("--k", o.k)->check(CLI::Range(0, 20));
  rc->add_option("--max-degree", o.max_degree)->check(CLI::Range(1, 10));

  auto* verify = app.add_subcommand("verify", "Check an identity");
  verify->require_subcommand(1);
  auto* comparison = verify->add_subcommand("comparison", "Degeneration against the absolute invariant");
  comparison->add_option("--testbed", o.testbed)->required();
  comparison->add_option("--points", o.points)->check(CLI::Range(1, 12));
  comparison->add_option("--max-degree", o.max_degree)->check(CLI::Range(1, 4));
  comparison->add_option("--degree", o.degree)->check(CLI::Range(1, 6));
  auto* va = comparison->add_option("--alphas", o.alphas, "Ambient classes");
  comparison->add_option("--betas", o.betas, "Divisor classes carried by the shriek map");

  auto* solve = app.add_subcommand("solve", "Recover invariants");
  solve->require_subcommand(1);
  auto* relative = solve->add_subcommand("relative", "Relative invariants of (X, Z) by Möbius inversion");
  relative->add_option("--testbed", o.testbed)->required();
  relative->add_option("--betas", o.betas);
  relative->add_option("--degree", o.degree)->check(CLI::Range(1, 6));
  auto* sa = relative->add_option("--alphas", o.alphas);

  auto* lift = app.add_subcommand("lift", "Lift a divisor witness of rational connectedness");
  lift->add_option("--testbed", o.testbed)->required();
  lift->add_option("--k", o.k)->check(CLI::Range(0, 12));
  lift->add_flag("--force-relative", o.force_relative);

  for (auto* sub : {abs, nd, ring, rel, rc, comparison, relative, lift}) sub->add_flag("--verbose", verbose);

  std::vector<std::string> argv_storage{"gw"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }
  o.verbose = verbose;
  o.alphas_given = va->count() > 0 || sa->count() > 0;

  Json report;
  try {
    if (*abs) report = cmd_abs(o, err);
    else if (*nd) report = cmd_nd(o, err);
    else if (*ring) report = cmd_ring(o, err);
    else if (*rel) report = cmd_rel(o, err);
    else if (*rc) report = cmd_rc(o, err);
    else if (*comparison) report = cmd_verify(o, err);
    else if (*relative) report = cmd_solve(o, err);
    else if (*lift) report = cmd_lift(o, err);
  } catch (const Error& e) {
    int code = exit_code(e.kind());
    if (code == 1) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    out << Json{{"status", to_string(e.kind())}, {"reason", e.message()}}.dump() << "\n";
    err << e.what() << "\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << report.dump() << "\n";
  return 0;
}

}  // namespace gw::cli
