#include "qbforge/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbforge/algebra.hpp"
#include "qbforge/catalog.hpp"
#include "qbforge/filters.hpp"
#include "qbforge/forge.hpp"
#include "qbforge/hoops.hpp"
#include "qbforge/io.hpp"
#include "qbforge/primes.hpp"
#include "qbforge/quantale.hpp"
#include "qbforge/types.hpp"

namespace qbforge {
namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t cap = kDefaultUpperSetCap;
  std::uint64_t seed = 0;
  bool timing = false;
};

std::string set_text(const FiniteAlgebra& a, Mask m) {
  std::string s = "{";
  for (int x = 0; x < a.size(); ++x)
    if (has_bit(m, x)) {
      if (s.size() > 1) s += ',';
      s += a.label(x);
    }
  return s + "}";
}

ordered_json set_json(const FiniteAlgebra& a, Mask m) {
  auto arr = ordered_json::array();
  for (int x = 0; x < a.size(); ++x)
    if (has_bit(m, x)) arr.push_back(a.label(x));
  return arr;
}

// "{a,1}", "a,1", "{}" or "-" for empty, "*" for the whole carrier
Mask parse_set(const FiniteAlgebra& a, const std::string& spec) {
  std::string body = spec;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw Error("parse", "unbalanced braces in set '" + spec + "'");
    body = body.substr(1, body.size() - 2);
  }
  if (body == "-" || body.empty()) return 0;
  if (body == "*") return bit(a.size()) - 1;
  Mask m = 0;
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    int found = -1;
    for (int x = 0; x < a.size(); ++x)
      if (a.label(x) == tok) found = x;
    if (found < 0)
      throw Error("unknown_label",
                  "no element '" + tok + "' in " + a.name());
    m |= bit(found);
  }
  return m;
}

FiniteAlgebra load_algebra(const std::string& ref) {
  if (std::ifstream in(ref); in) {
    std::ostringstream text;
    text << in.rdbuf();
    return ingest_algebra(text.str());
  }
  try {
    return catalog(ref);
  } catch (const Error& e) {
    if (std::string(e.code()) == "unknown_name")
      throw Error("unknown_name", "'" + ref +
                                      "' is neither a readable file nor a "
                                      "catalog name");
    throw;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void spell_violations(std::ostream& out, const FiniteAlgebra& a,
                      const ClassReport& r) {
  for (const auto& v : r.violations) {
    out << "  " << v.law;
    if (!v.elems.empty() || !v.sets.empty()) out << ":";
    for (int e : v.elems) out << ' ' << a.label(e);
    for (const auto& s : v.sets) out << ' ' << set_text(a, s.bits);
    out << '\n';
  }
}

ordered_json violations_json(const FiniteAlgebra& a, const ClassReport& r) {
  auto arr = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json one;
    one["law"] = v.law;
    one["elems"] = ordered_json::array();
    for (int e : v.elems) one["elems"].push_back(a.label(e));
    one["sets"] = ordered_json::array();
    for (const auto& s : v.sets) one["sets"].push_back(set_json(a, s.bits));
    arr.push_back(std::move(one));
  }
  return arr;
}

ordered_json algebra_json(const FiniteAlgebra& a) {
  const int n = a.size();
  ordered_json j;
  j["name"] = a.name();
  j["size"] = n;
  j["elements"] = a.labels();
  auto matrix = [&](const std::vector<int>& t) {
    auto rows = ordered_json::array();
    for (int x = 0; x < n; ++x) {
      auto row = ordered_json::array();
      for (int y = 0; y < n; ++y) row.push_back(a.label(t[x * n + y]));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto leq = ordered_json::array();
  for (int x = 0; x < n; ++x) {
    auto row = ordered_json::array();
    for (int y = 0; y < n; ++y) row.push_back(a.leq(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["to"] = matrix(a.data().to);
  j["lto"] = matrix(a.data().lto);
  if (a.has_mul()) j["mul"] = matrix(*a.data().mul);
  if (a.data().unit) j["unit"] = a.label(*a.data().unit);
  if (a.data().bottom) j["bottom"] = a.label(*a.data().bottom);
  return j;
}

void verdict_line(std::ostream& out, const Options& o, bool holds) {
  if (!o.json) out << "verdict: " << (holds ? "holds" : "violated") << '\n';
}

// ---------------------------------------------------------------- validate

int cmd_validate(const FiniteAlgebra& a, const Options& o, std::ostream& out,
                 ordered_json& doc) {
  ClassReport qb = check_quantum_b(a);
  std::optional<int> unit;
  bool unit_clash = false;
  try {
    unit = check_unital(a);
  } catch (const Error& e) {
    if (std::string(e.code()) != "multiple_units") throw;
    unit_clash = true;
  }
  bool integral = !unit_clash && check_integral(a);
  bool jsl = check_join_semilattice(a);
  ClassReport res;
  bool two_sided = false;
  if (a.has_mul()) {
    res = check_residuated(a);
    two_sided = check_two_sided(a);
  }
  ClassReport hoop;
  bool is_hoop = false;
  if (a.has_mul() && res.holds) {
    hoop = check_pseudo_hoop(a);
    is_hoop = hoop.holds;
  }
  ClassReport extras;
  if (is_hoop) extras = check_extras(a);
  MtlFlags mtl = check_mtl(a);
  bool asserted = qb.holds && (!a.has_mul() || res.holds);

  if (o.json) {
    doc["algebra"] = a.name();
    doc["size"] = a.size();
    ordered_json pos;
    pos["quantum_b"] = qb.holds;
    pos["unital"] = unit.has_value();
    if (unit) pos["unit"] = a.label(*unit);
    pos["integral"] = integral;
    pos["join_semilattice"] = jsl;
    pos["has_mul"] = a.has_mul();
    if (a.has_mul()) {
      pos["residuated"] = res.holds;
      pos["two_sided"] = two_sided;
      pos["pseudo_hoop"] = is_hoop;
    }
    pos["bounded"] = a.bottom().has_value();
    if (a.bottom()) pos["bottom"] = a.label(*a.bottom());
    pos["to_mtl"] = mtl.to_mtl;
    pos["lto_mtl"] = mtl.lto_mtl;
    pos["pseudo_mtl"] = mtl.pseudo_mtl;
    if (is_hoop) {
      pos["cancellative"] = extras.law_holds("cancellative");
      pos["pseudo_bl"] = extras.law_holds("pseudo_bl");
      pos["pseudo_mv"] = extras.law_holds("pseudo_mv");
    }
    doc["position"] = std::move(pos);
    ordered_json viol = violations_json(a, qb);
    for (auto& v : violations_json(a, res)) viol.push_back(v);
    doc["violations"] = std::move(viol);
    doc["holds"] = asserted;
    return asserted ? 0 : 1;
  }

  out << "algebra " << a.name() << ": " << a.size() << " elements\n";
  auto line = [&](const char* what, const std::string& value) {
    out << "  " << std::left << std::setw(18) << what << ' ' << value << '\n';
  };
  line("quantum B-algebra", yesno(qb.holds));
  line("unital", unit ? "yes, unit " + a.label(*unit)
                      : (unit_clash ? "no, two candidates" : "no"));
  line("integral", yesno(integral));
  line("join semilattice", yesno(jsl));
  if (a.has_mul()) {
    line("residuated", yesno(res.holds));
    line("two-sided", yesno(two_sided));
    line("pseudo-hoop", yesno(is_hoop));
  } else {
    line("product table", "none");
  }
  line("bounded", a.bottom() ? "yes, bottom " + a.label(*a.bottom()) : "no");
  line("prelinear", std::string("to ") + yesno(mtl.to_mtl) + ", lto " +
                        yesno(mtl.lto_mtl) + ", pseudo-MTL " +
                        yesno(mtl.pseudo_mtl));
  if (is_hoop)
    line("hoop extras",
         std::string("cancellative ") + yesno(extras.law_holds("cancellative")) +
             ", pseudo-BL " + yesno(extras.law_holds("pseudo_bl")) +
             ", pseudo-MV " + yesno(extras.law_holds("pseudo_mv")));
  if (!asserted) {
    out << "violations\n";
    spell_violations(out, a, qb);
    spell_violations(out, a, res);
  }
  verdict_line(out, o, asserted);
  return asserted ? 0 : 1;
}

// ----------------------------------------------------------------- filters

void spell_classification(std::ostream& out, const FiniteAlgebra& a,
                          const std::vector<PrimeClassification>& table) {
  out << "prime classification\n";
  for (const auto& c : table)
    out << "  " << set_text(a, c.filter.set.bits) << " to=" << yesno(c.to_prime)
        << " lto=" << yesno(c.lto_prime) << " vee=" << yesno(c.vee_prime)
        << " prime=" << yesno(c.prime) << '\n';
}

ordered_json classification_json(const FiniteAlgebra& a,
                                 const std::vector<PrimeClassification>& table) {
  auto arr = ordered_json::array();
  for (const auto& c : table) {
    ordered_json one;
    one["filter"] = set_json(a, c.filter.set.bits);
    one["to_prime"] = c.to_prime;
    one["lto_prime"] = c.lto_prime;
    one["vee_prime"] = c.vee_prime;
    one["prime"] = c.prime;
    arr.push_back(std::move(one));
  }
  return arr;
}

int cmd_filters(const FiniteAlgebra& a, bool primes, const Options& o,
                std::ostream& out, ordered_json& doc) {
  FilterLattice fl = all_filters(a);
  ClassReport suite = mu_law_suite(a, o.cap);
  bool holds = suite.holds;

  std::vector<PrimeClassification> table;
  ClassReport inclusions;
  if (primes) {
    table = classify_all(a);
    inclusions = prime_class_inclusions(a);
    holds = holds && inclusions.holds;
  }

  if (o.json) {
    doc["algebra"] = a.name();
    doc["filters"] = ordered_json::array();
    for (const auto& f : fl.filters)
      doc["filters"].push_back(set_json(a, f.set.bits));
    doc["mu_suite"] = suite.holds;
    doc["violations"] = violations_json(a, suite);
    if (primes) {
      doc["classification"] = classification_json(a, table);
      doc["inclusions"] = inclusions.holds;
      for (auto& v : violations_json(a, inclusions))
        doc["violations"].push_back(v);
    }
    doc["holds"] = holds;
    return holds ? 0 : 1;
  }

  out << "algebra " << a.name() << ": " << fl.filters.size() << " filters\n";
  for (const auto& f : fl.filters) out << "  " << set_text(a, f.set.bits) << '\n';
  out << "mu suite: " << (suite.holds ? "holds" : "violated") << '\n';
  spell_violations(out, a, suite);
  if (primes) {
    spell_classification(out, a, table);
    out << "inclusions: " << (inclusions.holds ? "hold" : "violated") << '\n';
    spell_violations(out, a, inclusions);
  }
  verdict_line(out, o, holds);
  return holds ? 0 : 1;
}

// ---------------------------------------------------------------- quantale

int cmd_quantale(const FiniteAlgebra& a, const std::string& op,
                 const std::string& xs, const std::string& ys,
                 const std::string& side, const Options& o, std::ostream& out,
                 ordered_json& doc) {
  if (o.json) doc["algebra"] = a.name();
  if (op.empty()) {
    ClassReport r = check_quantale_laws(a, o.cap, o.seed);
    if (o.json) {
      doc["upper_sets"] = count_upper_sets(a);
      doc["violations"] = violations_json(a, r);
      doc["holds"] = r.holds;
    } else {
      out << "algebra " << a.name() << ": " << count_upper_sets(a)
          << " upper sets\n";
      out << "quantale laws: " << (r.holds ? "hold" : "violated") << '\n';
      spell_violations(out, a, r);
      verdict_line(out, o, r.holds);
    }
    return r.holds ? 0 : 1;
  }

  UpperSet x = upper_closure(a, parse_set(a, xs));
  UpperSet y = upper_closure(a, parse_set(a, ys));
  UpperSet z;
  std::string shown = op;
  if (op == "umul") {
    z = umul(a, x, y);
  } else if (op == "resl") {
    z = ures_l(a, x, y);
  } else if (op == "resr") {
    z = ures_r(a, x, y);
  } else {  // invres, the option check pins the spelling
    z = inv_res(a, x, y,
                side == "right" ? InvResSide::right : InvResSide::left);
    shown += "_" + side;
  }
  if (o.json) {
    doc["op"] = shown;
    doc["x"] = set_json(a, x.bits);
    doc["y"] = set_json(a, y.bits);
    doc["result"] = set_json(a, z.bits);
    doc["holds"] = true;
  } else {
    out << "x = " << set_text(a, x.bits) << '\n';
    out << "y = " << set_text(a, y.bits) << '\n';
    out << shown << " = " << set_text(a, z.bits) << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------- polar

int cmd_polar(const FiniteAlgebra& a, const std::string& set_spec,
              const Options& o, std::ostream& out, ordered_json& doc) {
  Mask m = parse_set(a, set_spec);
  Polar p = polar(a, m);
  Polar pp = polar(a, p.polar_set.set.bits);
  ClassReport laws = polar_laws(a);
  ClassReport coprime = coprime_laws(a);
  PairEmbedding emb = polar_embedding(a, m);
  bool holds = laws.holds && coprime.holds && emb.report.holds;

  if (o.json) {
    doc["algebra"] = a.name();
    doc["set"] = set_json(a, m);
    doc["polar"] = set_json(a, p.polar_set.set.bits);
    doc["double_polar"] = set_json(a, pp.polar_set.set.bits);
    doc["polar_laws"] = laws.holds;
    doc["coprime_laws"] = coprime.holds;
    doc["embedding"] = emb.report.holds;
    doc["embedding_pairs"] = emb.domain.size();
    ordered_json viol = violations_json(a, laws);
    for (auto& v : violations_json(a, coprime)) viol.push_back(v);
    for (auto& v : violations_json(a, emb.report)) viol.push_back(v);
    doc["violations"] = std::move(viol);
    doc["holds"] = holds;
    return holds ? 0 : 1;
  }

  out << "algebra " << a.name() << '\n';
  out << "polar(" << set_text(a, m) << ") = "
      << set_text(a, p.polar_set.set.bits) << '\n';
  out << "double polar = " << set_text(a, pp.polar_set.set.bits) << '\n';
  out << "polar laws: " << (laws.holds ? "hold" : "violated") << '\n';
  spell_violations(out, a, laws);
  out << "coprime laws: " << (coprime.holds ? "hold" : "violated") << '\n';
  spell_violations(out, a, coprime);
  out << "embedding: " << (emb.report.holds ? "holds" : "violated") << " ("
      << emb.domain.size() << " pairs)\n";
  spell_violations(out, a, emb.report);
  verdict_line(out, o, holds);
  return holds ? 0 : 1;
}

// ----------------------------------------------------------------- witness

int cmd_witness(const FiniteAlgebra& a, bool have_set,
                const std::string& set_spec, const Options& o,
                std::ostream& out, ordered_json& doc) {
  std::optional<SubdirectWitness> w;
  Mask where = 0;
  if (have_set) {
    where = parse_set(a, set_spec);
    w = subdirect_witness(a, where);
  } else {
    for (Mask m = 0; m < bit(a.size()) && !w; ++m) {
      w = subdirect_witness(a, m);
      where = m;
    }
  }
  if (o.json) {
    doc["algebra"] = a.name();
    doc["found"] = w.has_value();
    if (w) {
      doc["set"] = set_json(a, where);
      doc["x"] = a.label(w->x);
      doc["y"] = a.label(w->y);
      doc["y1"] = a.label(w->y1);
      doc["y2"] = a.label(w->y2);
      doc["f1"] = set_json(a, w->f1.set.bits);
      doc["f2"] = set_json(a, w->f2.set.bits);
    }
    doc["holds"] = true;
    return 0;
  }
  out << "algebra " << a.name() << '\n';
  if (!w) {
    out << "witness: none\n";
  } else {
    out << "witness: m=" << set_text(a, where) << " x=" << a.label(w->x)
        << " y=" << a.label(w->y) << " y1=" << a.label(w->y1)
        << " y2=" << a.label(w->y2) << " f1=" << set_text(a, w->f1.set.bits)
        << " f2=" << set_text(a, w->f2.set.bits) << '\n';
  }
  return 0;
}

// ------------------------------------------------------------------ primes

int cmd_primes(const FiniteAlgebra& a, const Options& o, std::ostream& out,
               ordered_json& doc) {
  auto table = classify_all(a);
  ClassReport inclusions = prime_class_inclusions(a);
  ClassReport iff = mtl_iff_theorem(a);
  ClassReport dist = join_distribution_laws(a);
  MtlFlags mtl = check_mtl(a);
  std::size_t prime_recovered = 0;
  for (const auto& c : table) {
    PrimeIntersection pi = intersection_of_primes(a, c.filter);
    if (pi.prime_equal) ++prime_recovered;
  }
  bool holds = inclusions.holds && iff.holds && dist.holds;

  if (o.json) {
    doc["algebra"] = a.name();
    doc["classification"] = classification_json(a, table);
    doc["inclusions"] = inclusions.holds;
    doc["mtl_iff"] = iff.holds;
    doc["to_mtl"] = mtl.to_mtl;
    doc["lto_mtl"] = mtl.lto_mtl;
    doc["pseudo_mtl"] = mtl.pseudo_mtl;
    doc["filters"] = table.size();
    doc["vee_meet_recovered"] = table.size();
    doc["prime_meet_recovered"] = prime_recovered;
    doc["join_distribution"] = dist.holds;
    ordered_json viol = violations_json(a, inclusions);
    for (auto& v : violations_json(a, iff)) viol.push_back(v);
    for (auto& v : violations_json(a, dist)) viol.push_back(v);
    doc["violations"] = std::move(viol);
    doc["holds"] = holds;
    return holds ? 0 : 1;
  }

  out << "algebra " << a.name() << ": " << table.size() << " filters\n";
  spell_classification(out, a, table);
  out << "inclusions: " << (inclusions.holds ? "hold" : "violated") << '\n';
  spell_violations(out, a, inclusions);
  out << "mtl iff: " << (iff.holds ? "holds" : "violated") << ", to="
      << yesno(mtl.to_mtl) << " lto=" << yesno(mtl.lto_mtl)
      << " pseudo=" << yesno(mtl.pseudo_mtl) << '\n';
  spell_violations(out, a, iff);
  out << "vee-prime meets recover " << table.size() << " of " << table.size()
      << " filters\n";
  out << "prime meets recover " << prime_recovered << " of " << table.size()
      << " filters\n";
  out << "join distribution: " << (dist.holds ? "holds" : "violated") << '\n';
  spell_violations(out, a, dist);
  verdict_line(out, o, holds);
  return holds ? 0 : 1;
}

// ------------------------------------------------------------------ search

int cmd_search(int size, const std::string& klass, const std::string& where,
               std::size_t limit, bool labeled, bool no_prune,
               const Options& o, std::ostream& out, ordered_json& doc) {
  SearchSpec spec;
  spec.max_size = size;
  spec.target = class_by_name(klass);
  spec.predicate = where;
  if (limit > 0) spec.limit = limit;
  spec.dedup = !labeled;
  spec.pruned = !no_prune;
  SearchOutcome res = find_counterexamples(spec);
  // counterexample hunts flag their find; plain enumeration always holds
  bool clean = where == "true" || res.witnesses.empty();

  if (o.json) {
    doc["class"] = klass;
    doc["max_size"] = size;
    doc["where"] = where;
    doc["witnesses"] = ordered_json::array();
    for (const auto& w : res.witnesses)
      doc["witnesses"].push_back(algebra_json(w));
    ordered_json st;
    st["posets"] = res.stats.posets;
    st["leaves"] = res.stats.leaves;
    st["members"] = res.stats.members;
    st["emitted"] = res.stats.emitted;
    doc["stats"] = std::move(st);
    doc["holds"] = clean;
    return clean ? 0 : 1;
  }

  for (const auto& w : res.witnesses) out << serialize_algebra(w) << '\n';
  out << "# search class=" << klass << " size<=" << size << " where=" << where
      << '\n';
  out << "# posets=" << res.stats.posets << " leaves=" << res.stats.leaves
      << " members=" << res.stats.members << " emitted=" << res.stats.emitted
      << '\n';
  return clean ? 0 : 1;
}

// ----------------------------------------------------------------- catalog

int cmd_catalog(const std::string& name, const Options& o, std::ostream& out,
                ordered_json& doc) {
  if (name.empty()) {
    if (o.json) {
      doc["names"] = catalog_names();
      doc["holds"] = true;
    } else {
      for (const auto& n : catalog_names()) out << n << '\n';
    }
    return 0;
  }
  FiniteAlgebra a = catalog(name);
  if (o.json) {
    doc = algebra_json(a);
    doc["holds"] = true;
  } else {
    out << serialize_algebra(a);
  }
  return 0;
}

bool is_law_violation(const Error& e) {
  std::string code = e.code();
  return code == "theorem_violation" || code == "oracle_mismatch" ||
         code == "decomposition_failed";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  if (const char* env = std::getenv("QBFORGE_CAP")) {
    char* endp = nullptr;
    unsigned long long v = std::strtoull(env, &endp, 10);
    if (endp == env || *endp != '\0' || v == 0) {
      err << "error: QBFORGE_CAP wants a positive integer, got '" << env
          << "'\n";
      return 2;
    }
    opt.cap = static_cast<std::size_t>(v);
  }

  CLI::App app{"finite model workbench for ordered implication algebras"};
  app.name("qbforge");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", opt.cap,
                 "upper set enumeration cap (QBFORGE_CAP overrides the "
                 "default)");
  app.add_option("--seed", opt.seed, "seed for sampled law sweeps");
  app.add_flag("--timing", opt.timing, "append the elapsed time");

  std::string v_alg, f_alg, q_alg, p_alg, w_alg, pr_alg;
  bool f_primes = false;
  std::string q_op, q_x = "-", q_y = "-", q_side = "left";
  std::string p_set, w_set;
  int s_size = 3;
  std::string s_class = "integral_residuated", s_where = "true";
  std::size_t s_limit = 0;
  bool s_labeled = false, s_noprune = false;
  std::string c_name;

  auto* validate =
      app.add_subcommand("validate", "class checks and the lattice position");
  validate->add_option("algebra", v_alg, "file path or catalog name")
      ->required();

  auto* filters = app.add_subcommand(
      "filters", "filter lattice and the restriction law suite");
  filters->add_option("algebra", f_alg, "file path or catalog name")
      ->required();
  filters->add_flag("--primes", f_primes, "append the prime classification");

  auto* quantale = app.add_subcommand(
      "quantale", "upper set algebra: law suite or one operation");
  quantale->add_option("algebra", q_alg, "file path or catalog name")
      ->required();
  quantale->add_option("--op", q_op, "umul, resl, resr or invres")
      ->check(CLI::IsMember({"umul", "resl", "resr", "invres"}));
  quantale->add_option("--x", q_x, "left operand, e.g. {a,1} or * or -");
  quantale->add_option("--y", q_y, "right operand");
  quantale->add_option("--side", q_side, "invres side")
      ->check(CLI::IsMember({"left", "right"}));

  auto* polar_cmd =
      app.add_subcommand("polar", "polar of a subset and the polar law suite");
  polar_cmd->add_option("algebra", p_alg, "file path or catalog name")
      ->required();
  polar_cmd->add_option("--set", p_set, "subset, e.g. {a} or 0,a")->required();

  auto* witness =
      app.add_subcommand("witness", "subdirect decomposition witness");
  witness->add_option("algebra", w_alg, "file path or catalog name")
      ->required();
  auto* w_set_opt = witness->add_option("--set", w_set,
                                        "base subset; omitted scans all");

  auto* primes = app.add_subcommand(
      "primes", "prime filter classification and the related theorems");
  primes->add_option("algebra", pr_alg, "file path or catalog name")
      ->required();

  auto* search =
      app.add_subcommand("search", "enumerate class members or counterexamples");
  search->add_option("--size", s_size, "maximum carrier size, 1 to 5");
  search->add_option("--class", s_class, "target class name");
  search->add_option("--where", s_where, "witness predicate name");
  search->add_option("--limit", s_limit, "stop after this many witnesses");
  search->add_flag("--labeled", s_labeled, "keep isomorphic copies");
  search->add_flag("--no-prune", s_noprune, "walk the raw table space");

  auto* catalog_cmd =
      app.add_subcommand("catalog", "list stock algebras or print one");
  catalog_cmd->add_option("name", c_name, "catalog name; omitted lists all");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  opt.json = format == "json";

  ordered_json doc;
  int code = 0;
  auto started = std::chrono::steady_clock::now();
  try {
    if (validate->parsed()) {
      doc["command"] = "validate";
      code = cmd_validate(load_algebra(v_alg), opt, out, doc);
    } else if (filters->parsed()) {
      doc["command"] = "filters";
      code = cmd_filters(load_algebra(f_alg), f_primes, opt, out, doc);
    } else if (quantale->parsed()) {
      doc["command"] = "quantale";
      code = cmd_quantale(load_algebra(q_alg), q_op, q_x, q_y, q_side, opt,
                          out, doc);
    } else if (polar_cmd->parsed()) {
      doc["command"] = "polar";
      code = cmd_polar(load_algebra(p_alg), p_set, opt, out, doc);
    } else if (witness->parsed()) {
      doc["command"] = "witness";
      code = cmd_witness(load_algebra(w_alg), w_set_opt->count() > 0, w_set,
                         opt, out, doc);
    } else if (primes->parsed()) {
      doc["command"] = "primes";
      code = cmd_primes(load_algebra(pr_alg), opt, out, doc);
    } else if (search->parsed()) {
      doc["command"] = "search";
      code = cmd_search(s_size, s_class, s_where, s_limit, s_labeled,
                        s_noprune, opt, out, doc);
    } else {
      doc["command"] = "catalog";
      code = cmd_catalog(c_name, opt, out, doc);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_law_violation(e) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  if (opt.json) {
    if (opt.timing) doc["elapsed_ms"] = elapsed;
    out << doc.dump(2) << '\n';
  } else if (opt.timing) {
    out << "elapsed " << elapsed << " ms\n";
  }
  return code;
}

}  // namespace qbforge
