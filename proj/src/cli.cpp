#include "weylalt/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "weylalt/checks.hpp"
#include "weylalt/enumeration.hpp"
#include "weylalt/io.hpp"
#include "weylalt/typea.hpp"

namespace weylalt {

namespace {

struct SystemOpts {
  std::string family = "A";
  int rank = 4;
  std::string lambda = "highest-root";
  std::string mu;
  std::string nu;
  std::string format = "text";
  std::string out_path;
};

void add_system(CLI::App* cmd, SystemOpts& o) {
  cmd->add_option("--family", o.family, "Root system family (A, B, C or D)")->capture_default_str();
  cmd->add_option("--rank", o.rank, "Rank")->capture_default_str();
}

void add_weights(CLI::App* cmd, SystemOpts& o, bool mu_required) {
  cmd->add_option("--lambda", o.lambda, "Highest weight: coordinates, zero, rho, highest-root, root:i:j, "
                                        "neg-root:i:j or partition:p1,p2,...")
      ->capture_default_str();
  auto* mu = cmd->add_option("--mu", o.mu, "Weight mu, same syntax as --lambda");
  if (mu_required) mu->required();
}

void add_output(CLI::App* cmd, SystemOpts& o, bool with_format) {
  if (with_format)
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

RootSystem system_of(const SystemOpts& o) {
  RootSystemSpec spec{parse_family(o.family), o.rank};
  spec.validate();
  return RootSystem(spec);
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const SystemOpts& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + o.out_path + " for writing");
  f << text;
}

int finish(const std::vector<Report>& reports, const std::string& format, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (!ok || format == "json") {
    Json doc;
    doc["ok"] = ok;
    doc["reports"] = Json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    out << dump(doc);
  } else {
    for (const auto& r : reports) out << r.summary() << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl alternation sets, partition functions and basic allowable subwords", "weylalt"};
  app.require_subcommand(1);

  SystemOpts o;
  bool naive = false, full = false, left = false;
  int max_rank = 0, jobs = 1, truncation = kDefaultTruncation, i = 1, j = 1;
  std::size_t cases = 20;
  std::uint64_t seed = kDefaultSeed;
  std::string suite, object = "grand";

  auto* altset = app.add_subcommand("altset", "Alternation set A(lambda, mu)");
  auto* bas = app.add_subcommand("bas", "Basic allowable subwords of A(lambda, mu)");
  auto* mult = app.add_subcommand("mult", "Weight multiplicity m(lambda, mu)");
  auto* qmult = app.add_subcommand("qmult", "q-analogue of the weight multiplicity");
  for (auto* cmd : {altset, bas, mult, qmult}) {
    add_system(cmd, o);
    add_weights(cmd, o, true);
    add_output(cmd, o, true);
  }
  altset->add_flag("--naive", naive, "Filter the whole group instead of searching the order ideal");

  auto* hasse = app.add_subcommand("hasse", "DOT Hasse diagram of an alternation set or the whole group");
  add_system(hasse, o);
  add_weights(hasse, o, false);
  add_output(hasse, o, false);
  hasse->add_flag("--full", full, "Use the whole Weyl group");
  hasse->add_flag("--left", left, "Left weak order (default: right weak order)");

  auto* depgraph = app.add_subcommand("depgraph", "DOT dependence graph of the basic allowable subwords");
  add_system(depgraph, o);
  add_weights(depgraph, o, true);
  add_output(depgraph, o, false);

  auto* catalog = app.add_subcommand("catalog", "Type A catalog for lambda = highest root, mu = -a_{i,j}");
  catalog->add_option("--rank", o.rank, "Rank r")->required();
  catalog->add_option("--i", i, "First index")->required();
  catalog->add_option("--j", j, "Last index")->required();
  add_output(catalog, o, true);

  auto* counts = app.add_subcommand("counts", "CSV sweep of |A_r(h, -a_{i,j})| against the trivariate series");
  counts->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, kDefaultTruncation))->required();
  counts->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output(counts, o, false);

  auto* gf = app.add_subcommand("gf", "Series coefficients of the closed-form generating functions");
  gf->add_option("--object", object, "Series to expand")
      ->check(CLI::IsMember({"P1", "P2", "P3", "H1", "H2", "H3", "P", "H", "grand"}))
      ->capture_default_str();
  gf->add_option("--truncation", truncation, "Maximum degree per variable")->check(CLI::Range(1, 30))->capture_default_str();
  add_output(gf, o, false);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"ideal", "bijection", "catalog", "recurrences", "genfunc", "conjecture", "appendix", "xbij"}));
  verify->add_option("--max-rank", max_rank, "Largest rank (suite default when omitted)")->check(CLI::PositiveNumber);
  verify->add_option("--family", o.family, "Family for a single ideal/bijection check");
  verify->add_option("--rank", o.rank, "Rank for a single ideal/bijection check");
  auto* vlambda = verify->add_option("--lambda", o.lambda, "lambda for a single ideal/bijection check");
  auto* vmu = verify->add_option("--mu", o.mu, "mu for a single ideal/bijection check");
  vlambda->needs(vmu);
  verify->add_option("--cases", cases, "Random pairs per root system")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--jobs", jobs, "Accepted for interface compatibility")->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"weylalt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (altset->parsed() || bas->parsed() || mult->parsed() || qmult->parsed()) {
      RootSystem rs = system_of(o);
      Weight lambda = parse_weight(rs, o.lambda), mu = parse_weight(rs, o.mu);
      const bool json = o.format == "json";
      if (altset->parsed()) {
        AlternationSet set = naive ? compute_naive(rs, lambda, mu) : compute(rs, lambda, mu);
        emit(o, out, json ? dump(to_json(rs, set)) : alternation_set_text(set));
      } else if (bas->parsed()) {
        BasSet b = compute_bas(rs, lambda, mu);
        emit(o, out, json ? dump(to_json(rs, b)) : bas_text(b));
      } else if (mult->parsed()) {
        BigInt m = multiplicity(rs, lambda, mu);
        Json doc{{"multiplicity", m.str()}};
        emit(o, out, json ? dump(doc) : m.str() + "\n");
      } else {
        QPolynomial m = q_multiplicity(rs, lambda, mu);
        Json doc{{"q_multiplicity", m.str()}};
        emit(o, out, json ? dump(doc) : m.str() + "\n");
      }
      return 0;
    }
    if (hasse->parsed()) {
      RootSystem rs = system_of(o);
      if (full) {
        ElementSet all;
        for (auto& e : enumerate_group(rs)) all.insert(std::move(e));
        emit(o, out, hasse_dot(rs, all, left, rs.name()));
      } else {
        if (o.mu.empty()) throw UsageError("hasse needs --mu or --full");
        AlternationSet set = compute(rs, parse_weight(rs, o.lambda), parse_weight(rs, o.mu));
        emit(o, out, left ? hasse_dot(rs, set.elements, true) : hasse_dot(set));
      }
      return 0;
    }
    if (depgraph->parsed()) {
      RootSystem rs = system_of(o);
      emit(o, out, dependence_dot(compute_bas(rs, parse_weight(rs, o.lambda), parse_weight(rs, o.mu))));
      return 0;
    }
    if (catalog->parsed()) {
      auto entries = catalog_bas(o.rank, i, j);
      if (o.format == "json") {
        Json doc = Json::array();
        for (const auto& e : entries) doc.push_back({{"shape", std::string(1, e.shape)}, {"k", e.k}, {"word", e.word}});
        emit(o, out, dump(doc));
      } else {
        emit(o, out, catalog_text(entries));
      }
      return 0;
    }
    if (counts->parsed()) {
      emit(o, out, counts_csv(count_sweep(max_rank, jobs)));
      return 0;
    }
    if (gf->parsed()) {
      PowerSeries s = object == "P" ? p_bivariate(truncation)
                      : object == "H" ? h_bivariate(truncation)
                      : object == "grand" ? grand_series(truncation)
                      : object[0] == 'P' ? p_series(object[1] - '0', truncation)
                                         : h_series(object[1] - '0', truncation);
      Json doc = to_json(s);
      doc["object"] = object;
      if (object == "H1") doc["oeis"] = "A196423";
      emit(o, out, dump(doc));
      return 0;
    }
    if (verify->parsed()) {
      auto cap = [&](int dflt) { return max_rank > 0 ? max_rank : dflt; };
      std::vector<Report> reports;
      if (suite == "ideal" || suite == "bijection") {
        std::vector<WeightCase> cs;
        if (!o.mu.empty()) {
          RootSystem rs = system_of(o);
          cs.push_back({rs.spec(), parse_weight(rs, o.lambda), parse_weight(rs, o.mu), rs.name()});
        } else {
          cs = property_cases(cases, seed);
        }
        if (suite == "ideal") {
          reports.push_back(verify_ideal_cases(cs));
          reports.push_back(verify_oracle_cases(cs));
          Report closure{"subword closure", 0, {}};
          for (const auto& c : cs) {
            RootSystem rs(c.spec);
            Report sub = verify_subword_closure(rs, compute(rs, c.lambda, c.mu));
            sub.name = c.label;
            closure.absorb(sub);
          }
          reports.push_back(closure);
        } else {
          reports.push_back(verify_bijection_cases(cs));
        }
      } else if (suite == "catalog") {
        reports.push_back(verify_catalogs(cap(9)));
      } else if (suite == "recurrences") {
        TypeACounts tc;
        reports.push_back(verify_recurrences(cap(kDefaultRecurrenceCap), tc));
        reports.push_back(verify_closed_forms(std::min(cap(kDefaultRecurrenceCap), 9), tc));
        reports.push_back(verify_fibonacci_subsets(20));
      } else if (suite == "genfunc") {
        reports.push_back(verify_generating_functions(cap(10)));
      } else if (suite == "conjecture") {
        out << "=== conjecture check: testing instances of a conjectured q-multiplicity formula; this is not a proof ===\n";
        reports.push_back(verify_conjecture(cap(7)));
      } else if (suite == "appendix") {
        reports.push_back(verify_appendix(4, cap(8)));
      } else if (suite == "xbij") {
        reports.push_back(verify_x_bijections(cap(10)));
      }
      return finish(reports, o.format, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace weylalt
