// Command-line front end: analyze single graphs, sweep enumerated or
// randomized families against named checks, run the Monte Carlo
// experiment, or run the whole verification suite.
//
// Exit codes: 0 all checks passed, 1 a check failed or a counterexample
// was found, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "snb/analysis.hpp"
#include "snb/digraph.hpp"
#include "snb/errors.hpp"
#include "snb/generators.hpp"
#include "snb/harness.hpp"
#include "snb/io.hpp"
#include "snb/verify.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json set_to_json(const snb::VertexSet& s) {
  ordered_json arr = ordered_json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

ordered_json report_to_json(const std::string& command,
                            const snb::VerificationReport& rep) {
  ordered_json j;
  j["command"] = command;
  j["description"] = rep.description;
  j["predicate"] = rep.predicate;
  j["provenance"] = rep.provenance;
  j["instances_checked"] = rep.instances_checked;
  std::ostringstream hash;
  hash << "0x" << std::hex << rep.aggregate_hash;
  j["aggregate_hash"] = hash.str();
  ordered_json fails = ordered_json::array();
  for (const auto& f : rep.failures) {
    ordered_json jf;
    jf["source"] = f.source;
    jf["id"] = f.id;
    jf["predicate"] = f.predicate;
    jf["details"] = f.details;
    jf["graph"] = f.graph_text;
    if (!f.x_set.empty()) jf["x_set"] = f.x_set;
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  j["elapsed_seconds"] = rep.elapsed_seconds;  // timing: varies run to run
  return j;
}

int emit_report(const std::string& command, const snb::VerificationReport& rep,
                bool as_json, const std::string& results_dir) {
  if (!rep.passed() && !results_dir.empty()) {
    auto paths = snb::archive_failures(rep, results_dir);
    if (!as_json) {
      for (const auto& p : paths) {
        std::cerr << "archived counterexample: " << p << "\n";
      }
    }
  }
  if (as_json) {
    std::cout << report_to_json(command, rep).dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.passed() ? 0 : 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw snb::Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_analyze(const std::string& path, bool as_json) {
  snb::Digraph d = snb::parse_auto(read_input(path));
  snb::ConjectureStatus status = snb::conjecture_status(d);
  snb::TriangleStats tri = snb::triangle_stats(d);
  snb::TtSufficiency suff = snb::tt_sufficiency(d);

  if (as_json) {
    ordered_json j;
    j["command"] = "analyze";
    j["n"] = d.order();
    j["arcs"] = d.arc_count();
    j["sullivan_vertices"] = set_to_json(status.sullivan_vertices);
    j["seymour_vertices"] = set_to_json(status.seymour_vertices);
    j["two_kings"] = set_to_json(status.two_kings);
    j["sources"] = set_to_json(status.sources);
    j["holds_sullivan"] = status.holds_sullivan;
    j["holds_seymour"] = status.holds_seymour;
    j["tt"] = tri.tt_total;
    j["tt_u"] = tri.tt_u;
    j["w_u"] = tri.w_u;
    j["sufficiency"] = {{"guaranteed", suff.guaranteed},
                        {"tt", suff.tt},
                        {"arcs", suff.arcs}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n = " << d.order() << ", arcs = " << d.arc_count() << "\n";
    auto print_set = [](const char* label, const snb::VertexSet& s) {
      std::cout << label << ": {";
      bool first = true;
      for (int v : s) {
        if (!first) std::cout << ",";
        std::cout << v;
        first = false;
      }
      std::cout << "}\n";
    };
    print_set("Sullivan vertices", status.sullivan_vertices);
    print_set("Seymour vertices ", status.seymour_vertices);
    print_set("2-kings          ", status.two_kings);
    print_set("sources          ", status.sources);
    std::cout << "transitive triangles: " << tri.tt_total
              << (suff.guaranteed ? " (below arc count: Sullivan guaranteed)"
                                  : "")
              << "\n";
  }
  return status.holds_sullivan && status.holds_seymour ? 0 : 1;
}

snb::GenSpec spec_from_flags(const std::string& family, int n, int n1, int n2,
                             int x_size, int y_size,
                             const std::string& y_family, double p,
                             double q_none, double q_xy, double q_yx) {
  snb::GenSpec spec;
  spec.family = snb::parse_family(family);
  spec.n = n;
  spec.n1 = n1;
  spec.n2 = n2;
  spec.x_size = x_size;
  spec.y_size = y_size;
  spec.y_family = snb::parse_family(y_family);
  spec.p = p;
  spec.q_none = q_none;
  spec.q_xy = q_xy;
  spec.q_yx = q_yx;
  spec.validate();
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"second-neighborhood analysis of oriented graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "read options from a key=value file (sections per "
                 "subcommand)");

  // analyze
  std::string an_path;
  bool an_json = false;
  CLI::App* analyze =
      app.add_subcommand("analyze", "neighborhood report for one graph");
  analyze->add_option("file", an_path,
                      "arc-list or digraph6 file ('-' for stdin)")
      ->required();
  analyze->add_flag("--json", an_json, "machine-readable output");

  // shared family flags, reused by generate and search
  struct FamilyFlags {
    std::string family = "oriented-random";
    int n = 8;
    int n1 = 4, n2 = 4;
    int x_size = 2, y_size = 5;
    std::string y_family = "tournament-random";
    double p = 0.5;
    double q_none = 1.0 / 3, q_xy = 1.0 / 3, q_yx = 1.0 / 3;
  };
  auto add_family_flags = [](CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--family", f.family,
                    "oriented-random | tournament-random | circulant-regular "
                    "| almost-regular | split | complete-split | "
                    "planar-orientation | bipartite-orientation")
        ->required();
    cmd->add_option("--n", f.n, "order (plain families)");
    cmd->add_option("--n1", f.n1, "first part size (bipartite)");
    cmd->add_option("--n2", f.n2, "second part size (bipartite)");
    cmd->add_option("--x-size", f.x_size, "|X| (split families)");
    cmd->add_option("--y-size", f.y_size, "|Y| (split families)");
    cmd->add_option("--y-family", f.y_family,
                    "tournament on Y (split families)");
    cmd->add_option("--p", f.p, "arc probability");
    cmd->add_option("--q-none", f.q_none, "P(no cross arc)");
    cmd->add_option("--q-xy", f.q_xy, "P(arc x->y)");
    cmd->add_option("--q-yx", f.q_yx, "P(arc y->x)");
  };

  // enumerate
  int en_n = 4;
  std::string en_check = "sullivan-exists";
  std::string en_domain = "oriented";
  std::string en_range;
  int en_threads = 0;
  bool en_json = false;
  std::string en_results = "results";
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "exhaustive sweep of a named check");
  enumerate->add_option("--n", en_n, "order")->required();
  enumerate->add_option("--check", en_check, "named check")->required();
  enumerate->add_option("--domain", en_domain, "oriented | tournaments");
  enumerate->add_option("--range", en_range, "index range lo:hi");
  enumerate->add_option("--threads", en_threads, "worker threads")
      ->envname("SNB_THREADS");
  enumerate->add_flag("--json", en_json, "machine-readable output");
  enumerate->add_option("--results", en_results,
                        "directory for archived counterexamples");

  // generate
  FamilyFlags gen_flags;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  bool gen_d6 = false;
  CLI::App* generate = app.add_subcommand("generate", "emit one graph");
  add_family_flags(generate, gen_flags);
  generate->add_option("--seed", gen_seed, "RNG seed")->required();
  generate->add_option("-o,--output", gen_out, "output file (default stdout)");
  generate->add_flag("--digraph6", gen_d6, "emit digraph6 instead of arc list");

  // search
  FamilyFlags se_flags;
  std::uint64_t se_trials = 1000;
  std::string se_check = "sullivan-exists";
  std::uint64_t se_seed = 0;
  int se_threads = 0;
  bool se_json = false;
  std::string se_results = "results";
  CLI::App* search =
      app.add_subcommand("search", "randomized sweep of a named check");
  add_family_flags(search, se_flags);
  search->add_option("--trials", se_trials, "instances to draw")->required();
  search->add_option("--check", se_check, "named check")->required();
  search->add_option("--seed", se_seed, "RNG seed")->required();
  search->add_option("--threads", se_threads, "worker threads")
      ->envname("SNB_THREADS");
  search->add_flag("--json", se_json, "machine-readable output");
  search->add_option("--results", se_results,
                     "directory for archived counterexamples");

  // montecarlo
  int mc_n = 20;
  double mc_p = 0.5;
  std::uint64_t mc_trials = 10000;
  std::uint64_t mc_seed = 0;
  int mc_threads = 0;
  bool mc_json = false;
  CLI::App* montecarlo = app.add_subcommand(
      "montecarlo", "2-king frequency vs the expectation bound");
  montecarlo->add_option("--n", mc_n, "order")->required();
  montecarlo->add_option("--p", mc_p, "arc probability")->required();
  montecarlo->add_option("--trials", mc_trials, "samples")->required();
  montecarlo->add_option("--seed", mc_seed, "RNG seed")->required();
  montecarlo->add_option("--threads", mc_threads, "worker threads")
      ->envname("SNB_THREADS");
  montecarlo->add_flag("--json", mc_json, "machine-readable output");

  // verify-all
  std::string va_level = "quick";
  int va_threads = 0;
  bool va_json = false;
  std::string va_results = "results";
  CLI::App* verify_all =
      app.add_subcommand("verify-all", "run the whole verification suite");
  verify_all->add_option("--level", va_level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_all->add_option("--threads", va_threads, "worker threads")
      ->envname("SNB_THREADS");
  verify_all->add_flag("--json", va_json, "machine-readable output");
  verify_all->add_option("--results", va_results,
                         "directory for archived counterexamples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      return cmd_analyze(an_path, an_json);
    }

    if (*enumerate) {
      snb::Domain domain = en_domain == "tournaments"
                               ? snb::Domain::tournaments(en_n)
                               : snb::Domain::oriented(en_n);
      if (en_domain != "oriented" && en_domain != "tournaments") {
        throw snb::Error("unknown domain '" + en_domain + "'");
      }
      std::uint64_t lo = 0;
      std::uint64_t hi = UINT64_MAX;
      if (!en_range.empty()) {
        auto colon = en_range.find(':');
        if (colon == std::string::npos) {
          throw snb::Error("range must look like lo:hi");
        }
        lo = std::stoull(en_range.substr(0, colon));
        hi = std::stoull(en_range.substr(colon + 1));
      }
      snb::VerificationReport rep = snb::exhaustive_check(
          domain, snb::parse_predicate(en_check), en_threads, lo, hi);
      return emit_report("enumerate", rep, en_json, en_results);
    }

    if (*generate) {
      snb::GenSpec spec = spec_from_flags(
          gen_flags.family, gen_flags.n, gen_flags.n1, gen_flags.n2,
          gen_flags.x_size, gen_flags.y_size, gen_flags.y_family, gen_flags.p,
          gen_flags.q_none, gen_flags.q_xy, gen_flags.q_yx);
      snb::GeneratedInstance g = snb::generate(spec, gen_seed);
      std::string payload;
      if (gen_d6) {
        payload = snb::serialize_digraph6(g.graph()) + "\n";
      } else {
        std::ostringstream out;
        out << "# " << spec.describe() << " seed=" << gen_seed << "\n";
        if (const snb::SplitDigraph* s = g.split()) {
          out << "# X:";
          bool first = true;
          for (int v : s->x()) {
            out << (first ? " " : ",") << v;
            first = false;
          }
          out << "\n";
        }
        out << snb::serialize_arclist(g.graph());
        payload = out.str();
      }
      if (gen_out.empty()) {
        std::cout << payload;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw snb::Error("cannot open '" + gen_out + "'");
        out << payload;
      }
      return 0;
    }

    if (*search) {
      snb::GenSpec spec = spec_from_flags(
          se_flags.family, se_flags.n, se_flags.n1, se_flags.n2,
          se_flags.x_size, se_flags.y_size, se_flags.y_family, se_flags.p,
          se_flags.q_none, se_flags.q_xy, se_flags.q_yx);
      snb::VerificationReport rep =
          snb::random_search(spec, se_trials, snb::parse_predicate(se_check),
                             se_seed, se_threads);
      return emit_report("search", rep, se_json, se_results);
    }

    if (*montecarlo) {
      snb::MonteCarloResult r =
          snb::montecarlo_2king(mc_n, mc_p, mc_trials, mc_seed, mc_threads);
      if (mc_json) {
        ordered_json j;
        j["command"] = "montecarlo";
        j["n"] = r.n;
        j["p"] = r.p;
        j["trials"] = r.trials;
        j["u_uncovered_count"] = r.u_uncovered_count;
        j["empirical_u_uncovered"] = r.empirical_u_uncovered;
        j["no_king_count"] = r.no_king_count;
        j["empirical_no_king"] = r.empirical_no_king;
        j["markov_bound"] = r.markov_bound;
        j["std_error"] = r.std_error;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << r.to_text();
      }
      return 0;
    }

    if (*verify_all) {
      snb::Level level =
          va_level == "full" ? snb::Level::Full : snb::Level::Quick;
      ordered_json criteria = ordered_json::array();
      auto results = snb::run_all(
          level, va_threads,
          [&](const snb::CriterionResult& r) {
            if (va_json) {
              ordered_json jc;
              jc["id"] = r.id;
              jc["name"] = r.name;
              jc["passed"] = r.passed;
              jc["details"] = r.details;
              jc["elapsed_seconds"] = r.elapsed_seconds;  // timing field
              criteria.push_back(std::move(jc));
            } else {
              std::cout << r.to_line() << "\n" << std::flush;
            }
          },
          va_results);
      bool ok = snb::all_passed(results);
      if (va_json) {
        ordered_json j;
        j["command"] = "verify-all";
        j["level"] = va_level;
        j["criteria"] = std::move(criteria);
        j["passed"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "all criteria passed" : "SUITE FAILED") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const snb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
