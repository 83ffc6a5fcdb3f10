// tdq: exact total domination invariants of graphs and Cartesian products,
// family classification, and verification campaigns over graph6 corpora.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tdq/families.hpp"
#include "tdq/gn_family.hpp"
#include "tdq/graph6.hpp"
#include "tdq/harness.hpp"
#include "tdq/isomorphism.hpp"
#include "tdq/solvers.hpp"

namespace {

using tdq::Graph;
using tdq::GraphRecord;
using tdq::VertexSet;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

// A positional that is either a graph6 literal or a path to a graph6 file.
std::vector<GraphRecord> graphs_from_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return tdq::load_corpus(arg, {});
  return {{tdq::parse_graph6(arg), arg, "argument"}};
}

Graph single_graph(const std::string& g6) { return tdq::parse_graph6(g6); }

std::string pair_string(const tdq::ProductGraph& prod, const VertexSet& s) {
  std::string out = "{";
  bool sep = false;
  for (int idx : s) {
    auto [g, h] = prod.coords_of(idx);
    if (sep) out += ",";
    out += "(" + std::to_string(g) + "," + std::to_string(h) + ")";
    sep = true;
  }
  return out + "}";
}

int run_solver_command(const std::string& arg, const std::string& name,
                       const std::function<tdq::SolveResult(const Graph&)>& solve) {
  for (const GraphRecord& rec : graphs_from_arg(arg)) {
    tdq::SolveResult r = solve(rec.graph);
    std::cout << rec.g6 << " " << name << "=" << r.value
              << " certificate=" << r.certificate.to_string() << "\n";
  }
  return 0;
}

void print_report(const tdq::CampaignReport& rep) {
  std::cout << "campaign:      " << rep.campaign << "\n"
            << "params:        " << rep.params << "\n"
            << "items:         " << rep.items_done << "/" << rep.items_total
            << (rep.completed ? "" : " (stopped early, checkpointed)") << "\n"
            << "records:       " << rep.records_written << "\n"
            << "violations:    " << rep.violations << "\n"
            << "skipped:       " << rep.skipped << "\n"
            << "filtered out:  G " << rep.filtered_out_g << ", H " << rep.filtered_out_h << "\n"
            << "wall seconds:  " << rep.wall_seconds << "\n";
  for (const auto& line : rep.violation_lines) std::cout << "VIOLATION " << line << "\n";
}

std::vector<GraphRecord> corpus_for(int max_n, const std::string& file) {
  if (!file.empty()) return tdq::load_corpus(file, {});
  return tdq::enumerate_corpus(2, max_n, {});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact total domination toolkit for Cartesian products"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // keep -h free: --h names a factor

  std::string arg_graph, arg_g, arg_h, out_file, ckpt_file, g_file, h_file, verify_what;
  int gn_k = 2, gn_n = 2, gn_cap = 16, enum_n = 4;
  int g_max = 0, h_max = 0, jobs = 1;
  std::size_t max_pairs = 0, td_limit = 100000;
  bool with_gamma_t = false, all_min_sets = false, construct = false, exact = false;
  bool connected_only = false;

  auto* cmd_gamma_t = app.add_subcommand("gamma-t", "total domination number");
  cmd_gamma_t->add_option("graph", arg_graph, "graph6 string or file")->required();

  auto* cmd_gamma = app.add_subcommand("gamma", "domination number");
  cmd_gamma->add_option("graph", arg_graph, "graph6 string or file")->required();

  auto* cmd_rho2 = app.add_subcommand("rho2", "2-packing number");
  cmd_rho2->add_option("graph", arg_graph, "graph6 string or file")->required();

  auto* cmd_classify = app.add_subcommand("classify", "F1/F2/F3 membership");
  cmd_classify->add_option("graph", arg_graph, "graph6 string")->required();

  auto* cmd_product = app.add_subcommand("product", "Cartesian product");
  cmd_product->add_option("--g", arg_g, "graph6 of G")->required();
  cmd_product->add_option("--h", arg_h, "graph6 of H")->required();
  cmd_product->add_flag("--gamma-t", with_gamma_t, "also solve gamma_t of the product");

  auto* cmd_decompose = app.add_subcommand("decompose", "Proposition-1 decomposition");
  cmd_decompose->add_option("--g", arg_g, "graph6 of G")->required();
  cmd_decompose->add_option("--h", arg_h, "graph6 of H")->required();
  cmd_decompose->add_flag("--all-min-sets", all_min_sets,
                          "decompose every minimum TD-set of the product");

  auto* cmd_gn = app.add_subcommand("gn", "the G_n family and its product bounds");
  cmd_gn->add_option("--k", gn_k, "first factor index")->required();
  cmd_gn->add_option("--n", gn_n, "second factor index")->required();
  cmd_gn->add_flag("--construct", construct, "print the explicit TD-set of size 2kn+2k");
  cmd_gn->add_flag("--exact", exact, "solve gamma_t(G_k box G_n) exactly");
  cmd_gn->add_option("--cap", gn_cap, "kn guard for the exact solve (default 16)");

  auto* cmd_quotient = app.add_subcommand("quotient", "total domination quotient");
  cmd_quotient->add_option("--g", arg_g, "graph6 of G")->required();
  cmd_quotient->add_option("--h", arg_h, "graph6 of H")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification campaign");
  cmd_verify->add_option("what", verify_what, "one of: ho, q1, thm2, thm3, prop1")
      ->required()
      ->check(CLI::IsMember({"ho", "q1", "thm2", "thm3", "prop1"}));
  cmd_verify->add_option("--g-max", g_max, "enumerate connected G up to this order");
  cmd_verify->add_option("--g-file", g_file, "graph6 corpus file for G");
  cmd_verify->add_option("--h-max", h_max, "enumerate connected H up to this order");
  cmd_verify->add_option("--h-file", h_file, "graph6 corpus file for H");
  cmd_verify->add_option("--jobs", jobs, "worker threads (output is identical for any value)");
  cmd_verify->add_option("--out", out_file, "JSONL output (and sibling CSV)");
  cmd_verify->add_option("--checkpoint", ckpt_file, "checkpoint file (default: OUT.ckpt)");
  cmd_verify->add_option("--max-pairs", max_pairs,
                         "stop after this many pairs, leaving a resumable checkpoint");
  cmd_verify->add_option("--limit", td_limit, "cap on minimum-TD-set enumerations");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "small graphs up to isomorphism");
  cmd_enumerate->add_option("--n", enum_n, "vertex count (1..7)")->required();
  cmd_enumerate->add_flag("--connected", connected_only, "connected graphs only");
  cmd_enumerate->add_option("--out", out_file, "write graph6 lines to this file");

  for (CLI::App* sub : app.get_subcommands({})) sub->set_help_flag("--help", "print help");

  try {
    app.parse(argc, argv);

    if (*cmd_gamma_t) return run_solver_command(arg_graph, "gamma_t", tdq::gamma_t);
    if (*cmd_gamma) return run_solver_command(arg_graph, "gamma", tdq::gamma);
    if (*cmd_rho2) return run_solver_command(arg_graph, "rho2", tdq::rho_2);

    if (*cmd_classify) {
      Graph g = single_graph(arg_graph);
      tdq::FamilyClassification c = tdq::classify(g);
      std::cout << "F1: " << (c.f1 ? "yes, dominating set " + c.f1->dominating_set.to_string()
                                   : std::string("no"))
                << "\n";
      std::cout << "F2: "
                << (c.f2 ? "yes, D=" + c.f2->d.to_string() + " D1=" + c.f2->d1.to_string() +
                               " D2=" + c.f2->d2.to_string()
                         : std::string("no"))
                << "\n";
      std::cout << "F3: "
                << (c.f3 ? "yes, V1=" + c.f3->v1.to_string() + " V2=" + c.f3->v2.to_string()
                         : std::string("no"))
                << "\n";
      std::cout << "in F1 u F2 u F3: " << (c.in_any() ? "yes" : "no") << "\n";
      return 0;
    }

    if (*cmd_product) {
      tdq::ProductGraph prod = tdq::cartesian_product(single_graph(arg_g), single_graph(arg_h));
      std::cout << "vertices=" << prod.product.vertex_count()
                << " edges=" << prod.product.edge_count() << "\n";
      if (prod.product.vertex_count() <= 62)
        std::cout << "g6=" << tdq::write_graph6(prod.product) << "\n";
      if (with_gamma_t) {
        tdq::SolveResult r = tdq::gamma_t(prod.product);
        std::cout << "gamma_t=" << r.value << " certificate=" << pair_string(prod, r.certificate)
                  << "\n";
      }
      return 0;
    }

    if (*cmd_decompose) {
      Graph g = single_graph(arg_g), h = single_graph(arg_h);
      tdq::ProductGraph prod = tdq::cartesian_product(g, h);
      std::vector<VertexSet> ds;
      if (all_min_sets) {
        ds = tdq::all_min_td_sets(prod.product);
      } else {
        ds = {tdq::gamma_t(prod.product).certificate};
      }
      for (const VertexSet& d : ds) {
        tdq::DecompositionReport r = tdq::decompose_product_tdset(g, h, d);
        std::cout << "D=" << pair_string(prod, r.d) << "\n"
                  << "  D'=" << pair_string(prod, r.d_prime)
                  << " D''=" << pair_string(prod, r.d_dprime) << "\n"
                  << "  S=" << r.s.to_string() << " S'=" << r.s_prime.to_string()
                  << " S''=" << r.s_dprime.to_string() << "\n"
                  << "  P=" << r.p.to_string() << " P'=" << r.p_prime.to_string()
                  << " P''=" << r.p_dprime.to_string() << "\n"
                  << "  T'=" << r.t_prime.to_string() << " X=" << r.x.to_string() << "\n"
                  << "  statements:";
        for (const auto& [label, verdict] : r.statements)
          std::cout << " " << label << "=" << tdq::to_string(verdict);
        std::cout << "\n";
      }
      return 0;
    }

    if (*cmd_gn) {
      if (gn_cap > 16 && gn_k * gn_n > 16)
        std::cerr << "warning: kn = " << gn_k * gn_n
                  << " exceeds the default desk-scale guard of 16; this may run long\n";
      std::cout << "G_" << gn_k << " box G_" << gn_n << ": " << 9 * gn_k * gn_n
                << " vertices, bounds " << 2 * gn_k * gn_n + gn_k << " <= gamma_t <= "
                << 2 * gn_k * gn_n + 2 * gn_k << "\n";
      if (construct) {
        VertexSet d = tdq::gn_product_tdset(gn_k, gn_n);
        tdq::ProductGraph prod =
            tdq::cartesian_product(tdq::build_gn(gn_k).graph, tdq::build_gn(gn_n).graph);
        std::cout << "constructed TD-set size=" << d.count()
                  << " total_dominating=" << (tdq::is_total_dominating(prod.product, d) ? "yes" : "no")
                  << "\n"
                  << "D=" << pair_string(prod, d) << "\n";
      }
      if (exact) {
        tdq::GnQuotientCheck q = tdq::gn_quotient_check(gn_k, gn_n, gn_cap);
        tdq::GnBounds b = tdq::gn_bounds_check(gn_k, gn_n, gn_cap);
        std::cout << "exact gamma_t=" << b.exact.value << " in [" << b.lower << "," << b.upper
                  << "]: " << (b.lower <= b.exact.value && b.exact.value <= b.upper ? "yes" : "NO")
                  << "\n"
                  << "q_t=" << tdq::to_string(q.qt) << " in [" << tdq::to_string(q.lower) << ","
                  << tdq::to_string(q.upper) << "]: " << (q.within ? "yes" : "NO") << "\n";
      }
      return 0;
    }

    if (*cmd_quotient) {
      tdq::QuotientRecord rec = tdq::quotient(single_graph(arg_g), single_graph(arg_h));
      ordered_json j;
      j["g6_g"] = rec.g6_g;
      j["g6_h"] = rec.g6_h;
      j["n_g"] = rec.n_g;
      j["n_h"] = rec.n_h;
      j["gt_g"] = rec.gt_g;
      j["gt_h"] = rec.gt_h;
      j["gt_product"] = rec.gt_product;
      j["qt"] = tdq::to_string(rec.qt);
      j["ho_tight"] = rec.ho_tight;
      j["eq1_tight"] = rec.eq1_tight;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*cmd_verify) {
      tdq::CampaignOptions opt;
      opt.jobs = jobs;
      opt.out_path = out_file;
      opt.checkpoint_path = ckpt_file;
      opt.min_td_set_limit = td_limit;
      if (max_pairs > 0) opt.max_items = max_pairs;

      tdq::CampaignReport rep;
      if (verify_what == "thm2") {
        auto gs = corpus_for(g_max > 0 ? g_max : 7, g_file);
        rep = tdq::verify_theorem2(gs, opt);
      } else {
        int def_g = verify_what == "q1" ? 6 : (verify_what == "thm3" ? 6 : 5);
        int def_h = verify_what == "q1" ? 5 : (verify_what == "thm3" ? 5 : 4);
        auto gs = corpus_for(g_max > 0 ? g_max : def_g, g_file);
        auto hs = corpus_for(h_max > 0 ? h_max : def_h, h_file);
        if (verify_what == "q1")
          rep = tdq::verify_question1(gs, hs, opt);
        else if (verify_what == "ho")
          rep = tdq::verify_ho(gs, hs, opt);
        else if (verify_what == "thm3")
          rep = tdq::verify_theorem3(gs, hs, opt);
        else
          rep = tdq::verify_proposition1(gs, hs, opt);
      }
      print_report(rep);
      return rep.exit_code();
    }

    if (*cmd_enumerate) {
      std::vector<Graph> graphs = tdq::enumerate_graphs(enum_n, connected_only);
      std::ostream* os = &std::cout;
      std::ofstream file;
      if (!out_file.empty()) {
        file.open(out_file, std::ios::trunc);
        if (!file) throw tdq::Error("cannot open output file: " + out_file);
        os = &file;
      }
      for (const Graph& g : graphs) *os << tdq::write_graph6(g) << "\n";
      std::cerr << graphs.size() << " graphs\n";
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const tdq::ParseError& e) {
    std::cerr << "input format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const tdq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
