#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tdq/gn_family.hpp"
#include "tdq/harness.hpp"

using namespace tdq;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tdq_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<GraphRecord> small_corpus(int max_n) { return enumerate_corpus(2, max_n, {}); }

}  // namespace

TEST_CASE("quotient records") {
  Graph k2 = complete_graph(2);
  QuotientRecord r = quotient(k2, k2);
  CHECK(r.gt_g == 2);
  CHECK(r.gt_h == 2);
  CHECK(r.gt_product == 2);
  CHECK(r.qt == Rational(1, 2));
  CHECK(r.ho_tight);
  CHECK(r.eq1_tight);
  CHECK(to_string(r.qt) == "1/2");

  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      CHECK(quotient(complete_graph(n), complete_graph(m)).qt ==
            Rational(std::min(m, n), 4));

  Graph g2 = build_gn(2).graph;
  QuotientRecord gg = quotient(g2, g2);
  CHECK(gg.qt == Rational(3, 4));
  CHECK(gg.qt > Rational(1, 2));

  CHECK_THROWS_AS(quotient(Graph(2), k2), IsolatedVertexError);
}

TEST_CASE("equality pairs all carry a K_2 factor at desk scale") {
  std::vector<EqualityPair> pairs = find_equality_pairs(small_corpus(6), small_corpus(4));
  CHECK_FALSE(pairs.empty());
  bool has_c6_k2 = false;
  for (const EqualityPair& p : pairs) {
    CHECK(p.record.qt == Rational(1, 2));
    CHECK(p.has_k2_factor);
    if (p.record.g6_g == write_graph6(cycle_graph(6)) &&
        p.record.g6_h == write_graph6(complete_graph(2)))
      has_c6_k2 = true;
    bool k3_k3 = p.record.g6_g == write_graph6(complete_graph(3)) &&
                 p.record.g6_h == write_graph6(complete_graph(3));
    CHECK_FALSE(k3_k3);  // q_t(K_3,K_3) = 3/4, never an equality pair
  }
  CHECK(has_c6_k2);
}

TEST_CASE("corpus-restricted qt infimum") {
  auto hs = small_corpus(5);
  QtInfResult r = qt_inf_over_corpus(cycle_graph(6), hs);
  CHECK(r.value == Rational(1, 2));
  CHECK(r.argmin.g6 == "A_");  // K_2 comes first in corpus order

  // P_4 has rho_2 = gamma_t = 2, so its quotient never drops below 1
  QtInfResult p4 = qt_inf_over_corpus(path_graph(4), hs);
  CHECK(p4.value >= Rational(1, 1));

  CHECK_THROWS_AS(qt_inf_over_corpus(cycle_graph(6), {}), InvalidArgumentError);
}

TEST_CASE("question 1 and ho campaigns find no violations at desk scale") {
  CampaignOptions opt;
  opt.jobs = 2;
  CampaignReport rep = verify_question1(small_corpus(4), small_corpus(4), opt);
  CHECK(rep.violations == 0);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.items_done == rep.items_total);
  CHECK(rep.records_written == rep.items_total);
  CHECK(rep.skipped == 0);

  // single-pair mode: C_6 against K_3
  std::vector<GraphRecord> g1 = {{cycle_graph(6), write_graph6(cycle_graph(6)), "t"}};
  std::vector<GraphRecord> h1 = {{complete_graph(3), write_graph6(complete_graph(3)), "t"}};
  CHECK(verify_question1(g1, h1).violations == 0);

  CHECK(verify_ho(small_corpus(4), small_corpus(4)).violations == 0);
}

TEST_CASE("theorem campaigns find no violations at desk scale") {
  CampaignReport t2 = verify_theorem2(small_corpus(5));
  CHECK(t2.violations == 0);
  CHECK(t2.filtered_out_g == 0);

  CampaignReport t3 = verify_theorem3(small_corpus(5), small_corpus(4));
  CHECK(t3.violations == 0);
  CHECK(t3.filtered_out_h > 0);  // graphs with gamma_t != 2 are dropped

  CampaignReport p1 = verify_proposition1(small_corpus(5), small_corpus(4));
  CHECK(p1.violations == 0);
  CHECK(p1.skipped == 0);
}

TEST_CASE("campaign files: header, records, determinism, resume, csv") {
  TempDir tmp;
  auto gs = small_corpus(4), hs = small_corpus(4);

  CampaignOptions base;
  base.out_path = (tmp.path / "full.jsonl").string();
  base.jobs = 1;
  CampaignReport full = verify_question1(gs, hs, base);
  CHECK(full.completed);
  std::string full_bytes = slurp(tmp.path / "full.jsonl");
  CHECK_FALSE(full_bytes.empty());

  // header first, rationals as exact strings, never decimal
  CHECK(full_bytes.substr(0, 30).find("\"type\":\"header\"") != std::string::npos);
  CHECK(full_bytes.find("0.5") == std::string::npos);
  CHECK(full_bytes.find("\"qt\":\"1/2\"") != std::string::npos);

  // interrupted at half the pairs, then resumed: byte-identical output
  CampaignOptions half = base;
  half.out_path = (tmp.path / "resumed.jsonl").string();
  half.max_items = full.items_total / 2;
  CampaignReport first = verify_question1(gs, hs, half);
  CHECK_FALSE(first.completed);
  CHECK(first.items_done == full.items_total / 2);
  CampaignOptions rest = base;
  rest.out_path = half.out_path;
  CampaignReport second = verify_question1(gs, hs, rest);
  CHECK(second.completed);
  CHECK(second.records_written == full.records_written);
  CHECK(slurp(tmp.path / "resumed.jsonl") == full_bytes);

  // worker count cannot change a byte
  CampaignOptions par = base;
  par.out_path = (tmp.path / "par4.jsonl").string();
  par.jobs = 4;
  verify_question1(gs, hs, par);
  CHECK(slurp(tmp.path / "par4.jsonl") == full_bytes);
  CampaignOptions par2 = par;
  par2.out_path = (tmp.path / "par4b.jsonl").string();
  verify_question1(gs, hs, par2);
  CHECK(slurp(tmp.path / "par4b.jsonl") == full_bytes);

  // sibling csv: one row per record plus the column header
  std::string csv = slurp(tmp.path / "full.csv");
  CHECK(csv.rfind("g6_g,g6_h,n_g,n_h,gt_g,gt_h,gt_product,qt,ho_tight,eq1_tight\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(full.records_written) + 1);

  // a checkpoint from different parameters is refused
  CampaignOptions clash = base;
  clash.out_path = half.out_path;  // leave the resumed file in place
  verify_question1(gs, hs, clash);
  CampaignOptions wrong = clash;
  CHECK_THROWS_AS(verify_question1(small_corpus(3), hs, wrong), Error);
}

TEST_CASE("violation reporting distinguishes records from violations") {
  // fabricate a violation by feeding the checker an inconsistent record: run
  // the real campaign and confirm zero, then check exit code mapping
  CampaignReport rep = verify_question1(small_corpus(3), small_corpus(3));
  CHECK(rep.exit_code() == 0);
  rep.violations = 1;
  CHECK(rep.exit_code() == 1);
}
