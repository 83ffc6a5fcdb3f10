#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tdq/families.hpp"
#include "tdq/graph6.hpp"
#include "tdq/rational.hpp"

namespace tdq {

// One (G,H) pair's exact quotient data. qt = gt_product / (gt_g * gt_h);
// no floating point anywhere, rationals persist as "p/q".
struct QuotientRecord {
  std::string g6_g, g6_h;
  int n_g = 0, n_h = 0;
  int gt_g = 0, gt_h = 0, gt_product = 0;
  Rational qt;
  bool ho_tight = false;   // qt == 1/2
  bool eq1_tight = false;  // gt_g == gt_product
};

// Throws IsolatedVertexError when either factor has an isolated vertex.
QuotientRecord quotient(const Graph& g, const Graph& h);

struct CampaignOptions {
  int jobs = 1;                 // worker threads; output bytes never depend on this
  std::string out_path;         // JSONL results; empty = no persistence
  std::string checkpoint_path;  // defaults to out_path + ".ckpt" when out_path set
  std::size_t checkpoint_every = 64;  // flushed items between checkpoint writes
  // Stop (with a checkpoint) after this many items; resuming later finishes
  // the run byte-identically. Also the test hook for interruption.
  std::size_t max_items = std::numeric_limits<std::size_t>::max();
  std::size_t min_td_set_limit = 100000;
};

struct CampaignReport {
  std::string campaign;
  std::string params;            // canonical JSON of the campaign parameters
  std::size_t items_total = 0;
  std::size_t items_done = 0;    // checkpoint cursor, includes earlier runs
  std::size_t records_written = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;       // solver errors / LimitExceeded instances
  std::size_t filtered_out_g = 0;
  std::size_t filtered_out_h = 0;
  std::vector<std::string> violation_lines;  // violations seen by this run
  double wall_seconds = 0.0;
  bool completed = true;

  int exit_code() const { return violations ? 1 : 0; }
};

// Question 1: 2*gamma_t(G box H) >= gamma_t(G box K_2)*gamma_t(H) for every
// pair, in exact integers, plus the Ho / Eq.(1) / rho_2 bound checks on every
// pair. Emits one QuotientRecord line per pair.
CampaignReport verify_question1(const std::vector<GraphRecord>& gs,
                                const std::vector<GraphRecord>& hs,
                                const CampaignOptions& opt = {});

// Theorem 1 (Ho), Eq.(1), Eq.(2) and the rho_2 bound over all pairs.
CampaignReport verify_ho(const std::vector<GraphRecord>& gs,
                         const std::vector<GraphRecord>& hs,
                         const CampaignOptions& opt = {});

// Theorem 2: gamma_t(G) = gamma_t(G box K_2) <=> G in F1 u F2 u F3.
CampaignReport verify_theorem2(const std::vector<GraphRecord>& gs,
                               const CampaignOptions& opt = {});

// Theorem 3 equivalence over pairs with gamma_t(H) = 2.
CampaignReport verify_theorem3(const std::vector<GraphRecord>& gs,
                               const std::vector<GraphRecord>& hs,
                               const CampaignOptions& opt = {});

// Proposition 1 statements (A)-(M) for every qualifying (G, H, D) over all
// minimum TD-sets D of G box H.
CampaignReport verify_proposition1(const std::vector<GraphRecord>& gs,
                                   const std::vector<GraphRecord>& hs,
                                   const CampaignOptions& opt = {});

// Pairs whose quotient is exactly 1/2, each annotated with whether one factor
// is K_2 (the only shape known to reach the bound).
struct EqualityPair {
  QuotientRecord record;
  bool has_k2_factor = false;
};
std::vector<EqualityPair> find_equality_pairs(const std::vector<GraphRecord>& gs,
                                              const std::vector<GraphRecord>& hs);

// Corpus-restricted minimum of q_t(G, -): explicitly not the true infimum.
// The argmin is the first minimizer in corpus order.
struct QtInfResult {
  Rational value;
  GraphRecord argmin;
};
QtInfResult qt_inf_over_corpus(const Graph& g, const std::vector<GraphRecord>& hs);

}  // namespace tdq
