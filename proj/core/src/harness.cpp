#include "tdq/harness.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <mutex>
#include <thread>

namespace tdq {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "1";

std::string hex64(std::uint64_t x) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::uint64_t corpus_signature(const std::vector<GraphRecord>& rs) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& r : rs) {
    for (unsigned char c : r.g6) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= '\n';
    h *= 1099511628211ULL;
  }
  return h;
}

// One work item's rendered output: complete JSONL lines plus counters.
struct Rendered {
  std::string lines;
  std::size_t records = 0, violations = 0, skipped = 0;
  std::vector<std::string> violation_lines;
};

void append_line(Rendered& r, const ordered_json& j) {
  std::string line = j.dump();
  r.lines += line;
  r.lines += '\n';
  if (j.value("type", "") == "violation") {
    ++r.violations;
    r.violation_lines.push_back(line);
  } else if (j.value("type", "") == "record") {
    ++r.records;
  } else if (j.value("type", "") == "skip") {
    ++r.skipped;
  }
}

struct Checkpoint {
  std::string campaign, params;
  std::size_t items_done = 0;
  std::uint64_t bytes = 0;
  std::size_t records = 0, violations = 0, skipped = 0;
};

void write_checkpoint_file(const std::string& path, const Checkpoint& c) {
  ordered_json j;
  j["format_version"] = kFormatVersion;
  j["campaign"] = c.campaign;
  j["params"] = c.params;
  j["items_done"] = c.items_done;
  j["bytes"] = c.bytes;
  j["records"] = c.records;
  j["violations"] = c.violations;
  j["skipped"] = c.skipped;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
  }
  fs::rename(tmp, path);  // atomic replacement
}

bool read_checkpoint_file(const std::string& path, Checkpoint* c) {
  std::ifstream in(path);
  if (!in) return false;
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error("corrupt checkpoint file: " + path);
  c->campaign = j.value("campaign", "");
  c->params = j.value("params", "");
  c->items_done = j.value("items_done", std::size_t{0});
  c->bytes = j.value("bytes", std::uint64_t{0});
  c->records = j.value("records", std::size_t{0});
  c->violations = j.value("violations", std::size_t{0});
  c->skipped = j.value("skipped", std::size_t{0});
  return true;
}

std::string csv_path_for(const std::string& jsonl_path) {
  if (jsonl_path.ends_with(".jsonl"))
    return jsonl_path.substr(0, jsonl_path.size() - 6) + ".csv";
  return jsonl_path + ".csv";
}

// Flatten the "record" lines of a finished JSONL file into a sibling CSV.
void export_csv(const std::string& jsonl_path) {
  std::ifstream in(jsonl_path);
  if (!in) return;
  std::ofstream out(csv_path_for(jsonl_path), std::ios::trunc);
  std::string line;
  bool wrote_header = false;
  std::vector<std::string> columns;
  while (std::getline(in, line)) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || j.value("type", "") != "record") continue;
    if (!wrote_header) {
      bool sep = false;
      for (auto& [key, _] : j.items()) {
        if (key == "type") continue;
        columns.push_back(key);
        out << (sep ? "," : "") << key;
        sep = true;
      }
      out << '\n';
      wrote_header = true;
    }
    bool sep = false;
    for (const auto& key : columns) {
      out << (sep ? "," : "");
      sep = true;
      if (!j.contains(key)) continue;
      const auto& v = j[key];
      if (v.is_string())
        out << v.get<std::string>();
      else
        out << v.dump();
    }
    out << '\n';
  }
}

// Runs `render` over items [resume..min(total,max_items)), flushing results in
// item order so output bytes never depend on the worker count, checkpointing
// as it goes.
CampaignReport run_campaign(const std::string& name, const ordered_json& params,
                            std::size_t total,
                            const std::function<Rendered(std::size_t)>& render,
                            const CampaignOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.campaign = name;
  rep.params = params.dump();
  rep.items_total = total;

  std::string ckpt_path = opt.checkpoint_path;
  if (ckpt_path.empty() && !opt.out_path.empty()) ckpt_path = opt.out_path + ".ckpt";

  std::size_t start = 0;
  Checkpoint ckpt{name, rep.params, 0, 0, 0, 0, 0};
  std::ofstream out;
  if (!opt.out_path.empty()) {
    Checkpoint prev;
    if (!ckpt_path.empty() && read_checkpoint_file(ckpt_path, &prev)) {
      if (prev.campaign != name || prev.params != rep.params)
        throw Error("checkpoint does not match this campaign's parameters: " + ckpt_path);
      ckpt = prev;
      start = prev.items_done;
      fs::resize_file(opt.out_path, prev.bytes);  // drop any un-checkpointed tail
      out.open(opt.out_path, std::ios::in | std::ios::out | std::ios::ate);
    } else {
      out.open(opt.out_path, std::ios::trunc);
      ordered_json header;
      header["type"] = "header";
      header["format_version"] = kFormatVersion;
      header["campaign"] = name;
      header["params"] = params;
      std::string line = header.dump();
      out << line << '\n';
      ckpt.bytes = line.size() + 1;
    }
    if (!out) throw Error("cannot open output file: " + opt.out_path);
  }

  std::size_t end = std::min(total, opt.max_items);
  if (start > end) start = end;

  auto flush_item = [&](const Rendered& r) {
    if (out.is_open()) {
      out << r.lines;
      ckpt.bytes += r.lines.size();
    }
    ckpt.records += r.records;
    ckpt.violations += r.violations;
    ckpt.skipped += r.skipped;
    for (const auto& v : r.violation_lines) rep.violation_lines.push_back(v);
  };

  int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || end - start <= 1) {
    for (std::size_t i = start; i < end; ++i) {
      flush_item(render(i));
      ckpt.items_done = i + 1;
      if (out.is_open() && !ckpt_path.empty() &&
          (i + 1 - start) % opt.checkpoint_every == 0) {
        out.flush();
        write_checkpoint_file(ckpt_path, ckpt);
      }
    }
  } else {
    std::atomic<std::size_t> next{start};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::size_t, Rendered> ready;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= end) return;
          Rendered r = render(i);
          std::lock_guard<std::mutex> lock(mu);
          ready.emplace(i, std::move(r));
          cv.notify_all();
        }
      });
    for (std::size_t i = start; i < end; ++i) {
      Rendered r;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return ready.count(i) > 0; });
        r = std::move(ready.at(i));
        ready.erase(i);
      }
      flush_item(r);
      ckpt.items_done = i + 1;
      if (out.is_open() && !ckpt_path.empty() &&
          (i + 1 - start) % opt.checkpoint_every == 0) {
        out.flush();
        write_checkpoint_file(ckpt_path, ckpt);
      }
    }
    for (auto& w : workers) w.join();
  }

  ckpt.items_done = end;
  if (out.is_open()) {
    out.flush();
    if (!ckpt_path.empty()) write_checkpoint_file(ckpt_path, ckpt);
  }
  rep.items_done = end;
  rep.records_written = ckpt.records;
  rep.violations = ckpt.violations;
  rep.skipped = ckpt.skipped;
  rep.completed = (end == total);
  if (rep.completed && out.is_open()) {
    out.close();
    export_csv(opt.out_path);
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// --- shared pair-campaign plumbing ---

CorpusFilter pair_filter() {
  CorpusFilter f;
  f.connected = true;
  f.no_isolated = true;
  f.nontrivial = true;
  return f;
}

std::vector<GraphRecord> filter_and_sort(const std::vector<GraphRecord>& in,
                                         const CorpusFilter& f, std::size_t* dropped) {
  std::vector<GraphRecord> out;
  for (const auto& r : in)
    if (f.keep(r.graph)) out.push_back(r);
  *dropped = in.size() - out.size();
  std::sort(out.begin(), out.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return a.g6 < b.g6; });
  return out;
}

ordered_json quotient_record_json(const QuotientRecord& rec, const char* type) {
  ordered_json j;
  j["type"] = type;
  j["g6_g"] = rec.g6_g;
  j["g6_h"] = rec.g6_h;
  j["n_g"] = rec.n_g;
  j["n_h"] = rec.n_h;
  j["gt_g"] = rec.gt_g;
  j["gt_h"] = rec.gt_h;
  j["gt_product"] = rec.gt_product;
  j["qt"] = to_string(rec.qt);
  j["ho_tight"] = rec.ho_tight;
  j["eq1_tight"] = rec.eq1_tight;
  return j;
}

ordered_json skip_json(const std::string& g6_g, const std::string& g6_h,
                       const std::string& reason) {
  ordered_json j;
  j["type"] = "skip";
  if (!g6_g.empty()) j["g6_g"] = g6_g;
  if (!g6_h.empty()) j["g6_h"] = g6_h;
  j["reason"] = reason;
  return j;
}

struct FactorData {
  GraphRecord rec;
  int gt = 0;
  int rho2 = 0;
  int gamma_v = 0;
  int gt_box_k2 = 0;
  bool classified = false;
  bool classify_failed = false;
  std::string classify_error;
};

// The universal bound checks run on every pair every campaign touches:
// Ho's bound (equivalently Eq. (2)), Eq. (1), and the 2-packing bound.
void check_universal_bounds(Rendered& out, const QuotientRecord& rec, int rho2_g) {
  auto violation = [&](const std::string& check, const std::string& detail) {
    ordered_json j = quotient_record_json(rec, "violation");
    j["check"] = check;
    j["detail"] = detail;
    append_line(out, j);
  };
  if (rec.gt_g * rec.gt_h > 2 * rec.gt_product)
    violation("ho-bound", "gamma_t(G)*gamma_t(H) > 2*gamma_t(GxH)");
  if (rec.gt_g > rec.gt_product) violation("eq1", "gamma_t(G) > gamma_t(GxH)");
  if (rho2_g * rec.gt_h > rec.gt_product)
    violation("rho2-bound", "rho_2(G)*gamma_t(H) > gamma_t(GxH)");
}

CampaignReport run_quotient_campaign(const std::string& name,
                                     const std::vector<GraphRecord>& gs_in,
                                     const std::vector<GraphRecord>& hs_in,
                                     bool check_q1, const CampaignOptions& opt) {
  std::size_t dropped_g = 0, dropped_h = 0;
  std::vector<GraphRecord> gs = filter_and_sort(gs_in, pair_filter(), &dropped_g);
  std::vector<GraphRecord> hs = filter_and_sort(hs_in, pair_filter(), &dropped_h);

  Graph k2 = complete_graph(2);
  std::vector<FactorData> gd(gs.size()), hd(hs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    gd[i].rec = gs[i];
    gd[i].gt = gamma_t(gs[i].graph).value;
    gd[i].rho2 = rho_2(gs[i].graph).value;
    if (check_q1)
      gd[i].gt_box_k2 = gamma_t(cartesian_product(gs[i].graph, k2).product).value;
  }
  for (std::size_t j = 0; j < hs.size(); ++j) {
    hd[j].rec = hs[j];
    hd[j].gt = gamma_t(hs[j].graph).value;
  }

  ordered_json params;
  params["g_count"] = gs.size();
  params["g_sig"] = hex64(corpus_signature(gs));
  params["h_count"] = hs.size();
  params["h_sig"] = hex64(corpus_signature(hs));

  auto render = [&, check_q1](std::size_t idx) {
    Rendered out;
    const FactorData& G = gd[idx / hs.size()];
    const FactorData& H = hd[idx % hs.size()];
    int gt_prod;
    try {
      gt_prod = gamma_t(cartesian_product(G.rec.graph, H.rec.graph).product).value;
    } catch (const Error& e) {
      append_line(out, skip_json(G.rec.g6, H.rec.g6, e.what()));
      return out;
    }
    QuotientRecord rec;
    rec.g6_g = G.rec.g6;
    rec.g6_h = H.rec.g6;
    rec.n_g = G.rec.graph.vertex_count();
    rec.n_h = H.rec.graph.vertex_count();
    rec.gt_g = G.gt;
    rec.gt_h = H.gt;
    rec.gt_product = gt_prod;
    rec.qt = Rational(gt_prod, static_cast<long long>(G.gt) * H.gt);
    rec.ho_tight = rec.qt == Rational(1, 2);
    rec.eq1_tight = G.gt == gt_prod;

    bool ho_holds = 2 * gt_prod >= G.gt * H.gt;
    if (ho_holds) append_line(out, quotient_record_json(rec, "record"));
    check_universal_bounds(out, rec, G.rho2);
    if (check_q1 && 2 * gt_prod < G.gt_box_k2 * H.gt) {
      ordered_json j = quotient_record_json(rec, "violation");
      j["check"] = "question1";
      j["gt_g_box_k2"] = G.gt_box_k2;
      j["detail"] = "2*gamma_t(GxH) < gamma_t(GxK_2)*gamma_t(H)";
      append_line(out, j);
    }
    return out;
  };

  CampaignReport rep =
      run_campaign(name, params, gs.size() * hs.size(), render, opt);
  rep.filtered_out_g = dropped_g;
  rep.filtered_out_h = dropped_h;
  return rep;
}

}  // namespace

QuotientRecord quotient(const Graph& g, const Graph& h) {
  if (has_isolated_vertex(g) || has_isolated_vertex(h))
    throw IsolatedVertexError("quotient requires factors without isolated vertices");
  QuotientRecord rec;
  rec.g6_g = write_graph6(g);
  rec.g6_h = write_graph6(h);
  rec.n_g = g.vertex_count();
  rec.n_h = h.vertex_count();
  rec.gt_g = gamma_t(g).value;
  rec.gt_h = gamma_t(h).value;
  rec.gt_product = gamma_t(cartesian_product(g, h).product).value;
  rec.qt = Rational(rec.gt_product, static_cast<long long>(rec.gt_g) * rec.gt_h);
  rec.ho_tight = rec.qt == Rational(1, 2);
  rec.eq1_tight = rec.gt_g == rec.gt_product;
  return rec;
}

CampaignReport verify_question1(const std::vector<GraphRecord>& gs,
                                const std::vector<GraphRecord>& hs,
                                const CampaignOptions& opt) {
  return run_quotient_campaign("q1", gs, hs, /*check_q1=*/true, opt);
}

CampaignReport verify_ho(const std::vector<GraphRecord>& gs,
                         const std::vector<GraphRecord>& hs,
                         const CampaignOptions& opt) {
  return run_quotient_campaign("ho", gs, hs, /*check_q1=*/false, opt);
}

CampaignReport verify_theorem2(const std::vector<GraphRecord>& gs_in,
                               const CampaignOptions& opt) {
  std::size_t dropped_g = 0;
  std::vector<GraphRecord> gs = filter_and_sort(gs_in, pair_filter(), &dropped_g);
  Graph k2 = complete_graph(2);

  ordered_json params;
  params["g_count"] = gs.size();
  params["g_sig"] = hex64(corpus_signature(gs));
  params["min_td_set_limit"] = opt.min_td_set_limit;

  auto render = [&, k2](std::size_t idx) {
    Rendered out;
    const GraphRecord& G = gs[idx];
    int gt = gamma_t(G.graph).value;
    int gt_prod = gamma_t(cartesian_product(G.graph, k2).product).value;
    bool equal = gt == gt_prod;
    FamilyClassification c;
    try {
      c = classify(G.graph, G.graph.vertex_count(), opt.min_td_set_limit);
    } catch (const Error& e) {
      append_line(out, skip_json(G.g6, "", e.what()));
      return out;
    }
    ordered_json j;
    j["type"] = equal == c.in_any() ? "record" : "violation";
    j["g6"] = G.g6;
    j["n"] = G.graph.vertex_count();
    j["gt"] = gt;
    j["gt_product_k2"] = gt_prod;
    j["equality"] = equal;
    j["in_f1"] = c.f1.has_value();
    j["in_f2"] = c.f2.has_value();
    j["in_f3"] = c.f3.has_value();
    if (equal != c.in_any()) j["check"] = equal ? "theorem2-only-if" : "theorem2-if";
    append_line(out, j);
    return out;
  };

  CampaignReport rep = run_campaign("thm2", params, gs.size(), render, opt);
  rep.filtered_out_g = dropped_g;
  return rep;
}

CampaignReport verify_theorem3(const std::vector<GraphRecord>& gs_in,
                               const std::vector<GraphRecord>& hs_in,
                               const CampaignOptions& opt) {
  std::size_t dropped_g = 0, dropped_h = 0;
  std::vector<GraphRecord> gs = filter_and_sort(gs_in, pair_filter(), &dropped_g);
  CorpusFilter hf = pair_filter();
  hf.gamma_t_equals = 2;
  std::vector<GraphRecord> hs = filter_and_sort(hs_in, hf, &dropped_h);

  std::vector<FactorData> gd(gs.size()), hd(hs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    gd[i].rec = gs[i];
    gd[i].gt = gamma_t(gs[i].graph).value;
    gd[i].rho2 = rho_2(gs[i].graph).value;
    try {
      gd[i].classified =
          classify(gs[i].graph, gs[i].graph.vertex_count(), opt.min_td_set_limit).in_any();
    } catch (const Error& e) {
      gd[i].classify_failed = true;
      gd[i].classify_error = e.what();
    }
  }
  for (std::size_t j = 0; j < hs.size(); ++j) {
    hd[j].rec = hs[j];
    hd[j].gt = 2;
    hd[j].gamma_v = gamma(hs[j].graph).value;
  }

  ordered_json params;
  params["g_count"] = gs.size();
  params["g_sig"] = hex64(corpus_signature(gs));
  params["h_count"] = hs.size();
  params["h_sig"] = hex64(corpus_signature(hs));
  params["min_td_set_limit"] = opt.min_td_set_limit;

  auto is_k2_graph = [](const Graph& g) {
    return g.vertex_count() == 2 && g.edge_count() == 1;
  };

  auto render = [&, is_k2_graph](std::size_t idx) {
    Rendered out;
    const FactorData& G = gd[idx / hs.size()];
    const FactorData& H = hd[idx % hs.size()];
    if (G.classify_failed) {
      append_line(out, skip_json(G.rec.g6, H.rec.g6, G.classify_error));
      return out;
    }
    int gt_prod = gamma_t(cartesian_product(G.rec.graph, H.rec.graph).product).value;
    bool equal = G.gt == gt_prod;
    bool rhs = (is_k2_graph(G.rec.graph) && H.gamma_v == 1) ||
               (is_k2_graph(H.rec.graph) && G.classified);
    ordered_json j;
    j["type"] = equal == rhs ? "record" : "violation";
    j["g6_g"] = G.rec.g6;
    j["g6_h"] = H.rec.g6;
    j["gt_g"] = G.gt;
    j["gt_h"] = H.gt;
    j["gt_product"] = gt_prod;
    j["equality"] = equal;
    j["rhs"] = rhs;
    if (equal != rhs) j["check"] = "theorem3-equivalence";
    append_line(out, j);

    QuotientRecord rec;
    rec.g6_g = G.rec.g6;
    rec.g6_h = H.rec.g6;
    rec.n_g = G.rec.graph.vertex_count();
    rec.n_h = H.rec.graph.vertex_count();
    rec.gt_g = G.gt;
    rec.gt_h = H.gt;
    rec.gt_product = gt_prod;
    rec.qt = Rational(gt_prod, static_cast<long long>(G.gt) * H.gt);
    check_universal_bounds(out, rec, G.rho2);
    return out;
  };

  CampaignReport rep =
      run_campaign("thm3", params, gs.size() * hs.size(), render, opt);
  rep.filtered_out_g = dropped_g;
  rep.filtered_out_h = dropped_h;
  return rep;
}

CampaignReport verify_proposition1(const std::vector<GraphRecord>& gs_in,
                                   const std::vector<GraphRecord>& hs_in,
                                   const CampaignOptions& opt) {
  std::size_t dropped_g = 0, dropped_h = 0;
  std::vector<GraphRecord> gs = filter_and_sort(gs_in, pair_filter(), &dropped_g);
  CorpusFilter hf = pair_filter();
  hf.gamma_t_equals = 2;
  std::vector<GraphRecord> hs = filter_and_sort(hs_in, hf, &dropped_h);

  std::vector<FactorData> gd(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    gd[i].rec = gs[i];
    gd[i].gt = gamma_t(gs[i].graph).value;
    gd[i].rho2 = rho_2(gs[i].graph).value;
  }

  ordered_json params;
  params["g_count"] = gs.size();
  params["g_sig"] = hex64(corpus_signature(gs));
  params["h_count"] = hs.size();
  params["h_sig"] = hex64(corpus_signature(hs));
  params["min_td_set_limit"] = opt.min_td_set_limit;

  auto render = [&](std::size_t idx) {
    Rendered out;
    const FactorData& G = gd[idx / hs.size()];
    const GraphRecord& H = hs[idx % hs.size()];
    ProductGraph prod = cartesian_product(G.rec.graph, H.graph);
    int gt_prod = gamma_t(prod.product).value;
    int gt_h = 2;

    QuotientRecord rec;
    rec.g6_g = G.rec.g6;
    rec.g6_h = H.g6;
    rec.n_g = G.rec.graph.vertex_count();
    rec.n_h = H.graph.vertex_count();
    rec.gt_g = G.gt;
    rec.gt_h = gt_h;
    rec.gt_product = gt_prod;
    rec.qt = Rational(gt_prod, static_cast<long long>(G.gt) * gt_h);
    check_universal_bounds(out, rec, G.rho2);

    if (G.gt != gt_prod) {
      ordered_json j;
      j["type"] = "record";
      j["g6_g"] = G.rec.g6;
      j["g6_h"] = H.g6;
      j["qualifying"] = false;
      j["min_td_sets"] = 0;
      j["all_pass"] = true;
      append_line(out, j);
      return out;
    }

    std::vector<VertexSet> d_sets;
    try {
      d_sets = all_min_td_sets(prod.product, opt.min_td_set_limit);
    } catch (const LimitExceededError& e) {
      append_line(out, skip_json(G.rec.g6, H.g6, e.what()));
      return out;
    }

    std::map<std::string, Verdict> aggregate;
    bool all_pass = true;
    std::vector<ordered_json> failures;
    for (const VertexSet& d : d_sets) {
      DecompositionReport r = decompose_product_tdset(G.rec.graph, H.graph, d);
      for (const auto& [label, verdict] : r.statements) {
        auto it = aggregate.find(label);
        if (it == aggregate.end())
          aggregate.emplace(label, verdict);
        else if (verdict == Verdict::kFail || (verdict == Verdict::kPass &&
                                               it->second == Verdict::kNotApplicable))
          it->second = verdict;
        if (verdict == Verdict::kFail) {
          all_pass = false;
          ordered_json f;
          f["d"] = d.to_string();
          f["statement"] = label;
          failures.push_back(f);
        }
      }
    }
    ordered_json j;
    j["type"] = all_pass ? "record" : "violation";
    j["g6_g"] = G.rec.g6;
    j["g6_h"] = H.g6;
    j["qualifying"] = true;
    j["min_td_sets"] = d_sets.size();
    j["all_pass"] = all_pass;
    ordered_json verdicts;
    for (const auto& [label, verdict] : aggregate) verdicts[label] = to_string(verdict);
    j["statements"] = verdicts;
    if (!all_pass) {
      j["check"] = "proposition1";
      j["failures"] = failures;
    }
    append_line(out, j);
    return out;
  };

  CampaignReport rep =
      run_campaign("prop1", params, gs.size() * hs.size(), render, opt);
  rep.filtered_out_g = dropped_g;
  rep.filtered_out_h = dropped_h;
  return rep;
}

std::vector<EqualityPair> find_equality_pairs(const std::vector<GraphRecord>& gs_in,
                                              const std::vector<GraphRecord>& hs_in) {
  std::size_t dropped = 0;
  std::vector<GraphRecord> gs = filter_and_sort(gs_in, pair_filter(), &dropped);
  std::vector<GraphRecord> hs = filter_and_sort(hs_in, pair_filter(), &dropped);
  std::vector<EqualityPair> out;
  for (const auto& G : gs)
    for (const auto& H : hs) {
      QuotientRecord rec = quotient(G.graph, H.graph);
      if (rec.qt != Rational(1, 2)) continue;
      bool k2 = (G.graph.vertex_count() == 2 && G.graph.edge_count() == 1) ||
                (H.graph.vertex_count() == 2 && H.graph.edge_count() == 1);
      out.push_back({rec, k2});
    }
  return out;
}

QtInfResult qt_inf_over_corpus(const Graph& g, const std::vector<GraphRecord>& hs) {
  if (hs.empty()) throw InvalidArgumentError("empty corpus");
  QtInfResult best;
  bool have = false;
  for (const auto& H : hs) {
    QuotientRecord rec = quotient(g, H.graph);
    if (!have || rec.qt < best.value) {
      best.value = rec.qt;
      best.argmin = H;
      have = true;
    }
  }
  return best;
}

}  // namespace tdq
