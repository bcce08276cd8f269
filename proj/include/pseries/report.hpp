#pragma once

// Running a parsed document through the decision engines and rendering
// auditable reports: JSON (deterministic) and a human-readable table.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseries/input.hpp"

namespace pseries {

inline constexpr int kReportSchemaVersion = 1;

struct RunReport {
  std::string engine;         // resolved selector token
  std::string group_display;  // preset the run was evaluated on
  Verdict verdict;
  std::vector<std::string> warnings;
  bool pole_report = false;
  std::string pole_case;
  int pole_d = 1;
  bool refined = false;
  int pole_k = 0;
  std::vector<Rat> pole_values;
  double elapsed_ms = 0.0;  // excluded from serialized reports
};

// Pick the engine for a document with theorem = "auto".
inline std::string resolve_engine(const InputDocument& doc) {
  const std::string& t = doc.options.theorem;
  if (t != "auto") return t;
  if (!doc.segments.empty()) return "glnd";
  const Family fam = doc.datum.family;
  if (fam == Family::GLD)
    fail("the division-algebra preset needs a segments block or an explicit theorem");
  if (doc.options.unitary) {
    require(family_is_split(fam), "the unitary-hypothesis criterion needs a split preset");
    return "unitary";
  }
  const bool smooth_char = doc.character.has_value() && [&] {
    for (const auto& c : doc.character->coords)
      if (!c.alg_all_zero()) return false;
    return true;
  }();
  if (family_is_classical_group(fam) && smooth_char) return "classical-smooth";
  if (fam == Family::GL) return "gln";
  if (family_is_split(fam)) return "split";
  fail("no automatic engine applies to " + doc.datum.display() +
       " with a non-smooth character; set options.theorem");
  return "";  // unreachable
}

namespace detail_io {

inline const Character& need_character(const InputDocument& doc) {
  require(doc.character.has_value(), "this run requires a character block");
  return *doc.character;
}

inline Verdict run_rgroup(const InputDocument& doc) {
  const RootDatum& rd = doc.datum;
  require(rd.family == Family::SOeven || rd.family == Family::SOstar,
          "the subset-rank report covers the SO_even and SOstar presets");
  const Character& chi = need_character(doc);
  for (const auto& c : chi.coords)
    require(c.s == 0 && c.alg_all_zero(),
            "the subset-rank report needs a smooth character with zero unramified exponents");
  Verdict v;
  v.theorem_id = "rgroup-rank";
  RGroupResult rg;
  if (rd.family == Family::SOeven) {
    std::vector<IVec> vals;
    for (const auto& c : chi.coords) vals.push_back(c.smooth);
    rg = rgroup_rank_gso(doc.group, vals);
  } else {
    std::vector<IVec> vals;
    for (int i = 0; i + 1 < rd.rank; ++i) vals.push_back(chi.coords[i].smooth);
    rg = rgroup_rank_gso_star(doc.group, vals, chi.coords[rd.rank - 1].smooth);
  }
  v.add("eligible-values",
        std::to_string(rg.eligible.size()) + " eligible order-two value(s) after deduplication",
        true);
  Int count = Int(1) << rg.r;
  v.add("subset-rank",
        "the relation group has F2 rank " + std::to_string(rg.r) + "; subset count " +
            count.str(),
        true);
  bool trivial = rg.r == 0;
  std::optional<Witness> w;
  if (!trivial)
    w = Witness{"subset", {},
                "a nontrivial relation exists among the eligible values (rank " +
                    std::to_string(rg.r) + ")"};
  v.add("no-nontrivial-subset-relation",
        trivial ? "the eligible values admit no nontrivial relation"
                : "the eligible values satisfy nontrivial relations",
        trivial, w);
  for (const auto& n : rg.notes) v.notes.push_back(n);
  v.status = Status::Inconclusive;
  v.witness = w;
  if (trivial)
    v.message = "the relation group is trivial; this report does not decide irreducibility";
  else
    v.message = "the relation group has rank " + std::to_string(rg.r) + " (" + count.str() +
                " subsets); this report does not decide irreducibility";
  if (!v.witness)
    v.witness = Witness{"subset", {}, "rank report only; no relation found"};
  return v;
}

}  // namespace detail_io

inline RunReport run(const InputDocument& doc) {
  RunReport rep;
  rep.group_display = doc.datum.display();
  PrimeCheck pc = check_assumption_p(doc.datum);
  if (!pc.ok) rep.warnings.push_back(pc.warning);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    rep.engine = resolve_engine(doc);
    const RootDatum& rd = doc.datum;
    const SmoothCharGroup& g = doc.group;
    const RunOptions& opt = doc.options;
    if (rep.engine == "gln") {
      require(rd.family == Family::GL, "the gln engine needs a GL preset");
      rep.verdict = check_gln_banach(g, detail_io::need_character(doc));
    } else if (rep.engine == "split") {
      rep.verdict = check_split_banach(g, rd, detail_io::need_character(doc), opt.weyl_budget);
    } else if (rep.engine == "classical-smooth") {
      rep.verdict = check_classical_smooth_iff(g, rd, detail_io::need_character(doc));
    } else if (rep.engine == "classical-banach") {
      rep.verdict = check_classical_banach(g, rd, detail_io::need_character(doc));
    } else if (rep.engine == "unitary") {
      rep.verdict = check_unitary_split(g, rd, detail_io::need_character(doc),
                                        opt.cone_given ? &opt.cone : nullptr, opt.refined);
    } else if (rep.engine == "rank1") {
      require(rd.simples.size() == 1,
              "the rank-one criterion needs a preset with exactly one simple root");
      const Character& chi = detail_io::need_character(doc);
      CharCoord psi = compose_with_cochar(g, chi, rd.coroot[rd.simples[0]], rd);
      rep.verdict = check_rank1_split(g, psi);
    } else if (rep.engine == "glnd") {
      require(!doc.segments.empty(), "the division-algebra criterion needs a segments block");
      rep.verdict = check_glnd_banach(doc.segments);
    } else if (rep.engine == "rgroup") {
      rep.verdict = detail_io::run_rgroup(doc);
    } else if (rep.engine == "smooth-via-rank1") {
      rep.verdict = check_smooth_via_rank1(g, rd, detail_io::need_character(doc), opt.rank1_table,
                                           opt.weyl_budget);
    } else if (rep.engine == "poles") {
      require(opt.pole.has_value(), "a poles run needs options.pole_case");
      rep.pole_report = true;
      rep.pole_case = pole_case_token(*opt.pole);
      rep.pole_d = opt.pole->d;
      rep.refined = opt.refined;
      rep.pole_k = pole_case_k(*opt.pole, opt.refined);
      rep.pole_values = rank1_pole_set(*opt.pole, opt.refined);
    } else {
      fail("unknown theorem \"" + rep.engine + "\"");
    }
  } catch (const std::exception& ex) {
    if (rep.engine.empty()) rep.engine = doc.options.theorem;
    Verdict v;
    v.status = Status::PreconditionFailed;
    v.theorem_id = rep.verdict.theorem_id.empty() ? rep.engine : rep.verdict.theorem_id;
    v.message = ex.what();
    v.add("engine-preconditions", ex.what(), false);
    rep.verdict = v;
    rep.pole_report = false;
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

// ---- JSON rendering ----

namespace detail_io {

inline OJson witness_json(const Witness& w) {
  OJson out;
  out["kind"] = w.kind;
  OJson idx = OJson::array();
  for (int i : w.indices) idx.push_back(i);
  out["indices"] = idx;
  out["text"] = w.text;
  return out;
}

}  // namespace detail_io

inline OJson report_json(const RunReport& rep, bool include_timing = false) {
  OJson out;
  out["schema_version"] = kReportSchemaVersion;
  if (rep.pole_report) {
    out["kind"] = "poles";
    if (!rep.group_display.empty()) out["group"] = rep.group_display;
    out["case"] = rep.pole_case;
    out["d"] = rep.pole_d;
    out["refined"] = rep.refined;
    out["k"] = rep.pole_k;
    OJson vals = OJson::array();
    for (const auto& r : rep.pole_values) vals.push_back(rat_str(r));
    out["values"] = vals;
  } else {
    out["kind"] = "verdict";
    out["engine"] = rep.engine;
    out["group"] = rep.group_display;
    out["theorem"] = rep.verdict.theorem_id;
    out["status"] = status_str(rep.verdict.status);
    out["message"] = rep.verdict.message;
    if (rep.verdict.witness) out["witness"] = detail_io::witness_json(*rep.verdict.witness);
    OJson trace = OJson::array();
    for (const auto& t : rep.verdict.trace) {
      OJson entry;
      entry["id"] = t.condition_id;
      entry["holds"] = t.holds;
      entry["text"] = t.text;
      if (t.witness) entry["witness"] = detail_io::witness_json(*t.witness);
      trace.push_back(entry);
    }
    out["trace"] = trace;
    OJson notes = OJson::array();
    for (const auto& n : rep.verdict.notes) notes.push_back(n);
    out["notes"] = notes;
  }
  OJson warns = OJson::array();
  for (const auto& w : rep.warnings) warns.push_back(w);
  out["warnings"] = warns;
  if (include_timing) out["timing_ms"] = rep.elapsed_ms;
  return out;
}

inline std::string report_table(const RunReport& rep, bool with_trace = true) {
  std::string out;
  auto row = [&](const std::string& k, const std::string& v) {
    out += k;
    out += std::string(k.size() < 10 ? 10 - k.size() : 1, ' ');
    out += v;
    out += "\n";
  };
  row("group", rep.group_display);
  row("engine", rep.engine);
  if (rep.pole_report) {
    row("case", rep.pole_case + " (d=" + std::to_string(rep.pole_d) + ")");
    row("k", std::to_string(rep.pole_k) + (rep.refined ? " (refined)" : ""));
    std::string vals;
    for (const auto& r : rep.pole_values) vals += (vals.empty() ? "" : ", ") + rat_str(r);
    row("values", "{" + vals + "}");
  } else {
    row("theorem", rep.verdict.theorem_id);
    row("status", status_str(rep.verdict.status));
    if (!rep.verdict.message.empty()) row("message", rep.verdict.message);
    if (rep.verdict.witness) {
      const Witness& w = *rep.verdict.witness;
      std::string idx;
      for (int i : w.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
      row("witness", w.kind + (idx.empty() ? "" : " (" + idx + ")") + ": " + w.text);
    }
    if (with_trace && !rep.verdict.trace.empty()) {
      out += "trace\n";
      for (const auto& t : rep.verdict.trace) {
        out += t.holds ? "  [ok]   " : "  [FAIL] ";
        out += t.condition_id;
        if (t.condition_id.size() < 40) out += std::string(40 - t.condition_id.size(), ' ');
        out += " ";
        out += t.text;
        if (t.witness && !t.holds) out += "  -- " + t.witness->text;
        out += "\n";
      }
    }
    for (const auto& n : rep.verdict.notes) out += "note      " + n + "\n";
  }
  for (const auto& w : rep.warnings) out += "warning   " + w + "\n";
  return out;
}

// ---- batch runs ----

struct BatchItem {
  int index = 0;
  std::string source;
  std::optional<RunReport> report;
  std::vector<std::string> errors;
};

struct BatchReport {
  std::vector<BatchItem> items;
};

inline BatchReport run_batch(const std::vector<std::string>& texts,
                             const std::vector<std::string>& sources = {}) {
  BatchReport batch;
  for (size_t i = 0; i < texts.size(); ++i) {
    BatchItem item;
    item.index = static_cast<int>(i);
    if (i < sources.size()) item.source = sources[i];
    ParseResult pr = parse_input(texts[i]);
    if (!pr.ok())
      item.errors = pr.errors;
    else
      item.report = run(*pr.doc);
    batch.items.push_back(std::move(item));
  }
  return batch;
}

inline OJson batch_json(const BatchReport& batch, bool include_timing = false) {
  OJson out;
  out["schema_version"] = kReportSchemaVersion;
  out["kind"] = "batch";
  OJson reports = OJson::array();
  int errors = 0, poles = 0;
  std::map<std::string, int> by_status;
  for (const auto& item : batch.items) {
    OJson entry;
    entry["index"] = item.index;
    if (!item.source.empty()) entry["source"] = item.source;
    if (item.report) {
      entry["report"] = report_json(*item.report, include_timing);
      if (item.report->pole_report)
        ++poles;
      else
        ++by_status[status_str(item.report->verdict.status)];
    } else {
      OJson errs = OJson::array();
      for (const auto& msg : item.errors) errs.push_back(msg);
      entry["errors"] = errs;
      ++errors;
    }
    reports.push_back(entry);
  }
  out["reports"] = reports;
  OJson summary;
  summary["total"] = static_cast<int>(batch.items.size());
  for (const char* s : {"Irreducible", "Reducible", "Inconclusive", "PreconditionFailed"})
    summary[s] = by_status.count(s) ? by_status[s] : 0;
  summary["poles"] = poles;
  summary["errors"] = errors;
  out["summary"] = summary;
  return out;
}

}  // namespace pseries
