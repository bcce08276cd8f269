// Command-line front end: evaluate input documents, print rank-one pole
// windows, and re-verify the combinatorial lemmas the engines rely on.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pseries/input.hpp"
#include "pseries/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitSchema = 2;
constexpr int kExitLemma = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long long env_weyl_budget() {
  const char* raw = std::getenv("PSERIES_WEYL_BUDGET");
  if (!raw) return 0;
  auto r = pseries::rat_from_string(raw);
  if (!r || !pseries::is_integer(*r) || *r < 1) {
    std::cerr << "warning: ignoring malformed PSERIES_WEYL_BUDGET \"" << raw << "\"\n";
    return 0;
  }
  return numerator(*r).convert_to<long long>();
}

struct CheckFlags {
  std::vector<std::string> files;
  std::string theorem;
  bool trace = false;
  bool table = false;
  bool refined = false;
  long long weyl_budget = 0;
  bool timing = false;
};

void apply_overrides(pseries::InputDocument& doc, const CheckFlags& flags) {
  if (!flags.theorem.empty()) doc.options.theorem = flags.theorem;
  if (flags.refined) doc.options.refined = true;
  if (flags.weyl_budget > 0) {
    doc.options.weyl_budget = flags.weyl_budget;
    doc.options.weyl_budget_given = true;
  } else if (!doc.options.weyl_budget_given) {
    if (long long env = env_weyl_budget(); env > 0) doc.options.weyl_budget = env;
  }
}

int run_check(const CheckFlags& flags) {
  std::vector<std::string> texts;
  for (const auto& path : flags.files) {
    auto text = read_file(path);
    if (!text) {
      std::cerr << "error: cannot read " << path << "\n";
      return kExitIo;
    }
    texts.push_back(*text);
  }

  if (texts.size() == 1) {
    pseries::ParseResult pr = pseries::parse_input(texts[0]);
    if (!pr.ok()) {
      for (const auto& e : pr.errors) std::cerr << flags.files[0] << e << "\n";
      return kExitSchema;
    }
    apply_overrides(*pr.doc, flags);
    pseries::RunReport rep = pseries::run(*pr.doc);
    if (flags.table)
      std::cout << pseries::report_table(rep, flags.trace);
    else
      std::cout << pseries::report_json(rep).dump(2) << "\n";
    if (flags.timing) std::cerr << "timing_ms " << rep.elapsed_ms << "\n";
    return kExitOk;
  }

  // Several files form a batch: per-entry errors are recorded in the report
  // rather than aborting the run.
  pseries::BatchReport batch;
  double total_ms = 0.0;
  for (size_t i = 0; i < texts.size(); ++i) {
    pseries::BatchItem item;
    item.index = static_cast<int>(i);
    item.source = flags.files[i];
    pseries::ParseResult pr = pseries::parse_input(texts[i]);
    if (!pr.ok()) {
      item.errors = pr.errors;
    } else {
      apply_overrides(*pr.doc, flags);
      item.report = pseries::run(*pr.doc);
      total_ms += item.report->elapsed_ms;
    }
    batch.items.push_back(std::move(item));
  }
  std::cout << pseries::batch_json(batch).dump(2) << "\n";
  if (flags.timing) std::cerr << "timing_ms " << total_ms << "\n";
  return kExitOk;
}

int run_poles(const std::string& case_token, int d, bool refined, bool table) {
  auto pc = pseries::pole_case_from_token(case_token, d);
  if (!pc) {
    std::cerr << "error: unknown pole case \"" << case_token
              << "\" (expected i, ii3, ii4, iii1, iii2, iv4, or iv5)\n";
    return kExitSchema;
  }
  pseries::RunReport rep;
  rep.engine = "poles";
  rep.pole_report = true;
  rep.pole_case = pseries::pole_case_token(*pc);
  rep.pole_d = pc->d;
  rep.refined = refined;
  rep.pole_k = pseries::pole_case_k(*pc, refined);
  rep.pole_values = pseries::rank1_pole_set(*pc, refined);
  if (table)
    std::cout << pseries::report_table(rep);
  else
    std::cout << pseries::report_json(rep).dump(2) << "\n";
  return kExitOk;
}

// Re-derive the facts the engines assume: the weighted half-sum pairing law
// on every preset, agreement of the subset-group rank with brute-force subset
// counts, and the shape of the rank-one pole windows.
int run_verify(int max_rank, int trials, unsigned seed) {
  using namespace pseries;
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  };

  // Pairing law: <rho, coroot> >= n_alpha with equality exactly at simple roots,
  // stable under uniform scaling of the multiplicities.
  {
    FieldData fd;
    FieldData fde;
    fde.has_extension = true;
    std::vector<std::pair<Family, std::vector<int>>> presets;
    std::vector<int> all, even, odd;
    for (int n = 1; n <= max_rank; ++n) all.push_back(n);
    for (int n = 2; n <= 2 * max_rank; n += 2) even.push_back(n);
    for (int n = 3; n <= 2 * max_rank + 1; n += 2) odd.push_back(n);
    presets.push_back({Family::GL, all});
    presets.push_back({Family::SL, {}});
    for (int n = 2; n <= max_rank; ++n) presets.back().second.push_back(n);
    presets.push_back({Family::Sp, even});
    presets.push_back({Family::SOodd, odd});
    presets.push_back({Family::SOeven, {}});
    for (int n = 4; n <= 2 * max_rank; n += 2) presets.back().second.push_back(n);
    presets.push_back({Family::SOstar, {}});
    for (int n = 4; n <= 2 * max_rank; n += 2) presets.back().second.push_back(n);
    presets.push_back({Family::Ueven, even});
    presets.push_back({Family::Uodd, odd});
    presets.push_back({Family::GLD, all});
    int checked = 0;
    bool ok = true;
    std::string detail;
    for (const auto& [fam, sizes] : presets) {
      for (int size : sizes) {
        RootDatum rd = build_root_datum(fam, size, family_needs_extension(fam) ? fde : fd,
                                        false, fam == Family::GLD ? 2 : 1);
        for (int t = 1; t <= 3 && ok; ++t) {
          RootDatum scaled = rd;
          for (auto& m : scaled.mult) m *= t;
          Weight rho = rho_weighted(scaled);
          for (size_t idx = 0; idx < scaled.reduced_pos.size(); ++idx) {
            Rat pr = pairing(rho, static_cast<int>(idx), scaled);
            Rat bound = Rat(scaled.mult[idx]);
            bool simple = scaled.is_simple(static_cast<int>(idx));
            if (pr < bound || (pr == bound) != simple) {
              ok = false;
              detail = scaled.display() + " scaling " + std::to_string(t) + " root " +
                       ivec_str(scaled.reduced_pos[idx]);
              break;
            }
            ++checked;
          }
        }
      }
    }
    report("pairing law on " + std::to_string(checked) + " (root, scaling) pairs", ok, detail);
  }

  // Subset-group rank vs. brute-force subset counts on random presentations.
  {
    std::mt19937 rng(seed);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < trials && ok; ++trial) {
      int m = 1 + static_cast<int>(rng() % 4);
      std::vector<std::string> names;
      std::vector<Int> orders;
      for (int i = 0; i < m; ++i) {
        names.push_back("g" + std::to_string(i));
        orders.push_back(Int(1) << (rng() % 3));  // 1, 2, or 4
      }
      IntMat ident = IntMat::identity(m);
      IntMat doubler = IntMat::identity(m);
      for (int i = 0; i < m; ++i) doubler.at(i, i) = 2;
      SmoothCharGroup g = group_from_orders(names, orders, ident, doubler);
      int count = 1 + static_cast<int>(rng() % 6);
      std::vector<IVec> vals;
      for (int i = 0; i < count; ++i) {
        IVec v(m, Int(0));
        for (int k = 0; k < m; ++k) v[k] = Int(rng() % 4);
        vals.push_back(v);
      }
      RGroupResult plain = rgroup_rank_gso(g, vals);
      Int expect = Int(1) << plain.r;
      Int got = subset_count_gso(g, plain.eligible);
      if (expect != got) {
        ok = false;
        detail = "plain subsets: rank predicts " + expect.str() + ", enumeration finds " +
                 got.str();
      }
      IVec ext(m, Int(0));
      for (int k = 0; k < m; ++k) ext[k] = Int(rng() % 4);
      RGroupResult coupled = rgroup_rank_gso_star(g, vals, ext);
      Int expect2 = Int(1) << coupled.r;
      Int got2 = subset_count_gso_star(g, coupled.eligible, ext);
      if (expect2 != got2) {
        ok = false;
        detail = "coupled subsets: rank predicts " + expect2.str() +
                 ", enumeration finds " + got2.str();
      }
    }
    report("subset counts match 2^rank on " + std::to_string(trials) +
               " random presentations",
           ok, detail);
  }

  // Pole windows: symmetric about zero and contained in [-1/2, 1/2].
  {
    bool ok = true;
    std::string detail;
    for (const char* tok : {"i", "ii3", "ii4", "iii1", "iii2", "iv4", "iv5"}) {
      for (int d : {1, 2, 3}) {
        for (bool refined : {false, true}) {
          auto pc = pole_case_from_token(tok, d);
          auto vals = rank1_pole_set(*pc, refined);
          for (const auto& v : vals) {
            bool inside = v >= Rat(-1, 2) && v <= Rat(1, 2);
            bool mirrored = std::find(vals.begin(), vals.end(), -v) != vals.end();
            if (!inside || !mirrored) {
              ok = false;
              detail = std::string("case ") + tok + " value " + rat_str(v);
            }
          }
        }
      }
    }
    report("pole windows are symmetric and lie in [-1/2, 1/2]", ok, detail);
  }

  if (failures == 0) {
    std::cout << "all lemma checks passed\n";
    return kExitOk;
  }
  std::cout << failures << " lemma check(s) failed\n";
  return kExitLemma;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engines for induced representations of p-adic classical groups"};
  app.require_subcommand(1);

  CheckFlags flags;
  CLI::App* check = app.add_subcommand("check", "evaluate one document (or a batch) and report");
  check->add_option("files", flags.files, "input document(s), JSON")->required()->expected(-1);
  check->add_option("--theorem", flags.theorem, "engine to run instead of the document's choice")
      ->check(CLI::IsMember(pseries::theorem_tokens()));
  check->add_flag("--trace", flags.trace,
                  "with --table, include per-condition rows (JSON always carries the trace)");
  check->add_flag("--table", flags.table, "render a human-readable table instead of JSON");
  check->add_flag("--refined", flags.refined, "use the sharper pole windows where available");
  check->add_option("--weyl-budget", flags.weyl_budget,
                    "cap on Weyl-group elements enumerated per search")
      ->check(CLI::PositiveNumber);
  check->add_flag("--timing", flags.timing, "print elapsed milliseconds to stderr");

  std::string pole_case;
  int pole_d = 1;
  bool pole_refined = false;
  bool pole_table = false;
  CLI::App* poles = app.add_subcommand("poles", "print a rank-one pole window");
  poles->add_option("--case", pole_case, "case token: i, ii3, ii4, iii1, iii2, iv4, iv5")
      ->required();
  poles->add_option("--d", pole_d, "division-algebra degree for case i")
      ->check(CLI::PositiveNumber);
  poles->add_flag("--refined", pole_refined, "use the sharper window where available");
  poles->add_flag("--table", pole_table, "render a human-readable table instead of JSON");

  int max_rank = 6;
  int trials = 200;
  unsigned seed = 12345;
  CLI::App* verify = app.add_subcommand("verify-lemmas",
                                        "re-verify the combinatorial facts the engines rely on");
  verify->add_option("--max-rank", max_rank, "largest rank to sweep")->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials, "random presentations to test")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(flags);
    if (poles->parsed()) return run_poles(pole_case, pole_d, pole_refined, pole_table);
    if (verify->parsed()) return run_verify(max_rank, trials, seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
