// Command-line surface for the simple-knot invariant library.
//
// Subcommands: genus, classify, surgeries, cone, sweep, enumerate, profile,
// tables. Exit codes: 0 success / agreement, 1 disagreement or sweep
// exceptions, 2 invalid input or usage, 3 interrupted sweep.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sk/arith.hpp"
#include "sk/cone.hpp"
#include "sk/errors.hpp"
#include "sk/families.hpp"
#include "sk/floer.hpp"
#include "sk/knot.hpp"
#include "sk/laurent.hpp"
#include "sk/sweep.hpp"
#include "sk/word.hpp"

namespace {

using nlohmann::json;

std::atomic<bool> g_cancel{false};
void on_sigint(int) { g_cancel.store(true); }

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& f) {
  if (f == "human") return Format::Human;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw sk::InvalidInput("unknown format: " + f);
}

constexpr int kSchemaVersion = 1;

// Half-integer gradings are emitted as exact "n/2" strings, never floats.
json grading_json(std::int64_t doubled) {
  if (doubled % 2 == 0) return json(doubled / 2);
  return json(std::to_string(doubled) + "/2");
}

std::string grading_str(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

json poly_terms_json(const sk::LaurentPolynomial& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({e, c});
  return terms;
}

json match_json(const sk::FamilyMatch& m) {
  json j;
  j["tag"] = sk::family_tag_name(m.tag);
  j["representative"] = m.representative;
  if (m.tag == sk::FamilyTag::Tange) j["row"] = m.tange_row;
  if (m.sign != 0) j["sign"] = m.sign;
  if (m.i >= 0) j["i"] = m.i;
  if (m.d != 0) j["d"] = m.d;
  switch (m.tag) {
    case sk::FamilyTag::BergeIX:
    case sk::FamilyTag::BergeX:
    case sk::FamilyTag::Tange:
      j["j"] = m.j;
      break;
    case sk::FamilyTag::BergeIII:
    case sk::FamilyTag::BergeIV:
    case sk::FamilyTag::BergeV:
      j["branch"] = m.branch;
      break;
    default:
      break;
  }
  return j;
}

std::string match_str(const sk::FamilyMatch& m) {
  std::string s = sk::family_tag_name(m.tag);
  if (m.tag == sk::FamilyTag::Tange) s += "-" + std::to_string(m.tange_row);
  s += " (rep " + std::to_string(m.representative);
  if (m.sign != 0) s += ", sign " + std::string(m.sign > 0 ? "+" : "-");
  if (m.i >= 0) s += ", i=" + std::to_string(m.i);
  if (m.d != 0) s += ", d=" + std::to_string(m.d);
  if (m.tag == sk::FamilyTag::BergeIX || m.tag == sk::FamilyTag::BergeX ||
      m.tag == sk::FamilyTag::Tange)
    s += ", j=" + std::to_string(m.j);
  return s + ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- genus ----

int cmd_genus(std::int64_t p, std::int64_t q, std::int64_t k, Format fmt) {
  const sk::SimpleKnot K = sk::validate(p, q, k);
  const sk::GradingProfile gp = sk::f_profile(K);
  const sk::LaurentPolynomial chi = sk::euler_characteristic(K, gp);
  std::optional<sk::LaurentPolynomial> delta;
  if (is_primitive(K)) delta = sk::alexander_polynomial(K, gp);

  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "genus";
    j["p"] = K.p;
    j["q"] = K.q;
    j["k"] = K.k;
    j["primitive"] = is_primitive(K);
    j["width"] = gp.width;
    if (gp.genus) j["genus"] = *gp.genus;
    json gr = json::array();
    for (std::int64_t g : gp.doubled_gradings) gr.push_back(grading_json(g));
    j["gradings"] = gr;
    j["chi"] = chi.to_string();
    j["chi_terms"] = poly_terms_json(chi);
    if (delta) {
      j["alexander"] = delta->to_string();
      j["alexander_terms"] = poly_terms_json(*delta);
    }
    emit(j);
    return 0;
  }
  if (fmt == Format::Csv) {
    std::cout << "p,q,k,primitive,width,genus,gradings,chi,alexander\n";
    std::cout << K.p << "," << K.q << "," << K.k << "," << (is_primitive(K) ? 1 : 0) << ","
              << gp.width << "," << (gp.genus ? std::to_string(*gp.genus) : "");
    std::cout << ",\"";
    for (std::size_t i = 0; i < gp.doubled_gradings.size(); ++i)
      std::cout << (i ? ";" : "") << grading_str(gp.doubled_gradings[i]);
    std::cout << "\",\"" << chi.to_string() << "\",\"" << (delta ? delta->to_string() : "")
              << "\"\n";
    return 0;
  }
  std::cout << "K(" << K.p << "," << K.q << "," << K.k << ") in L(" << K.p << "," << K.q << ")\n";
  std::cout << "primitive: " << (is_primitive(K) ? "yes" : "no") << "\n";
  std::cout << "width:     " << gp.width << "\n";
  if (gp.genus) std::cout << "genus:     " << *gp.genus << "\n";
  std::cout << "gradings:  ";
  for (std::size_t i = 0; i < gp.doubled_gradings.size(); ++i)
    std::cout << (i ? " " : "") << grading_str(gp.doubled_gradings[i]);
  std::cout << "\nchi:       " << chi.to_string() << "\n";
  if (delta) std::cout << "alexander: " << delta->to_string() << "\n";
  return 0;
}

// ---- classify ----

int cmd_classify(std::int64_t p, std::int64_t k, Format fmt, bool tange_negative_j) {
  const sk::ClassifyReport r = sk::classify(p, k, {tange_negative_j});
  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["p"] = r.p;
    j["k"] = r.k;
    j["q"] = r.q;
    j["width"] = r.width;
    j["two_p"] = 2 * r.p;
    j["genus"] = r.genus;
    j["lspace"] = r.lspace;
    json ms = json::array();
    for (const auto& m : r.matches) ms.push_back(match_json(m));
    j["matches"] = ms;
    j["agree"] = r.agree;
    emit(j);
  } else if (fmt == Format::Csv) {
    std::cout << "p,k,q,width,two_p,genus,lspace,matches,agree\n";
    std::cout << r.p << "," << r.k << "," << r.q << "," << r.width << "," << 2 * r.p << ","
              << r.genus << "," << (r.lspace ? 1 : 0) << ",\"";
    for (std::size_t i = 0; i < r.matches.size(); ++i)
      std::cout << (i ? ";" : "") << match_str(r.matches[i]);
    std::cout << "\"," << (r.agree ? 1 : 0) << "\n";
  } else {
    std::cout << "K(" << r.p << ",q=" << r.q << ",k=" << r.k << ")   [q = k^2 mod p]\n";
    std::cout << "width: " << r.width << (r.lspace ? " < " : " >= ") << 2 * r.p
              << " = 2p  =>  ZHS surgery is " << (r.lspace ? "" : "not ") << "an L-space\n";
    std::cout << "genus: " << r.genus << "\n";
    if (r.matches.empty()) {
      std::cout << "matches: none\n";
    } else {
      std::cout << "matches:\n";
      for (const auto& m : r.matches) std::cout << "  " << match_str(m) << "\n";
    }
    std::cout << "verdict: " << (r.agree ? "agree" : "DISAGREE") << "\n";
  }
  return r.agree ? 0 : 1;
}

// ---- surgeries ----

int cmd_surgeries(std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t window,
                  Format fmt) {
  const sk::SimpleKnot K = sk::validate(p, q, k);
  const bool prim = is_primitive(K);
  const bool zhs = sk::has_integer_zhs_surgery(K);
  std::optional<sk::SurgeryDescriptor> sd;
  std::vector<std::int64_t> hs_coeffs;  // admissible homology-sphere coefficients
  if (prim) {
    sd = sk::surgery_descriptor(K, -window, window);
    for (std::int64_t m : {std::int64_t{-1}, std::int64_t{1}})
      if (sk::normalized_residue(m + sd->a, K.p) == 0) hs_coeffs.push_back(m);
  }

  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "surgeries";
    j["p"] = K.p;
    j["q"] = K.q;
    j["k"] = K.k;
    j["homology_class"] = homology_class(K);
    j["primitive"] = prim;
    j["zhs_surgery"] = zhs;
    if (sd) {
      j["self_linking"] = sd->a;
      j["window"] = {-window, window};
      j["coefficients"] = sd->coefficients;
      j["homology_sphere_coefficients"] = hs_coeffs;
      json ls = json::object();
      for (std::int64_t m : hs_coeffs)
        ls[std::to_string(m)] = sk::is_lspace_surgery(K, m);
      j["lspace"] = ls;
    }
    emit(j);
    return 0;
  }
  if (fmt == Format::Csv) {
    std::cout << "p,q,k,homology_class,primitive,self_linking,zhs,coefficients\n";
    std::cout << K.p << "," << K.q << "," << K.k << "," << homology_class(K) << ","
              << (prim ? 1 : 0) << "," << (sd ? std::to_string(sd->a) : "") << ","
              << (zhs ? 1 : 0) << ",\"";
    if (sd)
      for (std::size_t i = 0; i < sd->coefficients.size(); ++i)
        std::cout << (i ? ";" : "") << sd->coefficients[i];
    std::cout << "\"\n";
    return 0;
  }
  std::cout << "K(" << K.p << "," << K.q << "," << K.k << ") in L(" << K.p << "," << K.q << ")\n";
  std::cout << "homology class: [K] = " << homology_class(K) << " [b]\n";
  std::cout << "primitive: " << (prim ? "yes" : "no") << "\n";
  if (!prim) {
    std::cout << "zhs surgery: no (non-primitive knots have no homology-sphere surgery)\n";
    return 0;
  }
  std::cout << "self-linking: a = " << sd->a << "  (K.K = " << sd->a << "/" << K.p
            << " mod 1)\n";
  std::cout << "zhs surgery: " << (zhs ? "yes" : "no");
  if (zhs) {
    std::cout << " (m =";
    for (std::int64_t m : hs_coeffs) std::cout << " " << m;
    std::cout << ")";
  }
  std::cout << "\n";
  std::cout << "coefficients m = -" << sd->a << " (mod " << K.p << ") in [" << -window << ","
            << window << "]:";
  for (std::int64_t m : sd->coefficients) std::cout << " " << m;
  std::cout << "\n";
  for (std::int64_t m : hs_coeffs)
    std::cout << "L-space verdict for m=" << m << ": "
              << (sk::is_lspace_surgery(K, m) ? "yes" : "no") << "\n";
  return 0;
}

// ---- cone ----

int cmd_cone(std::int64_t p, std::int64_t q, std::int64_t k, std::int64_t m, Format fmt) {
  const sk::SimpleKnot K = sk::validate(p, q, k);
  const sk::ConeDiagram cd = sk::cone_diagram(K, m);
  const std::int64_t h1 = m < 0 ? -m : m;
  const bool lspace = cd.total_rank == h1;

  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "cone";
    j["p"] = K.p;
    j["q"] = K.q;
    j["k"] = K.k;
    j["m"] = cd.m;
    j["mirrored"] = cd.mirrored;
    j["window"] = {cd.window_lo, cd.window_hi};
    json classes = json::array();
    for (const auto& cls : cd.classes) {
      json c;
      c["spinc"] = cls.spinc;
      c["labels"] = cls.labels;
      c["rank"] = cls.rank;
      json summands = json::array();
      for (const auto& s : cls.summands)
        summands.push_back({{"start_n", s.start_n},
                            {"end_n", s.end_n},
                            {"type", std::string(1, s.start_label) + std::string(1, s.end_label)},
                            {"rank", s.rank}});
      c["summands"] = summands;
      classes.push_back(c);
    }
    j["classes"] = classes;
    j["total_rank"] = cd.total_rank;
    j["lspace"] = lspace;
    emit(j);
    return 0;
  }
  if (fmt == Format::Csv) {
    std::cout << "spinc,labels,rank\n";
    for (const auto& cls : cd.classes)
      std::cout << cls.spinc << "," << cls.labels << "," << cls.rank << "\n";
    return 0;
  }
  std::cout << "C(K,m) for K(" << K.p << "," << K.q << "," << K.k << "), m = " << cd.m
            << (cd.mirrored ? "  (computed on the mirror)" : "") << "\n";
  std::cout << "window: [" << cd.window_lo << ", " << cd.window_hi << "]\n";
  for (const auto& cls : cd.classes) {
    std::cout << "class " << cls.spinc << ": " << cls.labels << "   rank " << cls.rank << "\n";
    for (const auto& s : cls.summands)
      if (s.rank != 0)
        std::cout << "  summand [" << s.start_label << "," << s.end_label << "] on ["
                  << s.start_n << "," << s.end_n << "] contributes 1\n";
  }
  std::cout << "total rank: " << cd.total_rank << "  |H1| = " << h1 << "  =>  "
            << (lspace ? "L-space" : "not an L-space") << "\n";
  return 0;
}

// ---- sweep ----

int cmd_sweep(const std::optional<std::int64_t>& max_p, int jobs,
              const std::string& checkpoint, const std::string& resume_path,
              const std::optional<bool>& dedup, const std::optional<bool>& tange_negative_j,
              const std::string& out, const std::string& exceptions_path, bool progress,
              std::int64_t stop_after_p, std::int64_t checkpoint_every) {
  sk::SweepControls ctl;
  ctl.workers = jobs;
  ctl.checkpoint_path = checkpoint;
  ctl.progress = progress;
  ctl.stop_after_p = stop_after_p;
  if (checkpoint_every > 0) ctl.checkpoint_every = checkpoint_every;
  ctl.cancel = &g_cancel;
  std::signal(SIGINT, on_sigint);

  sk::SweepReport report;
  if (!resume_path.empty()) {
    std::optional<sk::SweepParams> expected;
    if (max_p || dedup || tange_negative_j) {
      sk::SweepParams exp = sk::checkpoint_params(resume_path);
      if (max_p) exp.max_p = *max_p;
      if (dedup) exp.dedup = *dedup;
      if (tange_negative_j) exp.tange_negative_j = *tange_negative_j;
      expected = exp;
    }
    report = sk::resume(resume_path, ctl, expected);
  } else {
    if (!max_p) throw sk::InvalidInput("sweep requires --max-p (or --resume)");
    sk::SweepParams params;
    params.max_p = *max_p;
    params.dedup = dedup.value_or(true);
    params.tange_negative_j = tange_negative_j.value_or(true);
    if (params.max_p > 10000) {
      const double ops = sk::estimate_sweep_ops(params.max_p, params.dedup);
      std::fprintf(stderr,
                   "sweep: ~%.2e inner steps ahead; expect on the order of %.1f hours "
                   "with %d worker(s) at ~1e9 steps/s\n",
                   ops, ops / 1e9 / 3600.0 / std::max(1, jobs), jobs);
    }
    report = sk::verify_conjecture(params, ctl);
  }

  if (!out.empty()) {
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw sk::Error("cannot open report file: " + out);
    f << sk::to_json(report) << "\n";
  }
  if (!exceptions_path.empty()) {
    std::ofstream f(exceptions_path, std::ios::trunc);
    if (!f) throw sk::Error("cannot open exception stream file: " + exceptions_path);
    for (const auto& e : report.conjecture_violations) f << sk::to_json_line(e) << "\n";
    for (const auto& e : report.realizability_anomalies) f << sk::to_json_line(e) << "\n";
  }

  std::cout << "sweep: max_p=" << report.params.max_p
            << " dedup=" << (report.params.dedup ? "on" : "off")
            << " workers=" << report.worker_count << "\n";
  std::cout << "checked " << report.knots_checked << " knots, " << report.lspace_count
            << " with width < 2p; elapsed " << report.elapsed_seconds << "s\n";
  if (!report.complete())
    std::cout << "INTERRUPTED at p = " << report.last_completed_p << " (checkpoint "
              << (ctl.checkpoint_path.empty() ? "not written" : ctl.checkpoint_path) << ")\n";
  std::cout << "conjecture violations: " << report.conjecture_violations.size() << "\n";
  std::cout << "realizability anomalies: " << report.realizability_anomalies.size() << "\n";
  for (const auto& e : report.conjecture_violations) std::cout << sk::to_json_line(e) << "\n";
  for (const auto& e : report.realizability_anomalies) std::cout << sk::to_json_line(e) << "\n";

  if (!report.clean()) return 1;
  return report.complete() ? 0 : 3;
}

// ---- enumerate ----

int cmd_enumerate(const std::string& tag_name, std::int64_t max_p, Format fmt,
                  bool tange_negative_j) {
  const auto tag = sk::parse_family_tag(tag_name);
  if (!tag) throw sk::InvalidInput("unknown family tag: " + tag_name);
  const auto pairs = sk::enumerate_family(tag->first, tag->second, max_p, {tange_negative_j});
  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "enumerate";
    j["tag"] = tag_name;
    j["max_p"] = max_p;
    json arr = json::array();
    for (const auto& [p, k] : pairs) arr.push_back({p, k});
    j["pairs"] = arr;
    emit(j);
    return 0;
  }
  if (fmt == Format::Csv) std::cout << "p,k\n";
  for (const auto& [p, k] : pairs) std::cout << p << "," << k << "\n";
  return 0;
}

// ---- profile ----

int cmd_profile(std::int64_t p, std::int64_t q, std::int64_t k, const std::string& out,
                Format fmt) {
  const sk::SimpleKnot K = sk::validate(p, q, k);
  const sk::GradingProfile gp = sk::f_profile(K);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::trunc);
    if (!file) throw sk::Error("cannot open output file: " + out);
    os = &file;
  }
  if (fmt == Format::Json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "profile";
    j["p"] = K.p;
    j["q"] = K.q;
    j["k"] = K.k;
    j["f"] = gp.f;
    j["width"] = gp.width;
    *os << j.dump(2) << "\n";
    return 0;
  }
  *os << "i,f\n";
  for (std::size_t i = 0; i < gp.f.size(); ++i) *os << i << "," << gp.f[i] << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of simple knots in lens spaces"};
  app.set_version_flag("--version", std::string("simpleknot ") + SIMPLEKNOT_VERSION);
  app.require_subcommand(1);

  std::int64_t p = 0, q = 0, k = 0, m = 0;
  std::string format = "human";
  bool tange_negative_j = true;

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format: human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
  };

  auto* genus = app.add_subcommand("genus", "grading profile, width, genus, chi and Delta");
  genus->add_option("p", p)->required();
  genus->add_option("q", q)->required();
  genus->add_option("k", k)->required();
  add_format(genus);

  auto* classify = app.add_subcommand("classify", "Berge/Tange membership vs the width verdict");
  classify->add_option("p", p)->required();
  classify->add_option("k", k)->required();
  add_format(classify);
  classify->add_option("--tange-negative-j", tange_negative_j,
                       "allow negative j in the Tange families (default true)");

  std::int64_t window = 10;
  auto* surgeries = app.add_subcommand("surgeries", "surgery coefficients and ZHS predicates");
  surgeries->add_option("p", p)->required();
  surgeries->add_option("q", q)->required();
  surgeries->add_option("k", k)->required();
  surgeries->add_option("--window", window, "coefficient window [-W,W] (default 10)");
  add_format(surgeries);

  auto* cone = app.add_subcommand("cone", "mapping-cone labels and surgery rank");
  cone->add_option("p", p)->required();
  cone->add_option("q", q)->required();
  cone->add_option("k", k)->required();
  cone->add_option("m", m)->required();
  add_format(cone);

  std::optional<std::int64_t> sweep_max_p;
  std::optional<bool> sweep_dedup, sweep_tnj;
  int jobs = 1;
  std::string checkpoint, resume_path, out, exceptions_path;
  bool progress = false;
  std::int64_t stop_after_p = -1, checkpoint_every = 0;
  auto* sweep = app.add_subcommand("sweep", "verify the conjecture for all p up to a bound");
  sweep->add_option("--max-p", sweep_max_p, "largest p to sweep");
  sweep->add_option("--jobs", jobs, "worker threads (default 1)");
  sweep->add_option("--checkpoint", checkpoint, "write a resumable checkpoint here");
  sweep->add_option("--resume", resume_path, "resume from a checkpoint file");
  sweep->add_option("--dedup", sweep_dedup, "one orbit representative per knot (default true)");
  sweep->add_option("--tange-negative-j", sweep_tnj,
                    "allow negative j in the Tange families (default true)");
  sweep->add_option("--out", out, "write the full report JSON here");
  sweep->add_option("--exceptions", exceptions_path, "write one JSON object per exception here");
  sweep->add_flag("--progress", progress, "periodic progress line on stderr");
  sweep->add_option("--stop-after-p", stop_after_p,
                    "stop once this p is folded (for checkpoint testing)");
  sweep->add_option("--checkpoint-every", checkpoint_every,
                    "checkpoint after this many completed p (default 512)");

  std::string tag_name;
  std::int64_t max_p_enum = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list family members up to a bound");
  enumerate->add_option("tag", tag_name, "berge-i-ii, berge-iii, ..., tange-7, tange-sporadic")
      ->required();
  enumerate->add_option("--max-p", max_p_enum, "largest p to emit")->required();
  add_format(enumerate);
  enumerate->add_option("--tange-negative-j", tange_negative_j,
                        "allow negative j in the Tange families (default true)");

  auto* profile = app.add_subcommand("profile", "raw f-profile as CSV for plotting");
  profile->add_option("p", p)->required();
  profile->add_option("q", q)->required();
  profile->add_option("k", k)->required();
  profile->add_option("--out", out, "output file (default stdout)");
  profile->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* tables = app.add_subcommand("tables", "family tables as machine-readable JSON");
  (void)tables;

  if (argc <= 1) {
    std::cerr << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (genus->parsed()) return cmd_genus(p, q, k, parse_format(format));
    if (classify->parsed()) return cmd_classify(p, k, parse_format(format), tange_negative_j);
    if (surgeries->parsed()) return cmd_surgeries(p, q, k, window, parse_format(format));
    if (cone->parsed()) return cmd_cone(p, q, k, m, parse_format(format));
    if (sweep->parsed())
      return cmd_sweep(sweep_max_p, jobs, checkpoint, resume_path, sweep_dedup, sweep_tnj, out,
                       exceptions_path, progress, stop_after_p, checkpoint_every);
    if (enumerate->parsed())
      return cmd_enumerate(tag_name, max_p_enum, parse_format(format), tange_negative_j);
    if (profile->parsed())
      return cmd_profile(p, q, k, out, format == "json" ? Format::Json : Format::Csv);
    if (tables->parsed()) {
      std::cout << sk::family_tables_json() << "\n";
      return 0;
    }
  } catch (const sk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory (profile-producing commands are O(p) in memory)\n";
    return 2;
  }
  return 2;
}
