#include "sk/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "sk/arith.hpp"
#include "sk/errors.hpp"
#include "sk/floer.hpp"
#include "sk/knot.hpp"

namespace sk {

namespace {

using nlohmann::json;

json match_to_json(const FamilyMatch& m) {
  json j;
  j["tag"] = family_tag_name(m.tag);
  j["representative"] = m.representative;
  if (m.tag == FamilyTag::Tange) j["row"] = m.tange_row;
  if (m.sign != 0) j["sign"] = m.sign;
  if (m.i >= 0) j["i"] = m.i;
  if (m.d != 0) j["d"] = m.d;
  switch (m.tag) {
    case FamilyTag::BergeIX:
    case FamilyTag::BergeX:
    case FamilyTag::Tange:
      j["j"] = m.j;
      break;
    case FamilyTag::BergeIII:
    case FamilyTag::BergeIV:
    case FamilyTag::BergeV:
      j["branch"] = m.branch;
      break;
    default:
      break;
  }
  return j;
}

FamilyMatch match_from_json(const json& j) {
  FamilyMatch m;
  const auto tag = parse_family_tag(j.at("tag").get<std::string>());
  if (!tag) throw CheckpointCorrupt("unknown family tag in checkpoint");
  m.tag = tag->first;
  m.representative = j.at("representative").get<std::int64_t>();
  m.tange_row = j.value("row", 0);
  m.sign = j.value("sign", 0);
  m.i = j.value("i", std::int64_t{-1});
  m.d = j.value("d", std::int64_t{0});
  m.j = j.value("j", std::int64_t{0});
  m.branch = j.value("branch", 0);
  return m;
}

const char* kind_name(SweepExceptionKind k) {
  return k == SweepExceptionKind::ConjectureViolation ? "conjecture_violation"
                                                      : "realizability_anomaly";
}

json exception_to_json(const SweepException& e) {
  json j;
  j["p"] = e.p;
  j["k"] = e.k;
  j["q"] = e.q;
  j["width"] = e.width;
  j["kind"] = kind_name(e.kind);
  json fams = json::array();
  for (const FamilyMatch& m : e.families) fams.push_back(match_to_json(m));
  j["families"] = fams;
  return j;
}

SweepException exception_from_json(const json& j) {
  SweepException e;
  e.p = j.at("p").get<std::int64_t>();
  e.k = j.at("k").get<std::int64_t>();
  e.q = j.at("q").get<std::int64_t>();
  e.width = j.at("width").get<std::int64_t>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "conjecture_violation")
    e.kind = SweepExceptionKind::ConjectureViolation;
  else if (kind == "realizability_anomaly")
    e.kind = SweepExceptionKind::RealizabilityAnomaly;
  else
    throw CheckpointCorrupt("unknown exception kind: " + kind);
  for (const json& f : j.at("families")) e.families.push_back(match_from_json(f));
  return e;
}

constexpr int kCheckpointVersion = 1;

json report_to_json_impl(const SweepReport& r, bool as_checkpoint) {
  json j;
  if (as_checkpoint) j["format_version"] = kCheckpointVersion;
  j["max_p"] = r.params.max_p;
  j["dedup"] = r.params.dedup;
  j["tange_negative_j"] = r.params.tange_negative_j;
  j["last_completed_p"] = r.last_completed_p;
  j["complete"] = r.complete();
  j["knots_checked"] = r.knots_checked;
  j["lspace_count"] = r.lspace_count;
  json cv = json::array(), ra = json::array();
  for (const auto& e : r.conjecture_violations) cv.push_back(exception_to_json(e));
  for (const auto& e : r.realizability_anomalies) ra.push_back(exception_to_json(e));
  j["conjecture_violations"] = cv;
  j["realizability_anomalies"] = ra;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["worker_count"] = r.worker_count;
  return j;
}

SweepReport report_from_checkpoint_json(const json& j) {
  SweepReport r;
  if (j.value("format_version", -1) != kCheckpointVersion)
    throw CheckpointCorrupt("unsupported checkpoint format_version");
  r.params.max_p = j.at("max_p").get<std::int64_t>();
  r.params.dedup = j.at("dedup").get<bool>();
  r.params.tange_negative_j = j.at("tange_negative_j").get<bool>();
  r.last_completed_p = j.at("last_completed_p").get<std::int64_t>();
  r.knots_checked = j.at("knots_checked").get<std::uint64_t>();
  r.lspace_count = j.at("lspace_count").get<std::uint64_t>();
  for (const json& e : j.at("conjecture_violations"))
    r.conjecture_violations.push_back(exception_from_json(e));
  for (const json& e : j.at("realizability_anomalies"))
    r.realizability_anomalies.push_back(exception_from_json(e));
  r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
  return r;
}

void write_checkpoint_atomically(const std::string& path, const SweepReport& r) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot open checkpoint file for writing: " + tmp);
    out << report_to_json_impl(r, true).dump(2) << "\n";
    out.flush();
    if (!out) throw Error("checkpoint write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Outcome of one p value.
struct PerPResult {
  std::int64_t p = 0;
  std::uint64_t knots = 0;
  std::uint64_t lspace = 0;
  std::vector<SweepException> exceptions;  // already canonicalized, k ascending
};

PerPResult sweep_one_p(std::int64_t p, const SweepParams& params) {
  PerPResult res;
  res.p = p;
  const FamilyOptions fopts{params.tange_negative_j};
  for (std::int64_t k = 1; k < p; ++k) {
    if (gcd_ll(k, p) != 1) continue;
    const std::int64_t ki = mod_inverse(k, p);
    const std::int64_t canon = std::min({k, p - k, ki, p - ki});
    if (params.dedup && k != canon) continue;
    ++res.knots;
    const std::int64_t q = mul_mod(k, k, p);
    // gcd(q,p) = 1 follows from gcd(k,p) = 1; a violation means the kernel
    // input contract is broken, so stop hard.
    if (gcd_ll(q, p) != 1) throw Error("sweep invariant broken: gcd(k^2 mod p, p) != 1");
    const std::int64_t w = width_kernel(p, q, k);
    const bool lspace = w < 2 * p;
    if (lspace) ++res.lspace;
    const bool member = is_family_member(p, k, fopts);
    if (lspace == member) continue;
    SweepException e;
    e.p = p;
    e.k = canon;
    e.q = mul_mod(canon, canon, p);
    e.width = w;  // width is orbit-invariant
    e.kind = lspace ? SweepExceptionKind::ConjectureViolation
                    : SweepExceptionKind::RealizabilityAnomaly;
    e.families = berge_match(p, canon);
    auto tange = tange_match(p, canon, fopts);
    e.families.insert(e.families.end(), tange.begin(), tange.end());
    res.exceptions.push_back(std::move(e));
  }
  // with dedup off, orbit members are not necessarily adjacent in k
  std::sort(res.exceptions.begin(), res.exceptions.end(),
            [](const SweepException& a, const SweepException& b) { return a.k < b.k; });
  res.exceptions.erase(std::unique(res.exceptions.begin(), res.exceptions.end()),
                       res.exceptions.end());
  return res;
}

class SweepRun {
 public:
  SweepRun(SweepReport base, const SweepControls& controls)
      : report_(std::move(base)), controls_(controls) {}

  SweepReport run() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t start_p = report_.last_completed_p + 1;
    next_p_.store(start_p);
    fold_cursor_ = report_.last_completed_p;
    const int nworkers = std::max(1, controls_.workers);
    report_.worker_count = nworkers;
    if (start_p <= report_.params.max_p) {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(nworkers));
      for (int i = 0; i < nworkers; ++i) pool.emplace_back([this] { worker(); });
      for (auto& t : pool) t.join();
    }
    const auto t1 = std::chrono::steady_clock::now();
    report_.elapsed_seconds += std::chrono::duration<double>(t1 - t0).count();
    report_.last_completed_p = fold_cursor_;
    if (!controls_.checkpoint_path.empty())
      write_checkpoint_atomically(controls_.checkpoint_path, report_);
    return std::move(report_);
  }

 private:
  bool stop_requested() const {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (controls_.cancel && controls_.cancel->load(std::memory_order_relaxed)) return true;
    return false;
  }

  void worker() {
    while (!stop_requested()) {
      const std::int64_t p = next_p_.fetch_add(1, std::memory_order_relaxed);
      if (p > report_.params.max_p) break;
      PerPResult res = sweep_one_p(p, report_.params);
      std::lock_guard<std::mutex> lock(mu_);
      pending_.emplace(p, std::move(res));
      fold_ready();
    }
  }

  // Folds the contiguous prefix into the report; caller holds mu_.
  void fold_ready() {
    bool folded = false;
    while (true) {
      auto it = pending_.find(fold_cursor_ + 1);
      if (it == pending_.end()) break;
      const PerPResult& res = it->second;
      report_.knots_checked += res.knots;
      report_.lspace_count += res.lspace;
      for (const SweepException& e : res.exceptions) {
        auto& list = e.kind == SweepExceptionKind::ConjectureViolation
                         ? report_.conjecture_violations
                         : report_.realizability_anomalies;
        list.push_back(e);
      }
      ++fold_cursor_;
      ++folded_since_checkpoint_;
      folded = true;
      pending_.erase(it);
    }
    if (!folded) return;
    if (controls_.stop_after_p >= 0 && fold_cursor_ >= controls_.stop_after_p)
      stop_.store(true, std::memory_order_relaxed);
    if (!controls_.checkpoint_path.empty() &&
        folded_since_checkpoint_ >= controls_.checkpoint_every) {
      SweepReport snapshot = report_;
      snapshot.last_completed_p = fold_cursor_;
      write_checkpoint_atomically(controls_.checkpoint_path, snapshot);
      folded_since_checkpoint_ = 0;
    }
    if (controls_.progress) maybe_print_progress();
  }

  void maybe_print_progress() {
    const auto now = std::chrono::steady_clock::now();
    if (last_progress_ && now - *last_progress_ < std::chrono::seconds(1)) return;
    double rate = 0, eta = 0;
    if (last_progress_) {
      const double dt = std::chrono::duration<double>(now - *last_progress_).count();
      rate = static_cast<double>(fold_cursor_ - last_progress_p_) / dt;
      if (rate > 0) {
        // remaining work grows ~p^2 per p; scale the ETA accordingly
        const double done = static_cast<double>(fold_cursor_);
        const double total = static_cast<double>(report_.params.max_p);
        const double remaining_ops = (total * total * total - done * done * done) / 3.0;
        const double ops_rate = rate * done * done;
        eta = ops_rate > 0 ? remaining_ops / ops_rate : 0;
      }
    }
    std::fprintf(stderr, "sweep: p=%lld/%lld  %.1f p/s  eta %.0fs\n",
                 static_cast<long long>(fold_cursor_),
                 static_cast<long long>(report_.params.max_p), rate, eta);
    last_progress_ = now;
    last_progress_p_ = fold_cursor_;
  }

  SweepReport report_;
  SweepControls controls_;
  std::atomic<std::int64_t> next_p_{2};
  std::atomic<bool> stop_{false};
  std::mutex mu_;
  std::map<std::int64_t, PerPResult> pending_;
  std::int64_t fold_cursor_ = 1;
  std::int64_t folded_since_checkpoint_ = 0;
  std::optional<std::chrono::steady_clock::time_point> last_progress_;
  std::int64_t last_progress_p_ = 0;
};

}  // namespace

std::string to_json_line(const SweepException& e) { return exception_to_json(e).dump(); }

std::string to_json(const SweepReport& report) {
  return report_to_json_impl(report, false).dump(2);
}

SweepReport verify_conjecture(const SweepParams& params, const SweepControls& controls) {
  if (params.max_p < 2) throw InvalidInput("sweep requires max_p >= 2");
  if (params.max_p > modulus_budget())
    throw ResourceLimit("max_p = " + std::to_string(params.max_p) +
                        " exceeds the arithmetic word budget " +
                        std::to_string(modulus_budget()));
  SweepReport base;
  base.params = params;
  base.last_completed_p = 1;
  return SweepRun(std::move(base), controls).run();
}

namespace {

json load_checkpoint_json(const std::string& path) {
  json j;
  try {
    std::ifstream in(path);
    if (!in) throw CheckpointCorrupt("cannot open checkpoint: " + path);
    in >> j;
  } catch (const json::exception& e) {
    throw CheckpointCorrupt("checkpoint does not parse: " + std::string(e.what()));
  }
  return j;
}

}  // namespace

SweepParams checkpoint_params(const std::string& checkpoint_path) {
  try {
    return report_from_checkpoint_json(load_checkpoint_json(checkpoint_path)).params;
  } catch (const json::exception& e) {
    throw CheckpointCorrupt("checkpoint fields missing: " + std::string(e.what()));
  }
}

SweepReport resume(const std::string& checkpoint_path, const SweepControls& controls,
                   const std::optional<SweepParams>& expected) {
  SweepReport base;
  try {
    base = report_from_checkpoint_json(load_checkpoint_json(checkpoint_path));
  } catch (const json::exception& e) {
    throw CheckpointCorrupt("checkpoint fields missing: " + std::string(e.what()));
  }
  if (expected && !(*expected == base.params))
    throw ParameterMismatch("checkpoint parameters disagree with the invocation");
  if (base.complete()) return base;  // nothing left to do
  SweepControls ctl = controls;
  if (ctl.checkpoint_path.empty()) ctl.checkpoint_path = checkpoint_path;
  return SweepRun(std::move(base), ctl).run();
}

double estimate_sweep_ops(std::int64_t max_p, bool dedup) {
  // sum over p of p * (number of processed k) with phi(p) ~ (6/pi^2) p
  const double n = static_cast<double>(max_p);
  double ops = 0.6079 * n * n * n / 3.0;
  if (dedup) ops /= 4.0;
  return ops;
}

}  // namespace sk
