#include "hypercert/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <thread>

#include "hypercert/version.hpp"

namespace hypercert {

std::optional<CoverEntry> find_box_time(const MapSystem& sys, const Box& b,
                                        const Observable& phi, double rate,
                                        int n_max, double* best_upper) {
  if (!(rate > 0.0)) throw usage_error("rate must be positive");
  if (n_max < 1) throw usage_error("n_max must be >= 1");

  Box cur = canonical(b);
  Interval sum{0.0, 0.0};
  double best = std::numeric_limits<double>::infinity();
  std::optional<CoverEntry> found;
  for (int n = 1; n <= n_max; ++n) {
    Interval term;
    try {
      term = phi.enclose(sys, cur);
    } catch (const error&) {
      break;  // unbounded from here on; not certified at this or any later N
    }
    sum = iadd(sum, term);
    double avg_hi = round_up(sum.hi / n);
    best = std::min(best, avg_hi);
    if (avg_hi < -rate) {
      found = CoverEntry{canonical(b), n, (-rate) - avg_hi};
      break;
    }
    if (n < n_max) {
      cur = sys.eval_box(cur);
      // Once the enclosure covers the whole space and the running upper
      // bound is nonnegative, the average's upper bound can never drop
      // below a negative rate if the per-step bound is also nonnegative.
      if (box_is_full(cur) && sum.hi >= 0.0) {
        try {
          if (phi.enclose(sys, cur).hi >= 0.0) break;
        } catch (const error&) {
          break;
        }
      }
    }
  }
  if (best_upper) *best_upper = best;
  return found;
}

namespace {

struct NodeResult {
  std::vector<CoverEntry> entries;
  std::vector<WitnessBox> witnesses;
  int depth_reached = 0;

  void merge(NodeResult&& other) {
    entries.insert(entries.end(), std::make_move_iterator(other.entries.begin()),
                   std::make_move_iterator(other.entries.end()));
    witnesses.insert(witnesses.end(),
                     std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
    depth_reached = std::max(depth_reached, other.depth_reached);
  }
};

std::vector<Box> split_children(const MapSystem& sys, const Box& b) {
  if (sys.space() == Space::two_point) {
    bool has_p = b.iv[0].contains(0.0);
    bool has_q = b.iv[0].contains(0.5);
    if (!(has_p && has_q)) return {};  // atoms are indivisible
    Box p = b, q = b;
    p.iv[0] = Interval::point(0.0);
    q.iv[0] = Interval::point(0.5);
    return {p, q};
  }
  int axis = longest_axis(b);
  if (b.iv[axis].width() <= 0x1p-48) return {};
  auto halves = bisect(b, axis);
  return {halves.first, halves.second};
}

NodeResult process_box(const MapSystem& sys, const Observable& phi,
                       const CoverParams& params, const Box& box, int depth,
                       int par_levels) {
  NodeResult res;
  res.depth_reached = depth;
  double best_upper = 0.0;
  auto entry = find_box_time(sys, box, phi, params.rate, params.n_max, &best_upper);
  if (entry) {
    res.entries.push_back(*entry);
    return res;
  }
  std::vector<Box> children =
      depth < params.depth_max ? split_children(sys, box) : std::vector<Box>{};
  if (children.empty()) {
    res.witnesses.push_back(WitnessBox{canonical(box), best_upper, depth});
    return res;
  }
  if (par_levels > 0 && children.size() == 2) {
    auto future = std::async(std::launch::async, [&]() {
      return process_box(sys, phi, params, children[1], depth + 1, par_levels - 1);
    });
    NodeResult left =
        process_box(sys, phi, params, children[0], depth + 1, par_levels - 1);
    res.merge(std::move(left));
    NodeResult right = future.get();
    res.merge(std::move(right));
    return res;
  }
  for (const Box& child : children)
    res.merge(process_box(sys, phi, params, child, depth + 1, par_levels));
  return res;
}

std::optional<SplittingInfo> splitting_info_for(const MapSystem& sys,
                                                const Observable& phi,
                                                const std::vector<CoverEntry>& entries) {
  if (!phi.splitting()) return std::nullopt;
  SplittingInfo info;
  info.source =
      phi.splitting()->source() == SplittingSource::exact ? "exact" : "estimated";
  info.iterations = phi.splitting()->iterations();
  double residual = 0.0;
  size_t probes = std::min<size_t>(entries.size(), 16);
  for (size_t i = 0; i < probes; ++i) {
    Point mid = box_midpoint(entries[i].box);
    residual = std::max(residual, phi.splitting()->invariance_residual(mid));
  }
  (void)sys;
  info.residual = residual;
  return info;
}

}  // namespace

BuildResult build_cover(const SystemPtr& sys, const Observable& phi,
                        const CoverParams& params) {
  if (!(params.rate > 0.0)) throw usage_error("rate must be positive");
  if (params.n_max < 1 || params.depth_max < 1)
    throw usage_error("n_max and depth_max must be >= 1");

  Box root = sys->space() == Space::two_point
                 ? Box{1, {Interval{0.0, 0.5}, Interval{}}}
                 : Box::full(sys->base_dim());

  int par_levels = 0;
  for (int t = std::max(params.threads, 1); t > 1; t >>= 1) ++par_levels;
  par_levels = std::min(par_levels + (par_levels ? 1 : 0), 6);

  NodeResult res = process_box(*sys, phi, params, root, 0, par_levels);

  BuildResult out;
  if (!res.witnesses.empty()) {
    InconclusiveReport rep;
    rep.system_id = sys->id();
    rep.params = sys->params();
    rep.observable = phi.name();
    rep.rate = params.rate;
    rep.n_max = params.n_max;
    rep.depth_max = params.depth_max;
    rep.witnesses = std::move(res.witnesses);
    rep.depth_reached = res.depth_reached;
    out.inconclusive = std::move(rep);
    return out;
  }

  CoverCertificate cert;
  cert.system_id = sys->id();
  cert.params = sys->params();
  cert.observable = phi.name();
  cert.rate = params.rate;
  cert.entries = std::move(res.entries);

  int n_bar = 1;
  double alpha = -std::numeric_limits<double>::infinity();
  for (const CoverEntry& e : cert.entries) {
    n_bar = std::max(n_bar, e.n);
    alpha = std::max(alpha, phi.enclose(*sys, e.box).hi);
  }
  cert.consts = derive_constants(n_bar, 2.0 * params.rate, alpha);
  cert.provenance.n_max = params.n_max;
  cert.provenance.depth_max = params.depth_max;
  cert.provenance.threads = std::max(params.threads, 1);
  cert.provenance.tool_version = kToolVersion;
  cert.splitting = splitting_info_for(*sys, phi, cert.entries);
  out.certificate = std::move(cert);
  return out;
}

long schedule(const MapSystem& sys, const CoverCertificate& cert, const Point& x,
              long k) {
  if (k < 0) throw usage_error("schedule index must be nonnegative");
  long total = 0;
  Point y = x;
  long consumed = 0;
  for (long i = 0; i < k; ++i) {
    y = evaluate(sys, y, total - consumed);
    consumed = total;
    int n1 = std::numeric_limits<int>::max();
    for (const CoverEntry& e : cert.entries)
      if (box_contains(e.box, y)) n1 = std::min(n1, e.n);
    if (n1 == std::numeric_limits<int>::max())
      throw certificate_error("orbit point not covered by any certificate box");
    total += n1;
  }
  return total;
}

std::pair<double, double> running_sum_bound(const MapSystem& sys,
                                          const CoverCertificate& cert,
                                          const Observable& phi, const Point& x,
                                          long m) {
  if (m < 1) throw usage_error("running-sum bound requires m >= 1");
  double actual = birkhoff_sum(sys, phi, x, m * cert.consts.n_bar);
  double bound = -(cert.consts.c / 2.0) * static_cast<double>(m) + cert.consts.c0;
  return {actual, bound};
}

int env_thread_count() {
  const char* env = std::getenv("HYPERCERT_THREADS");
  if (env && *env) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(std::min<long>(v, 64));
    if (v < 0) return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

}  // namespace hypercert
