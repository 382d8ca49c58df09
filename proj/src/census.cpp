#include "gridknot/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "gridknot/determinant.hpp"
#include "gridknot/io.hpp"
#include "gridknot/moves.hpp"

namespace gridknot {

namespace {

// Depth-first generation of column data, one column at a time, tracking how
// often each row is used. With `stuck` set, every branch that must produce
// an edge of length 1 or n-1 or a non-interleaved adjacent pair is cut as
// soon as the offending edges are known. With `knots` set, branches that
// close a cycle before the last column are cut.
class Walker {
 public:
  using Leaf = std::function<void(const std::vector<Span>&)>;

  Walker(int n, bool stuck, bool knots, const std::atomic<bool>* stop)
      : n_(n), stuck_(stuck), knots_(knots), stop_(stop), cols_(n + 1), use_(n + 1, 0),
        first_(n + 1, 0), second_(n + 1, 0), uf_(n + 2, std::vector<int>(n + 1)) {
    for (int i = 0; i <= n; ++i) uf_[1][i] = i;
  }

  /// Every admissible first column, in order. These are the work items.
  std::vector<Span> first_columns() const {
    std::vector<Span> out;
    for (int lo = 1; lo <= n_; ++lo)
      for (int hi = lo + 1; hi <= n_; ++hi)
        if (!stuck_ || (hi - lo >= 2 && hi - lo <= n_ - 2)) out.push_back({lo, hi});
    return out;
  }

  void run(Span first, const Leaf& leaf) {
    leaf_ = &leaf;
    if (place(1, first)) descend(2);
    unplace(1, first);
  }

 private:
  int find(int depth, int x) {
    auto& p = uf_[depth];
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }

  bool row_ok(int y) const {
    const int len = second_[y] - first_[y];
    if (len < 2 || len > n_ - 2) return false;
    for (int z : {y - 1, y + 1}) {
      if (z < 1 || z > n_ || second_[z] == 0) continue;
      if (interleaved({first_[y], second_[y]}, {first_[z], second_[z]}) != Interleaving::Interleaved) {
        return false;
      }
    }
    return true;
  }

  // Records column x; returns false when the partial diagram is already
  // ruled out. Always pair with unplace.
  bool place(int x, Span c) {
    cols_[x] = c;
    uf_[x + 1] = uf_[x];
    bool ok = true;
    for (int y : {c.lo, c.hi}) {
      if (use_[y]++ == 0) {
        first_[y] = x;
        continue;
      }
      second_[y] = x;
      if (stuck_ && !row_ok(y)) ok = false;
      if (knots_) {
        const int a = find(x + 1, first_[y]), b = find(x + 1, x);
        if (a == b && x < n_) ok = false;
        uf_[x + 1][a] = b;
      }
    }
    if (ok && stuck_) {
      for (int y = 1; y <= n_; ++y) {
        if (use_[y] == 1 && first_[y] + n_ - 2 <= x) return false;
      }
    }
    return ok;
  }

  void unplace(int x, Span c) {
    for (int y : {c.hi, c.lo}) {
      if (--use_[y] == 0) {
        first_[y] = 0;
      } else {
        second_[y] = 0;
      }
    }
    (void)x;
  }

  void descend(int x) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return;
    if (x > n_) {
      std::vector<Span> cols(cols_.begin() + 1, cols_.end());
      (*leaf_)(cols);
      return;
    }
    const int min_len = stuck_ ? 2 : 1;
    const int max_len = stuck_ ? n_ - 2 : n_ - 1;
    for (int lo = 1; lo <= n_; ++lo) {
      if (use_[lo] == 2) continue;
      for (int hi = lo + min_len; hi <= std::min(n_, lo + max_len); ++hi) {
        if (use_[hi] == 2) continue;
        const Span c{lo, hi};
        if (stuck_ && interleaved(cols_[x - 1], c) != Interleaving::Interleaved) continue;
        if (place(x, c)) descend(x + 1);
        unplace(x, c);
      }
    }
  }

  int n_;
  bool stuck_, knots_;
  const std::atomic<bool>* stop_;
  std::vector<Span> cols_;
  std::vector<int> use_, first_, second_;
  std::vector<std::vector<int>> uf_;  // union-find over columns, one copy per depth
  const Leaf* leaf_ = nullptr;
};

// Structural stuck test used by the pruning: no edge of length 1 or n-1 and
// every adjacent parallel pair interleaved. For knots with n >= 3 this is
// the same as is_stuck.
bool stuck_structure(const GridDiagram& d) {
  const int n = d.size();
  for (int i = 1; i <= n; ++i) {
    for (Span s : {d.row(i), d.column(i)}) {
      if (s.length() < 2 || s.length() > n - 2) return false;
    }
    if (i < n && (interleaved(d.row(i), d.row(i + 1)) != Interleaving::Interleaved ||
                  interleaved(d.column(i), d.column(i + 1)) != Interleaving::Interleaved)) {
      return false;
    }
  }
  return true;
}

bool exterior_exchangeable(const GridDiagram& d, Axis axis) {
  return !inapplicable_reason(d, exterior_exchange(axis));
}

struct Partial {
  std::uint64_t raw = 0, orbits = 0, knots = 0, stuck = 0, trivial = 0, trivial_stuck = 0;
  std::vector<GridDiagram> accepted;
};

using nlohmann::json;

std::string filter_signature(int n, const CensusFilter& f) {
  return std::to_string(n) + (f.knots_only ? "k" : "") + (f.stuck_only ? "s" : "") +
         (f.trivial_only ? "t" : "") + (f.only_exterior_horizontal ? "h" : "") +
         (f.custom ? "c" : "");
}

std::map<size_t, Partial> load_checkpoint(const std::string& path, const std::string& signature) {
  std::map<size_t, Partial> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      continue;  // a torn final line from an interrupted run
    }
    if (j.value("filter", "") != signature) {
      throw Error(ErrorCode::ParseError, "checkpoint '" + path + "' belongs to a different census");
    }
    Partial p;
    const auto& c = j.at("counts");
    p.raw = c.at(0);
    p.orbits = c.at(1);
    p.knots = c.at(2);
    p.stuck = c.at(3);
    p.trivial = c.at(4);
    p.trivial_stuck = c.at(5);
    for (const auto& t : j.at("items")) p.accepted.push_back(parse_text(t.get<std::string>()));
    done[j.at("task").get<size_t>()] = std::move(p);
  }
  return done;
}

std::string checkpoint_line(const std::string& signature, size_t task, const Partial& p) {
  json j;
  j["filter"] = signature;
  j["task"] = task;
  j["counts"] = {p.raw, p.orbits, p.knots, p.stuck, p.trivial, p.trivial_stuck};
  j["items"] = json::array();
  for (const auto& d : p.accepted) j["items"].push_back(to_text(d));
  return j.dump() + "\n";
}

}  // namespace

CensusResult enumerate(int n, const CensusFilter& filter_in, const CensusSink& sink,
                       const CensusOptions& options) {
  if (n < 2 || n > 9) throw Error(ErrorCode::SizeError, "census supports 2 <= n <= 9");
  const auto started = std::chrono::steady_clock::now();
  CensusFilter filter = filter_in;
  if (filter.only_exterior_horizontal) filter.stuck_only = true;
  if (filter.trivial_only) filter.knots_only = true;

  const std::string signature = filter_signature(n, filter);
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> accepted_total{0};
  Walker probe(n, filter.stuck_only, filter.knots_only, nullptr);
  const std::vector<Span> tasks = probe.first_columns();

  std::map<size_t, Partial> done;
  if (!options.checkpoint.empty()) done = load_checkpoint(options.checkpoint, signature);
  std::mutex io_mutex;
  std::ofstream checkpoint_out;
  if (!options.checkpoint.empty()) checkpoint_out.open(options.checkpoint, std::ios::app);

  std::vector<Partial> results(tasks.size());
  std::vector<char> finished(tasks.size(), 0);
  for (auto& [task, p] : done) {
    if (task < tasks.size()) {
      results[task] = std::move(p);
      finished[task] = true;
      accepted_total += results[task].accepted.size();
    }
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    Walker walker(n, filter.stuck_only, filter.knots_only, &stop);
    while (true) {
      const size_t task = next++;
      if (task >= tasks.size() || stop) return;
      if (finished[task]) continue;
      Partial& p = results[task];
      Walker::Leaf leaf = [&](const std::vector<Span>& cols) {
        const GridDiagram d = GridDiagram::validate(n, cols);
        if (!is_canonical(d)) return;
        ++p.orbits;
        p.raw += orbit_size(d);
        const bool knot = is_knot(d);
        if (knot) ++p.knots;
        const bool stuck = knot && is_stuck(d);
        if (stuck) ++p.stuck;
        if (filter.knots_only && !knot) return;
        if (filter.stuck_only && !stuck_structure(d)) return;
        if (filter.only_exterior_horizontal &&
            (!exterior_exchangeable(d, Axis::Horizontal) || exterior_exchangeable(d, Axis::Vertical))) {
          return;
        }
        if (filter.custom && !filter.custom(d)) return;
        if (filter.trivial_only) {
          if (knot_determinant(d) != 1) return;
          if (is_trivial(d, options.limits).verdict != Verdict::Trivial) return;
          ++p.trivial;
          if (stuck) ++p.trivial_stuck;
        }
        p.accepted.push_back(d);
        if (options.stop_after && ++accepted_total >= options.stop_after) stop = true;
      };
      try {
        walker.run(tasks[task], leaf);
      } catch (...) {
        std::lock_guard lock(io_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      if (stop) return;  // partial task; do not checkpoint it
      finished[task] = true;
      if (checkpoint_out.is_open()) {
        std::lock_guard lock(io_mutex);
        checkpoint_out << checkpoint_line(signature, task, p) << std::flush;
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusResult result;
  result.n = n;
  result.workers = jobs;
  for (auto& p : results) {
    result.raw_count += p.raw;
    result.orbit_count += p.orbits;
    result.knot_count += p.knots;
    result.stuck_count += p.stuck;
    result.trivial_count += p.trivial;
    result.trivial_stuck_count += p.trivial_stuck;
    for (auto& d : p.accepted) result.representatives.push_back(std::move(d));
  }
  std::sort(result.representatives.begin(), result.representatives.end());
  if (options.stop_after && result.representatives.size() > options.stop_after) {
    result.representatives.erase(result.representatives.begin() + options.stop_after,
                                  result.representatives.end());
  }
  result.accepted = result.representatives.size();
  if (sink) {
    for (const auto& d : result.representatives) sink(d);
  }
  result.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

MaxStats max_stats(int n, int jobs) {
  if (n < 2 || n > 7) throw Error(ErrorCode::SizeError, "max_stats supports 2 <= n <= 7");
  Walker probe(n, false, false, nullptr);
  const auto tasks = probe.first_columns();
  std::vector<MaxStats> partial(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    Walker walker(n, false, false, nullptr);
    for (size_t t; (t = next++) < tasks.size();) {
      MaxStats& m = partial[t];
      Walker::Leaf leaf = [&](const std::vector<Span>& cols) {
        const auto s = length_stats(GridDiagram::validate(n, cols));
        m.crossings = std::max(m.crossings, s.crossing_count);
        m.total_length = std::max(m.total_length, s.total_all);
      };
      walker.run(tasks[t], leaf);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < std::max(1, jobs); ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  MaxStats out;
  for (const auto& m : partial) {
    out.crossings = std::max(out.crossings, m.crossings);
    out.total_length = std::max(out.total_length, m.total_length);
  }
  return out;
}

Theorem2Report verify_theorem2(int n, const CensusOptions& options) {
  if (n < 2 || n > 8) throw Error(ErrorCode::SizeError, "verify_theorem2 supports 2 <= n <= 8");
  Theorem2Report r;
  r.n = n;
  CensusFilter f;
  f.knots_only = f.stuck_only = f.trivial_only = true;
  r.census = enumerate(n, f, {}, options);
  if (n <= 7) {
    r.holds = r.census.trivial_stuck_count == 0;
    r.detail = std::to_string(r.census.trivial_stuck_count) + " stuck trivial orbits";
    return r;
  }
  bool all_both = true, all_need = true;
  for (const auto& d : r.census.representatives) {
    const bool both =
        exterior_exchangeable(d, Axis::Horizontal) && exterior_exchangeable(d, Axis::Vertical);
    const bool need = needs_exterior(d, options.limits);
    r.admits_both_exterior.push_back(both);
    r.needs_exterior.push_back(need);
    all_both = all_both && both;
    all_need = all_need && need;
  }
  r.holds = !r.census.representatives.empty() && all_both && all_need;
  r.detail = std::to_string(r.census.representatives.size()) + " stuck trivial orbits" +
             (all_both ? "" : ", some lacking an exterior exchange") +
             (all_need ? "" : ", some not needing an exterior exchange");
  return r;
}

std::optional<GridDiagram> find_only_exterior_horizontal(int n, const CensusOptions& options) {
  CensusFilter f;
  f.knots_only = f.trivial_only = f.only_exterior_horizontal = true;
  CensusOptions o = options;
  o.stop_after = 1;
  auto r = enumerate(n, f, {}, o);
  if (r.representatives.empty()) return std::nullopt;
  return r.representatives.front();
}

Json to_json(const CensusResult& r) {
  return Json{{"n", r.n},
              {"raw_count", r.raw_count},
              {"orbit_count", r.orbit_count},
              {"knot_count", r.knot_count},
              {"stuck_count", r.stuck_count},
              {"trivial_count", r.trivial_count},
              {"trivial_stuck_count", r.trivial_stuck_count},
              {"accepted", r.accepted},
              {"elapsed_s", r.elapsed_s},
              {"workers", r.workers}};
}

}  // namespace gridknot
