#pragma once

// Level-synchronous bisection shared by the certificates.  Cells of one level
// are evaluated independently (optionally on several threads) and merged in
// index order, so the outcome does not depend on the schedule.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "isocert/certify/certify.hpp"

namespace isocert::certify::detail {

enum class Verdict { Empty, Resolved, Undecided, Violated };

/// Per-cell outcome; `maxima` slots are merged by max over resolved leaves.
struct CellResult {
  Verdict verdict = Verdict::Undecided;
  std::vector<double> maxima;
};

struct Tagged {
  Box box;
  int chart = 0;
};

struct Outcome {
  std::uint64_t cells = 0;
  int depth = 0;
  std::vector<double> maxima;
  std::vector<Tagged> undecided;
  std::vector<Tagged> violated;
  std::uint64_t undecided_total = 0;
  std::uint64_t violated_total = 0;
};

inline std::pair<Box, Box> bisect(const Box& b) {
  if (b.x.width() >= b.y.width()) {
    const double m = b.x.mid();
    return {Box{Interval(b.x.lo(), m), b.y}, Box{Interval(m, b.x.hi()), b.y}};
  }
  const double m = b.y.mid();
  return {Box{b.x, Interval(b.y.lo(), m)}, Box{b.x, Interval(m, b.y.hi())}};
}

/// eval(const Tagged&, int depth) -> CellResult.  Resolved cells above min_depth are refined
/// further; undecided cells at max_depth are reported.
template <class Eval>
Outcome run(std::vector<Tagged> level, int max_depth, int min_depth, std::size_t slots, unsigned threads,
            Eval&& eval) {
  Outcome out;
  out.maxima.assign(slots, -std::numeric_limits<double>::infinity());
  for (int depth = 0; !level.empty(); ++depth) {
    out.depth = depth;
    out.cells += level.size();
    std::vector<CellResult> results(level.size());
    const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(level.size() / 64 + 1)));
    if (nt == 1) {
      for (std::size_t k = 0; k < level.size(); ++k) results[k] = eval(level[k], depth);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(nt);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
          try {
            constexpr std::size_t kChunk = 256;
            for (std::size_t start = next.fetch_add(kChunk); start < level.size(); start = next.fetch_add(kChunk)) {
              const std::size_t end = std::min(level.size(), start + kChunk);
              for (std::size_t k = start; k < end; ++k) results[k] = eval(level[k], depth);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    std::vector<Tagged> next_level;
    for (std::size_t k = 0; k < level.size(); ++k) {
      const CellResult& r = results[k];
      const bool refine = depth < max_depth;
      switch (r.verdict) {
        case Verdict::Empty:
          break;
        case Verdict::Violated:
          ++out.violated_total;
          if (out.violated.size() < Certificate::kMaxListedCells) out.violated.push_back(level[k]);
          break;
        case Verdict::Resolved:
          if (depth < min_depth && refine) {
            auto [a, b] = bisect(level[k].box);
            next_level.push_back({a, level[k].chart});
            next_level.push_back({b, level[k].chart});
          } else {
            for (std::size_t s = 0; s < slots && s < r.maxima.size(); ++s) {
              out.maxima[s] = std::max(out.maxima[s], r.maxima[s]);
            }
          }
          break;
        case Verdict::Undecided:
          if (refine) {
            auto [a, b] = bisect(level[k].box);
            next_level.push_back({a, level[k].chart});
            next_level.push_back({b, level[k].chart});
          } else {
            ++out.undecided_total;
            if (out.undecided.size() < Certificate::kMaxListedCells) out.undecided.push_back(level[k]);
          }
          break;
      }
    }
    level = std::move(next_level);
  }
  return out;
}

}  // namespace isocert::certify::detail
