#ifndef HGE_METRICS_HPP
#define HGE_METRICS_HPP

#include <chrono>
#include <cstdint>

namespace hge {

/// Wall time and a best-effort peak memory estimate for one run. These are
/// reported only; nothing compares them against expectations.
struct RunMetrics
{
  int degree = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t peak_memory_estimate_bytes = 0;
};

/// Peak resident set size of the process as reported by the OS, 0 when
/// unavailable. Process-wide and monotone, hence only an estimate per run.
std::uint64_t peak_memory_estimate_bytes();

class Stopwatch
{
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace hge

#endif // HGE_METRICS_HPP
