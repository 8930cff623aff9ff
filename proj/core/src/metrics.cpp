#include "hge/metrics.hpp"

#include <sys/resource.h>

namespace hge {

std::uint64_t peak_memory_estimate_bytes()
{
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0)
    return 0;
  // Linux reports ru_maxrss in kilobytes
  return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024u;
}

} // namespace hge
