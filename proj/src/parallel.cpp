#include "pnspan/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace pnspan {

std::size_t worker_count() {
  std::size_t count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PN_SPANNER_THREADS")) {
    const std::string_view text(env);
    std::size_t cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) count = std::min(count, cap);
  }
  return count;
}

}  // namespace pnspan
