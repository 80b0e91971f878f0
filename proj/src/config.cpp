#include "sgb/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

namespace sgb {
namespace {

std::optional<unsigned long long> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  unsigned long long value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    std::cerr << "warning: ignoring malformed " << name << "='" << raw << "'\n";
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::size_t max_order() {
  auto value = env_number("SGB_MAX_ORDER");
  if (!value) return kDefaultMaxOrder;
  std::size_t cap = static_cast<std::size_t>(std::min<unsigned long long>(*value, kMaxTableOrder));
  if (cap > kDefaultMaxOrder) {
    static std::once_flag warned;
    std::call_once(warned, [cap] {
      std::cerr << "warning: SGB_MAX_ORDER=" << cap << " exceeds the default cap of "
                << kDefaultMaxOrder << "; B(G) construction is O(|G|^2) closures\n";
    });
  }
  return cap;
}

unsigned worker_threads() {
  if (auto value = env_number("SGB_THREADS")) {
    return static_cast<unsigned>(std::min<unsigned long long>(*value, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace sgb
