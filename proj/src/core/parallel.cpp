#include "kgeo/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace kgeo::par {

namespace {
std::atomic<int> g_threads{0};
std::atomic<bool> g_serial{false};

int env_default() {
    if (const char* s = std::getenv("KGEO_THREADS")) {
        const int k = std::atoi(s);
        if (k > 0) return k;
    }
    return 0;
}
const int g_env = env_default();
} // namespace

void set_threads(int k) { g_threads.store(k); }

int threads() {
    const int k = g_threads.load();
    return k > 0 ? k : g_env;
}

void set_serial(bool on) { g_serial.store(on); }
bool serial() { return g_serial.load(); }

} // namespace kgeo::par
