#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace era {

// splitmix64. Used instead of <random> distributions because distribution
// output is implementation-defined and generated corpora, jittered plots and
// manifests must be byte-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). n = 0 returns 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform integer in [lo, hi], inclusive.
  int range_int(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// printf "%.<significant>g" rendering; shared by every writer so file bytes
// never depend on locale or stream state.
std::string format_sig(double v, int significant);

// Flat "key = value" text. Blank lines and lines starting with '#' or "//"
// are skipped; order is preserved.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

long long parse_int(const std::string& token);     // throws BadFormat
double parse_double(const std::string& token);     // throws BadFormat, rejects non-finite

// Runs body(0..count-1) on the given number of worker threads. Callers index
// into preallocated slots, so results are identical for any thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace era
