#pragma once

#include <cmath>
#include <cstdint>

namespace lvevo {

// Counter-based pseudo-random stream (splitmix64 output function).
//
// A stream is a pure function of (seed, counter), so a run replays
// bit-identically from its seed, and replicate substreams are derived from a
// master seed without consuming draws from it. Copying a stream forks the
// exact draw sequence, which is what the coupling tests rely on.
class RngStream {
 public:
  RngStream() = default;
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Uniform on [-1,1].
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  // Uniform index in {0,...,n-1} (Lemire rejection, no modulo bias).
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - un) % un;
    for (;;) {
      const unsigned __int128 m =
          static_cast<unsigned __int128>(next_u64()) * un;
      if (static_cast<std::uint64_t>(m) >= threshold)
        return static_cast<std::size_t>(m >> 64);
    }
  }

  // Derive an independent child stream; `stream_id` distinguishes siblings.
  RngStream split(std::uint64_t stream_id) const {
    std::uint64_t z = (seed_ ^ 0xA3EC647659359ACDull) +
                      (stream_id + 1) * 0xD1B54A32D192ED03ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return RngStream(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace lvevo
