#ifndef BELLKIT_RNG_HPP_
#define BELLKIT_RNG_HPP_

#include <cstdint>

namespace bellkit {

// Counter-based generator (SplitMix64 output function applied to a strided
// counter). The k-th output is
//
//   mix64(seed + k * 0x9E3779B97F4A7C15)
//
// with mix64 the Stafford variant-13 finalizer:
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27;  z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// Fixed constants, no hidden state: a (seed, counter) pair fully determines
// every draw, so independent streams can be replayed or partitioned by seed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix64(seed_ + counter_);
  }

  // Uniform on [0, 1): top 53 bits of the 64-bit output.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // ±1 fair coin.
  int next_sign() { return (next_u64() >> 63) ? -1 : +1; }

  // Derives a child seed for an independent stream, e.g. one per context.
  static std::uint64_t derive_stream(std::uint64_t master, std::uint64_t id) {
    return mix64(master ^ mix64(id + 0xD1B54A32D192ED03ULL));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace bellkit

#endif  // BELLKIT_RNG_HPP_
