#include "ggm/rng.hpp"

namespace ggm {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t absorb(std::uint64_t h, std::uint64_t v) {
  return mix64(h + kGolden + v);
}

inline std::uint64_t splitmix_next(std::uint64_t& x) {
  x += kGolden;
  return mix64(x);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b, StreamTag tag) {
  std::uint64_t key = mix64(seed + kGolden);
  key = absorb(key, a);
  key = absorb(key, b);
  key = absorb(key, static_cast<std::uint64_t>(tag));

  RngStream s;
  s.state_[0] = splitmix_next(key);
  s.state_[1] = splitmix_next(key);
  s.state_[2] = splitmix_next(key);
  s.state_[3] = splitmix_next(key);
  if ((s.state_[0] | s.state_[1] | s.state_[2] | s.state_[3]) == 0)
    s.state_[0] = kGolden;  // all-zero state is the one invalid xoshiro state
  return s;
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256** (Blackman & Vigna, public domain reference implementation)
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  // Lemire's nearly divisionless unbiased bounded generation.
  unsigned __int128 m =
      static_cast<unsigned __int128>(next_u64()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next_u64()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::unit_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::normal() {
  const double u1 = unit_open();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

double RngStream::exponential(double rate) {
  return -std::log(unit_open()) / rate;
}

double RngStream::student_t3() {
  for (;;) {
    const double z = normal();
    const double a = normal();
    const double b = normal();
    const double c = normal();
    const double chi2 = a * a + b * b + c * c;
    if (chi2 > 0.0) return z / std::sqrt(chi2 / 3.0);
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  return absorb(mix64(seed + kGolden), key);
}

}  // namespace ggm
