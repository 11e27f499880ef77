#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace aldr {

/// Fair-coin entropy contract: flip() yields one bit, each independently 1/2
/// under the source's model. Sources are single-threaded; use one per thread.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual int flip() = 0;
};

/// Wraps a source and counts delegated flips.
class CountingSource final : public BitSource {
 public:
  explicit CountingSource(BitSource& inner) : inner_(inner) {}
  int flip() override {
    ++flips_;
    return inner_.flip();
  }
  std::uint64_t flips() const { return flips_; }
  void reset() { flips_ = 0; }

 private:
  BitSource& inner_;
  std::uint64_t flips_ = 0;
};

/// Deterministic seeded source: the SplitMix64 sequence of the seed, with the
/// bits of each 64-bit block consumed most significant first. Fixed for
/// reproducibility; identical seeds give identical bit streams.
class SeededSource final : public BitSource {
 public:
  explicit SeededSource(std::uint64_t seed) : state_(seed) {}

  int flip() override {
    if (bits_left_ == 0) {
      block_ = next_block();
      bits_left_ = 64;
    }
    --bits_left_;
    return static_cast<int>((block_ >> bits_left_) & 1u);
  }

 private:
  std::uint64_t next_block() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t block_ = 0;
  int bits_left_ = 0;
};

/// Reads from the platform's cryptographic RNG (getentropy, falling back to
/// /dev/urandom). Bits served most significant first per byte.
class OsEntropySource final : public BitSource {
 public:
  int flip() override {
    if (bit_ == 0) {
      if (pos_ == sizeof buf_) refill();
      byte_ = buf_[pos_++];
      bit_ = 8;
    }
    --bit_;
    return (byte_ >> bit_) & 1;
  }

 private:
  void refill() {
    if (getentropy(buf_, sizeof buf_) != 0) {
      std::FILE* f = std::fopen("/dev/urandom", "rb");
      if (!f || std::fread(buf_, 1, sizeof buf_, f) != sizeof buf_) {
        if (f) std::fclose(f);
        throw std::runtime_error("OsEntropySource: no entropy available");
      }
      std::fclose(f);
    }
    pos_ = 0;
  }

  unsigned char buf_[256];
  std::size_t pos_ = sizeof buf_;
  unsigned char byte_ = 0;
  int bit_ = 0;
};

}  // namespace aldr
