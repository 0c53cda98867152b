#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace conedens {

// Fixed-size bit vector over 64-bit words.  Bits past size() are kept zero so
// word-wise comparison and popcount stay valid.
class BitGrid {
 public:
  BitGrid() = default;
  explicit BitGrid(std::uint64_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::uint64_t size() const { return nbits_; }

  bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  BitGrid& operator|=(const BitGrid& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitGrid& operator&=(const BitGrid& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this \ o
  BitGrid& subtract(const BitGrid& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool operator==(const BitGrid& o) const { return words_ == o.words_; }

  bool is_subset_of(const BitGrid& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::uint64_t count_and(const BitGrid& o) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  // dst[dst_begin + k] |= src[src_begin + k] for k in [0, len).
  // The word-shift workhorse behind the sumset kernels.
  void or_shifted_range(const BitGrid& src, std::uint64_t src_begin,
                        std::uint64_t len, std::uint64_t dst_begin) {
    std::uint64_t done = 0;
    while (done < len) {
      const std::uint64_t s = src_begin + done;
      const unsigned soff = static_cast<unsigned>(s & 63);
      std::uint64_t take = 64 - soff;
      if (take > len - done) take = len - done;
      std::uint64_t chunk = src.words_[s >> 6] >> soff;
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      const std::uint64_t d = dst_begin + done;
      const unsigned doff = static_cast<unsigned>(d & 63);
      words_[d >> 6] |= chunk << doff;
      if (doff != 0 && take > 64 - doff) words_[(d >> 6) + 1] |= chunk >> (64 - doff);
      done += take;
    }
  }

  bool any_in_range(std::uint64_t begin, std::uint64_t len) const {
    std::uint64_t done = 0;
    while (done < len) {
      const std::uint64_t s = begin + done;
      const unsigned soff = static_cast<unsigned>(s & 63);
      std::uint64_t take = 64 - soff;
      if (take > len - done) take = len - done;
      std::uint64_t chunk = words_[s >> 6] >> soff;
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      if (chunk) return true;
      done += take;
    }
    return false;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const unsigned b = std::countr_zero(w);
        f(static_cast<std::uint64_t>(wi) * 64 + b);
        w &= w - 1;
      }
    }
  }

 private:
  std::uint64_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace conedens
