#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace foresight {

// Fixed-width bit vector used for ground states.  State spaces in this
// project run to a few thousand fluents, so packed words plus cheap
// equality/hashing matter more than fancy set algebra.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0ull) {}

  std::size_t size() const { return nbits_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1ull;
  }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // Lexicographic over bit indices (bit 0 most significant), so ordering is
  // stable across word widths; handy for deterministic map keys.
  bool operator<(const BitVec& o) const {
    if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != o.words_[w]) {
        // Find the lowest differing bit; the vector with a 0 there is smaller
        // iff the other has 1 (bit index order, not numeric word order).
        const std::uint64_t diff = words_[w] ^ o.words_[w];
        const int bit = __builtin_ctzll(diff);
        return ((o.words_[w] >> bit) & 1ull) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ nbits_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace foresight
