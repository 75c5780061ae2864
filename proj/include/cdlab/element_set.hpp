#pragma once

#include <cstdint>
#include <vector>

namespace cdlab {

// Membership mask over the elements 0..n-1 of a group. Sized at
// construction; unused high bits of the last word stay zero, so whole-word
// comparisons are valid.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : nbits_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return nbits_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const ElementSet& o) const { return words_ == o.words_; }
  bool operator!=(const ElementSet& o) const { return words_ != o.words_; }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  // Order by sorted element lists: {0,1,2} < {0,1,3}. At the lowest
  // differing element, the set containing it sorts first.
  bool lex_less(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t diff = words_[k] ^ o.words_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return words_[k] & low;
      }
    }
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<int>(k * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  struct Hash {
    std::size_t operator()(const ElementSet& s) const {
      return static_cast<std::size_t>(s.hash());
    }
  };

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cdlab
