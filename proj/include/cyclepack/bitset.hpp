#ifndef CYCLEPACK_BITSET_HPP
#define CYCLEPACK_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cyclepack {

/// Vertex set over a fixed universe 0..n-1, stored as 64-bit words.
/// Degree, common-neighborhood and ||v,T|| queries reduce to word ops.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(int n) {
    Bitset b(n);
    for (auto& x : b.w_) x = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(0 <= i && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(0 <= i && i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(0 <= i && i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int count_and(const Bitset& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  /// true iff o is a subset of *this.
  bool contains_all(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  void subtract(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }
  Bitset complemented() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  /// Smallest set bit, or universe() if none.
  int first() const { return next(-1); }
  /// Smallest set bit strictly greater than i, or universe().
  int next(int i) const {
    int from = i + 1;
    if (from >= n_) return n_;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (cur) return static_cast<int>((wi << 6) + std::countr_zero(cur));
      if (++wi >= w_.size()) return n_;
      cur = w_[wi];
    }
  }

  class const_iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    const_iterator() = default;
    const_iterator(const Bitset* bs, int pos) : bs_(bs), pos_(pos) {}
    int operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bs_->next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const Bitset* bs_ = nullptr;
    int pos_ = 0;
  };
  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, n_}; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i : *this) v.push_back(i);
    return v;
  }

 private:
  void trim() {
    int r = n_ & 63;
    if (r && !w_.empty()) w_.back() &= (std::uint64_t{1} << r) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace cyclepack

#endif
