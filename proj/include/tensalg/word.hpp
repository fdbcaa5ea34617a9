#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "tensalg/error.hpp"

namespace tensalg {

enum class Side : std::uint8_t { kU, kV };

inline char side_letter(Side side) { return side == Side::kU ? 'e' : 'f'; }

// 1-based basis index.
using Letter = std::uint8_t;

// Elementary tensor x_1 (x) ... (x) x_n of basis vectors, stored inline.
// The empty word is the unit. Ordered graded-lexicographically: shorter
// words first, then lexicographically by index.
class Word {
 public:
  static constexpr std::size_t kCapacity = 31;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : Word(std::span<const Letter>(letters)) {}
  explicit Word(std::span<const Letter> letters) {
    if (letters.size() > kCapacity) throw_overflow();
    std::copy(letters.begin(), letters.end(), letters_.begin());
    size_ = static_cast<std::uint8_t>(letters.size());
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_[size_ - 1]; }
  std::span<const Letter> letters() const { return {letters_.data(), size_}; }
  const Letter* begin() const { return letters_.data(); }
  const Letter* end() const { return letters_.data() + size_; }

  void push_back(Letter letter) {
    if (size_ == kCapacity) throw_overflow();
    letters_[size_++] = letter;
  }

  Word without_last() const {
    Word out = *this;
    out.letters_[--out.size_] = 0;
    return out;
  }

  Word reversed() const {
    Word out = *this;
    std::reverse(out.letters_.begin(), out.letters_.begin() + size_);
    return out;
  }

  // Letters at the positions whose bits are set in `mask`, in order.
  Word select(std::uint32_t mask) const {
    Word out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (mask & (std::uint32_t{1} << i)) out.letters_[out.size_++] = letters_[i];
    }
    return out;
  }

  Word sorted() const {
    Word out = *this;
    std::sort(out.letters_.begin(), out.letters_.begin() + size_);
    return out;
  }

  friend Word concat(const Word& a, const Word& b) {
    if (a.size_ + b.size_ > kCapacity) throw_overflow();
    Word out = a;
    std::copy(b.begin(), b.end(), out.letters_.begin() + a.size_);
    out.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  [[noreturn]] static void throw_overflow() {
    throw Error(ErrorKind::kCapExceeded, "word longer than storage capacity");
  }

  std::array<Letter, kCapacity> letters_{};
  std::uint8_t size_ = 0;
};

// Basis element (u ; v) of T(U) (x) T(V). Ordered by total grade, then by
// the U-word, then by the V-word.
struct JointWord {
  Word u;
  Word v;

  std::size_t grade() const { return u.size() + v.size(); }
  bool empty() const { return u.empty() && v.empty(); }

  friend bool operator==(const JointWord&, const JointWord&) = default;
  friend std::strong_ordering operator<=>(const JointWord& a, const JointWord& b) {
    if (auto c = a.grade() <=> b.grade(); c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

inline JointWord concat(const JointWord& a, const JointWord& b) {
  return {concat(a.u, b.u), concat(a.v, b.v)};
}

}  // namespace tensalg
