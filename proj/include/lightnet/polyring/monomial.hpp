#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace lightnet {

/// Largest number of ring variables a Monomial can carry.
inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of a power product t1^e1 * ... * tn^en.
///
/// Exponents are stored one byte per variable and must stay below 128; the
/// spare high bit is what lets divisibility run as a word-parallel compare.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 127;

  Monomial() = default;

  Monomial(std::initializer_list<unsigned> exponents)
      : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  explicit Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > kMaxVariables) {
      throw std::invalid_argument("Monomial: too many variables");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return bytes()[i]; }
  unsigned degree() const { return degree_; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  /// Degree restricted to the variables in `mask`.
  unsigned degree_in(std::uint32_t mask) const {
    unsigned d = 0;
    for (std::uint32_t m = mask & support_; m != 0; m &= m - 1) {
      d += bytes()[static_cast<std::size_t>(__builtin_ctz(m))];
    }
    return d;
  }

  /// Highest variable index with nonzero exponent plus one (0 for 1).
  std::size_t used_arity() const {
    return support_ == 0 ? 0 : 32u - static_cast<std::size_t>(__builtin_clz(support_));
  }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw std::out_of_range("Monomial: variable index");
    if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    auto* b = mutable_bytes();
    degree_ = static_cast<std::uint16_t>(degree_ - b[i] + e);
    b[i] = static_cast<std::uint8_t>(e);
    if (e != 0) {
      support_ |= (1u << i);
    } else {
      support_ &= ~(1u << i);
    }
  }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((((other.words_[w] | kHigh) - words_[w]) & kHigh) != kHigh) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const {
    Monomial r;
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    for (std::size_t w = 0; w < kWords; ++w) {
      r.words_[w] = words_[w] + other.words_[w];
      if ((r.words_[w] & kHigh) != 0) throw std::overflow_error("Monomial: exponent overflow");
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    r.support_ = support_ | other.support_;
    return r;
  }

  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = words_[w] - other.words_[w];
    r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
    r.recompute_support();
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    const auto* x = a.bytes();
    const auto* y = b.bytes();
    auto* z = r.mutable_bytes();
    unsigned d = 0;
    for (std::uint32_t m = a.support_ | b.support_; m != 0; m &= m - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctz(m));
      z[i] = x[i] > y[i] ? x[i] : y[i];
      d += z[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    r.support_ = a.support_ | b.support_;
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    const auto* x = a.bytes();
    const auto* y = b.bytes();
    auto* z = r.mutable_bytes();
    unsigned d = 0;
    for (std::uint32_t m = a.support_ & b.support_; m != 0; m &= m - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctz(m));
      z[i] = x[i] < y[i] ? x[i] : y[i];
      d += z[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    r.support_ = a.support_ & b.support_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  static constexpr std::size_t kWords = kMaxVariables / 8;

  const std::uint8_t* bytes() const { return reinterpret_cast<const std::uint8_t*>(words_.data()); }
  std::uint8_t* mutable_bytes() { return reinterpret_cast<std::uint8_t*>(words_.data()); }

  void recompute_support() {
    support_ = 0;
    const auto* b = bytes();
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (b[i] != 0) support_ |= (1u << i);
    }
  }

  std::array<std::uint64_t, kWords> words_{};
  std::uint16_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term order on monomials. Variables are ranked by index: t1 > t2 > ... > tn.
///
/// The elimination kind first compares the degree in the eliminated block and
/// breaks ties with degrevlex on the whole monomial.
class MonomialOrder {
 public:
  enum class Kind { kLex, kDegRevLex, kElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegRevLex, 0); }

  /// Eliminates the first `k` variables.
  static MonomialOrder block_elimination(std::size_t k) {
    if (k > kMaxVariables) throw std::invalid_argument("block_elimination: k too large");
    const std::uint32_t mask = k == 32 ? ~0u : ((1u << k) - 1u);
    return MonomialOrder(Kind::kElimination, mask);
  }

  /// Eliminates an arbitrary set of variables given as a bit mask.
  static MonomialOrder eliminating(std::uint32_t mask) { return MonomialOrder(Kind::kElimination, mask); }

  Kind kind() const { return kind_; }
  std::uint32_t eliminated() const { return mask_; }

  /// Three-way comparison: positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kLex:
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::kElimination: {
        const unsigned da = a.degree_in(mask_);
        const unsigned db = b.degree_in(mask_);
        if (da != db) return da > db ? 1 : -1;
        return compare_degrevlex(a, b);
      }
      case Kind::kDegRevLex:
      default:
        return compare_degrevlex(a, b);
    }
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ != b.kind_ ? a.kind_ < b.kind_ : a.mask_ < b.mask_;
  }

 private:
  MonomialOrder(Kind k, std::uint32_t mask) : kind_(k), mask_(mask) {}

  static int compare_degrevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const std::uint32_t s = a.support() | b.support();
    for (std::size_t i = s == 0 ? 0 : 32u - static_cast<std::size_t>(__builtin_clz(s)); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::uint32_t mask_;
};

}  // namespace lightnet
