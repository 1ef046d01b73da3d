#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zzq {

using Scalar = std::uint32_t;

/// The prime field GF(p). Elements are canonical representatives 0..p-1.
/// Cheap to copy; inverse tables are shared between copies.
class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 251;

  /// Throws InvalidInput unless 2 <= p <= kMaxPrime and p is prime.
  explicit Field(std::uint32_t p = 2);

  std::uint32_t p() const noexcept { return p_; }

  Scalar reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = x % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(Scalar a) const noexcept { return (*inverses_)[a]; }

  friend bool operator==(const Field& x, const Field& y) noexcept { return x.p_ == y.p_; }
  friend bool operator!=(const Field& x, const Field& y) noexcept { return x.p_ != y.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<Scalar>> inverses_;
};

bool is_prime(std::uint32_t p) noexcept;

}  // namespace zzq
