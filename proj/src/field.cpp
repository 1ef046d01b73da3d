#include "zzq/field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "zzq/error.hpp"

namespace zzq {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::shared_ptr<const std::vector<Scalar>> inverse_table(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const std::vector<Scalar>>> cache;
  std::scoped_lock lock(mutex);
  auto& slot = cache[p];
  if (!slot) {
    auto table = std::make_shared<std::vector<Scalar>>(p, 0);
    if (p > 1) (*table)[1] = 1;
    // inv(i) = -(p/i) * inv(p mod i)
    for (std::uint64_t i = 2; i < p; ++i)
      (*table)[i] = static_cast<Scalar>((p - (p / i) * static_cast<std::uint64_t>((*table)[p % i]) % p) % p);
    slot = std::move(table);
  }
  return slot;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p))
    throw InvalidInput("field modulus must be a prime <= " + std::to_string(kMaxPrime) + ", got " +
                       std::to_string(p));
  inverses_ = inverse_table(p);
}

}  // namespace zzq
