#include "ggs/bignat.hpp"

#include <stdexcept>

namespace ggs {

namespace {
constexpr std::uint64_t kBase = 1000000000ull;
}

BigNat::BigNat(std::uint64_t v) {
  limbs_.clear();
  do {
    limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
    v /= kBase;
  } while (v != 0);
}

BigNat BigNat::power(std::uint64_t base, unsigned exp) {
  BigNat r(1);
  for (unsigned i = 0; i < exp; ++i) {
    if (base >= kBase)
      throw std::invalid_argument("BigNat::power: base too large");
    r *= static_cast<std::uint32_t>(base);
  }
  return r;
}

BigNat& BigNat::operator*=(std::uint32_t factor) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& other) {
  *this = *this * other;
  return *this;
}

BigNat BigNat::operator*(const BigNat& other) const {
  BigNat r;
  r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                          r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  r.trim();
  return r;
}

std::uint32_t BigNat::div_small(std::uint32_t divisor) {
  if (divisor == 0)
    throw std::invalid_argument("BigNat::div_small: division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = rem * kBase + limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

bool BigNat::operator<(const BigNat& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() < other.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i])
      return limbs_[i] < other.limbs_[i];
  }
  return false;
}

std::optional<std::uint64_t> BigNat::to_u64() const {
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (v > (UINT64_MAX - limbs_[i]) / kBase)
      return std::nullopt;
    v = v * kBase + limbs_[i];
  }
  return v;
}

std::optional<unsigned> BigNat::log_exact(std::uint32_t base) const {
  if (base < 2 || is_zero())
    return std::nullopt;
  BigNat v = *this;
  unsigned k = 0;
  while (!v.is_one()) {
    if (v.div_small(base) != 0)
      return std::nullopt;
    ++k;
  }
  return k;
}

std::string BigNat::to_string() const {
  std::string s = std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

void BigNat::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0)
    limbs_.pop_back();
}

} // namespace ggs
