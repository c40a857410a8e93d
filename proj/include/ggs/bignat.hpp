#ifndef GGS_BIGNAT_HPP
#define GGS_BIGNAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggs {

// Arbitrary-size natural number, base 10^9 limbs. Group orders of congruence
// quotients exceed 64 bits already at degree 343, so all order and index
// arithmetic goes through this type.
class BigNat {
public:
  BigNat() : limbs_{0} {}
  explicit BigNat(std::uint64_t v);

  static BigNat power(std::uint64_t base, unsigned exp);

  BigNat& operator*=(std::uint32_t factor);
  BigNat& operator*=(const BigNat& other);
  BigNat operator*(const BigNat& other) const;

  // In-place division by a small divisor; returns the remainder.
  std::uint32_t div_small(std::uint32_t divisor);

  bool operator==(const BigNat& other) const { return limbs_ == other.limbs_; }
  bool operator!=(const BigNat& other) const { return !(*this == other); }
  bool operator<(const BigNat& other) const;

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  // Value as u64 if it fits.
  std::optional<std::uint64_t> to_u64() const;

  // Exact exponent k with *this == base^k, if the value is a power of base.
  std::optional<unsigned> log_exact(std::uint32_t base) const;

  std::string to_string() const;

private:
  void trim();
  std::vector<std::uint32_t> limbs_; // little endian, base 10^9
};

} // namespace ggs

#endif
