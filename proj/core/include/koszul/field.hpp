#pragma once

#include <cstdint>
#include <string>

namespace koszul {

// Coefficient field: the rationals (characteristic 0) or a prime field.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  // 0 selects the rationals.
  static Field of_characteristic(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace koszul
