#include "koszul/field.hpp"

#include "koszul/errors.hpp"

namespace koszul {

namespace {
bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

Field Field::prime(std::uint32_t p) {
  // keep products of two residues inside int64
  if (!is_prime(p) || p > (1u << 31))
    fail(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::of_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace koszul
