#pragma once

#include <string_view>

namespace skein {

/// Which fourth root of unity ε = ζ^{m²} is.
enum class EpsilonClass { PlusOne, MinusOne, PlusI, MinusI };

std::string_view to_string(EpsilonClass c);

/// Root-of-unity bookkeeping for ζ of order n: m = ord(ζ⁴), m' = ord(ζ²)
/// and ε = ζ^{m²}.
struct RootData {
  int n = 1;
  int m = 1;
  int m_prime = 1;
  int epsilon_exponent = 0;  // ε = ζ^{epsilon_exponent}, in [0, n)
  EpsilonClass epsilon_class = EpsilonClass::PlusOne;

  bool four_divides_n() const { return n % 4 == 0; }
  friend bool operator==(const RootData&, const RootData&) = default;
};

/// Throws std::invalid_argument for n < 1.
RootData root_data(int n);

}  // namespace skein
