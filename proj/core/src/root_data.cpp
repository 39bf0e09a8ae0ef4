#include "skein/root_data.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

std::string_view to_string(EpsilonClass c) {
  switch (c) {
    case EpsilonClass::PlusOne: return "+1";
    case EpsilonClass::MinusOne: return "-1";
    case EpsilonClass::PlusI: return "+i";
    case EpsilonClass::MinusI: return "-i";
  }
  return "?";
}

RootData root_data(int n) {
  if (n < 1) throw std::invalid_argument("root order n must be >= 1, got " + std::to_string(n));
  RootData r;
  r.n = n;
  r.m = n / std::gcd(n, 4);
  r.m_prime = n / std::gcd(n, 2);
  const long long mm = static_cast<long long>(r.m) * r.m;
  r.epsilon_exponent = static_cast<int>(mm % n);
  // ζ^e = exp(2πi e/n) is a fourth root of unity iff 4e ≡ 0 (mod n)
  const long long four_e = 4LL * r.epsilon_exponent;
  if (four_e % n != 0) {
    throw std::logic_error("ζ^{m²} is not a fourth root of unity for n = " + std::to_string(n));
  }
  switch ((four_e / n) % 4) {
    case 0: r.epsilon_class = EpsilonClass::PlusOne; break;
    case 1: r.epsilon_class = EpsilonClass::PlusI; break;
    case 2: r.epsilon_class = EpsilonClass::MinusOne; break;
    default: r.epsilon_class = EpsilonClass::MinusI; break;
  }
  return r;
}

}  // namespace skein
