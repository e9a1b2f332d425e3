#include "cpck/rational.hpp"

namespace cpck {

std::string Rat::to_string() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += "/";
    s += den().str();
  }
  return s;
}

std::size_t hash_bigint(const BigInt& v) {
  // Mix the limbs; good enough for hash tables, not for anything adversarial.
  std::size_t h = v < 0 ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  for (auto it = v.backend().limbs(), end = it + v.backend().size(); it != end; ++it) {
    h ^= static_cast<std::size_t>(*it) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t Rat::hash() const {
  std::size_t h = hash_bigint(num());
  h ^= hash_bigint(den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

Rat rat_arith(const Rat& a, const Rat& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw Error(std::string("rat_arith: bad operator '") + op + "'");
  }
}

}  // namespace cpck
