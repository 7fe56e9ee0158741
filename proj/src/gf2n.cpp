#include "rmrw/gf2n.hpp"

#include <stdexcept>

namespace rmrw {

std::uint32_t gf2n_modulus(int degree) {
  // Low-weight irreducible polynomials, checked by the unit tests against a
  // brute-force irreducibility oracle.
  static const std::uint32_t table[17] = {
      0,       0,      0x7,    0xB,    0x13,   0x25,    0x43,   0x83,
      0x11B,   0x203,  0x409,  0x805,  0x1009, 0x201B,  0x4021, 0x8003,
      0x1100B,
  };
  if (degree < 2 || degree > 16)
    throw std::out_of_range("gf2n_modulus: degree must be in [2, 16]");
  return table[degree];
}

Gf2nElement::Gf2nElement(std::uint32_t v, int n)
    : value(v), degree(n), modulus(gf2n_modulus(n)) {
  if (v >> n)
    throw std::invalid_argument("Gf2nElement: value has degree >= n");
}

Gf2nElement Gf2nElement::operator+(const Gf2nElement& o) const {
  if (degree != o.degree)
    throw std::invalid_argument("Gf2nElement: degree mismatch");
  Gf2nElement r = *this;
  r.value ^= o.value;
  return r;
}

Gf2nElement Gf2nElement::operator*(const Gf2nElement& o) const {
  if (degree != o.degree)
    throw std::invalid_argument("Gf2nElement: degree mismatch");
  // Shift-and-reduce carry-less multiplication.
  std::uint32_t a = value;
  std::uint32_t b = o.value;
  std::uint32_t acc = 0;
  const std::uint32_t top = 1u << degree;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  Gf2nElement r = *this;
  r.value = acc;
  return r;
}

std::uint32_t word_to_field_bits(const BinaryWord& w) {
  std::uint32_t v = 0;
  for (int i = 0; i < w.size(); ++i)
    if (w.get(i)) v |= 1u << i;
  return v;
}

std::uint32_t hash_eval(const Gf2nElement& a, const Gf2nElement& b,
                        const HashParams& hp, std::uint32_t x) {
  if (hp.l < 0 || hp.l > hp.k || hp.k > hp.n)
    throw std::invalid_argument("hash_eval: need 0 <= l <= k <= n");
  if (a.degree != hp.n || b.degree != hp.n)
    throw std::invalid_argument("hash_eval: hash pair degree != n");
  const Gf2nElement y = a * Gf2nElement(x, hp.n) + b;
  if (hp.out_bits() == 0) return 0;
  return y.value >> (hp.n - hp.out_bits());
}

std::uint32_t hash_eval(const Gf2nElement& a, const Gf2nElement& b,
                        const HashParams& hp, const BinaryWord& x) {
  if (x.size() != hp.n)
    throw std::invalid_argument("hash_eval: word length != n");
  return hash_eval(a, b, hp, word_to_field_bits(x));
}

}  // namespace rmrw
