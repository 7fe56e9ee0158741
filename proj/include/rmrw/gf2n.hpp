#ifndef RMRW_GF2N_HPP
#define RMRW_GF2N_HPP

#include <cstdint>
#include <vector>

#include "rmrw/binary_word.hpp"

namespace rmrw {

/// Fixed irreducible modulus for GF(2^n), n in [2, 16]; includes the
/// leading x^n term. n = 8 uses the AES polynomial x^8+x^4+x^3+x+1.
std::uint32_t gf2n_modulus(int degree);

// Element of GF(2^n) as a polynomial over GF(2), bit i of `value` holding
// the coefficient of x^i. Ties the modulus to the value so mixed-field
// arithmetic is caught at run time.
struct Gf2nElement {
  std::uint32_t value = 0;
  int degree = 0;
  std::uint32_t modulus = 0;

  Gf2nElement() = default;
  Gf2nElement(std::uint32_t v, int n);

  Gf2nElement operator+(const Gf2nElement& o) const;  // XOR
  Gf2nElement operator*(const Gf2nElement& o) const;  // carry-less, reduced

  bool operator==(const Gf2nElement& o) const {
    return value == o.value && degree == o.degree;
  }
};

// The hash family H^{n,k,l}: x -> first k-l bits of a*x+b in GF(2^n).
// "First" means most significant: bits of the field element are read
// highest coefficient first, so the output integer is value >> (n-(k-l)).
struct HashParams {
  int n = 0;
  int k = 0;
  int l = 0;

  int out_bits() const { return k - l; }
};

/// Evaluate H_{a,b}(x); returns the (k-l)-bit output as an integer.
std::uint32_t hash_eval(const Gf2nElement& a, const Gf2nElement& b,
                        const HashParams& hp, std::uint32_t x);

/// hash_eval on a BinaryWord input: bit j-1 of the word is the coefficient
/// of x^(j-1) of the field element.
std::uint32_t hash_eval(const Gf2nElement& a, const Gf2nElement& b,
                        const HashParams& hp, const BinaryWord& x);

std::uint32_t word_to_field_bits(const BinaryWord& w);

}  // namespace rmrw

#endif
