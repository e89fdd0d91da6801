#ifndef AWTC_GF2M_HPP
#define AWTC_GF2M_HPP

#include <cstdint>

#include "awtc/bitlinalg.hpp"

namespace awtc {

/// Element of GF(2^b), stored as the bit pattern of a polynomial in alpha
/// (coefficient of alpha^0 in bit 0).
struct FieldElement {
    std::uint32_t value = 0;
    bool operator==(const FieldElement&) const = default;
};

/// GF(2^b) under a primitive polynomial from a built-in table, b in [1, 16].
/// Primitivity is validated at construction (multiplicative order of x must
/// be 2^b - 1).
class Field {
  public:
    explicit Field(int b);                       // table polynomial
    Field(int b, std::uint32_t primitive_poly);  // caller-supplied, still validated

    int degree() const { return b_; }
    std::uint32_t primitive_poly() const { return poly_; }
    std::uint32_t order() const { return (std::uint32_t{1} << b_) - 1; }  // multiplicative

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const { return {2}; }

    FieldElement mul(FieldElement a, FieldElement b) const;
    /// alpha^(e mod (2^b - 1)); alpha^0 = 1.
    FieldElement pow_alpha(std::uint64_t e) const;

    static std::uint32_t table_poly(int b);

  private:
    int b_;
    std::uint32_t poly_;
    void validate() const;
};

/// Column of the narrow-sense BCH syndrome map used by pseudolinear encoding:
/// for j >= 1, the length t*b concatenation of alpha^(j*1), alpha^(j*3), ...,
/// alpha^(j*(2t-1)), each little-endian in alpha-powers; for j = 0, all zeros.
/// Any 2t columns at distinct indices j in [1, 2^b - 1] are linearly
/// independent (design distance 2t+1).
BitVector bch_column(const Field& f, std::uint64_t j, int t);

}  // namespace awtc

#endif
