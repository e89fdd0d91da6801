#include "awtc/gf2m.hpp"

#include <stdexcept>

namespace awtc {

namespace {

// Primitive polynomials over GF(2), degree 1..16, including the x^b term.
constexpr std::uint32_t kPrimPolys[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int deg) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    // inputs may carry degree up to deg (alpha itself when deg = 1), so the
    // product degree can reach 2*deg
    for (int i = 2 * deg; i >= deg; --i)
        if ((acc >> i) & 1) acc ^= static_cast<std::uint64_t>(poly) << (i - deg);
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

std::uint32_t Field::table_poly(int b) {
    if (b < 1 || b > 16) throw std::invalid_argument("Field: extension degree must be in [1, 16]");
    return kPrimPolys[b];
}

Field::Field(int b) : b_(b), poly_(table_poly(b)) { validate(); }

Field::Field(int b, std::uint32_t primitive_poly) : b_(b), poly_(primitive_poly) {
    if (b < 1 || b > 16) throw std::invalid_argument("Field: extension degree must be in [1, 16]");
    validate();
}

void Field::validate() const {
    if ((poly_ >> b_) != 1) throw std::invalid_argument("Field: polynomial degree mismatch");
    // x must generate the full multiplicative group: ord(x) = 2^b - 1.
    // pow_alpha reduces exponents mod the order, so exponentiate directly here.
    auto pow_raw = [this](std::uint64_t e) {
        FieldElement result = one(), base = alpha();
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    };
    const std::uint32_t n = order();
    if (pow_raw(n).value != 1) throw std::invalid_argument("Field: polynomial is not primitive");
    // check no proper divisor d of n has x^d = 1
    for (std::uint32_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d > 1 && pow_raw(d).value == 1)
            throw std::invalid_argument("Field: polynomial is not primitive");
        std::uint32_t e = n / d;
        if (e < n && pow_raw(e).value == 1)
            throw std::invalid_argument("Field: polynomial is not primitive");
    }
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    return {clmul_reduce(a.value, b.value, poly_, b_)};
}

FieldElement Field::pow_alpha(std::uint64_t e) const {
    e %= order();
    FieldElement result = one();
    FieldElement base = alpha();
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

BitVector bch_column(const Field& f, std::uint64_t j, int t) {
    if (t < 1) throw std::invalid_argument("bch_column: t must be >= 1");
    const int b = f.degree();
    BitVector out(static_cast<std::size_t>(t) * b);
    if (j == 0) return out;  // (m,w) = (0,0) maps to the all-zero vector
    for (int i = 0; i < t; ++i) {
        FieldElement e = f.pow_alpha(j * (2 * static_cast<std::uint64_t>(i) + 1));
        for (int c = 0; c < b; ++c)
            if ((e.value >> c) & 1) out.set(static_cast<std::size_t>(i) * b + c, true);
    }
    return out;
}

}  // namespace awtc
