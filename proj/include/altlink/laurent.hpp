#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "altlink/halfint.hpp"

namespace altlink {

// Laurent polynomial in t with integer coefficients and exponents in (1/2)Z.
// Invariant: no stored coefficient is zero, so equality is map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly one();
    static LaurentPoly monomial(std::int64_t coeff, HalfInt exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<HalfInt, std::int64_t>& terms() const { return terms_; }

    // Adds c*t^exp, erasing the term if the coefficient cancels.
    void add_term(HalfInt exp, std::int64_t c);

    std::int64_t coeff(HalfInt exp) const;
    HalfInt min_exp() const; // pre: !is_zero()
    HalfInt max_exp() const; // pre: !is_zero()
    std::int64_t eval_at_one() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // Multiplies by the unit sign*t^shift; sign must be +1 or -1.
    LaurentPoly mul_monomial(int sign, HalfInt shift) const;

    // Canonical representative up to multiplication by a unit +-t^(k/2):
    // re-centers the exponent support at 0 and fixes the overall sign so
    // that p(1) > 0, or the leading coefficient is positive when p(1) = 0.
    // Throws NotSymmetrizable when the support cannot be made symmetric.
    // The zero polynomial is returned unchanged.
    LaurentPoly symmetrized() const;

    // True iff the top-degree coefficient is +-1. Throws ZeroPolynomial.
    bool is_monic() const;

    // Descending exponents, e.g. "t^1 - 1 + t^-1", "2*t^1/2 - 2*t^-1/2", "0".
    std::string str() const;

private:
    std::map<HalfInt, std::int64_t> terms_;
};

// Equality up to multiplication by a unit +-t^(k/2).
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

} // namespace altlink
