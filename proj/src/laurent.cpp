#include "altlink/laurent.hpp"

#include "altlink/errors.hpp"

namespace altlink {

LaurentPoly LaurentPoly::one() { return monomial(1, HalfInt::whole(0)); }

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, HalfInt exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(HalfInt exp, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t LaurentPoly::coeff(HalfInt exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

HalfInt LaurentPoly::min_exp() const { return terms_.begin()->first; }
HalfInt LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

std::int64_t LaurentPoly::eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::mul_monomial(int sign, HalfInt shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e + shift, sign * c);
    return r;
}

LaurentPoly LaurentPoly::symmetrized() const {
    if (is_zero()) return *this;
    const HalfInt lo = min_exp(), hi = max_exp();
    // The midpoint must itself lie in (1/2)Z for the support to be centerable.
    if ((lo.twice + hi.twice) % 2 != 0)
        throw NotSymmetrizable("support span is odd in half-integer units");
    const HalfInt mid = HalfInt::from_twice((lo.twice + hi.twice) / 2);
    LaurentPoly r = mul_monomial(1, -mid);
    for (const auto& [e, c] : r.terms_)
        if (r.coeff(-e) == 0)
            throw NotSymmetrizable("exponent support is not symmetric about 0");
    const std::int64_t at_one = r.eval_at_one();
    const bool flip = at_one < 0 || (at_one == 0 && r.terms_.rbegin()->second < 0);
    return flip ? r.mul_monomial(-1, HalfInt::whole(0)) : r;
}

bool LaurentPoly::is_monic() const {
    if (is_zero()) throw ZeroPolynomial("monic test on the zero polynomial");
    const std::int64_t lead = terms_.rbegin()->second;
    return lead == 1 || lead == -1;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool first = out.empty();
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        const std::int64_t mag = c < 0 ? -c : c;
        if (e == HalfInt::whole(0)) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "t^" + e.str();
        }
    }
    return out;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    return a.symmetrized() == b.symmetrized();
}

} // namespace altlink
