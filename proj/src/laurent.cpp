#include "jones/laurent.hpp"

#include "jones/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jones {

void LaurentInt::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentInt LaurentInt::from_int(long v) {
    LaurentInt p;
    p.add_term(0, BigInt(v));
    return p;
}

LaurentInt LaurentInt::monomial(BigInt c, int exp) {
    LaurentInt p;
    p.add_term(exp, c);
    return p;
}

LaurentInt LaurentInt::loop_value() {
    LaurentInt d;
    d.add_term(2, BigInt(-1));
    d.add_term(-2, BigInt(-1));
    return d;
}

int LaurentInt::min_exponent() const {
    if (terms_.empty()) throw internal_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentInt::max_exponent() const {
    if (terms_.empty()) throw internal_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentInt::coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentInt LaurentInt::operator+(const LaurentInt& o) const {
    LaurentInt r = *this;
    r += o;
    return r;
}

LaurentInt LaurentInt::operator-(const LaurentInt& o) const {
    LaurentInt r = *this;
    r -= o;
    return r;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentInt LaurentInt::operator*(const LaurentInt& o) const {
    LaurentInt r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentInt LaurentInt::scaled(const BigInt& c, int exp) const {
    LaurentInt r;
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e + exp, coeff * c);
    return r;
}

LaurentInt LaurentInt::pow(unsigned k) const {
    LaurentInt acc = from_int(1);
    LaurentInt base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

std::complex<double> LaurentInt::eval_unit(std::complex<double> A) const {
    double mod = std::abs(A);
    if (std::abs(mod - 1.0) > 1e-12)
        throw std::invalid_argument("eval_unit requires |A| = 1 (got modulus " + std::to_string(mod) + ")");
    double phi = std::arg(A);
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) {
        // |A| = 1 so A^e = exp(i e phi); the polar form keeps the modulus
        // exact for large |e|.
        sum += c.convert_to<double>() * std::polar(1.0, phi * static_cast<double>(e));
    }
    return sum;
}

namespace {

std::string coeff_body(const BigInt& mag, int exp, const std::string& var) {
    std::string s;
    if (mag != 1 || exp == 0) s += mag.str();
    if (exp != 0) {
        s += var;
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
}

} // namespace

std::string LaurentInt::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += coeff_body(mag, e, "A");
    }
    return out;
}

std::vector<std::pair<int, BigInt>> LaurentInt::term_list() const {
    return {terms_.begin(), terms_.end()};
}

LaurentInt monomial_scale(const LaurentInt& p, const BigInt& c, int exp) {
    return p.scaled(c, exp);
}

LaurentInt div_exact(const LaurentInt& p, const LaurentInt& q) {
    if (q.is_zero()) throw internal_error("division by zero polynomial");
    if (p.is_zero()) return {};

    // Long division from the top term. Exponents can run over the whole
    // Laurent range, so termination is guarded by an iteration budget; if the
    // division were inexact the leading exponent would sink forever.
    const int qe = q.max_exponent();
    const BigInt qc = q.coefficient(qe);
    LaurentInt rem = p;
    LaurentInt quot;
    const long budget = static_cast<long>(p.max_exponent()) - p.min_exponent() +
                        (q.max_exponent() - q.min_exponent()) + 4;
    for (long iter = 0; !rem.is_zero(); ++iter) {
        if (iter > budget) throw internal_error("div_exact: nonzero remainder");
        const int re = rem.max_exponent();
        const BigInt rc = rem.coefficient(re);
        if (rc % qc != 0) throw internal_error("div_exact: leading coefficient not divisible");
        const BigInt f = rc / qc;
        quot += LaurentInt::monomial(f, re - qe);
        rem -= q.scaled(f, re - qe);
    }
    return quot;
}

QuarterLaurent QuarterLaurent::from_f_polynomial(const LaurentInt& f) {
    QuarterLaurent v;
    for (const auto& [e, c] : f.terms()) v.quarter_terms_.emplace(-e, c);
    return v;
}

std::string QuarterLaurent::text() const {
    if (quarter_terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [qe, c] : quarter_terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (qe % 4 == 0) {
            out += coeff_body(mag, qe / 4, "t");
        } else {
            int g = std::gcd(std::abs(qe), 4);
            int num = qe / g, den = 4 / g;
            if (mag != 1) out += mag.str();
            out += "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        }
    }
    return out;
}

std::vector<std::pair<int, BigInt>> QuarterLaurent::term_list() const {
    return {quarter_terms_.begin(), quarter_terms_.end()};
}

} // namespace jones
