#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jones {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in A with exact arbitrary-precision integer
// coefficients: the value ring of the bracket oracle. Stored sparsely as
// exponent -> coefficient with no zero coefficients kept.
class LaurentInt {
  public:
    LaurentInt() = default;

    static LaurentInt from_int(long v);
    static LaurentInt monomial(BigInt c, int exp);
    // d = -A^2 - A^-2, the loop value (also written delta).
    static LaurentInt loop_value();

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    int min_exponent() const; // throws internal_error on zero polynomial
    int max_exponent() const;
    BigInt coefficient(int exp) const;

    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt operator+(const LaurentInt& o) const;
    LaurentInt operator-(const LaurentInt& o) const;
    LaurentInt operator-() const;
    LaurentInt operator*(const LaurentInt& o) const;
    bool operator==(const LaurentInt& o) const { return terms_ == o.terms_; }

    // Multiply by the monomial c * A^exp.
    LaurentInt scaled(const BigInt& c, int exp) const;
    LaurentInt pow(unsigned k) const;

    // Numeric evaluation at a unit-modulus point (validated to 1e-12).
    std::complex<double> eval_unit(std::complex<double> A) const;

    // Canonical text: terms by ascending exponent, e.g. "-A^-12 + 2A^-4 - 1".
    std::string text() const;
    // JSON-friendly [exponent, coefficient] pairs, ascending exponent.
    std::vector<std::pair<int, BigInt>> term_list() const;

  private:
    std::map<int, BigInt> terms_;
    void add_term(int exp, const BigInt& c);
};

LaurentInt monomial_scale(const LaurentInt& p, const BigInt& c, int exp);

// Exact division, throwing internal_error if a remainder is left.
LaurentInt div_exact(const LaurentInt& p, const LaurentInt& q);

// Laurent polynomial in t with exact quarter-integer exponents, stored in
// units of t^(1/4). This is the Jones polynomial's natural home: links with
// several components genuinely produce half-integer powers of t.
class QuarterLaurent {
  public:
    QuarterLaurent() = default;

    // Substitute A = t^(-1/4) into f: an A-exponent k becomes the
    // t^(1/4)-exponent -k.
    static QuarterLaurent from_f_polynomial(const LaurentInt& f);

    bool is_zero() const { return quarter_terms_.empty(); }
    const std::map<int, BigInt>& quarter_terms() const { return quarter_terms_; }
    bool operator==(const QuarterLaurent& o) const = default;

    // "-t^-4 + t^-3 + t^-1", fractional powers as "t^(1/2)".
    std::string text() const;
    std::vector<std::pair<int, BigInt>> term_list() const;

  private:
    std::map<int, BigInt> quarter_terms_; // exponent in units of t^(1/4)
};

} // namespace jones
