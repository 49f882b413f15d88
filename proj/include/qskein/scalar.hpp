#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qs {

// Dense integer polynomial in v, c[i] is the coefficient of v^i. Always trimmed.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(long c);
    explicit UPoly(std::vector<mpz_class> c);

    static UPoly monomial(std::size_t deg, const mpz_class& c = 1);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    // number of zero low coefficients
    std::size_t low_zeros() const;
    UPoly shifted_down(std::size_t k) const;
    UPoly shifted_up(std::size_t k) const;

    mpz_class content() const;
    UPoly primitive() const;
    void negate();
    void divexact_scalar(const mpz_class& d);

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const mpz_class& s);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    // exact division, throws if b does not divide a
    static UPoly divexact(const UPoly& a, const UPoly& b);
    // primitive gcd with positive leading coefficient
    static UPoly gcd(const UPoly& a, const UPoly& b);

    mpq_class eval(const mpq_class& x) const;
    std::string to_string(const char* var = "v") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ScalarParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of Q(v), q = v^2.  Stored as v^e * num/den with num(0) != 0, den(0) != 0,
// gcd(num, den) = 1, integer contents coprime and lead(den) > 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& r);

    static Scalar v_pow(long k);
    static Scalar q_pow(long k) { return v_pow(2 * k); }
    static Scalar from_parts(const UPoly& num, const UPoly& den, long shift = 0);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return e_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    // full numerator/denominator as polynomials in v (shift folded in)
    UPoly numerator() const;
    UPoly denominator() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(long n) const;
    std::size_t hash() const;
    std::string to_string() const;

private:
    void canonicalize_laurent();
    void canonicalize();

    long e_ = 0;
    UPoly num_;
    UPoly den_{1};
};

// <n> = q^n - 1
Scalar bracket(long n);

// exact evaluation at v = value
mpq_class specialize(const Scalar& s, const mpq_class& value);

// integers, v, q, + - * / ^, parentheses
Scalar parse_scalar(std::string_view text);

}  // namespace qs
