#include "qskein/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace qs {

UPoly::UPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

UPoly UPoly::monomial(std::size_t deg, const mpz_class& c) {
    UPoly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = c;
    return p;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t UPoly::low_zeros() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
}

UPoly UPoly::shifted_down(std::size_t k) const {
    UPoly r;
    if (k >= c_.size()) return r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

UPoly UPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.reserve(c_.size() + k);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

mpz_class UPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void UPoly::divexact_scalar(const mpz_class& d) {
    if (d == 1) return;
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    r.divexact_scalar(content());
    if (r.lead() < 0) r.negate();
    return r;
}

void UPoly::negate() {
    for (auto& x : c_) x = -x;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    UPoly r;
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    r.c_ = big;
    for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] += small[i];
    r.trim();
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly nb = b;
    nb.negate();
    return a + nb;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

UPoly operator*(const UPoly& a, const mpz_class& s) {
    UPoly r;
    if (s == 0) return r;
    r.c_ = a.c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

UPoly UPoly::divexact(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw std::logic_error("divexact: degree mismatch");
    std::vector<mpz_class> r = a.c_;
    std::vector<mpz_class> q(a.c_.size() - b.c_.size() + 1);
    const mpz_class& lb = b.lead();
    mpz_class t;
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
            throw std::logic_error("divexact: inexact division");
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        std::size_t shift = static_cast<std::size_t>(i - b.degree());
        q[shift] = t;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    for (int i = 0; i < b.degree(); ++i)
        if (r[i] != 0) throw std::logic_error("divexact: nonzero remainder");
    return UPoly(std::move(q));
}

namespace {

// lead(b)^k * a mod b, done term by term
UPoly pseudo_rem(UPoly a, const UPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::size_t d = static_cast<std::size_t>(a.degree() - b.degree());
        mpz_class la = a.lead();
        a = a * b.lead() - (b * la).shifted_up(d);
    }
    return a;
}

}  // namespace

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.degree() == 0 || b.degree() == 0) return UPoly(1);
    UPoly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return UPoly(1);
        UPoly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive();
    }
    return x.primitive();
}

mpq_class UPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

std::string UPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Scalar::Scalar(long n) : num_(n) {}

Scalar::Scalar(const mpq_class& r)
    : num_(std::vector<mpz_class>{r.get_num()}), den_(std::vector<mpz_class>{r.get_den()}) {
    if (num_.is_zero()) den_ = UPoly(1);
}

Scalar Scalar::v_pow(long k) {
    Scalar s(1);
    s.e_ = k;
    return s;
}

Scalar Scalar::from_parts(const UPoly& num, const UPoly& den, long shift) {
    if (den.is_zero()) throw PoleError("zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.e_ = shift;
    s.canonicalize();
    return s;
}

void Scalar::canonicalize_laurent() {
    if (num_.is_zero()) {
        e_ = 0;
        return;
    }
    std::size_t k = num_.low_zeros();
    if (k) {
        num_ = num_.shifted_down(k);
        e_ += static_cast<long>(k);
    }
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        e_ = 0;
        den_ = UPoly(1);
        return;
    }
    if (std::size_t k = num_.low_zeros()) {
        num_ = num_.shifted_down(k);
        e_ += static_cast<long>(k);
    }
    if (std::size_t k = den_.low_zeros()) {
        den_ = den_.shifted_down(k);
        e_ -= static_cast<long>(k);
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UPoly::divexact(num_, g);
            den_ = UPoly::divexact(den_, g);
        }
    }
    mpz_class cn = num_.content(), cd = den_.content(), g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) g = -g;
    if (g != 1) {
        num_.divexact_scalar(g);
        den_.divexact_scalar(g);
    }
}

UPoly Scalar::numerator() const { return e_ > 0 ? num_.shifted_up(static_cast<std::size_t>(e_)) : num_; }

UPoly Scalar::denominator() const {
    return e_ < 0 ? den_.shifted_up(static_cast<std::size_t>(-e_)) : den_;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_.negate();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw PoleError("inverse of zero");
    Scalar r;
    r.e_ = -e_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.den_.negate();
        r.num_.negate();
    }
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Scalar r;
    r.e_ = std::min(a.e_, b.e_);
    auto sa = static_cast<std::size_t>(a.e_ - r.e_);
    auto sb = static_cast<std::size_t>(b.e_ - r.e_);
    if (a.is_laurent() && b.is_laurent()) {
        r.num_ = a.num_.shifted_up(sa) + b.num_.shifted_up(sb);
        r.canonicalize_laurent();
        return r;
    }
    if (a.is_laurent() || b.is_laurent()) {
        // the sum is already reduced when one side has trivial denominator
        const Scalar& l = a.is_laurent() ? a : b;
        const Scalar& g = a.is_laurent() ? b : a;
        std::size_t sl = a.is_laurent() ? sa : sb, sg = a.is_laurent() ? sb : sa;
        r.num_ = (l.num_ * g.den_).shifted_up(sl) + g.num_.shifted_up(sg);
        r.den_ = g.den_;
        if (r.num_.is_zero()) return Scalar();
        r.canonicalize_laurent();
        return r;
    }
    if (a.den_ == b.den_) {
        r.num_ = a.num_.shifted_up(sa) + b.num_.shifted_up(sb);
        r.den_ = a.den_;
    } else {
        r.num_ = (a.num_ * b.den_).shifted_up(sa) + (b.num_ * a.den_).shifted_up(sb);
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Scalar r;
    r.e_ = a.e_ + b.e_;
    r.num_ = a.num_ * b.num_;
    if (a.is_laurent() && b.is_laurent()) return r;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1), base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

std::size_t Scalar::hash() const {
    std::size_t h = std::hash<long>()(e_);
    auto mix = [&h](const UPoly& p) {
        for (const auto& c : p.coeffs()) {
            std::size_t x = static_cast<std::size_t>(mpz_get_si(c.get_mpz_t()));
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        h ^= 0x51ed27;
    };
    mix(num_);
    mix(den_);
    return h;
}

std::string Scalar::to_string() const {
    UPoly n = numerator(), d = denominator();
    if (d.is_one()) return n.to_string();
    std::string ns = n.to_string(), ds = d.to_string();
    bool simple_num = n.coeffs().size() - n.low_zeros() == 1 && n.lead() > 0;
    // a single factor: an integer or a bare power of v
    bool simple_den = d.coeffs().size() - d.low_zeros() == 1 && (d.degree() == 0 || d.lead() == 1);
    return (simple_num ? ns : "(" + ns + ")") + "/" + (simple_den ? ds : "(" + ds + ")");
}

Scalar bracket(long n) { return Scalar::q_pow(n) - Scalar(1); }

mpq_class specialize(const Scalar& s, const mpq_class& value) {
    UPoly n = s.numerator(), d = s.denominator();
    mpq_class dv = d.eval(value);
    if (dv == 0) throw PoleError("denominator vanishes at " + value.get_str());
    mpq_class r = n.eval(value) / dv;
    r.canonicalize();
    return r;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view t) : t_(t) {}

    Scalar parse() {
        Scalar r = expr();
        skip();
        if (p_ != t_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ScalarParseError("scalar parse error at " + std::to_string(p_) + ": " + msg);
    }
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < t_.size() && t_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    Scalar term() {
        Scalar acc = factor();
        for (;;) {
            if (eat('*')) acc *= factor();
            else if (eat('/')) {
                Scalar d = factor();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else return acc;
        }
    }
    Scalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar base = atom();
        if (eat('^')) {
            long e = exponent();
            if (e < 0 && base.is_zero()) fail("negative power of zero");
            return base.pow(e);
        }
        return base;
    }
    long exponent() {
        bool paren = eat('(');
        bool neg = eat('-');
        skip();
        std::size_t s = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (s == p_) fail("expected integer exponent");
        long e = std::stol(std::string(t_.substr(s, p_ - s)));
        if (paren && !eat(')')) fail("expected )");
        return neg ? -e : e;
    }
    Scalar atom() {
        skip();
        if (p_ >= t_.size()) fail("unexpected end");
        char c = t_[p_];
        if (c == '(') {
            ++p_;
            Scalar r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            return Scalar(mpq_class(mpz_class(std::string(t_.substr(s, p_ - s)))));
        }
        if (c == 'v' || c == 'q') {
            ++p_;
            if (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_'))
                fail("unknown identifier");
            return c == 'v' ? Scalar::v_pow(1) : Scalar::q_pow(1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view t_;
    std::size_t p_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace qs
