#pragma once

#include "qskein/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qs {

using Letter = char16_t;
using Word = std::u16string;

// degree first, then letter by letter in alphabet order
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

std::strong_ordering word_compare(const Word& u, const Word& w);

struct UnknownGenerator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Alphabet {
public:
    Letter add(const std::string& name, const std::string& display = {});
    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter x) const { return names_.at(x); }
    const std::string& display(Letter x) const { return display_.at(x); }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    Letter index(const std::string& name) const;
    std::string word_string(const Word& w, bool use_display = false) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_, display_;
    std::unordered_map<std::string, Letter> index_;
};

// Finite Scalar-weighted sum of words, zero terms never stored.
class NcPoly {
public:
    using Terms = std::map<Word, Scalar, DeglexLess>;

    NcPoly() = default;
    NcPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    static NcPoly word(const Word& w, const Scalar& c = Scalar(1));
    static NcPoly gen(Letter x) { return word(Word(1, x)); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
    const Word& lead_word() const { return t_.rbegin()->first; }
    const Scalar& lead_coeff() const { return t_.rbegin()->second; }
    Scalar coeff(const Word& w) const;
    // constant term
    Scalar constant() const { return coeff(Word()); }

    void add_term(const Word& w, const Scalar& c);
    NcPoly& operator+=(const NcPoly& p);
    NcPoly& operator-=(const NcPoly& p);
    NcPoly& operator*=(const Scalar& c);
    // this += c * p
    void axpy(const Scalar& c, const NcPoly& p);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const Scalar& c, NcPoly p) { return p *= c; }
    friend NcPoly operator*(NcPoly p, const Scalar& c) { return p *= c; }
    NcPoly operator-() const { return *this * Scalar(-1); }
    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    NcPoly pow(unsigned n) const;
    std::string to_string(const Alphabet& al, bool use_display = false) const;

private:
    Terms t_;
};

NcPoly poly_mul(const NcPoly& p, const NcPoly& r);

// x*y - lambda*y*x
NcPoly commutator(const NcPoly& x, const NcPoly& y, const Scalar& lambda = Scalar(1));

NcPoly product(std::initializer_list<NcPoly> factors);

struct PolyParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Sums of products of generator names, integers, v, q and <n> brackets with
// + - * ^ and division by scalars.
NcPoly parse_poly(std::string_view text, const Alphabet& al);

// all words of length n in lexicographic order
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n);

}  // namespace qs
