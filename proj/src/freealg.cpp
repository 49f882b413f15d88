#include "qskein/freealg.hpp"

#include <cctype>

namespace qs {

std::strong_ordering word_compare(const Word& u, const Word& w) {
    if (u.size() != w.size()) return u.size() <=> w.size();
    int c = u.compare(w);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Letter Alphabet::add(const std::string& name, const std::string& display) {
    if (index_.count(name)) throw std::invalid_argument("duplicate generator " + name);
    auto x = static_cast<Letter>(names_.size());
    names_.push_back(name);
    display_.push_back(display.empty() ? name : display);
    index_.emplace(name, x);
    return x;
}

Letter Alphabet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownGenerator("unknown generator " + name);
    return it->second;
}

std::string Alphabet::word_string(const Word& w, bool use_display) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += use_display ? display(w[i]) : name(w[i]);
    }
    return s;
}

NcPoly::NcPoly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Word(), c);
}

NcPoly NcPoly::word(const Word& w, const Scalar& c) {
    NcPoly p;
    if (!c.is_zero()) p.t_.emplace(w, c);
    return p;
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& p) {
    for (const auto& [w, c] : p.t_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& p) {
    for (const auto& [w, c] : p.t_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& [w, x] : t_) x *= c;
    return *this;
}

void NcPoly::axpy(const Scalar& c, const NcPoly& p) {
    if (c.is_zero()) return;
    for (const auto& [w, x] : p.t_) add_term(w, c * x);
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [u, cu] : a.t_)
        for (const auto& [w, cw] : b.t_) r.add_term(u + w, cu * cw);
    return r;
}

NcPoly poly_mul(const NcPoly& p, const NcPoly& r) { return p * r; }

NcPoly commutator(const NcPoly& x, const NcPoly& y, const Scalar& lambda) {
    NcPoly r = x * y;
    r.axpy(-lambda, y * x);
    return r;
}

NcPoly product(std::initializer_list<NcPoly> factors) {
    NcPoly r(Scalar(1));
    for (const auto& f : factors) r = r * f;
    return r;
}

NcPoly NcPoly::pow(unsigned n) const {
    NcPoly r(Scalar(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string NcPoly::to_string(const Alphabet& al, bool use_display) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) s += " + ";
        first = false;
        if (w.empty()) {
            s += "(" + c.to_string() + ")";
            continue;
        }
        if (!c.is_one()) s += "(" + c.to_string() + ")*";
        s += al.word_string(w, use_display);
    }
    return s;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Word> next;
        next.reserve(out.size() * alphabet_size);
        for (const auto& w : out)
            for (std::size_t x = 0; x < alphabet_size; ++x) next.push_back(w + static_cast<Letter>(x));
        out.swap(next);
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view t, const Alphabet& al) : t_(t), al_(al) {}

    NcPoly parse() {
        NcPoly r = expr();
        skip();
        if (p_ != t_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError("parse error at " + std::to_string(p_) + ": " + msg);
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
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        std::size_t s = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (s == p_) fail("expected integer");
        long n = std::stol(std::string(t_.substr(s, p_ - s)));
        return neg ? -n : n;
    }
    NcPoly expr() {
        NcPoly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            if (eat('*')) acc = acc * factor();
            else if (eat('/')) {
                NcPoly d = factor();
                if (d.size() != 1 || d.degree() != 0) fail("division by a non-scalar");
                acc *= d.constant().inverse();
            } else return acc;
        }
    }
    NcPoly factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        NcPoly base = atom();
        if (eat('^')) {
            bool paren = eat('(');
            long e = integer();
            if (paren && !eat(')')) fail("expected )");
            if (e < 0) {
                if (base.size() != 1 || base.degree() != 0) fail("negative power of a non-scalar");
                return NcPoly(base.constant().pow(e));
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }
    NcPoly atom() {
        skip();
        if (p_ >= t_.size()) fail("unexpected end");
        char c = t_[p_];
        if (c == '(') {
            ++p_;
            NcPoly r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (c == '[') {
            ++p_;
            NcPoly x = expr();
            if (!eat(',')) fail("expected ,");
            NcPoly y = expr();
            if (!eat(']')) fail("expected ]");
            return commutator(x, y);
        }
        if (c == '<') {
            ++p_;
            long n = integer();
            if (!eat('>')) fail("expected >");
            return NcPoly(bracket(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = p_;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
            return NcPoly(Scalar(mpq_class(mpz_class(std::string(t_.substr(s, p_ - s))))));
        }
        if (ident_char(c)) {
            std::size_t s = p_;
            while (p_ < t_.size() && ident_char(t_[p_])) ++p_;
            std::string id(t_.substr(s, p_ - s));
            if (al_.contains(id)) return NcPoly::gen(al_.index(id));
            if (id == "v") return NcPoly(Scalar::v_pow(1));
            if (id == "q") return NcPoly(Scalar::q_pow(1));
            fail("unknown generator " + id);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view t_;
    const Alphabet& al_;
    std::size_t p_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const Alphabet& al) { return PolyParser(text, al).parse(); }

}  // namespace qs
