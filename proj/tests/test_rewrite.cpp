#include "qskein/rewrite.hpp"

#include "doctest.h"

#include <random>

using namespace qs;

namespace {

Alphabet letters(std::size_t m) {
    Alphabet al;
    for (std::size_t i = 1; i <= m; ++i) al.add("x" + std::to_string(i));
    return al;
}

// x_j x_i = q^{c(i,j)} x_i x_j for j > i: a quantum affine space
std::vector<NcPoly> qplane(std::size_t m, bool twisted) {
    std::vector<NcPoly> rels;
    for (Letter j = 0; j < m; ++j)
        for (Letter i = 0; i < j; ++i) {
            Scalar lam = twisted ? Scalar::q_pow((i + 2 * j) % 3 - 1) : Scalar(1);
            rels.push_back(commutator(NcPoly::gen(j), NcPoly::gen(i), lam));
        }
    return rels;
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

NcPoly random_poly(std::mt19937& rng, std::size_t m, std::size_t maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 5), coef(-4, 4), vexp(-3, 3);
    std::uniform_int_distribution<std::size_t> len(0, maxdeg), letter(0, m - 1);
    NcPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        Word w;
        for (std::size_t k = len(rng); k > 0; --k) w.push_back(static_cast<Letter>(letter(rng)));
        p.add_term(w, Scalar(coef(rng)) * Scalar::v_pow(vexp(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("orient examples") {
    Alphabet al = letters(4);
    auto P = [&](const char* s) { return parse_poly(s, al); };

    RewriteSystem s1 = orient({P("x2*x1 - x1*x2")}, al);
    REQUIRE(s1.rules().size() == 1);
    CHECK(s1.rules()[0].lhs == P("x2*x1").lead_word());
    CHECK(s1.rules()[0].rhs == P("x1*x2"));

    CHECK(orient({}, al).rules().empty());

    RewriteSystem s3 = orient({P("x3*x1 - q^2*x1*x3")}, al);
    CHECK(s3.rules()[0].rhs == P("q^2*x1*x3"));

    // leading coefficient is divided out
    RewriteSystem s4 = orient({P("(v+1)*x4*x2 + x1")}, al);
    CHECK(s4.rules()[0].rhs == P("-1/(v+1)*x1"));

    CHECK_THROWS_AS(orient({P("x2*x1 - x1*x2"), P("2*x2*x1")}, al), DuplicateLeadingWord);
    CHECK_THROWS_AS(orient({P("3")}, al), NotOrientable);
    CHECK_THROWS_AS(orient({P("x2*x1"), P("x2*x1*x3 - x1")}, al), InclusionAmbiguity);
}

TEST_CASE("normal_form examples") {
    Alphabet al = letters(4);
    RewriteSystem sys = orient(qplane(4, false), al);
    auto P = [&](const char* s) { return parse_poly(s, al); };
    CHECK(sys.normal_form(P("x2*x1")) == P("x1*x2"));
    CHECK(sys.normal_form(P("1")) == P("1"));
    CHECK(sys.normal_form(P("x4*x3*x2*x1 - x1*x2*x3*x4")).is_zero());
    CHECK(sys.is_normal(P("x1*x1*x3").lead_word()));
    CHECK(!sys.is_normal(P("x1*x3*x1").lead_word()));
}

TEST_CASE("confluence") {
    Alphabet al = letters(4);
    CHECK(check_confluence(orient(qplane(4, false), al), 3).empty());
    CHECK(check_confluence(orient(qplane(4, true), al), 4).empty());
    CHECK(check_confluence(orient({}, al), 3).empty());
    CHECK(overlap_ambiguities(orient(qplane(4, false), al), 3).size() == 4);

    // x2 x1 -> x1 x2 together with x2 x2 -> x1 x3: the overlap x2 x2 x1 fails
    auto P = [&](const char* s) { return parse_poly(s, al); };
    auto fails = check_confluence(orient({P("x2*x1 - x1*x2"), P("x2*x2 - x1*x3")}, al), 3);
    CHECK(!fails.empty());
    for (const auto& o : fails) CHECK(!o.difference.is_zero());
}

TEST_CASE("graded dimensions") {
    Alphabet al = letters(4);
    auto rels = qplane(4, false);
    RewriteSystem sys = orient(rels, al);
    CHECK(graded_dimension_rewrite(sys, 1) == 4);
    CHECK(graded_dimension_rewrite(sys, 2) == 10);
    CHECK(graded_dimension_rewrite(orient({}, al), 2) == 16);
    CHECK(graded_dimension_linear(rels, 4, 2) == 10);
    CHECK(graded_dimension_linear({}, 4, 2) == 16);
    CHECK(graded_dimension_linear(rels, 4, 3) == 20);
}

TEST_CASE("inhomogeneous oracle uses the filtration") {
    // commutative x1, x2 with x1 x2 = 1: the Laurent ring, one new word per degree and sign
    Alphabet al = letters(2);
    auto P = [&](const char* s) { return parse_poly(s, al); };
    std::vector<NcPoly> rels = interreduce({P("x2*x1 - x1*x2"), P("x1*x2 - 1")});
    RewriteSystem sys = orient(rels, al);
    CHECK(check_confluence(sys, 4).empty());
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(graded_dimension_rewrite(sys, n) == 2);
        CHECK(graded_dimension_linear(rels, 2, n) == 2);
    }
}

TEST_CASE("PBW counts") {
    for (std::size_t m : {4u, 8u}) {
        Alphabet al = letters(m);
        for (bool twisted : {false, true}) {
            RewriteSystem sys = orient(qplane(m, twisted), al);
            for (std::size_t n = 0; n <= 4; ++n)
                CHECK(static_cast<long>(graded_dimension_rewrite(sys, n)) == binom(n + m - 1, m - 1));
        }
    }
}

TEST_CASE("oracle agreement and serial equals parallel") {
    Alphabet al = letters(4);
    auto rels = qplane(4, true);
    RewriteSystem sys = orient(rels, al);
    auto par = graded_dimensions_linear(rels, 4, 4);
    auto ser = graded_dimensions_linear_serial(rels, 4, 4);
    CHECK(par == ser);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(par[n] == graded_dimension_rewrite(sys, n));

    auto a = check_confluence(sys, 4);
    auto b = check_confluence_serial(sys, 4);
    CHECK(a.size() == b.size());
}

TEST_CASE("strategy independence for confluent systems") {
    std::mt19937 rng(5);
    for (bool twisted : {false, true}) {
        Alphabet al = letters(4);
        RewriteSystem sys = orient(qplane(4, twisted), al);
        for (int i = 0; i < 60; ++i) {
            NcPoly p = random_poly(rng, 4, 4);
            NcPoly l = sys.normal_form(p, Strategy::Leftmost);
            NcPoly r = sys.normal_form(p, Strategy::Rightmost);
            CHECK(l == r);
            for (const auto& [w, c] : l.terms()) CHECK(sys.is_normal(w));
        }
    }
}

TEST_CASE("interreduce") {
    Alphabet al = letters(3);
    auto P = [&](const char* s) { return parse_poly(s, al); };
    auto out = interreduce({P("x3*x2 - x2*x1"), P("2*x2*x1 - x1*x1"), P("x3*x2 + x2*x1")});
    REQUIRE(out.size() == 3);
    for (const auto& r : out) CHECK(r.lead_coeff() == Scalar(1));
    // leading words are absent from the other relations
    for (const auto& r : out)
        for (const auto& s : out)
            if (&r != &s) CHECK(s.coeff(r.lead_word()).is_zero());
}
