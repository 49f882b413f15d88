#include "qskein/presentations.hpp"

#include "doctest.h"

#include <algorithm>

using namespace qs;

namespace {

bool all_zero(const ScalarMat& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::vector<AlgebraPresentation> builtins() {
    std::vector<AlgebraPresentation> out;
    for (Flavor f : {Flavor::GL, Flavor::SL})
        for (const char* n : {"oq", "oq_frt", "dq", "dq_prime"}) out.push_back(build_named(n, f));
    return out;
}

NcPoly nf_of(const AlgebraPresentation& p, const std::string& s) { return p.nf(p.parse(s)); }

}  // namespace

TEST_CASE("R-matrix") {
    for (Flavor f : {Flavor::GL, Flavor::SL}) {
        CHECK(all_zero(yang_baxter_residual(f)));
        ScalarMat r = r_matrix(f).mat();
        ScalarMat id = scalar_mul(r, scalar_inverse(r));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(id[i][j] == Scalar(i == j ? 1 : 0));
    }
    ScalarMat gl = r_matrix(Flavor::GL).mat(), sl = r_matrix(Flavor::SL).mat();
    CHECK(gl[0][0] == Scalar::q_pow(1));
    CHECK(gl[2][1] == Scalar::q_pow(1) - Scalar::q_pow(-1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(sl[i][j] == Scalar::v_pow(-1) * gl[i][j]);
}

TEST_CASE("O_q(Mat2)") {
    AlgebraPresentation gl = build_oq(Flavor::GL);
    CHECK(gl.alphabet.size() == 4);
    CHECK(gl.alphabet.display(gl.alphabet.index("a12")) == "a^1_2");
    CHECK(nf_of(gl, "[a22, a11]").is_zero());
    CHECK(nf_of(gl, "[a12, a11] + <-2>*a12*a22").is_zero());
    CHECK(nf_of(gl, "a11*a22") == gl.parse("a22*a11"));
    NcPoly det = detq(gl.block(0, BlockKind::A));
    CHECK(det == gl.parse("a11*a22 - q^2*a12*a21"));
    for (const char* x : {"a11", "a12", "a21", "a22"}) CHECK(gl.nf(det * gl.gen(x) - gl.gen(x) * det).is_zero());
    CHECK(is_zero_matrix(check_matrix_relation(gl, MatrixEquation::RE, gl.block(0, BlockKind::A))));

    AlgebraPresentation sl = build_oq(Flavor::SL);
    CHECK(sl.epsilon == 1);
    CHECK(sl.nf(detq(sl.block(0, BlockKind::A))) == NcPoly(Scalar(1)));
    CHECK(!sl.rewrite.homogeneous());
    CHECK(is_zero_matrix(check_matrix_relation(sl, MatrixEquation::RE, sl.block(0, BlockKind::A))));
}

TEST_CASE("O'_q(Mat2)") {
    AlgebraPresentation p = build_oq_frt(Flavor::GL);
    CHECK(p.nf(commutator(p.gen("f11"), p.gen("f12"), Scalar::q_pow(1))).is_zero());
    CHECK(nf_of(p, "[f11, f22]").is_zero());
    NcPoly det = detq(p.block(0, BlockKind::F));
    CHECK(det == p.parse("f11*f22 - q*f12*f21"));
    for (const char* x : {"f11", "f12", "f21", "f22"}) CHECK(p.nf(det * p.gen(x) - p.gen(x) * det).is_zero());
    CHECK(is_zero_matrix(check_matrix_relation(p, MatrixEquation::FRT, p.block(0, BlockKind::F))));
    CHECK_THROWS_AS(check_matrix_relation(p, MatrixEquation::RE, p.block(0, BlockKind::F)), BlockMismatch);
}

TEST_CASE("D_q(Mat2)") {
    AlgebraPresentation gl = build_dq(Flavor::GL);
    CHECK(gl.alphabet.size() == 8);
    CHECK(nf_of(gl, "[d21, a22]").is_zero());
    const Block& A = gl.block(0, BlockKind::A);
    const Block& D = gl.block(0, BlockKind::D);
    CHECK(is_zero_matrix(check_matrix_relation(gl, MatrixEquation::DQ, D, &A)));
    CHECK(is_zero_matrix(check_matrix_relation(gl, MatrixEquation::RE, D)));
    NcPoly da = detq(A), dd = detq(D);
    CHECK(check_q_commutation(gl, da, {{&A, Scalar(1)}, {&D, Scalar::q_pow(2)}}).ok);
    // d * det(A) = q^-2 det(A) * d
    for (const char* x : {"d11", "d12", "d21", "d22"})
        CHECK(gl.nf(gl.gen(x) * da - Scalar::q_pow(-2) * (da * gl.gen(x))).is_zero());
    CHECK(check_q_commutation(gl, dd, {{&D, Scalar(1)}, {&A, Scalar::q_pow(-2)}}).ok);

    AlgebraPresentation sl = build_dq(Flavor::SL);
    const Block& As = sl.block(0, BlockKind::A);
    const Block& Ds = sl.block(0, BlockKind::D);
    CHECK(is_zero_matrix(check_matrix_relation(sl, MatrixEquation::DQ, Ds, &As)));
    for (const Block* b : {&As, &Ds}) {
        CHECK(check_q_commutation(sl, detq(*b), {{&As, Scalar(1)}, {&Ds, Scalar(1)}}).ok);
        CHECK(sl.nf(detq(*b)) == NcPoly(Scalar(1)));
    }
}

TEST_CASE("D'_q(Mat2)") {
    AlgebraPresentation gl = build_dq_prime(Flavor::GL);
    const Block& A = gl.block(0, BlockKind::A);
    const Block& F = gl.block(0, BlockKind::F);
    for (const char* f : {"f11", "f12"})
        CHECK(gl.nf(commutator(gl.gen(f), gl.gen("a12"), Scalar::q_pow(1))).is_zero());
    CHECK(is_zero_matrix(check_matrix_relation(gl, MatrixEquation::DQ_PRIME, F, &A)));
    NcPoly da = detq(A);
    for (const char* x : {"f11", "f12", "f21", "f22"})
        CHECK(gl.nf(gl.gen(x) * da - Scalar::q_pow(2) * (da * gl.gen(x))).is_zero());

    AlgebraPresentation sl = build_dq_prime(Flavor::SL);
    for (const char* f : {"f21", "f22"})
        CHECK(sl.nf(commutator(sl.gen(f), sl.gen("a22"), Scalar::q_pow(1))).is_zero());
    CHECK(is_zero_matrix(
        check_matrix_relation(sl, MatrixEquation::DQ_PRIME, sl.block(0, BlockKind::F), &sl.block(0, BlockKind::A))));
}

TEST_CASE("every builtin: defining equations, confluence, both oracles") {
    for (const auto& p : builtins()) {
        CAPTURE(p.name);
        CAPTURE(flavor_name(p.flavor));
        for (const auto& e : defining_equations(p)) {
            const Block* second = e.second < 0 ? nullptr : &p.blocks[e.second];
            CHECK(is_zero_matrix(check_matrix_relation(p, e.eq, p.blocks[e.first], second)));
        }
        CHECK(check_confluence(p.rewrite, 4).empty());
        std::size_t m = p.alphabet.size();
        std::size_t top = 4;
        auto lin = graded_dimensions_linear(p.reduced, m, top);
        for (std::size_t n = 0; n <= top; ++n) CHECK(lin[n] == graded_dimension_rewrite(p.rewrite, n));
    }
}

TEST_CASE("PBW dimensions") {
    // GL: C(n+m-1, m-1); SL: one relation of degree 2 per block removed from the count
    AlgebraPresentation oq = build_oq(Flavor::GL), dq = build_dq(Flavor::GL);
    std::vector<std::size_t> oq_dims{1, 4, 10, 20, 35}, dq_dims{1, 8, 36, 120, 330};
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(graded_dimension_rewrite(oq.rewrite, n) == oq_dims[n]);
        CHECK(graded_dimension_rewrite(dq.rewrite, n) == dq_dims[n]);
    }
    AlgebraPresentation sl = build_oq(Flavor::SL);
    std::vector<std::size_t> sl_dims{1, 4, 9, 16, 25};
    for (std::size_t n = 0; n <= 4; ++n) CHECK(graded_dimension_rewrite(sl.rewrite, n) == sl_dims[n]);
}

TEST_CASE("braided products") {
    CHECK_THROWS_AS(build_Agr({0, 1}, Flavor::GL), InvalidPattern);
    CHECK_THROWS_AS(build_Agr({1, 0}, Flavor::GL), InvalidPattern);

    AlgebraPresentation dq = build_dq(Flavor::GL);
    AlgebraPresentation a11 = build_Agr({1, 1}, Flavor::GL);
    CHECK(a11.reduced == dq.reduced);

    AlgebraPresentation a21 = build_Agr({2, 1}, Flavor::GL);
    CHECK(a21.alphabet.size() == 16);
    CHECK(a21.alphabet.display(a21.alphabet.index("a12_1")) == "a^1_2[1]");
    // restricted to factor 0 the rules are those of D_q
    std::size_t same = 0;
    for (const auto& r : a21.reduced) {
        bool first_factor = true;
        for (const auto& [w, c] : r.terms())
            for (Letter x : w) first_factor &= x < 8;
        if (!first_factor) continue;
        ++same;
        CHECK(std::find(dq.reduced.begin(), dq.reduced.end(), r) != dq.reduced.end());
    }
    CHECK(same == dq.reduced.size());
    CHECK(a21.nf(commutator(a21.gen("a12_1"), a21.gen("a11"))).is_zero());

    // the printed table for two RE blocks: count the rows that hold
    const Block& later = a21.block(1, BlockKind::A);
    const Block& earlier = a21.block(0, BlockKind::A);
    std::size_t hold = 0;
    for (const auto& r : braided_printed_relations(later, earlier)) hold += a21.nf(r).is_zero();
    CHECK(hold == 4);
    CHECK(is_zero_matrix(check_matrix_relation(a21, MatrixEquation::BRAID, later, &earlier)));

    AlgebraPresentation a12 = build_Agr({1, 2}, Flavor::GL);
    CHECK(a12.alphabet.size() == 16);
    const Block& ft = a12.block(1, BlockKind::F);
    const Block& a = a12.block(0, BlockKind::A);
    for (const auto& r : braided_frt_printed_relations(ft, a)) CHECK(a12.nf(r).is_zero());
    for (const char* f : {"f11_1", "f12_1"})
        CHECK(a12.nf(commutator(a12.gen(f), a12.gen("a21"), Scalar::q_pow(-1))).is_zero());
    CHECK(graded_dimension_rewrite(a12.rewrite, 2) == 136);
    CHECK(graded_dimension_linear(a12.reduced, 16, 2) == 136);
    CHECK(check_confluence(a12.rewrite, 3).empty());
    for (const auto& e : defining_equations(a12)) {
        const Block* second = e.second < 0 ? nullptr : &a12.blocks[e.second];
        CHECK(is_zero_matrix(check_matrix_relation(a12, e.eq, a12.blocks[e.first], second)));
    }
}

TEST_CASE("two D'_q factors") {
    AlgebraPresentation p = build_Agr({0, 3}, Flavor::GL);
    CHECK(p.alphabet.size() == 16);
    CHECK(check_confluence(p.rewrite, 3).empty());
    CHECK(graded_dimension_rewrite(p.rewrite, 2) == 136);
}

TEST_CASE("adjoin_inverse") {
    AlgebraPresentation dq = build_dq(Flavor::GL);
    NcPoly da = detq(dq.block(0, BlockKind::A));
    Localized loc = adjoin_inverse(dq, da, "detA_inv");
    const AlgebraPresentation& p = loc.pres;
    NcPoly u = NcPoly::gen(loc.inverse);
    CHECK(p.nf(da * u) == NcPoly(Scalar(1)));
    CHECK(p.nf(u * da) == NcPoly(Scalar(1)));
    for (const char* x : {"d11", "d12", "d21", "d22"})
        CHECK(p.nf(p.gen(x) * u - Scalar::q_pow(2) * (u * p.gen(x))).is_zero());
    for (const char* x : {"a11", "a12", "a21", "a22"}) CHECK(p.nf(p.gen(x) * u - u * p.gen(x)).is_zero());
    // completion would be infinite (a12 a21 x u for every x); failures all involve u
    for (const auto& o : check_confluence(p.rewrite, 4)) CHECK(o.word.find(loc.inverse) != Word::npos);

    AlgebraPresentation oq = build_oq(Flavor::GL);
    CHECK_THROWS_AS(adjoin_inverse(oq, oq.gen("a12"), "x"), NotLocalizable);
}
