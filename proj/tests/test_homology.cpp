#include "qskein/homology.hpp"

#include "doctest.h"

using namespace qs;

namespace {

using H = std::vector<std::size_t>;

PresentationPtr shared(AlgebraPresentation p) { return std::make_shared<const AlgebraPresentation>(std::move(p)); }

bool all_zero(const std::vector<PolyMat>& ms) {
    for (const auto& m : ms)
        if (count_nonzero(m)) return false;
    return true;
}

}  // namespace

TEST_CASE("complex shapes and printed entries") {
    auto oq = shared(build_oq(Flavor::GL));
    auto kc = build_koszul(oq, 0, Flavor::GL);
    CHECK(kc.ranks == std::vector<int>{1, 4, 6, 4, 1});
    for (int p = 1; p <= kc.length(); ++p) {
        REQUIRE(kc.diff[p - 1].size() == static_cast<std::size_t>(kc.ranks[p]));
        for (const auto& row : kc.diff[p - 1]) {
            CHECK(row.size() == static_cast<std::size_t>(kc.ranks[p - 1]));
            for (const auto& e : row) CHECK(e.degree() <= 2);
        }
    }
    CHECK(kc.diff[0][0][0] == oq->parse("a22 - 1"));

    auto oqs = shared(build_oq(Flavor::SL));
    auto ks = build_koszul(oqs, 0, Flavor::SL);
    CHECK(ks.ranks == std::vector<int>{1, 3, 3, 1});
    // delta(c) = -r1 q^2 a21 + r2 a12 + r3 (a22 - 1)
    CHECK(ks.diff[2][0][0] == oqs->parse("-q^2*a21"));
    CHECK(ks.diff[2][0][1] == oqs->parse("a12"));
    CHECK(ks.diff[2][0][2] == oqs->parse("a22 - 1"));

    CHECK_THROWS_AS(build_koszul(oq, 0, Flavor::SL), BlockMismatch);
    CHECK_THROWS_AS(build_koszul(oq, 1, Flavor::GL), BlockMismatch);
    auto oqs_raw = shared(build_oq(Flavor::SL, {false}));
    CHECK_THROWS_AS(build_koszul(oqs_raw, 0, Flavor::SL), BlockMismatch);
}

TEST_CASE("delta squared") {
    for (const char* name : {"oq", "dq"}) {
        auto gl = shared(build_named(name, Flavor::GL));
        CHECK(all_zero(check_d_squared(build_koszul(gl, 0, Flavor::GL))));
        auto sl = shared(build_named(name, Flavor::SL));
        auto sq = check_d_squared(build_koszul(sl, 0, Flavor::SL));
        REQUIRE(sq.size() == 2);
        CHECK(sq[0].size() == 3);
        CHECK(sq[0][0].size() == 1);
        CHECK(all_zero(sq));
    }
    // the printed GL table leaves nonzero composites
    auto oq = shared(build_oq(Flavor::GL));
    auto printed = build_koszul(oq, 0, Flavor::GL, KoszulTable::Printed);
    CHECK(d_squared_nonzero(printed) > 0);
    auto sq = check_d_squared(build_koszul(oq, 0, Flavor::GL));
    CHECK(sq[0].size() == 6);
    CHECK(sq[1].size() == 4);
    CHECK(sq[2].size() == 1);
}

TEST_CASE("classical limit") {
    auto oq = shared(build_oq(Flavor::GL));
    auto m = match_classical(build_koszul(oq, 0, Flavor::GL));
    CHECK(m.ok);
    // r1 = e1^e2, r2 = e1^e3, r6 = e3^e4
    CHECK(m.subset[2][0] == 0b0011);
    CHECK(m.subset[2][1] == 0b0101);
    CHECK(m.subset[2][5] == 0b1100);
    CHECK(m.subset[4][0] == 0b1111);
    // the printed table already has the right q = 1 limit
    CHECK(match_classical(build_koszul(oq, 0, Flavor::GL, KoszulTable::Printed)).ok);
    auto oqs = shared(build_oq(Flavor::SL));
    CHECK(match_classical(build_koszul(oqs, 0, Flavor::SL)).ok);
}

TEST_CASE("inverse image of the free module") {
    for (Flavor f : {Flavor::GL, Flavor::SL}) {
        auto oq = shared(build_oq(f));
        auto kc = build_koszul(oq, 0, f);
        auto ii = truncated_inverse_image(kc, build_module(oq, {}, 5));
        for (int p = 1; p <= kc.length(); ++p)
            for (int n = 0; n <= 3; ++n) CHECK(ii.stable_dims[p][n] == 0);
        // the end position is k = O_q / (A - I) O_q
        for (int n = 0; n <= 3; ++n) CHECK(ii.stable_dims[0][n] == 1);
        CHECK(ii.stable(0) == 1);
    }
    // GL filtration is strict: raw and stable agree below the top
    auto gl = shared(build_oq(Flavor::GL));
    auto raw = truncated_inverse_image(build_koszul(gl, 0, Flavor::GL), build_module(gl, {}, 5));
    for (int p = 0; p <= 4; ++p)
        for (int n = 0; n <= 3; ++n) CHECK(raw.dims[p][n] == raw.stable_dims[p][n]);
    // SL: a11^n is only killed one degree up, so raw H_0(F_n) has an extra class
    auto sl = shared(build_oq(Flavor::SL));
    auto rs = truncated_inverse_image(build_koszul(sl, 0, Flavor::SL), build_module(sl, {}, 5));
    CHECK(rs.dims[0][3] == 2);
    CHECK(rs.stable_dims[0][3] == 1);
    auto dq = shared(build_dq(Flavor::GL));
    auto kc = build_koszul(dq, 0, Flavor::GL);
    auto ii = truncated_inverse_image(kc, build_module(dq, {}, 4));
    auto tm = build_module(dq, counit_ideal(dq->blocks[0]), 4);
    for (int n = 0; n <= 2; ++n) {
        CHECK(ii.dims[0][n] == tm.dim_upto(n));
        for (int p = 1; p <= 4; ++p) CHECK(ii.dims[p][n] == 0);
    }
    CHECK(ii.stable(0) == tm.dim_upto(2));
    auto serial = truncated_inverse_image_serial(kc, build_module(dq, {}, 4));
    CHECK(serial.dims == ii.dims);
    CHECK(serial.stable_dims == ii.stable_dims);
}

TEST_CASE("inverse image edge cases") {
    auto dq = shared(build_dq(Flavor::GL));
    auto kc = build_koszul(dq, 0, Flavor::GL);
    auto zero = truncated_inverse_image(kc, build_module(dq, {NcPoly(Scalar(1))}, 3, Side::Left));
    for (const auto& row : zero.dims)
        for (auto d : row) CHECK(d == 0);
    CHECK_THROWS_AS(truncated_inverse_image(kc, build_module(dq, {}, 2)), TruncationTooSmall);
    CHECK_THROWS_AS(truncated_inverse_image(kc, build_module(dq, counit_ideal(dq->blocks[0]), 3, Side::Right)),
                    std::invalid_argument);
}

TEST_CASE("last position contains the weight kernel") {
    auto dq = shared(build_dq(Flavor::GL));
    auto kc = build_koszul(dq, 0, Flavor::GL);
    auto tm = build_module(dq, counit_ideal(dq->blocks[0]), 5, Side::Left);
    auto ii = truncated_inverse_image(kc, tm);
    auto wk = weight_kernel(tm, dq->blocks[0]);
    REQUIRE(wk.level >= 1);
    // H_{-4}(F_{d+4}) = M0 & F_d
    CHECK(ii.dims[4][4] == wk.dims[0]);
    CHECK(ii.dims[4][5] == wk.dims[1]);
    CHECK(ii.dims[4][4] == 1);
}

TEST_CASE("classical homology at v = 1 on a commutative module") {
    // Over the free module the filtered complex at v = 1 is the classical Koszul
    // complex on four commuting variables: exact except H_0 = k.
    auto oq = shared(build_oq(Flavor::GL));
    auto kc = build_koszul(oq, 0, Flavor::GL);
    auto ii = truncated_inverse_image(kc, build_module(oq, {}, 4));
    // classical: dim F_n of the polynomial ring in 4 variables is C(n+4, 4)
    std::vector<std::size_t> c4{1, 5, 15, 35, 70};
    auto m = build_module(oq, {}, 4);
    for (int n = 0; n <= 4; ++n) CHECK(m.dim_upto(n) == c4[n]);
    // Euler characteristic: sum (-1)^p rank_p dim F_{n-p} = dim H_0 (= 1)
    for (int n = 0; n <= 4; ++n) {
        long chi = 0;
        for (int p = 0; p <= 4; ++p)
            if (n - p >= 0) chi += (p % 2 ? -1 : 1) * kc.ranks[p] * static_cast<long>(c4[n - p]);
        CHECK(chi == 1);
        CHECK(ii.dims[0][n] == 1);
    }
}

TEST_CASE("twisted action") {
    auto a21 = shared(build_Agr({2, 1}, Flavor::GL));
    auto kc = build_koszul(a21, 0, Flavor::GL);
    int ext = -1;
    for (std::size_t i = 0; i < a21->blocks.size(); ++i)
        if (a21->blocks[i].factor == 1 && a21->blocks[i].kind == BlockKind::A) ext = static_cast<int>(i);
    const Block& B = a21->blocks[ext];
    auto act = attach_twisted_action(kc, std::vector<NcPoly>{B.entry(0, 0), NcPoly(Scalar(1))});
    CHECK(act.unsolved == 0);
    CHECK(act.residual_nonzero == 0);
    const PolyMat& rows = act.tables[0][1];
    PolyMat printed = printed_twisted_rows(B);
    CHECK(rows[0] == printed[0]);
    CHECK(rows[2] == printed[2]);
    CHECK(rows[3] == printed[3]);
    // x2 row: the coefficient of x4 b~12 is q^-2 <-2>
    CHECK(rows[1][1] == B.entry(0, 0));
    CHECK(rows[1][3] == Scalar::q_pow(-2) * bracket(-2) * B.entry(0, 1));
    CHECK(rows[1] != printed[1]);
    // the unit acts as the identity
    for (int p = 0; p <= kc.length(); ++p)
        for (int i = 0; i < kc.ranks[p]; ++i)
            for (int j = 0; j < kc.ranks[p]; ++j)
                CHECK(act.tables[1][p][i][j] == NcPoly(Scalar(i == j ? 1 : 0)));
    auto all = attach_twisted_action(kc, std::vector<int>{ext, ext + 1});
    CHECK(all.unsolved == 0);
    CHECK(all.residual_nonzero == 0);
    CHECK_THROWS_AS(attach_twisted_action(kc, std::vector<int>{kc.block}), BlockMismatch);
}

TEST_CASE("Koszul dual") {
    auto kd = koszul_dual();
    CHECK(kd.relations.size() == 10);
    CHECK(kd.confluent);
    CHECK(kd.dims == H{1, 4, 6, 4, 1, 0});
    CHECK(kd.total == 16);
}
