#include "qskein/homology.hpp"

#include <algorithm>
#include <bit>

namespace qs {

namespace {

NcPoly one() { return NcPoly(Scalar(1)); }
NcPoly sc(const Scalar& s) { return NcPoly(s); }

PolyMat zeros(int rows, int cols) { return PolyMat(rows, std::vector<NcPoly>(cols)); }

void gl_tables(KoszulComplex& kc, const Block& a) {
    const NcPoly a11 = a.entry(0, 0), a12 = a.entry(0, 1), a21 = a.entry(1, 0), a22 = a.entry(1, 1);
    auto q = [](long k) { return Scalar::q_pow(k); };
    const Scalar b2 = bracket(2), bm2 = bracket(-2);
    const bool fix = kc.table == KoszulTable::Corrected;

    PolyMat m1 = {{a22 - one()}, {a11 - one()}, {a12}, {a21}};

    const NcPoly u4 = q(-2) * b2 * a22 - (a11 - one());
    PolyMat m2 = zeros(6, 4);
    m2[0] = {a11 - one(), -(a22 - one()), {}, {}};
    m2[1] = {a12, {}, -(q(2) * (a22 - sc(q(-2)))), {}};
    m2[2] = {a21, {}, {}, -(q(-2) * (a22 - sc(q(2))))};
    m2[3] = {{}, a12, u4, {}};
    m2[4] = {{}, a21, {}, fix ? q(-2) * bm2 * a22 - (a11 - one()) : -(q(-2) * bm2 * a22 + (a11 - one()))};
    m2[5] = {bm2 * a22, -(bm2 * a22), a21, -a12};

    PolyMat m3 = zeros(4, 6);
    m3[0] = {a12, u4, {}, q(2) * (a22 - sc(q(-2))), {}, {}};
    m3[1] = {a21, {}, fix ? q(-2) * bm2 * a22 - (a11 - one()) : -(q(-2) * bm2 * a22 + (a11 - one())), {},
             q(-2) * (a22 - sc(q(2))), {}};
    m3[2] = {q(-2) * b2 * a22, a21, -a12, {}, {}, a22 - one()};
    m3[3] = {fix ? q(-2) * b2 * a22 : q(2) * bm2 * a22, {}, {}, a21, -a12, a11 - one()};

    PolyMat m4 = {{a21, -a12, a11 - one(), -(a22 - one())}};

    kc.ranks = {1, 4, 6, 4, 1};
    kc.names = {{"1"}, {"x1", "x2", "x3", "x4"}, {"r1", "r2", "r3", "r4", "r5", "r6"}, {"c1", "c2", "c3", "c4"}, {"k"}};
    kc.diff = {m1, m2, m3, m4};
}

void sl_tables(KoszulComplex& kc, const Block& a) {
    const NcPoly a12 = a.entry(0, 1), a21 = a.entry(1, 0), a22 = a.entry(1, 1);
    auto q = [](long k) { return Scalar::q_pow(k); };
    PolyMat m1 = {{a22 - one()}, {a12}, {a21}};
    PolyMat m2 = zeros(3, 3);
    m2[0] = {a12, -(q(2) * (a22 - sc(q(-2)))), {}};
    m2[1] = {a21, {}, -(q(-2) * (a22 - sc(q(2))))};
    m2[2] = {-(bracket(-2) * (a22 + one())), -(q(2) * a21), a12};
    PolyMat m3 = {{-(q(2) * a21), a12, a22 - one()}};
    kc.ranks = {1, 3, 3, 1};
    kc.names = {{"1"}, {"x1", "x2", "x3"}, {"r1", "r2", "r3"}, {"c"}};
    kc.diff = {m1, m2, m3};
}

}  // namespace

KoszulComplex build_koszul(PresentationPtr ambient, int factor, Flavor flavor, KoszulTable table) {
    if (flavor != ambient->flavor) throw BlockMismatch("complex flavor differs from the ambient flavor");
    if (flavor == Flavor::SL && !ambient->det_specialized) throw BlockMismatch("SL complex needs det = 1");
    if (!ambient->has_block(factor, BlockKind::A)) throw BlockMismatch("factor has no A block");
    KoszulComplex kc;
    kc.ambient = ambient;
    kc.flavor = flavor;
    kc.table = table;
    for (std::size_t i = 0; i < ambient->blocks.size(); ++i)
        if (ambient->blocks[i].factor == factor && ambient->blocks[i].kind == BlockKind::A) kc.block = static_cast<int>(i);
    const Block& a = ambient->blocks[kc.block];
    if (flavor == Flavor::GL)
        gl_tables(kc, a);
    else
        sl_tables(kc, a);
    return kc;
}

std::vector<PolyMat> check_d_squared(const KoszulComplex& kc) {
    std::vector<PolyMat> out;
    for (int p = 2; p <= kc.length(); ++p) {
        const PolyMat& outer = kc.diff[p - 1];
        const PolyMat& inner = kc.diff[p - 2];
        PolyMat r = zeros(kc.ranks[p], kc.ranks[p - 2]);
        for (int i = 0; i < kc.ranks[p]; ++i)
            for (int l = 0; l < kc.ranks[p - 2]; ++l) {
                NcPoly s;
                for (int j = 0; j < kc.ranks[p - 1]; ++j) s += inner[j][l] * outer[i][j];
                r[i][l] = kc.ambient->nf(s);
            }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t d_squared_nonzero(const KoszulComplex& kc) {
    std::size_t n = 0;
    for (const auto& m : check_d_squared(kc)) n += count_nonzero(m);
    return n;
}

namespace {

using CPoly = std::map<Word, mpq_class>;
using Wedge = std::map<int, CPoly>;

CPoly commutative_at_one(const NcPoly& p) {
    CPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word s = w;
        std::sort(s.begin(), s.end());
        out[s] += specialize(c, 1);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void add_scaled(CPoly& y, const CPoly& x, int sign) {
    for (const auto& [w, c] : x) {
        y[w] += sign * c;
        if (y[w] == 0) y.erase(w);
    }
}

void add_scaled(Wedge& y, int mask, const CPoly& x, int sign) {
    add_scaled(y[mask], x, sign);
    if (y[mask].empty()) y.erase(mask);
}

Wedge classical_d(int mask, const std::vector<CPoly>& y) {
    Wedge out;
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(y.size()); ++i)
        if (mask >> i & 1) s.push_back(i);
    const int k = static_cast<int>(s.size());
    for (int t = 1; t <= k; ++t) add_scaled(out, mask & ~(1 << s[t - 1]), y[s[t - 1]], (k - t) % 2 ? -1 : 1);
    return out;
}

Wedge negated(Wedge w) {
    for (auto& [m, p] : w)
        for (auto& [k, c] : p) c = -c;
    return w;
}

}  // namespace

ClassicalMatch match_classical(const KoszulComplex& kc) {
    ClassicalMatch res;
    const Block& a = kc.ambient->blocks[kc.block];
    std::vector<NcPoly> gens;
    if (kc.flavor == Flavor::GL)
        gens = {a.entry(1, 1) - one(), a.entry(0, 0) - one(), a.entry(0, 1), a.entry(1, 0)};
    else
        gens = {a.entry(1, 1) - one(), a.entry(0, 1), a.entry(1, 0)};
    std::vector<CPoly> y;
    for (const auto& g : gens) y.push_back(commutative_at_one(g));
    const int n = static_cast<int>(y.size());

    res.subset = {{0}};
    res.sign = {{1}};
    for (int p = 1; p <= kc.length(); ++p) {
        std::vector<int> sub, sgn;
        std::vector<bool> used(1u << n, false);
        for (int i = 0; i < kc.ranks[p]; ++i) {
            Wedge w;
            for (int j = 0; j < kc.ranks[p - 1]; ++j)
                add_scaled(w, res.subset[p - 1][j], commutative_at_one(kc.diff[p - 1][i][j]), res.sign[p - 1][j]);
            int found = -1, fsign = 0;
            for (int mask = 0; mask < (1 << n) && found < 0; ++mask) {
                if (std::popcount(static_cast<unsigned>(mask)) != p || used[mask]) continue;
                Wedge d = classical_d(mask, y);
                if (d == w) found = mask, fsign = 1;
                else if (negated(d) == w) found = mask, fsign = -1;
            }
            if (found < 0) {
                res.mismatches.push_back(kc.names[p][i]);
                sub.push_back(0);
                sgn.push_back(1);
                continue;
            }
            used[found] = true;
            sub.push_back(found);
            sgn.push_back(fsign);
        }
        res.subset.push_back(std::move(sub));
        res.sign.push_back(std::move(sgn));
    }
    res.ok = res.mismatches.empty();
    return res;
}

namespace {

void check_inverse_image_input(const KoszulComplex& kc, const TruncatedModule& M) {
    if (M.trunc() < 3) throw TruncationTooSmall("inverse image needs truncation degree >= 3");
    if (!(M.ambient().alphabet == kc.ambient->alphabet)) throw BlockMismatch("module over a different algebra");
    if (M.side() == Side::Right && !M.relations().empty())
        throw std::invalid_argument("inverse image needs a left module");
}

using ChainVec = SparseVec<Word>;

ChainVec chain_basis(int i, const Word& w) { return ChainVec{{Word(1, static_cast<Letter>(i)) + w, Scalar(1)}}; }

// The p-th boundary map on F_N C_p, rows (i, w) in degree order of w.
struct BoundaryData {
    std::vector<std::size_t> rank_by_deg;  // rank on F_n is rank_by_deg[n - p]
    std::vector<ChainVec> images;          // spans B_{p-1}(F_N)
    std::vector<std::pair<int, ChainVec>> cycles;  // (word degree, cycle), degree order
};

BoundaryData boundary(const KoszulComplex& kc, const TruncatedModule& M, int p) {
    const int N = M.trunc();
    BoundaryData bd;
    bd.rank_by_deg.assign(static_cast<std::size_t>(std::max(N - p + 1, 0)), 0);
    Echelon<Word> ech(true);
    std::vector<std::pair<int, Word>> rows;
    const auto& basis = M.basis();
    std::size_t idx = 0;
    for (int d = 0; d <= N - p; ++d) {
        for (; idx < basis.size() && static_cast<int>(basis[idx].size()) == d; ++idx)
            for (int i = 0; i < kc.ranks[p]; ++i) {
                ChainVec row;
                for (int j = 0; j < kc.ranks[p - 1]; ++j) {
                    const NcPoly& e = kc.diff[p - 1][i][j];
                    if (e.is_zero()) continue;
                    // left module: entries multiply from the left
                    for (auto& [w, c] : M.reduce(e * NcPoly::word(basis[idx])))
                        row.emplace(Word(1, static_cast<Letter>(j)) + w, c);
                }
                bd.images.push_back(row);
                rows.emplace_back(i, basis[idx]);
                std::map<int, Scalar> combo;
                if (!ech.insert(std::move(row), static_cast<int>(rows.size()) - 1, &combo)) {
                    ChainVec z;
                    for (const auto& [r, c] : combo) sparse_axpy(z, c, chain_basis(rows[r].first, rows[r].second));
                    bd.cycles.emplace_back(d, std::move(z));
                }
            }
        bd.rank_by_deg[d] = ech.rank();
    }
    return bd;
}

// dim Z_p(F_n) / (Z_p(F_n) & B_p(F_N)) for n = 0..N
std::vector<std::size_t> stable_dims(const std::vector<std::pair<int, ChainVec>>& cycles,
                                     const std::vector<ChainVec>* bounds, int p, int N) {
    Echelon<Word> ech;
    if (bounds)
        for (const auto& b : *bounds) ech.insert(b);
    std::vector<std::size_t> out;
    std::size_t k = 0, fresh = 0;
    for (int n = 0; n <= N; ++n) {
        for (; k < cycles.size() && cycles[k].first <= n - p; ++k) fresh += ech.insert(cycles[k].second);
        out.push_back(fresh);
    }
    return out;
}

InverseImage assemble(const KoszulComplex& kc, const TruncatedModule& M, const std::vector<BoundaryData>& bd,
                      bool parallel) {
    InverseImage out;
    const int N = M.trunc(), L = kc.length();
    out.trunc = N;
    out.ranks = kc.ranks;
    auto rank_at = [&](int p, int n) -> std::size_t {
        if (p < 1 || p > L || n - p < 0) return 0;
        return bd[p].rank_by_deg[n - p];
    };
    for (int p = 0; p <= L; ++p) {
        std::vector<std::size_t> h;
        for (int n = 0; n <= N; ++n) {
            std::size_t dimc = n - p < 0 ? 0 : kc.ranks[p] * M.dim_upto(n - p);
            h.push_back(dimc - rank_at(p, n) - rank_at(p + 1, n));
        }
        out.dims.push_back(std::move(h));
    }
    // position 0: every chain is a cycle
    std::vector<std::pair<int, ChainVec>> c0;
    for (const Word& w : M.basis()) c0.emplace_back(static_cast<int>(w.size()), chain_basis(0, w));
    out.stable_dims.resize(L + 1);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int p = 0; p <= L; ++p)
        out.stable_dims[p] = stable_dims(p == 0 ? c0 : bd[p].cycles, p < L ? &bd[p + 1].images : nullptr, p, N);
    return out;
}

}  // namespace

InverseImage truncated_inverse_image(const KoszulComplex& kc, const TruncatedModule& M) {
    check_inverse_image_input(kc, M);
    const int L = kc.length();
    std::vector<BoundaryData> bd(L + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int p = 1; p <= L; ++p) bd[p] = boundary(kc, M, p);
    return assemble(kc, M, bd, true);
}

InverseImage truncated_inverse_image_serial(const KoszulComplex& kc, const TruncatedModule& M) {
    check_inverse_image_input(kc, M);
    const int L = kc.length();
    std::vector<BoundaryData> bd(L + 1);
    for (int p = 1; p <= L; ++p) bd[p] = boundary(kc, M, p);
    return assemble(kc, M, bd, false);
}

namespace {

SparseVec<Word> tagged(int m, const NcPoly& p) {
    SparseVec<Word> out;
    for (const auto& [w, c] : p.terms()) out.emplace(Word(1, static_cast<Letter>(m)) + w, c);
    return out;
}

}  // namespace

TwistedLeftAction attach_twisted_action(const KoszulComplex& kc, const std::vector<NcPoly>& generators) {
    const auto& pres = *kc.ambient;
    const int factor = pres.blocks[kc.block].factor;
    std::vector<NcPoly> span{one()};
    for (const auto& b : pres.blocks)
        if (b.factor != factor)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) span.push_back(b.entry(i, j));
    const int K = static_cast<int>(span.size());
    const int L = kc.length();

    TwistedLeftAction act;
    act.generators = generators;
    for (const auto& g : generators) {
        std::vector<PolyMat> tab;
        tab.push_back({{g}});
        for (int p = 1; p <= L; ++p) {
            const PolyMat& M = kc.diff[p - 1];
            const PolyMat& prev = tab.back();
            const int rp = kc.ranks[p], rq = kc.ranks[p - 1];
            Echelon<Word> ech(true);
            for (int j = 0; j < rp; ++j)
                for (int k = 0; k < K; ++k) {
                    SparseVec<Word> col;
                    for (int m = 0; m < rq; ++m)
                        for (auto& [w, c] : tagged(m, pres.nf(M[j][m] * span[k]))) col.emplace(w, c);
                    ech.insert(std::move(col), j * K + k);
                }
            PolyMat c = zeros(rp, rp);
            for (int i = 0; i < rp; ++i) {
                SparseVec<Word> target;
                for (int m = 0; m < rq; ++m) {
                    NcPoly s;
                    for (int l = 0; l < rq; ++l) s += prev[l][m] * M[i][l];
                    for (auto& [w, x] : tagged(m, pres.nf(s))) target.emplace(w, x);
                }
                auto sol = ech.solve(target);
                if (!sol) {
                    ++act.unsolved;
                    continue;
                }
                for (const auto& [tag, x] : *sol) c[i][tag / K] += x * span[tag % K];
            }
            // action then delta against delta then action
            for (int i = 0; i < rp; ++i)
                for (int m = 0; m < rq; ++m) {
                    NcPoly s;
                    for (int j = 0; j < rp; ++j) s += M[j][m] * c[i][j];
                    for (int l = 0; l < rq; ++l) s -= prev[l][m] * M[i][l];
                    if (!pres.nf(s).is_zero()) ++act.residual_nonzero;
                }
            tab.push_back(std::move(c));
        }
        act.tables.push_back(std::move(tab));
    }
    return act;
}

TwistedLeftAction attach_twisted_action(const KoszulComplex& kc, const std::vector<int>& external_blocks) {
    const auto& pres = *kc.ambient;
    const int factor = pres.blocks[kc.block].factor;
    std::vector<NcPoly> gens;
    for (int bi : external_blocks) {
        const Block& b = pres.blocks.at(static_cast<std::size_t>(bi));
        if (b.factor == factor) throw BlockMismatch("external block belongs to the resolved factor");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) gens.push_back(b.entry(i, j));
    }
    return attach_twisted_action(kc, gens);
}

PolyMat printed_twisted_rows(const Block& ext) {
    const NcPoly b11 = ext.entry(0, 0), b12 = ext.entry(0, 1);
    const Scalar t = bracket(-2);
    PolyMat m = zeros(4, 4);
    m[0][0] = b11;
    m[0][3] = -(t * b12);
    m[1][1] = b11;
    m[1][3] = t * b12;
    m[2][2] = b11;
    m[2][1] = -(t * b12);
    m[2][0] = t * b12;
    m[3][3] = b11;
    return m;
}

KoszulDual koszul_dual() {
    KoszulDual kd;
    for (int i = 1; i <= 4; ++i) kd.alphabet.add("y" + std::to_string(i));
    auto y = [&](int i) { return NcPoly::gen(static_cast<Letter>(i - 1)); };
    auto anti = [&](int i, int j, const Scalar& lam) { return y(i) * y(j) + lam * (y(j) * y(i)); };
    const Scalar t = bracket(-2);
    kd.relations = {
        y(1) * y(1),
        y(2) * y(2),
        y(3) * y(3),
        y(4) * y(4) + t * (y(1) * y(2)),
        anti(2, 1, 1),
        anti(3, 1, 1),
        anti(4, 1, Scalar::q_pow(2)) + t * (y(1) * y(3)),
        anti(3, 2, 1),
        anti(4, 2, Scalar::q_pow(-2)) - (t * Scalar::q_pow(-2)) * (y(2) * y(3)),
        anti(4, 3, 1) - t * (y(1) * y(2)),
    };
    RewriteSystem sys = orient(interreduce(kd.relations), kd.alphabet);
    kd.confluent = check_confluence(sys, 5).empty();
    for (std::size_t n = 0; n <= 5; ++n) {
        kd.dims.push_back(graded_dimension_rewrite(sys, n));
        kd.total += kd.dims.back();
    }
    return kd;
}

}  // namespace qs
