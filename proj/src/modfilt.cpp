#include "qskein/modfilt.hpp"

#include <algorithm>
#include <cmath>

namespace qs {

const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holonomic: return "holonomic";
        case Verdict::NotHolonomic: return "not-holonomic";
        default: return "inconclusive";
    }
}

std::vector<std::vector<Word>> normal_words(const AlgebraPresentation& pres, int n) {
    std::vector<std::vector<Word>> out(1, {Word()});
    const std::size_t m = pres.alphabet.size();
    for (int d = 1; d <= n; ++d) {
        std::vector<Word> next;
        for (const Word& w : out.back())
            for (std::size_t x = 0; x < m; ++x) {
                Word nw = w;
                nw.push_back(static_cast<Letter>(x));
                if (pres.rewrite.match_ending(nw, nw.size()) < 0) next.push_back(std::move(nw));
            }
        std::sort(next.begin(), next.end(), DeglexLess());
        out.push_back(std::move(next));
    }
    return out;
}

TruncatedModule::TruncatedModule(PresentationPtr ambient, std::vector<NcPoly> relations, int N, Side side)
    : amb_(std::move(ambient)), rels_(std::move(relations)), N_(N), side_(side) {
    if (N < 0) throw std::invalid_argument("truncation degree must be >= 0");
    auto words = normal_words(*amb_, N);
    for (const auto& r0 : rels_) {
        NcPoly r = amb_->nf(r0);
        if (r.is_zero()) continue;
        const int room = N - r.degree();
        for (int d = 0; d <= room; ++d)
            for (const Word& w : words[d]) {
                NcPoly x = NcPoly::word(w);
                slice_.insert(amb_->nf(side_ == Side::Right ? r * x : x * r).terms());
            }
    }
    for (const auto& level : words)
        for (const Word& w : level)
            if (!slice_.has_pivot(w)) {
                pos_.emplace(w, basis_.size());
                basis_.push_back(w);
            }
}

TruncatedModule build_module(PresentationPtr ambient, std::vector<NcPoly> relations, int N, Side side) {
    return TruncatedModule(std::move(ambient), std::move(relations), N, side);
}

std::size_t TruncatedModule::dim_upto(int n) const {
    return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(),
                                                  [n](const Word& w) { return static_cast<int>(w.size()) <= n; }));
}

std::vector<std::size_t> TruncatedModule::hilbert() const {
    std::vector<std::size_t> h(static_cast<std::size_t>(N_) + 1, 0);
    for (const Word& w : basis_) ++h[w.size()];
    return h;
}

std::size_t TruncatedModule::index(const Word& w) const { return pos_.at(w); }

ModVec TruncatedModule::reduce(const NcPoly& p) const {
    NcPoly r = amb_->nf(p);
    if (r.degree() > N_) throw LeavesTruncation("degree " + std::to_string(r.degree()) + " above truncation");
    return slice_.reduce(r.terms());
}

ModVec TruncatedModule::act(const NcPoly& p, const ModVec& m) const {
    NcPoly sum;
    for (const auto& [w, c] : m) {
        NcPoly x = NcPoly::word(w, c);
        sum += side_ == Side::Left ? p * x : x * p;
    }
    return reduce(sum);
}

ModVec TruncatedModule::act(const NcPoly& p, const Word& basis_word) const {
    return act(p, ModVec{{basis_word, Scalar(1)}});
}

std::vector<NcPoly> counit_ideal(const Block& b) {
    std::vector<NcPoly> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.push_back(b.entry(i, j) - NcPoly(Scalar(i == j ? 1 : 0)));
    return out;
}

std::vector<std::size_t> module_hilbert_linear(const AlgebraPresentation& pres, const std::vector<NcPoly>& relations,
                                               int N, Side side) {
    const std::size_t m = pres.alphabet.size();
    std::vector<std::vector<Word>> words;
    for (int d = 0; d <= N; ++d) words.push_back(all_words(m, static_cast<std::size_t>(d)));
    std::vector<std::size_t> cum;
    std::size_t nwords = 0;
    for (int n = 0; n <= N; ++n) {
        nwords += words[n].size();
        Echelon<Word, DeglexLess> ech;
        for (const auto& r : pres.relations) {
            if (r.is_zero() || r.degree() > n) continue;
            const int room = n - r.degree();
            for (int lu = 0; lu <= room; ++lu)
                for (const Word& u : words[lu]) {
                    NcPoly ur = NcPoly::word(u) * r;
                    for (int lw = 0; lu + lw <= room; ++lw)
                        for (const Word& w : words[lw]) ech.insert((ur * NcPoly::word(w)).terms());
                }
        }
        for (const auto& r : relations) {
            if (r.is_zero() || r.degree() > n) continue;
            for (int lw = 0; lw <= n - r.degree(); ++lw)
                for (const Word& w : words[lw]) {
                    NcPoly x = NcPoly::word(w);
                    ech.insert((side == Side::Right ? r * x : x * r).terms());
                }
        }
        cum.push_back(nwords - ech.rank());
    }
    std::vector<std::size_t> h;
    for (std::size_t n = 0; n < cum.size(); ++n) h.push_back(cum[n] - (n ? cum[n - 1] : 0));
    return h;
}

GrowthReport gk_estimate(const std::vector<std::size_t>& hilbert, int target) {
    GrowthReport g;
    g.hilbert = hilbert;
    g.target = target;
    std::size_t run = 0;
    for (std::size_t h : hilbert) g.cumulative.push_back(run += h);
    const int N = static_cast<int>(hilbert.size()) - 1;
    g.window_lo = std::max(1, N / 2 + 1);
    g.window_hi = N;
    double logsum = 0;
    int logcount = 0;
    for (int n = g.window_lo; n <= g.window_hi; ++n) {
        const std::size_t c0 = g.cumulative[n - 1], c1 = g.cumulative[n];
        if (c0 == 0) continue;
        mpq_class r(static_cast<long>(c1), static_cast<long>(c0));
        r.canonicalize();
        g.per_degree.push_back(n * (r - 1));
        if (n >= 2 && c1 > 0) {
            logsum += std::log(static_cast<double>(c1) / static_cast<double>(c0)) /
                      std::log(static_cast<double>(n) / (n - 1));
            ++logcount;
        }
    }
    g.exponent = 0;
    for (const auto& d : g.per_degree) g.exponent += d;
    if (!g.per_degree.empty()) g.exponent /= static_cast<long>(g.per_degree.size());
    g.raw_log_ratio = logcount ? logsum / logcount : 0.0;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), mpq_class(g.exponent + mpq_class(1, 2)).get_num_mpz_t(),
               mpq_class(g.exponent + mpq_class(1, 2)).get_den_mpz_t());
    g.rounded = fl.get_si();

    // target-th differences of h vanish on 1..N (h(n) = 0 there for target 0)
    std::vector<mpz_class> d;
    for (int n = 1; n <= N; ++n) d.push_back(static_cast<unsigned long>(hilbert[n]));
    if (static_cast<int>(d.size()) < target + 1 || d.empty()) {
        g.polynomial_vacuous = true;
        g.polynomial_ok = true;
    } else {
        for (int k = 0; k < target; ++k) {
            for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
            d.pop_back();
        }
        g.polynomial_ok = std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x == 0; });
    }
    if (N < 4)
        g.verdict = Verdict::Inconclusive;
    else
        g.verdict = g.rounded == target && g.polynomial_ok ? Verdict::Holonomic : Verdict::NotHolonomic;
    return g;
}

GrowthReport gk_estimate(const TruncatedModule& m, int target) { return gk_estimate(m.hilbert(), target); }

TransferModule transfer_bimodule(const TransferSpec& spec, int N, Side side) {
    int factor = 0;
    BlockKind comp = BlockKind::D;
    if (spec.kind == TransferKind::Nonseparating) {
        if (spec.g < 1) throw InvalidSplit("nonseparating transfer needs g >= 1");
    } else {
        if (spec.r < 2) throw InvalidSplit("separating transfer needs r >= 2");
        if (spec.g1 < 0 || spec.g1 > spec.g || spec.r1 < 1 || spec.r1 >= spec.r)
            throw InvalidSplit("split must satisfy 0 <= g1 <= g and 1 <= r1 < r");
        factor = spec.g;
        comp = BlockKind::F;
    }
    auto amb = std::make_shared<const AlgebraPresentation>(build_Agr({spec.g, spec.r}, spec.flavor));
    int collapsed = -1, complementary = -1;
    for (std::size_t i = 0; i < amb->blocks.size(); ++i) {
        const Block& b = amb->blocks[i];
        if (b.factor != factor) continue;
        if (b.kind == BlockKind::A) collapsed = static_cast<int>(i);
        if (b.kind == comp) complementary = static_cast<int>(i);
    }
    if (collapsed < 0 || complementary < 0) throw InvalidSplit("designated factor has no A block");
    auto rels = counit_ideal(amb->blocks[collapsed]);
    TruncatedModule m(amb, std::move(rels), N, side);
    return TransferModule{spec, amb, collapsed, complementary, std::move(m)};
}

namespace {

using OpKey = SparseVec<Word>;

struct OpImages {
    int level = -1;
    std::size_t count = 0;                // basis words of degree <= level
    std::vector<std::vector<ModVec>> img;  // [op][basis index]
};

// images of the basis words under each operator, up to the first degree where
// one of them leaves the truncation
OpImages apply_ops(const TruncatedModule& m, const std::vector<NcPoly>& ops) {
    OpImages r;
    r.img.resize(ops.size());
    const auto& basis = m.basis();
    std::size_t i = 0;
    for (int d = 0; d <= m.trunc(); ++d) {
        std::size_t j = i;
        std::vector<std::vector<ModVec>> part(ops.size());
        try {
            for (; j < basis.size() && static_cast<int>(basis[j].size()) == d; ++j)
                for (std::size_t o = 0; o < ops.size(); ++o) part[o].push_back(m.act(ops[o], basis[j]));
        } catch (const LeavesTruncation&) {
            break;
        }
        for (std::size_t o = 0; o < ops.size(); ++o)
            for (auto& v : part[o]) r.img[o].push_back(std::move(v));
        i = j;
        r.level = d;
        r.count = i;
    }
    return r;
}

ModVec shifted(const ModVec& img, const Word& w, const Scalar& lambda) {
    ModVec out = img;
    sparse_axpy(out, -lambda, ModVec{{w, Scalar(1)}});
    return out;
}

OpKey tag(std::size_t op, const ModVec& v) {
    OpKey out;
    for (const auto& [w, c] : v) out.emplace(Word(1, static_cast<Letter>(op)) + w, c);
    return out;
}

struct KernelByLevel {
    std::vector<std::size_t> dims;
    std::vector<ModVec> basis;
};

// kernel of the stacked operators restricted to F_n, n = 0..level
KernelByLevel kernel_by_level(const TruncatedModule& m, int level, std::size_t count,
                              const std::vector<const std::vector<ModVec>*>& cols) {
    KernelByLevel k;
    Echelon<Word> ech(true);
    std::vector<std::size_t> found_at;
    for (std::size_t i = 0; i < count; ++i) {
        OpKey row;
        for (std::size_t o = 0; o < cols.size(); ++o)
            for (auto& [key, c] : tag(o, (*cols[o])[i])) row.emplace(key, c);
        std::map<int, Scalar> combo;
        if (!ech.insert(std::move(row), static_cast<int>(i), &combo)) {
            ModVec v;
            for (const auto& [idx, c] : combo) v.emplace(m.basis()[static_cast<std::size_t>(idx)], c);
            k.basis.push_back(std::move(v));
            found_at.push_back(m.basis()[i].size());
        }
    }
    for (int n = 0; n <= level; ++n)
        k.dims.push_back(static_cast<std::size_t>(
            std::count_if(found_at.begin(), found_at.end(), [n](std::size_t d) { return static_cast<int>(d) <= n; })));
    return k;
}

int vec_degree(const ModVec& v) { return v.empty() ? -1 : static_cast<int>(v.rbegin()->first.size()); }

}  // namespace

WeightKernel weight_kernel(const TruncatedModule& m, const Block& a) {
    const auto& pres = m.ambient();
    std::vector<NcPoly> ops;
    NcPoly det1 = pres.nf(detq(a) - NcPoly(Scalar(1)));
    if (!det1.is_zero()) ops.push_back(det1);
    ops.push_back(a.entry(0, 1));
    ops.push_back(a.entry(1, 0));
    ops.push_back(a.entry(1, 1) - NcPoly(Scalar(1)));
    WeightKernel wk;
    if (m.is_zero()) return wk;
    OpImages im = apply_ops(m, ops);
    wk.level = im.level;
    if (im.level < 0) return wk;
    std::vector<const std::vector<ModVec>*> cols;
    for (const auto& c : im.img) cols.push_back(&c);
    auto k = kernel_by_level(m, im.level, im.count, cols);
    wk.dims = std::move(k.dims);
    wk.basis = std::move(k.basis);
    return wk;
}

bool WeightReport::complete() const {
    for (std::size_t n = 0; n < total.size(); ++n) {
        std::size_t s = 0;
        for (const auto& c : components) s += c.dims[n];
        if (s != total[n]) return false;
    }
    return true;
}

WeightReport weight_decompose(const TruncatedModule& m, const Block& a) {
    const auto& pres = m.ambient();
    const bool sl = pres.det_specialized;
    NcPoly det = pres.nf(detq(a));
    NcPoly a22 = a.entry(1, 1);
    WeightReport rep;
    if (m.is_zero()) return rep;
    std::vector<NcPoly> ops{a22};
    if (!sl) ops.push_back(det);
    OpImages im = apply_ops(m, ops);
    rep.level = im.level;
    if (im.level < 0) throw NotTorsion("operators leave the truncation in degree 0");
    for (int n = 0; n <= im.level; ++n) rep.total.push_back(m.dim_upto(n));
    const auto& basis = m.basis();
    const long N = m.trunc();

    auto shifted_images = [&](const std::vector<ModVec>& img, const Scalar& lam) {
        std::vector<ModVec> out;
        for (std::size_t i = 0; i < im.count; ++i) out.push_back(shifted(img[i], basis[i], lam));
        return out;
    };
    for (long jp2 = -2 * N; jp2 <= 2 * N; ++jp2) {
        if (!sl && jp2 % 2 != 0) continue;
        auto t = shifted_images(im.img[0], Scalar::q_pow(jp2));
        auto kt = kernel_by_level(m, im.level, im.count, {&t});
        if (kt.basis.empty()) continue;
        if (sl) {
            rep.components.push_back({0, jp2, std::move(kt.dims), std::move(kt.basis)});
            continue;
        }
        for (long j = -N; j <= N; ++j) {
            auto d = shifted_images(im.img[1], Scalar::q_pow(2 * j));
            auto k = kernel_by_level(m, im.level, im.count, {&t, &d});
            if (!k.basis.empty()) rep.components.push_back({j, jp2, std::move(k.dims), std::move(k.basis)});
        }
    }
    if (!rep.complete()) {
        std::size_t s = 0;
        for (const auto& c : rep.components) s += c.dims.back();
        throw NotTorsion(std::to_string(rep.total.back() - s) + " dimensions of F_" + std::to_string(im.level) +
                         " lie in no weight component");
    }

    // a12 and a21 move j' by one step, direction set by the side
    const long step = m.side() == Side::Left ? 2 : -2;
    auto killed = [&](const ModVec& x, long j, long jp2) {
        if (!m.act(a22 - NcPoly(Scalar::q_pow(jp2)), x).empty()) return false;
        return sl || m.act(det - NcPoly(Scalar::q_pow(2 * j)), x).empty();
    };
    for (const auto& c : rep.components)
        for (const auto& v : c.basis) {
            if (vec_degree(v) > im.level - 1) continue;
            for (const auto& [gen, dir] : {std::pair{a.entry(0, 1), step}, std::pair{a.entry(1, 0), -step}}) {
                try {
                    ModVec x = m.act(gen, v);
                    ++rep.shift_checked;
                    if (!x.empty() && !killed(x, c.j, c.jp2 + dir)) ++rep.shift_failures;
                } catch (const LeavesTruncation&) {
                }
            }
        }
    return rep;
}

RankCheck direct_sum_rank(const TruncatedModule& m, const Block& a, const Block& comp, int max_deg) {
    RankCheck rc;
    WeightKernel wk = weight_kernel(m, a);
    if (wk.dims.empty()) return rc;
    std::vector<ModVec> m0(wk.basis.begin(), wk.basis.begin() + static_cast<long>(wk.dims[0]));
    const auto& pres = m.ambient();
    std::vector<Word> level{Word()}, words{Word()};
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Word nw = w + Word(1, comp.ids[i][j]);
                    if (pres.rewrite.is_normal(nw)) next.push_back(nw);
                }
        words.insert(words.end(), next.begin(), next.end());
        level = std::move(next);
    }
    Echelon<Word, DeglexLess> ech;
    for (const Word& b : words)
        for (const auto& v : m0) {
            ++rc.count;
            ech.insert(m.act(NcPoly::word(b), v));
        }
    rc.rank = ech.rank();
    return rc;
}

std::vector<IdentityCheck> verify_power_identities(const AlgebraPresentation& pres, int nmax) {
    std::vector<IdentityCheck> out;
    const long e = pres.epsilon;
    auto q = [](long k) { return Scalar::q_pow(k); };
    auto pw = [](const NcPoly& x, long n) { return n <= 0 ? NcPoly(Scalar(1)) : x.pow(static_cast<unsigned>(n)); };
    auto add = [&](std::string id, std::string inst, IdentityForm form, const NcPoly& lhs, const NcPoly& rhs) {
        out.push_back({std::move(id), std::move(inst), form, pres.nf(lhs - rhs)});
    };
    for (std::size_t fi = 0; fi < pres.factors.size(); ++fi) {
        const int f = static_cast<int>(fi);
        if (!pres.has_block(f, BlockKind::A)) continue;
        const Block& A = pres.block(f, BlockKind::A);
        NcPoly a12 = A.entry(0, 1), a21 = A.entry(1, 0), a22 = A.entry(1, 1);
        const std::string fs = "factor=" + std::to_string(f);
        if (pres.has_block(f, BlockKind::F)) {
            const Block& F = pres.block(f, BlockKind::F);
            for (int j = 0; j < 2; ++j) {
                NcPoly f1 = F.entry(0, j), f2 = F.entry(1, j);
                for (long N = 0; N <= nmax; ++N) {
                    const std::string inst = fs + " j=" + std::to_string(j + 1) + " N=" + std::to_string(N);
                    NcPoly t1 = N ? bracket(-2 * N) * (f2 * pw(f1, N - 1) * a22) : NcPoly();
                    NcPoly t2 = N ? bracket(-2 * N) * (f1 * pw(f2, N - 1) * a22) : NcPoly();
                    if (N >= 1) {
                        add("a21-f1j-powers", inst, IdentityForm::Printed, a21 * pw(f1, N),
                            q(-N) * (pw(f1, N) * a21) + q(-1) * t1);
                        add("a12-f2j-powers", inst, IdentityForm::Printed, a12 * pw(f2, N),
                            q(-N) * (pw(f2, N) * a12) + t2);
                    }
                    add("a21-f1j-powers", inst, IdentityForm::Corrected, a21 * pw(f1, N),
                        q(-N * (1 - e)) * (pw(f1, N) * a21) + q(e * N - 2) * t1);
                    add("a12-f2j-powers", inst, IdentityForm::Corrected, a12 * pw(f2, N),
                        q(-N * (1 - e)) * (pw(f2, N) * a12) + q(e * N) * t2);
                }
            }
        }
        if (pres.has_block(f, BlockKind::D)) {
            const Block& D = pres.block(f, BlockKind::D);
            NcPoly d21 = D.entry(1, 0), d22 = D.entry(1, 1);
            for (long N = 0; N <= nmax; ++N) {
                const std::string inst = fs + " N=" + std::to_string(N);
                if (N >= 1) {
                    // the printed exponent s-1 is read with s = 1
                    add("a21-d22-powers", inst + " s=1", IdentityForm::Printed, a21 * pw(d22, N),
                        q(2 * N) * (pw(d22, N) * a21) + bracket(2 * N) * (d21 * a22));
                    add("a12-d21-powers", inst, IdentityForm::Printed, a12 * pw(d21, N),
                        pw(d21, N) + q(-2) * bracket(2 * N) * (d22 * pw(d21, N - 1) * a22));
                }
                NcPoly u1 = N ? bracket(2 * N) * (d21 * pw(d22, N - 1) * a22) : NcPoly();
                NcPoly u2 = N ? q(-2) * bracket(2 * N) * (d22 * pw(d21, N - 1) * a22) : NcPoly();
                add("a21-d22-powers", inst, IdentityForm::Corrected, a21 * pw(d22, N),
                    q(-e * N) * (q(2 * N) * (pw(d22, N) * a21) + u1));
                add("a12-d21-powers", inst, IdentityForm::Corrected, a12 * pw(d21, N),
                    q(-e * N) * (pw(d21, N) * a12 + u2));
            }
        }
    }
    return out;
}

}  // namespace qs
