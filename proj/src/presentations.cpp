#include "qskein/presentations.hpp"

#include <functional>

namespace qs {

namespace {

Scalar Q(long n) { return Scalar::q_pow(n); }
Scalar B(long n) { return bracket(n); }

// entry by the two-digit label, superscript first
struct Ent {
    const Block& b;
    NcPoly operator()(const char* s) const { return b.entry(s[0] - '1', s[1] - '1'); }
};

NcPoly c(const NcPoly& x, const NcPoly& y, const Scalar& lam = Scalar(1)) { return commutator(x, y, lam); }

PolyMat to_poly(const ScalarMat& s) {
    PolyMat m(s.size(), std::vector<NcPoly>(s[0].size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s[i].size(); ++j) m[i][j] = NcPoly(s[i][j]);
    return m;
}

PolyMat pmul(const PolyMat& x, const PolyMat& y) {
    PolyMat r(x.size(), std::vector<NcPoly>(y[0].size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y[0].size(); ++j)
            for (std::size_t k = 0; k < y.size(); ++k)
                if (!x[i][k].is_zero() && !y[k][j].is_zero()) r[i][j] += x[i][k] * y[k][j];
    return r;
}

PolyMat psub(PolyMat x, const PolyMat& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) x[i][j] -= y[i][j];
    return x;
}

// L (x) I
PolyMat first_slot(const GenMatrix& l) {
    PolyMat m(4, std::vector<NcPoly>(4));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j) m[2 * i + k][2 * j + k] = l[i][j];
    return m;
}

// I (x) L
PolyMat second_slot(const GenMatrix& l) {
    PolyMat m(4, std::vector<NcPoly>(4));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int l2 = 0; l2 < 2; ++l2) m[2 * i + k][2 * i + l2] = l[k][l2];
    return m;
}

std::string block_prefix(BlockKind k) {
    switch (k) {
        case BlockKind::A: return "a";
        case BlockKind::D: return "d";
        case BlockKind::F: return "f";
    }
    return "?";
}

std::string block_display(BlockKind k) {
    switch (k) {
        case BlockKind::A: return "a";
        case BlockKind::D: return "∂";
        case BlockKind::F: return "f";
    }
    return "?";
}

// per-block generator order 22 < 11 < 12 < 21
constexpr int kOrder[4][2] = {{1, 1}, {0, 0}, {0, 1}, {1, 0}};

class Builder {
public:
    Builder(std::string name, Flavor f, BuildOptions opt) : opt_(opt) {
        p_.name = std::move(name);
        p_.flavor = f;
        p_.epsilon = f == Flavor::SL ? 1 : 0;
    }

    int add_block(BlockKind kind, int factor) {
        Block b{kind, factor, {}};
        std::string suffix = factor == 0 ? "" : "_" + std::to_string(factor);
        std::string dsuffix = factor == 0 ? "" : "[" + std::to_string(factor) + "]";
        for (const auto& rc : kOrder) {
            int r = rc[0], col = rc[1];
            std::string lab = std::to_string(r + 1) + std::to_string(col + 1);
            b.ids[r][col] = p_.alphabet.add(block_prefix(kind) + lab + suffix,
                                            block_display(kind) + "^" + std::to_string(r + 1) + "_" +
                                                std::to_string(col + 1) + dsuffix);
        }
        p_.blocks.push_back(b);
        return static_cast<int>(p_.blocks.size()) - 1;
    }

    void add_factor(FactorKind kind) {
        int f = static_cast<int>(p_.factors.size());
        Factor fac{kind, {}};
        switch (kind) {
            case FactorKind::OQ: fac.blocks = {add_block(BlockKind::A, f)}; break;
            case FactorKind::OQ_FRT: fac.blocks = {add_block(BlockKind::F, f)}; break;
            case FactorKind::DQ: fac.blocks = {add_block(BlockKind::A, f), add_block(BlockKind::D, f)}; break;
            case FactorKind::DQ_PRIME: fac.blocks = {add_block(BlockKind::A, f), add_block(BlockKind::F, f)}; break;
        }
        p_.factors.push_back(fac);
    }

    AlgebraPresentation finish() {
        for (const auto& inst : defining_equations(p_)) {
            const Block& x = p_.blocks[inst.first];
            switch (inst.eq) {
                case MatrixEquation::RE: append(re_relations(x)); break;
                case MatrixEquation::FRT: append(frt_relations(x)); break;
                case MatrixEquation::DQ: append(dq_cross_relations(p_.blocks[inst.second], x, p_.epsilon)); break;
                case MatrixEquation::DQ_PRIME:
                    append(dq_prime_cross_relations(p_.blocks[inst.second], x, p_.epsilon));
                    break;
                default:
                    append(matrix_equation_entries(inst.eq, gen_matrix(x), gen_matrix(p_.blocks[inst.second]),
                                                   p_.flavor));
            }
        }
        if (p_.flavor == Flavor::SL && opt_.specialize_det) {
            p_.det_specialized = true;
            for (const auto& b : p_.blocks) p_.relations.push_back(detq(b) - NcPoly(Scalar(1)));
        }
        p_.reduced = interreduce(p_.relations);
        p_.rewrite = orient(p_.reduced, p_.alphabet);
        return std::move(p_);
    }

private:
    void append(const std::vector<NcPoly>& rels) {
        for (const auto& r : rels)
            if (!r.is_zero()) p_.relations.push_back(r);
    }

    AlgebraPresentation p_;
    BuildOptions opt_;
};

}  // namespace

const char* flavor_name(Flavor f) { return f == Flavor::GL ? "GL" : "SL"; }

Flavor parse_flavor(const std::string& s) {
    if (s == "GL" || s == "gl") return Flavor::GL;
    if (s == "SL" || s == "sl") return Flavor::SL;
    throw std::invalid_argument("unknown flavor " + s);
}

ScalarMat RMatrix::mat() const {
    ScalarMat m(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = e[i][j];
    return m;
}

RMatrix r_matrix(Flavor variant) {
    RMatrix r;
    r.variant = variant;
    Scalar q = Q(1);
    r.e[0][0] = q;
    r.e[1][1] = Scalar(1);
    r.e[2][1] = q - Q(-1);
    r.e[2][2] = Scalar(1);
    r.e[3][3] = q;
    if (variant == Flavor::SL)
        for (auto& row : r.e)
            for (auto& x : row) x *= Scalar::v_pow(-1);
    return r;
}

ScalarMat flip(const ScalarMat& m) {
    static constexpr int P[4] = {0, 2, 1, 3};
    ScalarMat r(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = m[P[i]][P[j]];
    return r;
}

ScalarMat scalar_mul(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat r(a.size(), std::vector<Scalar>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

ScalarMat scalar_inverse(const ScalarMat& m) {
    const std::size_t n = m.size();
    ScalarMat a = m, inv(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

ScalarMat yang_baxter_residual(Flavor variant) {
    ScalarMat r = r_matrix(variant).mat();
    auto id2 = [](int i, int j) { return i == j ? Scalar(1) : Scalar(); };
    // index (i,j,k) -> 4i+2j+k
    ScalarMat r12(8, std::vector<Scalar>(8)), r23 = r12, r13 = r12;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int i = a >> 2, j = (a >> 1) & 1, k = a & 1;
            int i2 = b >> 2, j2 = (b >> 1) & 1, k2 = b & 1;
            r12[a][b] = r[2 * i + j][2 * i2 + j2] * id2(k, k2);
            r23[a][b] = id2(i, i2) * r[2 * j + k][2 * j2 + k2];
            r13[a][b] = r[2 * i + k][2 * i2 + k2] * id2(j, j2);
        }
    ScalarMat lhs = scalar_mul(scalar_mul(r12, r13), r23);
    ScalarMat rhs = scalar_mul(scalar_mul(r23, r13), r12);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) lhs[a][b] -= rhs[a][b];
    return lhs;
}

GenMatrix gen_matrix(const Block& b) {
    GenMatrix m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = b.entry(i, j);
    return m;
}

const Block& AlgebraPresentation::block(int factor, BlockKind kind) const {
    for (const auto& b : blocks)
        if (b.factor == factor && b.kind == kind) return b;
    throw BlockMismatch("no such block in " + name);
}

bool AlgebraPresentation::has_block(int factor, BlockKind kind) const {
    for (const auto& b : blocks)
        if (b.factor == factor && b.kind == kind) return true;
    return false;
}

std::vector<NcPoly> re_relations(const Block& blk) {
    Ent l{blk};
    return {c(l("12"), l("11")) + B(-2) * (l("12") * l("22")),
            c(l("22"), l("11")),
            c(l("21"), l("11")) - B(-2) * (l("22") * l("21")),
            c(l("22"), l("12"), Q(2)),
            c(l("21"), l("12")) + B(-2) * (l("11") * l("22") - l("22") * l("22")),
            c(l("22"), l("21"), Q(-2))};
}

std::vector<NcPoly> frt_relations(const Block& blk) {
    Ent f{blk};
    return {c(f("11"), f("12"), Q(1)),
            c(f("12"), f("21")) - (Q(-1) - Q(1)) * (f("22") * f("11")),
            c(f("11"), f("21"), Q(-1)),
            c(f("12"), f("22"), Q(-1)),
            c(f("11"), f("22")),
            c(f("21"), f("22"), Q(1))};
}

std::vector<NcPoly> dq_cross_relations(const Block& ab, const Block& db, int e) {
    Ent a{ab}, d{db};
    return {
        c(d("11"), a("11"), Q(-2 + e)) - B(-2) * (d("12") * a("21")) - Q(e - 4) * B(2) * (a("12") * d("21")),
        c(d("11"), a("12"), Q(-2 + e)) - B(-2) * (d("12") * a("22")),
        c(d("11"), a("21"), Q(e)) + B(2) * (d("21") * a("11")) + Q(-2) * B(2) * B(2) * (d("22") * a("21")) +
            Q(e) * B(-2) * (a("22") * d("21")),
        c(d("11"), a("22"), Q(e)) + B(2) * (d("21") * a("12")) + Q(-2) * B(2) * B(2) * (d("22") * a("22")),
        c(d("12"), a("11"), Q(e)) + Q(e) * B(-2) * (a("12") * d("22")) - Q(e) * B(-2) * (a("12") * d("11")),
        c(d("12"), a("12"), Q(-2 + e)),
        c(d("12"), a("21"), Q(e)) - B(-2) * (d("22") * a("11")) - Q(e) * B(-2) * (a("22") * d("11")) +
            Q(e) * B(-2) * (a("22") * d("22")),
        c(d("12"), a("22"), Q(-2 + e)) - B(-2) * (d("22") * a("12")),
        c(d("21"), a("11"), Q(-2 + e)) - B(-2) * (d("22") * a("21")),
        c(d("21"), a("12"), Q(e)) - B(-2) * (d("22") * a("22")),
        c(d("21"), a("21"), Q(-2 + e)),
        c(d("21"), a("22"), Q(e)),
        c(d("22"), a("11"), Q(e)) + Q(e) * B(2) * (a("12") * d("21")),
        c(d("22"), a("12"), Q(e)),
        c(d("22"), a("21"), Q(-2 + e)) - Q(e) * B(-2) * (a("22") * d("21")),
        c(d("22"), a("22"), Q(-2 + e)),
    };
}

std::vector<NcPoly> dq_prime_cross_relations(const Block& ab, const Block& fb, int e) {
    Ent a{ab};
    std::vector<NcPoly> out;
    for (int j = 0; j < 2; ++j) {
        NcPoly f1 = fb.entry(0, j), f2 = fb.entry(1, j);
        out.push_back(c(f1, a("11"), Q(2 - e)) - Q(-e) * B(2) * (a("12") * f2));
        out.push_back(c(f1, a("12"), Q(1 - e)));
        out.push_back(c(f1, a("21"), Q(1 - e)) - Q(-e - 1) * B(2) * (a("22") * f2));
        out.push_back(c(f1, a("22"), Q(-e)));
        out.push_back(c(f2, a("11"), Q(-e)) - Q(-e) * B(2) * (a("21") * f1) -
                      Q(-e - 2) * B(2) * B(2) * (a("22") * f2));
        out.push_back(c(f2, a("12"), Q(1 - e)) - Q(-e - 1) * B(2) * (a("22") * f1));
        out.push_back(c(f2, a("21"), Q(1 - e)));
        out.push_back(c(f2, a("22"), Q(2 - e)));
    }
    return out;
}

std::vector<NcPoly> braided_printed_relations(const Block& later, const Block& earlier) {
    Ent t{later}, b{earlier};
    NcPoly d = t("22") - t("11");
    return {
        c(t("11"), b("11")) - B(-2) * (t("12") * b("21")),
        c(t("11"), b("12"), Q(-2)) + B(-2) * (b("11") * t("21")) - B(-2) * (t("12") * b("22")),
        c(t("11"), b("21"), Q(2)),
        c(t("11"), b("22")) - B(-2) * (b("21") * t("12")),
        c(t("12"), b("11")),
        c(t("12"), b("12")),
        c(t("12"), b("21")),
        c(t("12"), b("22")),
        c(t("21"), b("11")) - B(-2) * (d * b("21")),
        c(t("21"), b("12")) - B(-2) * (d * b("22") - b("11") * d),
        c(t("21"), b("21")),
        c(t("21"), b("22")) + B(-2) * (b("21") * d),
        c(t("22"), b("11")) - B(-2) * (t("12") * b("21")),
        c(t("22"), b("12"), Q(2)) + B(-2) * (b("11") * t("12") - t("12") * b("22")),
        c(t("22"), b("21"), Q(-2)),
        c(t("22"), b("22")) - B(-2) * (b("21") * t("12")),
    };
}

std::vector<NcPoly> braided_frt_printed_relations(const Block& later, const Block& earlier) {
    Ent a{earlier};
    std::vector<NcPoly> out;
    for (int j = 0; j < 2; ++j) {
        NcPoly f1 = later.entry(0, j), f2 = later.entry(1, j);
        out.push_back(c(f1, a("11")));
        out.push_back(c(f1, a("12"), Q(1)));
        out.push_back(c(f1, a("21"), Q(-1)));
        out.push_back(c(f1, a("22")));
        out.push_back(c(f2, a("11")) - Q(-2) * B(2) * (a("21") * f1));
        out.push_back(c(f2, a("12"), Q(-1)) - Q(1) * B(-2) * ((a("11") - a("22")) * f1));
        out.push_back(c(f2, a("21"), Q(1)));
        out.push_back(c(f2, a("22")) + B(2) * (a("21") * f1));
    }
    return out;
}

NcPoly detq(const GenMatrix& m, DetKind kind) {
    Scalar k = kind == DetKind::RE ? Q(2) : Q(1);
    return m[0][0] * m[1][1] - k * (m[0][1] * m[1][0]);
}

NcPoly detq(const Block& b) { return detq(gen_matrix(b), b.kind == BlockKind::F ? DetKind::FRT : DetKind::RE); }

const char* equation_name(MatrixEquation e) {
    switch (e) {
        case MatrixEquation::RE: return "RE";
        case MatrixEquation::FRT: return "FRT";
        case MatrixEquation::DQ: return "DQ";
        case MatrixEquation::DQ_PRIME: return "DQ_PRIME";
        case MatrixEquation::BRAID: return "BRAID";
        case MatrixEquation::BRAID_FRT: return "BRAID_FRT";
        case MatrixEquation::BRAID_AF: return "BRAID_AF";
        case MatrixEquation::BRAID_FF: return "BRAID_FF";
    }
    return "?";
}

PolyMat matrix_equation(MatrixEquation eq, const GenMatrix& x, const GenMatrix& y, Flavor variant) {
    ScalarMat rs = r_matrix(variant).mat();
    PolyMat R = to_poly(rs), R21 = to_poly(flip(rs));
    PolyMat X1 = first_slot(x), Y2 = second_slot(y), X2 = second_slot(x), Y1 = first_slot(y);
    switch (eq) {
        case MatrixEquation::RE:
            return psub(pmul(pmul(pmul(R21, X1), R), X2), pmul(pmul(pmul(X2, R21), X1), R));
        case MatrixEquation::FRT: return psub(pmul(pmul(R21, X1), X2), pmul(pmul(X2, X1), R));
        case MatrixEquation::DQ: {
            PolyMat R21i = to_poly(scalar_inverse(flip(rs)));
            return psub(pmul(pmul(pmul(R21, X1), R), Y2), pmul(pmul(pmul(Y2, R21), X1), R21i));
        }
        case MatrixEquation::DQ_PRIME: return psub(pmul(X2, Y1), pmul(pmul(pmul(R21, Y1), R), X2));
        case MatrixEquation::BRAID: {
            PolyMat Ri = to_poly(scalar_inverse(rs));
            return psub(pmul(pmul(pmul(X1, R), Y2), Ri), pmul(pmul(pmul(R, Y2), Ri), X1));
        }
        case MatrixEquation::BRAID_FRT: {
            PolyMat Ri = to_poly(scalar_inverse(rs));
            return psub(pmul(X1, Y2), pmul(pmul(pmul(R, Y2), Ri), X1));
        }
        case MatrixEquation::BRAID_AF: return psub(pmul(pmul(X1, R), Y2), pmul(pmul(R, Y2), X1));
        case MatrixEquation::BRAID_FF: return psub(pmul(X1, Y2), pmul(pmul(R, Y2), X1));
    }
    throw std::invalid_argument("unknown equation");
}

std::vector<NcPoly> matrix_equation_entries(MatrixEquation eq, const GenMatrix& x, const GenMatrix& y,
                                            Flavor variant) {
    std::vector<NcPoly> out;
    for (const auto& row : matrix_equation(eq, x, y, variant))
        for (const auto& e : row)
            if (!e.is_zero()) out.push_back(e);
    return out;
}

PolyMat check_matrix_relation(const AlgebraPresentation& pres, MatrixEquation eq, const Block& first,
                              const Block* second) {
    bool single = eq == MatrixEquation::RE || eq == MatrixEquation::FRT;
    if (!single && !second) throw BlockMismatch(std::string(equation_name(eq)) + " needs two blocks");
    bool frt_first = eq == MatrixEquation::FRT || eq == MatrixEquation::DQ_PRIME ||
                     eq == MatrixEquation::BRAID_FRT || eq == MatrixEquation::BRAID_FF;
    if (frt_first != (first.kind == BlockKind::F))
        throw BlockMismatch(std::string(equation_name(eq)) + ": wrong kind for the first block");
    GenMatrix x = gen_matrix(first);
    GenMatrix y = single ? x : gen_matrix(*second);
    PolyMat m = matrix_equation(eq, x, y, pres.flavor);
    for (auto& row : m)
        for (auto& e : row) e = pres.nf(e);
    return m;
}

bool is_zero_matrix(const PolyMat& m) { return count_nonzero(m) == 0; }

std::size_t count_nonzero(const PolyMat& m) {
    std::size_t n = 0;
    for (const auto& row : m)
        for (const auto& e : row) n += !e.is_zero();
    return n;
}

std::vector<EquationInstance> defining_equations(const AlgebraPresentation& p) {
    std::vector<EquationInstance> out;
    auto idx = [&](int f, BlockKind k) {
        for (std::size_t i = 0; i < p.blocks.size(); ++i)
            if (p.blocks[i].factor == f && p.blocks[i].kind == k) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
        int fi = static_cast<int>(f);
        switch (p.factors[f].kind) {
            case FactorKind::OQ: out.push_back({MatrixEquation::RE, idx(fi, BlockKind::A), -1}); break;
            case FactorKind::OQ_FRT: out.push_back({MatrixEquation::FRT, idx(fi, BlockKind::F), -1}); break;
            case FactorKind::DQ:
                out.push_back({MatrixEquation::RE, idx(fi, BlockKind::A), -1});
                out.push_back({MatrixEquation::RE, idx(fi, BlockKind::D), -1});
                out.push_back({MatrixEquation::DQ, idx(fi, BlockKind::D), idx(fi, BlockKind::A)});
                break;
            case FactorKind::DQ_PRIME:
                out.push_back({MatrixEquation::RE, idx(fi, BlockKind::A), -1});
                out.push_back({MatrixEquation::FRT, idx(fi, BlockKind::F), -1});
                out.push_back({MatrixEquation::DQ_PRIME, idx(fi, BlockKind::F), idx(fi, BlockKind::A)});
                break;
        }
    }
    // later factor j against earlier factor i
    for (std::size_t j = 0; j < p.factors.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (int lb : p.factors[j].blocks)
                for (int eb : p.factors[i].blocks) {
                    bool lf = p.blocks[lb].kind == BlockKind::F, ef = p.blocks[eb].kind == BlockKind::F;
                    MatrixEquation e = lf ? (ef ? MatrixEquation::BRAID_FF : MatrixEquation::BRAID_FRT)
                                          : (ef ? MatrixEquation::BRAID_AF : MatrixEquation::BRAID);
                    out.push_back({e, lb, eb});
                }
    return out;
}

AlgebraPresentation build_oq(Flavor f, BuildOptions opt) {
    Builder b("oq", f, opt);
    b.add_factor(FactorKind::OQ);
    return b.finish();
}

AlgebraPresentation build_oq_frt(Flavor f, BuildOptions opt) {
    Builder b("oq_frt", f, opt);
    b.add_factor(FactorKind::OQ_FRT);
    return b.finish();
}

AlgebraPresentation build_dq(Flavor f, BuildOptions opt) {
    Builder b("dq", f, opt);
    b.add_factor(FactorKind::DQ);
    return b.finish();
}

AlgebraPresentation build_dq_prime(Flavor f, BuildOptions opt) {
    Builder b("dq_prime", f, opt);
    b.add_factor(FactorKind::DQ_PRIME);
    return b.finish();
}

AlgebraPresentation build_Agr(GluingPattern pat, Flavor f, BuildOptions opt) {
    if (pat.g < 0 || pat.r < 1 || pat.g + pat.r < 2)
        throw InvalidPattern("need g >= 0, r >= 1 and g + r >= 2");
    if (pat.g == 1 && pat.r == 1) return build_dq(f, opt);
    if (pat.g == 0 && pat.r == 2) return build_dq_prime(f, opt);
    Builder b("A+_{" + std::to_string(pat.g) + "," + std::to_string(pat.r) + "}", f, opt);
    for (int i = 0; i < pat.g; ++i) b.add_factor(FactorKind::DQ);
    for (int i = 0; i + 1 < pat.r; ++i) b.add_factor(FactorKind::DQ_PRIME);
    return b.finish();
}

AlgebraPresentation build_named(const std::string& name, Flavor f, BuildOptions opt) {
    if (name == "oq") return build_oq(f, opt);
    if (name == "oq_frt") return build_oq_frt(f, opt);
    if (name == "dq") return build_dq(f, opt);
    if (name == "dq_prime") return build_dq_prime(f, opt);
    throw std::invalid_argument("unknown algebra " + name);
}

CommutationResult check_q_commutation(const AlgebraPresentation& pres, const NcPoly& s,
                                      const std::vector<std::pair<const Block*, Scalar>>& blocks) {
    CommutationResult res;
    for (const auto& [blk, lam] : blocks)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                NcPoly x = blk->entry(i, j);
                if (!pres.nf(s * x - lam * (x * s)).is_zero())
                    res.failures.push_back(pres.alphabet.name(blk->ids[i][j]));
            }
    res.ok = res.failures.empty();
    return res;
}

Localized adjoin_inverse(const AlgebraPresentation& pres, const NcPoly& s, const std::string& inv_name) {
    NcPoly ns = pres.nf(s);
    if (ns.is_zero() || ns.degree() == 0) throw NotLocalizable("element is a scalar");
    Localized out{pres, 0, {}};
    for (std::size_t x = 0; x < pres.alphabet.size(); ++x) {
        NcPoly gx = NcPoly::gen(static_cast<Letter>(x));
        NcPoly sx = pres.nf(s * gx), xs = pres.nf(gx * s);
        const Word& w = xs.lead_word();
        Scalar lam = sx.coeff(w) / xs.lead_coeff();
        bool ok = (sx - lam * xs).is_zero() && !lam.is_zero();
        bool power = false;
        for (long k = -8; k <= 8 && ok; ++k) power |= lam == Scalar::v_pow(k);
        if (!ok || !power)
            throw NotLocalizable("element does not q-commute with " + pres.alphabet.name(static_cast<Letter>(x)));
        out.lambdas.push_back(lam);
    }
    AlgebraPresentation& p = out.pres;
    p.name = pres.name + "[" + inv_name + "]";
    Letter u = p.alphabet.add(inv_name, inv_name);
    out.inverse = u;
    NcPoly gu = NcPoly::gen(u);
    // s x = lam x s  gives  u x = lam^-1 x u
    for (std::size_t x = 0; x < pres.alphabet.size(); ++x) {
        NcPoly gx = NcPoly::gen(static_cast<Letter>(x));
        p.relations.push_back(gu * gx - out.lambdas[x].inverse() * (gx * gu));
    }
    p.relations.push_back(ns * gu - NcPoly(Scalar(1)));
    p.reduced = pres.reduced;
    for (std::size_t i = pres.relations.size(); i < p.relations.size(); ++i) p.reduced.push_back(p.relations[i]);
    p.reduced = interreduce(p.reduced);
    p.rewrite = orient(p.reduced, p.alphabet);
    return out;
}

}  // namespace qs
