#pragma once

#include "qskein/linalg.hpp"
#include "qskein/presentations.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

// Right: quotient A / (relations) A, module elements act on the right.
// Left:  quotient A / A (relations), module elements act on the left.
enum class Side { Right, Left };
const char* side_name(Side s);

struct LeavesTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSplit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotTorsion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ModVec = SparseVec<Word, DeglexLess>;

// normal words of the presentation by degree, 0..n
std::vector<std::vector<Word>> normal_words(const AlgebraPresentation& pres, int n);

// Cyclic module A/I truncated at degree N: the degree <= N part of A modulo the
// slice of the one-sided ideal generated in degree <= N.
class TruncatedModule {
public:
    TruncatedModule(PresentationPtr ambient, std::vector<NcPoly> relations, int N, Side side = Side::Right);

    const AlgebraPresentation& ambient() const { return *amb_; }
    PresentationPtr ambient_ptr() const { return amb_; }
    const std::vector<NcPoly>& relations() const { return rels_; }
    Side side() const { return side_; }
    int trunc() const { return N_; }

    // surviving normal words in deglex order
    const std::vector<Word>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t dim_upto(int n) const;
    std::vector<std::size_t> hilbert() const;
    bool is_zero() const { return basis_.empty(); }
    // position of a basis word
    std::size_t index(const Word& w) const;

    // class of p (times the generator); throws LeavesTruncation above degree N
    ModVec reduce(const NcPoly& p) const;
    ModVec generator() const { return reduce(NcPoly(Scalar(1))); }
    // p.m for Left, m.p for Right
    ModVec act(const NcPoly& p, const ModVec& m) const;
    ModVec act(const NcPoly& p, const Word& basis_word) const;

private:
    PresentationPtr amb_;
    std::vector<NcPoly> rels_;
    int N_;
    Side side_;
    Echelon<Word, DeglexLess> slice_;
    std::vector<Word> basis_;
    std::map<Word, std::size_t, DeglexLess> pos_;
};

TruncatedModule build_module(PresentationPtr ambient, std::vector<NcPoly> relations, int N,
                             Side side = Side::Right);

// a^i_j - delta_ij for the four entries of a block
std::vector<NcPoly> counit_ideal(const Block& b);

// Same Hilbert function by plain linear algebra in the free algebra: words of
// length <= n modulo span{u rho w} (algebra relations) and the one-sided module
// relations, no rewriting involved.
std::vector<std::size_t> module_hilbert_linear(const AlgebraPresentation& pres, const std::vector<NcPoly>& relations,
                                               int N, Side side = Side::Right);

enum class Verdict { Holonomic, NotHolonomic, Inconclusive };
const char* verdict_name(Verdict v);

struct GrowthReport {
    std::vector<std::size_t> hilbert, cumulative;
    int window_lo = 0, window_hi = 0;
    std::vector<mpq_class> per_degree;  // n (c(n)/c(n-1) - 1) for n in the window
    mpq_class exponent;                 // mean of per_degree
    double raw_log_ratio = 0;           // mean of log(c(n)/c(n-1)) / log(n/(n-1))
    long rounded = 0;
    int target = 0;
    bool polynomial_ok = false;
    bool polynomial_vacuous = false;
    Verdict verdict = Verdict::Inconclusive;
};

GrowthReport gk_estimate(const std::vector<std::size_t>& hilbert, int target);
GrowthReport gk_estimate(const TruncatedModule& m, int target);

enum class TransferKind { Nonseparating, Separating };

struct TransferSpec {
    int g = 1;
    int r = 1;
    Flavor flavor = Flavor::GL;
    TransferKind kind = TransferKind::Nonseparating;
    int g1 = 0;  // separating split
    int r1 = 1;
};

struct TransferModule {
    TransferSpec spec;
    PresentationPtr ambient;
    int collapsed;      // index into ambient->blocks
    int complementary;  // D or F block of the same factor
    TruncatedModule module;
};

TransferModule transfer_bimodule(const TransferSpec& spec, int N, Side side = Side::Right);

// M0 = ker(det-1) & ker a12 & ker a21 & ker(a22-1), by filtration level
struct WeightKernel {
    int level = 0;                  // largest n where every operator could be applied to F_n
    std::vector<std::size_t> dims;  // dim (M0 & F_n), n = 0..level
    std::vector<ModVec> basis;      // of M0 & F_level
};
WeightKernel weight_kernel(const TruncatedModule& m, const Block& a);

struct WeightComponent {
    long j = 0;                     // det eigenvalue q^{2j}
    long jp2 = 0;                   // a22 eigenvalue q^{jp2} (j' = jp2 / 2)
    std::vector<std::size_t> dims;  // by level
    std::vector<ModVec> basis;
};

struct WeightReport {
    int level = 0;
    std::vector<std::size_t> total;  // dim F_n
    std::vector<WeightComponent> components;
    std::size_t shift_checked = 0;
    std::size_t shift_failures = 0;
    bool complete() const;  // component dims sum to total at every level
};

// Z^2 grading (GL) or 1/2 Z grading (SL) by simultaneous kernels of
// d_j = det - q^{2j} and t_j' = a22 - q^{2j'}, |j|, |j'| <= N.
WeightReport weight_decompose(const TruncatedModule& m, const Block& a);

struct RankCheck {
    std::size_t count = 0;
    std::size_t rank = 0;
    bool ok() const { return count == rank; }
};
// images b.m0 for m0 spanning M0 & F_0 and b the normal words in the letters of
// `comp` with deg b <= max_deg
RankCheck direct_sum_rank(const TruncatedModule& m, const Block& a, const Block& comp, int max_deg);

// a21 f1j^N, a12 f2j^N, a21 d22^N, a12 d21^N for N = 0..nmax in every factor
// carrying the blocks; printed (eps = 0) and corrected (general eps) forms
std::vector<IdentityCheck> verify_power_identities(const AlgebraPresentation& pres, int nmax);

}  // namespace qs
