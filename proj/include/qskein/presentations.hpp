#pragma once

#include "qskein/rewrite.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

enum class Flavor { GL, SL };
const char* flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

using ScalarMat = std::vector<std::vector<Scalar>>;
using PolyMat = std::vector<std::vector<NcPoly>>;

struct RMatrix {
    Flavor variant = Flavor::GL;
    std::array<std::array<Scalar, 4>, 4> e;
    ScalarMat mat() const;
};

// q on the diagonal, (q - q^-1) at (2,1) in 0-based (row 2, col 1); SL is v^-1 times it
RMatrix r_matrix(Flavor variant);
ScalarMat flip(const ScalarMat& m);  // R21 = P R P
ScalarMat scalar_inverse(const ScalarMat& m);
ScalarMat scalar_mul(const ScalarMat& a, const ScalarMat& b);
// R12 R13 R23 - R23 R13 R12 as an 8x8 matrix
ScalarMat yang_baxter_residual(Flavor variant);

enum class BlockKind { A, D, F };

// 2x2 block of generators; ids[row][col], row = superscript
struct Block {
    BlockKind kind;
    int factor;
    std::array<std::array<Letter, 2>, 2> ids;
    NcPoly entry(int row, int col) const { return NcPoly::gen(ids[row][col]); }
};

using GenMatrix = std::array<std::array<NcPoly, 2>, 2>;
GenMatrix gen_matrix(const Block& b);

enum class FactorKind { OQ, OQ_FRT, DQ, DQ_PRIME };

struct Factor {
    FactorKind kind;
    std::vector<int> blocks;  // indices into AlgebraPresentation::blocks
};

struct BuildOptions {
    bool specialize_det = true;  // SL flavor adds det_q - 1 for every block
};

struct AlgebraPresentation {
    std::string name;
    Alphabet alphabet;
    std::vector<NcPoly> relations;  // as entered
    std::vector<NcPoly> reduced;    // interreduced, oriented into `rewrite`
    RewriteSystem rewrite;
    Flavor flavor = Flavor::GL;
    int epsilon = 0;
    bool det_specialized = false;
    std::vector<Factor> factors;
    std::vector<Block> blocks;

    NcPoly nf(const NcPoly& p) const { return rewrite.normal_form(p); }
    NcPoly gen(const std::string& name) const { return NcPoly::gen(alphabet.index(name)); }
    NcPoly parse(const std::string& text) const { return parse_poly(text, alphabet); }
    const Block& block(int factor, BlockKind kind) const;
    bool has_block(int factor, BlockKind kind) const;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

struct InvalidPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BlockMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotLocalizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GluingPattern {
    int g = 1;
    int r = 1;
};

AlgebraPresentation build_oq(Flavor f, BuildOptions opt = {});
AlgebraPresentation build_oq_frt(Flavor f, BuildOptions opt = {});
AlgebraPresentation build_dq(Flavor f, BuildOptions opt = {});
AlgebraPresentation build_dq_prime(Flavor f, BuildOptions opt = {});
AlgebraPresentation build_Agr(GluingPattern p, Flavor f, BuildOptions opt = {});
// "oq", "oq_frt", "dq", "dq_prime"
AlgebraPresentation build_named(const std::string& name, Flavor f, BuildOptions opt = {});

enum class DetKind { RE, FRT };
NcPoly detq(const GenMatrix& m, DetKind kind);
NcPoly detq(const Block& b);  // kind from the block

enum class MatrixEquation {
    RE,         // R21 L1 R L2 = L2 R21 L1 R
    FRT,        // R21 F1 F2 = F2 F1 R
    DQ,         // R21 D1 R A2 = A2 R21 D1 R21^-1
    DQ_PRIME,   // F2 A1 = R21 A1 R F2
    BRAID,      // B~1 R B2 R^-1 = R B2 R^-1 B~1
    BRAID_FRT,  // F~1 B2 = R B2 R^-1 F~1
    BRAID_AF,   // A~1 R F2 = R F2 A~1
    BRAID_FF,   // F~1 F2 = R F2 F~1
};
const char* equation_name(MatrixEquation e);

// lhs - rhs of the matrix equation as a 4x4 matrix (not reduced)
PolyMat matrix_equation(MatrixEquation eq, const GenMatrix& x, const GenMatrix& y, Flavor variant);
std::vector<NcPoly> matrix_equation_entries(MatrixEquation eq, const GenMatrix& x, const GenMatrix& y,
                                            Flavor variant);

// Reduced residual. For two-block equations `first` is the block written first
// in the equation (R21 D1 R A2: D; F2 A1: F; braided: the later factor's block).
PolyMat check_matrix_relation(const AlgebraPresentation& pres, MatrixEquation eq, const Block& first,
                              const Block* second = nullptr);
bool is_zero_matrix(const PolyMat& m);

struct EquationInstance {
    MatrixEquation eq;
    int first;
    int second;  // -1 for single-block equations
};
// every matrix equation that defines the presentation (internal and cross)
std::vector<EquationInstance> defining_equations(const AlgebraPresentation& pres);
std::size_t count_nonzero(const PolyMat& m);

// Printed relation lists; letters come from the given blocks.
std::vector<NcPoly> re_relations(const Block& a);
std::vector<NcPoly> frt_relations(const Block& f);
std::vector<NcPoly> dq_cross_relations(const Block& a, const Block& d, int eps);
std::vector<NcPoly> dq_prime_cross_relations(const Block& a, const Block& f, int eps);
// table printed for a later RE block against an earlier RE block
std::vector<NcPoly> braided_printed_relations(const Block& later, const Block& earlier);
// table printed for a later FRT block against an earlier RE block
std::vector<NcPoly> braided_frt_printed_relations(const Block& later, const Block& earlier);

struct CommutationResult {
    bool ok = true;
    std::vector<std::string> failures;
};
// nf(s*x - lambda(x)*x*s) == 0 for every generator x of the listed blocks
CommutationResult check_q_commutation(const AlgebraPresentation& pres, const NcPoly& s,
                                      const std::vector<std::pair<const Block*, Scalar>>& blocks);

struct Localized {
    AlgebraPresentation pres;
    Letter inverse;
    std::vector<Scalar> lambdas;  // s*x = lambda_x * x*s
};
// One instance of a printed or corrected identity, lhs - rhs reduced.
enum class IdentityForm { Printed, Corrected };
struct IdentityCheck {
    std::string id;
    std::string instance;
    IdentityForm form = IdentityForm::Printed;
    NcPoly residual;
    bool ok() const { return residual.is_zero(); }
};

// Adjoins s^-1 when s q-commutes with every generator (lambda a power of q).
Localized adjoin_inverse(const AlgebraPresentation& pres, const NcPoly& s, const std::string& inv_name);

}  // namespace qs
