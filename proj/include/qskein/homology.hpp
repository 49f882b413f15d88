#pragma once

#include "qskein/modfilt.hpp"

#include <string>
#include <vector>

namespace qs {

struct TruncationTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class KoszulTable { Printed, Corrected };

// Free resolution of the trivial right module k over the A block of one factor.
// Position -p has basis names[p]; diff[p-1] is the p-th differential with
// delta(e_i) = sum_j f_j * diff[p-1][i][j] (f_j the basis one position up).
struct KoszulComplex {
    PresentationPtr ambient;
    int block = 0;  // index into ambient->blocks
    Flavor flavor = Flavor::GL;
    KoszulTable table = KoszulTable::Corrected;
    std::vector<int> ranks;
    std::vector<std::vector<std::string>> names;
    std::vector<PolyMat> diff;
    int length() const { return static_cast<int>(ranks.size()) - 1; }
};

// GL: ranks 1,4,6,4,1 on x1..x4 ~ a22-1, a11-1, a12, a21; SL: ranks 1,3,3,1 on
// x1..x3 ~ a22-1, a12, a21. The SL table needs det = 1 in the ambient.
KoszulComplex build_koszul(PresentationPtr ambient, int factor, Flavor flavor,
                           KoszulTable table = KoszulTable::Corrected);

// reduced composites diff[p-1] after diff[p], one matrix per p = 2..length
std::vector<PolyMat> check_d_squared(const KoszulComplex& kc);
std::size_t d_squared_nonzero(const KoszulComplex& kc);

// Each basis element, specialized at v = 1 with commuting letters, is matched
// to +-e_S so that delta(e_S) = sum_t (-1)^(k-t) e_{S - s_t} y_{s_t}.
struct ClassicalMatch {
    bool ok = false;
    std::vector<std::vector<int>> subset;  // bitmask per basis element
    std::vector<std::vector<int>> sign;
    std::vector<std::string> mismatches;
};
ClassicalMatch match_classical(const KoszulComplex& kc);

// Homology of the filtered complex F_n C_p = (M_{<=n-p})^{rank_p} with maps
// (m_i) -> (sum_i diff[i][j] m_i)_j, for a left module M over the ambient.
// stable_dims[p][n] counts cycles of F_n modulo boundaries of all of F_N, which
// drops classes that only die one degree above the truncation.
struct InverseImage {
    int trunc = 0;
    std::vector<int> ranks;
    std::vector<std::vector<std::size_t>> dims;  // dims[p][n], position -p
    std::vector<std::vector<std::size_t>> stable_dims;
    std::size_t raw(int p) const { return dims[p].back(); }
    std::size_t stable(int p) const { return stable_dims[p][static_cast<std::size_t>(trunc - 2)]; }
};
InverseImage truncated_inverse_image(const KoszulComplex& kc, const TruncatedModule& M);
InverseImage truncated_inverse_image_serial(const KoszulComplex& kc, const TruncatedModule& M);

// b.e_i = sum_j e_j c_ij with c_ij in span(1, external letters), solved position
// by position so that acting commutes with delta.
struct TwistedLeftAction {
    std::vector<NcPoly> generators;
    std::vector<std::vector<PolyMat>> tables;  // [generator][position]
    std::size_t unsolved = 0;
    std::size_t residual_nonzero = 0;  // entries of action.delta - delta.action
};
TwistedLeftAction attach_twisted_action(const KoszulComplex& kc, const std::vector<NcPoly>& generators);
// every letter of the listed blocks
TwistedLeftAction attach_twisted_action(const KoszulComplex& kc, const std::vector<int>& external_blocks);

// the four printed rows b~11 . x_i (GL), as a 4x4 coefficient table
PolyMat printed_twisted_rows(const Block& ext);

// Koszul dual algebra on y1..y4, stored as printed
struct KoszulDual {
    Alphabet alphabet;
    std::vector<NcPoly> relations;
    bool confluent = false;
    std::vector<std::size_t> dims;  // degrees 0..5
    std::size_t total = 0;
};
KoszulDual koszul_dual();

}  // namespace qs
