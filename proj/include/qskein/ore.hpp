#pragma once

#include "qskein/modfilt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qs {

// S1: d_k = det_q(A) - q^2k; S2: a12; S3: a21; S4: t_k = a22 - q^2k.
enum class OreId { S1, S2, S3, S4 };
const char* ore_name(OreId id);
OreId parse_ore(const std::string& s);

struct MissingWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Indices are stored doubled (k2 = 2k) so that half-integer steps are exact.
struct OreFamily {
    OreId id = OreId::S4;
    int factor = 0;
    Block a{};
    Flavor flavor = Flavor::GL;
    int epsilon = 0;

    bool indexed() const { return id == OreId::S1 || id == OreId::S4; }
    // half steps are in the domain for SL (K = 1/2 Z)
    bool half_integer() const { return id == OreId::S4 && flavor == Flavor::SL; }
    int step() const { return half_integer() ? 1 : 2; }
    NcPoly generator(int k2 = 0) const;
    // doubled indices of the level-l window: |k| <= l - 1 in domain steps
    std::vector<int> window(int level) const;
    // the element whose kernel is the level-l torsion
    NcPoly level_element(int level) const;
    std::string label(const std::vector<int>& k2s) const;
};

// Throws BlockMismatch if the factor has no A block; S1 needs GL.
OreFamily make_family(OreId id, const AlgebraPresentation& pres, int factor = 0);

std::string half_index(int k2);

// Printed and corrected Ore identities. k2s are doubled indices; n-fold
// products run over N = 0..nmax.
std::vector<IdentityCheck> verify_printed_identities(const OreFamily& fam, const AlgebraPresentation& pres,
                                                     const std::vector<int>& k2s, int nmax = 4);
std::vector<IdentityCheck> verify_printed_identities_serial(const OreFamily& fam,
                                                            const AlgebraPresentation& pres,
                                                            const std::vector<int>& k2s, int nmax = 4);

struct IdentityTally {
    std::size_t total = 0;
    std::size_t printed_ok = 0;
    std::size_t corrected_ok = 0;  // printed replaced by its correction where one exists
    std::size_t corrections = 0;
    std::vector<std::string> printed_failures;
    std::vector<std::string> corrected_failures;
};
IdentityTally tally_identities(const std::vector<IdentityCheck>& checks);

// s~ * x == y * s with s~ a family element.
struct OreCertificate {
    NcPoly s, x, s_tilde, y;
    std::vector<int> factors;  // doubled indices of s~ (S1, S4) or {power} (S2, S3)
    int level = 0;
    std::string s_tilde_label;
    NcPoly residual;
    bool ok() const { return residual.is_zero(); }
};

struct WitnessSearch {
    int bound = 0;  // 0: 2 for S1, S4 and 3 for S2, S3
    bool allow_half = true;  // S4 over SL: offer half-integer indices
};

// s is the family element at `s_factors` (doubled indices, or {power}).
std::optional<OreCertificate> find_ore_witness(const OreFamily& fam, const AlgebraPresentation& pres,
                                               const std::vector<int>& s_factors, const NcPoly& x,
                                               WitnessSearch opt = {});

// witnesses for every generator of the ambient against the base element
std::vector<OreCertificate> certify_generators(const OreFamily& fam, const AlgebraPresentation& pres,
                                               WitnessSearch opt = {});

struct TorsionSplit {
    int trunc = 0;
    std::vector<std::size_t> filtered;  // dim F_d M
    std::vector<std::size_t> torsion;   // dim t(M) & F_d
    std::vector<int> level;             // family level used at degree d, -1 if none fits (0: zero module)
    std::vector<ModVec> basis;          // torsion vectors, degree order
    int determined_upto() const;        // last degree with a level
    std::size_t quotient(int d) const { return filtered[d] - torsion[d]; }
    bool torsion_free() const;
    bool all_torsion() const;
};
// elements of F_d killed by the family element of level l, for the largest
// l <= N whose action on F_d stays inside the truncation
TorsionSplit torsion_split(const TruncatedModule& m, const OreFamily& fam);

// F_l of S^(n) M realised as s^-1 (x) F_{c n l} M with c = 3 (S1..S3) or 6 (S4):
// its dimension is that of the image of F_{c n l} M in the localization.
struct LocalizationPiece {
    OreId id = OreId::S4;
    int n = 1;
    int c = 6;
    std::vector<std::size_t> dims;     // l = 0, 1, ... while c n l <= determined
    std::vector<std::size_t> ambient;  // dim F_{c n l} M
    std::vector<std::size_t> image;    // image of F_d M for every determined d
    std::size_t witnesses = 0;
    bool injective = false;
    bool zero() const;
};
LocalizationPiece localization_piece(const TruncatedModule& m, const OreFamily& fam, int n = 1,
                                     WitnessSearch opt = {});

// K for S4 at eps = 1: integer-only witnesses fail where half steps succeed
struct DomainVerdict {
    bool integer_witness = false;
    bool half_witness = false;
    std::size_t half_identities = 0;
    std::size_t half_identities_ok = 0;
    std::string verdict;
};
DomainVerdict s4_domain_verdict();

}  // namespace qs
