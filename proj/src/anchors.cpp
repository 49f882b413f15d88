#include "qskein/anchors.hpp"

#include <stdexcept>

namespace qs {

const std::vector<std::pair<std::string, std::string>>& anchor_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"reflection-equation-relations", "R21 L1 R L2 = L2 R21 L1 R and its 2x2 relation list"},
        {"frt-relations", "R21 F1 F2 = F2 F1 R and its relation list"},
        {"dq-cross-relations", "difference operators: A, D blocks and R21 D1 R A2 = A2 R21 D1 R21^-1"},
        {"dq-prime-cross-relations", "A, F blocks with F2 A1 = R21 A1 R F2"},
        {"braided-cross-relations", "cross relations between tensor factors"},
        {"pbw-basis", "ordered monomials as a linear basis"},
        {"det-commutation", "q-commutation of the q-determinants with the other block"},
        {"det-centrality", "q-determinants central when eps = 1"},
        {"koszul-gl-differentials", "Koszul resolution of the trivial module, GL"},
        {"koszul-sl-differentials", "Koszul resolution of the trivial module, SL"},
        {"twisted-action-rows", "action of an external b~11 on the Koszul generators"},
        {"transfer-bimodule", "counit quotients (A-I)\\A of one block"},
        {"gk-growth", "growth exponent of a filtered module"},
        {"ore-det", "Ore family d_k = det_q(A) - q^2k"},
        {"ore-a12", "Ore family generated by a12"},
        {"ore-a21", "Ore family generated by a21"},
        {"ore-a22", "Ore family t_k = a22 - q^2k"},
        {"ore-index-domain", "integer vs half-integer index for t_k"},
        {"power-identities", "commutation of a21, a12 with powers of d, f generators"},
        {"weight-decomposition", "joint eigenspaces of det_q(A) and a22"},
        {"direct-sum-rank", "independence of the translates b.m0"},
        {"localization-vanishing", "localizations of transfer modules vanish"},
        {"torsion-free", "free module has no Ore torsion"},
        {"determinism", "repeated runs give identical reports"},
    };
    return table;
}

const std::string& anchor(const std::string& key) {
    for (const auto& [k, desc] : anchor_table())
        if (k == key) return k;
    throw std::out_of_range("unknown anchor: " + key);
}

}  // namespace qs
