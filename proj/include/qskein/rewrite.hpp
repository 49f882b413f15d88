#pragma once

#include "qskein/freealg.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qs {

struct RewriteRule {
    Word lhs;
    NcPoly rhs;  // every word strictly below lhs
};

struct DuplicateLeadingWord : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotOrientable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InclusionAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Strategy { Leftmost, Rightmost };

class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet al, std::vector<RewriteRule> rules);

    const Alphabet& alphabet() const { return al_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::size_t max_lhs() const { return max_len_; }
    bool homogeneous() const;

    // index of a rule whose lhs occurs at position pos of w, or -1
    int match_at(const Word& w, std::size_t pos) const;
    // index of a rule whose lhs ends at position end (exclusive), or -1
    int match_ending(const Word& w, std::size_t end) const;
    bool is_normal(const Word& w) const;

    NcPoly normal_form(const NcPoly& p, Strategy s = Strategy::Leftmost) const;
    NcPoly normal_form(const Word& w) const { return normal_form(NcPoly::word(w)); }

private:
    Alphabet al_;
    std::vector<RewriteRule> rules_;
    std::size_t max_len_ = 0;
    std::vector<int> single_;  // by letter
    std::vector<int> pair_;    // by first*n + second
    std::map<Word, int> longer_;
};

// Reduced row echelon form by leading word: leading words distinct, each
// leading word absent from the other relations, rows monic.
std::vector<NcPoly> interreduce(const std::vector<NcPoly>& relations);

// lambda*lhs + lower = 0  becomes  lhs -> -lambda^-1 * lower
RewriteSystem orient(const std::vector<NcPoly>& relations, const Alphabet& al);

struct Overlap {
    Word word;
    std::size_t first_rule, second_rule;
    NcPoly difference;
};

std::vector<Overlap> overlap_ambiguities(const RewriteSystem& sys, std::size_t degree_bound);
// unresolved overlaps of length <= degree_bound
std::vector<Overlap> check_confluence(const RewriteSystem& sys, std::size_t degree_bound);
std::vector<Overlap> check_confluence_serial(const RewriteSystem& sys, std::size_t degree_bound);

// number of normal words of length n
std::size_t graded_dimension_rewrite(const RewriteSystem& sys, std::size_t n);

// dim of the degree-n part of free/(relations): graded for homogeneous relations,
// dim F_n - dim F_{n-1} of the filtered quotient otherwise
std::size_t graded_dimension_linear(const std::vector<NcPoly>& relations, std::size_t alphabet_size,
                                    std::size_t n);
std::vector<std::size_t> graded_dimensions_linear(const std::vector<NcPoly>& relations,
                                                  std::size_t alphabet_size, std::size_t nmax);
std::vector<std::size_t> graded_dimensions_linear_serial(const std::vector<NcPoly>& relations,
                                                         std::size_t alphabet_size, std::size_t nmax);

}  // namespace qs
