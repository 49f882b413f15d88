#include "qskein/rewrite.hpp"

#include "qskein/linalg.hpp"

#include <algorithm>
#include <functional>

namespace qs {

RewriteSystem::RewriteSystem(Alphabet al, std::vector<RewriteRule> rules)
    : al_(std::move(al)), rules_(std::move(rules)) {
    const std::size_t n = al_.size();
    single_.assign(n, -1);
    pair_.assign(n * n, -1);
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& l = rules_[i].lhs;
        if (l.empty()) throw NotOrientable("relation reduces to a nonzero constant");
        max_len_ = std::max(max_len_, l.size());
        const auto dup = [&] { throw DuplicateLeadingWord("duplicate leading word " + al_.word_string(l)); };
        if (l.size() > 2) {
            if (!longer_.emplace(l, static_cast<int>(i)).second) dup();
            continue;
        }
        int& slot = l.size() == 1 ? single_[l[0]] : pair_[l[0] * n + l[1]];
        if (slot != -1) dup();
        slot = static_cast<int>(i);
    }
    // proper subword of another lhs
    for (const auto& r : rules_) {
        for (std::size_t s = 0; s < r.lhs.size(); ++s)
            for (std::size_t len = 1; s + len <= r.lhs.size(); ++len) {
                if (len == r.lhs.size()) continue;
                Word sub = r.lhs.substr(s, len);
                bool hit = (len == 1 && single_[sub[0]] >= 0) || (len == 2 && pair_[sub[0] * n + sub[1]] >= 0) ||
                           (len > 2 && longer_.count(sub));
                if (hit)
                    throw InclusionAmbiguity(al_.word_string(sub) + " is a subword of " + al_.word_string(r.lhs));
            }
    }
}

bool RewriteSystem::homogeneous() const {
    for (const auto& r : rules_)
        for (const auto& [w, c] : r.rhs.terms())
            if (w.size() != r.lhs.size()) return false;
    return true;
}

int RewriteSystem::match_at(const Word& w, std::size_t pos) const {
    const std::size_t n = al_.size();
    if (int r = single_[w[pos]]; r >= 0) return r;
    if (pos + 1 < w.size())
        if (int r = pair_[w[pos] * n + w[pos + 1]]; r >= 0) return r;
    if (!longer_.empty())
        for (std::size_t len = 3; len <= max_len_ && pos + len <= w.size(); ++len) {
            auto it = longer_.find(w.substr(pos, len));
            if (it != longer_.end()) return it->second;
        }
    return -1;
}

int RewriteSystem::match_ending(const Word& w, std::size_t end) const {
    const std::size_t n = al_.size();
    if (int r = single_[w[end - 1]]; r >= 0) return r;
    if (end >= 2)
        if (int r = pair_[w[end - 2] * n + w[end - 1]]; r >= 0) return r;
    if (!longer_.empty())
        for (std::size_t len = 3; len <= max_len_ && len <= end; ++len) {
            auto it = longer_.find(w.substr(end - len, len));
            if (it != longer_.end()) return it->second;
        }
    return -1;
}

bool RewriteSystem::is_normal(const Word& w) const {
    for (std::size_t i = 1; i <= w.size(); ++i)
        if (match_ending(w, i) >= 0) return false;
    return true;
}

NcPoly RewriteSystem::normal_form(const NcPoly& p, Strategy s) const {
    // Replacement words are smaller than the word replaced, so the largest
    // pending word is final once it has no redex.
    NcPoly::Terms work = p.terms();
    NcPoly out;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        Scalar c = std::move(top->second);
        work.erase(top);
        int rule = -1;
        std::size_t pos = 0;
        if (s == Strategy::Leftmost) {
            for (pos = 0; pos < w.size(); ++pos)
                if ((rule = match_at(w, pos)) >= 0) break;
        } else {
            for (std::size_t end = w.size(); end > 0; --end)
                if ((rule = match_ending(w, end)) >= 0) {
                    pos = end - rules_[rule].lhs.size();
                    break;
                }
        }
        if (rule < 0) {
            out.add_term(w, c);
            continue;
        }
        const RewriteRule& r = rules_[rule];
        Word prefix = w.substr(0, pos), suffix = w.substr(pos + r.lhs.size());
        for (const auto& [u, cu] : r.rhs.terms()) {
            Word nw = prefix + u + suffix;
            Scalar x = c * cu;
            auto [it, fresh] = work.try_emplace(std::move(nw), x);
            if (!fresh) {
                it->second += x;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return out;
}

std::vector<NcPoly> interreduce(const std::vector<NcPoly>& relations) {
    Echelon<Word, DeglexLess> ech;
    for (const auto& r : relations) ech.insert(r.terms());
    // pivot rows are monic; clear the other leading words out of each tail
    std::vector<NcPoly> out;
    for (const auto& [lead, row] : ech.pivots()) {
        NcPoly::Terms tail = row;
        tail.erase(lead);
        NcPoly p = NcPoly::word(lead);
        for (const auto& [w, c] : ech.reduce(std::move(tail))) p.add_term(w, c);
        out.push_back(std::move(p));
    }
    return out;
}

RewriteSystem orient(const std::vector<NcPoly>& relations, const Alphabet& al) {
    std::vector<RewriteRule> rules;
    std::map<Word, std::size_t, DeglexLess> seen;
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const NcPoly& r = relations[i];
        if (r.is_zero()) continue;
        const Word& lw = r.lead_word();
        Scalar lc = r.lead_coeff();
        if (lc.is_zero()) throw NotOrientable("zero leading coefficient");
        if (lw.empty()) throw NotOrientable("relation is a nonzero constant");
        if (seen.count(lw)) throw DuplicateLeadingWord("duplicate leading word " + al.word_string(lw));
        seen.emplace(lw, i);
        NcPoly rhs;
        Scalar f = -lc.inverse();
        for (const auto& [w, c] : r.terms())
            if (w != lw) rhs.add_term(w, f * c);
        rules.push_back({lw, std::move(rhs)});
    }
    return RewriteSystem(al, std::move(rules));
}

std::vector<Overlap> overlap_ambiguities(const RewriteSystem& sys, std::size_t degree_bound) {
    std::vector<Overlap> out;
    const auto& rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& l1 = rules[i].lhs;
            const Word& l2 = rules[j].lhs;
            for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
                if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
                Word w = l1 + l2.substr(k);
                if (w.size() > degree_bound) continue;
                out.push_back({w, i, j, {}});
            }
        }
    return out;
}

namespace {

NcPoly resolve(const RewriteSystem& sys, const Overlap& o) {
    const auto& r1 = sys.rules()[o.first_rule];
    const auto& r2 = sys.rules()[o.second_rule];
    std::size_t p2 = o.word.size() - r2.lhs.size();
    NcPoly a = r1.rhs * NcPoly::word(o.word.substr(r1.lhs.size()));
    NcPoly b = NcPoly::word(o.word.substr(0, p2)) * r2.rhs;
    return sys.normal_form(a) - sys.normal_form(b);
}

}  // namespace

std::vector<Overlap> check_confluence_serial(const RewriteSystem& sys, std::size_t degree_bound) {
    std::vector<Overlap> bad;
    for (auto& o : overlap_ambiguities(sys, degree_bound)) {
        o.difference = resolve(sys, o);
        if (!o.difference.is_zero()) bad.push_back(std::move(o));
    }
    return bad;
}

std::vector<Overlap> check_confluence(const RewriteSystem& sys, std::size_t degree_bound) {
    std::vector<Overlap> all = overlap_ambiguities(sys, degree_bound);
    const long n = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) all[static_cast<std::size_t>(i)].difference = resolve(sys, all[static_cast<std::size_t>(i)]);
    std::vector<Overlap> bad;
    for (auto& o : all)
        if (!o.difference.is_zero()) bad.push_back(std::move(o));
    return bad;
}

std::size_t graded_dimension_rewrite(const RewriteSystem& sys, std::size_t n) {
    const std::size_t m = sys.alphabet().size();
    Word w;
    w.reserve(n);
    std::function<std::size_t()> dfs = [&]() -> std::size_t {
        if (w.size() == n) return 1;
        std::size_t total = 0;
        for (std::size_t x = 0; x < m; ++x) {
            w.push_back(static_cast<Letter>(x));
            if (sys.match_ending(w, w.size()) < 0) total += dfs();
            w.pop_back();
        }
        return total;
    };
    return dfs();
}

namespace {

bool is_homogeneous(const NcPoly& p) {
    for (const auto& [w, c] : p.terms())
        if (static_cast<int>(w.size()) != p.degree()) return false;
    return true;
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// rank of span{u*r*w} with |u|+|w| in [lo, hi] - deg r
std::size_t ideal_rank(const std::vector<NcPoly>& rels, std::size_t m, std::size_t n, bool exact) {
    Echelon<Word, DeglexLess> ech;
    for (const auto& r : rels) {
        if (r.is_zero() || static_cast<std::size_t>(r.degree()) > n) continue;
        std::size_t free = n - static_cast<std::size_t>(r.degree());
        for (std::size_t tot = exact ? free : 0; tot <= free; ++tot)
            for (std::size_t lu = 0; lu <= tot; ++lu) {
                auto us = all_words(m, lu);
                auto ws = all_words(m, tot - lu);
                for (const auto& u : us) {
                    NcPoly ur = NcPoly::word(u) * r;
                    for (const auto& w : ws) ech.insert((ur * NcPoly::word(w)).terms());
                }
            }
    }
    return ech.rank();
}

std::size_t filtered_dim(const std::vector<NcPoly>& rels, std::size_t m, std::size_t n) {
    std::size_t words = 0;
    for (std::size_t k = 0; k <= n; ++k) words += ipow(m, k);
    return words - ideal_rank(rels, m, n, false);
}

}  // namespace

std::size_t graded_dimension_linear(const std::vector<NcPoly>& relations, std::size_t alphabet_size,
                                    std::size_t n) {
    bool homog = std::all_of(relations.begin(), relations.end(), is_homogeneous);
    if (homog) return ipow(alphabet_size, n) - ideal_rank(relations, alphabet_size, n, true);
    std::size_t hi = filtered_dim(relations, alphabet_size, n);
    std::size_t lo = n == 0 ? 0 : filtered_dim(relations, alphabet_size, n - 1);
    return hi - lo;
}

std::vector<std::size_t> graded_dimensions_linear_serial(const std::vector<NcPoly>& relations,
                                                         std::size_t alphabet_size, std::size_t nmax) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= nmax; ++n) out.push_back(graded_dimension_linear(relations, alphabet_size, n));
    return out;
}

std::vector<std::size_t> graded_dimensions_linear(const std::vector<NcPoly>& relations,
                                                  std::size_t alphabet_size, std::size_t nmax) {
    std::vector<std::size_t> out(nmax + 1);
    const long top = static_cast<long>(nmax);
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = top; n >= 0; --n)
        out[static_cast<std::size_t>(n)] = graded_dimension_linear(relations, alphabet_size, static_cast<std::size_t>(n));
    return out;
}

}  // namespace qs
