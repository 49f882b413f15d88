#include "qskein/suite.hpp"

#include "qskein/anchors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qs {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

Level parse_level(const std::string& s) {
    if (s == "quick") return Level::Quick;
    if (s == "full") return Level::Full;
    throw std::invalid_argument("unknown suite level: " + s);
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// runs body, stamps the time, turns exceptions into a failed record
Record timed(std::string id, const std::string& anchor_key, const std::function<void(Record&)>& body) {
    Record r;
    r.id = std::move(id);
    r.anchor = anchor(anchor_key);
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.data["error"] = e.what();
    }
    r.seconds = since(t0);
    return r;
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::string fmt_fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string clip(std::string s, std::size_t n = 160) {
    if (s.size() > n) s = s.substr(0, n) + "...";
    return s;
}

std::string tag(const AlgebraPresentation& p) { return p.name + "/" + flavor_name(p.flavor); }

std::string tag(const TransferSpec& s) {
    std::string k = s.kind == TransferKind::Nonseparating ? "ns" : "sep";
    return k + "(g=" + std::to_string(s.g) + ",r=" + std::to_string(s.r) + ")/" + flavor_name(s.flavor);
}

const char* relation_anchor(const AlgebraPresentation& p) {
    if (p.factors.size() > 1) return "braided-cross-relations";
    if (p.name == "oq") return "reflection-equation-relations";
    if (p.name == "oq_frt") return "frt-relations";
    if (p.name == "dq") return "dq-cross-relations";
    if (p.name == "dq_prime") return "dq-prime-cross-relations";
    return "braided-cross-relations";
}

const char* ore_anchor(OreId id) {
    switch (id) {
        case OreId::S1: return "ore-det";
        case OreId::S2: return "ore-a12";
        case OreId::S3: return "ore-a21";
        case OreId::S4: return "ore-a22";
    }
    return "ore-a22";
}

// printed identities known to fail verbatim; their corrected forms are checked
const std::set<std::string>& recorded_misprints() {
    static const std::set<std::string> ids = {"s2-b22", "s4-d12", "s4-pair-d12", "s4-nfold-d11", "s4-nfold-d12",
                                              "a21-f1j-powers", "a21-d22-powers", "a12-d21-powers"};
    return ids;
}

std::string head_id(const std::string& s) { return s.substr(0, s.find(' ')); }

Json count_by_id(const std::vector<std::string>& lines) {
    std::map<std::string, int> n;
    for (const auto& l : lines) ++n[head_id(l)];
    Json out = Json::object();
    for (const auto& [k, v] : n) out[k] = v;
    return out;
}

std::vector<std::size_t> to_sizes(const std::vector<int>& v) { return {v.begin(), v.end()}; }

bool prefix_matches(const std::vector<std::size_t>& got, const std::vector<std::size_t>& want) {
    if (want.size() > got.size()) return false;
    return std::equal(want.begin(), want.end(), got.begin());
}

std::vector<OreId> families_for(Flavor f) {
    if (f == Flavor::SL) return {OreId::S2, OreId::S3, OreId::S4};
    return {OreId::S1, OreId::S2, OreId::S3, OreId::S4};
}

TransferSpec ns_spec(Flavor f) { return {1, 1, f, TransferKind::Nonseparating, 0, 1}; }
TransferSpec sep_spec(Flavor f) { return {0, 2, f, TransferKind::Separating, 0, 1}; }

}  // namespace

// ---------------------------------------------------------------------------
// single checks

Record presentation_check(const AlgebraPresentation& pres, int confluence_degree) {
    return timed("relations " + tag(pres), relation_anchor(pres), [&](Record& r) {
        std::size_t nonzero = 0;
        auto eqs = defining_equations(pres);
        for (const auto& e : eqs) {
            const Block* second = e.second < 0 ? nullptr : &pres.blocks[e.second];
            nonzero += count_nonzero(check_matrix_relation(pres, e.eq, pres.blocks[e.first], second));
        }
        auto open = check_confluence(pres.rewrite, static_cast<std::size_t>(confluence_degree));
        r.data["generators"] = pres.alphabet.size();
        r.data["rules"] = pres.rewrite.rules().size();
        r.data["equations"] = eqs.size();
        r.data["nonzero_entries"] = nonzero;
        r.data["confluence_degree"] = confluence_degree;
        r.data["unresolved_overlaps"] = open.size();
        if (!open.empty()) r.data["first_overlap"] = clip(open.front().difference.to_string(pres.alphabet));
        r.status = pass_if(nonzero == 0 && open.empty());
    });
}

Record pbw_check(const AlgebraPresentation& pres, int nmax, const std::vector<std::size_t>& expected) {
    return timed("pbw " + tag(pres), "pbw-basis", [&](Record& r) {
        std::vector<std::size_t> rw;
        for (int n = 0; n <= nmax; ++n) rw.push_back(graded_dimension_rewrite(pres.rewrite, static_cast<std::size_t>(n)));
        auto lin = graded_dimensions_linear(pres.reduced, pres.alphabet.size(), static_cast<std::size_t>(nmax));
        r.data["rewrite"] = rw;
        r.data["linear"] = lin;
        bool ok = rw == lin;
        if (!expected.empty()) {
            std::vector<std::size_t> want(expected.begin(),
                                          expected.begin() + std::min<std::size_t>(expected.size(), rw.size()));
            r.data["expected"] = want;
            ok = ok && prefix_matches(rw, want);
        }
        r.status = pass_if(ok);
    });
}

Record det_check(const std::string& name, Flavor f) {
    const bool central = f == Flavor::SL;
    return timed("det " + name + "/" + flavor_name(f), central ? "det-centrality" : "det-commutation", [&](Record& r) {
        // unspecialized so that centrality is not trivially det = 1
        AlgebraPresentation p = build_named(name, f, BuildOptions{false});
        const Block& A = p.blocks[0];
        const Block* other = p.blocks.size() > 1 ? &p.blocks[1] : nullptr;
        std::vector<std::string> failures;
        std::size_t checked = 0;
        auto run = [&](const NcPoly& s, std::vector<std::pair<const Block*, Scalar>> bl, const std::string& what) {
            auto res = check_q_commutation(p, s, bl);
            ++checked;
            for (const auto& x : res.failures) failures.push_back(what + ": " + x);
        };
        // s x = lambda x s
        if (!other) {
            run(detq(A), {{&A, Scalar(1)}}, "det own block");
        } else if (central) {
            run(detq(A), {{&A, Scalar(1)}, {other, Scalar(1)}}, "det A");
            run(detq(*other), {{&A, Scalar(1)}, {other, Scalar(1)}}, "det other");
        } else if (other->kind == BlockKind::D) {
            run(detq(A), {{&A, Scalar(1)}, {other, Scalar::q_pow(2)}}, "det A vs D");
            run(detq(*other), {{other, Scalar(1)}, {&A, Scalar::q_pow(-2)}}, "det D vs A");
        } else {
            run(detq(A), {{&A, Scalar(1)}, {other, Scalar::q_pow(-2)}}, "det A vs F");
            run(detq(*other), {{other, Scalar(1)}, {&A, Scalar::q_pow(2)}}, "det F vs A");
        }
        bool ok = failures.empty();
        if (central) {
            AlgebraPresentation s = build_named(name, f);
            bool one = true;
            for (const auto& b : s.blocks) one = one && s.nf(detq(b)) == NcPoly(Scalar(1));
            r.data["specialized_det_is_1"] = one;
            ok = ok && one;
        }
        r.data["determinants"] = checked;
        r.data["failures"] = failures;
        r.status = pass_if(ok);
    });
}

Record koszul_check(Flavor f, KoszulTable table) {
    const bool gl = f == Flavor::GL;
    std::string tname = table == KoszulTable::Printed ? "printed" : "corrected";
    return timed("koszul " + std::string(flavor_name(f)) + " " + tname,
                 gl ? "koszul-gl-differentials" : "koszul-sl-differentials", [&](Record& r) {
                     auto amb = std::make_shared<const AlgebraPresentation>(build_oq(f));
                     auto kc = build_koszul(amb, 0, f, table);
                     const std::size_t nz = d_squared_nonzero(kc);
                     auto cl = match_classical(kc);
                     auto want = gl ? std::vector<std::size_t>{1, 4, 6, 4, 1} : std::vector<std::size_t>{1, 3, 3, 1};
                     r.data["ranks"] = kc.ranks;
                     r.data["d_squared_nonzero"] = nz;
                     r.data["classical_limit"] = cl.ok;
                     if (gl && table == KoszulTable::Corrected)
                         r.data["printed_table_d_squared_nonzero"] =
                             d_squared_nonzero(build_koszul(amb, 0, f, KoszulTable::Printed));
                     r.status = pass_if(nz == 0 && cl.ok && to_sizes(kc.ranks) == want);
                 });
}

Record twisted_rows_check(bool corrected) {
    return timed("twisted action rows", "twisted-action-rows", [&](Record& r) {
        auto amb = std::make_shared<const AlgebraPresentation>(build_Agr({2, 1}, Flavor::GL));
        auto kc = build_koszul(amb, 0, Flavor::GL);
        const Block& B = amb->block(1, BlockKind::A);
        auto act = attach_twisted_action(kc, std::vector<NcPoly>{B.entry(0, 0)});
        const PolyMat& rows = act.tables.at(0).at(1);
        PolyMat printed = printed_twisted_rows(B);
        std::vector<int> mismatched;
        Json diffs = Json::array();
        for (int i = 0; i < 4; ++i) {
            if (rows[i] == printed[i]) continue;
            mismatched.push_back(i + 1);
            Json d;
            d["row"] = "x" + std::to_string(i + 1);
            for (int j = 0; j < 4; ++j)
                if (!(rows[i][j] == printed[i][j])) {
                    d["column"] = "x" + std::to_string(j + 1);
                    d["derived"] = rows[i][j].to_string(amb->alphabet);
                    d["printed"] = printed[i][j].to_string(amb->alphabet);
                    break;
                }
            diffs.push_back(d);
        }
        std::vector<int> external;
        for (std::size_t i = 0; i < amb->blocks.size(); ++i)
            if (amb->blocks[i].factor == 1) external.push_back(static_cast<int>(i));
        auto all = attach_twisted_action(kc, external);
        r.data["rows_reproduced"] = 4 - mismatched.size();
        r.data["mismatches"] = diffs;
        r.data["commutes_with_delta"] = act.residual_nonzero == 0 && all.residual_nonzero == 0;
        r.data["unsolved"] = act.unsolved + all.unsolved;
        const bool eq = act.residual_nonzero == 0 && all.residual_nonzero == 0 && act.unsolved + all.unsolved == 0;
        bool ok = eq && mismatched.empty();
        if (corrected) {
            // recorded correction: x2 row carries q^-2 <-2> on x4 b~12
            const NcPoly want = Scalar::q_pow(-2) * bracket(-2) * B.entry(0, 1);
            ok = eq && mismatched == std::vector<int>{2} && rows[1][3] == want;
        }
        r.status = pass_if(ok);
    });
}

Record hilbert_check(const TransferSpec& spec, int N, const std::vector<std::size_t>& expected) {
    return timed("hilbert " + tag(spec), "transfer-bimodule", [&](Record& r) {
        auto t = transfer_bimodule(spec, N);
        auto h = t.module.hilbert();
        r.data["trunc"] = N;
        r.data["hilbert"] = h;
        r.data["expected"] = expected;
        r.status = pass_if(prefix_matches(h, expected));
    });
}

Record gk_check(const TransferSpec& spec, int N) {
    return timed("gk " + tag(spec), "gk-growth", [&](Record& r) {
        auto t = transfer_bimodule(spec, N);
        const int target = static_cast<int>(t.ambient->alphabet.size()) / 2;
        auto g = gk_estimate(t.module, target);
        r.data["trunc"] = N;
        r.data["hilbert"] = g.hilbert;
        r.data["window"] = {g.window_lo, g.window_hi};
        r.data["exponent"] = g.exponent.get_str();
        r.data["rounded"] = g.rounded;
        r.data["target"] = target;
        r.data["raw_log_ratio"] = fmt_fixed(g.raw_log_ratio);
        r.data["polynomial_ok"] = g.polynomial_ok;
        r.data["verdict"] = verdict_name(g.verdict);
        r.status = pass_if(g.verdict == Verdict::Holonomic);
    });
}

Record ore_check(const AlgebraPresentation& pres, OreId id, int krange, int nmax, bool corrected) {
    return timed("ore " + std::string(ore_name(id)) + " " + tag(pres), ore_anchor(id), [&](Record& r) {
        auto fam = make_family(id, pres, 0);
        std::vector<int> k2s;
        for (int k2 = -2 * krange; k2 <= 2 * krange; k2 += fam.step()) k2s.push_back(k2);
        auto tally = tally_identities(verify_printed_identities(fam, pres, k2s, nmax));
        r.data["k_range"] = krange;
        r.data["half_integer"] = fam.half_integer();
        r.data["n_max"] = nmax;
        r.data["instances"] = tally.total;
        r.data["printed_ok"] = tally.printed_ok;
        r.data["with_corrections_ok"] = tally.corrected_ok;
        r.data["printed_failures"] = count_by_id(tally.printed_failures);
        if (!tally.corrected_failures.empty()) r.data["corrected_failures"] = count_by_id(tally.corrected_failures);
        bool ok = tally.printed_ok == tally.total;
        if (corrected) {
            ok = tally.corrected_ok == tally.total;
            for (const auto& f : tally.printed_failures) ok = ok && recorded_misprints().count(head_id(f));
        }
        r.status = pass_if(ok);
    });
}

Record witness_check(const AlgebraPresentation& pres, OreId id) {
    return timed("witness " + std::string(ore_name(id)) + " " + tag(pres), ore_anchor(id), [&](Record& r) {
        auto fam = make_family(id, pres, 0);
        auto certs = certify_generators(fam, pres);
        Json w = Json::array();
        bool ok = true;
        for (const auto& c : certs) {
            w.push_back({{"x", c.x.to_string(pres.alphabet)}, {"s_tilde", c.s_tilde_label}, {"level", c.level}});
            ok = ok && c.ok();
        }
        r.data["witnesses"] = w;
        r.status = pass_if(ok && certs.size() == pres.alphabet.size());
    });
}

Record domain_check() {
    return timed("index domain S4/SL", "ore-index-domain", [&](Record& r) {
        auto v = s4_domain_verdict();
        r.data["integer_witness"] = v.integer_witness;
        r.data["half_witness"] = v.half_witness;
        r.data["half_identities"] = v.half_identities;
        r.data["half_identities_ok"] = v.half_identities_ok;
        r.data["verdict"] = v.verdict;
        r.status = pass_if(v.half_witness && !v.integer_witness && v.half_identities_ok == v.half_identities);
    });
}

Record power_check(const AlgebraPresentation& pres, int nmax, bool corrected) {
    const std::string form = corrected ? "corrected" : "printed";
    return timed("powers " + form + " " + tag(pres), "power-identities", [&](Record& r) {
        const IdentityForm want = corrected ? IdentityForm::Corrected : IdentityForm::Printed;
        std::size_t total = 0, ok = 0;
        std::vector<std::string> failures;
        std::set<std::string> printed_bad;
        for (const auto& c : verify_power_identities(pres, nmax)) {
            if (c.form == IdentityForm::Printed && !c.ok()) printed_bad.insert(c.id);
            if (c.form != want) continue;
            ++total;
            if (c.ok())
                ++ok;
            else
                failures.push_back(c.id + " " + c.instance);
        }
        r.data["n_max"] = nmax;
        r.data["instances"] = total;
        r.data["ok"] = ok;
        r.data["failures"] = count_by_id(failures);
        bool pass = ok == total;
        // printed forms are the eps = 0 case
        if (corrected && pres.epsilon == 0)
            for (const auto& id : printed_bad) pass = pass && recorded_misprints().count(id);
        r.status = pass_if(pass);
    });
}

Record weight_check(const TransferSpec& spec, int N, Side side) {
    return timed("weights " + tag(spec) + " " + side_name(side), "weight-decomposition", [&](Record& r) {
        auto t = transfer_bimodule(spec, N, side);
        auto rep = weight_decompose(t.module, t.ambient->blocks[t.collapsed]);
        r.data["level"] = rep.level;
        r.data["total"] = rep.total;
        r.data["components"] = rep.components.size();
        r.data["shift_checked"] = rep.shift_checked;
        r.data["shift_failures"] = rep.shift_failures;
        r.status = pass_if(rep.complete() && rep.shift_failures == 0);
    });
}

Record direct_sum_check(const TransferSpec& spec, int N, int max_deg) {
    return timed("direct sum " + tag(spec), "direct-sum-rank", [&](Record& r) {
        auto t = transfer_bimodule(spec, N, Side::Left);
        auto rc = direct_sum_rank(t.module, t.ambient->blocks[t.collapsed], t.ambient->blocks[t.complementary], max_deg);
        r.data["trunc"] = N;
        r.data["translates"] = rc.count;
        r.data["rank"] = rc.rank;
        r.status = pass_if(rc.ok() && rc.count > 0);
    });
}

Record localization_check(const TransferSpec& spec, int N, Side side) {
    return timed("localization " + tag(spec) + " " + side_name(side), "localization-vanishing", [&](Record& r) {
        auto t = transfer_bimodule(spec, N, side);
        const int factor = t.ambient->blocks[t.collapsed].factor;
        bool ok = true;
        for (OreId id : families_for(spec.flavor)) {
            auto fam = make_family(id, *t.ambient, factor);
            auto lp = localization_piece(t.module, fam);
            auto ts = torsion_split(t.module, fam);
            Json j;
            j["determined_upto"] = ts.determined_upto();
            j["filtered"] = ts.filtered;
            j["torsion"] = ts.torsion;
            j["image"] = lp.image;
            j["witnesses"] = lp.witnesses;
            j["zero"] = lp.zero();
            r.data[ore_name(id)] = j;
            ok = ok && lp.zero();
        }
        r.status = pass_if(ok);
    });
}

Record free_torsion_check(Flavor f, int N) {
    return timed("free module torsion " + std::string(flavor_name(f)), "torsion-free", [&](Record& r) {
        auto dq = std::make_shared<const AlgebraPresentation>(build_dq(f));
        auto m = build_module(dq, {}, N, Side::Left);
        bool ok = true;
        for (OreId id : families_for(f)) {
            auto ts = torsion_split(m, make_family(id, *dq, 0));
            Json j;
            j["determined_upto"] = ts.determined_upto();
            j["torsion"] = ts.torsion;
            j["torsion_free"] = ts.torsion_free();
            r.data[ore_name(id)] = j;
            ok = ok && ts.torsion_free();
        }
        r.status = pass_if(ok);
    });
}

// ---------------------------------------------------------------------------
// criteria

namespace {

std::vector<AlgebraPresentation> single_factor_algebras() {
    std::vector<AlgebraPresentation> out;
    for (const char* name : {"oq", "oq_frt", "dq", "dq_prime"})
        for (Flavor f : {Flavor::GL, Flavor::SL}) out.push_back(build_named(name, f));
    return out;
}

std::vector<std::size_t> pbw_expected(const AlgebraPresentation& p) {
    if (p.flavor != Flavor::GL) return {};
    if (p.name == "oq") return {1, 4, 10, 20, 35};
    if (p.name == "dq") return {1, 8, 36, 120};  // C(n+7, 7)
    return {};
}

void criterion_body(Criterion& c, Level level) {
    const bool full = level == Level::Full;
    auto& rs = c.records;
    switch (c.id) {
        case 1:
            c.title = "relation consistency";
            c.limit_seconds = 30;
            for (const auto& p : single_factor_algebras()) rs.push_back(presentation_check(p, full ? 4 : 3));
            break;
        case 2:
            c.title = "PBW dimensions";
            for (const auto& p : single_factor_algebras()) rs.push_back(pbw_check(p, full ? 4 : 3, pbw_expected(p)));
            break;
        case 3:
            c.title = "q-determinant ledger";
            for (const char* name : {"oq", "oq_frt", "dq", "dq_prime"})
                for (Flavor f : {Flavor::GL, Flavor::SL}) rs.push_back(det_check(name, f));
            break;
        case 4:
            c.title = "braided products";
            c.limit_seconds = 120;
            for (GluingPattern g : {GluingPattern{2, 1}, GluingPattern{1, 2}}) {
                auto p = build_Agr(g, Flavor::GL);
                rs.push_back(presentation_check(p, 3));
                rs.push_back(pbw_check(p, 2, {1, 16, 136}));  // C(n+15, 15)
            }
            break;
        case 5:
            c.title = "Koszul complexes";
            rs.push_back(koszul_check(Flavor::GL, KoszulTable::Corrected));
            rs.push_back(koszul_check(Flavor::SL, KoszulTable::Corrected));
            rs.push_back(twisted_rows_check(!full));
            break;
        case 6:
            c.title = "transfer modules";
            rs.push_back(hilbert_check(ns_spec(Flavor::GL), 3, {1, 4, 10, 20}));
            rs.push_back(hilbert_check(sep_spec(Flavor::GL), 3, {1, 4, 10, 20}));
            rs.push_back(gk_check(ns_spec(Flavor::GL), full ? 6 : 5));
            break;
        case 7: {
            c.title = "Ore ledger";
            c.limit_seconds = 180;
            std::vector<AlgebraPresentation> hosts;
            for (Flavor f : {Flavor::GL, Flavor::SL}) {
                hosts.push_back(build_dq(f));
                hosts.push_back(build_dq_prime(f));
                hosts.push_back(build_Agr({2, 1}, f));
                hosts.push_back(build_Agr({1, 2}, f));
            }
            for (const auto& h : hosts)
                for (OreId id : families_for(h.flavor))
                    rs.push_back(ore_check(h, id, full ? 2 : 1, full ? 4 : 2, !full));
            for (Flavor f : {Flavor::GL, Flavor::SL}) {
                auto dq = build_dq(f);
                for (OreId id : families_for(f)) rs.push_back(witness_check(dq, id));
            }
            rs.push_back(domain_check());
            break;
        }
        case 8: {
            c.title = "power identities, weights, direct sums";
            const int n = full ? 4 : 3;
            for (const char* name : {"dq", "dq_prime"}) {
                rs.push_back(power_check(build_named(name, Flavor::GL), n, !full));
                rs.push_back(power_check(build_named(name, Flavor::SL), n, true));
            }
            rs.push_back(weight_check(ns_spec(Flavor::GL), n, Side::Right));
            rs.push_back(weight_check(sep_spec(Flavor::GL), n, Side::Right));
            rs.push_back(weight_check(ns_spec(Flavor::SL), n, Side::Right));
            rs.push_back(direct_sum_check(ns_spec(Flavor::GL), n, n - 1));
            rs.push_back(direct_sum_check(sep_spec(Flavor::GL), n, n - 1));
            break;
        }
        case 9: {
            c.title = "localization vanishing";
            const int n = full ? 4 : 3;
            for (Flavor f : {Flavor::GL, Flavor::SL})
                for (const auto& spec : {ns_spec(f), sep_spec(f)})
                    for (Side s : {Side::Right, Side::Left}) rs.push_back(localization_check(spec, n, s));
            for (Flavor f : {Flavor::GL, Flavor::SL}) rs.push_back(free_torsion_check(f, n));
            break;
        }
        default:
            throw std::invalid_argument("no criterion " + std::to_string(c.id));
    }
}

void finish(Criterion& c) {
    std::size_t passed = 0;
    std::vector<std::string> failing;
    for (const auto& r : c.records) {
        if (r.status == Status::Pass) ++passed;
        if (r.status == Status::Fail) failing.push_back(r.id);
    }
    c.pass = failing.empty() && !c.records.empty();
    if (c.limit_seconds > 0 && c.seconds > c.limit_seconds) c.pass = false;
    c.summary = std::to_string(passed) + "/" + std::to_string(c.records.size()) + " checks pass";
    if (!failing.empty()) {
        c.summary += "; failing:";
        for (const auto& f : failing) c.summary += " [" + f + "]";
    }
}

}  // namespace

Criterion run_criterion(int id, Level level) {
    if (id == 10) {
        auto all = run_suite(level);
        return all.back();
    }
    Criterion c;
    c.id = id;
    const auto t0 = Clock::now();
    criterion_body(c, level);
    c.seconds = since(t0);
    finish(c);
    return c;
}

std::vector<Criterion> run_suite(Level level) {
    const auto t0 = Clock::now();
    std::vector<Criterion> first;
    for (int id = 1; id <= 9; ++id) first.push_back(run_criterion(id, level));

    Criterion det;
    det.id = 10;
    det.title = "determinism";
    det.limit_seconds = 600;
    for (int id = 1; id <= 9; ++id) {
        Criterion again = run_criterion(id, level);
        const bool same = to_json(again, false).dump() == to_json(first[id - 1], false).dump();
        Record r;
        r.id = "rerun criterion " + std::to_string(id);
        r.anchor = anchor("determinism");
        r.status = pass_if(same);
        r.data["identical"] = same;
        r.seconds = again.seconds;
        det.records.push_back(r);
    }
    det.seconds = since(t0);
    finish(det);
    first.push_back(det);
    return first;
}

// ---------------------------------------------------------------------------
// json

Json to_json(const Record& r, bool timing) {
    Json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = status_name(r.status);
    j["data"] = r.data;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

Json to_json(const Criterion& c, bool timing) {
    Json j;
    j["criterion"] = c.id;
    j["title"] = c.title;
    j["status"] = c.pass ? "pass" : "fail";
    j["summary"] = c.summary;
    if (c.limit_seconds > 0) j["limit_seconds"] = c.limit_seconds;
    if (timing) j["seconds"] = c.seconds;
    Json rs = Json::array();
    for (const auto& r : c.records) rs.push_back(to_json(r, timing));
    j["records"] = rs;
    return j;
}

Json suite_report(const std::vector<Criterion>& cs, Level level, bool timing) {
    Json j;
    j["suite"] = level == Level::Full ? "full" : "quick";
    std::size_t failed = 0;
    Json arr = Json::array();
    for (const auto& c : cs) {
        failed += !c.pass;
        arr.push_back(to_json(c, timing));
    }
    j["criteria"] = arr;
    j["failed"] = failed;
    return j;
}

}  // namespace qs
