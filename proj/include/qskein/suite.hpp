#pragma once

#include "qskein/homology.hpp"
#include "qskein/ore.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace qs {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

struct Record {
    std::string id;
    std::string anchor;
    Status status = Status::Pass;
    Json data = Json::object();
    double seconds = 0;
};

// Quick runs degree <= 3 ledgers and judges printed tables against the
// recorded corrections; Full runs every criterion at its stated size.
enum class Level { Quick, Full };
Level parse_level(const std::string& s);

struct Criterion {
    int id = 0;
    std::string title;
    std::vector<Record> records;
    bool pass = false;
    std::string summary;
    double seconds = 0;
    double limit_seconds = 0;  // runtime ceiling, 0: none
};

// --- single checks, reused by the CLI subcommands ---

// defining matrix equations and overlap resolution
Record presentation_check(const AlgebraPresentation& pres, int confluence_degree);
// rewrite count vs free-algebra linear algebra, optionally against expected values
Record pbw_check(const AlgebraPresentation& pres, int nmax, const std::vector<std::size_t>& expected = {});
// q-commutation of det_q(A) and det_q(D or F) at eps = 0; centrality at eps = 1
Record det_check(const std::string& name, Flavor f);
Record koszul_check(Flavor f, KoszulTable table);
Record twisted_rows_check(bool corrected);
Record hilbert_check(const TransferSpec& spec, int N, const std::vector<std::size_t>& expected);
Record gk_check(const TransferSpec& spec, int N);
// identity ledger of one family on one host; corrected: judge against corrections
Record ore_check(const AlgebraPresentation& pres, OreId id, int krange, int nmax, bool corrected);
Record witness_check(const AlgebraPresentation& pres, OreId id);
Record domain_check();
Record power_check(const AlgebraPresentation& pres, int nmax, bool corrected);
Record weight_check(const TransferSpec& spec, int N, Side side);
Record direct_sum_check(const TransferSpec& spec, int N, int max_deg);
Record localization_check(const TransferSpec& spec, int N, Side side);
Record free_torsion_check(Flavor f, int N);

Criterion run_criterion(int id, Level level);
// criteria 1..10; 10 reruns 1..9 and compares the reports
std::vector<Criterion> run_suite(Level level);

Json to_json(const Record& r, bool timing);
Json to_json(const Criterion& c, bool timing);
Json suite_report(const std::vector<Criterion>& cs, Level level, bool timing);

}  // namespace qs
