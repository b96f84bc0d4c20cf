#pragma once
// Verification grids, case scheduling with per-case time budgets, and the report
// document with its JSON and text renderings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffid {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

enum class Status { pass, fail, skipped };
std::string status_str(Status s);
Status parse_status(const std::string& s);

// one grid point; params keep the family's fixed parameter order
struct CaseSpec {
    std::string family;
    std::vector<std::pair<std::string, long>> params;
    long get(const std::string& key) const;
};

struct CaseResult {
    CaseSpec spec;
    Status status = Status::pass;
    std::string witness;
    long wall_ms = 0;
};

struct Summary {
    int pass = 0, fail = 0, skipped = 0;
    bool operator==(const Summary&) const = default;
};

struct ReportDoc {
    std::string version = kToolVersion;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CaseResult> cases;
    bool timing = false;  // wall times are written only when set; they break byte stability
    Summary summary() const;
};
bool operator==(const CaseSpec& a, const CaseSpec& b);
bool operator==(const CaseResult& a, const CaseResult& b);
bool operator==(const ReportDoc& a, const ReportDoc& b);

// Every option left unset takes the family default.
struct GridOptions {
    std::optional<int> q, d, k, kmax, r, m, mmax, l, lmax, j;
    int prec = 64, tdeg = 40;
    std::uint64_t seed = 1;
    int instances = 20;  // random W per motivic case
};

struct FamilyInfo {
    std::string name, domain, what;
};
const std::vector<FamilyInfo>& families();
bool is_family(const std::string& name);
bool is_numeric_family(const std::string& name);

// the grid in canonical order; std::invalid_argument for an unknown family or empty range
std::vector<CaseSpec> build_grid(const std::string& family, const GridOptions& o);
// every family with its defaults
std::vector<CaseSpec> default_grid(const GridOptions& o = {});

// Runs one case in the calling thread; exceptions become fail or skipped.
CaseResult run_case(const CaseSpec& c);

struct RunOptions {
    int jobs = 1;
    double budget_sec = 60;  // <= 0 disables the budget
};
struct RunOutcome {
    std::vector<CaseResult> results;  // sorted by case key
    bool abandoned = false;           // some over-budget computation is still running
};
// Case-level parallelism; the merge order does not depend on jobs.
RunOutcome run_cases(const std::vector<CaseSpec>& cases, const RunOptions& ro);
bool case_key_less(const CaseSpec& a, const CaseSpec& b);

// 2 on any failure, else 3 if a budget or precision limit skipped a case, else 0;
// skipped always means a limit was hit
int exit_code(const ReportDoc& doc);

std::string to_json(const ReportDoc& doc);
ReportDoc from_json(const std::string& text);
std::string to_text(const ReportDoc& doc);
// writes the file or throws std::runtime_error naming the path
void write_file(const std::string& path, const std::string& content);

}  // namespace ffid
