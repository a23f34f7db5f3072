#ifndef CHROMA_FORMULAS_HPP
#define CHROMA_FORMULAS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chroma/chromatic.hpp"
#include "chroma/cluster.hpp"
#include "chroma/embodiment.hpp"
#include "chroma/rational.hpp"
#include "chroma/zagreb.hpp"

namespace chroma {

// One identifier per printed closed form / bound. Suffix styles:
//   *_MIN / *_MAX         extremal-index formulas
//   *_BOUNDS              two-sided bounds (compared as intervals)
//   T41_T1 / T41_T2       mirrored-naturals instantiation, Type-I / Type-II
//   T43_T1 / T43_T2       mirrored-Fibonacci instantiation
// P35_M2_MIN_PROOF is the variant reading of P35_M2_MIN whose first term
// follows the proof text (2(r1-1)) instead of the displayed 2(l-1).
enum class FormulaId {
    TREE_M1_BOUNDS,
    TREE_M2,
    TREE_M3,
    COR_L2_BOUNDS,
    P33_M1,
    P33_M2,
    P33_M3,
    L34_M2_CLOSED,
    L34_M3_CLOSED,
    P35_M1_MIN,
    P35_M1_MAX,
    P35_M2_MIN,
    P35_M2_MIN_PROOF,
    P35_M2_MAX,
    P35_M3_MIN,
    P35_M3_MAX,
    C36_M1_MIN,
    C36_M1_MAX,
    C36_M2_MIN,
    C36_M2_MAX,
    C36_M3_MIN,
    C36_M3_MAX,
    P37_M1_MIN,
    P37_M1_MAX,
    P37_M2_MIN,
    P37_M2_MAX,
    P37_M3_MIN,
    P37_M3_MAX,
    C38_M1_MIN,
    C38_M1_MAX,
    C38_M2_MIN,
    C38_M2_MAX,
    C38_M3_MIN,
    C38_M3_MAX,
    T41_T1_M1_MIN,
    T41_T1_M1_MAX,
    T41_T1_M2_MIN,
    T41_T1_M2_MAX,
    T41_T1_M3_MIN,
    T41_T1_M3_MAX,
    T41_T2_M1_MIN,
    T41_T2_M1_MAX,
    T41_T2_M2_MIN,
    T41_T2_M2_MAX,
    T41_T2_M3_MIN,
    T41_T2_M3_MAX,
    R42_M1MIN_CLOSED,
    T43_T1_M1_MIN,
    T43_T1_M1_MAX,
    T43_T1_M2_MIN,
    T43_T1_M2_MAX,
    T43_T1_M3_MIN,
    T43_T1_M3_MAX,
    T43_T2_M1_MIN,
    T43_T2_M1_MAX,
    T43_T2_M2_MIN,
    T43_T2_M2_MAX,
    T43_T2_M3_MIN,
    T43_T2_M3_MAX,
    FIB_SUM,
    FIB_SUMSQ,
    FIB_SUMCUBE,
    FIB_SUMQUAD,
};

std::string_view formula_name(FormulaId id);
std::vector<FormulaId> all_formula_ids();

// True when the printed source does not parse cleanly and a documented
// reading had to be fixed (or when the id is itself a variant reading).
bool formula_interpreted(FormulaId id);

// Parameters. Each id reads what its schema needs:
//   n, r         balanced complete multipartite families (P33, L34)
//   cluster      per-cluster families (P35/C36/P37/C38, COR)
//   l            sequence and Fibonacci families (T41, R42, T43, FIB_*)
//   a, l         FIB_SUM
//   tree, source TREE_* / COR oracle target; `source` is echoed into params
struct FormulaInput {
    int n = 0;
    int r = 0;
    int l = 0;
    int a = 0;
    std::optional<ColourCluster> cluster;
    const ColouredGraph* tree = nullptr;
    std::string source;
};

// Scalar or interval value; scalars keep lo == hi.
struct FormulaValue {
    Rational lo, hi;
    bool interval = false;

    static FormulaValue scalar(Rational v);
    static FormulaValue range(Rational lo, Rational hi);
    bool collapsed() const { return lo == hi; }
    std::string to_string() const;  // "v" or "lo..hi"
};

enum class CompareStatus { match, mismatch, bound_holds, bound_violated, non_integer, error };
std::string_view to_string(CompareStatus s);

struct ComparisonRecord {
    FormulaId id{};
    nlohmann::ordered_json params;
    FormulaValue formula;
    FormulaValue oracle;
    CompareStatus status = CompareStatus::error;
    bool interpreted = false;
    std::string error;  // set only when status == error
};

// Extremal searches are pure functions of (construction kind, cluster); the
// cache lets a suite reuse them across the ids of one family.
struct ExtremaCache {
    std::map<std::pair<int, std::vector<int>>, ZagrebExtrema> store;
    const ZagrebExtrema& get(EmbodimentKind kind, const ColourCluster& c, int perm_limit);
};

struct CompareOptions {
    int perm_limit = 8;
    bool strict_integer = false;  // classify non-integer formula values separately
    ExtremaCache* cache = nullptr;
};

// The printed expression, verbatim, in exact rational arithmetic. Suspected
// typos are reproduced, not repaired. Throws "bad parameters" on schema
// mismatch.
FormulaValue evaluate_formula(FormulaId id, const FormulaInput& in);

// The independent ground truth: direct index computation on the referenced
// construction, permutation-exhaustive where the id is extremal.
FormulaValue oracle_value(FormulaId id, const FormulaInput& in, const CompareOptions& opt = {});

ComparisonRecord compare(FormulaId id, const FormulaInput& in, const CompareOptions& opt = {});

struct StructureRecord {
    std::string check;
    nlohmann::ordered_json params;
    bool pass = false;
    std::string detail;
};

struct SuiteConfig {
    std::vector<std::string> suites;  // empty = all; see suite_names()
    int l_max = 4;
    int n_max = 2;
    int r_max = 3;
    int r42_l_max = 50;
    int fib_l_max = 25;
    int random_clusters = 0;
    unsigned int seed = 1;
    std::vector<std::vector<int>> clusters;  // user-supplied, canonicalized on use
    int perm_limit = 8;
    bool strict_integer = false;
    bool inject_structural_fault = false;  // drops a tree edge; test hook
    SolverLimits solver;
};

std::vector<std::string> suite_names();

struct DiscrepancyReport {
    nlohmann::ordered_json config;
    std::vector<ComparisonRecord> records;
    std::vector<StructureRecord> structure;

    std::size_t structure_failures() const;
};

// Deterministic: records sorted by (id, params), fixed field order.
nlohmann::ordered_json report_to_json(const DiscrepancyReport& report);
std::string report_to_string(const DiscrepancyReport& report);

DiscrepancyReport run_suite(const SuiteConfig& config);

// Structural invariants behind `verify --strict`: minimum-edge trees,
// completion arithmetic, chromatic numbers, thorn/multipartite relations.
std::vector<StructureRecord> structural_suite(const SuiteConfig& config);

// Exhaustive non-increasing clusters with l in [l_min, l_max], sizes <= r_max.
std::vector<std::vector<int>> non_increasing_clusters(int l_min, int l_max, int r_max);

}  // namespace chroma

#endif
