// chroma: minimum-edge graphical embodiments of colour clusters, chromatic
// Zagreb indices, and formula verification against direct computation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chroma/chromatic.hpp"
#include "chroma/embodiment.hpp"
#include "chroma/formulas.hpp"
#include "chroma/io.hpp"
#include "chroma/sequences.hpp"
#include "chroma/zagreb.hpp"

namespace {

using namespace chroma;

constexpr int kDefaultPermGuard = 8;

int guard_from_env() {
    if (const char* env = std::getenv("CHROMA_GUARD_LMAX")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid CHROMA_GUARD_LMAX\n";
    }
    return kDefaultPermGuard;
}

void write_output(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << body;
}

struct KindSpec {
    EmbodimentKind kind;
    bool completable = false;
};

KindSpec kind_from_name(const std::string& name, bool complete) {
    if (name == "type1")
        return {complete ? EmbodimentKind::type1_complete : EmbodimentKind::type1_tree, true};
    if (name == "type2")
        return {complete ? EmbodimentKind::type2_complete : EmbodimentKind::type2_tree, true};
    if (complete) throw CLI::ValidationError("--complete only applies to type1/type2");
    if (name == "null") throw CLI::ValidationError("internal");  // handled by caller
    if (name == "thorn") return {EmbodimentKind::thorn};
    if (name == "multipartite") return {EmbodimentKind::multipartite_max};
    if (name == "odd_cycle") return {EmbodimentKind::odd_cycle};
    if (name == "path_type") return {EmbodimentKind::path_type};
    throw CLI::ValidationError("unknown kind: " + name);
}

ColouredGraph build_from_args(const std::string& cluster_text, const std::string& kind,
                              bool complete) {
    ColourCluster cluster = parse_cluster(cluster_text);
    if (kind == "null") {
        if (complete) throw CLI::ValidationError("--complete only applies to type1/type2");
        return null_embodiment(cluster);
    }
    return build_embodiment(cluster, kind_from_name(kind, complete).kind);
}

std::string chi_summary(const ColouredGraph& cg, std::size_t chi_bound) {
    SolverLimits limits;
    limits.max_order = chi_bound;
    try {
        return std::to_string(chromatic_number_exact(cg.graph, limits));
    } catch (const std::runtime_error&) {
        return "na";
    }
}

nlohmann::ordered_json extremum_json(const IndexExtremum& e) {
    return {{"min", e.min_value},
            {"max", e.max_value},
            {"argmin", e.argmin.image()},
            {"argmax", e.argmax.image()}};
}

struct SweepRow {
    std::string sequence;
    int l = 0;
    std::string kind;
    ColourCluster cluster{{1}};
    std::size_t order = 0, size = 0;
    long long oracle[6] = {};
    Rational formula[6];
    bool matches[6] = {};
};

const FormulaId kP35[6] = {FormulaId::P35_M1_MIN, FormulaId::P35_M1_MAX, FormulaId::P35_M2_MIN,
                           FormulaId::P35_M2_MAX, FormulaId::P35_M3_MIN, FormulaId::P35_M3_MAX};
const FormulaId kP37[6] = {FormulaId::P37_M1_MIN, FormulaId::P37_M1_MAX, FormulaId::P37_M2_MIN,
                           FormulaId::P37_M2_MAX, FormulaId::P37_M3_MIN, FormulaId::P37_M3_MAX};
const FormulaId kT41T1[6] = {FormulaId::T41_T1_M1_MIN, FormulaId::T41_T1_M1_MAX,
                             FormulaId::T41_T1_M2_MIN, FormulaId::T41_T1_M2_MAX,
                             FormulaId::T41_T1_M3_MIN, FormulaId::T41_T1_M3_MAX};
const FormulaId kT41T2[6] = {FormulaId::T41_T2_M1_MIN, FormulaId::T41_T2_M1_MAX,
                             FormulaId::T41_T2_M2_MIN, FormulaId::T41_T2_M2_MAX,
                             FormulaId::T41_T2_M3_MIN, FormulaId::T41_T2_M3_MAX};
const FormulaId kT43T1[6] = {FormulaId::T43_T1_M1_MIN, FormulaId::T43_T1_M1_MAX,
                             FormulaId::T43_T1_M2_MIN, FormulaId::T43_T1_M2_MAX,
                             FormulaId::T43_T1_M3_MIN, FormulaId::T43_T1_M3_MAX};
const FormulaId kT43T2[6] = {FormulaId::T43_T2_M1_MIN, FormulaId::T43_T2_M1_MAX,
                             FormulaId::T43_T2_M2_MIN, FormulaId::T43_T2_M2_MAX,
                             FormulaId::T43_T2_M3_MIN, FormulaId::T43_T2_M3_MAX};

const FormulaId* sweep_formula_set(const std::string& sequence, const std::string& kind) {
    if (kind == "type1") return kP35;
    if (kind == "type2") return kP37;
    bool s1 = sequence == "s1";
    if (kind == "type1_complete") return s1 ? kT41T1 : kT43T1;
    return s1 ? kT41T2 : kT43T2;  // type2_complete
}

SweepRow sweep_row(const std::string& sequence, int l, const std::string& kind, int guard,
                   int threads) {
    SweepRow row;
    row.sequence = sequence;
    row.l = l;
    row.kind = kind;
    SequenceKind seq = sequence == "s1" ? SequenceKind::s1_mirror_naturals
                                        : SequenceKind::s2_mirror_fibonacci;
    row.cluster = sequence_cluster(seq, l);

    EmbodimentKind ek = kind == "type1"            ? EmbodimentKind::type1_tree
                        : kind == "type2"          ? EmbodimentKind::type2_tree
                        : kind == "type1_complete" ? EmbodimentKind::type1_complete
                                                   : EmbodimentKind::type2_complete;
    ColouredGraph graph = l == 1 ? null_embodiment(row.cluster) : build_embodiment(row.cluster, ek);
    row.order = graph.graph.order();
    row.size = graph.graph.size();

    ZagrebExtrema ex = extremal_indices(graph, guard, threads);
    row.oracle[0] = ex.m1.min_value;
    row.oracle[1] = ex.m1.max_value;
    row.oracle[2] = ex.m2.min_value;
    row.oracle[3] = ex.m2.max_value;
    row.oracle[4] = ex.m3.min_value;
    row.oracle[5] = ex.m3.max_value;

    const FormulaId* ids = sweep_formula_set(sequence, kind);
    for (int i = 0; i < 6; ++i) {
        FormulaInput in;
        if (ids == kP35 || ids == kP37)
            in.cluster = row.cluster;
        else
            in.l = l;
        row.formula[i] = evaluate_formula(ids[i], in).lo;
        row.matches[i] = row.formula[i] == Rational(row.oracle[i]);
    }
    return row;
}

const char* kSweepColumns =
    "sequence,l,kind,cluster,order,size,"
    "m1_min,m1_max,m2_min,m2_max,m3_min,m3_max,"
    "f_m1_min,f_m1_max,f_m2_min,f_m2_max,f_m3_min,f_m3_max,"
    "match_m1_min,match_m1_max,match_m2_min,match_m2_max,match_m3_min,match_m3_max";

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepColumns << "\n";
    for (const auto& row : rows) {
        out << row.sequence << ',' << row.l << ',' << row.kind << ',';
        for (std::size_t i = 0; i < row.cluster.sizes().size(); ++i)
            out << (i ? "|" : "") << row.cluster.sizes()[i];
        out << ',' << row.order << ',' << row.size;
        for (long long v : row.oracle) out << ',' << v;
        for (const auto& f : row.formula) out << ',' << f.to_string();
        for (bool m : row.matches) out << ',' << (m ? "true" : "false");
        out << "\n";
    }
    return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    const char* names[6] = {"m1_min", "m1_max", "m2_min", "m2_max", "m3_min", "m3_max"};
    for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["sequence"] = row.sequence;
        r["l"] = row.l;
        r["kind"] = row.kind;
        r["cluster"] = row.cluster.sizes();
        r["order"] = row.order;
        r["size"] = row.size;
        for (int i = 0; i < 6; ++i) r[names[i]] = row.oracle[i];
        for (int i = 0; i < 6; ++i) r[std::string("f_") + names[i]] = row.formula[i].to_string();
        for (int i = 0; i < 6; ++i) r[std::string("match_") + names[i]] = row.matches[i];
        arr.push_back(std::move(r));
    }
    return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-edge graphical embodiments of colour clusters and their chromatic "
                 "Zagreb indices"};
    app.require_subcommand(1);

    // ---- embody ----
    std::string em_cluster, em_kind = "type1", em_format = "dot", em_out;
    bool em_complete = false;
    std::size_t em_chi_bound = 24;
    auto* embody = app.add_subcommand("embody", "Construct an embodiment and export it");
    embody->add_option("--cluster", em_cluster, "Colour-class sizes, e.g. 5,4,3,3")->required();
    embody->add_option("--kind", em_kind,
                       "type1|type2|null|thorn|multipartite|odd_cycle|path_type");
    embody->add_flag("--complete", em_complete, "Complete the representative clique (type1/type2)");
    embody->add_option("--format", em_format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    embody->add_option("--out", em_out, "Output path (stdout when omitted)");
    embody->add_option("--chi-bound", em_chi_bound,
                       "Exact-solver order bound for the summary (chi=na above it)");

    // ---- indices ----
    std::string ix_cluster, ix_kind = "type1";
    bool ix_complete = false, ix_extremal = false;
    int ix_limit = -1, ix_threads = 1;
    auto* indices = app.add_subcommand("indices", "Chromatic Zagreb indices of an embodiment");
    indices->add_option("--cluster", ix_cluster, "Colour-class sizes")->required();
    indices->add_option("--kind", ix_kind,
                        "type1|type2|null|thorn|multipartite|odd_cycle|path_type");
    indices->add_flag("--complete", ix_complete, "Complete the representative clique");
    indices->add_flag("--extremal", ix_extremal, "Search all l! colour permutations");
    indices->add_option("--limit", ix_limit, "Factorial guard (default CHROMA_GUARD_LMAX or 8)");
    indices->add_option("--threads", ix_threads, "Worker threads for the extremal search");

    // ---- verify ----
    SuiteConfig vf_cfg;
    std::string vf_suites, vf_clusters, vf_out;
    bool vf_strict = false;
    int vf_limit = -1;
    auto* verify = app.add_subcommand("verify", "Compare every printed formula against direct "
                                                "computation; write the discrepancy report");
    verify->add_option("--suites", vf_suites,
                       "Comma list of tree,cor,p33,l34,p35,c36,p37,c38,t41,r42,t43,fib,structure "
                       "(default: all)");
    verify->add_option("--l-max", vf_cfg.l_max, "Cluster grid: largest number of colours");
    verify->add_option("--n-max", vf_cfg.n_max, "Balanced multipartite grid: largest part size");
    verify->add_option("--r-max", vf_cfg.r_max, "Largest class size / part count");
    verify->add_option("--r42-l-max", vf_cfg.r42_l_max, "Closure check range for R42");
    verify->add_option("--fib-l-max", vf_cfg.fib_l_max, "Fibonacci identity range");
    verify->add_option("--clusters", vf_clusters, "Extra clusters, semicolon-separated");
    verify->add_option("--random-clusters", vf_cfg.random_clusters, "Seeded random clusters");
    verify->add_option("--seed", vf_cfg.seed, "Random cluster seed");
    verify->add_option("--limit", vf_limit, "Factorial guard (default CHROMA_GUARD_LMAX or 8)");
    verify->add_option("--out", vf_out, "Report path (stdout when omitted)");
    verify->add_flag("--strict", vf_strict,
                     "Exit 2 when any structural invariant fails (formula mismatches never fail)");
    verify->add_flag("--strict-integer", vf_cfg.strict_integer,
                     "Classify non-integer formula values as non_integer instead of mismatch");
    verify
        ->add_flag("--inject-structural-fault", vf_cfg.inject_structural_fault,
                   "Corrupt each constructed tree (testing hook)")
        ->group("");  // hidden

    // ---- sweep ----
    std::string sw_sequence, sw_kinds = "type1_complete,type2_complete", sw_format = "csv", sw_out;
    int sw_l_max = 0, sw_limit = -1, sw_threads = 1;
    auto* sweep = app.add_subcommand("sweep", "Tabulate extremal indices over s1/s2 clusters");
    sweep->add_option("--sequence", sw_sequence, "s1|s2")
        ->required()
        ->check(CLI::IsMember({"s1", "s2"}));
    sweep->add_option("--l-max", sw_l_max, "Rows for l = 1..l_max")->required();
    sweep->add_option("--kinds", sw_kinds, "Comma list of type1,type2,type1_complete,type2_complete");
    sweep->add_option("--format", sw_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sw_out, "Output path (stdout when omitted)");
    sweep->add_option("--limit", sw_limit, "Factorial guard (default CHROMA_GUARD_LMAX or 8)");
    sweep->add_option("--threads", sw_threads, "Worker threads for the extremal search");
    sweep->footer(std::string("CSV columns:\n  ") + kSweepColumns);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // exit contract: 1 for every usage error
    }

    try {
        if (embody->parsed()) {
            ColouredGraph graph = build_from_args(em_cluster, em_kind, em_complete);
            std::string body =
                em_format == "dot" ? to_dot(graph) : coloured_graph_to_json(graph).dump(2) + "\n";
            write_output(body, em_out);
            std::cout << "order=" << graph.graph.order() << " size=" << graph.graph.size()
                      << " chi=" << chi_summary(graph, em_chi_bound) << "\n";
            return 0;
        }

        if (indices->parsed()) {
            int guard = ix_limit >= 1 ? ix_limit : guard_from_env();
            ColouredGraph graph = build_from_args(ix_cluster, ix_kind, ix_complete);
            ChromaticIndices ix = chromatic_indices(graph);
            nlohmann::ordered_json out;
            out["cluster"] = graph.cluster.sizes();
            out["kind"] = ix_kind;
            out["complete"] = ix_complete;
            out["indices"] = {{"m1", ix.m1}, {"m2", ix.m2}, {"m3", ix.m3}};
            if (ix_extremal) {
                ZagrebExtrema ex = extremal_indices(graph, guard, ix_threads);
                out["extremal"] = {{"m1", extremum_json(ex.m1)},
                                   {"m2", extremum_json(ex.m2)},
                                   {"m3", extremum_json(ex.m3)},
                                   {"permutations_examined", ex.permutations_examined}};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            if (vf_limit >= 1)
                vf_cfg.perm_limit = vf_limit;
            else
                vf_cfg.perm_limit = guard_from_env();
            if (!vf_suites.empty()) {
                std::istringstream in(vf_suites);
                std::string token;
                while (std::getline(in, token, ',')) vf_cfg.suites.push_back(token);
            }
            if (vf_strict) {
                auto& s = vf_cfg.suites;
                if (!s.empty() && std::find(s.begin(), s.end(), "structure") == s.end())
                    s.push_back("structure");
            }
            if (!vf_clusters.empty()) {
                std::istringstream in(vf_clusters);
                std::string token;
                while (std::getline(in, token, ';'))
                    vf_cfg.clusters.push_back(parse_cluster(token).sizes());
            }
            DiscrepancyReport report = run_suite(vf_cfg);
            write_output(report_to_string(report), vf_out);
            if (vf_strict && report.structure_failures() > 0) {
                std::cerr << "strict: " << report.structure_failures()
                          << " structural invariant(s) failed\n";
                return 2;
            }
            return 0;
        }

        if (sweep->parsed()) {
            if (sw_l_max < 1) throw std::invalid_argument("bad config: --l-max must be >= 1");
            int guard = sw_limit >= 1 ? sw_limit : guard_from_env();
            if (sw_l_max > guard) throw std::runtime_error("factorial search refused");
            std::vector<std::string> kinds;
            std::istringstream in(sw_kinds);
            std::string token;
            while (std::getline(in, token, ',')) {
                if (token != "type1" && token != "type2" && token != "type1_complete" &&
                    token != "type2_complete")
                    throw std::invalid_argument("bad config: unknown kind " + token);
                kinds.push_back(token);
            }
            if (kinds.empty()) throw std::invalid_argument("bad config: no kinds");
            std::vector<SweepRow> rows;
            for (int l = 1; l <= sw_l_max; ++l)
                for (const auto& kind : kinds)
                    rows.push_back(sweep_row(sw_sequence, l, kind, guard, sw_threads));
            write_output(sw_format == "csv" ? sweep_csv(rows) : sweep_json(rows), sw_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
