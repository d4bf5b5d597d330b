#ifndef FOLKMAN_GUARD_PIPELINE_HH
#define FOLKMAN_GUARD_PIPELINE_HH 1

#include <folkman/arrow.hh>
#include <folkman/families.hh>
#include <folkman/graph.hh>

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace folkman
{
    enum class StageKind
    {
        generate,
        filter,
        extend,
        sperner,
        edges_down,
        bh_check,
        stats
    };

    auto to_string(StageKind k) -> std::string;
    auto parse_stage_kind(const std::string & text) -> StageKind;

    /**
     * One pipeline step. params names the output family:
     *
     *  generate    order-n graphs with omega <= 3 and alpha <= s (variant max
     *              keeps maximal K4-free graphs, plusk3 keeps +K3 graphs)
     *  filter      members of params among the inputs, or among built-in
     *              generation when there are no inputs
     *  extend      non-Sperner graphs of L_max(n;p;s) from L_+K3(n-s;p+1;<=s)
     *  sperner     Sperner graphs of L_max(n;p;s) from L_max(n-1;p;s')
     *  edges_down  closure of L_max(n;p;<=s) stores; variant plusk3 prunes on
     *              +K3 and alpha, plain only on arrowing
     *  bh_check    B(H) arrowing report for every input graph
     *  stats       histograms of |E|, min degree, max degree and alpha
     */
    struct StagePlan
    {
        StageKind kind = StageKind::filter;
        FamilyParams params;
        bool delta_mode = false;
        std::vector<std::filesystem::path> inputs;
        std::filesystem::path output;
        int workers = 1;
        ArrowOptions arrow;
        bool chi_filter = true;

        /// Inputs per checkpoint shard.
        std::size_t shard_size = 4096;

        /// Generation shards for the generate and input-less filter stages.
        int generation_shards = 64;

        /// edges_down: limit on removal depth, negative for none.
        int max_depth = -1;
    };

    using Manifest = nlohmann::json;

    /// X.g6 -> X.manifest.json
    auto manifest_path(const std::filesystem::path & output) -> std::filesystem::path;

    /// Throws StoreError when absent or unreadable.
    auto read_manifest(const std::filesystem::path & output) -> Manifest;

    struct StageResult
    {
        Manifest manifest;

        /// True when a completed identical run was found and nothing was recomputed.
        bool skipped = false;
    };

    /**
     * Runs a stage, writing the output and its manifest. Input manifests are
     * checked against the stage's expectations (ManifestMismatch); inputs
     * without a manifest are canonicalised as external lists. Completed shards
     * are kept under <output>.ckpt and reused after an interruption. A rerun
     * of a finished stage whose output still matches its digest does nothing.
     */
    auto run_stage(const StagePlan & plan) -> StageResult;

    struct Histograms
    {
        std::map<int, long> edges;
        std::map<int, long> min_degree;
        std::map<int, long> max_degree;
        std::map<int, long> alpha;

        auto operator==(const Histograms &) const -> bool = default;
    };

    auto compute_histograms(std::span<const Graph> graphs, int workers = 1) -> Histograms;

    /// Four aligned two-column tables.
    auto format_histograms_text(const Histograms & h) -> std::string;

    /// Lines "invariant<TAB>value<TAB>count" after a header line.
    auto format_histograms_tsv(const Histograms & h) -> std::string;

    auto histograms_to_json(const Histograms & h) -> nlohmann::json;
}

#endif
