#ifndef FOLKMAN_GUARD_WITNESS_HH
#define FOLKMAN_GUARD_WITNESS_HH 1

#include <folkman/wide_graph.hh>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace folkman
{
    /**
     * A good 2-colouring of the edges of a graph, stored as two lines: the
     * graph6 of the graph and one '0' or '1' per edge in edge_list order.
     */
    struct Witness
    {
        std::string graph6;
        std::string colours;
    };

    auto make_witness(const AnyGraph & g, std::span<const int> colours) -> Witness;

    auto format_witness(const Witness & w) -> std::string;

    /// Throws WitnessError when the text is not two well-formed lines.
    auto parse_witness(std::string_view text) -> Witness;

    auto write_witness(const std::filesystem::path & file, const Witness & w) -> void;
    auto read_witness(const std::filesystem::path & file) -> Witness;

    /// SHA-256 of the colour string.
    auto witness_digest(const Witness & w) -> std::string;

    /**
     * True iff the colouring has no monochromatic triangle. Throws
     * WitnessError when it is malformed, when its length differs from the
     * edge count, or when expected_graph6 is given and names a graph that is
     * not identical to the witness graph.
     */
    auto verify_witness(const Witness & w, const std::optional<std::string> & expected_graph6 = std::nullopt) -> bool;
}

#endif
