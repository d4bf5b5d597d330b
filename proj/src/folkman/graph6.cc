#include <folkman/graph.hh>
#include <folkman/graph6_codec.hh>

using std::string;
using std::string_view;
using std::uint64_t;

namespace folkman
{
    auto parse_graph6(string_view line) -> Graph
    {
        line = graph6::strip(line);
        long n = graph6::read_header(line);
        if (n > max_order)
            throw CapacityExceeded("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(max_order)
                    + "; use the wide representation");
        std::array<uint64_t, max_order> rows{};
        graph6::decode_body(n, line, [&] (long i, long j) {
                rows[i] |= uint64_t{1} << j;
                rows[j] |= uint64_t{1} << i;
                });
        return Graph::from_rows_unchecked(int(n), rows);
    }

    auto to_graph6(const Graph & g) -> string
    {
        return graph6::encode(g.order(), [&] (long i, long j) { return g.adjacent(int(i), int(j)); });
    }
}
