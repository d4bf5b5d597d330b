#include <folkman/witness.hh>
#include <folkman/arrow.hh>
#include <folkman/digest.hh>
#include <folkman/errors.hh>
#include <folkman/graph6_codec.hh>
#include <folkman/store.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace folkman
{
    auto make_witness(const AnyGraph & g, std::span<const int> colours) -> Witness
    {
        Witness w{to_graph6(g), {}};
        w.colours.reserve(colours.size());
        for (int c : colours)
            w.colours += c ? '1' : '0';
        return w;
    }

    auto format_witness(const Witness & w) -> string
    {
        return w.graph6 + "\n" + w.colours + "\n";
    }

    auto parse_witness(std::string_view text) -> Witness
    {
        vector<string> lines;
        std::istringstream in{string(text)};
        string line;
        while (std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (! line.empty())
                lines.push_back(line);
        }
        if (lines.empty() || lines.size() > 2)
            throw WitnessError("witness must have a graph6 line and a colour line");
        Witness w{string(graph6::strip(lines[0])), lines.size() == 2 ? lines[1] : string{}};
        for (char c : w.colours)
            if (c != '0' && c != '1')
                throw WitnessError("colour line may contain only 0 and 1");
        return w;
    }

    auto write_witness(const std::filesystem::path & file, const Witness & w) -> void
    {
        write_text_atomically(file, format_witness(w));
    }

    auto read_witness(const std::filesystem::path & file) -> Witness
    {
        std::ifstream in{file, std::ios::binary};
        if (! in)
            throw WitnessError("cannot read witness " + file.string());
        std::ostringstream text;
        text << in.rdbuf();
        return parse_witness(text.str());
    }

    auto witness_digest(const Witness & w) -> string
    {
        return sha256_hex(w.colours);
    }

    auto verify_witness(const Witness & w, const std::optional<string> & expected_graph6) -> bool
    {
        AnyGraph g;
        try {
            g = parse_graph6_any(w.graph6);
        }
        catch (const FolkmanError & e) {
            throw WitnessError(string("witness graph is malformed: ") + e.what());
        }
        if (expected_graph6) {
            AnyGraph expected;
            try {
                expected = parse_graph6_any(*expected_graph6);
            }
            catch (const FolkmanError & e) {
                throw WitnessError(string("expected graph is malformed: ") + e.what());
            }
            if (any_edge_list(expected) != any_edge_list(g) || any_order(expected) != any_order(g))
                throw WitnessError("witness refers to a different graph");
        }
        vector<int> colours;
        for (char c : w.colours)
            colours.push_back(c - '0');
        return std::visit([&] (const auto & h) { return is_good_edge_colouring(h, colours); }, g);
    }
}
