#ifndef FOLKMAN_GUARD_GRAPH6_CODEC_HH
#define FOLKMAN_GUARD_GRAPH6_CODEC_HH 1

#include <folkman/errors.hh>

#include <string>
#include <string_view>

// Shared graph6 machinery for the fixed-width and wide graph types.
//
// Layout: size header (n + 63, or '~' followed by 18 bits in three 6-bit
// groups for 63 <= n <= 258047), then the upper triangle in column-major
// order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six bits per byte, most
// significant first, zero-padded, each byte offset by 63.

namespace folkman::graph6
{
    inline constexpr int max_encodable_order = 258047;

    inline auto header_length(long n) -> int
    {
        return n <= 62 ? 1 : 4;
    }

    inline auto body_length(long n) -> long
    {
        long bits = n * (n - 1) / 2;
        return (bits + 5) / 6;
    }

    inline auto write_header(std::string & out, long n) -> void
    {
        if (n < 0 || n > max_encodable_order)
            throw Graph6Error("order " + std::to_string(n) + " cannot be encoded in graph6");
        if (n <= 62)
            out.push_back(char(n + 63));
        else {
            out.push_back('~');
            out.push_back(char(((n >> 12) & 63) + 63));
            out.push_back(char(((n >> 6) & 63) + 63));
            out.push_back(char((n & 63) + 63));
        }
    }

    template <typename Adjacent_>
    auto encode(long n, const Adjacent_ & adjacent) -> std::string
    {
        std::string out;
        out.reserve(header_length(n) + body_length(n));
        write_header(out, n);
        int value = 0, filled = 0;
        for (long j = 1 ; j < n ; ++j)
            for (long i = 0 ; i < j ; ++i) {
                value = (value << 1) | (adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(char(value + 63));
                    value = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(char((value << (6 - filled)) + 63));
        return out;
    }

    /// Removes an optional ">>graph6<<" prefix and trailing line terminators.
    inline auto strip(std::string_view line) -> std::string_view
    {
        constexpr std::string_view prefix = ">>graph6<<";
        if (line.substr(0, prefix.size()) == prefix)
            line.remove_prefix(prefix.size());
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);
        return line;
    }

    /// Parses the size header, returning the order and advancing past the header.
    inline auto read_header(std::string_view & line) -> long
    {
        for (char c : line)
            if (c < 63 || c > 126)
                throw Graph6Error("non-printable or out-of-range byte in graph6 line");
        if (line.empty())
            throw Graph6Error("empty graph6 line");
        if (line[0] != '~') {
            long n = line[0] - 63;
            line.remove_prefix(1);
            return n;
        }
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("graph6 orders above 258047 are not supported");
        if (line.size() < 4)
            throw Graph6Error("truncated graph6 size header");
        long n = (long(line[1] - 63) << 12) | (long(line[2] - 63) << 6) | long(line[3] - 63);
        if (n < 63)
            throw Graph6Error("non-canonical graph6 size header");
        line.remove_prefix(4);
        return n;
    }

    /// Calls set_edge(i, j) for each edge encoded in body; validates the length and padding.
    template <typename SetEdge_>
    auto decode_body(long n, std::string_view body, const SetEdge_ & set_edge) -> void
    {
        if (long(body.size()) != body_length(n))
            throw Graph6Error("graph6 body has " + std::to_string(body.size()) + " bytes, expected "
                    + std::to_string(body_length(n)));
        long k = 0;
        long total = n * (n - 1) / 2;
        for (long j = 1 ; j < n ; ++j)
            for (long i = 0 ; i < j ; ++i, ++k) {
                int byte = body[k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    set_edge(i, j);
            }
        if (total % 6 != 0) {
            int byte = body.back() - 63;
            if (byte & ((1 << (6 - total % 6)) - 1))
                throw Graph6Error("non-zero padding bits in graph6 body");
        }
    }
}

#endif
