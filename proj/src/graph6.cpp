#include "dlmkit/graph6.hpp"

#include <string>
#include <vector>

namespace dlm {

namespace {

constexpr int kLo = 63;  // '?'
constexpr int kHi = 126; // '~'

int body_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6: truncated bit body");
    const int c = static_cast<unsigned char>(s[i]);
    if (c < kLo || c > kHi) {
        throw ParseError("graph6: invalid byte at position " + std::to_string(i));
    }
    return c - kLo;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    long n = 0;
    const int first = static_cast<unsigned char>(text[0]);
    if (first == kHi) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kHi) {
            throw ParseError("graph6: 8-byte order form exceeds the vertex cap");
        }
        n = (static_cast<long>(body_byte(text, 1)) << 12) |
            (static_cast<long>(body_byte(text, 2)) << 6) | body_byte(text, 3);
        pos = 4;
    } else {
        if (first < kLo || first > kHi) throw ParseError("graph6: malformed header byte");
        n = first - kLo;
        pos = 1;
    }
    if (n < 1) throw ParseError("graph6: graphs need at least one vertex");
    if (n > kMaxVertices) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds the cap of " +
                         std::to_string(kMaxVertices));
    }

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes) {
        throw ParseError(text.size() < pos + nbytes ? "graph6: truncated bit body"
                                                    : "graph6: trailing bytes after bit body");
    }

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    long bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const int v = body_byte(text, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool set = (v >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index runs over columns
                // j = 1..n-1, rows i = 0..j-1.
                long t = bit;
                int j = 1;
                while (t >= j) {
                    t -= j;
                    ++j;
                }
                const int i = static_cast<int>(t);
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(static_cast<int>(n), adj);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kLo + n));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(kLo + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kLo + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kLo + (n & 0x3f)));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kLo + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kLo + (acc << (6 - nbits))));
    return out;
}

} // namespace dlm
