#include "minorlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace minorlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back(static_cast<char>(v + 63));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_sextets(out, bits);
    return out;
}

Graph from_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty line", base, 1);

    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size())
            throw parse_error("graph6: truncated data", base + line.size(), 1);
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte out of range", base + i, 1);
        return c - 63;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (byte(0) == 63 && line.size() > 1 && byte(1) == 63) {
        // 126,126 prefix: 36-bit order
        pos = 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | byte(pos++);
    } else if (byte(0) == 63) {
        pos = 1;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte(pos++);
    } else {
        n = byte(pos++);
    }
    if (n > 100000)
        throw parse_error("graph6: order too large for this tool", base, 1);

    Graph g(static_cast<int>(n));
    const std::size_t nbits = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != pos + nbytes)
        throw parse_error("graph6: expected " + std::to_string(pos + nbytes) + " bytes, got " +
                              std::to_string(line.size()),
                          base + line.size(), 1);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int v = byte(pos + bit / 6);
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // trailing padding bits must be zero
    for (std::size_t b = bit; b < nbytes * 6; ++b) {
        int v = byte(pos + b / 6);
        if ((v >> (5 - b % 6)) & 1)
            throw parse_error("graph6: nonzero padding bit", base + pos + b / 6, 1);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list: bad header, expected 'n m'", 0, 1);
    if (n < 0 || m < 0) throw parse_error("edge list: negative header values", 0, 1);
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i),
                              0, static_cast<std::size_t>(i + 2));
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw parse_error("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v),
                              0, static_cast<std::size_t>(i + 2));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw parse_error("empty graph file", 0, 1);
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::istringstream in{std::string(text)};
        return from_edge_list(in);
    }
    auto eol = text.find('\n', i);
    return from_graph6(text.substr(i, eol == std::string_view::npos ? text.size() - i : eol - i));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::size_t for_each_graph6(std::istream& in, const std::function<void(Graph)>& emit) {
    std::string line;
    std::size_t offset = 0;
    std::size_t lineno = 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string_view v(line);
        // skip blank lines
        bool blank = true;
        for (char c : v)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        try {
            emit(from_graph6(v));
        } catch (const parse_error& e) {
            throw parse_error(std::string("graph6 stream: ") + e.what(), line_start + e.byte_offset,
                              lineno);
        }
        ++count;
    }
    return count;
}

} // namespace minorlab
