#include "arrangelab/graph_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "arrangelab/errors.h"

namespace arrangelab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

bool is_data_line(std::string_view line) {
    line = trim(line);
    return !line.empty() && line.front() != '#';
}

// Whitespace-separated fields before any '#' comment.
std::vector<std::string_view> tokens(std::string_view line) {
    line = line.substr(0, line.find('#'));
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

constexpr int kG6Offset = 63;

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int n = 0;
    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        if (!is_data_line(lines[ln])) continue;
        const auto tok = tokens(lines[ln]);
        if (tok.size() != 2) throw ParseError(ln + 1, "expected two vertex labels");
        int ends[2];
        for (int k = 0; k < 2; ++k) {
            auto [p, ec] = std::from_chars(tok[k].data(), tok[k].data() + tok[k].size(), ends[k]);
            if (ec != std::errc{} || p != tok[k].data() + tok[k].size())
                throw ParseError(ln + 1, "invalid vertex label '" + std::string(tok[k]) + "'");
            if (ends[k] < 1) throw ParseError(ln + 1, "vertex labels are 1-based");
        }
        if (ends[0] == ends[1]) throw ParseError(ln + 1, "self-loop");
        Edge e{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError(ln + 1, "repeated edge");
        edges.push_back(e);
        n = std::max(n, e.v);
    }
    return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw ParseError(0, "empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126) throw ParseError(0, "graph6: character out of range");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ParseError(0, "graph6: truncated");
        return line[pos++] - kG6Offset;
    };
    long n = next();
    if (n == 63) {
        if (pos < line.size() && line[pos] == '~') throw ParseError(0, "graph6: more than 258047 vertices unsupported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
    }
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t needed = (pairs + 5) / 6;
    if (line.size() - pos != needed) throw ParseError(0, "graph6: wrong length for " + std::to_string(n) + " vertices");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = line[pos + bit / 6] - kG6Offset;
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i + 1, j + 1});
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>((acc << (6 - used)) + kG6Offset));
    return out;
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
    std::vector<Graph> out;
    const auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        if (!is_data_line(lines[ln])) continue;
        try {
            out.push_back(parse_graph6(lines[ln]));
        } catch (const ParseError& e) {
            throw ParseError(ln + 1, e.what());
        }
    }
    return out;
}

bool looks_like_edge_list(std::string_view text) {
    for (auto line : split_lines(text)) {
        if (!is_data_line(line)) continue;
        const auto tok = tokens(line);
        auto numeric = [](std::string_view t) {
            return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        return tok.size() >= 2 && numeric(tok[0]) && numeric(tok[1]);
    }
    return false;
}

}  // namespace arrangelab
