#include "antikit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace antikit {

namespace {

// Strict line-oriented reader for the oedge format.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ >= text_.size()) return false;
        const auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
        }
        ++line_no_;
        return true;
    }

    int line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Exactly two non-negative decimal integers separated by one space.
std::pair<long long, long long> two_ints(std::string_view line, int line_no) {
    if (!line.empty() && line.back() == '\r') parse_fail(line_no, "CR line ending");
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) parse_fail(line_no, "expected two integers");
    auto parse = [&](std::string_view tok) {
        long long value = 0;
        if (tok.empty()) parse_fail(line_no, "empty field");
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || value < 0) parse_fail(line_no, "bad integer '" + std::string(tok) + "'");
        return value;
    };
    return {parse(line.substr(0, sp)), parse(line.substr(sp + 1))};
}

std::pair<int, std::vector<Edge>> parse_edges(std::string_view text) {
    LineReader reader(text);
    std::string_view line;
    if (!reader.next(line)) parse_fail(1, "missing header");
    const auto [n, m] = two_ints(line, reader.line_no());
    if (n > (1 << 24)) parse_fail(reader.line_no(), "vertex count too large");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line)) parse_fail(reader.line_no() + 1, "expected " + std::to_string(m) + " edge lines");
        const auto [u, v] = two_ints(line, reader.line_no());
        if (u > (1 << 24) || v > (1 << 24)) parse_fail(reader.line_no(), "vertex id too large");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    while (reader.next(line))
        if (!line.empty()) parse_fail(reader.line_no(), "trailing content");
    return {static_cast<int>(n), std::move(edges)};
}

std::pair<int, std::vector<Edge>> json_edges(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge entries must be [u, v]");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return {n, std::move(edges)};
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

bool looks_like_json(std::string_view text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string_view::npos && text[p] == '{';
}

}  // namespace

OrientedGraph parse_oedge(std::string_view text) {
    auto [n, edges] = parse_edges(text);
    return OrientedGraph::validate(n, edges);
}

Digraph parse_oedge_digraph(std::string_view text) {
    auto [n, edges] = parse_edges(text);
    return Digraph::from_edges(n, edges);
}

std::string write_oedge(const Digraph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
    return out;
}

nlohmann::json graph_to_json(const Digraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
    return {{"n", g.order()}, {"edges", edges}};
}

OrientedGraph graph_from_json(const nlohmann::json& j) {
    auto [n, edges] = json_edges(j);
    return OrientedGraph::validate(n, edges);
}

Digraph digraph_from_json(const nlohmann::json& j) {
    auto [n, edges] = json_edges(j);
    return Digraph::from_edges(n, edges);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

OrientedGraph load_graph(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    if (looks_like_json(text)) {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::ParseError, ex.what());
        }
    }
    return parse_oedge(text);
}

Digraph load_digraph(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    if (looks_like_json(text)) {
        try {
            return digraph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::ParseError, ex.what());
        }
    }
    return parse_oedge_digraph(text);
}

void save_oedge(const Digraph& g, const std::filesystem::path& path) { write_text_file(path, write_oedge(g)); }

}  // namespace antikit
