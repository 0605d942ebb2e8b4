#include "altfree/io.hpp"

#include <algorithm>
#include <sstream>

namespace altfree {

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line = 0;  // 1-based after next()

    bool next(std::string_view& out) {
        if (pos >= text.size()) return false;
        const std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            out = text.substr(pos);
            pos = text.size();
        } else {
            out = text.substr(pos, eol - pos);
            pos = eol + 1;
        }
        if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
        ++line;
        return true;
    }
};

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

// Space-separated nonnegative integers with their 1-based column positions.
std::vector<std::pair<long, int>> parse_int_line(std::string_view s, int line) {
    std::vector<std::pair<long, int>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t') {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        long value = 0;
        std::size_t digits = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            value = value * 10 + (s[i] - '0');
            if (value > 1000000000L) throw ParseError(line, col, "number too large");
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError(line, static_cast<int>(i) + 1, "expected an integer");
        out.emplace_back(value, col);
    }
    return out;
}

}  // namespace

OrderedHypergraph parse_hypergraph(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError(1, 1, "missing header line \"n m\"");
    auto header = parse_int_line(line, reader.line);
    if (header.size() != 2)
        throw ParseError(reader.line, 1, "header must be two integers: vertex and edge counts");
    const long n = header[0].first, m = header[1].first;

    std::vector<std::vector<int>> edges;
    for (long e = 0; e < m; ++e) {
        if (!reader.next(line))
            throw ParseError(reader.line + 1, 1,
                             "expected " + std::to_string(m) + " edge lines, found " + std::to_string(e));
        std::vector<int> edge;
        for (auto [v, col] : parse_int_line(line, reader.line)) {
            if (v < 1 || v > n)
                throw ParseError(reader.line, col,
                                 "vertex index " + std::to_string(v) + " out of range [1," +
                                     std::to_string(n) + "]");
            edge.push_back(static_cast<int>(v) - 1);
        }
        std::sort(edge.begin(), edge.end());
        for (std::size_t i = 1; i < edge.size(); ++i)
            if (edge[i] == edge[i - 1])
                throw ParseError(reader.line, 1,
                                 "vertex " + std::to_string(edge[i] + 1) + " repeated within the edge");
        edges.push_back(std::move(edge));
    }
    while (reader.next(line))
        if (!blank(line)) throw ParseError(reader.line, 1, "unexpected content after the last edge");
    return OrderedHypergraph{static_cast<int>(n), std::move(edges)};
}

std::string serialize_hypergraph(const OrderedHypergraph& h) {
    std::ostringstream os;
    os << h.n_vertices << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i] + 1;
        os << '\n';
    }
    return os.str();
}

BinaryMatrix parse_matrix(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    std::vector<std::string> rows;
    int width = -1;
    while (reader.next(line)) {
        for (std::size_t i = 0; i < line.size(); ++i)
            if (line[i] != '0' && line[i] != '1')
                throw ParseError(reader.line, static_cast<int>(i) + 1,
                                 "matrix entries must be '0' or '1'");
        if (width < 0)
            width = static_cast<int>(line.size());
        else if (static_cast<int>(line.size()) != width)
            throw ParseError(reader.line, static_cast<int>(line.size()) + 1,
                             "row length " + std::to_string(line.size()) +
                                 " differs from first row length " + std::to_string(width));
        rows.emplace_back(line);
    }
    return BinaryMatrix::from_rows(rows);
}

std::string serialize_matrix(const BinaryMatrix& m) {
    std::string out;
    for (const auto& row : m.to_strings()) {
        out += row;
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json one_based(const std::vector<int>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int x : v) arr.push_back(x + 1);
    return arr;
}

std::vector<int> zero_based(const nlohmann::json& arr, const char* field) {
    if (!arr.is_array()) throw WitnessError(std::string("witness field ") + field + " must be an array");
    std::vector<int> out;
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<long>() < 1)
            throw WitnessError(std::string("witness field ") + field + " must hold 1-based indices");
        out.push_back(x.get<int>() - 1);
    }
    return out;
}

}  // namespace

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j;
    std::visit(
        [&](const auto& v) {
            using W = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<W, AlternationWitness>) {
                j["kind"] = "alternation";
                j["vertices"] = one_based(v.vertices);
            } else if constexpr (std::is_same_v<W, PatternWitness>) {
                j["kind"] = "pattern";
                j["rows"] = one_based(v.rows);
                j["cols"] = one_based(v.cols);
            } else if constexpr (std::is_same_v<W, ColoringWitness>) {
                j["kind"] = "coloring";
                j["colors"] = v.colors;  // color values stay 0-based
            } else if constexpr (std::is_same_v<W, HittingSetWitness>) {
                j["kind"] = "hitting-set";
                j["vertices"] = one_based(v.vertices);
            } else {
                j["kind"] = "ordering";
                if (!v.vertex_order.empty()) j["vertices"] = one_based(v.vertex_order);
                if (!v.edge_order.empty()) j["edges"] = one_based(v.edge_order);
            }
        },
        w);
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw WitnessError("witness JSON must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "alternation") return AlternationWitness{zero_based(j.at("vertices"), "vertices")};
    if (kind == "pattern")
        return PatternWitness{zero_based(j.at("rows"), "rows"), zero_based(j.at("cols"), "cols")};
    if (kind == "coloring") {
        if (!j.contains("colors") || !j["colors"].is_array())
            throw WitnessError("coloring witness needs a \"colors\" array");
        return ColoringWitness{j["colors"].get<std::vector<int>>()};
    }
    if (kind == "hitting-set") return HittingSetWitness{zero_based(j.at("vertices"), "vertices")};
    if (kind == "ordering") {
        OrderingWitness w;
        if (j.contains("vertices")) w.vertex_order = zero_based(j["vertices"], "vertices");
        if (j.contains("edges")) w.edge_order = zero_based(j["edges"], "edges");
        return w;
    }
    throw WitnessError("unknown witness kind: " + kind);
}

}  // namespace altfree
