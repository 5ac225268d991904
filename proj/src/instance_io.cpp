#include "labelcut/instance_io.hpp"

#include "labelcut/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace labelcut {

namespace {

// Splits a strict single-space separated line; rejects stray whitespace.
std::vector<long long> parse_int_fields(const std::string& line, std::size_t expect, int lineno) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t end = line.find(' ', pos);
        if (end == std::string::npos) end = line.size();
        if (end == pos) throw ParseError(lineno, "empty field");
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc() || ptr != line.data() + end)
            throw ParseError(lineno, "expected integer, got '" + line.substr(pos, end - pos) + "'");
        out.push_back(value);
        pos = end + (end < line.size() ? 1 : 0);
        if (pos == line.size() && end < line.size())
            throw ParseError(lineno, "trailing whitespace");
    }
    if (out.size() != expect)
        throw ParseError(lineno, "expected " + std::to_string(expect) + " fields, got " +
                                     std::to_string(out.size()));
    return out;
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // Next content line, skipping '#' comments. Returns false at EOF.
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        return false;
    }
};

} // namespace

std::string emit_instance(const Instance& inst) {
    std::string out = "labelcut 1\n";
    out += std::to_string(inst.vertex_count) + " " + std::to_string(inst.edge_count()) + " " +
           std::to_string(inst.label_count) + " " + std::to_string(inst.source) + " " +
           std::to_string(inst.sink) + " " + (inst.directed ? "1" : "0") + "\n";
    for (const Edge& e : inst.edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.label) +
               "\n";
    return out;
}

Instance parse_instance(const std::string& text) {
    LineReader reader(text);
    std::string line;

    if (!reader.next(line)) throw ParseError(reader.lineno + 1, "missing header");
    if (line.rfind("labelcut ", 0) != 0) throw ParseError(reader.lineno, "bad magic, expected 'labelcut <version>'");
    if (line != "labelcut 1") throw VersionError("unsupported format version '" + line.substr(9) + "'");

    if (!reader.next(line)) throw ParseError(reader.lineno + 1, "missing size line");
    const auto sizes = parse_int_fields(line, 6, reader.lineno);
    const long long n = sizes[0], m = sizes[1], q = sizes[2], s = sizes[3], t = sizes[4], dir = sizes[5];
    if (n < 2) throw ParseError(reader.lineno, "vertex count must be at least 2");
    if (m < 0) throw ParseError(reader.lineno, "negative edge count");
    if (q < 1) throw ParseError(reader.lineno, "label count must be positive");
    if (s < 0 || s >= n) throw ParseError(reader.lineno, "source out of range");
    if (t < 0 || t >= n) throw ParseError(reader.lineno, "sink out of range");
    if (s == t) throw ParseError(reader.lineno, "source equals sink");
    if (dir != 0 && dir != 1) throw ParseError(reader.lineno, "directed flag must be 0 or 1");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<int> edge_lines;
    edge_lines.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line)) throw ParseError(reader.lineno + 1, "unexpected end of file, expected edge line");
        const auto f = parse_int_fields(line, 3, reader.lineno);
        if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n)
            throw ParseError(reader.lineno, "edge endpoint out of range");
        if (f[2] < 0 || f[2] >= q) throw ParseError(reader.lineno, "edge label out of range");
        edges.push_back({static_cast<int>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2])});
        edge_lines.push_back(reader.lineno);
    }
    if (reader.next(line)) throw ParseError(reader.lineno, "trailing content after last edge");

    try {
        return make_instance(static_cast<int>(n), static_cast<int>(q), static_cast<int>(s),
                             static_cast<int>(t), dir == 1, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(edge_lines.empty() ? 2 : edge_lines.back(), e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
    write_text_file(path, emit_instance(inst));
}

} // namespace labelcut
