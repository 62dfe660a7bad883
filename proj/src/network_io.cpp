#include "qnet/network_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace qnet {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string quote(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : NetworkError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

QDigraph parse_network(std::string_view text, GraphOptions options) {
    GraphBuilder builder(options);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::size_t lineno = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;

        const auto& cmd = tok[0];
        if (cmd == "state" || cmd == "driver") {
            if (tok.size() != 2) throw ParseError(lineno, "expected `" + std::string(cmd) + " <label>`");
            std::string label(tok[1]);
            if (builder.contains(label)) throw ParseError(lineno, "duplicate label \"" + label + "\"");
            if (cmd == "state")
                builder.add_state(label);
            else
                builder.add_driver(label);
        } else if (cmd == "edge") {
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError(lineno, "expected `edge <src> <dst> [kind]`");
            auto src = builder.find(tok[1]);
            if (!src) throw ParseError(lineno, "undeclared vertex \"" + std::string(tok[1]) + "\"");
            auto dst = builder.find(tok[2]);
            if (!dst) throw ParseError(lineno, "undeclared vertex \"" + std::string(tok[2]) + "\"");
            std::optional<EdgeKind> kind;
            if (tok.size() == 4) {
                kind = parse_edge_kind(tok[3]);
                if (!kind) throw ParseError(lineno, "unknown edge kind \"" + std::string(tok[3]) + "\"");
            }
            const bool from_driver = builder.role(*src) == VertexRole::Driver;
            const EdgeKind k = kind.value_or(from_driver ? EdgeKind::Drive : EdgeKind::Intrinsic);
            const std::string edge_name = std::string(tok[1]) + " -> " + std::string(tok[2]);
            if (builder.role(*dst) == VertexRole::Driver)
                throw ParseError(lineno, "edge " + edge_name + " ends at driver vertex");
            if (k == EdgeKind::Drive && !from_driver)
                throw ParseError(lineno, "drive edge " + edge_name + " starts at a state vertex");
            if (k != EdgeKind::Drive && from_driver)
                throw ParseError(lineno, "edge " + edge_name + " from a driver must be of kind drive");
            if (*src == *dst && !options.allow_self_loops)
                throw ParseError(lineno, "self-loop on " + std::string(tok[1]) + " not permitted");
            if (!seen.insert({src->value, dst->value}).second)
                throw ParseError(lineno, "duplicate edge " + edge_name);
            builder.add_edge(*src, *dst, k);
        } else {
            throw ParseError(lineno, "unknown directive \"" + std::string(cmd) + "\"");
        }
    }

    try {
        return builder.build();
    } catch (const ParseError&) {
        throw;
    } catch (const NetworkError& e) {
        throw ParseError(0, e.what());
    }
}

std::string to_text(const QDigraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices())
        out << (v.role == VertexRole::State ? "state " : "driver ") << v.label << '\n';
    for (const auto& e : g.edges())
        out << "edge " << g.label(e.src) << ' ' << g.label(e.dst) << ' ' << to_string(e.kind) << '\n';
    return out.str();
}

std::string to_dot(const QDigraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (const auto& v : g.vertices()) {
        out << "  " << quote(v.label);
        if (v.role == VertexRole::Driver) out << " [shape=box, color=blue]";
        out << ";\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << quote(g.label(e.src)) << " -> " << quote(g.label(e.dst));
        switch (e.kind) {
            case EdgeKind::Entanglement: out << " [style=dashed]"; break;
            case EdgeKind::Drive: out << " [color=blue]"; break;
            case EdgeKind::Intrinsic: break;
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qnet
