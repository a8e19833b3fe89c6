#include "pcrp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pcrp {

PcrpInstance PcrpInstance::make(Dag dag, std::vector<RequiredPair> pairs) {
    ReachabilityIndex reach = transitive_closure(dag);
    return make_with_caches(std::move(dag), std::move(pairs), std::move(reach));
}

PcrpInstance PcrpInstance::make_with_caches(Dag dag, std::vector<RequiredPair> pairs,
                                            ReachabilityIndex reach) {
    validate_st_connectivity(dag, reach);

    std::vector<std::string> warnings;
    for (auto& p : pairs) {
        if (p.a < 0 || p.a >= dag.vertex_count() || p.b < 0 || p.b >= dag.vertex_count())
            fail(errc::validation_error, "pair vertex out of range");
        if (p.a == p.b)
            fail(errc::validation_error, "self-pair (" + std::to_string(p.a) + "," +
                                             std::to_string(p.b) + ")");
        if (reach.strictly_reaches(p.b, p.a)) std::swap(p.a, p.b);
    }

    std::vector<RequiredPair> unique;
    unique.reserve(pairs.size());
    for (const auto& p : pairs) {
        auto unordered_equal = [&](const RequiredPair& q) {
            return (q.a == p.a && q.b == p.b) || (q.a == p.b && q.b == p.a);
        };
        if (std::any_of(unique.begin(), unique.end(), unordered_equal)) {
            warnings.push_back("duplicate pair (" + std::to_string(p.a) + "," +
                               std::to_string(p.b) + ") merged");
        } else {
            unique.push_back(p);
        }
    }

    return PcrpInstance(std::move(dag), std::move(unique), std::move(reach),
                        std::move(warnings));
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t at = 0;
    int line_no = 0;

    bool next_line(std::string& out) {
        while (at < text.size()) {
            std::size_t end = text.find('\n', at);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(at, end - at);
            at = end + 1;
            ++line_no;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos || line[first] == '#') continue;
            std::size_t last = line.find_last_not_of(" \t\r");
            out.assign(line.substr(first, last - first + 1));
            return true;
        }
        return false;
    }
};

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& token, int line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) parse_fail(line_no, "bad integer '" + token + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line_no, "bad integer '" + token + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

RawInstance parse_raw_instance(std::string_view text) {
    Cursor cur{text};
    std::string line;

    if (!cur.next_line(line)) parse_fail(cur.line_no, "empty file");
    if (tokens_of(line) != std::vector<std::string>{"pcrp", "1"})
        parse_fail(cur.line_no, "expected header 'pcrp 1'");

    if (!cur.next_line(line)) parse_fail(cur.line_no, "missing graph header");
    auto head = tokens_of(line);
    if (head.size() != 6 || head[0] != "n" || head[2] != "s" || head[4] != "t")
        parse_fail(cur.line_no, "expected 'n <count> s <source> t <sink>'");

    RawInstance raw;
    raw.digraph.vertex_count = static_cast<int>(parse_int(head[1], cur.line_no));
    raw.digraph.source = static_cast<Vertex>(parse_int(head[3], cur.line_no));
    raw.digraph.sink = static_cast<Vertex>(parse_int(head[5], cur.line_no));
    const int n = raw.digraph.vertex_count;
    if (n <= 0) parse_fail(cur.line_no, "vertex count must be positive");

    auto check_id = [&](long long v) {
        if (v < 0 || v >= n)
            parse_fail(cur.line_no, "unknown vertex id " + std::to_string(v));
        return static_cast<Vertex>(v);
    };
    check_id(raw.digraph.source);
    check_id(raw.digraph.sink);

    while (cur.next_line(line)) {
        auto toks = tokens_of(line);
        if (toks.size() == 3 && toks[0] == "a") {
            Vertex u = check_id(parse_int(toks[1], cur.line_no));
            Vertex v = check_id(parse_int(toks[2], cur.line_no));
            raw.digraph.arcs.emplace_back(u, v);
        } else if (toks.size() == 3 && toks[0] == "p") {
            Vertex x = check_id(parse_int(toks[1], cur.line_no));
            Vertex y = check_id(parse_int(toks[2], cur.line_no));
            raw.pairs.push_back({x, y});
        } else {
            parse_fail(cur.line_no, "expected 'a <u> <v>' or 'p <x> <y>'");
        }
    }
    return raw;
}

PcrpInstance parse_instance(std::string_view text) {
    RawInstance raw = parse_raw_instance(text);
    Dag dag(raw.digraph.vertex_count, std::move(raw.digraph.arcs), raw.digraph.source,
            raw.digraph.sink);
    return PcrpInstance::make(std::move(dag), std::move(raw.pairs));
}

std::string write_instance(const PcrpInstance& inst) {
    std::ostringstream out;
    out << "pcrp 1\n";
    out << "n " << inst.dag().vertex_count() << " s " << inst.dag().source() << " t "
        << inst.dag().sink() << "\n";
    for (const auto& [u, v] : inst.dag().arcs()) out << "a " << u << " " << v << "\n";
    std::vector<RequiredPair> sorted = inst.pairs();
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) out << "p " << p.a << " " << p.b << "\n";
    return out.str();
}

PcrpInstance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

PcrpInstance augment_trivial_pairs(const PcrpInstance& inst) {
    std::vector<char> in_pair(inst.dag().vertex_count(), 0);
    for (const auto& p : inst.pairs()) {
        in_pair[p.a] = 1;
        in_pair[p.b] = 1;
    }
    std::vector<RequiredPair> pairs = inst.pairs();
    for (Vertex v = 0; v < inst.dag().vertex_count(); ++v) {
        if (in_pair[v] || v == inst.dag().source() || v == inst.dag().sink()) continue;
        pairs.push_back({inst.dag().source(), v});
    }
    return PcrpInstance::make_with_caches(inst.dag(), std::move(pairs), inst.reach());
}

VerifyReport verify_solution(const PcrpInstance& inst, std::span<const StPath> paths,
                             VerifyMode mode) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        validate_st_path(inst.dag(), paths[i], "path " + std::to_string(i));

    std::vector<char> covered(inst.dag().vertex_count(), 0);
    VerifyReport report;
    for (const auto& path : paths)
        for (Vertex v : path.vertices) covered[v] = 1;

    if (mode == VerifyMode::cover_all) {
        for (Vertex v = 0; v < inst.dag().vertex_count(); ++v)
            if (!covered[v]) report.uncovered_vertices.push_back(v);
    }

    for (const auto& pair : inst.pairs()) {
        bool hit = std::any_of(paths.begin(), paths.end(), [&](const StPath& p) {
            return p.contains(pair.a) && p.contains(pair.b);
        });
        if (!hit) report.uncovered_pairs.push_back(pair);
    }
    return report;
}

}  // namespace pcrp
