#include "corrnet/filtgraph.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace corrnet {

namespace {

struct RankedPair {
    int u, v;
    double c;
};

// Decreasing correlation, ties by ascending (u, v). The same order drives
// both constructions so that every MST edge is scanned before any edge
// that could displace it, giving mst(C) subseteq pmfg(C).
std::vector<RankedPair> ranked_pairs(const CorrelationMatrix& m) {
    const int n = m.n();
    std::vector<RankedPair> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j, m.values(i, j)});
    std::sort(pairs.begin(), pairs.end(), [](const RankedPair& a, const RankedPair& b) {
        if (a.c != b.c) return a.c > b.c;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return pairs;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void sort_edges(std::vector<GraphEdge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
}

} // namespace

std::vector<int> FilteredGraph::degrees() const {
    std::vector<int> d(labels.size(), 0);
    for (const auto& e : edges) {
        ++d[static_cast<size_t>(e.u)];
        ++d[static_cast<size_t>(e.v)];
    }
    return d;
}

FilteredGraph mst(const CorrelationMatrix& matrix) {
    const int n = matrix.n();
    if (n < 2) throw DataError("mst needs at least 2 vertices");

    FilteredGraph g;
    g.labels = matrix.labels;
    g.kind = GraphKind::MST;
    UnionFind uf(n);
    for (const auto& p : ranked_pairs(matrix)) {
        if (uf.unite(p.u, p.v)) {
            g.edges.push_back({p.u, p.v, p.c});
            if (g.m() == n - 1) break;
        }
    }
    sort_edges(g.edges);
    return g;
}

PmfgTrace pmfg_traced(const CorrelationMatrix& matrix) {
    const int n = matrix.n();
    if (n < 3) throw DataError("pmfg needs at least 3 vertices");
    const int target = 3 * (n - 2);

    PmfgTrace trace;
    trace.graph.labels = matrix.labels;
    trace.graph.kind = GraphKind::PMFG;

    std::vector<std::pair<int, int>> accepted;
    accepted.reserve(static_cast<size_t>(target));
    for (const auto& p : ranked_pairs(matrix)) {
        accepted.emplace_back(p.u, p.v);
        if (is_planar(n, accepted)) {
            trace.graph.edges.push_back({p.u, p.v, p.c});
            if (trace.graph.m() == target) break;
        } else {
            accepted.pop_back();
            trace.rejected.emplace_back(p.u, p.v);
        }
    }
    sort_edges(trace.graph.edges);
    return trace;
}

FilteredGraph pmfg(const CorrelationMatrix& matrix) { return pmfg_traced(matrix).graph; }

Eigen::MatrixXi degree_profile(const std::vector<FilteredGraph>& graphs,
                               const std::vector<int>& ordering) {
    if (graphs.empty()) throw DataError("degree profile needs at least one graph");
    const auto& labels = graphs.front().labels;
    const size_t n = labels.size();
    for (const auto& g : graphs)
        if (g.labels != labels) throw DataError("degree profile: graphs have mismatched label sets");

    if (ordering.size() != n) throw DataError("degree profile: ordering size mismatch");
    std::vector<bool> seen(n, false);
    for (int idx : ordering) {
        if (idx < 0 || static_cast<size_t>(idx) >= n || seen[static_cast<size_t>(idx)])
            throw DataError("degree profile: ordering is not a permutation");
        seen[static_cast<size_t>(idx)] = true;
    }

    Eigen::MatrixXi profile(static_cast<Eigen::Index>(graphs.size()), static_cast<Eigen::Index>(n));
    for (size_t r = 0; r < graphs.size(); ++r) {
        auto deg = graphs[r].degrees();
        for (size_t c = 0; c < n; ++c)
            profile(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                deg[static_cast<size_t>(ordering[c])];
    }
    return profile;
}

void write_edgelist(std::ostream& out, const FilteredGraph& graph) {
    out << "source,target,weight\n";
    char buf[64];
    for (const auto& e : graph.edges) {
        std::snprintf(buf, sizeof buf, "%.10g", e.weight);
        out << graph.labels[static_cast<size_t>(e.u)] << ',' << graph.labels[static_cast<size_t>(e.v)]
            << ',' << buf << '\n';
    }
}

FilteredGraph read_edgelist(std::istream& in, GraphKind kind) {
    std::string line;
    std::vector<std::array<std::string, 2>> ends;
    std::vector<double> weights;
    std::set<std::string> labels;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (first && line == "source,target,weight") {
            first = false;
            continue;
        }
        first = false;
        std::stringstream ss(line);
        std::string a, b, w;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, w, ','))
            throw DataError("bad edge-list row: '" + line + "'");
        char* end = nullptr;
        double weight = std::strtod(w.c_str(), &end);
        if (end == w.c_str()) throw DataError("bad edge weight: '" + w + "'");
        if (a == b) throw DataError("self-loop on '" + a + "'");
        ends.push_back({a, b});
        weights.push_back(weight);
        labels.insert(a);
        labels.insert(b);
    }

    FilteredGraph g;
    g.kind = kind;
    g.labels.assign(labels.begin(), labels.end()); // sorted by std::set
    std::map<std::string, int> index;
    for (size_t i = 0; i < g.labels.size(); ++i) index[g.labels[i]] = static_cast<int>(i);

    std::set<std::pair<int, int>> dedupe;
    for (size_t k = 0; k < ends.size(); ++k) {
        int u = index[ends[k][0]], v = index[ends[k][1]];
        if (u > v) std::swap(u, v);
        if (!dedupe.insert({u, v}).second)
            throw DataError("duplicate edge " + ends[k][0] + "," + ends[k][1]);
        g.edges.push_back({u, v, weights[k]});
    }
    sort_edges(g.edges);
    return g;
}

FilteredGraph read_edgelist_file(const std::string& path, GraphKind kind) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file: " + path);
    return read_edgelist(in, kind);
}

namespace {
std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}
} // namespace

void write_graphml(std::ostream& out, const FilteredGraph& graph) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const auto& l : graph.labels) out << "    <node id=\"" << xml_escape(l) << "\"/>\n";
    char buf[64];
    for (const auto& e : graph.edges) {
        std::snprintf(buf, sizeof buf, "%.10g", e.weight);
        out << "    <edge source=\"" << xml_escape(graph.labels[static_cast<size_t>(e.u)])
            << "\" target=\"" << xml_escape(graph.labels[static_cast<size_t>(e.v)]) << "\">"
            << "<data key=\"weight\">" << buf << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

} // namespace corrnet
