#include "corrnet/netinfo.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace corrnet {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// p log(p / q), with 0 log(0/q) := 0.
double mi_term(double p, double q) { return p > 0.0 ? p * std::log(p / q) : 0.0; }

} // namespace

LinkMIResult link_mi_from_counts(int n_vertices, int n1, int n2, int n12) {
    const double pairs = static_cast<double>(n_vertices) * (n_vertices - 1) / 2.0;
    if (pairs < 1.0) throw DataError("link mutual information needs at least 2 vertices");
    if (n12 > std::min(n1, n2) || n1 > pairs || n2 > pairs || n12 < 0 || n1 < 0 || n2 < 0)
        throw DataError("inconsistent link counts");

    LinkMIResult r;
    r.n1 = n1;
    r.n2 = n2;
    r.n12 = n12;

    const double p1 = n1 / pairs, p2 = n2 / pairs;
    r.p11 = n12 / pairs;
    r.p10 = (n1 - n12) / pairs;
    r.p01 = (n2 - n12) / pairs;
    r.p00 = 1.0 - (n1 + n2 - n12) / pairs;

    double info = mi_term(r.p11, p1 * p2) + mi_term(r.p10, p1 * (1.0 - p2)) +
                  mi_term(r.p01, (1.0 - p1) * p2) + mi_term(r.p00, (1.0 - p1) * (1.0 - p2));
    r.mutual_information = std::max(info, 0.0); // guard float round-off on independent inputs

    r.entropy1 = -xlogx(p1) - xlogx(1.0 - p1);
    r.entropy2 = -xlogx(p2) - xlogx(1.0 - p2);

    if (r.entropy1 <= 0.0 || r.entropy2 <= 0.0) {
        const char* which = r.entropy1 <= 0.0 ? "first" : "second";
        r.degenerate_reason =
            std::string("zero entropy in ") + which + " graph (empty or complete link set)";
    } else {
        r.normalized = r.mutual_information / std::sqrt(r.entropy1 * r.entropy2);
    }
    return r;
}

LinkMIResult link_mutual_information(const FilteredGraph& g1, const FilteredGraph& g2) {
    if (g1.n() < 2) throw DataError("link mutual information needs at least 2 vertices");

    std::set<std::pair<int, int>> e1;
    for (const auto& e : g1.edges) e1.insert({e.u, e.v});

    std::set<std::pair<int, int>> e2;
    if (g1.labels == g2.labels) {
        for (const auto& e : g2.edges) e2.insert({e.u, e.v});
    } else {
        // Same set in a different order is accepted; re-index by label.
        std::map<std::string, int> index;
        for (size_t i = 0; i < g1.labels.size(); ++i) index[g1.labels[i]] = static_cast<int>(i);
        if (g2.labels.size() != g1.labels.size())
            throw DataError("link mutual information: label sets differ");
        for (const auto& l : g2.labels)
            if (!index.count(l)) throw DataError("link mutual information: label sets differ ('" + l + "')");
        for (const auto& e : g2.edges) {
            int u = index[g2.labels[static_cast<size_t>(e.u)]];
            int v = index[g2.labels[static_cast<size_t>(e.v)]];
            if (u > v) std::swap(u, v);
            e2.insert({u, v});
        }
    }

    int shared = 0;
    for (const auto& p : e1) shared += e2.count(p) ? 1 : 0;
    return link_mi_from_counts(g1.n(), static_cast<int>(e1.size()), static_cast<int>(e2.size()), shared);
}

std::vector<LinkMIResult> rolling_mi(const std::vector<FilteredGraph>& graphs) {
    if (graphs.size() < 2) throw DataError("rolling mutual information needs at least 2 graphs");
    std::vector<LinkMIResult> out;
    out.reserve(graphs.size() - 1);
    for (size_t k = 0; k + 1 < graphs.size(); ++k)
        out.push_back(link_mutual_information(graphs[k], graphs[k + 1]));
    return out;
}

} // namespace corrnet
