#include "corrnet/mapeq.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace corrnet {

namespace {

constexpr double kWeightFloor = 1e-6; // clamp for nonpositive correlations
constexpr double kImprove = 1e-12;    // minimum accepted codelength decrease

double plogp(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

struct WalkGraph {
    int n = 0;
    // Adjacency with edge weights normalized by 2W, so that a vertex
    // strength equals its stationary visit rate.
    std::vector<std::vector<std::pair<int, double>>> adj;
    std::vector<double> visit;    // p_a
    double sum_plogp_visit = 0.0; // sum_a plogp(p_a), partition-independent
};

double edge_weight(const GraphEdge& e, EdgeWeighting weighting) {
    return weighting == EdgeWeighting::unweighted ? 1.0 : std::max(e.weight, kWeightFloor);
}

WalkGraph build_walk_graph(const FilteredGraph& graph, EdgeWeighting weighting) {
    if (graph.m() == 0) throw DataError("map equation needs a graph with at least one edge");

    WalkGraph wg;
    wg.n = graph.n();
    wg.adj.resize(static_cast<size_t>(wg.n));
    double total = 0.0;
    for (const auto& e : graph.edges) total += edge_weight(e, weighting);
    if (total <= 0.0) throw DataError("map equation needs positive total edge weight");

    wg.visit.assign(static_cast<size_t>(wg.n), 0.0);
    for (const auto& e : graph.edges) {
        double w = edge_weight(e, weighting) / (2.0 * total);
        wg.adj[static_cast<size_t>(e.u)].emplace_back(e.v, w);
        wg.adj[static_cast<size_t>(e.v)].emplace_back(e.u, w);
        wg.visit[static_cast<size_t>(e.u)] += w;
        wg.visit[static_cast<size_t>(e.v)] += w;
    }
    for (double p : wg.visit) wg.sum_plogp_visit += plogp(p);

    // Connectivity check (BFS).
    std::vector<char> seen(static_cast<size_t>(wg.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [u, w] : wg.adj[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != wg.n) throw DataError("map equation requires a connected graph");
    return wg;
}

// Mutable partition state with O(1) codelength deltas. The codelength in
// the compact form is
//   L = plogp(q) - 2 sum_m plogp(q_m) + sum_m plogp(q_m + flow_m)
//       - sum_a plogp(p_a).
struct State {
    const WalkGraph* g = nullptr;
    std::vector<int> assign;
    std::vector<double> flow; // per module, sum of member visit rates
    std::vector<double> cut;  // per module, q_m
    std::vector<int> size;
    std::vector<int> free_ids;
    double q = 0.0;
    double sum_plogp_cut = 0.0;
    double sum_plogp_usage = 0.0;

    void init_singletons(const WalkGraph& wg) {
        g = &wg;
        const size_t n = static_cast<size_t>(wg.n);
        assign.resize(n);
        std::iota(assign.begin(), assign.end(), 0);
        flow = wg.visit;
        cut = wg.visit; // no self-loops: a singleton's cut equals its strength
        size.assign(n, 1);
        free_ids.clear();
        q = 0.0;
        sum_plogp_cut = 0.0;
        sum_plogp_usage = 0.0;
        for (size_t m = 0; m < n; ++m) {
            q += cut[m];
            sum_plogp_cut += plogp(cut[m]);
            sum_plogp_usage += plogp(cut[m] + flow[m]);
        }
    }

    double codelength() const {
        return plogp(q) - 2.0 * sum_plogp_cut + sum_plogp_usage - g->sum_plogp_visit;
    }

    // Codelength change if vertex v moves from its module to `to`, where
    // w_from / w_to are v's total normalized weight into the source module
    // (minus v) and the target module.
    double move_delta(int v, int to, double w_from, double w_to) const {
        const int from = assign[static_cast<size_t>(v)];
        const double pv = g->visit[static_cast<size_t>(v)];
        const double cf = cut[static_cast<size_t>(from)], ff = flow[static_cast<size_t>(from)];
        const double ct = cut[static_cast<size_t>(to)], ft = flow[static_cast<size_t>(to)];
        const double cf2 = cf - pv + 2.0 * w_from;
        const double ct2 = ct + pv - 2.0 * w_to;
        const double q2 = q + (cf2 - cf) + (ct2 - ct);
        double d = plogp(q2) - plogp(q);
        d -= 2.0 * (plogp(cf2) - plogp(cf) + plogp(ct2) - plogp(ct));
        d += plogp(cf2 + ff - pv) - plogp(cf + ff);
        d += plogp(ct2 + ft + pv) - plogp(ct + ft);
        return d;
    }

    void apply_move(int v, int to, double w_from, double w_to) {
        const int from = assign[static_cast<size_t>(v)];
        const double pv = g->visit[static_cast<size_t>(v)];
        const double cf = cut[static_cast<size_t>(from)], ct = cut[static_cast<size_t>(to)];
        const double cf2 = cf - pv + 2.0 * w_from;
        const double ct2 = ct + pv - 2.0 * w_to;

        sum_plogp_cut += plogp(cf2) - plogp(cf) + plogp(ct2) - plogp(ct);
        sum_plogp_usage += plogp(cf2 + flow[static_cast<size_t>(from)] - pv) -
                           plogp(cf + flow[static_cast<size_t>(from)]) +
                           plogp(ct2 + flow[static_cast<size_t>(to)] + pv) -
                           plogp(ct + flow[static_cast<size_t>(to)]);
        q += (cf2 - cf) + (ct2 - ct);
        cut[static_cast<size_t>(from)] = cf2;
        cut[static_cast<size_t>(to)] = ct2;
        flow[static_cast<size_t>(from)] -= pv;
        flow[static_cast<size_t>(to)] += pv;
        --size[static_cast<size_t>(from)];
        ++size[static_cast<size_t>(to)];
        assign[static_cast<size_t>(v)] = to;
        if (size[static_cast<size_t>(from)] == 0) {
            flow[static_cast<size_t>(from)] = 0.0;
            cut[static_cast<size_t>(from)] = 0.0;
            free_ids.push_back(from);
        }
    }

    int fresh_module() {
        if (!free_ids.empty()) {
            int id = free_ids.back();
            free_ids.pop_back();
            return id;
        }
        flow.push_back(0.0);
        cut.push_back(0.0);
        size.push_back(0);
        return static_cast<int>(flow.size()) - 1;
    }

    void release_if_unused(int id) {
        if (size[static_cast<size_t>(id)] == 0) free_ids.push_back(id);
    }

    double merge_delta(int a, int b, double w_ab) const {
        const double ca = cut[static_cast<size_t>(a)], cb = cut[static_cast<size_t>(b)];
        const double c2 = ca + cb - 2.0 * w_ab;
        const double q2 = q - 2.0 * w_ab;
        double d = plogp(q2) - plogp(q);
        d -= 2.0 * (plogp(c2) - plogp(ca) - plogp(cb));
        d += plogp(c2 + flow[static_cast<size_t>(a)] + flow[static_cast<size_t>(b)]) -
             plogp(ca + flow[static_cast<size_t>(a)]) - plogp(cb + flow[static_cast<size_t>(b)]);
        return d;
    }

    void apply_merge(int a, int b, double w_ab) {
        const double ca = cut[static_cast<size_t>(a)], cb = cut[static_cast<size_t>(b)];
        const double c2 = ca + cb - 2.0 * w_ab;
        sum_plogp_cut += plogp(c2) - plogp(ca) - plogp(cb);
        sum_plogp_usage += plogp(c2 + flow[static_cast<size_t>(a)] + flow[static_cast<size_t>(b)]) -
                           plogp(ca + flow[static_cast<size_t>(a)]) -
                           plogp(cb + flow[static_cast<size_t>(b)]);
        q -= 2.0 * w_ab;
        cut[static_cast<size_t>(a)] = c2;
        flow[static_cast<size_t>(a)] += flow[static_cast<size_t>(b)];
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        cut[static_cast<size_t>(b)] = 0.0;
        flow[static_cast<size_t>(b)] = 0.0;
        size[static_cast<size_t>(b)] = 0;
        for (auto& m : assign)
            if (m == b) m = a;
        free_ids.push_back(b);
    }
};

// Greedy agglomerative phase: repeatedly apply the best codelength-lowering
// merge of two linked modules. Candidate order is shuffled so that ties
// resolve differently across runs.
void merge_phase(State& st, const WalkGraph& wg, std::mt19937_64& rng) {
    struct Pair {
        int a, b;
        double w;
    };
    while (true) {
        std::vector<Pair> pairs;
        {
            // inter-module weights, rebuilt each step (graphs here are small)
            std::vector<std::pair<long long, double>> acc;
            for (int v = 0; v < wg.n; ++v) {
                for (const auto& [u, w] : wg.adj[static_cast<size_t>(v)]) {
                    if (u <= v) continue;
                    int a = st.assign[static_cast<size_t>(v)], b = st.assign[static_cast<size_t>(u)];
                    if (a == b) continue;
                    if (a > b) std::swap(a, b);
                    acc.emplace_back(static_cast<long long>(a) * wg.n + b, w);
                }
            }
            std::sort(acc.begin(), acc.end());
            for (size_t i = 0; i < acc.size();) {
                size_t j = i;
                double w = 0.0;
                while (j < acc.size() && acc[j].first == acc[i].first) w += acc[j++].second;
                pairs.push_back({static_cast<int>(acc[i].first / wg.n),
                                 static_cast<int>(acc[i].first % wg.n), w});
                i = j;
            }
        }
        if (pairs.empty()) break;
        std::shuffle(pairs.begin(), pairs.end(), rng);

        double best = -kImprove;
        int best_idx = -1;
        for (size_t i = 0; i < pairs.size(); ++i) {
            double d = st.merge_delta(pairs[i].a, pairs[i].b, pairs[i].w);
            if (d < best) {
                best = d;
                best_idx = static_cast<int>(i);
            }
        }
        if (best_idx < 0) break;
        st.apply_merge(pairs[best_idx].a, pairs[best_idx].b, pairs[best_idx].w);
    }
}

// Local refinement: move single vertices to the best adjacent module (or a
// fresh singleton) while some move lowers the codelength.
void move_phase(State& st, const WalkGraph& wg, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<size_t>(wg.n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<double> w_to_module(st.flow.size() + 1, 0.0);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v : order) {
            const int from = st.assign[static_cast<size_t>(v)];
            if (w_to_module.size() < st.flow.size()) w_to_module.resize(st.flow.size(), 0.0);
            std::vector<int> touched;
            for (const auto& [u, w] : wg.adj[static_cast<size_t>(v)]) {
                int m = st.assign[static_cast<size_t>(u)];
                if (w_to_module[static_cast<size_t>(m)] == 0.0) touched.push_back(m);
                w_to_module[static_cast<size_t>(m)] += w;
            }
            const double w_from = w_to_module[static_cast<size_t>(from)];

            double best = -kImprove;
            int best_to = -1;
            for (int m : touched) {
                if (m == from) continue;
                double d = st.move_delta(v, m, w_from, w_to_module[static_cast<size_t>(m)]);
                if (d < best) {
                    best = d;
                    best_to = m;
                }
            }
            int fresh = -1;
            if (st.size[static_cast<size_t>(from)] > 1) {
                fresh = st.fresh_module();
                double d = st.move_delta(v, fresh, w_from, 0.0);
                if (d < best) {
                    best = d;
                    best_to = fresh;
                }
            }
            if (best_to >= 0) {
                st.apply_move(v, best_to, w_from,
                              best_to == fresh ? 0.0 : w_to_module[static_cast<size_t>(best_to)]);
                improved = true;
            }
            if (fresh >= 0 && best_to != fresh) st.release_if_unused(fresh);
            for (int m : touched) w_to_module[static_cast<size_t>(m)] = 0.0;
        }
    }
}

// Exhaustive single-move scan over all modules, not only adjacent ones.
// Guarantees the returned partition is a strict local optimum under
// single-vertex moves.
void exhaustive_phase(State& st, const WalkGraph& wg) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < wg.n; ++v) {
            const int from = st.assign[static_cast<size_t>(v)];
            double w_from = 0.0;
            std::vector<double> w_to(st.flow.size(), 0.0);
            for (const auto& [u, w] : wg.adj[static_cast<size_t>(v)])
                w_to[static_cast<size_t>(st.assign[static_cast<size_t>(u)])] += w;
            w_from = w_to[static_cast<size_t>(from)];

            double best = -kImprove;
            int best_to = -1;
            for (size_t m = 0; m < st.flow.size(); ++m) {
                if (static_cast<int>(m) == from || st.size[m] == 0) continue;
                double d = st.move_delta(v, static_cast<int>(m), w_from, w_to[m]);
                if (d < best) {
                    best = d;
                    best_to = static_cast<int>(m);
                }
            }
            int fresh = -1;
            if (st.size[static_cast<size_t>(from)] > 1) {
                fresh = st.fresh_module();
                double d = st.move_delta(v, fresh, w_from, 0.0);
                if (d < best) {
                    best = d;
                    best_to = fresh;
                }
            }
            if (best_to >= 0) {
                st.apply_move(v, best_to, w_from,
                              best_to == fresh ? 0.0 : w_to[static_cast<size_t>(best_to)]);
                improved = true;
            }
            if (fresh >= 0 && best_to != fresh) st.release_if_unused(fresh);
        }
    }
}

std::vector<int> normalized_ids(const std::vector<int>& raw) {
    const int max_id = *std::max_element(raw.begin(), raw.end());
    std::vector<int> remap(static_cast<size_t>(max_id) + 1, -1);
    std::vector<int> out(raw.size());
    int next = 0;
    for (size_t v = 0; v < raw.size(); ++v) {
        if (remap[static_cast<size_t>(raw[v])] < 0) remap[static_cast<size_t>(raw[v])] = next++;
        out[v] = remap[static_cast<size_t>(raw[v])];
    }
    return out;
}

double evaluate_codelength(const WalkGraph& wg, const std::vector<int>& assignment) {
    const int k = 1 + *std::max_element(assignment.begin(), assignment.end());
    std::vector<double> flow(static_cast<size_t>(k), 0.0), cut(static_cast<size_t>(k), 0.0);
    for (int v = 0; v < wg.n; ++v) flow[static_cast<size_t>(assignment[static_cast<size_t>(v)])] += wg.visit[static_cast<size_t>(v)];
    for (int v = 0; v < wg.n; ++v) {
        for (const auto& [u, w] : wg.adj[static_cast<size_t>(v)]) {
            if (u <= v) continue;
            if (assignment[static_cast<size_t>(v)] != assignment[static_cast<size_t>(u)]) {
                cut[static_cast<size_t>(assignment[static_cast<size_t>(v)])] += w;
                cut[static_cast<size_t>(assignment[static_cast<size_t>(u)])] += w;
            }
        }
    }
    double q = 0.0, sum_cut = 0.0, sum_usage = 0.0;
    for (int m = 0; m < k; ++m) {
        q += cut[static_cast<size_t>(m)];
        sum_cut += plogp(cut[static_cast<size_t>(m)]);
        sum_usage += plogp(cut[static_cast<size_t>(m)] + flow[static_cast<size_t>(m)]);
    }
    return plogp(q) - 2.0 * sum_cut + sum_usage - wg.sum_plogp_visit;
}

} // namespace

double map_equation(const FilteredGraph& graph, const std::vector<int>& assignment,
                    EdgeWeighting weighting) {
    if (assignment.size() != static_cast<size_t>(graph.n()))
        throw DataError("map equation: assignment size mismatch");
    for (int m : assignment)
        if (m < 0) throw DataError("map equation: negative module id");
    WalkGraph wg = build_walk_graph(graph, weighting);
    return evaluate_codelength(wg, normalized_ids(assignment));
}

Partition detect_communities(const FilteredGraph& graph, int n_runs, std::uint64_t seed,
                             EdgeWeighting weighting) {
    if (n_runs < 1) throw DataError("detect_communities needs n_runs >= 1");
    WalkGraph wg = build_walk_graph(graph, weighting);

    std::vector<int> best_assign;
    double best_len = 0.0;
    for (int run = 0; run < n_runs; ++run) {
        // Independent generator per (seed, run): runs are schedule-free.
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(run + 1));
        State st;
        st.init_singletons(wg);
        merge_phase(st, wg, rng);
        move_phase(st, wg, rng);
        exhaustive_phase(st, wg);

        std::vector<int> assign = normalized_ids(st.assign);
        double len = evaluate_codelength(wg, assign);
        if (best_assign.empty() || len < best_len) {
            best_assign = std::move(assign);
            best_len = len;
        }
    }

    // Relabel modules by descending total flow (ties: smallest member index).
    const int k = 1 + *std::max_element(best_assign.begin(), best_assign.end());
    std::vector<double> mod_flow(static_cast<size_t>(k), 0.0);
    std::vector<int> first_member(static_cast<size_t>(k), wg.n);
    for (int v = 0; v < wg.n; ++v) {
        int m = best_assign[static_cast<size_t>(v)];
        mod_flow[static_cast<size_t>(m)] += wg.visit[static_cast<size_t>(v)];
        first_member[static_cast<size_t>(m)] = std::min(first_member[static_cast<size_t>(m)], v);
    }
    std::vector<int> mod_order(static_cast<size_t>(k));
    std::iota(mod_order.begin(), mod_order.end(), 0);
    std::sort(mod_order.begin(), mod_order.end(), [&](int a, int b) {
        if (mod_flow[static_cast<size_t>(a)] != mod_flow[static_cast<size_t>(b)])
            return mod_flow[static_cast<size_t>(a)] > mod_flow[static_cast<size_t>(b)];
        return first_member[static_cast<size_t>(a)] < first_member[static_cast<size_t>(b)];
    });
    std::vector<int> new_id(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) new_id[static_cast<size_t>(mod_order[static_cast<size_t>(r)])] = r;

    Partition part;
    part.assignment.resize(static_cast<size_t>(wg.n));
    for (int v = 0; v < wg.n; ++v)
        part.assignment[static_cast<size_t>(v)] = new_id[static_cast<size_t>(best_assign[static_cast<size_t>(v)])];
    part.n_modules = k;
    part.codelength = best_len;

    // Flow rank: within each module, descending visit rate, ties by index.
    part.flow_rank.assign(static_cast<size_t>(wg.n), 0);
    for (int m = 0; m < k; ++m) {
        std::vector<int> members;
        for (int v = 0; v < wg.n; ++v)
            if (part.assignment[static_cast<size_t>(v)] == m) members.push_back(v);
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            if (wg.visit[static_cast<size_t>(a)] != wg.visit[static_cast<size_t>(b)])
                return wg.visit[static_cast<size_t>(a)] > wg.visit[static_cast<size_t>(b)];
            return a < b;
        });
        for (size_t r = 0; r < members.size(); ++r)
            part.flow_rank[static_cast<size_t>(members[r])] = static_cast<int>(r);
    }
    return part;
}

std::vector<int> cluster_ordering(const Partition& partition) {
    std::vector<int> order(partition.assignment.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ma = partition.assignment[static_cast<size_t>(a)], mb = partition.assignment[static_cast<size_t>(b)];
        if (ma != mb) return ma < mb;
        return partition.flow_rank[static_cast<size_t>(a)] < partition.flow_rank[static_cast<size_t>(b)];
    });
    return order;
}

} // namespace corrnet
