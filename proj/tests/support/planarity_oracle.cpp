#include "planarity_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace testsupport {

namespace {

using Edge = std::pair<int, int>;

// ---- biconnected components (lowpoint DFS with an edge stack) ----

struct BlockFinder {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    explicit BlockFinder(int n_, const std::vector<Edge>& edges) : n(n_), adj(n_), disc(n_, -1), low(n_, 0) {
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    void pop_block(const Edge& until) {
        std::vector<Edge> block;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        for (int u : adj[v]) {
            if (u == parent) {
                parent = -2; // consume one parent edge only (no multi-edges expected)
                continue;
            }
            if (disc[u] < 0) {
                Edge e{v, u};
                stack.push_back(e);
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) pop_block(e);
            } else if (disc[u] < disc[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
    }

    std::vector<std::vector<Edge>> run() {
        for (int v = 0; v < n; ++v)
            if (disc[v] < 0) dfs(v, -1);
        return blocks;
    }
};

// ---- DMP embedding on one biconnected block ----

struct Dmp {
    int n; // block-local vertex count
    std::vector<std::vector<int>> adj;
    std::set<Edge> edge_set;      // canonical (min,max)
    std::vector<char> in_h;       // embedded vertices
    std::set<Edge> embedded;      // embedded edges
    std::vector<std::vector<int>> faces;

    static Edge canon(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    bool run(const std::vector<Edge>& edges) {
        std::set<int> verts;
        for (const auto& [u, v] : edges) {
            verts.insert(u);
            verts.insert(v);
        }
        n = static_cast<int>(verts.size());
        if (n <= 4) return true;
        const size_t m = edges.size();
        if (m > 3 * static_cast<size_t>(n) - 6) return false;

        std::vector<int> ids(verts.begin(), verts.end());
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
        };
        adj.assign(n, {});
        for (const auto& [u, v] : edges) {
            int a = local(u), b = local(v);
            adj[a].push_back(b);
            adj[b].push_back(a);
            edge_set.insert(canon(a, b));
        }

        std::vector<int> cycle = find_cycle();
        if (cycle.empty()) return true; // acyclic block cannot occur, but harmless

        in_h.assign(n, 0);
        for (int v : cycle) in_h[v] = 1;
        for (size_t i = 0; i < cycle.size(); ++i)
            embedded.insert(canon(cycle[i], cycle[(i + 1) % cycle.size()]));
        faces = {cycle, cycle};

        while (true) {
            auto fragments = find_fragments();
            if (fragments.empty()) return true;

            // admissible faces per fragment
            int chosen = -1;
            std::vector<int> chosen_faces;
            for (size_t f = 0; f < fragments.size(); ++f) {
                std::vector<int> admissible;
                for (size_t k = 0; k < faces.size(); ++k)
                    if (face_contains_all(faces[k], fragments[f].attachments)) admissible.push_back(static_cast<int>(k));
                if (admissible.empty()) return false;
                if (admissible.size() == 1) {
                    chosen = static_cast<int>(f);
                    chosen_faces = admissible;
                    break;
                }
                if (chosen < 0) {
                    chosen = static_cast<int>(f);
                    chosen_faces = admissible;
                }
            }

            std::vector<int> path = alpha_path(fragments[static_cast<size_t>(chosen)]);
            embed_path(path, chosen_faces.front());
        }
    }

    std::vector<int> find_cycle() {
        std::vector<int> parent(n, -1), state(n, 0), order;
        for (int s = 0; s < n; ++s) {
            if (state[s]) continue;
            std::vector<int> stack{s};
            parent[s] = -1;
            while (!stack.empty()) {
                int v = stack.back();
                if (!state[v]) {
                    state[v] = 1;
                    for (int u : adj[v]) {
                        if (u == parent[v]) continue;
                        if (state[u] == 1) {
                            // back edge v->u closes a cycle
                            std::vector<int> cycle{v};
                            for (int w = v; w != u; w = parent[w]) cycle.push_back(parent[w]);
                            return cycle;
                        }
                        if (!state[u]) {
                            parent[u] = v;
                            stack.push_back(u);
                        }
                    }
                } else {
                    state[v] = 2;
                    stack.pop_back();
                }
            }
        }
        return {};
    }

    struct Fragment {
        std::vector<int> attachments;    // embedded vertices touching the fragment
        std::vector<int> inner;          // non-embedded vertices, empty for a chord
        Edge chord{-1, -1};
    };

    std::vector<Fragment> find_fragments() {
        std::vector<Fragment> out;
        // chords: unembedded edges between embedded vertices
        for (const auto& e : edge_set) {
            if (embedded.count(e)) continue;
            if (in_h[e.first] && in_h[e.second]) {
                Fragment f;
                f.attachments = {e.first, e.second};
                f.chord = e;
                out.push_back(std::move(f));
            }
        }
        // components of G - V(H) plus their attachment edges
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (in_h[s] || seen[s]) continue;
            Fragment f;
            std::set<int> att;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                f.inner.push_back(v);
                for (int u : adj[v]) {
                    if (in_h[u]) {
                        att.insert(u);
                    } else if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    bool face_contains_all(const std::vector<int>& face, const std::vector<int>& attachments) {
        for (int a : attachments)
            if (std::find(face.begin(), face.end(), a) == face.end()) return false;
        return true;
    }

    // Path between two distinct attachments whose interior is fragment-inner.
    std::vector<int> alpha_path(const Fragment& f) {
        if (f.chord.first >= 0) return {f.chord.first, f.chord.second};
        if (f.attachments.size() < 2)
            throw std::logic_error("dmp: fragment of a biconnected block with < 2 attachments");
        const int start = f.attachments.front();
        std::vector<char> inner(n, 0);
        for (int v : f.inner) inner[v] = 1;

        std::vector<int> parent(n, -1), queue;
        // seed with start's inner neighbours
        for (int u : adj[start])
            if (inner[u] && parent[u] < 0) {
                parent[u] = start;
                queue.push_back(u);
            }
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : adj[v]) {
                if (u == start) continue;
                if (in_h[u]) {
                    // reached another attachment: reconstruct
                    std::vector<int> path{u};
                    for (int w = v; w != start; w = parent[w]) path.push_back(w);
                    path.push_back(start);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (inner[u] && parent[u] < 0) {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        throw std::logic_error("dmp: no alpha path found");
    }

    void embed_path(const std::vector<int>& path, int face_idx) {
        const int u = path.front(), v = path.back();
        std::vector<int> face = faces[static_cast<size_t>(face_idx)];
        const auto iu = static_cast<size_t>(std::find(face.begin(), face.end(), u) - face.begin());
        const auto iv = static_cast<size_t>(std::find(face.begin(), face.end(), v) - face.begin());
        const size_t k = face.size();

        std::vector<int> seg_a; // u ... v forward
        for (size_t i = iu;; i = (i + 1) % k) {
            seg_a.push_back(face[i]);
            if (i == iv) break;
        }
        std::vector<int> seg_b; // v ... u forward
        for (size_t i = iv;; i = (i + 1) % k) {
            seg_b.push_back(face[i]);
            if (i == iu) break;
        }

        std::vector<int> face1 = seg_a; // + reversed interior
        for (size_t i = path.size() - 2; i >= 1; --i) face1.push_back(path[i]);
        std::vector<int> face2 = seg_b; // + interior
        for (size_t i = 1; i + 1 < path.size(); ++i) face2.push_back(path[i]);

        faces[static_cast<size_t>(face_idx)] = std::move(face1);
        faces.push_back(std::move(face2));

        for (size_t i = 0; i + 1 < path.size(); ++i) embedded.insert(canon(path[i], path[i + 1]));
        for (int w : path) in_h[w] = 1;
    }
};

} // namespace

bool dmp_is_planar(int n_vertices, const std::vector<Edge>& edges) {
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices || u == v)
            throw std::invalid_argument("dmp: bad edge");
    std::set<Edge> dedupe;
    for (const auto& [u, v] : edges)
        if (!dedupe.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("dmp: duplicate edge");

    auto blocks = BlockFinder(n_vertices, edges).run();
    for (const auto& block : blocks) {
        Dmp dmp;
        if (!dmp.run(block)) return false;
    }
    return true;
}

} // namespace testsupport
