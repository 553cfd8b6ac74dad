#include "fcat/trivalent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace fcat {

TrivalentParams h3_trivalent_params() {
    double d = (3.0 + std::sqrt(13.0)) / 2.0;
    return {d, 1.0, -2.0 / 3.0 * d + 5.0 / 3.0};
}

TrivalentParams fibonacci_trivalent_params() {
    double d = (1.0 + std::sqrt(5.0)) / 2.0;
    return {d, 1.0, (d - 2.0) / (d - 1.0)};
}

PlanarDiagram PlanarDiagram::from_rotations(const std::vector<std::array<int, 3>>& rot,
                                            int free_loops) {
    std::map<int, int> uses;
    for (const auto& v : rot)
        for (int e : v) ++uses[e];
    for (const auto& [e, n] : uses)
        if (n != 2) throw Error("edge " + std::to_string(e) + " used " + std::to_string(n) +
                                " times; expected 2");
    PlanarDiagram d;
    d.rot_ = rot;
    d.free_loops_ = free_loops;
    return d;
}

PlanarDiagram PlanarDiagram::disjoint_union(const PlanarDiagram& other) const {
    PlanarDiagram d = *this;
    int off = 0;
    for (const auto& v : rot_)
        for (int e : v) off = std::max(off, e + 1);
    for (const auto& v : other.rot_) {
        std::array<int, 3> w = v;
        for (int& e : w) e += off;
        d.rot_.push_back(w);
    }
    d.free_loops_ += other.free_loops_;
    return d;
}

std::pair<double, double> square_coeffs(const TrivalentParams& p) {
    double denom = p.b * p.d + p.t + p.d * p.t;
    if (std::abs(denom) < 1e-12)
        throw SingularDenominator("square reduction denominator bd + t + dt vanishes");
    double alpha = p.b * (p.b * p.b + p.b * p.t - p.t * p.t) / denom;
    double beta = (p.t * p.t * (p.d + 1.0) - p.b * p.b) / denom;
    return {alpha, beta};
}

namespace {

// Mutable port-graph view of a diagram under reduction. Port 3v+s belongs to
// vertex v; mate[] pairs ports into edges.
struct PortGraph {
    std::vector<int> mate;
    std::vector<char> alive;  // per vertex
    int loops = 0;

    int vertex(int port) const { return port / 3; }
    int next_slot(int port) const { return (port / 3) * 3 + (port % 3 + 1) % 3; }

    static PortGraph from(const PlanarDiagram& d) {
        PortGraph g;
        const auto& rot = d.rotations();
        g.alive.assign(rot.size(), 1);
        g.mate.assign(rot.size() * 3, -1);
        g.loops = d.free_loops();
        std::map<int, int> first;
        for (std::size_t v = 0; v < rot.size(); ++v)
            for (int s = 0; s < 3; ++s) {
                int e = rot[v][std::size_t(s)];
                int port = int(v) * 3 + s;
                auto it = first.find(e);
                if (it == first.end()) {
                    first[e] = port;
                } else {
                    g.mate[std::size_t(port)] = it->second;
                    g.mate[std::size_t(it->second)] = port;
                }
            }
        return g;
    }

    int num_alive() const {
        int n = 0;
        for (char a : alive) n += a;
        return n;
    }

    bool has_lollipop() const {
        for (std::size_t p = 0; p < mate.size(); ++p) {
            if (!alive[p / 3]) continue;
            if (vertex(int(p)) == vertex(mate[p])) return true;
        }
        return false;
    }

    // Face containing the half-edge leaving through `port`; returns the port
    // orbit (one port per face edge).
    std::vector<int> trace_face(int start) const {
        std::vector<int> orbit;
        int p = start;
        do {
            orbit.push_back(p);
            p = next_slot(mate[std::size_t(p)]);
            if (orbit.size() > mate.size()) throw Error("face tracing runaway");
        } while (p != start);
        return orbit;
    }

    // Splice away the vertices in `dead`, rejoining the strands that ran
    // through them. `pairing` wires ports of dead vertices either to each
    // other (pass-through) or to ports of freshly added vertices.
    void splice(const std::vector<int>& dead, const std::map<int, int>& pairing) {
        std::vector<char> is_dead(alive.size(), 0);
        for (int v : dead) is_dead[std::size_t(v)] = 1;
        auto dead_port = [&](int p) { return bool(is_dead[std::size_t(p / 3)]); };

        std::vector<char> dead_seen(mate.size(), 0);
        std::vector<char> done(mate.size(), 0);
        // Strand walk: alternate between crossing old edges (mate) and the
        // rewiring links (pairing) until a live port is reached.
        auto walk = [&](int p0) -> int {
            bool via_mate;
            int cur;
            if (mate[std::size_t(p0)] >= 0) {
                cur = mate[std::size_t(p0)];
                via_mate = true;
            } else {
                cur = pairing.at(p0);
                via_mate = false;
            }
            std::size_t guard = 0;
            while (dead_port(cur)) {
                dead_seen[std::size_t(cur)] = 1;
                if (via_mate) {
                    cur = pairing.at(cur);
                    via_mate = false;
                } else {
                    dead_seen[std::size_t(cur)] = 1;
                    cur = mate[std::size_t(cur)];
                    via_mate = true;
                }
                dead_seen[std::size_t(cur)] = 1;
                if (++guard > 4 * mate.size()) throw Error("splice runaway");
            }
            return cur;
        };

        for (std::size_t p0 = 0; p0 < mate.size(); ++p0) {
            if (!alive[p0 / 3] || dead_port(int(p0)) || done[p0]) continue;
            if (mate[p0] >= 0 && !dead_port(mate[p0])) continue;  // untouched edge
            int q = walk(int(p0));
            mate[p0] = q;
            mate[std::size_t(q)] = int(p0);
            done[p0] = done[std::size_t(q)] = 1;
        }
        // cycles living entirely on dead ports become free loops
        for (std::size_t d0 = 0; d0 < mate.size(); ++d0) {
            if (!dead_port(int(d0)) || dead_seen[d0]) continue;
            if (!pairing.count(int(d0))) continue;
            int cur = int(d0);
            bool via_mate = true;  // leave d0 via its pairing first
            std::size_t guard = 0;
            while (true) {
                dead_seen[std::size_t(cur)] = 1;
                if (via_mate) {
                    cur = pairing.at(cur);
                    via_mate = false;
                } else {
                    cur = mate[std::size_t(cur)];
                    via_mate = true;
                }
                if (cur == int(d0) && via_mate) break;
                if (++guard > 4 * mate.size()) throw Error("loop walk runaway");
            }
            ++loops;
        }
        for (int v : dead) alive[std::size_t(v)] = 0;
    }

    // Appends a fresh trivalent vertex and returns its base port.
    int add_vertex() {
        alive.push_back(1);
        mate.resize(mate.size() + 3, -1);
        return int(mate.size()) - 3;
    }
};

double evaluate(PortGraph g, const TrivalentParams& p, std::mt19937_64* rng);

double reduce_square(const PortGraph& g, const std::vector<int>& face,
                     const TrivalentParams& p, std::mt19937_64* rng) {
    auto [alpha, beta] = square_coeffs(p);
    std::array<int, 4> rem{};
    std::array<int, 4> vtx{};
    for (int i = 0; i < 4; ++i) {
        int port = face[std::size_t(i)];
        int prev = face[std::size_t((i + 3) % 4)];
        int v = port / 3;
        vtx[std::size_t(i)] = v;
        int in_port = g.mate[std::size_t(prev)];
        for (int s = 0; s < 3; ++s) {
            int q = v * 3 + s;
            if (q != port && q != in_port) rem[std::size_t(i)] = q;
        }
    }
    std::vector<int> dead(vtx.begin(), vtx.end());

    double total = 0.0;
    // pairing terms: (r0 r1)(r2 r3) and (r1 r2)(r3 r0)
    for (int off : {0, 1}) {
        PortGraph h = g;
        std::map<int, int> pairing;
        pairing[rem[std::size_t(off)]] = rem[std::size_t((off + 1) % 4)];
        pairing[rem[std::size_t((off + 1) % 4)]] = rem[std::size_t(off)];
        pairing[rem[std::size_t((off + 2) % 4)]] = rem[std::size_t((off + 3) % 4)];
        pairing[rem[std::size_t((off + 3) % 4)]] = rem[std::size_t((off + 2) % 4)];
        h.splice(dead, pairing);
        total += alpha * evaluate(std::move(h), p, rng);
    }
    // tree terms: vertices joining (r0 r1 | r2 r3) and (r1 r2 | r3 r0)
    for (int off : {0, 1}) {
        PortGraph h = g;
        int w1 = h.add_vertex();
        int w2 = h.add_vertex();
        // connect the two new vertices through their third slots
        h.mate[std::size_t(w1 + 2)] = w2 + 2;
        h.mate[std::size_t(w2 + 2)] = w1 + 2;
        std::map<int, int> pairing;
        pairing[rem[std::size_t(off)]] = w1;
        pairing[rem[std::size_t((off + 1) % 4)]] = w1 + 1;
        pairing[rem[std::size_t((off + 2) % 4)]] = w2;
        pairing[rem[std::size_t((off + 3) % 4)]] = w2 + 1;
        // make it symmetric for the splice walk
        std::map<int, int> full = pairing;
        for (auto& [a, b] : pairing) full[b] = a;
        h.splice(dead, full);
        total += beta * evaluate(std::move(h), p, rng);
    }
    return total;
}

double evaluate(PortGraph g, const TrivalentParams& p, std::mt19937_64* rng) {
    double scalar = 1.0;
    while (true) {
        if (g.num_alive() == 0) {
            double v = scalar;
            for (int i = 0; i < g.loops; ++i) v *= p.d;
            return v;
        }
        if (g.has_lollipop()) return 0.0;

        // collect distinct reducible faces
        std::vector<std::vector<int>> faces;
        std::vector<char> seen(g.mate.size(), 0);
        for (std::size_t p0 = 0; p0 < g.mate.size(); ++p0) {
            if (!g.alive[p0 / 3] || seen[p0]) continue;
            auto orbit = g.trace_face(int(p0));
            for (int q : orbit) seen[std::size_t(q)] = 1;
            if (orbit.size() > 4) continue;
            // reducible faces must visit distinct vertices
            std::vector<int> vs;
            for (int q : orbit) vs.push_back(q / 3);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;
            faces.push_back(orbit);
        }
        if (faces.empty())
            throw IrreducibleDiagram(
                "no face of size <= 4; evaluator cannot reduce this diagram");

        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(*rng);
        const auto& face = faces[pick];

        if (face.size() == 2) {
            int u = face[0] / 3, v = face[1] / 3;
            int in_u = g.mate[std::size_t(face[1])];
            int in_v = g.mate[std::size_t(face[0])];
            int rem_u = -1, rem_v = -1;
            for (int s = 0; s < 3; ++s) {
                if (u * 3 + s != face[0] && u * 3 + s != in_u) rem_u = u * 3 + s;
                if (v * 3 + s != face[1] && v * 3 + s != in_v) rem_v = v * 3 + s;
            }
            std::map<int, int> pairing{{rem_u, rem_v}, {rem_v, rem_u}};
            g.splice({u, v}, pairing);
            scalar *= p.b;
        } else if (face.size() == 3) {
            std::array<int, 3> rem{}, vtx{};
            for (int i = 0; i < 3; ++i) {
                int port = face[std::size_t(i)];
                int prev = face[std::size_t((i + 2) % 3)];
                int v = port / 3;
                vtx[std::size_t(i)] = v;
                int in_port = g.mate[std::size_t(prev)];
                for (int s = 0; s < 3; ++s) {
                    int q = v * 3 + s;
                    if (q != port && q != in_port) rem[std::size_t(i)] = q;
                }
            }
            int w = g.add_vertex();
            std::map<int, int> pairing;
            for (int i = 0; i < 3; ++i) {
                pairing[rem[std::size_t(i)]] = w + i;
                pairing[w + i] = rem[std::size_t(i)];
            }
            g.splice({vtx[0], vtx[1], vtx[2]}, pairing);
            scalar *= p.t;
        } else {  // square
            return scalar * reduce_square(g, face, p, rng);
        }
    }
}

}  // namespace

double evaluate_closed_diagram(const TrivalentParams& p, const PlanarDiagram& d) {
    if (p.d == 0.0 || p.b == 0.0)
        throw SingularDenominator("loop and bigon parameters must be non-zero");
    return evaluate(PortGraph::from(d), p, nullptr);
}

double evaluate_closed_diagram_shuffled(const TrivalentParams& p, const PlanarDiagram& d,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return evaluate(PortGraph::from(d), p, &rng);
}

namespace {

// Open four-point diagram: either two boundary arcs or a two-vertex tree.
// pairs[] lists the boundary groupings in both cases.
struct C4Basis {
    bool tree;
    std::array<std::pair<int, int>, 2> pairs;
};

// Glues X against Y along the four boundary points and evaluates the closed
// diagram. Strands passing through arcs are followed until they terminate on
// tree vertices or close into free loops.
double glued_value(const TrivalentParams& p, const C4Basis& X, const C4Basis& Y) {
    const C4Basis* side[2] = {&X, &Y};
    auto arc_partner = [&](int s, int i) {
        for (auto& [a, b] : side[s]->pairs) {
            if (a == i) return b;
            if (b == i) return a;
        }
        throw Error("bad arc pattern");
    };
    // terminal(s, i): tree slot for boundary point i on side s, or -1
    // slot numbering: side s contributes vertices 2s and 2s+1 when it is a tree
    auto terminal = [&](int s, int i) -> std::pair<int, int> {
        if (!side[s]->tree) return {-1, -1};
        for (int g = 0; g < 2; ++g) {
            auto [a, b] = side[s]->pairs[std::size_t(g)];
            if (a == i) return {2 * s + g, 0};
            if (b == i) return {2 * s + g, 1};
        }
        throw Error("bad tree pattern");
    };

    // rot[v][slot] filled with edge ids; vertex v=2s+g exists iff side s is a tree
    std::array<std::array<int, 3>, 4> rot{};
    for (auto& v : rot) v = {-1, -1, -1};
    int next_edge = 0;
    // internal tree edges
    for (int s = 0; s < 2; ++s)
        if (side[s]->tree) {
            int e = next_edge++;
            rot[std::size_t(2 * s)][2] = e;
            rot[std::size_t(2 * s + 1)][2] = e;
        }

    int loops = 0;
    std::array<std::array<bool, 4>, 2> used{};
    for (int s = 0; s < 2; ++s)
        for (int i0 = 0; i0 < 4; ++i0) {
            if (used[std::size_t(s)][std::size_t(i0)]) continue;
            if (!side[s]->tree) continue;
            // start a strand at this tree terminal, cross to the other side
            int e = next_edge++;
            auto [v, slot] = terminal(s, i0);
            rot[std::size_t(v)][std::size_t(slot)] = e;
            used[std::size_t(s)][std::size_t(i0)] = true;
            int cs = 1 - s, ci = i0;
            while (true) {
                if (side[cs]->tree) {
                    auto [w, ws] = terminal(cs, ci);
                    rot[std::size_t(w)][std::size_t(ws)] = e;
                    used[std::size_t(cs)][std::size_t(ci)] = true;
                    break;
                }
                used[std::size_t(cs)][std::size_t(ci)] = true;
                ci = arc_partner(cs, ci);
                used[std::size_t(cs)][std::size_t(ci)] = true;
                cs = 1 - cs;
            }
        }
    // strands that never touch a tree close into free loops
    if (!side[0]->tree && !side[1]->tree) {
        for (int i0 = 0; i0 < 4; ++i0) {
            if (used[0][std::size_t(i0)]) continue;
            int cs = 0, ci = i0;
            while (!used[std::size_t(cs)][std::size_t(ci)]) {
                used[std::size_t(cs)][std::size_t(ci)] = true;
                ci = arc_partner(cs, ci);
                used[std::size_t(cs)][std::size_t(ci)] = true;
                cs = 1 - cs;
            }
            ++loops;
        }
    }

    std::vector<std::array<int, 3>> vertices;
    for (int v = 0; v < 4; ++v)
        if (rot[std::size_t(v)][0] >= 0 || rot[std::size_t(v)][2] >= 0) {
            if (rot[std::size_t(v)][0] < 0 || rot[std::size_t(v)][1] < 0 ||
                rot[std::size_t(v)][2] < 0)
                throw Error("tree vertex incompletely wired");
            vertices.push_back(rot[std::size_t(v)]);
        }
    return evaluate_closed_diagram(p, PlanarDiagram::from_rotations(vertices, loops));
}

}  // namespace

Eigen::Matrix4d c4_gram_matrix(const TrivalentParams& p) {
    // w1 = arcs (0,3)(1,2); w2 = arcs (0,1)(2,3);
    // w3 = tree (0,1 | 2,3);  w4 = tree (1,2 | 3,0)
    const C4Basis w[4] = {
        {false, {{{0, 3}, {1, 2}}}},
        {false, {{{0, 1}, {2, 3}}}},
        {true, {{{0, 1}, {2, 3}}}},
        {true, {{{1, 2}, {3, 0}}}},
    };
    Eigen::Matrix4d G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = glued_value(p, w[std::size_t(i)], w[std::size_t(j)]);
    return G;
}

Eigen::Matrix4d theta_matrix(const TrivalentParams& p) {
    const double d = p.d, b = p.b, t = p.t;
    auto safe_sqrt = [](double x, const char* what) {
        if (x <= 0.0) throw SingularDenominator(std::string("radicand not positive in ") + what);
        return std::sqrt(x);
    };
    if (d == 0.0) throw SingularDenominator("d must be non-zero");
    double sgnb = b >= 0 ? 1.0 : -1.0;
    double d21 = d * d - 1.0;
    double dd1 = d * d - d - 1.0;
    if (d21 <= 0.0 || dd1 <= 0.0)
        throw SingularDenominator("d^2-1 and d^2-d-1 must be positive");

    Eigen::Matrix4d th = Eigen::Matrix4d::Zero();
    th(0, 0) = 1.0 / std::abs(d);
    th(1, 0) = -1.0 / (d * safe_sqrt(d21, "row 2"));
    th(1, 1) = 1.0 / safe_sqrt(d21, "row 2");
    th(2, 0) = -sgnb * safe_sqrt(d / (d21 * dd1), "row 3");
    th(2, 1) = sgnb * safe_sqrt(1.0 / (d * d21 * dd1), "row 3");
    th(2, 2) = safe_sqrt(d21 / (b * b * d * dd1), "row 3");
    double ctheta_den = d * (b * b * d * (d - 2.0) - 2.0 * b * t - d21 * t * t);
    double ctheta = safe_sqrt(dd1 / ctheta_den, "C_theta");
    th(3, 0) = (b + d * t) / dd1 * ctheta;
    th(3, 1) = (b - b * d - t) / dd1 * ctheta;
    th(3, 2) = (-d * d * t + t - b) / (b * dd1) * ctheta;
    th(3, 3) = ctheta;
    return th;
}

PlanarDiagram diagram_single_loop() {
    return PlanarDiagram::from_rotations({}, 1);
}

PlanarDiagram diagram_theta() {
    return PlanarDiagram::from_rotations({{0, 1, 2}, {2, 1, 0}});
}

PlanarDiagram diagram_tetrahedron() {
    // K4 with a planar rotation system
    return PlanarDiagram::from_rotations({
        {0, 1, 2},
        {0, 4, 3},
        {1, 3, 5},
        {2, 5, 4},
    });
}

PlanarDiagram diagram_cube() {
    // inner square vertices i_k, outer square o_k; inner cycle edges 0..3,
    // outer cycle 4..7, radial 8..11; rotations read counterclockwise
    return PlanarDiagram::from_rotations({
        {8, 0, 3},
        {9, 1, 0},
        {10, 2, 1},
        {11, 3, 2},
        {4, 8, 7},
        {5, 9, 4},
        {6, 10, 5},
        {7, 11, 6},
    });
}

}  // namespace fcat
