#include "rigged/stembridge.hpp"

#include <algorithm>
#include <deque>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

namespace rigged {

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.evaluated || !c.passed) return false;
    return !checks.empty();
}

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << c.axiom << ": " << (!c.evaluated ? "skipped" : c.passed ? "pass" : "FAIL") << '\n';
        for (const auto& w : c.witnesses) os << "  " << w.detail << '\n';
    }
    return os.str();
}

namespace {

constexpr int kNone = -1;

struct Adjacency {
    // succ[v][c-1] / pred[v][c-1]; kNone when absent. Only meaningful once P2
    // holds; build() reports multiplicity violations instead of filling in.
    std::vector<std::vector<int>> succ, pred;
};

// Functional successor/predecessor maps; P2 violations collected as witnesses.
Adjacency build_adjacency(const CrystalGraph& g, std::vector<AxiomWitness>& p2) {
    Adjacency adj;
    adj.succ.assign(static_cast<size_t>(g.size()), std::vector<int>(static_cast<size_t>(g.rank), kNone));
    adj.pred = adj.succ;
    for (const auto& e : g.edges) {
        auto& s = adj.succ[static_cast<size_t>(e.src)][static_cast<size_t>(e.color - 1)];
        if (s != kNone)
            p2.push_back({"P2", "two " + std::to_string(e.color) + "-edges out of vertex '" +
                                    g.keys[static_cast<size_t>(e.src)] + "'"});
        s = e.dst;
        auto& p = adj.pred[static_cast<size_t>(e.dst)][static_cast<size_t>(e.color - 1)];
        if (p != kNone)
            p2.push_back({"P2", "two " + std::to_string(e.color) + "-edges into vertex '" +
                                    g.keys[static_cast<size_t>(e.dst)] + "'"});
        p = e.src;
    }
    return adj;
}

// Length of the monochromatic chain from v along `next`; the caller has
// already established acyclicity.
std::int64_t chain_length(const std::vector<std::vector<int>>& next, int v, int color) {
    std::int64_t len = 0;
    int cur = v;
    while ((cur = next[static_cast<size_t>(cur)][static_cast<size_t>(color - 1)]) != kNone) ++len;
    return len;
}

} // namespace

AxiomReport verify_regular(const CrystalGraph& g, const AlgebraData& alg) {
    AxiomReport report;
    auto& checks = report.checks;
    auto check_index = [&](const std::string& name) {
        checks.push_back({name, false, false, {}});
        return checks.size() - 1;
    };
    size_t structure = check_index("structure");
    size_t p1 = check_index("P1");
    size_t p2 = check_index("P2");
    size_t p3 = check_index("P3");
    size_t p4 = check_index("P4");
    size_t p5 = check_index("P5");
    size_t p6 = check_index("P6");
    size_t p5d = check_index("P5'");
    size_t p6d = check_index("P6'");

    // Structural sanity: colors within 1..rank, endpoints within range.
    checks[structure].evaluated = true;
    checks[structure].passed = true;
    if (g.rank != alg.rank()) {
        checks[structure].passed = false;
        checks[structure].witnesses.push_back(
            {"structure", "graph rank " + std::to_string(g.rank) + " does not match algebra rank " +
                              std::to_string(alg.rank())});
    }
    for (const auto& e : g.edges) {
        if (e.color < 1 || e.color > g.rank || e.src < 0 || e.src >= g.size() || e.dst < 0 ||
            e.dst >= g.size()) {
            checks[structure].passed = false;
            checks[structure].witnesses.push_back(
                {"structure", "edge (" + std::to_string(e.src) + "," + std::to_string(e.color) +
                                  "," + std::to_string(e.dst) + ") out of range"});
        }
    }
    if (!checks[structure].passed) return report;

    checks[p2].evaluated = true;
    Adjacency adj = build_adjacency(g, checks[p2].witnesses);
    checks[p2].passed = checks[p2].witnesses.empty();

    // P1: per color, the successor map must be acyclic.
    checks[p1].evaluated = true;
    checks[p1].passed = true;
    for (int c = 1; c <= g.rank && checks[p1].passed; ++c) {
        std::vector<int> state(static_cast<size_t>(g.size()), 0); // 0 new, 1 open, 2 done
        for (int v = 0; v < g.size(); ++v) {
            int cur = v;
            std::vector<int> trail;
            while (cur != kNone && state[static_cast<size_t>(cur)] == 0) {
                state[static_cast<size_t>(cur)] = 1;
                trail.push_back(cur);
                cur = adj.succ[static_cast<size_t>(cur)][static_cast<size_t>(c - 1)];
            }
            if (cur != kNone && state[static_cast<size_t>(cur)] == 1) {
                checks[p1].passed = false;
                checks[p1].witnesses.push_back(
                    {"P1", "monochromatic " + std::to_string(c) + "-circuit through vertex '" +
                               g.keys[static_cast<size_t>(cur)] + "'"});
                break;
            }
            for (int t : trail) state[static_cast<size_t>(t)] = 2;
        }
    }

    if (!checks[p1].passed || !checks[p2].passed) return report; // phi/eps ill-defined

    // String lengths phi/eps read off the graph.
    std::vector<std::vector<std::int64_t>> phi(static_cast<size_t>(g.size()),
                                               std::vector<std::int64_t>(static_cast<size_t>(g.rank)));
    auto epsv = phi;
    for (int v = 0; v < g.size(); ++v)
        for (int c = 1; c <= g.rank; ++c) {
            phi[static_cast<size_t>(v)][static_cast<size_t>(c - 1)] = chain_length(adj.succ, v, c);
            epsv[static_cast<size_t>(v)][static_cast<size_t>(c - 1)] = chain_length(adj.pred, v, c);
        }
    auto delta = [&](int v, int j) { return -epsv[static_cast<size_t>(v)][static_cast<size_t>(j - 1)]; };
    auto fi = [&](int v, int j) { return phi[static_cast<size_t>(v)][static_cast<size_t>(j - 1)]; };
    auto e_of = [&](int v, int i) { return adj.pred[static_cast<size_t>(v)][static_cast<size_t>(i - 1)]; };
    auto f_of = [&](int v, int i) { return adj.succ[static_cast<size_t>(v)][static_cast<size_t>(i - 1)]; };
    auto vertex = [&](int v) { return "'" + g.keys[static_cast<size_t>(v)] + "'"; };
    auto pair_str = [&](int i, int j) {
        return " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
    };

    for (size_t idx : {p3, p4, p5, p6, p5d, p6d}) {
        checks[idx].evaluated = true;
        checks[idx].passed = true;
    }
    auto fail = [&](size_t idx, const std::string& axiom, const std::string& detail) {
        checks[idx].passed = false;
        checks[idx].witnesses.push_back({axiom, detail});
    };

    for (int v = 0; v < g.size(); ++v) {
        for (int i = 1; i <= g.rank; ++i) {
            for (int j = 1; j <= g.rank; ++j) {
                if (i == j) continue;
                std::int64_t aij = alg.cartan(i, j);

                int ei = e_of(v, i);
                if (ei != kNone) {
                    std::int64_t dd = delta(ei, j) - delta(v, j);
                    std::int64_t df = fi(ei, j) - fi(v, j);
                    if (dd + df != aij)
                        fail(p3, "P3",
                             "delta_i delta_j + delta_i phi_j = " + std::to_string(dd + df) +
                                 " != A_ij = " + std::to_string(aij) + " at " + vertex(v) +
                                 pair_str(i, j));
                    if (dd > 0 || df > 0)
                        fail(p4, "P4",
                             "positive difference (delta_i delta_j = " + std::to_string(dd) +
                                 ", delta_i phi_j = " + std::to_string(df) + ") at " + vertex(v) +
                                 pair_str(i, j));
                }

                int ej = e_of(v, j);
                if (ei != kNone && ej != kNone) {
                    std::int64_t dd_ij = delta(ei, j) - delta(v, j);
                    std::int64_t dd_ji = delta(ej, i) - delta(v, i);
                    if (dd_ij == 0) {
                        // P5: e_i e_j x = e_j e_i x =: y and nabla_j phi_i(y) = 0.
                        int eiej = e_of(ej, i);
                        int ejei = e_of(ei, j);
                        if (eiej == kNone || ejei == kNone || eiej != ejei) {
                            fail(p5, "P5",
                                 "e_i e_j and e_j e_i do not close at " + vertex(v) + pair_str(i, j));
                        } else {
                            int y = eiej;
                            int fjy = f_of(y, j);
                            std::int64_t nabla = fi(y, i) - fi(fjy, i); // f_j y = e_i x, defined
                            if (nabla != 0)
                                fail(p5, "P5",
                                     "nabla_j phi_i = " + std::to_string(nabla) +
                                         " != 0 above " + vertex(v) + pair_str(i, j));
                        }
                    }
                    if (dd_ij == -1 && dd_ji == -1) {
                        // P6: e_i e_j^2 e_i x = e_j e_i^2 e_j x =: y with
                        // nabla_i phi_j(y) = nabla_j phi_i(y) = -1.
                        auto climb = [&](int start, std::initializer_list<int> colors) {
                            int cur = start;
                            for (int c : colors) {
                                if (cur == kNone) return kNone;
                                cur = e_of(cur, c);
                            }
                            return cur;
                        };
                        int y1 = climb(v, {i, j, j, i});
                        int y2 = climb(v, {j, i, i, j});
                        if (y1 == kNone || y2 == kNone || y1 != y2) {
                            fail(p6, "P6",
                                 "e_i e_j^2 e_i and e_j e_i^2 e_j do not close at " + vertex(v) +
                                     pair_str(i, j));
                        } else {
                            int y = y1;
                            std::int64_t ni = fi(y, j) - fi(f_of(y, i), j);
                            std::int64_t nj = fi(y, i) - fi(f_of(y, j), i);
                            if (ni != -1 || nj != -1)
                                fail(p6, "P6",
                                     "nabla phi = (" + std::to_string(ni) + "," +
                                         std::to_string(nj) + ") != (-1,-1) above " + vertex(v) +
                                         pair_str(i, j));
                        }
                    }
                }

                int fiv = f_of(v, i);
                int fjv = f_of(v, j);
                if (fiv != kNone && fjv != kNone) {
                    std::int64_t nf_ij = fi(v, j) - fi(fiv, j);
                    std::int64_t nf_ji = fi(v, i) - fi(fjv, i);
                    if (nf_ij == 0) {
                        // P5': f_i f_j x = f_j f_i x =: y and delta_j delta_i(y) = 0.
                        int y1 = f_of(fjv, i);
                        int y2 = f_of(fiv, j);
                        if (y1 == kNone || y2 == kNone || y1 != y2) {
                            fail(p5d, "P5'",
                                 "f_i f_j and f_j f_i do not close at " + vertex(v) + pair_str(i, j));
                        } else {
                            int y = y1;
                            std::int64_t dd = delta(e_of(y, j), i) - delta(y, i);
                            if (dd != 0)
                                fail(p5d, "P5'",
                                     "delta_j delta_i = " + std::to_string(dd) + " != 0 below " +
                                         vertex(v) + pair_str(i, j));
                        }
                    }
                    if (nf_ij == -1 && nf_ji == -1) {
                        auto descend = [&](int start, std::initializer_list<int> colors) {
                            int cur = start;
                            for (int c : colors) {
                                if (cur == kNone) return kNone;
                                cur = f_of(cur, c);
                            }
                            return cur;
                        };
                        int y1 = descend(v, {i, j, j, i});
                        int y2 = descend(v, {j, i, i, j});
                        if (y1 == kNone || y2 == kNone || y1 != y2) {
                            fail(p6d, "P6'",
                                 "f_i f_j^2 f_i and f_j f_i^2 f_j do not close at " + vertex(v) +
                                     pair_str(i, j));
                        } else {
                            int y = y1;
                            std::int64_t di = delta(e_of(y, i), j) - delta(y, j);
                            std::int64_t dj = delta(e_of(y, j), i) - delta(y, i);
                            if (di != -1 || dj != -1)
                                fail(p6d, "P6'",
                                     "delta delta = (" + std::to_string(di) + "," +
                                         std::to_string(dj) + ") != (-1,-1) below " + vertex(v) +
                                         pair_str(i, j));
                        }
                    }
                }
            }
        }
    }
    return report;
}

bool isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
    auto prepare = [](const CrystalGraph& g, const char* which) {
        std::vector<AxiomWitness> p2;
        Adjacency adj = build_adjacency(g, p2);
        if (!p2.empty())
            throw std::invalid_argument(std::string(which) +
                                        " graph is not deterministic (duplicate colored edge)");
        // Connectivity of the underlying undirected graph.
        if (g.size() == 0) throw std::invalid_argument(std::string(which) + " graph is empty");
        std::vector<bool> seen(static_cast<size_t>(g.size()), false);
        std::deque<int> q{0};
        seen[0] = true;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int c = 0; c < g.rank; ++c) {
                for (int w : {adj.succ[static_cast<size_t>(v)][static_cast<size_t>(c)],
                              adj.pred[static_cast<size_t>(v)][static_cast<size_t>(c)]}) {
                    if (w != kNone && !seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = true;
                        ++count;
                        q.push_back(w);
                    }
                }
            }
        }
        if (count != g.size())
            throw std::invalid_argument(std::string(which) + " graph is not connected");
        std::vector<int> sources = g.sources();
        if (sources.size() != 1)
            throw std::invalid_argument(std::string(which) + " graph does not have a unique source");
        return std::make_pair(adj, sources.front());
    };

    auto [adj1, src1] = prepare(g1, "first");
    auto [adj2, src2] = prepare(g2, "second");
    if (g1.rank != g2.rank || g1.size() != g2.size()) return false;

    // Parallel traversal over lowering edges; determinism makes the candidate
    // bijection unique, so any mismatch refutes isomorphism.
    std::vector<int> map1(static_cast<size_t>(g1.size()), kNone);
    std::vector<int> map2(static_cast<size_t>(g2.size()), kNone);
    std::deque<std::pair<int, int>> q{{src1, src2}};
    map1[static_cast<size_t>(src1)] = src2;
    map2[static_cast<size_t>(src2)] = src1;
    int visited = 1;
    while (!q.empty()) {
        auto [u, v] = q.front();
        q.pop_front();
        for (int c = 0; c < g1.rank; ++c) {
            int su = adj1.succ[static_cast<size_t>(u)][static_cast<size_t>(c)];
            int sv = adj2.succ[static_cast<size_t>(v)][static_cast<size_t>(c)];
            if ((su == kNone) != (sv == kNone)) return false;
            if (su == kNone) continue;
            int mu = map1[static_cast<size_t>(su)];
            int mv = map2[static_cast<size_t>(sv)];
            if (mu == kNone && mv == kNone) {
                map1[static_cast<size_t>(su)] = sv;
                map2[static_cast<size_t>(sv)] = su;
                ++visited;
                q.emplace_back(su, sv);
            } else if (mu != sv || mv != su) {
                return false;
            }
        }
    }
    if (visited != g1.size())
        throw std::invalid_argument(
            "graphs are not generated by their sources under lowering edges");
    return true;
}

} // namespace rigged
