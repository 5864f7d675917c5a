#include "maxplus/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "maxplus/errors.hpp"

namespace maxplus {

int Digraph::arc_count() const {
    int m = 0;
    for (const auto& row : out_) m += static_cast<int>(row.size());
    return m;
}

bool Digraph::has_arc(int from, int to) const {
    for (const Arc& a : out(from))
        if (a.to == to) return true;
    return false;
}

Digraph graph_of(const Matrix& a) {
    if (!a.is_square())
        throw precondition_error("graph_of: matrix must be square");
    Digraph g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_bottom()) g.add_arc(i, j, a(i, j).rat());
    return g;
}

int SccDecomposition::nontrivial_count() const {
    int c = 0;
    for (bool t : trivial)
        if (!t) ++c;
    return c;
}

// Iterative Tarjan.
SccDecomposition scc(const Digraph& g) {
    const int n = g.node_count();
    SccDecomposition d;
    d.component_of.assign(n, -1);

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t next_arc;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& f = call.back();
            int v = f.v;
            if (f.next_arc == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (f.next_arc < g.out(v).size()) {
                int w = g.out(v)[f.next_arc++].to;
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    d.component_of[w] = static_cast<int>(d.components.size());
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                d.components.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) {
                Frame& parent = call.back();
                low[parent.v] = std::min(low[parent.v], low[v]);
            }
        }
    }

    d.trivial.resize(d.components.size());
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const auto& comp = d.components[c];
        d.trivial[c] = comp.size() == 1 && !g.has_arc(comp[0], comp[0]);
    }
    return d;
}

int cyclicity_scc(const Digraph& g, const SccDecomposition& d, int component) {
    const auto& comp = d.components[static_cast<std::size_t>(component)];
    if (d.trivial[static_cast<std::size_t>(component)])
        throw precondition_error("cyclicity: trivial component has no circuit");

    const int root = comp[0];
    std::vector<int> level(static_cast<std::size_t>(g.node_count()), -1);
    std::deque<int> queue{root};
    level[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const Arc& a : g.out(v)) {
            if (d.component_of[static_cast<std::size_t>(a.to)] != component) continue;
            if (level[static_cast<std::size_t>(a.to)] == -1) {
                level[static_cast<std::size_t>(a.to)] = level[static_cast<std::size_t>(v)] + 1;
                queue.push_back(a.to);
            }
        }
    }

    long g_acc = 0;
    for (int v : comp)
        for (const Arc& a : g.out(v)) {
            if (d.component_of[static_cast<std::size_t>(a.to)] != component) continue;
            long diff = level[static_cast<std::size_t>(v)] + 1 - level[static_cast<std::size_t>(a.to)];
            g_acc = std::gcd(g_acc, diff);
        }
    return static_cast<int>(g_acc);
}

long cyclicity_graph(const Digraph& g) {
    SccDecomposition d = scc(g);
    for (int v = 0; v < g.node_count(); ++v)
        for (const Arc& a : g.out(v))
            if (d.component_of[static_cast<std::size_t>(v)] !=
                d.component_of[static_cast<std::size_t>(a.to)])
                throw precondition_error("cyclicity: graph is not completely reducible");
    long l = 1;
    for (int c = 0; c < d.count(); ++c)
        if (!d.trivial[static_cast<std::size_t>(c)])
            l = std::lcm(l, static_cast<long>(cyclicity_scc(g, d, c)));
    return l;
}

} // namespace maxplus
