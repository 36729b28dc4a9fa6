#include "swlab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace swlab {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        int root = x;
        while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
        while (parent_[static_cast<size_t>(x)] != root) {
            int next = parent_[static_cast<size_t>(x)];
            parent_[static_cast<size_t>(x)] = root;
            x = next;
        }
        return root;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a;
        size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

} // namespace

void Graph::finish_init() {
    incident_.assign(static_cast<size_t>(n_), {});
    for (int e = 0; e < edge_count(); ++e) {
        incident_[static_cast<size_t>(edges_[static_cast<size_t>(e)].u)].push_back(e);
        incident_[static_cast<size_t>(edges_[static_cast<size_t>(e)].v)].push_back(e);
    }
}

Graph Graph::cube(int dim, int side) {
    if (dim < 1) throw ValidationError("cube: dimension must be positive");
    if (side < 1) throw ValidationError("cube: side must be positive");

    Graph g;
    g.dim_ = dim;
    g.side_ = side;

    const int per_axis = side + 1;
    long long total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= per_axis;
        if (total > (1LL << 26)) throw ValidationError("cube: vertex count too large");
    }
    g.n_ = static_cast<int>(total);

    // ids in lexicographic coordinate order, first coordinate most significant
    g.coords_.resize(static_cast<size_t>(g.n_), std::vector<int>(static_cast<size_t>(dim), 0));
    for (int v = 0; v < g.n_; ++v) {
        int rem = v;
        for (int i = dim - 1; i >= 0; --i) {
            g.coords_[static_cast<size_t>(v)][static_cast<size_t>(i)] = rem % per_axis;
            rem /= per_axis;
        }
    }

    g.parity_.resize(static_cast<size_t>(g.n_));
    g.boundary_flag_.assign(static_cast<size_t>(g.n_), 0);
    for (int v = 0; v < g.n_; ++v) {
        const auto& c = g.coords_[static_cast<size_t>(v)];
        int sum = std::accumulate(c.begin(), c.end(), 0);
        g.parity_[static_cast<size_t>(v)] = (sum % 2 == 0) ? Parity::Even : Parity::Odd;
        bool boundary = false;
        for (int x : c)
            if (x == 0 || x == side) boundary = true;
        if (boundary) {
            g.boundary_flag_[static_cast<size_t>(v)] = 1;
            g.boundary_vertices_.push_back(v);
        }
    }

    // +1 step along each axis; edge ids in vertex-major order
    std::vector<long long> stride(static_cast<size_t>(dim), 1);
    for (int i = dim - 2; i >= 0; --i)
        stride[static_cast<size_t>(i)] = stride[static_cast<size_t>(i + 1)] * per_axis;
    for (int v = 0; v < g.n_; ++v) {
        for (int i = 0; i < dim; ++i) {
            if (g.coords_[static_cast<size_t>(v)][static_cast<size_t>(i)] < side) {
                int w = v + static_cast<int>(stride[static_cast<size_t>(i)]);
                g.edges_.push_back({v, w});
            }
        }
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        bool bu = g.boundary_flag_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].u)] != 0;
        bool bv = g.boundary_flag_[static_cast<size_t>(g.edges_[static_cast<size_t>(e)].v)] != 0;
        if (bu || bv) g.boundary_edges_.push_back(e);
        if (bu != bv) g.sticking_edges_.push_back(e);
    }

    g.finish_init();
    return g;
}

Graph Graph::arbitrary(int n, std::vector<Edge> edges,
                       std::optional<std::vector<Parity>> bipartition) {
    if (n < 1) throw ValidationError("arbitrary: need at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("arbitrary: edge endpoint out of range");
        if (e.u == e.v) throw ValidationError("arbitrary: self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            throw ValidationError("arbitrary: duplicate edge");
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    if (bipartition) {
        if (static_cast<int>(bipartition->size()) != n)
            throw ValidationError("arbitrary: bipartition size mismatch");
        for (const auto& e : g.edges_)
            if ((*bipartition)[static_cast<size_t>(e.u)] == (*bipartition)[static_cast<size_t>(e.v)])
                throw ValidationError("arbitrary: bipartition labels not proper");
        g.parity_ = std::move(*bipartition);
    }
    g.finish_init();
    return g;
}

Graph Graph::multigraph(int n, std::vector<Edge> edges) {
    if (n < 1) throw ValidationError("multigraph: need at least one vertex");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw ValidationError("multigraph: edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.finish_init();
    return g;
}

int Graph::vertex_at(const std::vector<int>& c) const {
    if (!has_coords()) throw ValidationError("vertex_at: graph has no coordinates");
    if (static_cast<int>(c.size()) != dim_) throw ValidationError("vertex_at: wrong arity");
    int v = 0;
    for (int i = 0; i < dim_; ++i) {
        if (c[static_cast<size_t>(i)] < 0 || c[static_cast<size_t>(i)] > side_)
            throw ValidationError("vertex_at: coordinate out of range");
        v = v * (side_ + 1) + c[static_cast<size_t>(i)];
    }
    return v;
}

uint64_t Graph::representative_key(int v) const {
    if (!has_coords()) return static_cast<uint64_t>(v);
    const auto& c = coords_[static_cast<size_t>(v)];
    uint64_t sum = static_cast<uint64_t>(std::accumulate(c.begin(), c.end(), 0));
    return (sum << 32) | static_cast<uint64_t>(v);
}

int Graph::depth_from_outside(int v) const {
    if (!has_coords()) throw ValidationError("depth_from_outside: graph has no coordinates");
    int d = side_ + 1;
    for (int x : coords_[static_cast<size_t>(v)]) d = std::min(d, std::min(x, side_ - x));
    return d + 1;
}

std::string Graph::describe() const {
    std::ostringstream os;
    if (has_coords())
        os << "cube d=" << dim_ << " side=" << side_;
    else
        os << "graph n=" << n_;
    os << " |V|=" << n_ << " |E|=" << edge_count();
    return os.str();
}

ComponentLabeling connected_components(const Graph& g, const EdgeConfig& a,
                                       const std::vector<std::vector<int>>& wiring) {
    if (static_cast<int>(a.size()) != g.edge_count())
        throw ValidationError("connected_components: edge config size mismatch");
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (int e = 0; e < g.edge_count(); ++e)
        if (a[static_cast<size_t>(e)]) uf.merge(g.edge(e).u, g.edge(e).v);
    for (const auto& block : wiring) {
        for (int v : block)
            if (v < 0 || v >= n) throw ValidationError("connected_components: wiring vertex out of range");
        for (size_t i = 1; i < block.size(); ++i) uf.merge(block[0], block[i]);
    }

    ComponentLabeling lab;
    lab.component_of.assign(static_cast<size_t>(n), -1);
    std::vector<int> root_to_comp(static_cast<size_t>(n), -1);
    std::vector<int> rep_of_root(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (rep_of_root[static_cast<size_t>(r)] < 0 ||
            g.representative_key(v) < g.representative_key(rep_of_root[static_cast<size_t>(r)]))
            rep_of_root[static_cast<size_t>(r)] = v;
    }
    // components numbered by ascending representative key
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (uf.find(v) == v) roots.push_back(v);
    std::sort(roots.begin(), roots.end(), [&](int r1, int r2) {
        return g.representative_key(rep_of_root[static_cast<size_t>(r1)]) <
               g.representative_key(rep_of_root[static_cast<size_t>(r2)]);
    });
    lab.count = static_cast<int>(roots.size());
    lab.representative.resize(static_cast<size_t>(lab.count));
    for (int c = 0; c < lab.count; ++c) {
        root_to_comp[static_cast<size_t>(roots[static_cast<size_t>(c)])] = c;
        lab.representative[static_cast<size_t>(c)] = rep_of_root[static_cast<size_t>(roots[static_cast<size_t>(c)])];
    }
    for (int v = 0; v < n; ++v)
        lab.component_of[static_cast<size_t>(v)] = root_to_comp[static_cast<size_t>(uf.find(v))];
    return lab;
}

DualGraph planar_dual(const Graph& g) {
    if (!g.has_coords() || g.dim() != 2)
        throw ValidationError("planar_dual: requires a 2-D lattice square");
    const int L = g.side();
    const int n_inner = L * L;

    // face (x,y) = unit square with lower-left lattice corner (x,y)
    auto face_id = [&](int x, int y) -> int {
        if (x < 0 || x >= L || y < 0 || y >= L) return -1; // outer face
        return x * L + y;
    };

    std::vector<Edge> ident_edges;
    std::vector<Edge> expand_edges;
    const int outer = n_inner;
    int next_outer = n_inner; // expanded graph: one vertex per perimeter edge
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& cu = g.coord(g.edge(e).u);
        const auto& cv = g.coord(g.edge(e).v);
        int x = cu[0], y = cu[1];
        int f1, f2;
        if (cv[0] == x + 1) { // edge along axis 0: faces above and below
            f1 = face_id(x, y);
            f2 = face_id(x, y - 1);
        } else { // edge along axis 1: faces right and left
            f1 = face_id(x, y);
            f2 = face_id(x - 1, y);
        }
        int i1 = f1 < 0 ? outer : f1;
        int i2 = f2 < 0 ? outer : f2;
        ident_edges.push_back({i1, i2});
        int e1 = f1 < 0 ? next_outer++ : f1;
        int e2 = f2 < 0 ? next_outer++ : f2;
        expand_edges.push_back({e1, e2});
    }

    DualGraph d{Graph::multigraph(n_inner + 1, std::move(ident_edges)),
                Graph::multigraph(next_outer, std::move(expand_edges)), outer};
    return d;
}

EdgeConfig dual_config(const EdgeConfig& a) {
    EdgeConfig out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ? 0 : 1;
    return out;
}

} // namespace swlab
