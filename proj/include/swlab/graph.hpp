#ifndef SWLAB_GRAPH_HPP
#define SWLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swlab/types.hpp"

namespace swlab {

struct Edge {
    int u;
    int v;
};

enum class Parity : uint8_t { Even = 0, Odd = 1 };

// Finite lattice cube {0..side}^dim or a small arbitrary graph. Immutable
// after construction; safe to share across threads.
class Graph {
public:
    // V = {0,..,side}^dim, edges between vertices at L1 distance 1.
    // Vertex ids follow lexicographic coordinate order (first coordinate
    // most significant), so id order doubles as the coordinate tie-break.
    static Graph cube(int dim, int side);

    // No geometry. Self-loops and duplicate edges are rejected. Operations
    // that need coordinates (representatives by coordinate sum, shattering,
    // duality) fall back to vertex-id order or refuse.
    static Graph arbitrary(int n, std::vector<Edge> edges,
                           std::optional<std::vector<Parity>> bipartition = std::nullopt);

    // Like arbitrary() but permits parallel edges; planar duals need them.
    static Graph multigraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    bool has_coords() const { return !coords_.empty(); }
    int dim() const { return dim_; }
    int side() const { return side_; }
    const std::vector<int>& coord(int v) const { return coords_[static_cast<size_t>(v)]; }
    int vertex_at(const std::vector<int>& c) const;

    bool has_parity() const { return !parity_.empty(); }
    Parity parity(int v) const { return parity_[static_cast<size_t>(v)]; }

    // Internal boundary: vertices adjacent to Z^d \ V. Empty for arbitrary
    // graphs, where any vertex may be pinned instead.
    const std::vector<int>& boundary_vertices() const { return boundary_vertices_; }
    const std::vector<int>& boundary_edges() const { return boundary_edges_; }
    // E1: edges with exactly one endpoint in the boundary.
    const std::vector<int>& sticking_edges() const { return sticking_edges_; }
    bool is_boundary_vertex(int v) const {
        return !boundary_flag_.empty() && boundary_flag_[static_cast<size_t>(v)] != 0;
    }

    const std::vector<int>& incident_edges(int v) const {
        return incident_[static_cast<size_t>(v)];
    }
    int other_endpoint(int e, int v) const {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        return ed.u == v ? ed.v : ed.u;
    }

    // Order used to pick component representatives: coordinate sum then
    // vertex id (= lexicographic coordinates) on lattices, vertex id otherwise.
    uint64_t representative_key(int v) const;

    // L1 distance to Z^d \ V; lattice only.
    int depth_from_outside(int v) const;

    std::string describe() const;

private:
    Graph() = default;

    int n_ = 0;
    int dim_ = 0;
    int side_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> coords_;
    std::vector<Parity> parity_;
    std::vector<int> boundary_vertices_;
    std::vector<int> boundary_edges_;
    std::vector<int> sticking_edges_;
    std::vector<uint8_t> boundary_flag_;
    std::vector<std::vector<int>> incident_;

    void finish_init();
};

struct ComponentLabeling {
    std::vector<int> component_of; // per vertex, in [0, count)
    int count = 0;
    std::vector<int> representative; // per component, minimal under representative_key
};

// Connectivity of (V, A) merged with optional wiring blocks (each block's
// vertices are treated as connected). Union-find rebuilt per call.
ComponentLabeling connected_components(const Graph& g, const EdgeConfig& a,
                                       const std::vector<std::vector<int>>& wiring = {});

// Planar dual of a 2-D square. Dual edge i corresponds to base edge i.
//   identified: inner faces plus one vertex for the whole outer face
//               (counting components on it realizes the wired dual measure);
//   expanded:   inner faces plus one vertex per perimeter-adjacent outer
//               face (realizes the free dual measure; always-isolated corner
//               faces are omitted, a constant factor that cancels).
struct DualGraph {
    Graph identified;
    Graph expanded;
    int outer_vertex; // id of the merged outer-face vertex in `identified`
};

DualGraph planar_dual(const Graph& g);

// A_d: e_d present iff e absent.
EdgeConfig dual_config(const EdgeConfig& a);

} // namespace swlab

#endif
