#include "swlab/measures.hpp"

#include <cmath>
#include <limits>

namespace swlab {

ModelParams ModelParams::from_beta(int q, double beta) {
    if (q < 2) throw ValidationError("params: q must be >= 2");
    if (!(beta >= 0.0)) throw ValidationError("params: beta must be >= 0");
    ModelParams pr;
    pr.q = q;
    pr.beta = beta;
    pr.p = -std::expm1(-beta);
    return pr;
}

ModelParams ModelParams::from_p(int q, double p) {
    if (q < 2) throw ValidationError("params: q must be >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("params: p must be in [0,1]");
    ModelParams pr;
    pr.q = q;
    pr.p = p;
    pr.beta = p < 1.0 ? -std::log1p(-p) : std::numeric_limits<double>::infinity();
    return pr;
}

double beta_critical(int q) {
    if (q < 2) throw ValidationError("beta_critical: q must be >= 2");
    return std::log(1.0 + std::sqrt(static_cast<double>(q)));
}

double p_critical(int q) {
    double s = std::sqrt(static_cast<double>(q));
    return s / (1.0 + s);
}

double dual_parameter(double p, int q) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("dual_parameter: p must be in [0,1]");
    if (q < 1) throw ValidationError("dual_parameter: q must be >= 1");
    double qd = static_cast<double>(q);
    return qd * (1.0 - p) / (qd * (1.0 - p) + p);
}

const char* bc_kind_name(BcKind k) {
    switch (k) {
        case BcKind::Free: return "free";
        case BcKind::SpinOnly: return "spin_only";
        case BcKind::Admissible: return "admissible";
        case BcKind::RCWired: return "rc_wired";
        case BcKind::RCFree: return "rc_free";
    }
    return "?";
}

namespace {

bool pinnable_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) return false;
    // lattice: only the internal boundary may be pinned; arbitrary: anywhere
    if (g.has_coords()) return g.is_boundary_vertex(v);
    return true;
}

bool pinnable_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (g.has_coords())
        return g.is_boundary_vertex(g.edge(e).u) || g.is_boundary_vertex(g.edge(e).v);
    return true;
}

} // namespace

BoundaryCondition BoundaryCondition::free_bc() {
    BoundaryCondition bc;
    bc.kind_ = BcKind::Free;
    return bc;
}

BoundaryCondition BoundaryCondition::rc_free() {
    BoundaryCondition bc;
    bc.kind_ = BcKind::RCFree;
    return bc;
}

BoundaryCondition BoundaryCondition::rc_wired(const Graph& g) {
    (void)g;
    BoundaryCondition bc;
    bc.kind_ = BcKind::RCWired;
    return bc;
}

BoundaryCondition BoundaryCondition::admissible_impl(
    const Graph& g, int q, const std::vector<std::pair<int, int>>& spin_pins,
    const std::vector<std::pair<int, bool>>& edge_pins, BcKind kind) {
    BoundaryCondition bc;
    bc.kind_ = kind;
    bc.spin_pin_.assign(static_cast<size_t>(g.vertex_count()), -1);
    bc.edge_pin_.assign(static_cast<size_t>(g.edge_count()), -1);
    for (auto [v, color] : spin_pins) {
        if (!pinnable_vertex(g, v))
            throw ValidationError("bc: pinned vertex not in the boundary");
        if (color < 0 || color >= q) throw ValidationError("bc: pinned color out of range");
        if (bc.spin_pin_[static_cast<size_t>(v)] != -1 &&
            bc.spin_pin_[static_cast<size_t>(v)] != color)
            throw ValidationError("bc: vertex pinned twice with different colors");
        if (bc.spin_pin_[static_cast<size_t>(v)] == -1) bc.pinned_vertices_.push_back(v);
        bc.spin_pin_[static_cast<size_t>(v)] = color;
    }
    for (auto [e, present] : edge_pins) {
        if (!pinnable_edge(g, e))
            throw ValidationError("bc: pinned edge not in the boundary edge set");
        if (bc.edge_pin_[static_cast<size_t>(e)] != -1)
            throw ValidationError("bc: edge pinned twice");
        bc.edge_pin_[static_cast<size_t>(e)] = present ? 1 : 0;
        // admissibility: a pinned edge needs a pinned endpoint
        int u = g.edge(e).u, v = g.edge(e).v;
        if (bc.spin_pin_[static_cast<size_t>(u)] < 0 && bc.spin_pin_[static_cast<size_t>(v)] < 0)
            throw ValidationError("bc: pinned edge without a pinned endpoint is not admissible");
        if (present) {
            int cu = bc.spin_pin_[static_cast<size_t>(u)];
            int cv = bc.spin_pin_[static_cast<size_t>(v)];
            if (cu >= 0 && cv >= 0 && cu != cv)
                throw ValidationError("bc: pinned-present edge between different pinned colors");
            bc.pinned_present_edges_.push_back(e);
        }
    }
    return bc;
}

BoundaryCondition BoundaryCondition::spin_only(const Graph& g, int q,
                                               const std::vector<std::pair<int, int>>& spin_pins) {
    return admissible_impl(g, q, spin_pins, {}, BcKind::SpinOnly);
}

BoundaryCondition BoundaryCondition::admissible(const Graph& g, int q,
                                                const std::vector<std::pair<int, int>>& spin_pins,
                                                const std::vector<std::pair<int, bool>>& edge_pins) {
    return admissible_impl(g, q, spin_pins, edge_pins, BcKind::Admissible);
}

BoundaryCondition BoundaryCondition::monochromatic(const Graph& g, int q, int color) {
    std::vector<std::pair<int, int>> pins;
    if (g.has_coords()) {
        for (int v : g.boundary_vertices()) pins.emplace_back(v, color);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) pins.emplace_back(v, color);
    }
    return spin_only(g, q, pins);
}

std::vector<std::vector<int>> BoundaryCondition::rc_wiring(const Graph& g) const {
    if (kind_ != BcKind::RCWired) return {};
    std::vector<int> block =
        g.has_coords() ? g.boundary_vertices() : std::vector<int>();
    if (!g.has_coords()) {
        block.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) block[static_cast<size_t>(v)] = v;
    }
    if (block.empty()) return {};
    return {block};
}

std::vector<int> BoundaryCondition::free_edges(const Graph& g) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_pin(e) < 0) out.push_back(e);
    return out;
}

bool spins_agree_with_pins(const BoundaryCondition& bc, const SpinConfig& sigma) {
    for (size_t v = 0; v < sigma.size(); ++v) {
        int pin = bc.spin_pin(static_cast<int>(v));
        if (pin >= 0 && sigma[v] != pin) return false;
    }
    return true;
}

bool edges_agree_with_pins(const BoundaryCondition& bc, const EdgeConfig& a) {
    for (size_t e = 0; e < a.size(); ++e) {
        int pin = bc.edge_pin(static_cast<int>(e));
        if (pin >= 0 && a[e] != pin) return false;
    }
    return true;
}

bool monochromatic_on(const Graph& g, const SpinConfig& sigma, int e) {
    const Edge& ed = g.edge(e);
    return sigma[static_cast<size_t>(ed.u)] == sigma[static_cast<size_t>(ed.v)];
}

int disagreement_count(const Graph& g, const SpinConfig& sigma) {
    int d = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!monochromatic_on(g, sigma, e)) ++d;
    return d;
}

namespace {

void check_bc_for_space(const BoundaryCondition& bc, bool spin_space) {
    if (spin_space && bc.kind() == BcKind::RCWired)
        throw ValidationError("rc_wired boundary condition applies to edge configurations only");
}

void check_spins_in_range(const ModelParams& pr, const SpinConfig& sigma) {
    for (uint8_t s : sigma)
        if (s >= pr.q) throw std::out_of_range("spin value out of range");
}

} // namespace

LogWeight potts_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                           const SpinConfig& sigma) {
    if (static_cast<int>(sigma.size()) != g.vertex_count())
        throw ValidationError("potts_log_weight: config size mismatch");
    check_bc_for_space(bc, true);
    check_spins_in_range(pr, sigma);
    if (!spins_agree_with_pins(bc, sigma)) return {0.0, true};
    int d = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        int pin = bc.edge_pin(e);
        bool mono = monochromatic_on(g, sigma, e);
        if (pin == 1 && !mono) return {0.0, true};
        // pinned edges contribute constant factors; only free edges carry beta
        if (pin < 0 && !mono) ++d;
    }
    return {-pr.beta * d, false};
}

LogWeight rc_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const EdgeConfig& a) {
    if (static_cast<int>(a.size()) != g.edge_count())
        throw ValidationError("rc_log_weight: config size mismatch");
    if (!edges_agree_with_pins(bc, a)) return {0.0, true};

    ComponentLabeling lab = connected_components(g, a, bc.rc_wiring(g));

    int exponent = lab.count;
    if (bc.kind() == BcKind::SpinOnly || bc.kind() == BcKind::Admissible) {
        // forbid A connecting differently pinned vertices, subtract c0
        std::vector<int> comp_color(static_cast<size_t>(lab.count), -1);
        int c0 = 0;
        for (int v : bc.pinned_vertices()) {
            int c = lab.component_of[static_cast<size_t>(v)];
            int col = bc.spin_pin(v);
            if (comp_color[static_cast<size_t>(c)] == -1) {
                comp_color[static_cast<size_t>(c)] = col;
                ++c0;
            } else if (comp_color[static_cast<size_t>(c)] != col) {
                return {0.0, true};
            }
        }
        exponent = lab.count - c0;
    }

    int na = 0;
    for (uint8_t x : a) na += x;
    const int m = g.edge_count();

    double lw = exponent * std::log(static_cast<double>(pr.q));
    if (pr.p <= 0.0) {
        if (na > 0) return {0.0, true};
    } else if (pr.p >= 1.0) {
        if (na < m) return {0.0, true};
    } else {
        lw += na * std::log(pr.p) + (m - na) * std::log1p(-pr.p);
    }
    return {lw, false};
}

LogWeight joint_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                           const JointConfig& cfg) {
    if (static_cast<int>(cfg.spins.size()) != g.vertex_count() ||
        static_cast<int>(cfg.edges.size()) != g.edge_count())
        throw ValidationError("joint_log_weight: config size mismatch");
    check_bc_for_space(bc, true);
    check_spins_in_range(pr, cfg.spins);
    if (!spins_agree_with_pins(bc, cfg.spins)) return {0.0, true};
    if (!edges_agree_with_pins(bc, cfg.edges)) return {0.0, true};
    int na = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!cfg.edges[static_cast<size_t>(e)]) continue;
        if (!monochromatic_on(g, cfg.spins, e)) return {0.0, true}; // sigma ~ A
        ++na;
    }
    const int m = g.edge_count();
    double lw = 0.0;
    if (pr.p <= 0.0) {
        if (na > 0) return {0.0, true};
    } else if (pr.p >= 1.0) {
        if (na < m) return {0.0, true};
    } else {
        lw = na * std::log(pr.p) + (m - na) * std::log1p(-pr.p);
    }
    return {lw, false};
}

} // namespace swlab
