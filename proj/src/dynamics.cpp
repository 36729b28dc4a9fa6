#include "swlab/dynamics.hpp"

#include <cmath>

namespace swlab {

StateSpace state_space_of(ChainKind k) {
    switch (k) {
        case ChainKind::SWSpin:
        case ChainKind::ScanEven:
        case ChainKind::ScanOdd:
        case ChainKind::ScanEO:
        case ChainKind::ScanOE:
            return StateSpace::Spin;
        case ChainKind::SWEdge:
        case ChainKind::RCHeatBath:
        case ChainKind::RCSingleBond:
            return StateSpace::Edge;
        default:
            return StateSpace::Joint;
    }
}

const char* chain_name(ChainKind k) {
    switch (k) {
        case ChainKind::SWSpin: return "sw_spin";
        case ChainKind::SWEdge: return "sw_edge";
        case ChainKind::JointK: return "joint_k";
        case ChainKind::JointT: return "joint_t";
        case ChainKind::JointKT: return "joint_kt";
        case ChainKind::JointTK: return "joint_tk";
        case ChainKind::JointHalfKT: return "joint_half_kt";
        case ChainKind::JointKTK: return "joint_ktk";
        case ChainKind::JointTKT: return "joint_tkt";
        case ChainKind::JointLocal: return "joint_local";
        case ChainKind::RCHeatBath: return "rc_heatbath";
        case ChainKind::RCSingleBond: return "rc_single_bond";
        case ChainKind::ScanEven: return "scan_even";
        case ChainKind::ScanOdd: return "scan_odd";
        case ChainKind::ScanEO: return "scan_eo";
        case ChainKind::ScanOE: return "scan_oe";
    }
    return "?";
}

ChainKind chain_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(ChainKind::ScanOE); ++i) {
        ChainKind k = static_cast<ChainKind>(i);
        if (name == chain_name(k)) return k;
    }
    throw ValidationError("unknown chain kind: " + name);
}

bool chain_is_reversible(ChainKind k) {
    switch (k) {
        case ChainKind::SWSpin:
        case ChainKind::SWEdge:
        case ChainKind::JointK:
        case ChainKind::JointT:
        case ChainKind::JointHalfKT:
        case ChainKind::JointKTK:
        case ChainKind::JointTKT:
        case ChainKind::JointLocal:
        case ChainKind::RCHeatBath:
        case ChainKind::RCSingleBond:
        case ChainKind::ScanEven:
        case ChainKind::ScanOdd:
            return true;
        default:
            return false;
    }
}

EdgeConfig percolate_monochromatic(const Graph& g, const ModelParams& pr,
                                   const BoundaryCondition& bc, const SpinConfig& sigma,
                                   const StepTape& tape) {
    EdgeConfig a(static_cast<size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        int pin = bc.edge_pin(e);
        if (pin >= 0) {
            a[static_cast<size_t>(e)] = static_cast<uint8_t>(pin);
            continue;
        }
        if (monochromatic_on(g, sigma, e) && tape.edge_uniform(e) <= pr.p)
            a[static_cast<size_t>(e)] = 1;
    }
    return a;
}

SpinConfig color_components(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                            const ComponentLabeling& lab, const StepTape& tape,
                            const std::vector<uint8_t>& update_mask, const SpinConfig* previous) {
    const int n = g.vertex_count();
    std::vector<int> comp_color(static_cast<size_t>(lab.count), -1);
    std::vector<uint8_t> comp_updates(static_cast<size_t>(lab.count), 1);

    if (!update_mask.empty()) {
        for (int v = 0; v < n; ++v)
            if (!update_mask[static_cast<size_t>(v)])
                comp_updates[static_cast<size_t>(lab.component_of[static_cast<size_t>(v)])] = 0;
    }
    for (int v : bc.pinned_vertices()) {
        int c = lab.component_of[static_cast<size_t>(v)];
        int col = bc.spin_pin(v);
        if (comp_color[static_cast<size_t>(c)] >= 0 && comp_color[static_cast<size_t>(c)] != col)
            throw ValidationError("color_components: component connects different pinned colors");
        comp_color[static_cast<size_t>(c)] = col;
    }
    for (int c = 0; c < lab.count; ++c)
        if (comp_color[static_cast<size_t>(c)] < 0)
            comp_color[static_cast<size_t>(c)] =
                tape.vertex_color(lab.representative[static_cast<size_t>(c)], pr.q);

    SpinConfig out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int c = lab.component_of[static_cast<size_t>(v)];
        if (comp_updates[static_cast<size_t>(c)]) {
            out[static_cast<size_t>(v)] = static_cast<uint8_t>(comp_color[static_cast<size_t>(c)]);
        } else {
            if (!previous) throw ValidationError("color_components: restricted update needs previous spins");
            out[static_cast<size_t>(v)] = (*previous)[static_cast<size_t>(v)];
        }
    }
    return out;
}

SpinConfig sw_spin_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const SpinConfig& sigma, const StepTape& tape) {
    EdgeConfig a = percolate_monochromatic(g, pr, bc, sigma, tape);
    ComponentLabeling lab = connected_components(g, a);
    return color_components(g, pr, bc, lab, tape);
}

EdgeConfig sw_edge_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const EdgeConfig& a, const StepTape& tape) {
    ComponentLabeling lab = connected_components(g, a, bc.rc_wiring(g));
    SpinConfig sigma = color_components(g, pr, bc, lab, tape);
    return percolate_monochromatic(g, pr, bc, sigma, tape);
}

namespace {

void require_compatible(const Graph& g, const BoundaryCondition& bc, const JointConfig& cfg) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (cfg.edges[static_cast<size_t>(e)] && !monochromatic_on(g, cfg.spins, e))
            throw ValidationError("joint step: input violates sigma ~ A");
    if (!spins_agree_with_pins(bc, cfg.spins) || !edges_agree_with_pins(bc, cfg.edges))
        throw ValidationError("joint step: input violates the boundary condition");
}

} // namespace

JointConfig joint_k_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         const JointConfig& cfg, const StepTape& tape) {
    require_compatible(g, bc, cfg);
    ComponentLabeling lab = connected_components(g, cfg.edges);
    return {color_components(g, pr, bc, lab, tape), cfg.edges};
}

JointConfig joint_t_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         const JointConfig& cfg, const StepTape& tape) {
    require_compatible(g, bc, cfg);
    return {cfg.spins, percolate_monochromatic(g, pr, bc, cfg.spins, tape)};
}

JointConfig joint_local_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                             const JointConfig& cfg, const StepTape& tape) {
    require_compatible(g, bc, cfg);
    JointConfig out = cfg;
    const bool vertex_move = tape.aux_uniform(0) < 0.5;
    if (vertex_move) {
        const int n = g.vertex_count();
        int v = static_cast<int>(tape.aux_uniform(1) * n);
        if (v >= n) v = n - 1;
        if (bc.spin_pin(v) >= 0) return out;
        for (int e : g.incident_edges(v))
            if (cfg.edges[static_cast<size_t>(e)]) return out; // not isolated
        out.spins[static_cast<size_t>(v)] = static_cast<uint8_t>(tape.vertex_color(v, pr.q));
    } else {
        const int m = g.edge_count();
        int e = static_cast<int>(tape.aux_uniform(1) * m);
        if (e >= m) e = m - 1;
        if (bc.edge_pin(e) >= 0) return out;
        if (!monochromatic_on(g, cfg.spins, e)) return out; // bichromatic edges stay absent
        out.edges[static_cast<size_t>(e)] = tape.edge_uniform(e) <= pr.p ? 1 : 0;
    }
    return out;
}

double rc_insertion_probability(const Graph& g, const ModelParams& pr,
                                const BoundaryCondition& bc, const EdgeConfig& a, int e) {
    EdgeConfig with = a, without = a;
    with[static_cast<size_t>(e)] = 1;
    without[static_cast<size_t>(e)] = 0;
    LogWeight lw_in = rc_log_weight(g, pr, bc, with);
    LogWeight lw_out = rc_log_weight(g, pr, bc, without);
    if (lw_in.forbidden && lw_out.forbidden)
        throw ValidationError("rc heat-bath: both edge states forbidden");
    if (lw_in.forbidden) return 0.0;
    if (lw_out.forbidden) return 1.0;
    return 1.0 / (1.0 + std::exp(lw_out.value - lw_in.value));
}

EdgeConfig rc_heatbath_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                            const EdgeConfig& a, const StepTape& tape) {
    std::vector<int> free = bc.free_edges(g);
    if (free.empty()) return a;
    int pick = static_cast<int>(tape.aux_uniform(0) * free.size());
    if (pick >= static_cast<int>(free.size())) pick = static_cast<int>(free.size()) - 1;
    int e = free[static_cast<size_t>(pick)];
    double r = rc_insertion_probability(g, pr, bc, a, e);
    EdgeConfig out = a;
    out[static_cast<size_t>(e)] = tape.aux_uniform(1) <= r ? 1 : 0;
    return out;
}

EdgeConfig rc_single_bond_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                               const EdgeConfig& a, const StepTape& tape) {
    std::vector<int> free = bc.free_edges(g);
    if (free.empty()) return a;
    ComponentLabeling lab = connected_components(g, a, bc.rc_wiring(g));
    SpinConfig sigma = color_components(g, pr, bc, lab, tape);
    int pick = static_cast<int>(tape.aux_uniform(0) * free.size());
    if (pick >= static_cast<int>(free.size())) pick = static_cast<int>(free.size()) - 1;
    int e = free[static_cast<size_t>(pick)];
    EdgeConfig out = a;
    if (monochromatic_on(g, sigma, e))
        out[static_cast<size_t>(e)] = tape.edge_uniform(e) <= pr.p ? 1 : 0;
    return out;
}

SpinConfig scan_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                     const SpinConfig& sigma, Parity side, const StepTape& tape) {
    if (!g.has_parity())
        throw ValidationError("scan_step: graph has no bipartition");
    SpinConfig out = sigma;
    std::vector<double> w(static_cast<size_t>(pr.q));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.parity(v) != side || bc.spin_pin(v) >= 0) continue;
        // single-site conditional: weight exp(beta * #agreeing neighbors)
        double total = 0.0;
        for (int k = 0; k < pr.q; ++k) {
            int agree = 0;
            for (int e : g.incident_edges(v)) {
                int u = g.other_endpoint(e, v);
                if (sigma[static_cast<size_t>(u)] == k) ++agree;
            }
            w[static_cast<size_t>(k)] = std::exp(pr.beta * agree);
            total += w[static_cast<size_t>(k)];
        }
        double u = tape.aux_uniform(v) * total;
        int k = 0;
        double acc = w[0];
        while (k + 1 < pr.q && u > acc) {
            ++k;
            acc += w[static_cast<size_t>(k)];
        }
        out[static_cast<size_t>(v)] = static_cast<uint8_t>(k);
    }
    return out;
}

ChainState chain_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                      ChainKind kind, const ChainState& state, const StepTape& tape) {
    ChainState out = state;
    switch (kind) {
        case ChainKind::SWSpin:
            out.spins = sw_spin_step(g, pr, bc, state.spins, tape);
            break;
        case ChainKind::SWEdge:
            out.edges = sw_edge_step(g, pr, bc, state.edges, tape);
            break;
        case ChainKind::JointK: {
            JointConfig j = joint_k_step(g, pr, bc, {state.spins, state.edges}, tape);
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointT: {
            JointConfig j = joint_t_step(g, pr, bc, {state.spins, state.edges}, tape);
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointKT: {
            JointConfig j = joint_k_step(g, pr, bc, {state.spins, state.edges}, tape.with_phase(0));
            j = joint_t_step(g, pr, bc, j, tape.with_phase(1));
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointTK: {
            JointConfig j = joint_t_step(g, pr, bc, {state.spins, state.edges}, tape.with_phase(0));
            j = joint_k_step(g, pr, bc, j, tape.with_phase(1));
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointHalfKT: {
            JointConfig j{state.spins, state.edges};
            if (tape.aux_uniform(0) < 0.5)
                j = joint_k_step(g, pr, bc, j, tape.with_phase(1));
            else
                j = joint_t_step(g, pr, bc, j, tape.with_phase(1));
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointKTK: {
            JointConfig j = joint_k_step(g, pr, bc, {state.spins, state.edges}, tape.with_phase(0));
            j = joint_t_step(g, pr, bc, j, tape.with_phase(1));
            j = joint_k_step(g, pr, bc, j, tape.with_phase(2));
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointTKT: {
            JointConfig j = joint_t_step(g, pr, bc, {state.spins, state.edges}, tape.with_phase(0));
            j = joint_k_step(g, pr, bc, j, tape.with_phase(1));
            j = joint_t_step(g, pr, bc, j, tape.with_phase(2));
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::JointLocal: {
            JointConfig j = joint_local_step(g, pr, bc, {state.spins, state.edges}, tape);
            out = {j.spins, j.edges};
            break;
        }
        case ChainKind::RCHeatBath:
            out.edges = rc_heatbath_step(g, pr, bc, state.edges, tape);
            break;
        case ChainKind::RCSingleBond:
            out.edges = rc_single_bond_step(g, pr, bc, state.edges, tape);
            break;
        case ChainKind::ScanEven:
            out.spins = scan_step(g, pr, bc, state.spins, Parity::Even, tape);
            break;
        case ChainKind::ScanOdd:
            out.spins = scan_step(g, pr, bc, state.spins, Parity::Odd, tape);
            break;
        case ChainKind::ScanEO:
            out.spins = scan_step(g, pr, bc, state.spins, Parity::Even, tape.with_phase(0));
            out.spins = scan_step(g, pr, bc, out.spins, Parity::Odd, tape.with_phase(1));
            break;
        case ChainKind::ScanOE:
            out.spins = scan_step(g, pr, bc, state.spins, Parity::Odd, tape.with_phase(0));
            out.spins = scan_step(g, pr, bc, out.spins, Parity::Even, tape.with_phase(1));
            break;
    }
    return out;
}

ChainState default_start(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         ChainKind kind) {
    (void)pr;
    ChainState st;
    st.spins.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : bc.pinned_vertices())
        st.spins[static_cast<size_t>(v)] = static_cast<uint8_t>(bc.spin_pin(v));
    st.edges.assign(static_cast<size_t>(g.edge_count()), 0);
    for (int e : bc.pinned_present_edges()) st.edges[static_cast<size_t>(e)] = 1;
    // a pinned-present edge must be monochromatic; lowest pinned color wins
    for (int e : bc.pinned_present_edges()) {
        int u = g.edge(e).u, v = g.edge(e).v;
        int cu = bc.spin_pin(u), cv = bc.spin_pin(v);
        int col = cu >= 0 ? cu : cv;
        if (bc.spin_pin(u) < 0) st.spins[static_cast<size_t>(u)] = static_cast<uint8_t>(col);
        if (bc.spin_pin(v) < 0) st.spins[static_cast<size_t>(v)] = static_cast<uint8_t>(col);
    }
    (void)kind;
    return st;
}

} // namespace swlab
