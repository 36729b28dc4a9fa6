#ifndef SWLAB_DYNAMICS_HPP
#define SWLAB_DYNAMICS_HPP

#include <string>

#include "swlab/graph.hpp"
#include "swlab/measures.hpp"
#include "swlab/rng.hpp"
#include "swlab/types.hpp"

namespace swlab {

enum class ChainKind {
    SWSpin,
    SWEdge,
    JointK,
    JointT,
    JointKT,
    JointTK,
    JointHalfKT,
    JointKTK,
    JointTKT,
    JointLocal,
    RCHeatBath,
    RCSingleBond,
    ScanEven,
    ScanOdd,
    ScanEO,
    ScanOE,
};

enum class StateSpace { Spin, Edge, Joint };

StateSpace state_space_of(ChainKind k);
const char* chain_name(ChainKind k);
ChainKind chain_from_name(const std::string& name);
// true for the kinds whose transition matrix satisfies detailed balance
bool chain_is_reversible(ChainKind k);

// Holds whichever parts the chain kind uses.
struct ChainState {
    SpinConfig spins;
    EdgeConfig edges;
};

// Percolation half-step: keep each free monochromatic edge independently
// with r_e <= p; pinned-present edges stay, pinned-absent stay out.
EdgeConfig percolate_monochromatic(const Graph& g, const ModelParams& pr,
                                   const BoundaryCondition& bc, const SpinConfig& sigma,
                                   const StepTape& tape);

// Coloring half-step: every component gets the color drawn for its
// representative (smallest coordinate sum, then lexicographic / vertex id);
// components holding a pinned vertex keep the pinned color. `update_mask`,
// when non-empty, restricts updates to components fully inside the mask
// (the restricted chain of the coupling construction); other vertices keep
// their previous spins, which must then be supplied in `previous`.
SpinConfig color_components(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                            const ComponentLabeling& lab, const StepTape& tape,
                            const std::vector<uint8_t>& update_mask = {},
                            const SpinConfig* previous = nullptr);

SpinConfig sw_spin_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const SpinConfig& sigma, const StepTape& tape);
EdgeConfig sw_edge_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const EdgeConfig& a, const StepTape& tape);
JointConfig joint_k_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         const JointConfig& cfg, const StepTape& tape);
JointConfig joint_t_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         const JointConfig& cfg, const StepTape& tape);
JointConfig joint_local_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                             const JointConfig& cfg, const StepTape& tape);
EdgeConfig rc_heatbath_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                            const EdgeConfig& a, const StepTape& tape);
EdgeConfig rc_single_bond_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                               const EdgeConfig& a, const StepTape& tape);
SpinConfig scan_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                     const SpinConfig& sigma, Parity side, const StepTape& tape);

// One step of any kind; composed kinds use tape phases for their sub-steps.
ChainState chain_step(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                      ChainKind kind, const ChainState& state, const StepTape& tape);

// Default start: lowest color on spins (respecting pins), pinned-present
// edges only; always inside the support.
ChainState default_start(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                         ChainKind kind);

// Heat-bath single-edge ratio rho(A + e) / (rho(A + e) + rho(A - e)),
// evaluated through the measure so that every bc kind is handled alike.
double rc_insertion_probability(const Graph& g, const ModelParams& pr,
                                const BoundaryCondition& bc, const EdgeConfig& a, int e);

} // namespace swlab

#endif
