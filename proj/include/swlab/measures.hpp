#ifndef SWLAB_MEASURES_HPP
#define SWLAB_MEASURES_HPP

#include <utility>
#include <vector>

#include "swlab/graph.hpp"
#include "swlab/types.hpp"

namespace swlab {

// q colors, inverse temperature beta, edge retention p = 1 - exp(-beta).
// One of beta/p is always derived from the other at construction.
struct ModelParams {
    int q = 2;
    double beta = 0.0;
    double p = 0.0;

    static ModelParams from_beta(int q, double beta);
    static ModelParams from_p(int q, double p);
};

double beta_critical(int q); // ln(1 + sqrt(q))
double p_critical(int q);    // sqrt(q) / (1 + sqrt(q))
double dual_parameter(double p, int q);

enum class BcKind { Free, SpinOnly, Admissible, RCWired, RCFree };

const char* bc_kind_name(BcKind k);

// Pinned spins on V0 (psi) and pinned edges on E0 (phi). Admissible requires
// every pinned edge to have a pinned endpoint, and every pinned-present edge
// to be monochromatic under psi whenever both endpoints are pinned.
class BoundaryCondition {
public:
    static BoundaryCondition free_bc();
    static BoundaryCondition rc_free();
    static BoundaryCondition rc_wired(const Graph& g);
    static BoundaryCondition spin_only(const Graph& g, int q,
                                       const std::vector<std::pair<int, int>>& spin_pins);
    static BoundaryCondition admissible(const Graph& g, int q,
                                        const std::vector<std::pair<int, int>>& spin_pins,
                                        const std::vector<std::pair<int, bool>>& edge_pins);
    // all boundary vertices pinned to one color (whole V for arbitrary graphs)
    static BoundaryCondition monochromatic(const Graph& g, int q, int color);

    BcKind kind() const { return kind_; }

    bool has_pins() const { return !spin_pin_.empty() || !edge_pin_.empty(); }
    int spin_pin(int v) const { return spin_pin_.empty() ? -1 : spin_pin_[static_cast<size_t>(v)]; }
    int edge_pin(int e) const { return edge_pin_.empty() ? -1 : edge_pin_[static_cast<size_t>(e)]; }
    const std::vector<int>& pinned_vertices() const { return pinned_vertices_; }
    const std::vector<int>& pinned_present_edges() const { return pinned_present_edges_; }

    // Wiring blocks used for random-cluster component counting: {boundary}
    // for RCWired, nothing otherwise.
    std::vector<std::vector<int>> rc_wiring(const Graph& g) const;

    // free edges/vertices under this bc (indices not pinned)
    std::vector<int> free_edges(const Graph& g) const;

private:
    static BoundaryCondition admissible_impl(const Graph& g, int q,
                                             const std::vector<std::pair<int, int>>& spin_pins,
                                             const std::vector<std::pair<int, bool>>& edge_pins,
                                             BcKind kind);

    BcKind kind_ = BcKind::Free;
    std::vector<int> spin_pin_;            // per vertex, -1 free
    std::vector<int> edge_pin_;            // per edge, -1 free, 0 absent, 1 present
    std::vector<int> pinned_vertices_;
    std::vector<int> pinned_present_edges_;
};

struct LogWeight {
    double value = 0.0;
    bool forbidden = false;
};

// exp(-beta |D(sigma)|) over unpinned edges, conditioned on the bc: states
// disagreeing with psi or bichromatic on a pinned-present edge are forbidden.
// Pinned edges contribute sigma-independent factors and are left out so that
// this weight is exactly the spin marginal of the joint measure.
LogWeight potts_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                           const SpinConfig& sigma);

// p^|A| (1-p)^(|E|-|A|) q^(exponent) with exponent c(A) for free bc,
// c(A, {boundary}) for RCWired, and c(A) - c0(A) for spin/admissible bcs
// (c0 = components touching a pinned vertex). A must agree with pinned edges
// and must not connect differently pinned vertices.
LogWeight rc_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                        const EdgeConfig& a);

// p^|A| (1-p)^(|E|-|A|) 1(sigma ~ A) 1(sigma ~ psi) 1(A ~ phi)
LogWeight joint_log_weight(const Graph& g, const ModelParams& pr, const BoundaryCondition& bc,
                           const JointConfig& cfg);

// helpers shared by dynamics and the exact module
bool spins_agree_with_pins(const BoundaryCondition& bc, const SpinConfig& sigma);
bool edges_agree_with_pins(const BoundaryCondition& bc, const EdgeConfig& a);
bool monochromatic_on(const Graph& g, const SpinConfig& sigma, int e);
int disagreement_count(const Graph& g, const SpinConfig& sigma); // |D(sigma)| over all of E

} // namespace swlab

#endif
