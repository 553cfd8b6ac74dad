#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/sparse.hpp"

namespace fcat {

enum class Boundary { Open, Periodic };

/// Chain of N rail anyons of type `rail` with projector couplings per channel.
struct ChainSpec {
    const FusionCategory* cat = nullptr;
    int rail = 0;
    int sites = 0;  // N
    Boundary bc = Boundary::Open;
    int left_boundary = -1;   // open BC; defaults to the rail label
    int right_boundary = -1;
    std::vector<std::pair<int, double>> couplings;  // (channel label, coefficient)

    int left() const { return left_boundary < 0 ? rail : left_boundary; }
    int right() const { return right_boundary < 0 ? rail : right_boundary; }
};

/// Admissible fusion paths in deterministic lexicographic order.
/// Open BC: states are (x_1 .. x_{N-1}) with x_0, x_N the boundary labels.
/// Periodic BC: states are (x_0 .. x_{N-1}) with the wrap-around constraint.
struct ChainBasis {
    int sites = 0;
    Boundary bc = Boundary::Open;
    std::vector<std::vector<std::uint8_t>> states;
    std::unordered_map<std::uint64_t, int> index;

    int find(const std::vector<std::uint8_t>& s) const;
    std::size_t size() const { return states.size(); }
    static std::uint64_t key(const std::vector<std::uint8_t>& s);
};

/// Directed fusion graph: edge x -> y iff N_{x a}^y = 1.
Eigen::MatrixXi fusion_graph(const FusionCategory& cat, int a);

ChainBasis enumerate_basis(const ChainSpec& spec);

/// Number of admissible paths, computed by transfer-matrix powers.
long count_paths(const FusionCategory& cat, int a, int sites, Boundary bc, int left = -1,
                 int right = -1);

/// Matrix element <x_left, x_mid', x_right| p^{(e)} |x_left, x_mid, x_right>.
cplx projector_element(const FusionCategory& cat, int a, int e, int x_left, int x_mid,
                       int x_mid_new, int x_right);

SparseOperator build_hamiltonian(const ChainSpec& spec, const ChainBasis& basis);

/// Hamiltonian on the full tensor basis (all label strings) with penalty C on
/// fusion-forbidden neighbour pairs. Returns the operator together with the
/// dimension per site (= number of labels).
SparseOperator build_penalty_hamiltonian(const ChainSpec& spec, double C);

/// Default penalty weight 10 * N * max|coupling|.
double default_penalty(const ChainSpec& spec);

/// Translation operator on a periodic basis (site shift by one).
SparseOperator shift_operator(const ChainBasis& basis);

/// The six-label H3 chain in hyper-spherical coupling coordinates.
ChainSpec h3_chain(const FusionCategory& h3, double psi, double theta, double phi, int sites,
                   Boundary bc);

}  // namespace fcat
