#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "fcat/types.hpp"

namespace fcat {

/// Parameters of a cubic trivalent category: loop value d, bigon value b,
/// triangle value t.
struct TrivalentParams {
    double d = 0.0;
    double b = 1.0;
    double t = 0.0;
};

TrivalentParams h3_trivalent_params();
TrivalentParams fibonacci_trivalent_params();

/// Closed planar trivalent diagram as a rotation system: every vertex carries
/// three half-edges in counterclockwise order; free_loops counts vertexless
/// circles produced by reductions (or present from the start).
class PlanarDiagram {
  public:
    // half-edge h pairs with mate(h); vertex(h) owns it
    static PlanarDiagram from_rotations(const std::vector<std::array<int, 3>>& rot,
                                        int free_loops = 0);

    int num_vertices() const { return int(rot_.size()); }
    int free_loops() const { return free_loops_; }
    const std::vector<std::array<int, 3>>& rotations() const { return rot_; }

    PlanarDiagram disjoint_union(const PlanarDiagram& other) const;

    friend double evaluate_closed_diagram(const TrivalentParams& p, const PlanarDiagram& d);

  private:
    // rot_[v] = three edge ids in ccw order; edges_[e] = the two (vertex, slot)
    // endpoints
    std::vector<std::array<int, 3>> rot_;
    int free_loops_ = 0;
};

/// Coefficients (alpha, beta) of the square reduction onto the pairing and
/// tree basis diagrams.
std::pair<double, double> square_coeffs(const TrivalentParams& p);

/// Gram-Schmidt change of basis for the four-point space; rows are the
/// orthonormal vectors in terms of the basis diagrams w1..w4.
Eigen::Matrix4d theta_matrix(const TrivalentParams& p);

/// Gram matrix of the basis diagrams w1..w4 computed by gluing and evaluating
/// closed diagrams (independent of the printed Theta).
Eigen::Matrix4d c4_gram_matrix(const TrivalentParams& p);

double evaluate_closed_diagram(const TrivalentParams& p, const PlanarDiagram& d);

/// Same value, but reducible faces are picked in a seeded random order
/// (reduction-order independence checks).
double evaluate_closed_diagram_shuffled(const TrivalentParams& p, const PlanarDiagram& d,
                                        std::uint64_t seed);

// stock diagrams for tests and the CLI
PlanarDiagram diagram_single_loop();
PlanarDiagram diagram_theta();
PlanarDiagram diagram_tetrahedron();
PlanarDiagram diagram_cube();

}  // namespace fcat
