#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/fusion_ring.hpp"

namespace fcat {

/// Object sum  sum_X mult[X] * X.
struct ObjectSum {
    std::vector<int> mult;
    int at(int x) const { return x < int(mult.size()) ? mult[std::size_t(x)] : 0; }
    bool operator==(const ObjectSum& o) const { return mult == o.mult; }
    std::string str(const FusionRing& ring) const;
};

/// Algebra object: object sum plus multiplication coefficients c_xy^z on the
/// triples allowed by the object support and the fusion rules.
struct AlgebraObject {
    ObjectSum object;
    std::map<std::uint64_t, cplx> coeffs;  // pack3(x,y,z) -> c_xy^z
    std::vector<std::array<int, 3>> free_params;
    double residual = 0.0;

    cplx c(int x, int y, int z) const {
        auto it = coeffs.find(pack3(x, y, z));
        return it == coeffs.end() ? cplx(0.0) : it->second;
    }
};

struct PrincipalGraph {
    std::vector<std::string> even_vertices;  // category labels
    std::vector<ObjectSum> odd_vertices;     // simple module objects
    Eigen::MatrixXi adjacency;               // even x odd
};

/// All object sums with a_vacuum = 1 and a_X <= floor(d_X); sums without the
/// unit are excluded (no unit morphism can exist).
std::vector<ObjectSum> candidate_objects(const FusionRing& ring);

enum class TSide { Left, Right };  // Left: rows decompose A (x) X_i; Right: X_i (x) A

Eigen::MatrixXi fusion_matrix_T(const FusionRing& ring, const ObjectSum& obj,
                                TSide side = TSide::Right);

/// Minimal-column nonnegative integer factorisation T = V V^T, columns sorted
/// in descending lexicographic order. Empty optional if none exists.
std::optional<Eigen::MatrixXi> factor_V(const Eigen::MatrixXi& T);

struct SolveOptions {
    cplx free_value = 1.0;
    double tol = 1e-9;
    double target = 1e-12;
    int max_restarts = 24;
    std::uint64_t seed = 2026;
    // explicit gauge-fixed coefficients; auto-detected from the Jacobian null
    // space when empty
    std::vector<std::array<int, 3>> pinned;
};

/// Solves the associativity system for the multiplication morphism. Returns
/// nothing when the object is not an algebra object (residual floor above tol
/// or no unit component).
std::optional<AlgebraObject> solve_multiplication(const FusionCategory& cat,
                                                  const ObjectSum& obj,
                                                  const SolveOptions& opts = {});

PrincipalGraph principal_graph(const FusionRing& ring, const ObjectSum& alg,
                               const ObjectSum& fixed_module);

}  // namespace fcat
