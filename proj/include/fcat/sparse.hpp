#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <vector>

#include "fcat/types.hpp"

namespace fcat {

/// Sparse operator assembled from triplets; immutable once compressed.
class SparseOperator {
  public:
    SparseOperator() = default;
    explicit SparseOperator(int dim, bool hermitian = true)
        : dim_(dim), hermitian_(hermitian) {}

    int dim() const { return dim_; }
    bool hermitian_flag() const { return hermitian_; }

    void add(int row, int col, cplx v) { triplets_.emplace_back(row, col, v); }
    void compress();
    bool compressed() const { return compressed_; }

    void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::MatrixXcd dense() const;
    const Eigen::SparseMatrix<cplx>& matrix() const { return mat_; }

    /// max |A(r,c) - conj(A(c,r))| over stored entries.
    double hermiticity_residual() const;
    long nonzeros() const { return mat_.nonZeros(); }

  private:
    int dim_ = 0;
    bool hermitian_ = true;
    bool compressed_ = false;
    std::vector<Eigen::Triplet<cplx>> triplets_;
    Eigen::SparseMatrix<cplx> mat_;
};

struct GroundState {
    double energy = 0.0;
    Eigen::VectorXcd vector;
    int multiplicity = 1;
    int iterations = 0;
    double residual = 0.0;
};

using Matvec = std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)>;

/// Lanczos with full reorthogonalisation. Finds the lowest eigenpair of a
/// hermitian operator, restarting on breakdown, and probes ground-space
/// multiplicity by deflated reruns.
GroundState ground_state(const Matvec& apply, int dim, double tol = 1e-10,
                         int max_krylov = 400, std::uint64_t seed = 1234,
                         double degeneracy_tol = 1e-8, int max_multiplicity = 8);
GroundState ground_state(const SparseOperator& op, double tol = 1e-10,
                         int max_krylov = 400, std::uint64_t seed = 1234,
                         int max_multiplicity = 8);

/// Lowest k eigenvalues via Lanczos with deflation (values only).
std::vector<double> lowest_eigenvalues(const SparseOperator& op, int k, double tol = 1e-10,
                                       int max_krylov = 400);

}  // namespace fcat
