#include "fcat/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fcat {

void SparseOperator::compress() {
    mat_.resize(dim_, dim_);
    mat_.setFromTriplets(triplets_.begin(), triplets_.end());
    mat_.makeCompressed();
    triplets_.clear();
    triplets_.shrink_to_fit();
    compressed_ = true;
}

void SparseOperator::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
    y.noalias() = mat_ * x;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& x) const { return mat_ * x; }

Eigen::MatrixXcd SparseOperator::dense() const { return Eigen::MatrixXcd(mat_); }

double SparseOperator::hermiticity_residual() const {
    Eigen::SparseMatrix<cplx> diff = mat_ - Eigen::SparseMatrix<cplx>(mat_.adjoint());
    double worst = 0.0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (Eigen::SparseMatrix<cplx>::InnerIterator it(diff, k); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    return worst;
}

namespace {

// One Lanczos pass with full reorthogonalisation against both the Krylov
// basis and previously converged (deflated) eigenvectors.
struct LanczosResult {
    double value = 0.0;
    Eigen::VectorXcd vector;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

LanczosResult lanczos_lowest(const Matvec& apply, int dim,
                             const std::vector<Eigen::VectorXcd>& deflate, double tol,
                             int max_krylov, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_vec = [&]() {
        Eigen::VectorXcd v(dim);
        for (int i = 0; i < dim; ++i) v(i) = cplx(gauss(rng), gauss(rng));
        return v;
    };
    auto project_out = [&](Eigen::VectorXcd& v) {
        for (const auto& d : deflate) v -= d.dot(v) * d;
    };

    LanczosResult out;
    Eigen::VectorXcd v0 = random_vec();
    int total_iters = 0;
    for (int restart = 0; restart < 8; ++restart) {
        project_out(v0);
        double nrm = v0.norm();
        if (nrm < 1e-14) {
            v0 = random_vec();
            continue;
        }
        v0 /= nrm;

        std::vector<Eigen::VectorXcd> basis;
        std::vector<double> alpha, beta;
        basis.push_back(v0);
        Eigen::VectorXcd w(dim);
        bool breakdown = false;
        int m = std::min(max_krylov, dim);
        for (int j = 0; j < m; ++j) {
            apply(basis[std::size_t(j)], w);
            ++total_iters;
            double a = std::real(basis[std::size_t(j)].dot(w));
            alpha.push_back(a);
            w -= a * basis[std::size_t(j)];
            if (j > 0) w -= beta[std::size_t(j - 1)] * basis[std::size_t(j - 1)];
            // full reorthogonalisation
            for (const auto& b : basis) w -= b.dot(w) * b;
            for (const auto& b : basis) w -= b.dot(w) * b;
            project_out(w);
            double bnorm = w.norm();
            if (bnorm < 1e-12 || j == m - 1) {
                breakdown = bnorm < 1e-12;
                if (!breakdown) beta.push_back(bnorm);
                if (breakdown) break;
                basis.push_back(w / bnorm);
                break;  // basis full
            }
            beta.push_back(bnorm);
            basis.push_back(w / bnorm);
        }

        const int k = int(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            tri(i, i) = alpha[std::size_t(i)];
            if (i + 1 < k) tri(i, i + 1) = tri(i + 1, i) = beta[std::size_t(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        Eigen::VectorXd coef = es.eigenvectors().col(0);
        Eigen::VectorXcd ritz = Eigen::VectorXcd::Zero(dim);
        for (int i = 0; i < k; ++i) ritz += coef(i) * basis[std::size_t(i)];
        project_out(ritz);
        ritz.normalize();

        apply(ritz, w);
        double ev = std::real(ritz.dot(w));
        double res = (w - ev * ritz).norm();
        out.value = ev;
        out.vector = ritz;
        out.residual = res;
        out.iterations = total_iters;
        double scale = std::max(1.0, std::abs(ev));
        if (res < tol * scale) {
            out.converged = true;
            return out;
        }
        v0 = ritz;  // restart from the current Ritz vector
        if (breakdown && res >= tol * scale) v0 += 0.01 * random_vec();
    }
    return out;
}

}  // namespace

GroundState ground_state(const Matvec& apply, int dim, double tol, int max_krylov,
                         std::uint64_t seed, double degeneracy_tol, int max_multiplicity) {
    if (dim <= 0) throw Error("ground_state: empty operator");
    std::mt19937_64 rng(seed);
    std::vector<Eigen::VectorXcd> found;
    std::vector<double> values;

    for (int sweep = 0; sweep < max_multiplicity; ++sweep) {
        LanczosResult r = lanczos_lowest(apply, dim, found, tol, max_krylov, rng);
        if (!r.converged && int(found.size()) == 0)
            throw NoConvergence("Lanczos failed to converge within the iteration cap");
        if (!r.converged) break;
        if (!values.empty() && r.value > values.front() + degeneracy_tol *
                                              std::max(1.0, std::abs(values.front())))
            break;
        found.push_back(r.vector);
        values.push_back(r.value);
        if (int(found.size()) >= dim || int(found.size()) >= max_multiplicity) break;
    }

    GroundState gs;
    gs.energy = values.front();
    gs.vector = found.front();
    gs.multiplicity = int(found.size());
    Eigen::VectorXcd w(dim);
    apply(gs.vector, w);
    gs.residual = (w - gs.energy * gs.vector).norm();
    return gs;
}

GroundState ground_state(const SparseOperator& op, double tol, int max_krylov,
                         std::uint64_t seed, int max_multiplicity) {
    return ground_state([&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { op.apply(x, y); },
                        op.dim(), tol, max_krylov, seed, 1e-8, max_multiplicity);
}

std::vector<double> lowest_eigenvalues(const SparseOperator& op, int k, double tol,
                                       int max_krylov) {
    std::mt19937_64 rng(99);
    std::vector<Eigen::VectorXcd> found;
    std::vector<double> values;
    auto apply = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) { op.apply(x, y); };
    while (int(values.size()) < std::min(k, op.dim())) {
        LanczosResult r = lanczos_lowest(apply, op.dim(), found, tol, max_krylov, rng);
        if (!r.converged) throw NoConvergence("Lanczos deflation sweep failed to converge");
        found.push_back(r.vector);
        values.push_back(r.value);
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace fcat
