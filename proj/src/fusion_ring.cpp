#include "fcat/fusion_ring.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace fcat {

FusionRing::FusionRing(std::string name, std::vector<Label> labels, std::vector<int> mult)
    : name_(std::move(name)), labels_(std::move(labels)), mult_(std::move(mult)) {
    const int n = num_labels();
    if (mult_.size() != std::size_t(n) * n * n)
        throw ConsistencyError("fusion ring multiplicity table has wrong size");
    // associativity over the integers
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) lhs += long(this->n(a, b, e)) * this->n(e, c, d);
                    for (int f = 0; f < n; ++f) rhs += long(this->n(a, f, d)) * this->n(b, c, f);
                    if (lhs != rhs)
                        throw ConsistencyError("fusion ring is not associative at (" +
                                               std::to_string(a) + "," + std::to_string(b) +
                                               "," + std::to_string(c) + "," +
                                               std::to_string(d) + ")");
                }

    // dimensions from the Perron-Frobenius eigenvector of the total fusion matrix
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) M(b, c) += this->n(a, b, c);
    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (es.eigenvalues()(i).real() > es.eigenvalues()(best).real()) best = i;
    Eigen::VectorXd v = es.eigenvectors().col(best).real();
    if (v(0) < 0) v = -v;
    qdim_.resize(std::size_t(n));
    for (int a = 0; a < n; ++a) qdim_[std::size_t(a)] = v(a) / v(0);
}

FusionRing FusionRing::from_category(const FusionCategory& cat) {
    const int n = cat.num_labels();
    std::vector<int> mult(std::size_t(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                mult[(std::size_t(a) * n + b) * n + c] = cat.n(a, b, c);
    return FusionRing(cat.name(), cat.labels(), std::move(mult));
}

int FusionRing::find_label(const std::string& nm) const {
    for (const Label& l : labels_)
        if (l.name == nm) return l.index;
    throw UnknownName("no label named '" + nm + "' in ring " + name_);
}

bool FusionRing::multiplicity_free() const {
    for (int v : mult_)
        if (v > 1) return false;
    return true;
}

}  // namespace fcat
