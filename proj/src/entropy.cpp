#include "fcat/entropy.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <map>

namespace fcat {

namespace {

std::uint64_t subkey(const std::vector<std::uint8_t>& s, std::size_t from, std::size_t to) {
    std::uint64_t k = 1;
    for (std::size_t i = from; i < to; ++i) k = (k << 4) | s[i];
    return k;
}

}  // namespace

double entanglement_entropy(const Eigen::VectorXcd& state, const ChainBasis& basis, int cut) {
    if (basis.states.empty()) throw Error("entropy of an empty basis");
    const std::size_t len = basis.states.front().size();
    if (cut <= 0 || std::size_t(cut) >= len) throw Error("cut must be interior");

    std::map<std::uint64_t, int> lidx, ridx;
    for (const auto& s : basis.states) {
        lidx.emplace(subkey(s, 0, std::size_t(cut)), 0);
        ridx.emplace(subkey(s, std::size_t(cut), len), 0);
    }
    int li = 0, ri = 0;
    for (auto& kv : lidx) kv.second = li++;
    for (auto& kv : ridx) kv.second = ri++;

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(li, ri);
    for (std::size_t n = 0; n < basis.states.size(); ++n) {
        const auto& s = basis.states[n];
        M(lidx.at(subkey(s, 0, std::size_t(cut))), ridx.at(subkey(s, std::size_t(cut), len))) +=
            state(long(n));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    Eigen::VectorXd sv = svd.singularValues();
    double norm2 = sv.squaredNorm();
    double S = 0.0;
    for (int i = 0; i < sv.size(); ++i) {
        double p = sv(i) * sv(i) / norm2;
        if (p > 1e-16) S -= p * std::log(p);
    }
    return S;
}

double entanglement_entropy_embedded(const Eigen::VectorXcd& state, const ChainBasis& basis,
                                     int cut, int num_labels) {
    const std::size_t len = basis.states.front().size();
    long dl = 1, dr = 1;
    for (int i = 0; i < cut; ++i) dl *= num_labels;
    for (std::size_t i = std::size_t(cut); i < len; ++i) dr *= num_labels;
    if (dl * dr > (1 << 26)) throw TooLarge("embedded entropy space too large");

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dl, dr);
    for (std::size_t n = 0; n < basis.states.size(); ++n) {
        const auto& s = basis.states[n];
        long il = 0, ir = 0;
        for (int i = 0; i < cut; ++i) il = il * num_labels + s[std::size_t(i)];
        for (std::size_t i = std::size_t(cut); i < len; ++i) ir = ir * num_labels + s[i];
        M(il, ir) += state(long(n));
    }
    Eigen::MatrixXcd rho = M * M.adjoint();
    rho /= rho.trace();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double S = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double p = es.eigenvalues()(i);
        if (p > 1e-16) S -= p * std::log(p);
    }
    return S;
}

CentralChargeFit central_charge_fit(const std::vector<std::pair<int, double>>& samples) {
    if (samples.size() < 2) throw Error("central charge fit needs at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(samples.size());
    for (auto& [N, S] : samples) {
        double x = std::log(double(N));
        sx += x;
        sy += S;
        sxx += x * x;
        sxy += x * S;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw Error("degenerate fit abscissae");
    double slope = (n * sxy - sx * sy) / denom;
    double offset = (sy - slope * sx) / n;

    CentralChargeFit fit;
    fit.c = 3.0 * slope;
    fit.offset = offset;
    double ss = 0.0;
    for (auto& [N, S] : samples) {
        double pred = slope * std::log(double(N)) + offset;
        ss += (S - pred) * (S - pred);
    }
    fit.rms = std::sqrt(ss / n);
    // flag fits that do not look like a clean logarithmic divergence
    fit.low_confidence = fit.rms > 0.05 * std::max(1.0, std::abs(fit.c)) || fit.c < 0.1;
    return fit;
}

}  // namespace fcat
