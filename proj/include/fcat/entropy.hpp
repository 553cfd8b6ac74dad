#pragma once

#include <Eigen/Dense>

#include "fcat/chain.hpp"

namespace fcat {

/// Von Neumann entanglement entropy (natural log) of the ground-state vector
/// across a cut after `cut` stored labels: left block = labels [0, cut),
/// right block = the rest.
double entanglement_entropy(const Eigen::VectorXcd& state, const ChainBasis& basis, int cut);

/// Entropy of the same state embedded in the full tensor-product space
/// (independent cross-check path; reduced density matrix eigenvalues).
double entanglement_entropy_embedded(const Eigen::VectorXcd& state, const ChainBasis& basis,
                                     int cut, int num_labels);

struct CentralChargeFit {
    double c = 0.0;
    double offset = 0.0;
    double rms = 0.0;
    bool low_confidence = false;
};

/// Least-squares fit of S = (c/3) ln N + k over (N, S) samples.
CentralChargeFit central_charge_fit(const std::vector<std::pair<int, double>>& samples);

}  // namespace fcat
