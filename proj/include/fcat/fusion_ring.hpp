#pragma once

#include <string>
#include <vector>

#include "fcat/category.hpp"

namespace fcat {

/// Fusion ring with integer multiplicities. Enough structure for algebra-object
/// candidates and principal graphs; no F-symbols attached.
class FusionRing {
  public:
    FusionRing() = default;
    FusionRing(std::string name, std::vector<Label> labels, std::vector<int> mult);

    static FusionRing from_category(const FusionCategory& cat);

    const std::string& name() const { return name_; }
    int num_labels() const { return int(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int i) const { return labels_[std::size_t(i)]; }
    int dual(int a) const { return labels_[std::size_t(a)].dual; }
    int find_label(const std::string& nm) const;

    int n(int a, int b, int c) const { return mult_[idx(a, b, c)]; }
    bool multiplicity_free() const;

    /// Perron-Frobenius dimensions (largest eigenvalue of the fusion matrices).
    const std::vector<double>& qdims() const { return qdim_; }
    double qdim(int a) const { return qdim_[std::size_t(a)]; }

  private:
    std::size_t idx(int a, int b, int c) const {
        return (std::size_t(a) * labels_.size() + std::size_t(b)) * labels_.size() +
               std::size_t(c);
    }
    std::string name_;
    std::vector<Label> labels_;
    std::vector<int> mult_;
    std::vector<double> qdim_;
};

}  // namespace fcat
