#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fcat/types.hpp"

namespace fcat {

/// Multiplicity-free fusion rules N_ab^c in {0,1}.
class FusionRules {
  public:
    FusionRules() = default;
    explicit FusionRules(int n) : n_(n), table_(std::size_t(n) * n * n, 0) {}

    int size() const { return n_; }
    int operator()(int a, int b, int c) const { return table_[idx(a, b, c)]; }
    void set(int a, int b, int c, int v = 1) { table_[idx(a, b, c)] = std::uint8_t(v); }

    bool associative() const;
    bool commutative() const;

    /// Labels c with N_ab^c = 1.
    std::vector<int> channels(int a, int b) const;

  private:
    std::size_t idx(int a, int b, int c) const {
        return (std::size_t(a) * n_ + b) * n_ + c;
    }
    int n_ = 0;
    std::vector<std::uint8_t> table_;
};

/// Sparse F-symbol table keyed by (u,a,b,c,q,p). Missing entries are exact zeros.
/// Convention: (F_u^{abc})_{qp} is the coefficient of the right-associated tree
/// with internal label q when expanding the left-associated tree with label p.
class FSymbolTable {
  public:
    cplx get(int u, int a, int b, int c, int q, int p) const {
        auto it = map_.find(pack6(u, a, b, c, q, p));
        return it == map_.end() ? cplx(0.0) : it->second;
    }
    void set(int u, int a, int b, int c, int q, int p, cplx v) {
        map_[pack6(u, a, b, c, q, p)] = v;
    }
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::uint64_t, cplx>& entries() const { return map_; }

  private:
    std::unordered_map<std::uint64_t, cplx> map_;
};

/// Braiding phases R_c^{ab}, multiplicity-free.
class RSymbolTable {
  public:
    cplx get(int c, int a, int b) const {
        auto it = map_.find(pack3(c, a, b));
        return it == map_.end() ? cplx(0.0) : it->second;
    }
    void set(int c, int a, int b, cplx v) { map_[pack3(c, a, b)] = v; }
    std::size_t size() const { return map_.size(); }
    const std::unordered_map<std::uint64_t, cplx>& entries() const { return map_; }

  private:
    std::unordered_map<std::uint64_t, cplx> map_;
};

/// One nonzero scalar per fusion vertex V_c^{ab} (keyed only on valid triples).
struct GaugeTransform {
    std::unordered_map<std::uint64_t, cplx> u;
    cplx at(int a, int b, int c) const {
        auto it = u.find(pack3(a, b, c));
        return it == u.end() ? cplx(1.0) : it->second;
    }
    void set(int a, int b, int c, cplx v) { u[pack3(a, b, c)] = v; }
};

struct CheckReport {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    long count_checked = 0;
    std::string witness;  // worst tuple / counterexample description
};

class FusionCategory {
  public:
    FusionCategory() = default;
    FusionCategory(std::string name, std::vector<Label> labels, FusionRules rules,
                   FSymbolTable f, std::optional<RSymbolTable> r = std::nullopt);

    const std::string& name() const { return name_; }
    int num_labels() const { return int(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int i) const { return labels_[std::size_t(i)]; }
    int dual(int a) const { return labels_[std::size_t(a)].dual; }
    int find_label(const std::string& nm) const;

    const FusionRules& rules() const { return rules_; }
    int n(int a, int b, int c) const { return rules_(a, b, c); }

    const FSymbolTable& ftable() const { return f_; }
    cplx f(int u, int a, int b, int c, int q, int p) const { return f_.get(u, a, b, c, q, p); }

    bool has_braiding() const { return r_.has_value(); }
    const RSymbolTable& rtable() const;
    cplx r(int c, int a, int b) const { return rtable().get(c, a, b); }

    double qdim(int a) const { return qdim_[std::size_t(a)]; }
    const std::vector<double>& qdims() const { return qdim_; }
    double total_dim_sq() const { return total_dim_sq_; }

    // Column label p is valid for F_u^{abc} iff N_ab^p N_pc^u > 0; row label q
    // iff N_bc^q N_aq^u > 0.
    bool valid_col(int u, int a, int b, int c, int p) const {
        return n(a, b, p) && n(p, c, u);
    }
    bool valid_row(int u, int a, int b, int c, int q) const {
        return n(b, c, q) && n(a, q, u);
    }
    std::vector<int> valid_cols(int u, int a, int b, int c) const;
    std::vector<int> valid_rows(int u, int a, int b, int c) const;

    /// Whether the stricter normalisation (F_i^{ijj*})_{0k} = sqrt(d_k/(d_i d_j))
    /// holds with the exact positive sign (recorded at construction).
    bool strict_f_normalisation() const { return strict_norm_; }

  private:
    std::string name_;
    std::vector<Label> labels_;
    FusionRules rules_;
    FSymbolTable f_;
    std::optional<RSymbolTable> r_;
    std::vector<double> qdim_;
    double total_dim_sq_ = 0.0;
    bool strict_norm_ = false;
};

double quantum_dimension(const FusionCategory& cat, int a);
cplx frobenius_schur(const FusionCategory& cat, int a);

/// Vertical line bending coefficients (unit modulus on valid triples).
cplx bend_A(const FusionCategory& cat, int a, int b, int c);
cplx bend_B(const FusionCategory& cat, int a, int b, int c);
inline cplx bend_A_conj(const FusionCategory& cat, int a, int b, int c) {
    return std::conj(bend_A(cat, a, b, c));
}
inline cplx bend_B_conj(const FusionCategory& cat, int a, int b, int c) {
    return std::conj(bend_B(cat, a, b, c));
}

CheckReport check_pentagon(const FusionCategory& cat, double tol = 1e-9, int threads = 1);
CheckReport check_unitarity(const FusionCategory& cat, double tol = 1e-9);
CheckReport check_hexagon(const FusionCategory& cat, double tol = 1e-9);
CheckReport check_dim_identity(const FusionCategory& cat, double tol = 1e-9);
CheckReport check_dual_involution(const FusionCategory& cat);
CheckReport check_n_identities(const FusionCategory& cat);

struct TetrahedralCounterexample {
    int i, j, k, l, n, m;
    // status per equality of the symmetry condition: 0 ok, 1 invalid entry, 2 value mismatch
    int eq2 = 0, eq3 = 0, eq4 = 0;
};

struct TetrahedralReport {
    bool pass = false;
    long count_checked = 0;
    double max_residual = 0.0;
    std::vector<TetrahedralCounterexample> counterexamples;
};

TetrahedralReport check_tetrahedral(const FusionCategory& cat, double tol = 1e-9);

FusionCategory apply_gauge(const FusionCategory& cat, const GaugeTransform& g);

}  // namespace fcat
