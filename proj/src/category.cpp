#include "fcat/category.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace fcat {

bool FusionRules::associative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) {
                    int lhs = 0, rhs = 0;
                    for (int e = 0; e < n_; ++e) lhs += (*this)(a, b, e) * (*this)(e, c, d);
                    for (int f = 0; f < n_; ++f) rhs += (*this)(a, f, d) * (*this)(b, c, f);
                    if (lhs != rhs) return false;
                }
    return true;
}

bool FusionRules::commutative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if ((*this)(a, b, c) != (*this)(b, a, c)) return false;
    return true;
}

std::vector<int> FusionRules::channels(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < n_; ++c)
        if ((*this)(a, b, c)) out.push_back(c);
    return out;
}

FusionCategory::FusionCategory(std::string name, std::vector<Label> labels, FusionRules rules,
                               FSymbolTable f, std::optional<RSymbolTable> r)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      rules_(std::move(rules)),
      f_(std::move(f)),
      r_(std::move(r)) {
    const int n = int(labels_.size());
    for (int a = 0; a < n; ++a) {
        if (labels_[std::size_t(labels_[std::size_t(a)].dual)].dual != a)
            throw ConsistencyError("dual involution violated for label " +
                                   labels_[std::size_t(a)].name);
    }
    if (labels_[0].dual != 0) throw ConsistencyError("vacuum must be self-dual");
    if (!rules_.associative()) throw ConsistencyError("fusion rules are not associative");

    qdim_.assign(std::size_t(n), 1.0);
    for (int a = 0; a < n; ++a) qdim_[std::size_t(a)] = quantum_dimension(*this, a);
    total_dim_sq_ = 0.0;
    for (double d : qdim_) total_dim_sq_ += d * d;

    // Record whether the strict (signed) normalisation condition holds.
    strict_norm_ = true;
    for (int i = 0; i < n && strict_norm_; ++i)
        for (int j = 0; j < n && strict_norm_; ++j) {
            int js = dual(j);
            for (int k = 0; k < n; ++k) {
                if (!valid_row(i, i, j, js, 0) || !valid_col(i, i, j, js, k)) continue;
                cplx v = this->f(i, i, j, js, 0, k);
                double want = std::sqrt(qdim_[std::size_t(k)] /
                                        (qdim_[std::size_t(i)] * qdim_[std::size_t(j)]));
                if (std::abs(v - want) > 1e-9) {
                    strict_norm_ = false;
                    break;
                }
            }
        }
}

int FusionCategory::find_label(const std::string& nm) const {
    for (const Label& l : labels_)
        if (l.name == nm) return l.index;
    throw UnknownName("no label named '" + nm + "' in category " + name_);
}

const RSymbolTable& FusionCategory::rtable() const {
    if (!r_) throw NoBraiding("category " + name_ + " has no R-symbols");
    return *r_;
}

std::vector<int> FusionCategory::valid_cols(int u, int a, int b, int c) const {
    std::vector<int> out;
    for (int p = 0; p < num_labels(); ++p)
        if (valid_col(u, a, b, c, p)) out.push_back(p);
    return out;
}

std::vector<int> FusionCategory::valid_rows(int u, int a, int b, int c) const {
    std::vector<int> out;
    for (int q = 0; q < num_labels(); ++q)
        if (valid_row(u, a, b, c, q)) out.push_back(q);
    return out;
}

double quantum_dimension(const FusionCategory& cat, int a) {
    const int as = cat.dual(a);
    cplx v = cat.f(a, a, as, a, 0, 0);
    if (std::abs(v) == 0.0)
        throw MissingFEntry("missing or zero F entry (F_a^{a a* a})_{00} for label " +
                            cat.label(a).name);
    return 1.0 / std::abs(v);
}

cplx frobenius_schur(const FusionCategory& cat, int a) {
    return cat.qdim(a) * cat.f(a, a, cat.dual(a), a, 0, 0);
}

cplx bend_A(const FusionCategory& cat, int a, int b, int c) {
    if (!cat.n(a, b, c))
        throw InvalidTriple("bend_A: N_ab^c = 0 for (" + cat.label(a).name + "," +
                            cat.label(b).name + "," + cat.label(c).name + ")");
    double pre = std::sqrt(cat.qdim(a) * cat.qdim(b) / cat.qdim(c));
    return pre * std::conj(cat.f(b, cat.dual(a), a, b, c, 0));
}

cplx bend_B(const FusionCategory& cat, int a, int b, int c) {
    if (!cat.n(a, b, c))
        throw InvalidTriple("bend_B: N_ab^c = 0 for (" + cat.label(a).name + "," +
                            cat.label(b).name + "," + cat.label(c).name + ")");
    double pre = std::sqrt(cat.qdim(a) * cat.qdim(b) / cat.qdim(c));
    return pre * cat.f(a, a, b, cat.dual(b), 0, c);
}

namespace {

std::string tuple_str(const FusionCategory& cat, std::initializer_list<int> t) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : t) {
        if (!first) os << ",";
        os << cat.label(x).name;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace

CheckReport check_pentagon(const FusionCategory& cat, double tol, int threads) {
    const int n = cat.num_labels();
    auto worker = [&](int a0, int a1) {
        CheckReport rep;
        for (int a = a0; a < a1; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int u = 0; u < n; ++u)
                            for (int p : cat.rules().channels(a, b)) {
                                for (int r : cat.rules().channels(c, d))
                                    for (int q = 0; q < n; ++q) {
                                        if (!cat.n(q, d, u)) continue;
                                        for (int s = 0; s < n; ++s) {
                                            if (!cat.n(a, s, u)) continue;
                                            cplx lhs = cat.f(u, a, b, r, s, p) *
                                                       cat.f(u, p, c, d, r, q);
                                            cplx rhs = 0.0;
                                            for (int t = 0; t < n; ++t)
                                                rhs += cat.f(s, b, c, d, r, t) *
                                                       cat.f(u, a, t, d, s, q) *
                                                       cat.f(q, a, b, c, t, p);
                                            double res = std::abs(lhs - rhs);
                                            ++rep.count_checked;
                                            if (res > rep.max_residual) {
                                                rep.max_residual = res;
                                                rep.witness = tuple_str(
                                                    cat, {a, b, c, d, u, p, q, r, s});
                                            }
                                        }
                                    }
                            }
        return rep;
    };

    CheckReport rep;
    rep.name = "pentagon";
    if (threads <= 1 || n < 2) {
        rep = worker(0, n);
        rep.name = "pentagon";
    } else {
        int nt = std::min(threads, n);
        std::vector<std::future<CheckReport>> futs;
        for (int t = 0; t < nt; ++t) {
            int a0 = n * t / nt, a1 = n * (t + 1) / nt;
            futs.push_back(std::async(std::launch::async, worker, a0, a1));
        }
        for (auto& f : futs) {
            CheckReport part = f.get();
            rep.count_checked += part.count_checked;
            if (part.max_residual > rep.max_residual) {
                rep.max_residual = part.max_residual;
                rep.witness = part.witness;
            }
        }
    }
    rep.pass = rep.max_residual < tol;
    return rep;
}

CheckReport check_unitarity(const FusionCategory& cat, double tol) {
    CheckReport rep;
    rep.name = "unitarity";
    const int n = cat.num_labels();
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    auto rows = cat.valid_rows(u, a, b, c);
                    auto cols = cat.valid_cols(u, a, b, c);
                    if (rows.empty() && cols.empty()) continue;
                    ++rep.count_checked;
                    if (rows.size() != cols.size()) {
                        rep.max_residual = std::max(rep.max_residual, 1.0);
                        rep.witness = "non-square block F" + tuple_str(cat, {u, a, b, c});
                        continue;
                    }
                    const std::size_t m = rows.size();
                    double worst = 0.0;
                    // F F^dagger and F^dagger F against identity
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < m; ++j) {
                            cplx s1 = 0.0, s2 = 0.0;
                            for (std::size_t k = 0; k < m; ++k) {
                                s1 += cat.f(u, a, b, c, rows[i], cols[k]) *
                                      std::conj(cat.f(u, a, b, c, rows[j], cols[k]));
                                s2 += std::conj(cat.f(u, a, b, c, rows[k], cols[i])) *
                                      cat.f(u, a, b, c, rows[k], cols[j]);
                            }
                            cplx id = (i == j) ? 1.0 : 0.0;
                            worst = std::max(worst, std::abs(s1 - id));
                            worst = std::max(worst, std::abs(s2 - id));
                        }
                    if (worst > rep.max_residual) {
                        rep.max_residual = worst;
                        rep.witness = "block F" + tuple_str(cat, {u, a, b, c});
                    }
                }
    rep.pass = rep.max_residual < tol;
    return rep;
}

CheckReport check_hexagon(const FusionCategory& cat, double tol) {
    CheckReport rep;
    rep.name = "hexagon";
    const RSymbolTable& R = cat.rtable();
    const int n = cat.num_labels();
    // Both hexagon identities; subscripts on F written as (left label, right label)
    // so fget(u,x,y,z,row,col) appears transposed relative to the printed form.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int u = 0; u < n; ++u)
                    for (int p = 0; p < n; ++p) {
                        if (!cat.n(a, c, p)) continue;
                        for (int q = 0; q < n; ++q) {
                            if (!cat.n(c, b, q)) continue;
                            cplx lhs1 = R.get(p, c, a) * cat.f(u, a, c, b, q, p) * R.get(q, c, b);
                            cplx rhs1 = 0.0;
                            cplx lhs2 = 0.0, rhs2 = 0.0;
                            {
                                cplx rp = R.get(p, a, c), rq = R.get(q, b, c);
                                cplx f = cat.f(u, a, c, b, q, p);
                                if (std::abs(rp) > 0 && std::abs(rq) > 0)
                                    lhs2 = f / (rp * rq);
                            }
                            for (int f = 0; f < n; ++f) {
                                if (!cat.n(a, b, f)) continue;
                                cplx f1 = cat.f(u, c, a, b, f, p);
                                cplx f2 = cat.f(u, a, b, c, q, f);
                                rhs1 += f1 * R.get(u, c, f) * f2;
                                cplx rf = R.get(u, f, c);
                                if (std::abs(rf) > 0) rhs2 += f1 * f2 / rf;
                            }
                            double res = std::max(std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2));
                            ++rep.count_checked;
                            if (res > rep.max_residual) {
                                rep.max_residual = res;
                                rep.witness = tuple_str(cat, {a, b, c, u, p, q});
                            }
                        }
                    }
    rep.pass = rep.max_residual < tol;
    return rep;
}

CheckReport check_dim_identity(const FusionCategory& cat, double tol) {
    CheckReport rep;
    rep.name = "dim-identity";
    const int n = cat.num_labels();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double sum = 0.0;
            for (int c = 0; c < n; ++c)
                if (cat.n(a, b, c)) sum += cat.qdim(c);
            double res = std::abs(cat.qdim(a) * cat.qdim(b) - sum);
            ++rep.count_checked;
            if (res > rep.max_residual) {
                rep.max_residual = res;
                rep.witness = tuple_str(cat, {a, b});
            }
        }
    rep.pass = rep.max_residual < tol;
    return rep;
}

CheckReport check_dual_involution(const FusionCategory& cat) {
    CheckReport rep;
    rep.name = "dual-involution";
    rep.pass = true;
    for (int a = 0; a < cat.num_labels(); ++a) {
        ++rep.count_checked;
        if (cat.dual(cat.dual(a)) != a) {
            rep.pass = false;
            rep.max_residual = 1.0;
            rep.witness = cat.label(a).name;
        }
    }
    if (cat.dual(0) != 0) {
        rep.pass = false;
        rep.witness = "vacuum not self-dual";
    }
    return rep;
}

CheckReport check_n_identities(const FusionCategory& cat) {
    CheckReport rep;
    rep.name = "n-identities";
    rep.pass = true;
    const int n = cat.num_labels();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int as = cat.dual(a), bs = cat.dual(b), cs = cat.dual(c);
                int v = cat.n(a, b, c);
                ++rep.count_checked;
                if (cat.n(as, c, b) != v || cat.n(b, cs, as) != v || cat.n(bs, as, cs) != v ||
                    cat.n(cs, a, bs) != v || cat.n(c, bs, a) != v) {
                    rep.pass = false;
                    rep.max_residual = 1.0;
                    rep.witness = tuple_str(cat, {a, b, c});
                }
            }
    return rep;
}

TetrahedralReport check_tetrahedral(const FusionCategory& cat, double tol) {
    TetrahedralReport rep;
    const int nn = cat.num_labels();
    double maxres = 0.0;
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j)
            for (int k = 0; k < nn; ++k)
                for (int l = 0; l < nn; ++l)
                    for (int n = 0; n < nn; ++n) {
                        if (!cat.valid_row(i, j, k, l, n)) continue;
                        for (int m = 0; m < nn; ++m) {
                            if (!cat.valid_col(i, j, k, l, m)) continue;
                            ++rep.count_checked;
                            cplx base = cat.f(i, j, k, l, n, m);
                            TetrahedralCounterexample ce{i, j, k, l, n, m, 0, 0, 0};
                            int is = cat.dual(i), js = cat.dual(j), ls = cat.dual(l);
                            int ms = cat.dual(m), ns = cat.dual(n);

                            auto check = [&](int fu, int fa, int fb, int fc, int fq, int fp,
                                             double pre, int& status) {
                                if (!cat.valid_row(fu, fa, fb, fc, fq) ||
                                    !cat.valid_col(fu, fa, fb, fc, fp)) {
                                    status = 1;
                                    return;
                                }
                                double res =
                                    std::abs(base - pre * cat.f(fu, fa, fb, fc, fq, fp));
                                maxres = std::max(maxres, res);
                                if (res > tol) status = 2;
                            };
                            check(ls, k, j, is, ns, m, 1.0, ce.eq2);
                            check(js, is, l, k, n, ms, 1.0, ce.eq3);
                            double pre4 = std::sqrt(cat.qdim(m) * cat.qdim(n) /
                                                    (cat.qdim(l) * cat.qdim(j)));
                            check(is, ms, k, ns, ls, js, pre4, ce.eq4);

                            if (ce.eq2 || ce.eq3 || ce.eq4)
                                rep.counterexamples.push_back(ce);
                        }
                    }
    rep.max_residual = maxres;
    rep.pass = rep.counterexamples.empty();
    return rep;
}

FusionCategory apply_gauge(const FusionCategory& cat, const GaugeTransform& g) {
    const int n = cat.num_labels();
    for (const auto& [key, val] : g.u)
        if (std::abs(val) == 0.0) throw ZeroGauge("gauge transform contains a zero scalar");

    FSymbolTable f2;
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int q : cat.valid_rows(u, a, b, c))
                        for (int p : cat.valid_cols(u, a, b, c)) {
                            cplx v = cat.f(u, a, b, c, q, p);
                            cplx factor = g.at(a, q, u) * g.at(b, c, q) /
                                          (g.at(a, b, p) * g.at(p, c, u));
                            f2.set(u, a, b, c, q, p, factor * v);
                        }

    std::optional<RSymbolTable> r2;
    if (cat.has_braiding()) r2 = cat.rtable();
    return FusionCategory(cat.name(), cat.labels(), cat.rules(), std::move(f2), std::move(r2));
}

}  // namespace fcat
