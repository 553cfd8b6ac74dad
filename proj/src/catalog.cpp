#include "fcat/catalog.hpp"

#include <cmath>

#include "fcat/h3_symbols.hpp"

namespace fcat {

namespace {

// Fills every fusion-valid F entry that is still absent with 1. Used by the
// abelian categories and for vacuum-gauge entries.
void fill_trivial(const FusionRules& rules, FSymbolTable& f) {
    const int n = rules.size();
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int q = 0; q < n; ++q) {
                        if (!(rules(b, c, q) && rules(a, q, u))) continue;
                        for (int p = 0; p < n; ++p) {
                            if (!(rules(a, b, p) && rules(p, c, u))) continue;
                            if (f.get(u, a, b, c, q, p) == cplx(0.0))
                                f.set(u, a, b, c, q, p, 1.0);
                        }
                    }
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

FusionCategory make_vec_zp(int p) {
    if (p < 1) throw UnknownName("vec_zp needs p >= 1");
    std::vector<Label> labels;
    for (int a = 0; a < p; ++a) labels.push_back({a, std::to_string(a), (p - a) % p});
    FusionRules rules(p);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) rules.set(a, b, (a + b) % p);
    FSymbolTable f;
    fill_trivial(rules, f);
    return FusionCategory("vec_z" + std::to_string(p), std::move(labels), std::move(rules),
                          std::move(f));
}

FusionCategory make_fibonacci() {
    std::vector<Label> labels = {{0, "1", 0}, {1, "tau", 1}};
    FusionRules rules(2);
    rules.set(0, 0, 0);
    rules.set(0, 1, 1);
    rules.set(1, 0, 1);
    rules.set(1, 1, 0);
    rules.set(1, 1, 1);
    FSymbolTable f;
    const double s = 1.0 / std::sqrt(kPhi);
    f.set(1, 1, 1, 1, 0, 0, 1.0 / kPhi);
    f.set(1, 1, 1, 1, 0, 1, s);
    f.set(1, 1, 1, 1, 1, 0, s);
    f.set(1, 1, 1, 1, 1, 1, -1.0 / kPhi);
    fill_trivial(rules, f);

    RSymbolTable r;
    const double pi = std::acos(-1.0);
    r.set(0, 1, 1, std::polar(1.0, 4.0 * pi / 5.0));
    r.set(1, 1, 1, std::polar(1.0, -3.0 * pi / 5.0));
    r.set(1, 0, 1, 1.0);
    r.set(1, 1, 0, 1.0);
    r.set(0, 0, 0, 1.0);
    return FusionCategory("fibonacci", std::move(labels), std::move(rules), std::move(f),
                          std::move(r));
}

FusionCategory make_ising() {
    // labels: 0 = vacuum, 1 = psi (fermion), 2 = sigma
    std::vector<Label> labels = {{0, "1", 0}, {1, "psi", 1}, {2, "sigma", 2}};
    FusionRules rules(3);
    for (int a = 0; a < 3; ++a) {
        rules.set(0, a, a);
        rules.set(a, 0, a);
    }
    rules.set(1, 1, 0);
    rules.set(1, 2, 2);
    rules.set(2, 1, 2);
    rules.set(2, 2, 0);
    rules.set(2, 2, 1);
    FSymbolTable f;
    const double is2 = 1.0 / std::sqrt(2.0);
    // F_sigma^{sigma sigma sigma}, rows/cols ordered (1, psi)
    f.set(2, 2, 2, 2, 0, 0, is2);
    f.set(2, 2, 2, 2, 0, 1, is2);
    f.set(2, 2, 2, 2, 1, 0, is2);
    f.set(2, 2, 2, 2, 1, 1, -is2);
    f.set(2, 1, 2, 1, 2, 2, -1.0);  // F_sigma^{psi sigma psi}
    f.set(1, 2, 1, 2, 2, 2, -1.0);  // F_psi^{sigma psi sigma}
    fill_trivial(rules, f);

    RSymbolTable r;
    const double pi = std::acos(-1.0);
    r.set(0, 2, 2, std::polar(1.0, -pi / 8.0));
    r.set(1, 2, 2, std::polar(1.0, 3.0 * pi / 8.0));
    r.set(2, 1, 2, std::polar(1.0, -pi / 2.0));
    r.set(2, 2, 1, std::polar(1.0, -pi / 2.0));
    r.set(0, 1, 1, -1.0);
    for (int a = 0; a < 3; ++a) {
        r.set(a, 0, a, 1.0);
        r.set(a, a, 0, 1.0);
    }
    return FusionCategory("ising", std::move(labels), std::move(rules), std::move(f),
                          std::move(r));
}

FusionCategory make_yang_lee() {
    std::vector<Label> labels = {{0, "1", 0}, {1, "tau", 1}};
    FusionRules rules(2);
    rules.set(0, 0, 0);
    rules.set(0, 1, 1);
    rules.set(1, 0, 1);
    rules.set(1, 1, 0);
    rules.set(1, 1, 1);
    FSymbolTable f;
    const double sp = std::sqrt(kPhi);
    f.set(1, 1, 1, 1, 0, 0, -kPhi);
    f.set(1, 1, 1, 1, 0, 1, cplx(0.0, sp));
    f.set(1, 1, 1, 1, 1, 0, cplx(0.0, sp));
    f.set(1, 1, 1, 1, 1, 1, kPhi);
    fill_trivial(rules, f);
    return FusionCategory("yang_lee", std::move(labels), std::move(rules), std::move(f));
}

FusionCategory make_haagerup_h3(int p1, int p2) {
    if ((p1 != 1 && p1 != -1) || (p2 != 1 && p2 != -1))
        throw InvalidSign("haagerup_h3 sign parameters must be +1 or -1");
    // labels: 0 = 1, 1 = a, 2 = a* (Z/3 part), 3 = r, 4 = ar, 5 = a*r
    std::vector<Label> labels = {{0, "1", 0},  {1, "a", 2},  {2, "a*", 1},
                                 {3, "r", 3},  {4, "ar", 4}, {5, "a*r", 5}};
    FusionRules rules(6);
    auto fuse = [&](int a, int b, std::initializer_list<int> cs) {
        for (int c : cs) rules.set(a, b, c);
    };
    const std::initializer_list<int> Z = {3, 4, 5};
    for (int x = 0; x < 6; ++x) fuse(0, x, {x});
    fuse(1, 0, {1}), fuse(1, 1, {2}), fuse(1, 2, {0}), fuse(1, 3, {4}), fuse(1, 4, {5}),
        fuse(1, 5, {3});
    fuse(2, 0, {2}), fuse(2, 1, {0}), fuse(2, 2, {1}), fuse(2, 3, {5}), fuse(2, 4, {3}),
        fuse(2, 5, {4});
    fuse(3, 0, {3}), fuse(3, 1, {5}), fuse(3, 2, {4}), fuse(3, 3, {0}), fuse(3, 3, Z),
        fuse(3, 4, {2}), fuse(3, 4, Z), fuse(3, 5, {1}), fuse(3, 5, Z);
    fuse(4, 0, {4}), fuse(4, 1, {3}), fuse(4, 2, {5}), fuse(4, 3, {1}), fuse(4, 3, Z),
        fuse(4, 4, {0}), fuse(4, 4, Z), fuse(4, 5, {2}), fuse(4, 5, Z);
    fuse(5, 0, {5}), fuse(5, 1, {4}), fuse(5, 2, {3}), fuse(5, 3, {2}), fuse(5, 3, Z),
        fuse(5, 4, {1}), fuse(5, 4, Z), fuse(5, 5, {0}), fuse(5, 5, Z);

    const double s13 = std::sqrt(13.0);
    const double A = (s13 - 3.0) / 2.0;
    const double B = (s13 - 2.0) / 3.0;
    const double C = (s13 + 1.0) / 6.0;
    const double Dp = (5.0 - s13 + std::sqrt(6.0 * (s13 + 1.0))) / 12.0;
    const double Dm = (5.0 - s13 - std::sqrt(6.0 * (s13 + 1.0))) / 12.0;
    auto coef_value = [&](H3Coef c) {
        switch (c) {
            case H3Coef::One: return 1.0;
            case H3Coef::A: return A;
            case H3Coef::SqrtA: return std::sqrt(A);
            case H3Coef::B: return B;
            case H3Coef::C: return C;
            case H3Coef::Dp: return Dp;
            case H3Coef::Dm: return Dm;
        }
        return 0.0;
    };

    FSymbolTable f;
    for (std::size_t i = 0; i < kH3EntryCount; ++i) {
        const H3Entry& e = kH3Entries[i];
        double v = double(e.sign) * coef_value(e.coef);
        if (e.p1pow) v *= p1;
        if (e.p2pow) v *= p2;
        f.set(e.u, e.a, e.b, e.c, e.q, e.p, v);
    }

    std::string name = "haagerup_h3(" + std::string(p1 > 0 ? "+1" : "-1") + "," +
                       std::string(p2 > 0 ? "+1" : "-1") + ")";
    return FusionCategory(std::move(name), std::move(labels), std::move(rules), std::move(f));
}

FusionCategory catalog(const std::string& name, int p1, int p2) {
    if (name.rfind("vec_z", 0) == 0) {
        int p = std::stoi(name.substr(5));
        return make_vec_zp(p);
    }
    if (name == "fibonacci") return make_fibonacci();
    if (name == "ising") return make_ising();
    if (name == "yang_lee") return make_yang_lee();
    if (name == "haagerup_h3") return make_haagerup_h3(p1, p2);
    throw UnknownName("unknown catalog category '" + name + "'");
}

}  // namespace fcat
