#include "fcat/category_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace fcat {

namespace {

struct RawCategory {
    std::string name;
    int nlabels = -1;
    std::vector<Label> labels;
    std::vector<int> mult;  // integer multiplicities
    FSymbolTable f;
    RSymbolTable r;
    bool has_r = false;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

RawCategory parse(std::istream& in, const std::string& origin) {
    RawCategory raw;
    std::string line;
    int lineno = 0;
    auto idx = [&](int a, int b, int c) {
        return (std::size_t(a) * raw.nlabels + b) * raw.nlabels + c;
    };
    auto check_label = [&](int v, int line_no) {
        if (v < 0 || v >= raw.nlabels) fail(origin, line_no, "label index out of range");
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "category") {
            if (!(ls >> raw.name)) fail(origin, lineno, "expected category name");
        } else if (kw == "labels") {
            if (!(ls >> raw.nlabels) || raw.nlabels < 1)
                fail(origin, lineno, "expected positive label count");
            raw.labels.assign(std::size_t(raw.nlabels), Label{});
            raw.mult.assign(std::size_t(raw.nlabels) * raw.nlabels * raw.nlabels, 0);
        } else if (kw == "label") {
            int i, d;
            std::string nm, dualkw;
            if (raw.nlabels < 0) fail(origin, lineno, "label before labels count");
            if (!(ls >> i >> nm >> dualkw >> d) || dualkw != "dual")
                fail(origin, lineno, "expected: label <idx> <name> dual <dualidx>");
            check_label(i, lineno);
            check_label(d, lineno);
            raw.labels[std::size_t(i)] = Label{i, nm, d};
        } else if (kw == "fuse") {
            int a, b, c;
            if (raw.nlabels < 0) fail(origin, lineno, "fuse before labels count");
            if (!(ls >> a >> b >> c)) fail(origin, lineno, "expected: fuse <a> <b> <c>");
            check_label(a, lineno);
            check_label(b, lineno);
            check_label(c, lineno);
            raw.mult[idx(a, b, c)] += 1;
        } else if (kw == "f") {
            int u, a, b, c, q, p;
            double re, im;
            if (raw.nlabels < 0) fail(origin, lineno, "f before labels count");
            if (!(ls >> u >> a >> b >> c >> q >> p >> re >> im))
                fail(origin, lineno, "expected: f <u> <a> <b> <c> <q> <p> <re> <im>");
            for (int v : {u, a, b, c, q, p}) check_label(v, lineno);
            raw.f.set(u, a, b, c, q, p, cplx(re, im));
        } else if (kw == "r") {
            int c, a, b;
            double re, im;
            if (raw.nlabels < 0) fail(origin, lineno, "r before labels count");
            if (!(ls >> c >> a >> b >> re >> im))
                fail(origin, lineno, "expected: r <c> <a> <b> <re> <im>");
            for (int v : {c, a, b}) check_label(v, lineno);
            raw.r.set(c, a, b, cplx(re, im));
            raw.has_r = true;
        } else {
            fail(origin, lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (raw.nlabels < 0) fail(origin, lineno, "missing 'labels' section");
    for (int i = 0; i < raw.nlabels; ++i)
        if (raw.labels[std::size_t(i)].name.empty())
            fail(origin, lineno, "label " + std::to_string(i) + " not declared");
    return raw;
}

}  // namespace

FusionCategory load_category(std::istream& in, const std::string& origin) {
    RawCategory raw = parse(in, origin);
    FusionRules rules(raw.nlabels);
    for (int a = 0; a < raw.nlabels; ++a)
        for (int b = 0; b < raw.nlabels; ++b)
            for (int c = 0; c < raw.nlabels; ++c) {
                int m = raw.mult[(std::size_t(a) * raw.nlabels + b) * raw.nlabels + c];
                if (m > 1)
                    throw ParseError(origin + ": fusion multiplicity N(" + std::to_string(a) +
                                     "," + std::to_string(b) + ")^" + std::to_string(c) + " = " +
                                     std::to_string(m) + " exceeds the multiplicity-free scope");
                if (m) rules.set(a, b, c);
            }
    std::optional<RSymbolTable> r;
    if (raw.has_r) r = std::move(raw.r);
    return FusionCategory(raw.name.empty() ? origin : raw.name, std::move(raw.labels),
                          std::move(rules), std::move(raw.f), std::move(r));
}

FusionCategory load_category(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_category(in, path);
}

FusionRing load_fusion_ring(std::istream& in, const std::string& origin) {
    RawCategory raw = parse(in, origin);
    return FusionRing(raw.name.empty() ? origin : raw.name, std::move(raw.labels),
                      std::move(raw.mult));
}

FusionRing load_fusion_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_fusion_ring(in, path);
}

void save_category(const FusionCategory& cat, std::ostream& out) {
    const int n = cat.num_labels();
    out << "category " << cat.name() << "\n";
    out << "labels " << n << "\n";
    for (const Label& l : cat.labels())
        out << "label " << l.index << " " << l.name << " dual " << l.dual << "\n";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (cat.n(a, b, c)) out << "fuse " << a << " " << b << " " << c << "\n";
    out << std::scientific << std::setprecision(17);
    // deterministic order: iterate index tuples, not hash order
    for (int u = 0; u < n; ++u)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int q = 0; q < n; ++q)
                        for (int p = 0; p < n; ++p) {
                            cplx v = cat.f(u, a, b, c, q, p);
                            if (v == cplx(0.0)) continue;
                            out << "f " << u << " " << a << " " << b << " " << c << " " << q
                                << " " << p << " " << v.real() << " " << v.imag() << "\n";
                        }
    if (cat.has_braiding()) {
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    cplx v = cat.rtable().get(c, a, b);
                    if (v == cplx(0.0)) continue;
                    out << "r " << c << " " << a << " " << b << " " << v.real() << " "
                        << v.imag() << "\n";
                }
    }
}

void save_category(const FusionCategory& cat, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    save_category(cat, out);
}

}  // namespace fcat
