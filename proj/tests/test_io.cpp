#include <sstream>

#include "doctest.h"
#include "fcat/catalog.hpp"
#include "fcat/category_io.hpp"
#include "fcat/fusion_ring.hpp"

using namespace fcat;

TEST_CASE("save/load round trip is bit identical") {
    for (const char* nm : {"fibonacci", "ising", "haagerup_h3"}) {
        auto cat = catalog(nm);
        std::ostringstream out;
        save_category(cat, out);
        std::istringstream in(out.str());
        auto cat2 = load_category(in, nm);
        CHECK(cat2.num_labels() == cat.num_labels());
        CHECK(cat2.ftable().size() == cat.ftable().size());
        for (const auto& [k, v] : cat.ftable().entries()) {
            CHECK(cat2.ftable().entries().count(k) == 1);
            CHECK(cat2.ftable().entries().at(k) == v);  // exact, full precision on save
        }
        std::ostringstream out2;
        save_category(cat2, out2);
        CHECK(out.str() == out2.str());
        if (cat.has_braiding()) {
            REQUIRE(cat2.has_braiding());
            for (const auto& [k, v] : cat.rtable().entries())
                CHECK(cat2.rtable().entries().at(k) == v);
        }
    }
}

TEST_CASE("missing F entry shows up as a unitarity failure") {
    auto fib = make_fibonacci();
    std::ostringstream out;
    save_category(fib, out);
    // drop the (F_tau^{tautautau})_{00} line
    std::string text = out.str();
    std::string needle = "f 1 1 1 1 0 0";
    auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    auto eol = text.find('\n', pos);
    text.erase(pos, eol - pos + 1);
    std::istringstream in(text);
    auto crippled = load_category(in, "crippled");
    CHECK_FALSE(check_unitarity(crippled).pass);
}

TEST_CASE("multiplicity in a category file is rejected") {
    std::string text =
        "category twice\n"
        "labels 2\n"
        "label 0 1 dual 0\n"
        "label 1 x dual 1\n"
        "fuse 0 0 0\nfuse 0 1 1\nfuse 1 0 1\nfuse 1 1 0\n"
        "fuse 1 1 1\nfuse 1 1 1\n";
    std::istringstream in(text);
    CHECK_THROWS_AS((void)load_category(in, "mem"), ParseError);
    // ... but the same file parses as a fusion ring with N_{xx}^x = 2
    std::istringstream in2(text);
    auto ring = load_fusion_ring(in2, "mem");
    CHECK(ring.n(1, 1, 1) == 2);
    CHECK_FALSE(ring.multiplicity_free());
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream in("category x\nlabels 1\nlabel 0 1 dual 0\nbogus 1 2 3\n");
    try {
        (void)load_category(in, "mem");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("mem:4") != std::string::npos);
    }
}

TEST_CASE("non-associative rules are rejected") {
    // drop tau x tau -> 1 so that (tau tau) tau != tau (tau tau)
    std::istringstream in(
        "category bad\nlabels 2\nlabel 0 1 dual 0\nlabel 1 t dual 1\n"
        "fuse 0 0 0\nfuse 0 1 1\nfuse 1 0 1\nfuse 1 1 1\n");
    CHECK_THROWS_AS((void)load_category(in, "mem"), ConsistencyError);
}
