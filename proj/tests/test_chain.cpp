#include <doctest.h>

#include <string>
#include <vector>

#include "striphom/basis.hpp"
#include "striphom/chain.hpp"
#include "striphom/complex.hpp"
#include "striphom/symbol.hpp"

using namespace striphom;

namespace {
Symbol sym(const std::string& text) { return Symbol::parse(text); }
}

TEST_CASE("chains fold terms and drop zeros") {
    Chain c = Chain::unit(sym("1 2"), 2);
    c.add(sym("2 1"), 1);
    c.add(sym("1 2"), -2);
    CHECK(c.size() == 1);
    CHECK(c.coeff(sym("2 1")) == 1);
    CHECK(c.coeff(sym("1 2")) == 0);
    c.add(sym("2 1"), -1);
    CHECK(c.empty());
    CHECK(c.dimension() == -1);
    CHECK(c.label_set().empty());
}

TEST_CASE("chains reject mixed dimensions or label sets") {
    Chain c = Chain::unit(sym("1 2"));
    CHECK_THROWS_AS(c.add(sym("1|2"), 1), std::invalid_argument);
    CHECK_THROWS_AS(c.add(sym("1 3"), 1), std::invalid_argument);
    CHECK(c.dimension() == 1);
    CHECK(c.label_set() == std::vector<int>{1, 2});
}

TEST_CASE("maximum returns the greatest term of a cycle") {
    ComplexSpec spec{3, 2, Variant::full};
    Chain z = z_cycle(Symbol::parse("1|3 2", 3), spec);
    CHECK(z.maximum() == sym("1|3 2"));
    CHECK(z.size() == 6);
    Chain empty;
    CHECK_THROWS_AS(empty.maximum(), std::logic_error);
}

TEST_CASE("arithmetic is termwise") {
    Chain a = Chain::unit(sym("1 2"), 1);
    Chain b = Chain::unit(sym("2 1"), 3);
    Chain s = a + b;
    CHECK(s.coeff(sym("1 2")) == 1);
    CHECK(s.coeff(sym("2 1")) == 3);
    CHECK((s - s).empty());
    Chain t = 2 * s;
    CHECK(t.coeff(sym("2 1")) == 6);
    CHECK(boundary(a + b) == boundary(a) + boundary(b));
}

TEST_CASE("boundary is linear") {
    Chain mix = Chain::unit(sym("3 2 1"), 2) + Chain::unit(sym("2 1 3"), -3);
    CHECK(boundary(mix) == 2 * boundary(sym("3 2 1")) - 3 * boundary(sym("2 1 3")));
}

TEST_CASE("relabeling is functorial on symbols and chains") {
    auto phi = [](int v) { return v == 1 ? 2 : v == 2 ? 3 : 5; };
    CHECK(relabel(sym("1|3 2"), phi) == sym("2|5 3"));
    ComplexSpec spec{3, 2, Variant::full};
    Chain z = z_cycle(Symbol::parse("1|3 2", 3), spec);
    Chain moved = relabel(z, phi);
    CHECK(moved.size() == 6);
    CHECK(moved.maximum() == sym("2|5 3"));
    CHECK(boundary(moved).empty());
    // permutation convenience: v -> sigma[v-1]
    Chain swapped = relabel(z, std::vector<int>{1, 3, 2});
    CHECK(swapped.coeff(sym("1|2 3")) == z.coeff(sym("1|3 2")));
    // relabeling commutes with the boundary
    Chain d = boundary(Chain::unit(sym("3 2 1")));
    CHECK(relabel(d, phi) == boundary(relabel(sym("3 2 1"), phi)));
}

TEST_CASE("concatenation multiplies cycles") {
    Chain left;
    left.add(sym("2|5 3"), 1);
    left.add(sym("2|3 5"), 1);  // placeholder two-term factor for bilinearity
    Chain pair = Chain::unit(sym("1 4")) + Chain::unit(sym("4 1"));
    Chain prod = concat(left, pair);
    CHECK(prod.size() == 4);
    CHECK(prod.coeff(sym("2|5 3|1 4")) == 1);
    CHECK(prod.coeff(sym("2|3 5|4 1")) == 1);
    CHECK(concat(Chain(), pair).empty());
    CHECK(concat(pair, Chain()).empty());
    CHECK(concat(sym("2|5 3"), sym("1 4")) == sym("2|5 3|1 4"));
    // label sets must be disjoint
    CHECK_THROWS_AS(concat(sym("1 2"), sym("2 3")), std::invalid_argument);
}

TEST_CASE("the twelve-term product cycle") {
    ComplexSpec spec3{3, 2, Variant::full};
    Chain wheel = relabel(z_cycle(Symbol::parse("1|3 2", 3), spec3),
                          [](int v) { return v == 1 ? 2 : v == 2 ? 3 : 5; });
    Chain pair = Chain::unit(sym("1 4")) + Chain::unit(sym("4 1"));
    Chain prod = concat(wheel, pair);
    CHECK(prod.size() == 12);
    CHECK(boundary(prod).empty());
    CHECK(prod.maximum() == sym("2|5 3|1 4"));
    ComplexSpec spec5{5, 2, Variant::full};
    CHECK(prod == z_cycle(Symbol::parse("2|5 3|1 4", 5), spec5));
}

TEST_CASE("descending projection is a signed chain map") {
    CHECK(desc_project(sym("1 2")) == std::pair<Symbol, int>(sym("2 1"), -1));
    CHECK(desc_project(sym("2 1")) == std::pair<Symbol, int>(sym("2 1"), 1));
    CHECK(desc_project(sym("1 3 2|4 5")).first == sym("3 2 1|5 4"));

    Chain c = Chain::unit(sym("1 2"));
    Chain p = desc_project(c);
    CHECK(p.coeff(sym("2 1")) == -1);
    CHECK(p.size() == 1);

    // chain map: d(p(c)) == p(d(c)) across whole small complexes
    for (ComplexSpec spec : {ComplexSpec{4, 4, Variant::full}, ComplexSpec{5, 3, Variant::full}}) {
        for (int dim = 1; dim <= max_dimension(spec); ++dim) {
            for_each_cell(spec, dim, [&](const Symbol& s) {
                Chain u = Chain::unit(s);
                CHECK(boundary(desc_project(u)) == desc_project(boundary(u)));
            });
        }
    }

    // identity on chains that are already descending
    ComplexSpec dspec{5, 3, Variant::descending};
    for (int dim = 0; dim <= max_dimension(dspec); ++dim) {
        for_each_cell(dspec, dim, [&](const Symbol& s) {
            CHECK(desc_project(Chain::unit(s)) == Chain::unit(s));
        });
    }
}

TEST_CASE("chain JSON round-trips") {
    ComplexSpec spec{3, 2, Variant::full};
    Chain z = z_cycle(Symbol::parse("1|3 2", 3), spec);
    std::string text = chain_to_json(z, 3);
    int n = 0;
    Chain back = chain_from_json(text, &n);
    CHECK(n == 3);
    CHECK(back == z);
    std::string again = chain_to_json(back, n);
    CHECK(again == text);
}

TEST_CASE("chain JSON rejects malformed input") {
    CHECK_THROWS_AS(chain_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(chain_from_json("{\"terms\":[]}"), std::invalid_argument);
    CHECK_THROWS_AS(chain_from_json("{\"n\":2}"), std::invalid_argument);
    // label above the declared level
    CHECK_THROWS_AS(
        chain_from_json("{\"n\":2,\"terms\":[{\"symbol\":\"1 3\",\"coeff\":1}]}"),
        std::invalid_argument);
    // declared dimension contradicting the terms
    CHECK_THROWS_AS(
        chain_from_json("{\"n\":2,\"dim\":0,\"terms\":[{\"symbol\":\"1 2\",\"coeff\":1}]}"),
        std::invalid_argument);
    // mixed dimensions among terms
    CHECK_THROWS_AS(
        chain_from_json("{\"n\":2,\"terms\":[{\"symbol\":\"1 2\",\"coeff\":1},"
                        "{\"symbol\":\"1|2\",\"coeff\":1}]}"),
        std::invalid_argument);
    // the empty chain is fine
    CHECK(chain_from_json("{\"n\":2,\"terms\":[]}").empty());
}
