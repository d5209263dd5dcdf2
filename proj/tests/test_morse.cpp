#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "striphom/complex.hpp"
#include "striphom/morse.hpp"
#include "striphom/symbol.hpp"

using namespace striphom;

namespace {
Symbol sym(const std::string& text) { return Symbol::parse(text); }
}

TEST_CASE("followers need a singleton below the whole block before them") {
    Symbol s = sym("1|9 6 4|7|5|8 3 2");
    CHECK(!is_follower(s, 0));   // first block
    CHECK(is_follower(s, 1));    // 1 < min{9,6,4}
    CHECK(!is_follower(s, 2));   // previous block not a singleton
    CHECK(!is_follower(s, 3));   // 7 > 5
    CHECK(!is_follower(s, 4));   // 5 > min{8,3,2} = 2
    CHECK(is_follower(sym("2|8 5 3"), 1));
}

TEST_CASE("keys list (n+1-first or 0, size) per block") {
    CHECK(key(sym("2 1"), 2).str() == "(1, 2)");
    CHECK(key(sym("1 2"), 2).str() == "(2, 2)");
    CHECK(key(sym("2|1"), 2).str() == "(1, 1; 2, 1)");
    CHECK(key(sym("1|2"), 2).str() == "(2, 1; 0, 1)");
    CHECK(key(sym("6|2|1 3|4|9 8|5|7"), 9).str() == "(4, 1; 8, 1; 9, 2; 6, 1; 0, 2; 5, 1; 0, 1)");
    // the follower rule zeroes the entry of "9" after the smaller singleton "8"
    CHECK(key(sym("6|2|1 3|4|8|9|7 5"), 9).str() == "(4, 1; 8, 1; 9, 2; 6, 1; 0, 1; 0, 1; 3, 2)");
}

TEST_CASE("the total order sorts the level-2 cells as expected") {
    CHECK(precedes(sym("2|1"), sym("2 1")));
    CHECK(precedes(sym("2 1"), sym("1|2")));
    CHECK(precedes(sym("1|2"), sym("1 2")));
    CHECK(!precedes(sym("1 2"), sym("2|1")));
    CHECK(symbol_compare(sym("1 2"), sym("1 2")) == std::strong_ordering::equal);
}

TEST_CASE("equal keys break ties toward ascending content") {
    // Follower blocks zero out their first-label entry, so cells that differ
    // only inside follower blocks share a key; the tie-break must rank the
    // ascending variant higher, or critical cells would not be the maxima of
    // their own basis cycles.
    CHECK(precedes(sym("1|3 2"), sym("1|2 3")));
    CHECK(!precedes(sym("1|2 3"), sym("1|3 2")));
    CHECK(precedes(sym("1|5 2|4 3"), sym("1|2 5|4 3")));  // tied keys
    CHECK(precedes(sym("1|2 5|4 3"), sym("1|5 2|3 4")));  // keys differ at block 3
    CHECK(precedes(sym("1|5 2|3 4"), sym("1|2 5|3 4")));  // tied keys
    // same shape with distinct follower contents rather than a swap
    CHECK(precedes(sym("1|4 2|5 3"), sym("1|3 2|5 4")));
}

TEST_CASE("the order is total and consistent on whole complexes") {
    for (ComplexSpec spec : {ComplexSpec{4, 2, Variant::full},
                             ComplexSpec{4, 3, Variant::descending}}) {
        std::vector<Symbol> all = enumerate_cells(spec);
        // strict order within each dimension slice, antisymmetry overall
        std::map<int, std::vector<Symbol>> by_dim;
        for (const Symbol& s : all) by_dim[s.dimension()].push_back(s);
        for (auto& [d, cells] : by_dim) {
            for (std::size_t i = 1; i < cells.size(); ++i)
                CHECK(precedes(cells[i - 1], cells[i]));
        }
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                auto ab = symbol_compare(all[i], all[j]);
                auto ba = symbol_compare(all[j], all[i]);
                CHECK(ab != std::strong_ordering::equal);
                CHECK((ab < 0) == (ba > 0));
            }
    }
}

TEST_CASE("level-2 pairing: [1|2, 2 1] with 2|1 and 1 2 critical") {
    ComplexSpec spec{2, 2, Variant::full};
    MatchState up = match_state(sym("1|2"), spec);
    CHECK(up.kind == MatchKind::paired_up);
    CHECK(up.partner.value() == sym("2 1"));
    MatchState down = match_state(sym("2 1"), spec);
    CHECK(down.kind == MatchKind::paired_down);
    CHECK(down.partner.value() == sym("1|2"));
    CHECK(match_state(sym("2|1"), spec).kind == MatchKind::critical);
    CHECK(match_state(sym("1 2"), spec).kind == MatchKind::critical);
}

TEST_CASE("hexagon pairing: desc(3,2) has critical cells 3|2|1 and 1|3 2") {
    ComplexSpec spec{3, 2, Variant::descending};
    std::set<std::string> crit;
    int paired = 0;
    for (const Symbol& s : enumerate_cells(spec)) {
        MatchState st = match_state(s, spec);
        if (st.kind == MatchKind::critical) {
            crit.insert(s.str());
        } else {
            ++paired;
            // involution: the partner points back
            MatchState back = match_state(*st.partner, spec);
            CHECK(back.partner.value() == s);
            CHECK((st.kind == MatchKind::paired_up) == (back.kind == MatchKind::paired_down));
        }
    }
    CHECK(crit == std::set<std::string>{"3|2|1", "1|3 2"});
    CHECK(paired == 10);  // 12 cells, 2 critical
}

TEST_CASE("criticality predicate matches the gradient field where defined") {
    for (ComplexSpec spec : {ComplexSpec{4, 2, Variant::full},
                             ComplexSpec{5, 2, Variant::full},
                             ComplexSpec{4, 2, Variant::descending},
                             ComplexSpec{4, 3, Variant::descending},
                             ComplexSpec{5, 3, Variant::descending},
                             ComplexSpec{6, 4, Variant::descending}}) {
        for (const Symbol& s : enumerate_cells(spec)) {
            CHECK(is_critical(s, spec) == (match_state(s, spec).kind == MatchKind::critical));
        }
    }
}

TEST_CASE("no closed form is offered for wide full complexes") {
    ComplexSpec spec{3, 3, Variant::full};
    CHECK_THROWS_AS(is_critical(sym("1 2 3"), spec), std::logic_error);
    // the gradient field itself still works there
    CHECK(match_state(sym("3|2|1"), spec).kind == MatchKind::critical);
}

TEST_CASE("critical cell counts match the frozen goldens") {
    CHECK(critical_counts({2, 2, Variant::full}) == std::vector<long long>{1, 1});
    CHECK(critical_counts({3, 2, Variant::full}) == std::vector<long long>{1, 7});
    CHECK(critical_counts({3, 2, Variant::descending}) == std::vector<long long>{1, 1});
    // no-4-equal space on seven labels: only H_0 and H_3 live, rank 71 on top
    CHECK(critical_counts({7, 4, Variant::descending}) ==
          std::vector<long long>{1, 0, 0, 71, 0, 0});
}

TEST_CASE("critical cells come back sorted and critical") {
    ComplexSpec spec{4, 2, Variant::full};
    for (int dim = 0; dim <= max_dimension(spec); ++dim) {
        std::vector<Symbol> cells = critical_cells(spec, dim);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            CHECK(is_critical(cells[i], spec));
            if (i) CHECK(precedes(cells[i - 1], cells[i]));
        }
    }
}

TEST_CASE("the gradient field audit passes on small complexes") {
    for (ComplexSpec spec : {ComplexSpec{2, 2, Variant::full},
                             ComplexSpec{3, 2, Variant::full},
                             ComplexSpec{4, 2, Variant::full},
                             ComplexSpec{3, 3, Variant::full},
                             ComplexSpec{4, 3, Variant::full},
                             ComplexSpec{3, 2, Variant::descending},
                             ComplexSpec{5, 2, Variant::descending},
                             ComplexSpec{5, 3, Variant::descending},
                             ComplexSpec{6, 4, Variant::descending}}) {
        Report rep = verify_acyclic(spec);
        CHECK(rep.ok());
        if (!rep.ok())
            for (const std::string& msg : rep.issues) MESSAGE(msg);
    }
}

TEST_CASE("pairing in desc(9,3): the least block element splits off") {
    ComplexSpec spec{9, 3, Variant::descending};
    Symbol f = Symbol::parse("1|9 6 4|7|5|2|8 3", 9);
    Symbol g = Symbol::parse("1|9 6 4|7|5|8 3 2", 9);
    MatchState fs = match_state(f, spec);
    CHECK(fs.kind == MatchKind::paired_up);
    CHECK(fs.partner.value() == g);
    MatchState gs = match_state(g, spec);
    CHECK(gs.kind == MatchKind::paired_down);
    CHECK(gs.partner.value() == f);
    CHECK(!is_critical(g, spec));
    CHECK(is_critical(Symbol::parse("1|9 6 4|7|2|8 5 3", 9), spec));
}

TEST_CASE("match states on a local window of the width-2 level-9 complex") {
    ComplexSpec spec{9, 2, Variant::full};
    Symbol f = Symbol::parse("6|2|1 3|4|9 8|5|7", 9);
    Symbol g = Symbol::parse("6|2|1 3|4|9 8|7 5", 9);
    MatchState fs = match_state(f, spec);
    CHECK(fs.kind == MatchKind::paired_up);
    CHECK(fs.partner.value() == g);
    MatchState gs = match_state(g, spec);
    CHECK(gs.kind == MatchKind::paired_down);
    CHECK(gs.partner.value() == f);
}
