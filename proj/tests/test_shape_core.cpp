#include <algorithm>
#include <set>

#include "doctest.h"
#include "rimhook/partition.hpp"
#include "rimhook/rim_hook.hpp"
#include "support.hpp"

using namespace rimhook;
using testsupport::partitions_in_box;

namespace {

std::vector<Cell> sorted_cells(const Partition& p, bool (*less)(Cell, Cell)) {
    std::vector<Cell> cells = p.cells();
    std::sort(cells.begin(), cells.end(), less);
    return cells;
}

}  // namespace

TEST_CASE("cell neighbours and content") {
    const Cell u{2, 3};
    CHECK(u.north() == Cell{1, 3});
    CHECK(u.east() == Cell{2, 4});
    CHECK(u.south() == Cell{3, 3});
    CHECK(u.west() == Cell{2, 2});
    CHECK(u.content() == 1);
    CHECK(Cell{3, 1}.content() == -2);
    CHECK(to_string(u) == "2,3");
}

TEST_CASE("partition construction and parsing") {
    const Partition p({4, 3, 1});
    CHECK(p.length() == 3);
    CHECK(p.cell_count() == 8);
    CHECK(p.part(2) == 3);
    CHECK(p.part(4) == 0);
    CHECK(p.contains({2, 3}));
    CHECK(!p.contains({2, 4}));
    CHECK(!p.contains({0, 1}));
    CHECK(p.str() == "4,3,1");

    CHECK(Partition::parse("4,3,1") == p);
    CHECK(Partition::parse(" 4 , 3 , 1 ") == p);
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("-") == Partition());
    CHECK_THROWS_AS(Partition::parse("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,-1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,"), std::invalid_argument);
}

TEST_CASE("empty partition") {
    const Partition e;
    CHECK(e.empty());
    CHECK(e.cell_count() == 0);
    CHECK(e.cells().empty());
    CHECK(e.conjugate() == e);
    CHECK(all_rim_hooks(e).empty());
    CHECK(e.inner_corners().empty());
    CHECK(e.outer_corners().empty());
}

TEST_CASE("conjugate") {
    CHECK(Partition({4, 3, 1}).conjugate() == Partition({3, 2, 2, 1}));
    CHECK(Partition({1}).conjugate() == Partition({1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));

    // Cross-check against the cell-by-cell transpose on every small shape.
    for (const Partition& p : partitions_in_box(5, 5)) {
        const Partition q = p.conjugate();
        std::set<Cell> transposed;
        for (Cell u : p.cells()) transposed.insert({u.col, u.row});
        const std::vector<Cell> q_cells = q.cells();
        CHECK(std::set<Cell>(q_cells.begin(), q_cells.end()) == transposed);
        CHECK(q.conjugate() == p);
        CHECK(q.cell_count() == p.cell_count());
    }
}

TEST_CASE("hook lengths and hook cells") {
    const Partition p({4, 3, 1});
    CHECK(p.hook_length({1, 2}) == 4);
    CHECK(p.hook_length({1, 1}) == 6);
    CHECK(Partition({1}).hook_length({1, 1}) == 1);

    const std::vector<Cell> h12 = p.hook_cells({1, 2});
    CHECK(std::set<Cell>(h12.begin(), h12.end()) ==
          std::set<Cell>{{1, 2}, {1, 3}, {1, 4}, {2, 2}});
    CHECK(Partition({1}).hook_cells({1, 1}) == std::vector<Cell>{{1, 1}});
    const std::vector<Cell> sq = Partition({2, 2}).hook_cells({1, 1});
    CHECK(std::set<Cell>(sq.begin(), sq.end()) == std::set<Cell>{{1, 1}, {1, 2}, {2, 1}});

    CHECK_THROWS_AS(p.hook_length({2, 4}), std::out_of_range);
    CHECK_THROWS_AS(p.hook_cells({4, 1}), std::out_of_range);

    // The arm-leg scan and the part/conjugate formula must agree everywhere.
    for (const Partition& q : partitions_in_box(5, 5)) {
        for (Cell u : q.cells()) {
            CHECK(static_cast<int>(q.hook_cells(u).size()) == q.hook_length(u));
        }
    }
}

TEST_CASE("reverse lexicographic and content orders on (4,3,1)") {
    const Partition p({4, 3, 1});
    const std::vector<Cell> rev_lex = sorted_cells(p, rev_lex_less);
    CHECK(rev_lex == std::vector<Cell>{{1, 4}, {2, 3}, {1, 3}, {2, 2},
                                       {1, 2}, {3, 1}, {2, 1}, {1, 1}});
    const std::vector<Cell> content = sorted_cells(p, content_less);
    CHECK(content == std::vector<Cell>{{1, 4}, {1, 3}, {2, 3}, {1, 2},
                                       {2, 2}, {1, 1}, {2, 1}, {3, 1}});

    CHECK(rev_lex_compare({1, 2}, {1, 2}) == std::strong_ordering::equal);
    CHECK(rev_lex_less({1, 4}, {1, 1}));
    CHECK(content_compare({2, 2}, {2, 2}) == std::strong_ordering::equal);
    CHECK(content_less({2, 2}, {1, 1}));  // same content, larger row first
    CHECK(content_less({1, 2}, {2, 2}));  // larger content first
}

TEST_CASE("both cell orders are total orders") {
    std::uint64_t violations = 0;
    for (const Partition& p : partitions_in_box(6, 6)) {
        const std::vector<Cell> cells = p.cells();
        for (Cell u : cells) {
            for (Cell v : cells) {
                const auto r = rev_lex_compare(u, v);
                const auto c = content_compare(u, v);
                if ((r == std::strong_ordering::equal) != (u == v)) ++violations;
                if ((c == std::strong_ordering::equal) != (u == v)) ++violations;
                if (rev_lex_compare(v, u) != (0 <=> r)) ++violations;
                if (content_compare(v, u) != (0 <=> c)) ++violations;
                for (Cell w : cells) {
                    if (rev_lex_less(u, v) && rev_lex_less(v, w) && !rev_lex_less(u, w)) {
                        ++violations;
                    }
                    if (content_less(u, v) && content_less(v, w) && !content_less(u, w)) {
                        ++violations;
                    }
                }
            }
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("corners") {
    const Partition p({4, 3, 1});
    CHECK(p.inner_corners() == std::vector<Cell>{{1, 3}, {2, 1}});
    CHECK(p.outer_corners() == std::vector<Cell>{{1, 4}, {2, 3}, {3, 1}});

    CHECK(Partition({1}).outer_corners() == std::vector<Cell>{{1, 1}});
    CHECK(Partition({1}).inner_corners().empty());

    const Partition big({10, 10, 10, 7, 6, 3, 3, 3});
    CHECK(big.inner_corner_contents() == std::vector<int>{-2, 2, 4});
    CHECK(big.outer_corner_contents() == std::vector<int>{-5, 1, 3, 7});

    for (const Partition& q : partitions_in_box(6, 6)) {
        if (q.empty()) continue;
        CHECK(q.outer_corners().size() == q.inner_corners().size() + 1);
        // Corner contents interleave strictly.
        const auto& inner = q.inner_corner_contents();
        const auto& outer = q.outer_corner_contents();
        for (std::size_t k = 0; k < inner.size(); ++k) {
            CHECK(outer[k] < inner[k]);
            CHECK(inner[k] < outer[k + 1]);
        }
        // Direct neighbour-scan definition of corners.
        for (Cell u : q.cells()) {
            const bool outer_corner = !q.contains(u.east()) && !q.contains(u.south());
            const bool inner_corner = q.contains(u.east()) && q.contains(u.south()) &&
                                      !q.contains(u.south().east());
            CHECK(outer_corner == (std::find(q.outer_corners().begin(),
                                             q.outer_corners().end(),
                                             u) != q.outer_corners().end()));
            CHECK(inner_corner == (std::find(q.inner_corners().begin(),
                                             q.inner_corners().end(),
                                             u) != q.inner_corners().end()));
        }
    }
}

TEST_CASE("regions of (4,3,1)") {
    const Partition p({4, 3, 1});
    const std::set<Cell> outer{{1, 2}, {1, 4}, {2, 3}, {3, 1}};
    const std::set<Cell> inner{{1, 3}, {2, 1}};
    const std::set<Cell> east_run{{1, 1}, {2, 2}};
    for (Cell u : p.cells()) {
        Region expected = Region::SouthRun;
        if (outer.count(u)) expected = Region::OuterDiag;
        else if (inner.count(u)) expected = Region::InnerDiag;
        else if (east_run.count(u)) expected = Region::EastRun;
        CHECK(p.region_of(u) == expected);
    }
    CHECK(Partition({1}).region_of({1, 1}) == Region::OuterDiag);
}

TEST_CASE("regions of the staircase-like shape with labelled cells") {
    const Partition p({10, 10, 10, 7, 6, 3, 3, 3});
    CHECK(p.region_of({8, 1}) == Region::EastRun);
    CHECK(p.region_of({3, 3}) == Region::EastRun);
    CHECK(p.region_of({2, 7}) == Region::EastRun);
    CHECK(p.region_of({5, 2}) == Region::SouthRun);
    CHECK(p.region_of({1, 10}) == Region::SouthRun);
    CHECK(p.region_of({3, 1}) == Region::InnerDiag);   // content -2
    CHECK(p.region_of({8, 3}) == Region::OuterDiag);   // content -5
    CHECK(region_label(p.region_of({8, 1})) == 'A');
    CHECK(region_label(p.region_of({5, 2})) == 'B');
}

TEST_CASE("rim-hook construction on (4,3,1)") {
    const Partition p({4, 3, 1});
    const RimHook full(p, {1, 1});
    CHECK(full.path().cells() ==
          std::vector<Cell>{{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}});
    CHECK(full.length() == 5);
    CHECK(full.head() == Cell{3, 1});
    CHECK(full.tail() == Cell{1, 4});

    CHECK(RimHook(p, {1, 4}).path().cells() == std::vector<Cell>{{1, 4}});
    CHECK(RimHook(p, {1, 3}).path().cells() == std::vector<Cell>{{2, 3}, {1, 3}, {1, 4}});
    CHECK_THROWS_AS(RimHook(p, {3, 2}), std::out_of_range);
}

TEST_CASE("rim-hooks are in bijection with cells and hug the rim") {
    for (const Partition& p : partitions_in_box(5, 5)) {
        for (Cell u : p.cells()) {
            const RimHook h(p, u);
            CHECK(h.corner() == u);
            CHECK(h.head() == Cell{p.conjugate_part(u.col), u.col});
            CHECK(h.tail() == Cell{u.row, p.part(u.row)});
            CHECK(h.cell_count() == p.hook_length(u));
            CHECK(h.belongs_to(p));

            CHECK(!p.contains(h.head().south()));
            CHECK(!p.contains(h.tail().east()));
            for (Cell v : h.path().cells()) {
                CHECK(p.contains(v));
                CHECK(!p.contains(v.south().east()));
            }

            // Region structure along the hook: the head starts in A or O, the
            // tail ends in O or B, and the interior follows the region labels.
            const Region head_region = p.region_of(h.head());
            CHECK((head_region == Region::EastRun || head_region == Region::OuterDiag));
            const Region tail_region = p.region_of(h.tail());
            CHECK((tail_region == Region::OuterDiag || tail_region == Region::SouthRun));
            for (Cell v : h.path().cells()) {
                if (forces_east(p.region_of(v))) CHECK(h.path().contains(v.east()));
                if (forces_south(p.region_of(v))) CHECK(h.path().contains(v.south()));
            }

            // Contents along the hook form an interval.
            CHECK(h.min_diagonal() == u.col - p.conjugate_part(u.col));
            CHECK(h.max_diagonal() == p.part(u.row) - u.row);
        }
    }
}

TEST_CASE("rim-hook order") {
    const Partition p({4, 3, 1});
    const std::vector<RimHook> hooks = all_rim_hooks(p);
    CHECK(hooks.size() == 8);
    CHECK(testsupport::corners_of(hooks) ==
          std::vector<Cell>{{1, 4}, {2, 3}, {1, 3}, {2, 2}, {1, 2}, {3, 1}, {2, 1}, {1, 1}});

    const RimHook a(p, {1, 4});
    const RimHook b(p, {1, 3});
    const RimHook c(p, {2, 2});
    const RimHook d(p, {1, 1});
    CHECK(rim_hook_less(a, b));
    CHECK(rim_hook_less(b, c));
    CHECK(rim_hook_less(c, d));
    CHECK(rim_hook_compare(c, c) == std::strong_ordering::equal);

    // The order transfers the reverse lexicographic order on corner cells.
    for (const Partition& q : partitions_in_box(5, 5)) {
        const std::vector<RimHook> all = all_rim_hooks(q);
        for (const RimHook& f : all) {
            for (const RimHook& h : all) {
                CHECK(rim_hook_compare(f, h) == rev_lex_compare(f.corner(), h.corner()));
            }
        }
    }
}

TEST_CASE("all_rim_hooks bookkeeping") {
    CHECK(all_rim_hooks(Partition({1})).size() == 1);
    const std::vector<RimHook> hooks21 = all_rim_hooks(Partition({2, 1}));
    std::multiset<int> sizes;
    for (const RimHook& h : hooks21) sizes.insert(h.cell_count());
    CHECK(sizes == std::multiset<int>{1, 1, 3});

    for (const Partition& p : partitions_in_box(5, 5)) {
        std::uint64_t hook_cells = 0;
        std::uint64_t hook_lengths = 0;
        for (const RimHook& h : all_rim_hooks(p)) {
            hook_cells += static_cast<std::uint64_t>(h.cell_count());
        }
        for (Cell u : p.cells()) hook_lengths += static_cast<std::uint64_t>(p.hook_length(u));
        CHECK(hook_cells == hook_lengths);
    }
}

TEST_CASE("lattice path head, tail and reversal") {
    const LatticePath ne({{3, 1}, {2, 1}, {2, 2}}, PathOrientation::NorthEast);
    CHECK(ne.length() == 2);
    CHECK(ne.head() == Cell{3, 1});
    CHECK(ne.tail() == Cell{2, 2});

    const LatticePath sw = ne.reversed();
    CHECK(sw.orientation() == PathOrientation::SouthWest);
    CHECK(sw.head() == ne.head());
    CHECK(sw.tail() == ne.tail());
    CHECK(sw.length() == ne.length());
    CHECK(sw.reversed() == ne);

    CHECK_THROWS_AS(LatticePath({{1, 1}, {2, 2}}, PathOrientation::NorthEast),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath({{2, 1}, {1, 1}}, PathOrientation::SouthWest),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticePath().head(), std::out_of_range);
}
