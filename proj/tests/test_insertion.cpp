#include <doctest.h>

#include "fixtures.hpp"
#include "lrkit/enumeration.hpp"
#include "lrkit/error.hpp"
#include "lrkit/insertion.hpp"

using namespace lrkit;
using fixtures::column;
using fixtures::rows;

TEST_SUITE("insertion") {
  TEST_CASE("columns are strictly increasing and positive") {
    CHECK_NOTHROW(Column{1, 3, 4});
    CHECK_THROWS_AS(Column({1, 1}), InputError);
    CHECK_THROWS_AS(Column({0, 2}), InputError);
    const Column c{1, 3, 4};
    CHECK(c[2] == 3);
    CHECK(c.max_entry() == 4);
    CHECK(c.to_string() == "(1,3,4)");
    CHECK(c.to_tableau() == column({1, 3, 4}));
  }

  TEST_CASE("column insertion") {
    auto r = column_insert(1, SkewTableau());
    CHECK(r.tableau == rows({{1}}));
    CHECK(r.new_cell == Cell{1, 1});

    r = column_insert(3, column({1, 2}));
    CHECK(r.tableau == column({1, 2, 3}));
    CHECK(r.new_cell == Cell{3, 1});

    // 2 bumps 2 from the first column, which bumps 3, which starts column 3.
    r = column_insert(2, rows({{1, 3}, {2}}));
    CHECK(r.tableau == rows({{1, 2, 3}, {2}}));
    CHECK(r.new_cell == Cell{1, 3});
    CHECK(r.route.size() == 3);
  }

  TEST_CASE("reverse column insertion") {
    auto r = reverse_column_insert(rows({{1, 2, 3}, {2}}), {1, 3});
    CHECK(r.ejected == 2);
    CHECK(r.tableau == rows({{1, 3}, {2}}));

    r = reverse_column_insert(column({1, 2, 3}), {3, 1});
    CHECK(r.ejected == 3);
    CHECK(r.tableau == column({1, 2}));

    r = reverse_column_insert(rows({{5}}), {1, 1});
    CHECK(r.ejected == 5);
    CHECK(r.tableau.empty());

    CHECK_THROWS_AS(reverse_column_insert(column({1, 2, 3}), {2, 1}), PreconditionError);
  }

  TEST_CASE("Pieri product") {
    CHECK(pieri_insert(Column{3}, column({1})) == column({1, 3}));
    // Entries no larger than the first column concatenate on the left.
    CHECK(pieri_insert(Column{1, 2}, column({1, 3})) == rows({{1, 1}, {2, 3}}));
    CHECK(pieri_insert(Column{3}, column({1, 3})) == rows({{1, 3}, {3}}));
    CHECK(pieri_insert(Column{}, column({1, 3})) == column({1, 3}));
  }

  TEST_CASE("reverse Pieri") {
    auto split = pieri_reverse(rows({{1, 1}, {2, 3}}), Partition{1, 1});
    CHECK(split.column == Column{1, 2});
    CHECK(split.rest == column({1, 3}));

    split = pieri_reverse(column({1, 3}), Partition{1});
    CHECK(split.column == Column{3});
    CHECK(split.rest == column({1}));

    const SkewTableau u = rows({{1, 2}, {3}});
    split = pieri_reverse(u, u.outer());
    CHECK(split.column.empty());
    CHECK(split.rest == u);

    CHECK_THROWS_AS(pieri_reverse(rows({{1, 2, 3}}), Partition{1}), PreconditionError);
  }

  TEST_CASE("first column split and prepend") {
    const SkewTableau t = rows({{1, 2}, {3, 4}, {5}});
    auto [first, rest] = split_first_column(t);
    CHECK(first == Column{1, 3, 5});
    CHECK(rest == column({2, 4}));
    CHECK(prepend_column(first, rest) == t);
  }
}

TEST_SUITE("insertion properties") {
  TEST_CASE("column insertion is undone by reverse insertion") {
    for (int size = 0; size <= 5; ++size)
      for (const Partition& p : partitions_of(size, 4))
        for_each_ssyt(SkewShape(p), 4, [&](const SkewTableau& t) {
          for (int x = 1; x <= 4; ++x) {
            const auto ins = column_insert(x, t);
            REQUIRE(validate_ssyt(ins.tableau));
            CHECK(ins.tableau.filled_count() == t.filled_count() + 1);
            const auto back = reverse_column_insert(ins.tableau, ins.new_cell);
            CHECK(back.ejected == x);
            CHECK(back.tableau == t);
          }
        });
  }

  TEST_CASE("Pieri adds a vertical strip and reverse Pieri recovers both factors") {
    for (int size = 0; size <= 4; ++size)
      for (const Partition& p : partitions_of(size, 4))
        for_each_ssyt(SkewShape(p), 4, [&](const SkewTableau& t) {
          for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> entries;
            for (int v = 1; v <= 4; ++v)
              if (mask & (1 << (v - 1))) entries.push_back(v);
            const Column s(entries);
            const SkewTableau u = pieri_insert(s, t);
            REQUIRE(validate_ssyt(u));
            CHECK(is_vertical_strip(t.outer(), u.outer()));
            CHECK(u.outer().size() == t.outer().size() + s.length());
            const auto split = pieri_reverse(u, t.outer());
            CHECK(split.column == s);
            CHECK(split.rest == t);
          }
        });
  }

  TEST_CASE("bumping routes of two successive insertions") {
    // x < x': the second new box is strictly below and weakly left of the first.
    // x >= x': it is strictly right and weakly above.
    for (int size = 0; size <= 5; ++size)
      for (const Partition& p : partitions_of(size, 4))
        for_each_ssyt(SkewShape(p), 4, [&](const SkewTableau& t) {
          for (int x = 1; x <= 4; ++x)
            for (int y = 1; y <= 4; ++y) {
              const auto a = column_insert(x, t);
              const auto b = column_insert(y, a.tableau);
              if (x < y) {
                CHECK(b.new_cell.row > a.new_cell.row);
                CHECK(b.new_cell.col <= a.new_cell.col);
              } else {
                CHECK(b.new_cell.col > a.new_cell.col);
                CHECK(b.new_cell.row <= a.new_cell.row);
              }
            }
        });
  }
}
