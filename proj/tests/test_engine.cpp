#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "implycim/engine.hpp"
#include "implycim/errors.hpp"

using namespace implycim;

namespace {

array_state two_cells(std::uint8_t p, std::uint8_t q) {
  array_state s(2);
  s.set(cell_id{0}, p);
  s.set(cell_id{1}, q);
  return s;
}

}  // namespace

TEST(Engine, ImplyTruthTable) {
  // p, q, q'
  const int table[4][3] = {{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}};
  for (const auto& row : table) {
    exec_stats st;
    const auto out = exec_imply(two_cells(row[0], row[1]), cell_id{0}, cell_id{1}, &st);
    EXPECT_EQ(out.get(cell_id{1}), row[2]) << row[0] << row[1];
    EXPECT_EQ(out.get(cell_id{0}), row[0]);
    EXPECT_EQ(st.steps, 1u);
  }
}

TEST(Engine, FalseResets) {
  exec_stats st;
  EXPECT_EQ(exec_false(two_cells(0, 1), cell_id{1}, &st).get(cell_id{1}), 0);
  EXPECT_EQ(exec_false(two_cells(0, 0), cell_id{1}, &st).get(cell_id{1}), 0);
  EXPECT_EQ(st.steps, 2u);
}

TEST(Engine, FalseEveryCellZeroesState) {
  std::mt19937 rng(7);
  array_state s(8);
  for (std::uint32_t i = 0; i < 8; ++i) s.set(cell_id{i}, rng() & 1);
  std::vector<micro_op> ops;
  for (std::uint32_t i = 0; i < 8; ++i) ops.push_back(micro_op::make_false(cell_id{i}));
  const auto [out, st] = run_program(s, ops);
  EXPECT_EQ(out, array_state(8));
  EXPECT_EQ(st.steps, 8u);
}

TEST(Engine, ErrorsOnBadOperands) {
  EXPECT_THROW(exec_false(array_state(2), cell_id{2}), layout_error);
  EXPECT_THROW(exec_imply(array_state(2), cell_id{1}, cell_id{1}), invalid_operand_error);
  EXPECT_THROW(exec_imply(array_state(2), cell_id{5}, cell_id{1}), layout_error);
  EXPECT_THROW(array_state(0), layout_error);
}

TEST(Engine, EmptyProgramIsIdentity) {
  const auto s = two_cells(1, 0);
  const auto [out, st] = run_program(s, {});
  EXPECT_EQ(out, s);
  EXPECT_EQ(st.steps, 0u);
}

TEST(Engine, NotViaFalseThenImply) {
  const std::vector<micro_op> ops{micro_op::make_false(cell_id{1}), micro_op::make_imply(cell_id{0}, cell_id{1})};
  for (std::uint8_t a : {0, 1}) {
    const auto [out, st] = run_program(two_cells(a, 1), ops);
    EXPECT_EQ(out.get(cell_id{1}), !a);
    EXPECT_EQ(st.steps, 2u);
  }
}

TEST(Engine, HandTracedDestructiveXor) {
  // a, b, s1, s2 = cells 0..3
  const cell_id a{0}, b{1}, s1{2}, s2{3};
  const std::vector<micro_op> ops{
      micro_op::make_false(s1),   micro_op::make_false(s2),   micro_op::make_imply(a, s1),
      micro_op::make_imply(b, s2), micro_op::make_imply(s1, s2), micro_op::make_false(s1),
      micro_op::make_imply(s2, s1), micro_op::make_imply(a, b),  micro_op::make_imply(b, s1)};
  array_state s(4);
  s.set(a, 1);
  const auto [out, st] = run_program(s, ops);
  EXPECT_EQ(out.get(s1), 1);
  EXPECT_EQ(st.steps, 9u);
}

TEST(Engine, FailedProgramLeavesInputUntouched) {
  const auto s = two_cells(1, 1);
  const std::vector<micro_op> ops{micro_op::make_false(cell_id{0}), micro_op::make_false(cell_id{9})};
  EXPECT_THROW(run_program(s, ops), layout_error);
  EXPECT_EQ(s.get(cell_id{0}), 1);
}

TEST(EngineProperty, FrameAndDeterminism) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 2 + rng() % 14;
    array_state s(n);
    for (std::uint32_t i = 0; i < n; ++i) s.set(cell_id{i}, rng() & 1);
    std::vector<micro_op> ops;
    for (int k = 0; k < 40; ++k) {
      const cell_id q{static_cast<std::uint32_t>(rng() % n)};
      cell_id p{static_cast<std::uint32_t>(rng() % n)};
      if (p == q) p = cell_id{(q.index + 1) % n};
      ops.push_back(rng() % 3 == 0 ? micro_op::make_false(q) : micro_op::make_imply(p, q));
    }
    array_state cur = s;
    for (const auto& op : ops) {
      const array_state before = cur;
      apply(cur, op);
      for (std::uint32_t i = 0; i < n; ++i)
        if (i != op.q.index) ASSERT_EQ(cur.get(cell_id{i}), before.get(cell_id{i}));
    }
    const auto r1 = run_program(s, ops);
    const auto r2 = run_program(s, ops);
    EXPECT_EQ(r1.first, r2.first);
    EXPECT_EQ(r1.first, cur);
    EXPECT_EQ(r1.second.steps, ops.size());
  }
}

TEST(Engine, TraceCsv) {
  std::ostringstream os;
  trace_sink trace(os);
  run_program(two_cells(1, 0), std::vector<micro_op>{micro_op::make_false(cell_id{1}),
                                                     micro_op::make_imply(cell_id{0}, cell_id{1})},
              &trace);
  EXPECT_EQ(os.str(), "step_index,kind,p,q,resulting_bit\n0,FALSE,,1,0\n1,IMPLY,0,1,0\n");
}
