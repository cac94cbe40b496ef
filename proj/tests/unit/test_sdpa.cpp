// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncagm/errors.hpp"
#include "ncagm/sdp/sdpa.hpp"
#include "ncagm/sos/compiler.hpp"

using namespace ncagm;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    sdp::import_sdpa(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

}  // namespace

TEST(Sdpa, ToyProblem) {
  const auto p = sdp::import_sdpa("* min lambda s.t. lambda = 3\n1\n1\n1\n3\n0 1 1 1 -1\n1 1 1 1 1\n");
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].size, 1);
  ASSERT_EQ(p.constraints.size(), 1u);
  EXPECT_EQ(p.constraints[0].rhs, 3.0);
  EXPECT_EQ(p.objective.entries(), std::vector<sdp::Entry>({{0, 0, 0, 1.0}}));
  EXPECT_FALSE(p.info.has_value());
}

TEST(Sdpa, AcceptsFormatPunctuation) {
  const auto p = sdp::import_sdpa("\"comment\n2 =mdim\n2 =nblocks\n{2, -3}\n(1.5, -2)\n1 1 1 2 0.5\n2 2 3 3 4\n");
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[1].kind, sdp::BlockKind::diagonal);
  EXPECT_EQ(p.blocks[1].size, 3);
  EXPECT_EQ(p.constraints[0].rhs, 1.5);
  EXPECT_EQ(p.constraints[1].rhs, -2.0);
  EXPECT_EQ(p.constraints[1].matrix.entries(), std::vector<sdp::Entry>({{1, 2, 2, 4.0}}));
}

TEST(Sdpa, HeaderOfTheFiveFiveProblem) {
  const std::string text = sdp::export_sdpa(sos::assemble_sdp(5, 5, sos::Sign::plus));
  std::istringstream in(text);
  std::string info, m, nb, sizes;
  std::getline(in, info);
  std::getline(in, m);
  std::getline(in, nb);
  std::getline(in, sizes);
  EXPECT_EQ(info, "\"ncagm m=5 n=5 d=2 sign=1 reduced=0");
  EXPECT_EQ(m, "3906");
  EXPECT_EQ(nb, "7");
  EXPECT_EQ(sizes, "1 31 31 31 31 31 31");
}

TEST(Sdpa, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("1\n1\n2\n1\n1 1 2 1 1\n"), 5u);   // j < i
  EXPECT_EQ(error_line("1\n1\n2\n1\n1 1 3 3 1\n"), 5u);   // outside the block
  EXPECT_EQ(error_line("1\n1\n2\n1\n1 2 1 1 1\n"), 5u);   // block number
  EXPECT_EQ(error_line("1\n1\n2\n1\n2 1 1 1 1\n"), 5u);   // matrix number
  EXPECT_EQ(error_line("1\n1\n2\n1\n1 1 1 1 x\n"), 5u);   // non-numeric value
  EXPECT_EQ(error_line("1\n1\n2\n1\n1 1 1 1\n"), 5u);     // missing field
  EXPECT_EQ(error_line("1\n1\n-2\n1\n1 1 1 2 1\n"), 5u);  // off-diagonal in a diagonal block
  EXPECT_EQ(error_line("x\n1\n2\n1\n"), 1u);
  EXPECT_EQ(error_line("1\n0\n"), 2u);
  EXPECT_EQ(error_line("-1\n1\n2\n"), 1u);
  EXPECT_EQ(error_line("1\n1\n0\n1\n"), 3u);
  EXPECT_EQ(error_line("1\n1\n2\nabc\n"), 4u);
  EXPECT_EQ(error_line("\"ncagm m=x\n1\n1\n1\n1\n"), 1u);
  EXPECT_THROW(sdp::import_sdpa("1\n1\n"), ParseError);
}

TEST(Sdpa, ExportOfEmptyObjectiveAndNoConstraints) {
  sdp::SdpProblem p;
  p.blocks = {{2, sdp::BlockKind::dense}};
  EXPECT_EQ(sdp::import_sdpa(sdp::export_sdpa(p)), p);
}

TEST(SdpaProperty, RoundTripIsIdentity) {
  testkit::Gen g(31);
  for (int t = 0; t < 1000; ++t) {
    const auto p = g.sdp_problem();
    const std::string text = sdp::export_sdpa(p);
    const auto q = sdp::import_sdpa(text);
    ASSERT_EQ(q, p) << text;
    ASSERT_EQ(sdp::export_sdpa(q), text);
  }
}

TEST(Sdpa, RoundTripOfCompiledProblems) {
  for (auto [m, n] : {std::pair{1, 2}, {2, 3}, {3, 3}, {4, 4}}) {
    const auto p = sos::assemble_sdp(m, n, sos::Sign::minus);
    EXPECT_EQ(sdp::import_sdpa(sdp::export_sdpa(p)), p);
  }
}
