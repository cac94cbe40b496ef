// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncagm/certify/instance.hpp"
#include "ncagm/errors.hpp"
#include "ncagm/io/artifacts.hpp"
#include "ncagm/sos/compiler.hpp"

using namespace ncagm;

TEST(Artifacts, SosCertificateRoundTrip) {
  const auto c = certify::build_m2_certificate(4);
  const auto j = io::sos_to_json(c);
  EXPECT_EQ(j["lambda"], "3");
  EXPECT_EQ(j["blocks"][0][1], "-9/8");
  const auto back = io::sos_from_json(io::Json::parse(j.dump()));
  EXPECT_EQ(back.m, 2);
  EXPECT_EQ(back.n, 4);
  EXPECT_EQ(back.lambda, c.lambda);
  ASSERT_EQ(back.gram_blocks.size(), c.gram_blocks.size());
  for (std::size_t i = 0; i < c.gram_blocks.size(); ++i) EXPECT_EQ(back.gram_blocks[i], c.gram_blocks[i]);
  EXPECT_TRUE(certify::verify_sos(back));
}

TEST(ArtifactsProperty, FarkasCertificateRoundTripIsExact) {
  testkit::Gen g(61);
  for (int t = 0; t < 1000; ++t) {
    sdp::FarkasCertificate c;
    c.y.resize(g.integer(0, 8));
    for (Eigen::Index i = 0; i < c.y.size(); ++i) c.y[i] = g.value();
    c.lambda_target = g.value();
    c.margin = g.value();
    c.psd_defect = g.value();
    const sdp::ProblemInfo info{g.integer(1, 5), 5, 0, g.coin() ? 1 : -1, false};
    const auto j = io::Json::parse(io::farkas_to_json(c, info).dump());
    const auto back = io::farkas_from_json(j);
    ASSERT_EQ(back.y, c.y);
    ASSERT_EQ(back.lambda_target, c.lambda_target);
    ASSERT_EQ(back.margin, c.margin);
    const auto bi = io::info_from_json(j);
    ASSERT_EQ(bi.m, info.m);
    ASSERT_EQ(bi.sign, info.sign);
  }
}

TEST(Artifacts, SolutionShape) {
  sdp::Solution s;
  s.status = sdp::SolveStatus::optimal;
  s.objective_primal = 0.5;
  s.primal_blocks = {Eigen::MatrixXd::Constant(1, 1, 0.5), (Eigen::MatrixXd(2, 2) << 1, 2, 2, 5).finished(),
                     Eigen::VectorXd::Constant(3, 0.25)};
  s.dual = Eigen::VectorXd::Constant(2, -1.0);
  const auto j = io::solution_to_json(s, {2, 2, 1, 1, false});
  EXPECT_EQ(j["lambda"], "0.5");
  EXPECT_EQ(j["sign"], "plus");
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["blocks"][1], io::Json::parse(R"(["1","2","5"])"));
  EXPECT_EQ(j["block_sizes"], io::Json::parse("[1,2,-3]"));
  EXPECT_EQ(j["dual"][0], "-1");
}

TEST(Artifacts, InstanceFiles) {
  const auto inst = io::instance_from_json(io::Json::parse(R"({"n":2,"m":2,"matrices":[[1,0,0,0],[["0.5","0"],["0","1"]]]})"));
  ASSERT_EQ(inst.matrices.size(), 2u);
  EXPECT_EQ(inst.matrices[1](0, 0), 0.5);
  EXPECT_EQ(inst.matrices[0](0, 0), 1.0);
  const io::Instance sharp{2, 2, certify::sharp_m2_instance()};
  const auto back = io::instance_from_json(io::Json::parse(io::instance_to_json(sharp).dump()));
  EXPECT_EQ(back.matrices[1], sharp.matrices[1]);
}

TEST(Artifacts, MalformedInputs) {
  EXPECT_THROW(io::instance_from_json(io::Json::parse(R"({"n":1,"m":1,"matrices":[[1,2,3]]})")), ParseError);
  EXPECT_THROW(io::instance_from_json(io::Json::parse(R"({"n":2,"m":1,"matrices":[[1]]})")), ParseError);
  EXPECT_THROW(io::instance_from_json(io::Json::parse(R"({"m":1,"matrices":[[1]]})")), ParseError);
  EXPECT_THROW(io::farkas_from_json(io::Json::parse(R"({"lambda":"x","dual":[]})")), ParseError);
  EXPECT_THROW(io::sos_from_json(io::Json::parse(R"({"m":2,"n":2,"sign":"plus","lambda":"1/2","blocks":[["1","2"]]})")), ParseError);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), ParseError);
}
