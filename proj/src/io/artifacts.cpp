// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/io/artifacts.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "ncagm/errors.hpp"
#include "ncagm/poly/scalar.hpp"

namespace ncagm::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(0, what); }

double to_number(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) fail("expected a number or a decimal string");
  const std::string s = v.get<std::string>();
  std::string_view sv = s;
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
  if (ec != std::errc() || ptr != sv.data() + sv.size() || sv.empty()) fail("malformed number '" + s + "'");
  return out;
}

Rational to_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail("expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (v.is_number_integer()) return v.get<int>();
  const double d = to_number(v);
  if (d != std::floor(d)) fail(std::string("key '") + key + "' must be an integer");
  return static_cast<int>(d);
}

Json lower_triangle(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) out.push_back(format_double(m(i, j)));
  }
  return out;
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_double(v[i]));
  return out;
}

Json header(const sdp::ProblemInfo& info) {
  Json j;
  j["m"] = info.m;
  j["n"] = info.n;
  j["sign"] = info.sign > 0 ? "plus" : "minus";
  return j;
}

}  // namespace

Json solution_to_json(const sdp::Solution& s, const sdp::ProblemInfo& info) {
  Json j = header(info);
  j["lambda"] = format_double(s.objective_primal);
  j["status"] = std::string(sdp::to_string(s.status));
  j["objective_dual"] = format_double(s.objective_dual);
  j["gap"] = format_double(s.gap);
  j["iterations"] = s.iterations;
  j["reduced"] = info.reduced;
  Json sizes = Json::array();
  Json blocks = Json::array();
  for (const auto& b : s.primal_blocks) {
    if (b.cols() == 1 && b.rows() > 1) {
      sizes.push_back(-static_cast<int>(b.rows()));
      blocks.push_back(vector_json(b.col(0)));
    } else {
      sizes.push_back(static_cast<int>(b.rows()));
      blocks.push_back(lower_triangle(b));
    }
  }
  j["block_sizes"] = sizes;
  j["blocks"] = blocks;
  j["dual"] = vector_json(s.dual);
  return j;
}

Json farkas_to_json(const sdp::FarkasCertificate& cert, const sdp::ProblemInfo& info) {
  Json j = header(info);
  j["lambda"] = format_double(cert.lambda_target);
  j["reduced"] = false;
  j["blocks"] = Json::array();
  j["dual"] = vector_json(cert.y);
  j["margin"] = format_double(cert.margin);
  j["psd_defect"] = format_double(cert.psd_defect);
  return j;
}

sdp::ProblemInfo info_from_json(const Json& j) {
  sdp::ProblemInfo info;
  info.m = need_int(j, "m");
  info.n = need_int(j, "n");
  const Json& s = need(j, "sign");
  if (s == "plus" || s == 1 || s == "+1" || s == "1") info.sign = 1;
  else if (s == "minus" || s == -1 || s == "-1") info.sign = -1;
  else fail("sign must be plus or minus");
  info.d = info.m / 2;
  if (j.contains("reduced") && j.at("reduced").is_boolean()) info.reduced = j.at("reduced").get<bool>();
  return info;
}

sdp::FarkasCertificate farkas_from_json(const Json& j) {
  sdp::FarkasCertificate cert;
  cert.lambda_target = to_number(need(j, "lambda"));
  const Json& dual = need(j, "dual");
  if (!dual.is_array()) fail("'dual' must be an array");
  cert.y.resize(static_cast<Eigen::Index>(dual.size()));
  for (std::size_t k = 0; k < dual.size(); ++k) cert.y[static_cast<Eigen::Index>(k)] = to_number(dual[k]);
  if (j.contains("margin")) cert.margin = to_number(j.at("margin"));
  if (j.contains("psd_defect")) cert.psd_defect = to_number(j.at("psd_defect"));
  return cert;
}

Json sos_to_json(const certify::SosCertificate& cert) {
  Json j = header({cert.m, cert.n, cert.m / 2, static_cast<int>(cert.sign), false});
  j["lambda"] = format_rational(cert.lambda);
  Json blocks = Json::array();
  for (const auto& b : cert.gram_blocks) {
    Json tri = Json::array();
    for (std::size_t r = 0; r < b.dim(); ++r) {
      for (std::size_t c = 0; c <= r; ++c) tri.push_back(format_rational(b(r, c)));
    }
    blocks.push_back(std::move(tri));
  }
  j["blocks"] = blocks;
  j["dual"] = Json::array();
  return j;
}

certify::SosCertificate sos_from_json(const Json& j) {
  const sdp::ProblemInfo info = info_from_json(j);
  certify::SosCertificate cert;
  cert.m = info.m;
  cert.n = info.n;
  cert.sign = info.sign > 0 ? sos::Sign::plus : sos::Sign::minus;
  cert.lambda = to_rational(need(j, "lambda"));
  const Json& blocks = need(j, "blocks");
  if (!blocks.is_array()) fail("'blocks' must be an array");
  for (const Json& tri : blocks) {
    if (!tri.is_array()) fail("each block must be an array");
    const auto len = tri.size();
    const auto dim = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(len) + 1.0) - 1.0) / 2.0 + 0.5);
    if (dim * (dim + 1) / 2 != len) fail("block length " + std::to_string(len) + " is not a triangular number");
    certify::RationalMatrix m(dim);
    std::size_t k = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c <= r; ++c) m.set(r, c, to_rational(tri[k++]));
    }
    cert.gram_blocks.push_back(std::move(m));
  }
  return cert;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.n = need_int(j, "n");
  inst.m = need_int(j, "m");
  const Json& mats = need(j, "matrices");
  if (!mats.is_array()) fail("'matrices' must be an array");
  for (const Json& mj : mats) {
    if (!mj.is_array() || mj.empty()) fail("each matrix must be a non-empty array");
    std::vector<double> flat;
    if (mj.front().is_array()) {
      for (const Json& row : mj) {
        if (!row.is_array() || row.size() != mj.size()) fail("matrix rows must form a square");
        for (const Json& v : row) flat.push_back(to_number(v));
      }
    } else {
      for (const Json& v : mj) flat.push_back(to_number(v));
    }
    const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
    if (static_cast<std::size_t>(dim * dim) != flat.size()) fail("matrix entry count is not a square");
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = flat[static_cast<std::size_t>(r * dim + c)];
    }
    inst.matrices.push_back(std::move(m));
  }
  if (static_cast<int>(inst.matrices.size()) != inst.n) fail("'n' differs from the number of matrices");
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  Json mats = Json::array();
  for (const auto& m : inst.matrices) {
    Json flat = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(format_double(m(r, c)));
    }
    mats.push_back(std::move(flat));
  }
  j["matrices"] = mats;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace ncagm::io
