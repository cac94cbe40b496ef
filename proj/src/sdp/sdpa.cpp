// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include "ncagm/sdp/sdpa.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "ncagm/errors.hpp"
#include "ncagm/poly/scalar.hpp"

namespace ncagm::sdp {

namespace {

constexpr std::string_view kInfoTag = "ncagm";

struct Token {
  std::string text;
  std::size_t line;
};

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '{' || c == '}' || c == '(' || c == ')' || c == ',';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (is_separator(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

long parse_int(const Token& t) {
  long v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(t.line, "expected an integer, got '" + t.text + "'");
  return v;
}

double parse_real(const Token& t) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(t.line, "expected a number, got '" + t.text + "'");
  }
  return v;
}

ProblemInfo parse_info(const std::string& comment, std::size_t line) {
  ProblemInfo info;
  std::istringstream in(comment);
  std::string word;
  in >> word;
  int seen = 0;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError(line, "malformed metadata field '" + word + "'");
    const std::string key = word.substr(0, eq);
    const long v = parse_int({word.substr(eq + 1), line});
    if (key == "m") info.m = static_cast<int>(v);
    else if (key == "n") info.n = static_cast<int>(v);
    else if (key == "d") info.d = static_cast<int>(v);
    else if (key == "sign") info.sign = static_cast<int>(v);
    else if (key == "reduced") info.reduced = v != 0;
    else throw ParseError(line, "unknown metadata field '" + key + "'");
    ++seen;
  }
  if (seen == 0) throw ParseError(line, "empty metadata line");
  return info;
}

}  // namespace

void export_sdpa(const SdpProblem& problem, std::ostream& out) {
  if (problem.info) {
    const ProblemInfo& i = *problem.info;
    out << '"' << kInfoTag << " m=" << i.m << " n=" << i.n << " d=" << i.d << " sign=" << i.sign
        << " reduced=" << (i.reduced ? 1 : 0) << '\n';
  }
  out << problem.constraints.size() << '\n' << problem.blocks.size() << '\n';
  for (std::size_t b = 0; b < problem.blocks.size(); ++b) {
    const Block& blk = problem.blocks[b];
    out << (b ? " " : "") << (blk.kind == BlockKind::diagonal ? -blk.size : blk.size);
  }
  out << '\n';
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    out << (k ? " " : "") << format_double(problem.constraints[k].rhs);
  }
  out << '\n';
  auto write = [&](std::size_t matno, const SparseSymmetric& mat, double factor) {
    for (const Entry& e : mat.entries()) {
      out << matno << ' ' << e.block + 1 << ' ' << e.row + 1 << ' ' << e.col + 1 << ' '
          << format_double(factor * e.value) << '\n';
    }
  };
  write(0, problem.objective, -1.0);
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) write(k + 1, problem.constraints[k].matrix, 1.0);
}

std::string export_sdpa(const SdpProblem& problem) {
  std::ostringstream out;
  export_sdpa(problem, out);
  return out.str();
}

SdpProblem import_sdpa(std::istream& in) {
  SdpProblem problem;
  // Header lines carry one value each (trailing text such as "=mdim" is
  // ignored); the block list and right-hand side are token streams.
  std::vector<std::vector<Token>> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (raw[first] == '"' || raw[first] == '*') {
      const std::string body = raw.substr(first + 1);
      if (body.rfind(kInfoTag, 0) == 0 && (body.size() == kInfoTag.size() || body[kInfoTag.size()] == ' ')) {
        problem.info = parse_info(body, lineno);
      }
      continue;
    }
    std::vector<Token> toks;
    for (auto& s : split(raw)) toks.push_back({std::move(s), lineno});
    if (!toks.empty()) lines.push_back(std::move(toks));
  }

  std::size_t li = 0;
  std::size_t ti = 0;
  auto next_token = [&](const char* what) -> const Token& {
    while (li < lines.size() && ti >= lines[li].size()) {
      ++li;
      ti = 0;
    }
    if (li >= lines.size()) throw ParseError(lineno + 1, std::string("unexpected end of input reading ") + what);
    return lines[li][ti++];
  };
  auto finish_line = [&] {
    if (ti > 0) {
      ++li;
      ti = 0;
    }
  };

  const Token& mtok = next_token("the number of constraints");
  const long m = parse_int(mtok);
  if (m < 0) throw ParseError(mtok.line, "negative number of constraints");
  finish_line();
  const Token& btok = next_token("the number of blocks");
  const long nblocks = parse_int(btok);
  if (nblocks < 1) throw ParseError(btok.line, "the number of blocks must be positive");
  finish_line();
  for (long b = 0; b < nblocks; ++b) {
    const Token& t = next_token("the block structure");
    const long size = parse_int(t);
    if (size == 0) throw ParseError(t.line, "block size 0");
    problem.blocks.push_back({static_cast<int>(size < 0 ? -size : size), size < 0 ? BlockKind::diagonal : BlockKind::dense});
  }
  finish_line();
  problem.constraints.resize(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) problem.constraints[static_cast<std::size_t>(k)].rhs = parse_real(next_token("the right-hand side"));
  finish_line();

  for (; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    const std::size_t line = toks.front().line;
    if (toks.size() != 5) throw ParseError(line, "an entry line needs 5 fields: matno blkno i j value");
    const long matno = parse_int(toks[0]);
    const long blkno = parse_int(toks[1]);
    const long i = parse_int(toks[2]);
    const long j = parse_int(toks[3]);
    const double value = parse_real(toks[4]);
    if (matno < 0 || matno > m) throw ParseError(line, "matrix number out of range");
    if (blkno < 1 || blkno > nblocks) throw ParseError(line, "block number out of range");
    const Block& blk = problem.blocks[static_cast<std::size_t>(blkno - 1)];
    if (i < 1 || j < 1 || i > blk.size || j > blk.size) throw ParseError(line, "index outside its block");
    if (j < i) throw ParseError(line, "entry below the diagonal (the format requires i <= j)");
    if (blk.kind == BlockKind::diagonal && i != j) throw ParseError(line, "off-diagonal entry in a diagonal block");
    SparseSymmetric& target = matno == 0 ? problem.objective : problem.constraints[static_cast<std::size_t>(matno - 1)].matrix;
    target.add(static_cast<int>(blkno - 1), static_cast<int>(i - 1), static_cast<int>(j - 1),
               matno == 0 ? -value : value);
  }
  problem.objective.canonicalize();
  for (auto& c : problem.constraints) c.matrix.canonicalize();
  return problem;
}

SdpProblem import_sdpa(const std::string& text) {
  std::istringstream in(text);
  return import_sdpa(in);
}

}  // namespace ncagm::sdp
