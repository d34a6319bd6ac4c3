#include "osborn/loop_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "osborn/errors.hpp"

namespace osborn {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

unsigned long parse_number(const std::string& tok, std::size_t line_no) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": '" + tok +
                     "' is not a non-negative integer");
  return v;
}

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

bool is_separator(const std::string& line) {
  auto t = tokens(line);
  return t.size() == 1 && t[0] == "---";
}

// Parses one loop from `lines`; `first_line_no` is used for diagnostics.
LoopTable parse_block(const std::vector<std::string>& lines,
                      std::size_t first_line_no) {
  std::size_t i = 0;
  while (i < lines.size() && is_blank_or_comment(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing order line");
  auto head = tokens(lines[i]);
  if (head.size() != 1)
    throw ParseError("line " + std::to_string(first_line_no + i) +
                     ": expected a single integer order");
  const std::size_t n = parse_number(head[0], first_line_no + i);
  if (n == 0) throw ParseError("order must be at least 1");
  ++i;

  std::vector<std::vector<Elem>> raw;
  for (; i < lines.size(); ++i) {
    if (is_blank_or_comment(lines[i])) continue;
    auto row = tokens(lines[i]);
    if (raw.size() == n)
      throw RaggedInput("line " + std::to_string(first_line_no + i) +
                        ": more than " + std::to_string(n) + " rows");
    if (row.size() != n)
      throw RaggedInput("row " + std::to_string(raw.size() + 1) + " has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(n));
    std::vector<Elem> values;
    for (const auto& tok : row) {
      auto v = parse_number(tok, first_line_no + i);
      if (v < 1 || v > n)
        throw ParseError("line " + std::to_string(first_line_no + i) +
                         ": entry " + tok + " outside 1.." + std::to_string(n));
      values.push_back(static_cast<Elem>(v - 1));
    }
    raw.push_back(std::move(values));
  }
  if (raw.size() != n)
    throw RaggedInput("expected " + std::to_string(n) + " rows, found " +
                      std::to_string(raw.size()));
  return validate_loop(raw);
}

}  // namespace

LoopTable read_loop(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return parse_block(lines, 1);
}

LoopTable read_loop_string(const std::string& text) {
  std::istringstream in(text);
  return read_loop(in);
}

LoopTable read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_loop(in);
}

std::vector<LoopTable> read_loop_stream(std::istream& in) {
  std::vector<LoopTable> out;
  std::vector<std::string> block;
  std::size_t line_no = 0, block_start = 1;
  auto flush = [&] {
    bool any = false;
    for (const auto& l : block) any = any || !is_blank_or_comment(l);
    if (any) out.push_back(parse_block(block, block_start));
    block.clear();
  };
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (is_separator(line)) {
      flush();
      block_start = line_no + 1;
    } else {
      block.push_back(line);
    }
  }
  flush();
  return out;
}

void write_loop(std::ostream& out, const LoopTable& L,
                const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  const auto n = static_cast<Elem>(L.order());
  out << n << '\n';
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << L.multiply(x, y) + 1;
    }
    out << '\n';
  }
}

std::string loop_to_string(const LoopTable& L,
                           const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_loop(out, L, comments);
  return out.str();
}

}  // namespace osborn
