#pragma once

// Plain-text file formats:
//
//   .sbr   skewbrace <n>     n rows additive table, blank line, n rows
//                            multiplicative table
//   .ybe   solution <n>      n rows sigma (row x lists sigma_x), blank line,
//                            n rows tau (row y lists tau_y)
//   .blk   braceblock <n> <k>  k table sections separated by blank lines,
//                              section 0 the designated base operation
//
// Entries are space-separated base-10 indices, element 0 is the identity,
// lines beginning with '#' are ignored. Parsing never relabels: a table
// whose identity is not at index 0 is rejected.

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

  // Next content line (skipping comments); empty optional at end of input.
  // Blank lines are returned as empty strings.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  // Next non-blank content line.
  bool next_content(std::string& out) {
    while (next(out))
      if (!is_blank(out)) return true;
    return false;
  }

  static bool is_blank(const std::string& s) {
    for (char c : s)
      if (!isspace(static_cast<unsigned char>(c))) return false;
    return true;
  }

  int line() const { return lineno_; }

  [[noreturn]] void parse_fail(const std::string& msg) const {
    fail(errc::parse_error, name_ + ":" + std::to_string(lineno_) + ": " + msg, {lineno_});
  }

 private:
  std::istream& in_;
  std::string name_;
  int lineno_ = 0;
};

inline std::vector<int> parse_row(LineReader& r, const std::string& line, int n) {
  std::istringstream ss(line);
  std::vector<int> row;
  long long v;
  while (ss >> v) {
    if (v < 0 || v >= n) r.parse_fail("entry " + std::to_string(v) + " out of range");
    row.push_back(static_cast<int>(v));
  }
  std::string rest;
  ss.clear();
  if (ss >> rest) r.parse_fail("unexpected token '" + rest + "'");
  if (static_cast<int>(row.size()) != n)
    r.parse_fail("expected " + std::to_string(n) + " entries, found " +
                 std::to_string(row.size()));
  return row;
}

inline std::vector<std::vector<int>> parse_table(LineReader& r, int n) {
  std::vector<std::vector<int>> table;
  std::string line;
  for (int i = 0; i < n; ++i) {
    if (!r.next_content(line)) r.parse_fail("unexpected end of file inside table");
    table.push_back(parse_row(r, line, n));
  }
  return table;
}

inline std::pair<std::string, std::vector<long long>> parse_header(LineReader& r) {
  std::string line;
  if (!r.next_content(line)) r.parse_fail("empty file");
  std::istringstream ss(line);
  std::string keyword;
  ss >> keyword;
  std::vector<long long> nums;
  long long v;
  while (ss >> v) nums.push_back(v);
  return {keyword, nums};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Readers

inline SkewBrace read_skew_brace(std::istream& in, const std::string& name = "<input>") {
  detail::LineReader r(in, name);
  auto [keyword, nums] = detail::parse_header(r);
  if (keyword != "skewbrace" || nums.size() != 1)
    r.parse_fail("expected header 'skewbrace <n>'");
  if (nums[0] < 1 || nums[0] > 4096) r.parse_fail("unreasonable order");
  int n = static_cast<int>(nums[0]);
  auto add = detail::parse_table(r, n);
  auto mul = detail::parse_table(r, n);
  return brace_from_tables(add, mul);
}

inline Solution read_solution(std::istream& in, const std::string& name = "<input>") {
  detail::LineReader r(in, name);
  auto [keyword, nums] = detail::parse_header(r);
  if (keyword != "solution" || nums.size() != 1)
    r.parse_fail("expected header 'solution <n>'");
  if (nums[0] < 1 || nums[0] > 4096) r.parse_fail("unreasonable size");
  int n = static_cast<int>(nums[0]);
  auto sigma = detail::parse_table(r, n);
  auto tau = detail::parse_table(r, n);
  return Solution::from_tables(sigma, tau);
}

inline BraceBlock read_block(std::istream& in, const std::string& name = "<input>") {
  detail::LineReader r(in, name);
  auto [keyword, nums] = detail::parse_header(r);
  if (keyword != "braceblock" || nums.size() != 2)
    r.parse_fail("expected header 'braceblock <n> <k>'");
  if (nums[0] < 1 || nums[0] > 4096) r.parse_fail("unreasonable order");
  if (nums[1] < 1 || nums[1] > 4096) r.parse_fail("unreasonable op count");
  int n = static_cast<int>(nums[0]);
  int k = static_cast<int>(nums[1]);
  BraceBlock block;
  for (int i = 0; i < k; ++i) {
    auto table = detail::parse_table(r, n);
    try {
      block.ops.push_back(FiniteGroup::from_table(table));
    } catch (const error& e) {
      fail(e.code(), name + ": section " + std::to_string(i) + ": " + e.what(), e.witness());
    }
    block.labels.push_back(i == 0 ? "base" : "op" + std::to_string(i));
  }
  validate_block(block);
  return block;
}

// ---------------------------------------------------------------------------
// Writers: byte-exact shape, no comments, one blank line between tables.

namespace detail {

inline void write_table(std::ostream& out, const FiniteGroup& G) {
  int n = G.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << G.mul(a, b);
    }
    out << '\n';
  }
}

}  // namespace detail

inline void write_skew_brace(std::ostream& out, const SkewBrace& A) {
  out << "skewbrace " << A.order() << '\n';
  detail::write_table(out, A.add());
  out << '\n';
  detail::write_table(out, A.mul());
}

inline void write_solution(std::ostream& out, const Solution& S) {
  int n = S.size();
  out << "solution " << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << S.sigma(x, y);
    }
    out << '\n';
  }
  out << '\n';
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (x) out << ' ';
      out << S.tau(y, x);
    }
    out << '\n';
  }
}

inline void write_block(std::ostream& out, const BraceBlock& block) {
  out << "braceblock " << block.order() << ' ' << block.op_count() << '\n';
  for (int i = 0; i < block.op_count(); ++i) {
    if (i) out << '\n';
    detail::write_table(out, block.ops[i]);
  }
}

// ---------------------------------------------------------------------------
// Named groups for the command line: Cn, products like C2x8, Sn (n <= 5),
// Dn (dihedral of order 2n, n <= 12), Q8, Heis3.

struct NamedGroup {
  FiniteGroup group;
  std::vector<int> factor_sizes;  // nonempty for cyclic products
};

inline NamedGroup named_group(const std::string& name) {
  auto bad = [&]() -> void {
    fail(errc::parse_error, "unknown group name '" + name +
                                "' (expected Cn, Cn1x...xnk, Sn, Dn, Q8, Heis3)");
  };
  if (name == "Q8") return {quaternion_group(), {}};
  if (name == "Heis3") return {heisenberg_group_27(), {}};
  if (name.size() < 2) bad();
  char kind = name[0];
  std::string rest = name.substr(1);
  auto parse_int = [&](const std::string& s) -> int {
    if (s.empty()) bad();
    for (char c : s)
      if (!isdigit(static_cast<unsigned char>(c))) bad();
    long long v = std::stoll(s);
    if (v < 1 || v > 1024) bad();
    return static_cast<int>(v);
  };
  if (kind == 'C') {
    std::vector<int> sizes;
    std::string cur;
    for (char c : rest) {
      if (c == 'x') {
        sizes.push_back(parse_int(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    sizes.push_back(parse_int(cur));
    long long total = 1;
    for (int s : sizes) total *= s;
    if (total > 1024) bad();
    FiniteGroup g = cyclic_group(sizes[0]);
    for (size_t i = 1; i < sizes.size(); ++i) g = direct_product(g, cyclic_group(sizes[i]));
    return {std::move(g), std::move(sizes)};
  }
  if (kind == 'S') {
    int n = parse_int(rest);
    if (n < 1 || n > 5) bad();
    return {symmetric_group(n), {}};
  }
  if (kind == 'D') {
    int n = parse_int(rest);
    if (n < 1 || n > 12) bad();
    return {dihedral_group(n), {}};
  }
  bad();
  return {cyclic_group(1), {}};  // unreachable
}

inline FiniteGroup group_from_name(const std::string& name) { return named_group(name).group; }

}  // namespace skewbrace
