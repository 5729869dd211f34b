#include "cardbin/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cardbin {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    raw = trim(raw);
    if (raw.empty() || raw.front() == '#') continue;
    out.push_back({number, raw});
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what + " ('" + std::string(line.text) + "')");
}

std::size_t parse_count(const Line& line, std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) fail(line, std::string("bad ") + what);
  return value;
}

const Line& expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError("empty input, expected '" + std::string(header) + "'");
  if (lines[0].text != header) fail(lines[0], "malformed header, expected '" + std::string(header) + "'");
  return lines[0];
}

}  // namespace

Instance read_instance(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "BPCC v1");
  if (lines.size() < 2) throw ParseError("missing 'k <integer>' line");
  const auto k_tokens = split_ws(lines[1].text);
  if (k_tokens.size() != 2 || k_tokens[0] != "k") fail(lines[1], "expected 'k <integer>'");
  const std::size_t k = parse_count(lines[1], k_tokens[1], "k");
  if (k < 2 || k > 1'000'000) fail(lines[1], "k must be >= 2");

  std::vector<Rational> sizes;
  const Rational one(1);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto tokens = split_ws(lines[i].text);
    if (tokens.size() < 2 || tokens.size() > 3 || tokens[0] != "item") fail(lines[i], "expected 'item <num>/<den> [x<count>]'");
    Rational size;
    try {
      size = Rational::parse(tokens[1]);
    } catch (const ParseError& e) {
      fail(lines[i], e.what());
    }
    if (size.sign() <= 0) fail(lines[i], "non-positive size");
    if (size > one) fail(lines[i], "size > 1");
    std::size_t copies = 1;
    if (tokens.size() == 3) {
      if (tokens[2].size() < 2 || tokens[2][0] != 'x') fail(lines[i], "expected repeat suffix 'x<count>'");
      copies = parse_count(lines[i], tokens[2].substr(1), "repeat count");
      if (copies == 0) fail(lines[i], "repeat count must be positive");
    }
    sizes.insert(sizes.end(), copies, size);
  }
  return Instance(static_cast<int>(k), std::move(sizes));
}

std::string write_instance(const Instance& instance) {
  std::ostringstream os;
  os << "BPCC v1\n" << "k " << instance.k() << "\n";
  const auto& sizes = instance.sizes();
  std::size_t i = 0;
  while (i < sizes.size()) {
    std::size_t j = i + 1;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    os << "item " << sizes[i].str();
    if (j - i > 1) os << " x" << (j - i);
    os << "\n";
    i = j;
  }
  return os.str();
}

std::vector<std::vector<std::size_t>> read_packing_groups(std::string_view text) {
  const auto lines = content_lines(text);
  expect_header(lines, "PACKING v1");
  if (lines.size() < 2) throw ParseError("missing 'bins <m>' line");
  const auto head = split_ws(lines[1].text);
  if (head.size() != 2 || head[0] != "bins") fail(lines[1], "expected 'bins <m>'");
  const std::size_t m = parse_count(lines[1], head[1], "bin count");
  if (lines.size() - 2 != m) {
    throw ParseError("declared " + std::to_string(m) + " bins but found " + std::to_string(lines.size() - 2));
  }
  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t j = 0; j < m; ++j) {
    const Line& line = lines[j + 2];
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) fail(line, "expected 'bin <j>: <items>'");
    const auto label = split_ws(line.text.substr(0, colon));
    if (label.size() != 2 || label[0] != "bin") fail(line, "expected 'bin <j>:'");
    if (parse_count(line, label[1], "bin index") != j) fail(line, "bins must be numbered 0..m-1 in order");
    for (auto token : split_ws(line.text.substr(colon + 1))) {
      groups[j].push_back(parse_count(line, token, "item index"));
    }
  }
  return groups;
}

Packing read_packing(std::string_view text, const Instance& instance) {
  return Packing::from_groups(instance, read_packing_groups(text));
}

std::string write_packing(const Packing& packing) {
  std::ostringstream os;
  os << "PACKING v1\n" << "bins " << packing.bin_count() << "\n";
  for (std::size_t b = 0; b < packing.bin_count(); ++b) {
    os << "bin " << b << ":";
    for (std::size_t item : packing[b].items) os << " " << item;
    os << "\n";
  }
  return os.str();
}

std::vector<std::size_t> read_trace(std::string_view text) {
  std::vector<std::size_t> trace;
  for (const auto& line : content_lines(text)) {
    const auto tokens = split_ws(line.text);
    if (tokens.size() != 4 || tokens[0] != "place" || tokens[2] != "->") fail(line, "expected 'place <item> -> <bin>'");
    const std::size_t item = parse_count(line, tokens[1], "item index");
    if (item != trace.size()) fail(line, "trace items must appear in arrival order");
    trace.push_back(parse_count(line, tokens[3], "bin index"));
  }
  return trace;
}

std::string write_trace(const std::vector<std::size_t>& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) os << "place " << i << " -> " << trace[i] << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace cardbin
