#include "rgdual/map_io.hpp"

#include <charconv>
#include <vector>

#include "rgdual/errors.hpp"

namespace rgdual {

namespace {

struct Line {
  std::size_t number;
  std::string_view key;
  std::string_view value;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    auto space = line.find(' ');
    if (space == std::string_view::npos)
      out.push_back({number, line, {}});
    else
      out.push_back({number, line.substr(0, space), line.substr(space + 1)});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  const Line& expect(std::string_view key) {
    if (pos_ >= lines_.size()) fail(last_line(), "missing '" + std::string(key) + "' line");
    const auto& line = lines_[pos_];
    if (line.key != key)
      fail(line.number, "expected '" + std::string(key) + "', found '" + std::string(line.key) + "'");
    ++pos_;
    return line;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  void advance() { ++pos_; }

 private:
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::size_t parse_count(const Line& line) {
  std::size_t value = 0;
  auto* first = line.value.data();
  auto* last = first + line.value.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (line.value.empty() || ec != std::errc{} || ptr != last)
    fail(line.number, "'" + std::string(line.key) + "' needs a non-negative integer");
  return value;
}

Permutation parse_perm_line(const Line& line, std::size_t n) {
  try {
    return parse_cycles(line.value, n);
  } catch (const Error& e) {
    fail(line.number, std::string(line.key) + ": " + e.what());
  }
}

void expect_format(Reader& in, std::string_view kind) {
  const auto& line = in.expect("format");
  if (line.value != std::string(kind) + " 1")
    fail(line.number, "expected 'format " + std::string(kind) + " 1'");
}

}  // namespace

FlagMap parse_flagmap(std::string_view text) {
  Reader in(text);
  expect_format(in, "flagmap");
  const auto n = parse_count(in.expect("flags"));
  auto t0 = parse_perm_line(in.expect("tau0"), n);
  auto t1 = parse_perm_line(in.expect("tau1"), n);
  auto t2 = parse_perm_line(in.expect("tau2"), n);

  std::optional<std::vector<EdgeLabel>> labels;
  while (!in.done()) {
    const auto& line = in.peek();
    if (line.key != "edge") fail(line.number, "unexpected '" + std::string(line.key) + "'");
    auto space = line.value.find(' ');
    if (space == std::string_view::npos) fail(line.number, "expected 'edge <label> <flag>'");
    Line flag_field{line.number, "edge", line.value.substr(space + 1)};
    auto raw = parse_count(flag_field);
    if (raw > n) fail(line.number, "edge flag " + std::to_string(raw) + " outside 1.." + std::to_string(n));
    int flag = static_cast<int>(raw);
    if (!labels) labels.emplace();
    labels->push_back({std::string(line.value.substr(0, space)), flag});
    in.advance();
  }
  return validate_map(n, std::move(t0), std::move(t1), std::move(t2), std::move(labels));
}

std::string write_flagmap(const FlagMap& m) {
  std::string out = "format flagmap 1\n";
  out += "flags " + std::to_string(m.flag_count()) + "\n";
  out += "tau0 " + format_cycles(m.tau0()) + "\n";
  out += "tau1 " + format_cycles(m.tau1()) + "\n";
  out += "tau2 " + format_cycles(m.tau2()) + "\n";
  for (const auto& [label, flag] : m.edge_label_list())
    out += "edge " + label + " " + std::to_string(flag) + "\n";
  return out;
}

RotationSystem parse_rotation(std::string_view text) {
  Reader in(text);
  expect_format(in, "rotation");
  const auto h = parse_count(in.expect("halfedges"));
  auto sv = parse_perm_line(in.expect("sigma_v"), h);
  auto se = parse_perm_line(in.expect("sigma_e"), h);
  if (!in.done()) fail(in.peek().number, "unexpected '" + std::string(in.peek().key) + "'");
  return {std::move(sv), std::move(se)};
}

std::string write_rotation(const RotationSystem& rs) {
  std::string out = "format rotation 1\n";
  out += "halfedges " + std::to_string(rs.halfedge_count()) + "\n";
  out += "sigma_v " + format_cycles(rs.sigma_v()) + "\n";
  out += "sigma_e " + format_cycles(rs.sigma_e()) + "\n";
  return out;
}

MapFile parse_map_file(std::string_view text) {
  Reader in(text);
  const auto& line = in.expect("format");
  if (line.value == "flagmap 1") return parse_flagmap(text);
  if (line.value == "rotation 1") return parse_rotation(text);
  fail(line.number, "unknown format '" + std::string(line.value) + "'");
}

FlagMap as_flag_map(const MapFile& file) {
  if (const auto* m = std::get_if<FlagMap>(&file)) return *m;
  return to_flag_map(std::get<RotationSystem>(file));
}

}  // namespace rgdual
