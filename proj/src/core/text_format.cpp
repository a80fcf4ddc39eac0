#include "stsd/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace stsd {
namespace {

std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> values;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw ParseError(line_no, "expected a non-negative integer in '" + line + "'");
    values.push_back(value);
    p = next;
  }
  return values;
}

// Parses "KEY=<n>" tokens out of a header such as "STS v=9".
std::uint64_t header_field(const std::string& header, const std::string& key, std::size_t line_no) {
  std::istringstream in(header);
  std::string token;
  in >> token;  // magic
  while (in >> token) {
    if (token.rfind(key + "=", 0) == 0) {
      std::uint64_t value = 0;
      const char* b = token.data() + key.size() + 1;
      const char* e = token.data() + token.size();
      auto [next, ec] = std::from_chars(b, e, value);
      if (ec != std::errc() || next != e || b == e)
        throw ParseError(line_no, "bad value for " + key + " in header '" + header + "'");
      return value;
    }
  }
  throw ParseError(line_no, "header '" + header + "' lacks " + key + "=");
}

bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

void write_sts(std::ostream& out, const TripleSystem& system) {
  out << "STS v=" << system.order() << '\n';
  for (const Triple& t : system.triples()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::string sts_to_string(const TripleSystem& system) {
  std::ostringstream out;
  write_sts(out, system);
  return out.str();
}

TripleSystem read_sts(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError(line_no, "empty input, expected 'STS v=<v>'");
  if (line.rfind("STS", 0) != 0) throw ParseError(line_no, "expected header 'STS v=<v>', got '" + line + "'");
  const std::uint64_t v = header_field(line, "v", line_no);
  if (v == 0 || v > (1u << 20)) throw ParseError(line_no, "order out of range");

  std::vector<Triple> triples;
  while (next_line(in, line, line_no)) {
    auto values = parse_numbers(line, line_no);
    if (values.size() != 3) throw ParseError(line_no, "expected three points, got '" + line + "'");
    for (auto value : values)
      if (value >= v)
        throw ParseError(line_no, "point " + std::to_string(value) + " outside 0.." + std::to_string(v - 1));
    triples.push_back(sorted_triple(static_cast<Point>(values[0]), static_cast<Point>(values[1]),
                                    static_cast<Point>(values[2])));
  }
  try {
    return TripleSystem(static_cast<Point>(v), std::move(triples));
  } catch (const PreconditionError& e) {
    throw ParseError(line_no, e.what());
  }
}

TripleSystem parse_sts(const std::string& text) {
  std::istringstream in(text);
  return read_sts(in);
}

void write_colouring(std::ostream& out, Point v, const Colouring& colouring) {
  out << "COLOURING v=" << v << " k=" << colouring.class_count() << '\n';
  for (const auto& cls : colouring.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
}

std::string colouring_to_string(Point v, const Colouring& colouring) {
  std::ostringstream out;
  write_colouring(out, v, colouring);
  return out.str();
}

Colouring read_colouring(std::istream& in, Point* v_out) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw ParseError(line_no, "empty input, expected 'COLOURING v=<v> k=<k>'");
  if (line.rfind("COLOURING", 0) != 0)
    throw ParseError(line_no, "expected header 'COLOURING v=<v> k=<k>', got '" + line + "'");
  const auto v = header_field(line, "v", line_no);
  const auto k = header_field(line, "k", line_no);
  Colouring colouring;
  // Empty class lines are skipped by next_line, so a class must be nonempty.
  while (next_line(in, line, line_no)) {
    auto values = parse_numbers(line, line_no);
    colouring.classes.emplace_back(values.begin(), values.end());
  }
  if (colouring.class_count() != k)
    throw ParseError(line_no, "header declares " + std::to_string(k) + " classes, found " +
                                  std::to_string(colouring.class_count()));
  if (v_out) *v_out = static_cast<Point>(v);
  return colouring;
}

Colouring parse_colouring(const std::string& text, Point* v_out) {
  std::istringstream in(text);
  return read_colouring(in, v_out);
}

TripleSystem load_sts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_sts(in);
}

void save_sts_file(const std::string& path, const TripleSystem& system) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_sts(out, system);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Colouring load_colouring_file(const std::string& path, Point* v_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_colouring(in, v_out);
}

void save_colouring_file(const std::string& path, Point v, const Colouring& colouring) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_colouring(out, v, colouring);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace stsd
