#pragma once

// Plain-text serialisation.
//
//   STS v=<v>
//   a b c            one sorted triple per line, triples in canonical order
//
//   COLOURING v=<v> k=<classes>
//   i j k ...        one class per line: indices into the sorted triple list
//
// Writers are byte-reproducible for equal inputs.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "stsd/designs.hpp"

namespace stsd {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

void write_sts(std::ostream& out, const TripleSystem& system);
std::string sts_to_string(const TripleSystem& system);
TripleSystem read_sts(std::istream& in);
TripleSystem parse_sts(const std::string& text);

/// `v` is recorded in the header so a colouring file can be matched to its system.
void write_colouring(std::ostream& out, Point v, const Colouring& colouring);
std::string colouring_to_string(Point v, const Colouring& colouring);
/// Returns the colouring; `v_out` receives the header's order.
Colouring read_colouring(std::istream& in, Point* v_out = nullptr);
Colouring parse_colouring(const std::string& text, Point* v_out = nullptr);

TripleSystem load_sts_file(const std::string& path);
void save_sts_file(const std::string& path, const TripleSystem& system);
Colouring load_colouring_file(const std::string& path, Point* v_out = nullptr);
void save_colouring_file(const std::string& path, Point v, const Colouring& colouring);

}  // namespace stsd
