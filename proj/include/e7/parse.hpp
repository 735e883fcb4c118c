#pragma once

#include "e7/mpoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace e7 {

class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : AlgebraError(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: sums/differences of products of factors; a factor is an integer,
// a ring variable, the field generator or a parenthesised expression, with
// an optional ^n. Division is allowed by nonzero constants only.
MPoly parse_poly(std::string_view text, const RingPtr& ring);
FieldElem parse_field_elem(std::string_view text, const ExtField& field);

// Inverse of parse_poly: extension coefficients are written out one
// generator power per term.
std::string to_text(const MPoly& p);

// Key/value store read from the fixture format:
//   # comment
//   [section]
//   key = expression
//       continued expression (leading whitespace)
class DataFile {
 public:
  static DataFile parse(std::string_view text);
  static DataFile load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  const std::string& get(const std::string& section, const std::string& key) const;
  // Keys of one section in file order.
  std::vector<std::string> keys(const std::string& section) const;
  std::vector<std::string> sections() const { return order_; }

 private:
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> data_;
  std::vector<std::string> order_;
};

}  // namespace e7
