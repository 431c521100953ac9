#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fct/partitions.hpp"
#include "fct/triangle.hpp"

namespace fct {

enum class OutputFormat { kTable, kCsv, kJson };

std::string to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view text);

// table: aligned columns, blanks for structurally absent cells, trailing sum
//        column (the human layout).
// csv:   header "n,k0,...,k<n_max>,sum"; row n carries its n+1 cells then the
//        sum, nothing blanked.
// json:  {p, n_max, method, rows, sums} with every cell and sum a decimal
//        string.
std::string render_triangle(const Triangle& t, OutputFormat format);

// What the machine formats carry; csv has no order/method line, so those
// fields stay empty when parsing it back.
struct ParsedTriangle {
  std::optional<int> p;
  std::optional<Method> method;
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> sums;
};

ParsedTriangle parse_triangle_csv(const std::string& text);
ParsedTriangle parse_triangle_json(const std::string& text);

struct EnumerationListing {
  Family family = Family::kPartitions;
  int n = 0;
  std::vector<std::pair<std::string, int>> objects;  // canonical string, boxes
  std::map<int, BigInt> histogram;
};

EnumerationListing build_enumeration(Family family, int n);
std::string render_enumeration(const EnumerationListing& listing,
                               OutputFormat format);

}  // namespace fct
