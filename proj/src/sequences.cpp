#include "fct/sequences.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fct/triangle.hpp"

namespace fct {
namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') {
      return true;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> data_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open " + file.string());
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!is_comment_or_blank(line)) {
      lines.push_back(line);
    }
  }
  return lines;
}

std::vector<BigInt> parse_values(const std::string& text) {
  std::istringstream is(text);
  std::vector<BigInt> values;
  std::string token;
  while (is >> token) {
    values.emplace_back(token);
  }
  return values;
}

SequenceTable parse_sequence(const std::string& header, const std::string& body,
                             const std::filesystem::path& file) {
  int p = 0, start = 0;
  if (std::sscanf(header.c_str(), "p=%d start=%d", &p, &start) != 2) {
    throw std::runtime_error("bad sequence header in " + file.string() + ": " +
                             header);
  }
  SequenceTable table;
  table.name = "signed-sums p=" + std::to_string(p);
  table.start_index = start;
  table.values = parse_values(body);
  if (table.values.empty()) {
    throw std::runtime_error("empty sequence for p=" + std::to_string(p) +
                             " in " + file.string());
  }
  return table;
}

std::vector<SequenceTable> load_signed_sums(const std::filesystem::path& file) {
  const auto lines = data_lines(file);
  if (lines.size() % 2 != 0) {
    throw std::runtime_error("sequence file must alternate header/value lines: " +
                             file.string());
  }
  std::vector<SequenceTable> tables;
  for (size_t i = 0; i < lines.size(); i += 2) {
    tables.push_back(parse_sequence(lines[i], lines[i + 1], file));
  }
  for (size_t i = 0; i < tables.size(); ++i) {
    const std::string expected = "signed-sums p=" + std::to_string(i + 1);
    if (tables[i].name != expected) {
      throw std::runtime_error("sequences must be listed for p = 1..10 in "
                               "order in " + file.string());
    }
  }
  return tables;
}

P5GoldenTable load_p5_table(const std::filesystem::path& file) {
  P5GoldenTable table;
  for (const auto& line : data_lines(file)) {
    const auto bar = line.find('|');
    if (bar == std::string::npos) {
      throw std::runtime_error("missing '|' separator in " + file.string());
    }
    auto cells = parse_values(line.substr(0, bar));
    auto sum = parse_values(line.substr(bar + 1));
    if (cells.empty() || sum.size() != 1) {
      throw std::runtime_error("bad triangle row in " + file.string() + ": " +
                               line);
    }
    table.rows.push_back(std::move(cells));
    table.sums.push_back(sum.front());
  }
  if (table.rows.empty()) {
    throw std::runtime_error("no rows in " + file.string());
  }
  return table;
}

}  // namespace

SequenceTable load_sequence_file_entry(const std::filesystem::path& file, int p) {
  const auto tables = load_signed_sums(file);
  if (p < 1 || p > static_cast<int>(tables.size())) {
    throw std::out_of_range("no sequence stored for p=" + std::to_string(p));
  }
  return tables[static_cast<size_t>(p - 1)];
}

ReferenceData load_reference_data(const std::filesystem::path& data_dir) {
  ReferenceData ref;
  ref.signed_sums = load_signed_sums(data_dir / "signed_sums.txt");
  ref.p5_triangle = load_p5_table(data_dir / "p5_triangle.txt");
  return ref;
}

GoldenCheck check_signed_sums(const ReferenceData& ref, int p) {
  if (p < 1 || p > static_cast<int>(ref.signed_sums.size())) {
    throw std::out_of_range("no stored sequence for p=" + std::to_string(p));
  }
  const SequenceTable& table = ref.signed_sums[static_cast<size_t>(p - 1)];
  const int n_max = table.start_index + static_cast<int>(table.values.size()) - 1;
  const Triangle by_convolution = triangle_convolution({p, n_max});
  const Triangle by_alternating = triangle_alternating({p, n_max});
  for (size_t i = 0; i < table.values.size(); ++i) {
    const int n = table.start_index + static_cast<int>(i);
    for (const Triangle* t : {&by_convolution, &by_alternating}) {
      const BigInt actual = t->signed_row_sum(n);
      if (actual != table.values[i]) {
        std::ostringstream os;
        os << "signed sum (p=" << p << ", n=" << n << ", " << to_string(t->method())
           << "): expected " << table.values[i] << ", actual " << actual;
        return {false, os.str()};
      }
    }
  }
  return {};
}

GoldenCheck check_p5_table(const ReferenceData& ref) {
  const auto& golden = ref.p5_triangle;
  const int n_max = static_cast<int>(golden.rows.size()) - 1;
  const Triangle t = triangle_convolution({5, n_max});
  for (int n = 0; n <= n_max; ++n) {
    const auto& row = golden.rows[static_cast<size_t>(n)];
    for (size_t k = 0; k < row.size(); ++k) {
      const BigInt& actual = t.cell(n, static_cast<int>(k));
      if (actual != row[k]) {
        std::ostringstream os;
        os << "p=5 cell (n=" << n << ", k=" << k << "): expected " << row[k]
           << ", actual " << actual;
        return {false, os.str()};
      }
    }
    const BigInt actual_sum = t.row_sum(n);
    if (actual_sum != golden.sums[static_cast<size_t>(n)]) {
      std::ostringstream os;
      os << "p=5 row sum (n=" << n << "): expected "
         << golden.sums[static_cast<size_t>(n)] << ", actual " << actual_sum;
      return {false, os.str()};
    }
  }
  return {};
}

}  // namespace fct
