#include "fct/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace fct {
namespace {

std::string render_table(const Triangle& t) {
  const int n_max = t.n_max();
  // Grid of strings: header row, then one row per n. Columns: label, k
  // columns, sum.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"n\\k"};
  for (int k = 0; k <= n_max; ++k) {
    header.push_back(std::to_string(k));
  }
  header.push_back("sum");
  grid.push_back(std::move(header));
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::string> line{std::to_string(n)};
    for (int k = 0; k <= n_max; ++k) {
      line.push_back(k <= n ? t.cell(n, k).str() : std::string());
    }
    line.push_back(t.row_sum(n).str());
    grid.push_back(std::move(line));
  }

  std::vector<size_t> width(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }

  std::ostringstream os;
  for (const auto& line : grid) {
    std::string rendered;
    for (size_t c = 0; c < line.size(); ++c) {
      if (c > 0) {
        rendered += "  ";
      }
      rendered += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    while (!rendered.empty() && rendered.back() == ' ') {
      rendered.pop_back();
    }
    os << rendered << '\n';
  }
  return os.str();
}

std::string render_csv(const Triangle& t) {
  std::ostringstream os;
  os << 'n';
  for (int k = 0; k <= t.n_max(); ++k) {
    os << ",k" << k;
  }
  os << ",sum\n";
  for (int n = 0; n <= t.n_max(); ++n) {
    os << n;
    for (int k = 0; k <= n; ++k) {
      os << ',' << t.cell(n, k);
    }
    os << ',' << t.row_sum(n) << '\n';
  }
  return os.str();
}

std::string render_json(const Triangle& t) {
  nlohmann::ordered_json j;
  j["p"] = t.p();
  j["n_max"] = t.n_max();
  j["method"] = to_string(t.method());
  auto rows = nlohmann::ordered_json::array();
  auto sums = nlohmann::ordered_json::array();
  for (int n = 0; n <= t.n_max(); ++n) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k <= n; ++k) {
      row.push_back(t.cell(n, k).str());
    }
    rows.push_back(std::move(row));
    sums.push_back(t.row_sum(n).str());
  }
  j["rows"] = std::move(rows);
  j["sums"] = std::move(sums);
  return j.dump(2) + "\n";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) {
    fields.push_back(field);
  }
  return fields;
}

// RFC-style quoting for fields that may contain commas.
std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string histogram_line(const std::map<int, BigInt>& histogram) {
  std::ostringstream os;
  os << "histogram";
  for (const auto& [boxes, count] : histogram) {
    os << "  " << boxes << ':' << count;
  }
  return os.str();
}

}  // namespace

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable:
      return "table";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kJson:
      return "json";
  }
  throw std::logic_error("unknown output format");
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::string render_triangle(const Triangle& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable:
      return render_table(t);
    case OutputFormat::kCsv:
      return render_csv(t);
    case OutputFormat::kJson:
      return render_json(t);
  }
  throw std::logic_error("unknown output format");
}

ParsedTriangle parse_triangle_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("n,", 0) != 0) {
    throw std::runtime_error("csv triangle must start with an n,k0,... header");
  }
  ParsedTriangle parsed;
  int expected_n = 0;
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != static_cast<size_t>(expected_n) + 3) {
      throw std::runtime_error("csv row " + std::to_string(expected_n) +
                               " must carry n, its cells, and the sum");
    }
    if (std::stoi(fields.front()) != expected_n) {
      throw std::runtime_error("csv rows must be consecutive from n=0");
    }
    std::vector<BigInt> row;
    for (size_t i = 1; i + 1 < fields.size(); ++i) {
      row.emplace_back(fields[i]);
    }
    parsed.rows.push_back(std::move(row));
    parsed.sums.emplace_back(fields.back());
    ++expected_n;
  }
  if (parsed.rows.empty()) {
    throw std::runtime_error("csv triangle has no rows");
  }
  return parsed;
}

ParsedTriangle parse_triangle_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ParsedTriangle parsed;
  parsed.p = j.at("p").get<int>();
  parsed.method = parse_method(j.at("method").get<std::string>());
  if (!parsed.method) {
    throw std::runtime_error("unknown method in json triangle");
  }
  for (const auto& row : j.at("rows")) {
    std::vector<BigInt> cells;
    for (const auto& cell : row) {
      cells.emplace_back(cell.get<std::string>());
    }
    parsed.rows.push_back(std::move(cells));
  }
  for (const auto& sum : j.at("sums")) {
    parsed.sums.emplace_back(sum.get<std::string>());
  }
  if (j.at("n_max").get<int>() != static_cast<int>(parsed.rows.size()) - 1) {
    throw std::runtime_error("json triangle n_max does not match rows");
  }
  return parsed;
}

EnumerationListing build_enumeration(Family family, int n) {
  EnumerationListing listing;
  listing.family = family;
  listing.n = n;
  auto add = [&listing](std::string object, int boxes) {
    ++listing.histogram[boxes];
    listing.objects.emplace_back(std::move(object), boxes);
  };
  switch (family) {
    case Family::kMatchings:
      for (const auto& m : enumerate_noncrossing_matchings(n)) {
        add(m.str(), box_count(m));
      }
      break;
    case Family::kPartitions:
      for (const auto& p : enumerate_noncrossing_partitions(n)) {
        add(p.str(), box_count(p));
      }
      break;
    case Family::kDoublePartitions:
      for (const auto& d : enumerate_double_partitions(n)) {
        add(d.str(), box_count(d));
      }
      break;
    case Family::kMatchingDoubles:
      for (const auto& d : enumerate_matching_double_partitions(n)) {
        add(d.str(), box_count(d));
      }
      break;
  }
  return listing;
}

std::string render_enumeration(const EnumerationListing& listing,
                               OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kTable:
      for (const auto& [object, boxes] : listing.objects) {
        os << object << "  " << boxes << '\n';
      }
      os << histogram_line(listing.histogram) << '\n';
      break;
    case OutputFormat::kCsv:
      os << "object,boxes\n";
      for (const auto& [object, boxes] : listing.objects) {
        os << csv_quote(object) << ',' << boxes << '\n';
      }
      os << "# " << histogram_line(listing.histogram) << '\n';
      break;
    case OutputFormat::kJson: {
      nlohmann::ordered_json j;
      j["family"] = to_string(listing.family);
      j["n"] = listing.n;
      auto objects = nlohmann::ordered_json::array();
      for (const auto& [object, boxes] : listing.objects) {
        objects.push_back({{"object", object}, {"boxes", boxes}});
      }
      j["objects"] = std::move(objects);
      auto histogram = nlohmann::ordered_json::object();
      for (const auto& [boxes, count] : listing.histogram) {
        histogram[std::to_string(boxes)] = count.str();
      }
      j["histogram"] = std::move(histogram);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace fct
