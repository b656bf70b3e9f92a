#include "flownet/io.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "flownet/error.hpp"

namespace flownet {
namespace {

struct RawLine {
  std::size_t number = 0;
  std::string text;
};

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

std::int64_t parse_uint_field(const std::string& field, std::size_t line) {
  if (field.empty()) {
    raise(errc::parse_error,
          "line " + std::to_string(line) + ": empty count field");
  }
  std::int64_t value = 0;
  for (char c : field) {
    if (c < '0' || c > '9') {
      raise(errc::parse_error, "line " + std::to_string(line) +
                                   ": not a nonnegative integer: " + field);
    }
    if (__builtin_mul_overflow(value, 10, &value) ||
        __builtin_add_overflow(value, c - '0', &value)) {
      raise(errc::parse_error,
            "line " + std::to_string(line) + ": count overflows");
    }
  }
  return value;
}

std::string check_label(const std::string& field, std::size_t line) {
  if (field.empty()) {
    raise(errc::parse_error,
          "line " + std::to_string(line) + ": empty vertex label");
  }
  return field;
}

struct EdgeEntry {
  std::string from;
  std::string to;
  std::int64_t capacity = 0;
  std::size_t line = 0;
};

Network network_from_edges(const std::vector<EdgeEntry>& edges,
                           bool sort_labels) {
  std::vector<std::string> labels;
  std::map<std::string, bool> seen;
  for (const EdgeEntry& e : edges) {
    for (const std::string& label : {e.from, e.to}) {
      if (seen.emplace(label, true).second) labels.push_back(label);
    }
  }
  if (labels.size() < 2) {
    raise(errc::domain_too_small, "input names fewer than two vertices");
  }
  if (sort_labels) std::sort(labels.begin(), labels.end());
  VertexSet vertices(labels);
  const int n = vertices.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  for (const EdgeEntry& e : edges) {
    const int x = vertices.index_of(e.from);
    const int y = vertices.index_of(e.to);
    if (x == y) {
      raise(errc::parse_error,
            "line " + std::to_string(e.line) + ": self-arc on " + e.from);
    }
    auto& slot = caps[static_cast<std::size_t>(x) * n + y];
    if (__builtin_add_overflow(slot, e.capacity, &slot)) {
      raise(errc::parse_error,
            "line " + std::to_string(e.line) + ": capacity overflows");
    }
  }
  return Network(std::move(vertices), std::move(caps));
}

}  // namespace

Network parse_network_text(const std::string& text, bool sort_labels) {
  std::vector<RawLine> data_lines;
  std::string format = "edges";
  {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line[0] == '#') {
        const std::string header = "#format:";
        if (line.rfind(header, 0) == 0) {
          std::string value = line.substr(header.size());
          value.erase(0, value.find_first_not_of(" \t"));
          if (value != "edges" && value != "table") {
            raise(errc::parse_error, "line " + std::to_string(number) +
                                         ": unknown format: " + value);
          }
          if (saw_data) {
            raise(errc::parse_error, "line " + std::to_string(number) +
                                         ": format header after data");
          }
          format = value;
        }
        continue;
      }
      saw_data = true;
      data_lines.push_back({number, line});
    }
  }

  try {
    if (format == "table") {
      CompetitionTable table;
      for (const RawLine& raw : data_lines) {
        const auto fields = split_fields(raw.text);
        if (fields.size() != 4) {
          raise(errc::parse_error,
                "line " + std::to_string(raw.number) +
                    ": expected label,uint,uint,label");
        }
        TableRow row;
        row.x = check_label(fields[0], raw.number);
        row.x_wins = parse_uint_field(fields[1], raw.number);
        row.y_wins = parse_uint_field(fields[2], raw.number);
        row.y = check_label(fields[3], raw.number);
        if (row.x == row.y) {
          raise(errc::parse_error, "line " + std::to_string(raw.number) +
                                       ": row pits " + row.x +
                                       " against itself");
        }
        table.rows.push_back(std::move(row));
      }
      return from_table(table, sort_labels);
    }

    std::vector<EdgeEntry> edges;
    for (const RawLine& raw : data_lines) {
      const auto fields = split_fields(raw.text);
      if (fields.size() != 3) {
        raise(errc::parse_error, "line " + std::to_string(raw.number) +
                                     ": expected label,label,uint");
      }
      EdgeEntry e;
      e.from = check_label(fields[0], raw.number);
      e.to = check_label(fields[1], raw.number);
      e.capacity = parse_uint_field(fields[2], raw.number);
      e.line = raw.number;
      edges.push_back(std::move(e));
    }
    return network_from_edges(edges, sort_labels);
  } catch (const Error& err) {
    if (err.code() == errc::parse_error ||
        err.code() == errc::domain_too_small) {
      throw;
    }
    raise(errc::parse_error, err.what());
  }
}

std::string serialize_edges(const Network& n) {
  std::string out = "#format: edges\n";
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x == y) continue;
      out += n.vertices().label(x);
      out += ',';
      out += n.vertices().label(y);
      out += ',';
      out += std::to_string(n.capacity(x, y));
      out += '\n';
    }
  }
  return out;
}

nlohmann::json network_to_json(const Network& n) {
  nlohmann::json arcs = nlohmann::json::array();
  for (int x = 0; x < n.size(); ++x) {
    for (int y = 0; y < n.size(); ++y) {
      if (x != y) {
        arcs.push_back({n.vertices().label(x), n.vertices().label(y),
                        n.capacity(x, y)});
      }
    }
  }
  return {{"vertices", n.vertices().labels()}, {"arcs", arcs}};
}

Network network_from_json(const nlohmann::json& j) {
  VertexSet vertices(j.at("vertices").get<std::vector<std::string>>());
  const int n = vertices.size();
  std::vector<std::int64_t> caps(static_cast<std::size_t>(n) * n, 0);
  for (const auto& arc : j.at("arcs")) {
    const int x = vertices.index_of(arc.at(0).get<std::string>());
    const int y = vertices.index_of(arc.at(1).get<std::string>());
    caps[static_cast<std::size_t>(x) * n + y] = arc.at(2).get<std::int64_t>();
  }
  return Network(std::move(vertices), std::move(caps));
}

nlohmann::json relation_to_json(const Relation& r) {
  std::vector<std::string> rows;
  for (int x = 0; x < r.size(); ++x) {
    std::string row;
    for (int y = 0; y < r.size(); ++y) {
      row.push_back(r.contains(x, y) ? '1' : '0');
    }
    rows.push_back(std::move(row));
  }
  return {{"vertices", r.vertices().labels()}, {"rows", rows}};
}

Relation relation_from_json(const nlohmann::json& j) {
  VertexSet vertices(j.at("vertices").get<std::vector<std::string>>());
  const auto rows = j.at("rows").get<std::vector<std::string>>();
  const int n = vertices.size();
  if (static_cast<int>(rows.size()) != n) {
    raise(errc::parse_error, "relation rows do not match the vertex count");
  }
  Relation out = Relation::empty(std::move(vertices));
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n) {
      raise(errc::parse_error, "relation row has wrong length");
    }
    for (int y = 0; y < n; ++y) {
      const char c = rows[x][y];
      if (c != '0' && c != '1') {
        raise(errc::parse_error, "relation rows must be 0/1 strings");
      }
      out.set(x, y, c == '1');
    }
  }
  return out;
}

}  // namespace flownet
