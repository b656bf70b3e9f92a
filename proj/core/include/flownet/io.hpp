#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "flownet/network.hpp"
#include "flownet/relation.hpp"

namespace flownet {

// Text formats, line-oriented, LF-terminated, UTF-8, with whole-line
// '#'-comments:
//   edges line:  label,label,uint      (aggregated arc capacities)
//   table line:  label,uint,uint,label (match counts per pairing)
// A leading '#format: edges' or '#format: table' header selects the format;
// edges is the default.

// Parses either format, auto-detecting from the header. Parse failures carry
// the 1-based line number. Vertex order is first-seen, or lexicographic when
// sort_labels is set.
Network parse_network_text(const std::string& text, bool sort_labels = false);

// Every arc in canonical row-major order, zero capacities included, with the
// format header; re-parsing yields the identical network.
std::string serialize_edges(const Network& n);

nlohmann::json network_to_json(const Network& n);
Network network_from_json(const nlohmann::json& j);

// Relations serialize as one membership row string per vertex; re-parsing
// yields the identical membership matrix.
nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

}  // namespace flownet
