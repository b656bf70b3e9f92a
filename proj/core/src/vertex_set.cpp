#include "flownet/vertex_set.hpp"

#include "flownet/error.hpp"

namespace flownet {

VertexSet::VertexSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    raise(errc::domain_too_small, "vertex set must not be empty");
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    const std::string& label = labels_[i];
    if (label.empty()) {
      raise(errc::malformed_input, "empty vertex label");
    }
    if (label.find(',') != std::string::npos) {
      raise(errc::malformed_input, "vertex label contains a comma: " + label);
    }
    if (!index_.emplace(label, i).second) {
      raise(errc::malformed_input, "duplicate vertex label: " + label);
    }
  }
}

const std::string& VertexSet::label(int v) const {
  if (v < 0 || v >= size()) {
    raise(errc::unknown_vertex, "vertex index out of range");
  }
  return labels_[v];
}

int VertexSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    raise(errc::unknown_vertex, "unknown vertex label: " + label);
  }
  return it->second;
}

std::optional<int> VertexSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string label;
    int v = i;
    while (true) {
      label.insert(label.begin(), static_cast<char>('a' + v % 26));
      v = v / 26 - 1;
      if (v < 0) break;
    }
    out.push_back(std::move(label));
  }
  return out;
}

}  // namespace flownet
