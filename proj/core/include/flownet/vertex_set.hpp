#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flownet {

// An ordered set of distinct vertex labels. The order of the labels is the
// canonical order used for all deterministic iteration and output.
class VertexSet {
 public:
  explicit VertexSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label; throws errc::unknown_vertex if absent.
  int index_of(const std::string& label) const;
  std::optional<int> find(const std::string& label) const;

  bool operator==(const VertexSet& other) const {
    return labels_ == other.labels_;
  }
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

// Labels "a".."z", "aa", "ab", ... used by generators and fixtures.
std::vector<std::string> default_labels(int n);

}  // namespace flownet
