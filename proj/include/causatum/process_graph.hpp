#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace causatum {

// Declared causal processes: directed edges between events, each edge running
// forward in time. Connectivity here is the artifact's stand-in for
// spatiotemporal contiguity.
class ProcessGraph {
 public:
  struct Node {
    std::optional<int> time_index;
    std::optional<std::string> place;
  };

  void add_node(const std::string& name, std::optional<int> time_index,
                std::optional<std::string> place);
  // Both endpoints must already be nodes; throws DomainError otherwise.
  void add_edge(const std::string& from, const std::string& to);

  bool has_node(const std::string& name) const;
  const Node& node(const std::string& name) const;  // throws DomainError

  // True when a directed path (length >= 1, or from == to) exists.
  bool reachable(const std::string& from, const std::string& to) const;

  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  bool operator==(const ProcessGraph& other) const = default;

 private:
  std::map<std::string, Node> nodes_;
  std::map<std::string, std::set<std::string>> successors_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

}  // namespace causatum
