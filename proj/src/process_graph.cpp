#include "causatum/process_graph.hpp"

#include <deque>

#include "causatum/errors.hpp"

namespace causatum {

void ProcessGraph::add_node(const std::string& name,
                            std::optional<int> time_index,
                            std::optional<std::string> place) {
  nodes_[name] = Node{time_index, std::move(place)};
}

void ProcessGraph::add_edge(const std::string& from, const std::string& to) {
  if (!has_node(from) || !has_node(to)) {
    throw DomainError("process edge references unknown event: " + from +
                      " -> " + to);
  }
  successors_[from].insert(to);
  edges_.emplace_back(from, to);
}

bool ProcessGraph::has_node(const std::string& name) const {
  return nodes_.count(name) != 0;
}

const ProcessGraph::Node& ProcessGraph::node(const std::string& name) const {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw DomainError("event '" + name + "' is not in the process graph");
  }
  return it->second;
}

bool ProcessGraph::reachable(const std::string& from,
                             const std::string& to) const {
  if (!has_node(from) || !has_node(to)) {
    throw DomainError("reachability query on unknown event: " + from + " -> " +
                      to);
  }
  if (from == to) return true;
  std::set<std::string> seen{from};
  std::deque<std::string> frontier{from};
  while (!frontier.empty()) {
    std::string current = frontier.front();
    frontier.pop_front();
    auto it = successors_.find(current);
    if (it == successors_.end()) continue;
    for (const auto& next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

}  // namespace causatum
