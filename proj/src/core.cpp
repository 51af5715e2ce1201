#include "ggm/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ggm {

NonFiniteError::NonFiniteError(int row, int col)
    : Error("non-finite entry at row " + std::to_string(row + 1) + ", column " +
            std::to_string(col + 1)),
      row(row),
      col(col) {}

TooFewRowsError::TooFewRowsError(int n)
    : Error("need at least 2 rows, got " + std::to_string(n)) {}

TooFewColsError::TooFewColsError(int p)
    : Error("need at least 3 columns, got " + std::to_string(p)) {}

DuplicateNameError::DuplicateNameError(const std::string& name)
    : Error("duplicate column name: " + name) {}

DimensionMismatchError::DimensionMismatchError(int a, int b)
    : Error("dimension mismatch: " + std::to_string(a) +
            " vs " + std::to_string(b)) {}

std::vector<std::string> default_names(int p) {
  std::vector<std::string> names;
  names.reserve(p);
  for (int i = 0; i < p; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

DataMatrix validate_data(Eigen::MatrixXd values,
                         std::vector<std::string> names) {
  const int n = static_cast<int>(values.rows());
  const int p = static_cast<int>(values.cols());
  if (n < 2) throw TooFewRowsError(n);
  if (p < 3) throw TooFewColsError(p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(values(i, j))) throw NonFiniteError(i, j);

  if (names.empty()) names = default_names(p);
  if (static_cast<int>(names.size()) != p)
    throw DimensionMismatchError(static_cast<int>(names.size()), p);
  std::unordered_set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw DuplicateNameError(name);

  return DataMatrix{std::move(values), std::move(names)};
}

Graph::Graph(int p, std::vector<std::string> names)
    : p_(p), names_(std::move(names)) {
  if (p < 1) throw Error("graph needs at least one vertex");
  if (!names_.empty() && static_cast<int>(names_.size()) != p)
    throw DimensionMismatchError(static_cast<int>(names_.size()), p);
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw Error("self-loops are not allowed");
  if (a < 0 || b < 0 || a >= p_ || b >= p_)
    throw Error("vertex out of range: (" + std::to_string(a) + "," +
                std::to_string(b) + ") with p=" + std::to_string(p_));
  edges_.emplace(std::min(a, b), std::max(a, b));
}

void Graph::remove_edge(int a, int b) {
  edges_.erase({std::min(a, b), std::max(a, b)});
}

bool Graph::has_edge(int a, int b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool graph_equal(const Graph& a, const Graph& b) {
  if (a.p() != b.p()) throw DimensionMismatchError(a.p(), b.p());
  return a.edges() == b.edges();
}

GraphDiff graph_diff(const Graph& a, const Graph& b) {
  if (a.p() != b.p()) throw DimensionMismatchError(a.p(), b.p());
  GraphDiff diff;
  std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(),
                      a.edges().end(),
                      std::inserter(diff.missing, diff.missing.end()));
  std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(),
                      b.edges().end(),
                      std::inserter(diff.extra, diff.extra.end()));
  return diff;
}

}  // namespace ggm
