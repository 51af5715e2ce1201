#ifndef GGM_CORE_HPP
#define GGM_CORE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggm {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A non-finite entry in the input data; row/col are 0-based.
class NonFiniteError : public Error {
 public:
  NonFiniteError(int row, int col);
  int row, col;
};

class TooFewRowsError : public Error {
 public:
  explicit TooFewRowsError(int n);
};

class TooFewColsError : public Error {
 public:
  explicit TooFewColsError(int p);
};

class DuplicateNameError : public Error {
 public:
  explicit DuplicateNameError(const std::string& name);
};

class DimensionMismatchError : public Error {
 public:
  DimensionMismatchError(int a, int b);
};

/// Default variable labels X1..Xp.
std::vector<std::string> default_names(int p);

/// Validated n×p sample. Immutable after construction; safe to share across
/// threads. Invariants: n ≥ 2, p ≥ 3 (a pair always needs a nonempty
/// conditioning set), all entries finite, names unique and length p.
struct DataMatrix {
  Eigen::MatrixXd values;          // n rows (samples) × p columns (variables)
  std::vector<std::string> names;  // length p

  int n() const { return static_cast<int>(values.rows()); }
  int p() const { return static_cast<int>(values.cols()); }
};

/// Validate raw values + labels into a DataMatrix. Empty `names` defaults to
/// X1..Xp. Throws NonFiniteError / TooFewRowsError / TooFewColsError /
/// DuplicateNameError. Idempotent: re-validating a valid matrix is a no-op.
DataMatrix validate_data(Eigen::MatrixXd values,
                         std::vector<std::string> names = {});

/// p×p matrix of estimated conditional dependence coefficients. Entry (i,j),
/// i≠j, is the coefficient of column i vs column j given the rest; it is not
/// symmetric. The diagonal is fixed at 1 by convention and never consulted by
/// selection. Ordered pairs whose estimate was degenerate (zero denominator)
/// are listed in `excluded` with their entries set to 0.
struct DepMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> excluded;  // ordered (i,j), 0-based, sorted

  int p() const { return static_cast<int>(values.rows()); }
};

/// Undirected graph over p vertices, 0-based internally (1-based only in
/// external file formats). Edges stored once in canonical (i<j) order.
class Graph {
 public:
  explicit Graph(int p, std::vector<std::string> names = {});

  int p() const { return p_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Insert {a,b}; order-insensitive. Throws Error on self-loops or
  /// out-of-range vertices.
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int edge_count() const { return static_cast<int>(edges_.size()); }

 private:
  int p_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::string> names_;
};

/// True iff the edge sets are identical. Throws DimensionMismatchError when
/// the vertex counts differ.
bool graph_equal(const Graph& a, const Graph& b);

struct GraphDiff {
  std::set<std::pair<int, int>> missing;  // in b but not a
  std::set<std::pair<int, int>> extra;    // in a but not b
};

/// b-relative difference: edges a lacks (missing) and edges a has in excess
/// (extra). graph_equal(a,b) iff both sets come back empty.
GraphDiff graph_diff(const Graph& a, const Graph& b);

/// Edge-inclusion comparison. GreaterEqual is the normative rule; Greater is
/// kept for the soft-threshold support equivalence.
enum class EdgeRule { greater_equal, greater };

/// Threshold-selection configuration. lambda ≥ 0; seed drives all randomized
/// tie-breaking downstream.
struct SelectionConfig {
  double lambda = 0.0;
  EdgeRule rule = EdgeRule::greater_equal;
  std::uint64_t seed = 0;
};

}  // namespace ggm

#endif  // GGM_CORE_HPP
