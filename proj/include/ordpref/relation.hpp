#pragma once

// Finite binary relations over an indexed ground set, stored as dense bit rows.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordpref {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape problems: mismatched ground sets, out-of-range indices, unknown labels.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A value failed its domain invariant (not a partial order, not a closed monoid, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Rows are single machine words, so a ground set holds at most this many elements.
inline constexpr std::size_t kMaxGroundSize = 64;

/// Ordered list of distinct labels. Copies share the label storage; equality
/// is by label list.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels prefix1..prefixN.
  static GroundSet indexed(std::string_view prefix, std::size_t n);

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws StructuralError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Subset of a ground set as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet all(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<std::size_t> indices() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Render as "{a,b}" using the ground set's labels in index order.
std::string to_string(IndexSet set, const GroundSet& ground);

/// Binary relation on a finite ground set. cell(i, j) is true when the pair
/// (element i, element j) belongs to the relation.
class BinaryRelation {
 public:
  /// The empty relation.
  explicit BinaryRelation(GroundSet ground);
  /// rows[i] holds the successors of i; bits beyond the ground size are rejected.
  BinaryRelation(GroundSet ground, std::vector<std::uint64_t> rows);

  static BinaryRelation identity(const GroundSet& ground);
  static BinaryRelation full(const GroundSet& ground);
  static BinaryRelation from_pairs(const GroundSet& ground,
                                   std::span<const std::pair<std::size_t, std::size_t>> pairs);
  static BinaryRelation from_labels(const GroundSet& ground,
                                    std::span<const std::pair<std::string, std::string>> pairs);
  /// Cell (i, j) is bit i*n + j of code. Requires n*n <= 64.
  static BinaryRelation from_code(const GroundSet& ground, std::uint64_t code);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return rows_.size(); }

  bool test(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  IndexSet row(std::size_t i) const { return IndexSet(rows_[i]); }
  std::span<const std::uint64_t> rows() const { return rows_; }

  /// Number of pairs.
  std::size_t count() const;
  bool empty() const;
  std::uint64_t code() const;

  BinaryRelation with_pair(std::size_t i, std::size_t j) const;
  BinaryRelation without_pair(std::size_t i, std::size_t j) const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// "{(y1,y2),(y2,y1)}", pairs sorted by index.
  std::string to_string() const;

  friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
    return a.rows_ == b.rows_ && a.ground_ == b.ground_;
  }
  /// Lexicographic on rows; only meaningful over a common ground set.
  friend bool operator<(const BinaryRelation& a, const BinaryRelation& b) { return a.rows_ < b.rows_; }

 private:
  GroundSet ground_;
  std::vector<std::uint64_t> rows_;
};

void require_same_ground(const GroundSet& a, const GroundSet& b, std::string_view what);

/// Relational product: (i,k) is in the result iff first(i,j) and then(j,k) for some j.
/// In right-to-left notation this is then ∘ first.
BinaryRelation compose(const BinaryRelation& first, const BinaryRelation& then);
BinaryRelation inverse(const BinaryRelation& rel);
BinaryRelation unite(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation intersect(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation subtract(const BinaryRelation& a, const BinaryRelation& b);
bool is_subset(const BinaryRelation& a, const BinaryRelation& b);

struct Projections {
  IndexSet first;     // elements with a successor
  IndexSet second;    // elements with a predecessor
  IndexSet diagonal;  // elements related to themselves
};
Projections projections(const BinaryRelation& rel);

struct Classification {
  bool reflexive = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool preorder = false;
  bool partial_order = false;
  bool idempotent = false;
  bool surjective = false;
  bool total = false;
};
Classification classify(const BinaryRelation& rel);

bool is_reflexive(const BinaryRelation& rel);
bool is_transitive(const BinaryRelation& rel);
bool is_antisymmetric(const BinaryRelation& rel);

BinaryRelation transitive_closure(const BinaryRelation& rel);
bool has_fixed_point(const BinaryRelation& rel);

}  // namespace ordpref
