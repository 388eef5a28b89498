#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace isocert::exactalg {

class SymbolTable;
using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Ordered, immutable list of distinct symbol names.  The position of a
/// symbol fixes its rank in the graded-lexicographic monomial order: the
/// first symbol is the most significant.
class SymbolTable {
 public:
  static constexpr std::size_t kMaxSymbols = 32;

  explicit SymbolTable(std::vector<std::string> names);

  static SymbolTablePtr make(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Index of `name`; throws UnboundSymbol if absent.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

/// Same table object, or structurally identical tables.
bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b);

// Canonical names of the frame symbols.  h_ijk is fully symmetric, so its
// indices are sorted here, once, at interning time.
std::string lambda_name(int i);
std::string h_name(int i, int j, int k);
std::string curvature_name(int i, int j);  // R_ijij, i != j, stored with i < j

/// lam1..lam4, the twenty h_ijk with i<=j<=k, and the six R_ijij with i<j.
const SymbolTablePtr& frame_symbols();

}  // namespace isocert::exactalg
