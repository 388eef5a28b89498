#include "isocert/exactalg/symbol_table.hpp"

#include <algorithm>
#include <array>

#include "isocert/errors.hpp"

namespace isocert::exactalg {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxSymbols) {
    throw PreconditionError("symbol table holds at most " + std::to_string(kMaxSymbols) + " symbols");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw PreconditionError("empty symbol name");
    if (!lookup_.emplace(names_[i], i).second) {
      throw PreconditionError("duplicate symbol '" + names_[i] + "'");
    }
  }
}

SymbolTablePtr SymbolTable::make(std::vector<std::string> names) {
  return std::make_shared<const SymbolTable>(std::move(names));
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
  const auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymbolTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnboundSymbol(std::string(name));
}

bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

std::string lambda_name(int i) {
  if (i < 1 || i > 4) throw PreconditionError("principal curvature index out of range");
  return "lam" + std::to_string(i);
}

std::string h_name(int i, int j, int k) {
  std::array<int, 3> idx{i, j, k};
  for (int v : idx) {
    if (v < 1 || v > 4) throw PreconditionError("h index out of range");
  }
  std::sort(idx.begin(), idx.end());
  return "h" + std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
}

std::string curvature_name(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) throw PreconditionError("R_ijij needs distinct indices in 1..4");
  if (i > j) std::swap(i, j);
  return "R" + std::to_string(i) + std::to_string(j) + std::to_string(i) + std::to_string(j);
}

const SymbolTablePtr& frame_symbols() {
  static const SymbolTablePtr table = [] {
    std::vector<std::string> names;
    for (int i = 1; i <= 4; ++i) names.push_back(lambda_name(i));
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j)
        for (int k = j; k <= 4; ++k) names.push_back(h_name(i, j, k));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) names.push_back(curvature_name(i, j));
    return SymbolTable::make(std::move(names));
  }();
  return table;
}

}  // namespace isocert::exactalg
