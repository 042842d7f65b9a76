#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kdrift/udiff.hpp"

namespace kdrift::localize {

enum class SymbolKind { function, struct_, macro };

std::string_view to_string(SymbolKind kind) noexcept;

struct Definition {
  std::string path;
  std::size_t start_line = 0;  // 1-based, inclusive
  std::size_t end_line = 0;
  SymbolKind kind = SymbolKind::function;

  friend auto operator<=>(const Definition&, const Definition&) = default;
};

struct CallSite {
  std::string path;
  std::size_t line = 0;

  friend auto operator<=>(const CallSite&, const CallSite&) = default;
};

struct SymbolIndex {
  std::map<std::string, std::vector<Definition>> definitions;
  std::map<std::string, std::vector<CallSite>> calls;

  bool knows(const std::string& name) const { return definitions.contains(name) || calls.contains(name); }
};

/// Function definitions, struct definitions with a body, #define macros and
/// top-level function-like macro invocations, plus every call site of a
/// plain identifier callee. Throws Error(parser_unavailable).
SymbolIndex index_symbols(const udiff::SourceMap& sources);

/// Identifiers followed by "(" on a line, C keywords excluded.
std::set<std::string> lexical_callees(std::string_view line);

/// Symbols whose definition span contains a deleted line or an insertion
/// point of some hunk, plus callees named on added or deleted lines.
std::set<std::string> affected_symbols(const udiff::UnifiedDiff& diff, const SymbolIndex& index);

struct ContextWindow {
  std::string path;
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  std::string text;
  std::set<std::string> focus_symbols;

  friend bool operator==(const ContextWindow&, const ContextWindow&) = default;
};

inline constexpr std::size_t kDefaultPad = 10;

/// A window per definition of each symbol (for symbols only called, the
/// definitions enclosing their call sites), widened by `pad` lines and merged
/// where they overlap. Throws Error(unknown_symbol).
std::vector<ContextWindow> extract_context(const udiff::SourceMap& sources, const SymbolIndex& index,
                                           const std::set<std::string>& symbols, std::size_t pad = kDefaultPad);

std::string windows_to_json(const std::vector<ContextWindow>& windows);

}  // namespace kdrift::localize
