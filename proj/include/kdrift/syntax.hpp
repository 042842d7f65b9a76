#pragma once

#include <tree_sitter/api.h>

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace kdrift::syntax {

/// A parsed C translation unit. Owns the tree and a copy of the source so
/// node text stays valid for the tree's lifetime.
class Tree {
 public:
  Tree(TSTree* tree, std::string source);

  TSNode root() const noexcept { return ts_tree_root_node(tree_.get()); }
  const std::string& source() const noexcept { return source_; }
  std::string_view text(TSNode node) const noexcept;
  /// Leaf texts joined by single spaces; insensitive to layout.
  std::string signature(TSNode node) const;
  /// 1-based inclusive line span.
  std::size_t start_line(TSNode node) const noexcept { return ts_node_start_point(node).row + 1; }
  std::size_t end_line(TSNode node) const noexcept;

 private:
  struct Deleter {
    void operator()(TSTree* t) const noexcept { ts_tree_delete(t); }
  };
  std::unique_ptr<TSTree, Deleter> tree_;
  std::string source_;
};

/// One tree-sitter parser bound to the C grammar. Not shareable across
/// threads; give each task its own.
class CParser {
 public:
  /// Throws Error(parser_unavailable) if the grammar cannot be loaded.
  CParser();
  Tree parse(std::string_view source);

 private:
  struct Deleter {
    void operator()(TSParser* p) const noexcept { ts_parser_delete(p); }
  };
  std::unique_ptr<TSParser, Deleter> parser_;
};

/// Node kind used for counting: "ERROR" for error nodes, "MISSING" for
/// zero-width nodes inserted by error recovery, otherwise the grammar kind.
std::string_view kind(TSNode node) noexcept;

/// Pre-order walk over every descendant of `root` (not `root` itself).
void for_each_descendant(TSNode root, const std::function<void(TSNode)>& visit);

/// Name declared by a declarator chain (function_declarator, pointer_declarator,
/// init_declarator, ...); empty when none.
std::string declared_name(const Tree& tree, TSNode declarator);

/// True when `declarator` (or its nested declarators) is a function declarator.
bool declares_function(TSNode declarator);

bool is_macro_name(std::string_view name) noexcept;

}  // namespace kdrift::syntax
