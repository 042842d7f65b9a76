#include "kdrift/syntax.hpp"

#include <cctype>
#include <cstring>

#include "kdrift/error.hpp"

extern "C" const TSLanguage* tree_sitter_c(void);

namespace kdrift::syntax {

Tree::Tree(TSTree* tree, std::string source) : tree_(tree), source_(std::move(source)) {}

std::string_view Tree::text(TSNode node) const noexcept {
  auto b = ts_node_start_byte(node);
  auto e = ts_node_end_byte(node);
  if (b > source_.size() || e > source_.size() || e < b) return {};
  return std::string_view(source_).substr(b, e - b);
}

std::string Tree::signature(TSNode node) const {
  std::string out;
  auto append_leaf = [&](TSNode n) {
    if (ts_node_child_count(n) != 0) return;
    auto t = text(n);
    if (t.empty()) return;
    if (!out.empty()) out += ' ';
    out.append(t);
  };
  if (ts_node_child_count(node) == 0) {
    append_leaf(node);
    return out;
  }
  for_each_descendant(node, append_leaf);
  return out;
}

std::size_t Tree::end_line(TSNode node) const noexcept {
  auto p = ts_node_end_point(node);
  // A node ending at column 0 stops at the end of the previous line.
  if (p.column == 0 && p.row > ts_node_start_point(node).row) return p.row;
  return p.row + 1;
}

CParser::CParser() : parser_(ts_parser_new()) {
  if (!parser_ || !ts_parser_set_language(parser_.get(), tree_sitter_c()))
    throw Error(Errc::parser_unavailable, "c", "tree-sitter C grammar could not be loaded");
}

Tree CParser::parse(std::string_view source) {
  std::string copy(source);
  TSTree* tree = ts_parser_parse_string(parser_.get(), nullptr, copy.data(), static_cast<uint32_t>(copy.size()));
  if (!tree) throw Error(Errc::parser_unavailable, "c", "parse returned no tree");
  return Tree(tree, std::move(copy));
}

std::string_view kind(TSNode node) noexcept {
  if (ts_node_is_missing(node)) return "MISSING";
  if (ts_node_is_error(node)) return "ERROR";
  return ts_node_type(node);
}

void for_each_descendant(TSNode root, const std::function<void(TSNode)>& visit) {
  TSTreeCursor cursor = ts_tree_cursor_new(root);
  if (!ts_tree_cursor_goto_first_child(&cursor)) {
    ts_tree_cursor_delete(&cursor);
    return;
  }
  for (;;) {
    visit(ts_tree_cursor_current_node(&cursor));
    if (ts_tree_cursor_goto_first_child(&cursor)) continue;
    while (!ts_tree_cursor_goto_next_sibling(&cursor)) {
      if (!ts_tree_cursor_goto_parent(&cursor)) {
        ts_tree_cursor_delete(&cursor);
        return;
      }
      if (ts_node_eq(ts_tree_cursor_current_node(&cursor), root)) {
        ts_tree_cursor_delete(&cursor);
        return;
      }
    }
  }
}

std::string declared_name(const Tree& tree, TSNode declarator) {
  TSNode node = declarator;
  for (int depth = 0; depth < 32 && !ts_node_is_null(node); ++depth) {
    std::string_view type = ts_node_type(node);
    if (type == "identifier" || type == "field_identifier" || type == "type_identifier")
      return std::string(tree.text(node));
    if (type == "parenthesized_declarator") {
      node = ts_node_named_child(node, 0);
      continue;
    }
    TSNode next = ts_node_child_by_field_name(node, "declarator", static_cast<uint32_t>(std::strlen("declarator")));
    if (ts_node_is_null(next)) return {};
    node = next;
  }
  return {};
}

bool declares_function(TSNode declarator) {
  TSNode node = declarator;
  for (int depth = 0; depth < 32 && !ts_node_is_null(node); ++depth) {
    std::string_view type = ts_node_type(node);
    if (type == "function_declarator") return true;
    if (type == "parenthesized_declarator") {
      node = ts_node_named_child(node, 0);
      continue;
    }
    node = ts_node_child_by_field_name(node, "declarator", static_cast<uint32_t>(std::strlen("declarator")));
  }
  return false;
}

bool is_macro_name(std::string_view name) noexcept {
  bool has_alpha = false;
  if (name.size() < 2) return false;
  for (char c : name) {
    if (std::isupper(static_cast<unsigned char>(c)))
      has_alpha = true;
    else if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      return false;
  }
  return has_alpha;
}

}  // namespace kdrift::syntax
