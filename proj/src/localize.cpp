#include "kdrift/localize.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include <json.hpp>

#include "kdrift/error.hpp"
#include "kdrift/syntax.hpp"
#include "kdrift/text.hpp"

namespace kdrift::localize {

std::string_view to_string(SymbolKind kind) noexcept {
  switch (kind) {
    case SymbolKind::function: return "function";
    case SymbolKind::struct_: return "struct";
    case SymbolKind::macro: return "macro";
  }
  return "function";
}

namespace {

TSNode field(TSNode node, const char* name) {
  return ts_node_child_by_field_name(node, name, static_cast<uint32_t>(std::strlen(name)));
}

std::string_view type_of(TSNode n) { return ts_node_is_null(n) ? std::string_view{} : ts_node_type(n); }

void index_file(syntax::CParser& parser, const std::string& path, std::string_view source, SymbolIndex& idx) {
  auto tree = parser.parse(source);
  const TSNode root = tree.root();
  auto define = [&](std::string name, TSNode n, SymbolKind kind) {
    if (name.empty()) return;
    idx.definitions[std::move(name)].push_back(Definition{path, tree.start_line(n), tree.end_line(n), kind});
  };
  auto callee = [&](TSNode call) -> std::string {
    TSNode fn = field(call, "function");
    return type_of(fn) == "identifier" ? std::string(tree.text(fn)) : std::string{};
  };

  syntax::for_each_descendant(root, [&](TSNode n) {
    const std::string_view t = ts_node_type(n);
    const bool top = ts_node_eq(ts_node_parent(n), root);
    if (t == "function_definition") {
      define(syntax::declared_name(tree, field(n, "declarator")), n, SymbolKind::function);
    } else if (t == "struct_specifier") {
      TSNode name = field(n, "name");
      if (!ts_node_is_null(field(n, "body")) && !ts_node_is_null(name))
        define(std::string(tree.text(name)), n, SymbolKind::struct_);
    } else if (t == "preproc_def" || t == "preproc_function_def") {
      TSNode name = field(n, "name");
      if (!ts_node_is_null(name)) define(std::string(tree.text(name)), n, SymbolKind::macro);
    } else if (top && t == "expression_statement") {
      TSNode call = ts_node_named_child(n, 0);
      if (type_of(call) == "call_expression") define(callee(call), n, SymbolKind::macro);
    } else if (top && t == "declaration") {
      TSNode type = field(n, "type");
      if (type_of(type) == "type_identifier" && type_of(field(n, "declarator")) == "parenthesized_declarator")
        define(std::string(tree.text(type)), n, SymbolKind::macro);
    }
    if (t == "call_expression") {
      auto name = callee(n);
      if (!name.empty()) idx.calls[name].push_back(CallSite{path, tree.start_line(n)});
    }
  });
}

bool is_c_keyword(std::string_view w) {
  static const char* const kKeywords[] = {"if",     "for",      "while",   "switch",  "return", "sizeof",
                                          "do",     "else",     "case",    "goto",    "typeof", "__typeof__",
                                          "_Alignof", "alignof", "defined", "__attribute__", "asm", "__asm__"};
  return std::any_of(std::begin(kKeywords), std::end(kKeywords), [&](const char* k) { return w == k; });
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Byte offset of the start of each line, plus one past the end.
std::vector<std::size_t> line_offsets(std::string_view text) {
  std::vector<std::size_t> off{0};
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') off.push_back(i + 1);
  if (off.back() != text.size()) off.push_back(text.size());
  return off;
}

}  // namespace

SymbolIndex index_symbols(const udiff::SourceMap& sources) {
  SymbolIndex idx;
  if (sources.empty()) return idx;
  syntax::CParser parser;
  for (const auto& [path, text] : sources) index_file(parser, path, text, idx);
  for (auto& [_, defs] : idx.definitions) std::sort(defs.begin(), defs.end());
  for (auto& [_, sites] : idx.calls) std::sort(sites.begin(), sites.end());
  return idx;
}

std::set<std::string> lexical_callees(std::string_view line) {
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '"' || line[i] == '\'') {
      const char q = line[i++];
      while (i < line.size() && line[i] != q) i += line[i] == '\\' ? 2 : 1;
      ++i;
      continue;
    }
    if (line.substr(i, 2) == "//") break;
    if (!ident_start(line[i]) || (i > 0 && ident_char(line[i - 1]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && ident_char(line[j])) ++j;
    std::size_t k = j;
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    auto word = line.substr(i, j - i);
    if (k < line.size() && line[k] == '(' && !is_c_keyword(word)) out.emplace(word);
    i = j;
  }
  return out;
}

std::set<std::string> affected_symbols(const udiff::UnifiedDiff& diff, const SymbolIndex& index) {
  // path -> [lo, hi] old-side line ranges that must fall inside a definition
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> touched;
  std::set<std::string> out;
  for (const auto& fd : diff.file_diffs) {
    const std::string path = fd.source_path();
    for (const auto& h : fd.hunks) {
      std::size_t old_line = h.old_len == 0 ? h.old_start + 1 : h.old_start;
      bool pending_insert = false;
      for (const auto& l : h.lines) {
        if (l.tag != udiff::LineTag::context) {
          auto names = lexical_callees(l.text);
          out.insert(names.begin(), names.end());
        }
        if (l.tag == udiff::LineTag::del) {
          if (!fd.is_creation()) touched[path].emplace_back(old_line, old_line);
          ++old_line;
          pending_insert = false;
        } else if (l.tag == udiff::LineTag::add) {
          if (!pending_insert && !fd.is_creation() && old_line > 1)
            touched[path].emplace_back(old_line - 1, old_line);
          pending_insert = true;
        } else {
          ++old_line;
          pending_insert = false;
        }
      }
    }
  }
  for (const auto& [name, defs] : index.definitions) {
    for (const auto& d : defs) {
      auto it = touched.find(d.path);
      if (it == touched.end()) continue;
      if (std::any_of(it->second.begin(), it->second.end(),
                      [&](const auto& r) { return d.start_line <= r.first && r.second <= d.end_line; }))
        out.insert(name);
    }
  }
  return out;
}

std::vector<ContextWindow> extract_context(const udiff::SourceMap& sources, const SymbolIndex& index,
                                           const std::set<std::string>& symbols, std::size_t pad) {
  struct Span {
    std::string path;
    std::size_t lo, hi;
    std::string symbol;
  };
  std::vector<Span> spans;
  for (const auto& sym : symbols) {
    if (auto it = index.definitions.find(sym); it != index.definitions.end()) {
      for (const auto& d : it->second) spans.push_back({d.path, d.start_line, d.end_line, sym});
      continue;
    }
    auto calls = index.calls.find(sym);
    if (calls == index.calls.end()) throw Error(Errc::unknown_symbol, sym);
    for (const auto& site : calls->second) {
      const Definition* best = nullptr;
      for (const auto& [_, defs] : index.definitions)
        for (const auto& d : defs)
          if (d.kind == SymbolKind::function && d.path == site.path && d.start_line <= site.line &&
              site.line <= d.end_line && (!best || d.end_line - d.start_line < best->end_line - best->start_line))
            best = &d;
      if (best)
        spans.push_back({site.path, best->start_line, best->end_line, sym});
      else
        spans.push_back({site.path, site.line, site.line, sym});
    }
  }

  std::map<std::string, std::vector<Span>> by_path;
  for (auto& s : spans) {
    auto src = sources.find(s.path);
    if (src == sources.end()) continue;
    const std::size_t n = line_offsets(src->second).size() - 1;
    if (n == 0) continue;
    s.lo = s.lo > pad ? s.lo - pad : 1;
    s.hi = std::min(n, s.hi + pad);
    by_path[s.path].push_back(std::move(s));
  }

  std::vector<ContextWindow> out;
  for (auto& [path, list] : by_path) {
    std::sort(list.begin(), list.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
    const std::string& text = sources.at(path);
    const auto off = line_offsets(text);
    std::vector<ContextWindow> merged;
    for (const auto& s : list) {
      if (!merged.empty() && s.lo <= merged.back().end_line) {
        merged.back().end_line = std::max(merged.back().end_line, s.hi);
        merged.back().focus_symbols.insert(s.symbol);
        continue;
      }
      merged.push_back(ContextWindow{path, s.lo, s.hi, {}, {s.symbol}});
    }
    for (auto& w : merged) {
      w.text = text.substr(off[w.start_line - 1], off[w.end_line] - off[w.start_line - 1]);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string windows_to_json(const std::vector<ContextWindow>& windows) {
  auto arr = nlohmann::json::array();
  for (const auto& w : windows)
    arr.push_back({{"path", w.path},
                   {"start_line", w.start_line},
                   {"end_line", w.end_line},
                   {"text", w.text},
                   {"focus_symbols", w.focus_symbols}});
  return arr.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace kdrift::localize
