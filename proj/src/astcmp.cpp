#include "kdrift/astcmp.hpp"

#include <cstring>
#include <vector>

#include <json.hpp>

namespace kdrift::astcmp {

using syntax::CParser;
using syntax::Tree;

NodeTypeCounts& NodeTypeCounts::operator+=(const NodeTypeCounts& other) {
  for (const auto& [k, v] : other.counts) {
    auto& slot = counts[k];
    slot += v;
    if (slot == 0) counts.erase(k);
  }
  return *this;
}

NodeTypeCounts count_node_types(CParser& parser, std::string_view source) {
  NodeTypeCounts out;
  Tree tree = parser.parse(source);
  syntax::for_each_descendant(tree.root(), [&](TSNode n) { ++out.counts[std::string(syntax::kind(n))]; });
  return out;
}

NodeTypeCounts count_node_types(std::string_view source) {
  CParser parser;
  return count_node_types(parser, source);
}

DeltaMap node_delta(const NodeTypeCounts& base, const NodeTypeCounts& patched) {
  DeltaMap out;
  for (const auto& [k, v] : patched.counts) out[k] += v;
  for (const auto& [k, v] : base.counts) out[k] -= v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

NodeDeltaProfile make_profile(const DeltaMap& delta_ref, const DeltaMap& delta_gen) {
  NodeDeltaProfile p;
  p.delta_ref = delta_ref;
  p.delta_gen = delta_gen;
  std::set<std::string> kinds;
  for (const auto& [k, _] : delta_ref) kinds.insert(k);
  for (const auto& [k, _] : delta_gen) kinds.insert(k);
  for (const auto& k : kinds) {
    auto r = delta_ref.contains(k) ? delta_ref.at(k) : 0;
    auto g = delta_gen.contains(k) ? delta_gen.at(k) : 0;
    auto w = std::max(std::llabs(r), std::llabs(g));
    if (w == 0) continue;
    p.weights[k] = w;
    p.node_sims[k] = node_sim(r, g);
  }
  return p;
}

double ast_similarity(const NodeDeltaProfile& profile) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& [k, w] : profile.weights) {
    num += static_cast<double>(w) * profile.node_sims.at(k);
    den += static_cast<double>(w);
  }
  return den == 0.0 ? 1.0 : num / den;
}

AstSimilarity ast_similarity(const NodeTypeCounts& base, const NodeTypeCounts& ref_patched,
                             const NodeTypeCounts& gen_patched) {
  AstSimilarity out;
  out.profile = make_profile(node_delta(base, ref_patched), node_delta(base, gen_patched));
  out.score = ast_similarity(out.profile);
  return out;
}

AstSimilarity ast_similarity(std::string_view base, std::string_view ref_patched, std::string_view gen_patched) {
  CParser parser;
  return ast_similarity(count_node_types(parser, base), count_node_types(parser, ref_patched),
                        count_node_types(parser, gen_patched));
}

namespace {

// name -> multiset of occurrence signatures
using Occurrences = std::map<std::string, std::multiset<std::string>>;

struct ElementIndex {
  Occurrences functions;
  Occurrences calls;
  Occurrences variables;
  Occurrences macros;
};

TSNode field(TSNode node, const char* name) {
  return ts_node_child_by_field_name(node, name, static_cast<uint32_t>(std::strlen(name)));
}

ElementIndex index_elements(const Tree& tree) {
  ElementIndex idx;
  syntax::for_each_descendant(tree.root(), [&](TSNode n) {
    std::string_view type = ts_node_type(n);
    if (type == "function_definition") {
      auto name = syntax::declared_name(tree, field(n, "declarator"));
      if (!name.empty()) idx.functions[name].insert(tree.signature(n));
    } else if (type == "call_expression") {
      TSNode callee = field(n, "function");
      if (ts_node_is_null(callee) || std::string_view(ts_node_type(callee)) != "identifier") return;
      std::string name(tree.text(callee));
      (syntax::is_macro_name(name) ? idx.macros : idx.calls)[name].insert(tree.signature(n));
    } else if (type == "declaration") {
      auto sig = tree.signature(n);
      // `static DEFINE_IDA(x);` parses as type DEFINE_IDA with declarator (x).
      TSNode type_node = field(n, "type");
      TSNode first_decl = field(n, "declarator");
      if (!ts_node_is_null(type_node) && !ts_node_is_null(first_decl) &&
          std::string_view(ts_node_type(type_node)) == "type_identifier" &&
          std::string_view(ts_node_type(first_decl)) == "parenthesized_declarator" &&
          syntax::is_macro_name(tree.text(type_node))) {
        idx.macros[std::string(tree.text(type_node))].insert(sig);
        return;
      }
      uint32_t count = ts_node_child_count(n);
      for (uint32_t i = 0; i < count; ++i) {
        const char* fname = ts_node_field_name_for_child(n, i);
        if (!fname || std::strcmp(fname, "declarator") != 0) continue;
        TSNode d = ts_node_child(n, i);
        auto name = syntax::declared_name(tree, d);
        if (name.empty()) continue;
        if (syntax::declares_function(d)) {
          // `static DEFINE_IDA(x);` parses as a prototype; treat all-caps ones as macro uses.
          if (syntax::is_macro_name(name)) idx.macros[name].insert(sig);
        } else {
          idx.variables[name].insert(sig);
        }
      }
    } else if (type == "macro_type_specifier") {
      TSNode name = field(n, "name");
      if (!ts_node_is_null(name)) idx.macros[std::string(tree.text(name))].insert(tree.signature(n));
    }
  });
  return idx;
}

std::set<std::string> changed_names(const Occurrences& a, const Occurrences& b) {
  std::set<std::string> out;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) out.insert(k);
  }
  for (const auto& [k, v] : b) {
    if (!a.contains(k)) out.insert(k);
  }
  return out;
}

// One entry per occurrence in the symmetric multiset difference.
std::multiset<std::string> changed_occurrences(const Occurrences& a, const Occurrences& b) {
  std::multiset<std::string> out;
  std::set<std::string> names;
  for (const auto& [k, _] : a) names.insert(k);
  for (const auto& [k, _] : b) names.insert(k);
  static const std::multiset<std::string> kEmpty;
  for (const auto& name : names) {
    const auto& x = a.contains(name) ? a.at(name) : kEmpty;
    const auto& y = b.contains(name) ? b.at(name) : kEmpty;
    std::vector<std::string> diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    for (std::size_t i = 0; i < diff.size(); ++i) out.insert(name);
  }
  return out;
}

}  // namespace

SemanticElements& SemanticElements::operator+=(const SemanticElements& other) {
  functions.insert(other.functions.begin(), other.functions.end());
  calls.insert(other.calls.begin(), other.calls.end());
  variables.insert(other.variables.begin(), other.variables.end());
  macros.insert(other.macros.begin(), other.macros.end());
  return *this;
}

SemanticElements extract_semantic_elements(CParser& parser, std::string_view base, std::string_view patched) {
  Tree before = parser.parse(base);
  Tree after = parser.parse(patched);
  auto a = index_elements(before);
  auto b = index_elements(after);
  SemanticElements out;
  out.functions = changed_names(a.functions, b.functions);
  out.calls = changed_occurrences(a.calls, b.calls);
  out.variables = changed_names(a.variables, b.variables);
  out.macros = changed_names(a.macros, b.macros);
  return out;
}

SemanticElements extract_semantic_elements(std::string_view base, std::string_view patched) {
  CParser parser;
  return extract_semantic_elements(parser, base, patched);
}

StaticScoreReport score_sources(const udiff::SourceMap& base, const udiff::SourceMap& ref_patched,
                                const udiff::SourceMap& gen_patched) {
  auto lookup = [](const udiff::SourceMap& m, const std::string& path) -> std::string_view {
    auto it = m.find(path);
    return it == m.end() ? std::string_view{} : std::string_view(it->second);
  };
  std::set<std::string> paths;
  for (const auto* m : {&base, &ref_patched, &gen_patched})
    for (const auto& [p, _] : *m) paths.insert(p);

  CParser parser;
  NodeTypeCounts nb, nr, ng;
  SemanticElements er, eg;
  for (const auto& path : paths) {
    auto b = lookup(base, path);
    auto r = lookup(ref_patched, path);
    auto g = lookup(gen_patched, path);
    if (b == r && b == g) continue;
    nb += count_node_types(parser, b);
    nr += count_node_types(parser, r);
    ng += count_node_types(parser, g);
    er += extract_semantic_elements(parser, b, r);
    eg += extract_semantic_elements(parser, b, g);
  }

  StaticScoreReport rep;
  auto sim = ast_similarity(nb, nr, ng);
  rep.ast_sim = sim.score;
  rep.profile = std::move(sim.profile);
  rep.func_acc = element_accuracy(er.functions, eg.functions);
  rep.call_acc = element_accuracy(er.calls, eg.calls);
  rep.var_acc = element_accuracy(er.variables, eg.variables);
  std::set<std::string> ref_kinds, gen_kinds;
  for (const auto& [k, _] : rep.profile.delta_ref) ref_kinds.insert(k);
  for (const auto& [k, _] : rep.profile.delta_gen) gen_kinds.insert(k);
  rep.node_acc = element_accuracy(ref_kinds, gen_kinds);
  rep.composite = composite_score(rep.ast_sim, rep.func_acc, rep.call_acc, rep.node_acc, rep.var_acc);
  return rep;
}

StaticScoreReport score_patches(const udiff::SourceMap& base, std::string_view ref_patch, std::string_view gen_patch,
                                std::size_t fuzz) {
  auto ref = udiff::apply_with_fallback(base, udiff::parse_diff(ref_patch), fuzz);
  auto gen = udiff::apply_with_fallback(base, udiff::parse_diff(gen_patch), fuzz);
  return score_sources(base, ref, gen);
}

std::string to_json(const StaticScoreReport& report) {
  nlohmann::json j;
  j["ast_sim"] = report.ast_sim;
  j["func_acc"] = report.func_acc;
  j["call_acc"] = report.call_acc;
  j["node_acc"] = report.node_acc;
  j["var_acc"] = report.var_acc;
  j["composite"] = report.composite;
  nlohmann::json profile = nlohmann::json::object();
  for (const auto& [k, w] : report.profile.weights) {
    auto r = report.profile.delta_ref.contains(k) ? report.profile.delta_ref.at(k) : 0;
    auto g = report.profile.delta_gen.contains(k) ? report.profile.delta_gen.at(k) : 0;
    profile[k] = {{"delta_ref", r}, {"delta_gen", g}, {"weight", w}, {"sim", report.profile.node_sims.at(k)}};
  }
  j["profile"] = std::move(profile);
  return j.dump(2);
}

}  // namespace kdrift::astcmp
