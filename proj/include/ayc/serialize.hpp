// JSON and DOT serialization with fixed orderings, so that identical inputs
// produce byte-identical output.  All structured output carries the schema
// tag "ay-coxeter/1".

#pragma once

#include "ayc/induce.hpp"
#include "ayc/specht.hpp"

#include <json.hpp>

#include <sstream>

namespace ayc {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "ay-coxeter/1";

// --- words <-> strings ---

inline std::string word_string(const CoxeterSystem& sys, Elem w) {
  auto wd = sys.word(w);
  if (wd.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < wd.size(); ++i) {
    if (i) out += ".";
    out += "s" + std::to_string(wd[i] + 1);
  }
  return out;
}

inline Elem parse_word(const CoxeterSystem& sys, const std::string& text) {
  if (text == "e" || text.empty()) return sys.id();
  std::vector<int> word;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.' || text[i] == '*' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != 's') throw error("bad word syntax (want s1.s2...): " + text);
    ++i;
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw error("bad generator in word: " + text);
    int g = std::stoi(text.substr(i, j - i)) - 1;
    if (g < 0 || g >= sys.rank()) throw error("generator out of range in word: " + text);
    word.push_back(g);
    i = j;
  }
  return sys.element_of_word(word);
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline ReflSet parse_refl_set(const CoxeterSystem& sys, const std::string& text) {
  ReflSet a = sys.empty_refl_set();
  for (const auto& tok : split_list(text)) {
    Elem e = parse_word(sys, tok);
    Refl t = sys.refl_of(e);
    if (t < 0) throw error("'" + tok + "' is not a reflection");
    a.set(t);
  }
  return a;
}

inline Functional parse_functional(const CoxeterSystem& sys, const std::string& text) {
  Functional f;
  for (const auto& tok : split_list(text)) {
    auto slash = tok.find('/');
    if (slash == std::string::npos)
      f.push_back(Rat(Int(tok)));
    else
      f.push_back(Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1))));
  }
  if (f.size() != static_cast<size_t>(sys.rank()))
    throw error("functional arity " + std::to_string(f.size()) +
                " does not match rank " + std::to_string(sys.rank()));
  return f;
}

// --- json renderers ---

inline OrderedJson members_json(const CoxeterSystem& sys, const std::vector<Elem>& ms) {
  OrderedJson arr = OrderedJson::array();
  for (Elem w : ms) arr.push_back(word_string(sys, w));
  return arr;
}

inline OrderedJson refl_set_json(const CoxeterSystem& sys, const ReflSet& a) {
  OrderedJson arr = OrderedJson::array();
  for (size_t t = a.find_first(); t != ReflSet::npos; t = a.find_next(t))
    arr.push_back(word_string(sys, sys.refl_elem(static_cast<Refl>(t))));
  return arr;
}

inline OrderedJson functional_json(const Functional& f) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& x : f) arr.push_back(Scalar::to_string_rat(x));
  return arr;
}

inline OrderedJson character_json(const CoxeterSystem& sys,
                                  const std::vector<Scalar>& chi) {
  OrderedJson classes = OrderedJson::array();
  for (int c = 0; c < sys.num_classes(); ++c) {
    if (sys.is_type_a()) {
      std::string type;
      for (size_t i = 0; i < sys.class_cycle_type(c).size(); ++i) {
        if (i) type += ",";
        type += std::to_string(sys.class_cycle_type(c)[i]);
      }
      classes.push_back(type);
    } else {
      classes.push_back(word_string(sys, sys.class_rep(c)));
    }
  }
  OrderedJson values = OrderedJson::array();
  for (const auto& v : chi) values.push_back(v.to_string());
  OrderedJson out;
  out["classes"] = classes;
  out["values"] = values;
  return out;
}

inline OrderedJson matrices_json(const AYRep& rep) {
  const CoxeterSystem& sys = *rep.sys;
  OrderedJson out;
  out["schema"] = kSchemaTag;
  out["kind"] = "matrices";
  out["cell"] = members_json(sys, rep.basis);
  OrderedJson mats;
  for (int s : rep.gens) {
    OrderedJson rows = OrderedJson::array();
    for (size_t i = 0; i < rep.dim(); ++i) {
      OrderedJson row = OrderedJson::array();
      for (size_t j = 0; j < rep.dim(); ++j)
        row.push_back(detail::sparse_entry(rep.mat(s)[i], static_cast<int>(j)).to_string());
      rows.push_back(row);
    }
    mats["s" + std::to_string(s + 1)] = rows;
  }
  out["matrices"] = mats;
  return out;
}

inline OrderedJson table_json(const CoxeterSystem& sys, const AYRep& rep) {
  if (!rep.table) throw error("representation carries no coefficient table");
  const CoefficientTable& tab = *rep.table;
  OrderedJson out;
  out["schema"] = kSchemaTag;
  out["kind"] = "table";
  out["type"] = sys.type_label();
  out["normalization"] = to_string(tab.normalization);
  out["mode"] = tab.mode == RepMode::Hecke ? "hecke" : "q1";
  OrderedJson gens = OrderedJson::array();
  for (int s : rep.gens) gens.push_back("s" + std::to_string(s + 1));
  out["gens"] = gens;
  out["cell"] = members_json(sys, rep.cell.members);
  auto dump_map = [&](const std::map<Refl, Scalar>& m) {
    OrderedJson obj;
    for (const auto& [t, v] : m)
      obj[word_string(sys, sys.refl_elem(t))] = v.to_string();
    return obj;
  };
  out["a_up"] = dump_map(tab.a_up);
  out["a_down"] = dump_map(tab.a_down);
  out["b_up"] = dump_map(tab.b_up);
  out["b_down"] = dump_map(tab.b_down);
  return out;
}

struct LoadedTable {
  Cell cell;
  CoefficientTable table;
  std::vector<int> gens;
};

inline LoadedTable load_table(const CoxeterSystem& sys, const OrderedJson& j) {
  if (!j.contains("schema") || j["schema"] != kSchemaTag)
    throw error("table file is missing the ay-coxeter/1 schema tag");
  LoadedTable out;
  CoefficientTable& tab = out.table;
  tab.normalization = normalization_from_string(j.at("normalization"));
  std::string mode = j.at("mode");
  tab.mode = mode == "hecke" ? RepMode::Hecke : RepMode::Q1;
  tab.params = HeckeParams::constant(tab.mode == RepMode::Hecke ? Scalar::q() : Scalar(1));
  std::vector<Elem> members;
  for (const auto& w : j.at("cell")) members.push_back(parse_word(sys, w));
  out.cell = make_cell(sys, std::move(members));
  for (const auto& g : j.at("gens")) {
    Elem e = parse_word(sys, g);
    bool found = false;
    for (int s = 0; s < sys.rank(); ++s)
      if (sys.gen(s) == e) {
        out.gens.push_back(s);
        found = true;
      }
    if (!found) throw error("gens entry is not a generator");
  }
  auto load_map = [&](const char* key, std::map<Refl, Scalar>& m) {
    if (!j.contains(key)) return;
    for (const auto& [k, v] : j.at(key).items()) {
      Refl t = sys.refl_of(parse_word(sys, k));
      if (t < 0) throw error(std::string("non-reflection key in ") + key);
      m[t] = parse_scalar(v.get<std::string>());
    }
  };
  load_map("a_up", tab.a_up);
  load_map("a_down", tab.a_down);
  load_map("b_up", tab.b_up);
  load_map("b_down", tab.b_down);
  return out;
}

inline OrderedJson relation_report_json(const CoxeterSystem& sys,
                                        const RelationReport& rel) {
  OrderedJson out;
  out["ok"] = rel.ok();
  OrderedJson fails = OrderedJson::array();
  for (const auto& f : rel.failures) {
    OrderedJson item;
    item["kind"] = f.kind;
    item["s"] = "s" + std::to_string(f.s + 1);
    if (f.t >= 0) item["t"] = "s" + std::to_string(f.t + 1);
    if (f.w >= 0) item["w"] = word_string(sys, f.w);
    fails.push_back(item);
  }
  out["failures"] = fails;
  out["quadratic_checked"] = rel.quadratic_checked;
  out["braid_checked"] = rel.braid_checked;
  OrderedJson diag;
  diag["coset_eq10"] = {{"ok", rel.coset_eq10_ok}, {"fail", rel.coset_eq10_fail}};
  diag["coset_dmult"] = {{"ok", rel.coset_dmult_ok}, {"fail", rel.coset_dmult_fail}};
  diag["boundary_pairs"] = {{"ok", rel.boundary_pair_ok}, {"fail", rel.boundary_pair_fail}};
  out["diagnostics"] = diag;
  return out;
}

inline OrderedJson genericity_json(const CoxeterSystem& sys,
                                   const GenericityReport& g) {
  OrderedJson out;
  out["generic"] = g.generic;
  OrderedJson viol = OrderedJson::array();
  for (const auto& v : g.violations) {
    OrderedJson item;
    item["condition"] = v.condition;
    OrderedJson refls = OrderedJson::array();
    for (Refl t : v.refls) refls.push_back(word_string(sys, sys.refl_elem(t)));
    item["reflections"] = refls;
    item["detail"] = v.detail;
    viol.push_back(item);
  }
  out["violations"] = viol;
  return out;
}

/// Cayley graph in DOT: one node per element (labelled by its word), one
/// undirected edge per {w, ws} pair labelled by the generator index.  When
/// a cell is given, its boundary edges are colored red and internal edges
/// blue.
inline std::string cayley_dot(const CoxeterSystem& sys, const Cell* cell) {
  std::ostringstream os;
  os << "graph cayley {\n";
  for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
    os << "  n" << w << " [label=\"" << word_string(sys, w) << "\"];\n";
  for (Elem w = 0; w < static_cast<Elem>(sys.order()); ++w)
    for (int s = 0; s < sys.rank(); ++s) {
      Elem ws = sys.right(w, s);
      if (w >= ws) continue;
      os << "  n" << w << " -- n" << ws << " [label=\"" << (s + 1) << "\"";
      if (cell) {
        bool a = cell->contains(w), b = cell->contains(ws);
        if (a && b)
          os << ", color=blue";
        else if (a || b)
          os << ", color=red";
      }
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace ayc
