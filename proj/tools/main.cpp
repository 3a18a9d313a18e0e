// Command-line surface over the library.  Every subcommand prints
// deterministic JSON (or DOT for the export command); exit code 0 on
// success, 1 when a verification-style check fails (a JSON report is still
// printed), 2 on usage errors.

#include "ayc/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace ayc;

namespace {

struct GroupOpts {
  std::string type;
  std::string matrix_file;
  size_t max_order = 0;  // 0: use env or default
};

void add_group_opts(CLI::App* cmd, GroupOpts& g) {
  cmd->add_option("--type", g.type, "type label (A3, B3, D4, E6, F4, G2, I2(m))");
  cmd->add_option("--matrix", g.matrix_file, "JSON file with {\"m\": [[1,3],[3,1]]}");
  cmd->add_option("--max-order", g.max_order, "enumeration guard");
}

CoxeterSystem build_group(const GroupOpts& g) {
  size_t guard = kDefaultMaxOrder;
  if (const char* env = std::getenv("AY_MAX_ORDER")) guard = std::stoull(env);
  if (g.max_order > 0) guard = g.max_order;
  if (!g.matrix_file.empty()) {
    std::ifstream in(g.matrix_file);
    if (!in) throw error("cannot open matrix file " + g.matrix_file);
    auto j = nlohmann::json::parse(in);
    auto m = j.at("m").get<std::vector<std::vector<int>>>();
    return CoxeterSystem::from_matrix(m, guard);
  }
  if (g.type.empty()) throw error("need --type or --matrix");
  return CoxeterSystem::from_type(g.type, guard);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw error("cannot open output file " + out_path);
    out << text;
  }
  return 0;
}

int emit_json(const OrderedJson& j, const std::string& out_path) {
  return emit(j.dump(2) + "\n", out_path);
}

OrderedJson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file " + path);
  return OrderedJson::parse(in);
}

std::vector<int> parse_gen_list(const CoxeterSystem& sys, const std::string& text) {
  std::vector<int> J;
  for (const auto& tok : split_list(text)) {
    Elem e = parse_word(sys, tok);
    bool ok = false;
    for (int s = 0; s < sys.rank(); ++s)
      if (sys.gen(s) == e) {
        J.push_back(s);
        ok = true;
      }
    if (!ok) throw error("'" + tok + "' is not a generator");
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

Tableau parse_tableau(const std::string& text) {
  Tableau t;
  std::string row;
  auto flush = [&] {
    std::vector<int> r;
    for (const auto& e : split_list(row)) r.push_back(std::stoi(e));
    if (r.empty()) throw error("empty tableau row");
    t.shape.push_back(static_cast<int>(r.size()));
    t.rows.push_back(std::move(r));
    row.clear();
  };
  for (char c : text) {
    if (c == '/')
      flush();
    else
      row += c;
  }
  flush();
  validate_partition(t.shape);
  return t;
}

Partition parse_shape(const std::string& text) {
  Partition p;
  for (const auto& tok : split_list(text)) p.push_back(std::stoi(tok));
  validate_partition(p);
  return p;
}

OrderedJson float_vector_json(const std::vector<double>& v) {
  OrderedJson arr = OrderedJson::array();
  for (double x : v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x + 0.0);  // normalize -0
    arr.push_back(std::string(buf));
  }
  return arr;
}

OrderedJson cell_json(const CoxeterSystem& sys, const Cell& k) {
  OrderedJson out;
  out["schema"] = kSchemaTag;
  out["kind"] = "cell";
  out["members"] = members_json(sys, k.members);
  out["t_internal"] = refl_set_json(sys, k.t_internal);
  out["t_boundary"] = refl_set_json(sys, k.t_boundary);
  OrderedJson dirs;
  for (size_t t = k.t_boundary.find_first(); t != ReflSet::npos;
       t = k.t_boundary.find_next(t))
    dirs[word_string(sys, sys.refl_elem(static_cast<Refl>(t)))] =
        k.out_dir[t] > 0 ? "up" : "down";
  out["out_direction"] = dirs;
  return out;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"abstract Young representations of finite Coxeter groups"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  std::string format = "json";
  app.add_option("--format", format, "json | text (text for info, members and characters)");

  // ---- group ----
  auto* group = app.add_subcommand("group", "group-level queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "orders, reflections, classes");
  GroupOpts info_g;
  add_group_opts(info, info_g);

  // ---- cells ----
  auto* cells = app.add_subcommand("cells", "convexity and descent classes");
  cells->require_subcommand(1);
  GroupOpts cells_g;
  std::string opt_A, opt_D, opt_w, opt_K, opt_t;
  auto* c_class = cells->add_subcommand("class", "generalized descent class W_A^D");
  add_group_opts(c_class, cells_g);
  c_class->add_option("--A", opt_A, "reflections, comma-separated words")->required();
  c_class->add_option("--D", opt_D, "descent subset of A");
  auto* c_acell = cells->add_subcommand("acell", "A-cell of an element");
  add_group_opts(c_acell, cells_g);
  c_acell->add_option("--A", opt_A, "reflections, comma-separated words")->required();
  c_acell->add_option("--w", opt_w, "element word");
  auto* c_convex = cells->add_subcommand("convex", "geodesic convexity of a subset");
  add_group_opts(c_convex, cells_g);
  c_convex->add_option("--K", opt_K, "members, comma-separated words")->required();
  auto* c_cut = cells->add_subcommand("cut", "components after deleting t-edges");
  add_group_opts(c_cut, cells_g);
  c_cut->add_option("--t", opt_t, "reflection word")->required();

  // ---- rep ----
  auto* rep = app.add_subcommand("rep", "build and inspect AY representations");
  rep->require_subcommand(1);
  GroupOpts rep_g;
  std::string r_functional, r_w = "e", r_A, r_norm = "SNN", r_mode = "q1";
  std::string r_table, r_q, r_descent_of;
  bool r_emit_table = false;
  auto add_rep_build_opts = [&](CLI::App* cmd) {
    add_group_opts(cmd, rep_g);
    cmd->add_option("--functional", r_functional, "coordinates, e.g. 1,-2,3");
    cmd->add_option("--w", r_w, "cell seed element (default e)");
    cmd->add_option("--A", r_A, "build the cell as the A-cell of w instead of K^f(w)");
    cmd->add_option("--normalization", r_norm, "SNN | RSN | CSN");
    cmd->add_option("--mode", r_mode, "q1 | hecke");
    cmd->add_option("--from-table", r_table, "coefficient table JSON file");
  };
  auto* r_build = rep->add_subcommand("build", "construct matrices");
  add_rep_build_opts(r_build);
  r_build->add_flag("--emit-table", r_emit_table, "print the coefficient table instead");
  auto* r_verify = rep->add_subcommand("verify", "check quadratic and braid relations");
  add_rep_build_opts(r_verify);
  auto* r_char = rep->add_subcommand("char", "character");
  add_rep_build_opts(r_char);
  r_char->add_option("--q", r_q, "specialize a Hecke character at rational q");
  auto* r_minimal = rep->add_subcommand("minimal", "strong connectivity of b-arcs");
  add_rep_build_opts(r_minimal);
  auto* r_recover = rep->add_subcommand("recover", "recover the functional");
  add_rep_build_opts(r_recover);
  auto* r_bindep = rep->add_subcommand("bindep", "character independence of b-gauge");
  add_rep_build_opts(r_bindep);
  r_bindep->add_option("--descent-of", r_descent_of, "use the descent cell of this element");

  // ---- induce / restrict ----
  GroupOpts ind_g;
  std::string ind_J, ind_psi_table, res_shape, res_tableau;
  bool ind_psi_trivial = false;
  auto* induce_cmd = app.add_subcommand("induce", "induce a parabolic AY pair");
  add_group_opts(induce_cmd, ind_g);
  induce_cmd->add_option("--J", ind_J, "parabolic generators, e.g. s1,s3")->required();
  induce_cmd->add_flag("--psi-trivial", ind_psi_trivial, "trivial psi on {e}");
  induce_cmd->add_option("--psi-table", ind_psi_table, "psi from a table JSON file");
  auto* restrict_cmd = app.add_subcommand("restrict", "restrict to a parabolic");
  add_group_opts(restrict_cmd, ind_g);
  restrict_cmd->add_option("--J", ind_J, "parabolic generators")->required();
  restrict_cmd->add_option("--shape", res_shape, "restrict the Specht rep of this shape");
  restrict_cmd->add_option("--tableau", res_tableau, "tableau rows, e.g. 1,2/3");
  restrict_cmd->add_option("--from-table", r_table, "restrict a table-built rep");

  // ---- specht ----
  auto* specht = app.add_subcommand("specht", "symmetric group example families");
  specht->require_subcommand(1);
  std::string sp_shape, sp_tableau, sp_w, sp_mode = "q1";
  int sp_n = 0;
  bool sp_char = false;
  auto* sp_rep = specht->add_subcommand("rep", "Specht representation of a shape");
  sp_rep->add_option("--n", sp_n, "number of letters (defaults to |shape|)");
  sp_rep->add_option("--shape", sp_shape, "partition, e.g. 2,1")->required();
  sp_rep->add_option("--tableau", sp_tableau, "rows e.g. 1,2/3 (default row reading)");
  sp_rep->add_flag("--char", sp_char, "print the character instead of matrices");
  sp_rep->add_option("--mode", sp_mode, "q1 | hecke");
  auto* sp_oracle = specht->add_subcommand("oracle", "brute-force character oracle");
  sp_oracle->add_option("--shape", sp_shape, "partition")->required();
  GroupOpts sp_g;
  auto* sp_descent = specht->add_subcommand("descent", "descent representation");
  add_group_opts(sp_descent, sp_g);
  sp_descent->add_option("--w", sp_w, "element word")->required();
  sp_descent->add_flag("--char", sp_char, "print the character instead of matrices");
  sp_descent->add_option("--mode", sp_mode, "q1 | hecke");

  // ---- export ----
  auto* export_cmd = app.add_subcommand("export", "graph exports");
  export_cmd->require_subcommand(1);
  GroupOpts exp_g;
  std::string exp_cell_A, exp_cell_w = "e";
  auto* exp_dot = export_cmd->add_subcommand("cayley-dot", "Cayley graph in DOT format");
  add_group_opts(exp_dot, exp_g);
  exp_dot->add_option("--cell-A", exp_cell_A, "color the boundary of this A-cell");
  exp_dot->add_option("--cell-w", exp_cell_w, "seed of the colored cell");

  // let --out (a parent option) appear after the subcommand as well
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, help exits 0
  }

  // -------------------------------------------------------------- group info
  if (info->parsed()) {
    auto sys = build_group(info_g);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "group-info";
    j["type"] = sys.type_label();
    j["rank"] = sys.rank();
    j["order"] = sys.order();
    j["num_reflections"] = sys.num_reflections();
    j["simply_laced"] = sys.is_simply_laced();
    j["irreducible"] = sys.is_irreducible();
    j["longest_element"] = word_string(sys, sys.longest_element());
    OrderedJson cls = OrderedJson::array();
    for (int c = 0; c < sys.num_classes(); ++c) {
      OrderedJson item;
      item["rep"] = word_string(sys, sys.class_rep(c));
      item["size"] = sys.class_members(c).size();
      if (sys.is_type_a()) {
        std::string type;
        for (size_t i = 0; i < sys.class_cycle_type(c).size(); ++i) {
          if (i) type += ",";
          type += std::to_string(sys.class_cycle_type(c)[i]);
        }
        item["cycle_type"] = type;
      }
      cls.push_back(item);
    }
    j["classes"] = cls;
    if (format == "text") {
      std::string t = "type " + sys.type_label() + "\norder " +
                      std::to_string(sys.order()) + "\nreflections " +
                      std::to_string(sys.num_reflections()) + "\nclasses " +
                      std::to_string(sys.num_classes()) + "\nlongest " +
                      word_string(sys, sys.longest_element()) + "\n";
      return emit(t, out_path);
    }
    return emit_json(j, out_path);
  }

  // -------------------------------------------------------------- cells
  if (c_class->parsed() || c_acell->parsed()) {
    auto sys = build_group(cells_g);
    ReflSet A = parse_refl_set(sys, opt_A);
    Cell k = c_class->parsed()
                 ? generalized_descent_class(
                       sys, A, opt_D.empty() ? sys.empty_refl_set() : parse_refl_set(sys, opt_D))
                 : a_cell(sys, A, parse_word(sys, opt_w));
    if (format == "text") {
      std::string t;
      for (Elem w : k.members) t += word_string(sys, w) + "\n";
      return emit(t, out_path);
    }
    return emit_json(cell_json(sys, k), out_path);
  }
  if (c_convex->parsed()) {
    auto sys = build_group(cells_g);
    std::vector<Elem> members;
    for (const auto& tok : split_list(opt_K)) members.push_back(parse_word(sys, tok));
    auto r = is_convex(sys, members);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "convexity";
    j["convex"] = r.convex;
    if (r.convex)
      j["witness"] = nullptr;
    else
      j["witness"] = word_string(sys, r.witness);
    return emit_json(j, out_path);
  }
  if (c_cut->parsed()) {
    auto sys = build_group(cells_g);
    Refl t = sys.refl_of(parse_word(sys, opt_t));
    if (t < 0) throw error("--t is not a reflection");
    auto [c1, c2] = reflection_cut(sys, t);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "reflection-cut";
    j["components"] = OrderedJson::array({members_json(sys, c1), members_json(sys, c2)});
    return emit_json(j, out_path);
  }

  // -------------------------------------------------------------- rep family
  auto rep_mode = [&] { return r_mode == "hecke" ? RepMode::Hecke : RepMode::Q1; };
  auto build_rep_from_opts = [&](const CoxeterSystem& sys) -> AYRep {
    if (!r_table.empty()) {
      auto lt = load_table(sys, read_json_file(r_table));
      return build_from_table(sys, lt.cell, lt.table, lt.gens).rep;
    }
    if (r_functional.empty()) throw error("need --functional or --from-table");
    Functional f = parse_functional(sys, r_functional);
    Elem w = parse_word(sys, r_w);
    Cell k = r_A.empty() ? functional_cell(sys, f, w)
                         : a_cell(sys, parse_refl_set(sys, r_A), w);
    return build_ay_rep(sys, k, f, normalization_from_string(r_norm), rep_mode());
  };

  if (r_build->parsed()) {
    auto sys = build_group(rep_g);
    AYRep r = build_rep_from_opts(sys);
    return emit_json(r_emit_table ? table_json(sys, r) : matrices_json(r), out_path);
  }
  if (r_verify->parsed()) {
    auto sys = build_group(rep_g);
    AYRep r = build_rep_from_opts(sys);
    auto rel = verify_relations(r);
    OrderedJson j = relation_report_json(sys, rel);
    j["schema"] = kSchemaTag;
    emit_json(j, out_path);
    return rel.ok() ? 0 : 1;
  }
  if (r_char->parsed()) {
    auto sys = build_group(rep_g);
    AYRep r = build_rep_from_opts(sys);
    if (format == "text" && r_q.empty()) {
      std::string t;
      auto chi = character(r);
      for (int c = 0; c < sys.num_classes(); ++c)
        t += word_string(sys, sys.class_rep(c)) + " " + chi[c].to_string() + "\n";
      return emit(t, out_path);
    }
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "character";
    if (!r_q.empty()) {
      Rat qv;
      auto slash = r_q.find('/');
      qv = slash == std::string::npos
               ? Rat(Int(r_q))
               : Rat(Int(r_q.substr(0, slash)), Int(r_q.substr(slash + 1)));
      auto chi = character_at(r, qv);
      std::vector<Scalar> sc(chi.begin(), chi.end());
      j["character"] = character_json(sys, sc);
    } else {
      j["character"] = character_json(sys, character(r));
    }
    return emit_json(j, out_path);
  }
  if (r_minimal->parsed()) {
    auto sys = build_group(rep_g);
    AYRep r = build_rep_from_opts(sys);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "minimality";
    j["minimal"] = is_minimal(r);
    return emit_json(j, out_path);
  }
  if (r_recover->parsed()) {
    auto sys = build_group(rep_g);
    AYRep r = build_rep_from_opts(sys);
    auto rec = recover_functional(r);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "recovered-functional";
    j["functional"] = functional_json(rec.f);
    j["genericity"] = genericity_json(sys, rec.genericity);
    return emit_json(j, out_path);
  }
  if (r_bindep->parsed()) {
    auto sys = build_group(rep_g);
    Cell k = [&] {
      if (!r_descent_of.empty()) {
        auto d = sys.descent_set(parse_word(sys, r_descent_of), sys.simple_refl_set());
        return generalized_descent_class(sys, sys.simple_refl_set(), d);
      }
      if (r_functional.empty()) throw error("need --functional or --descent-of");
      return functional_cell(sys, parse_functional(sys, r_functional), parse_word(sys, r_w));
    }();
    Functional f = r_descent_of.empty() ? parse_functional(sys, r_functional)
                                        : height_functional(sys);
    auto res = b_independence_check(sys, k, f);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "b-independence";
    j["equal"] = res.equal;
    OrderedJson chars;
    for (const auto& [n, chi] : res.characters)
      chars[to_string(n)] = character_json(sys, chi);
    if (res.son_character) chars["SON"] = float_vector_json(*res.son_character);
    j["characters"] = chars;
    if (!res.equal) j["differing_class"] = res.differing_class;
    emit_json(j, out_path);
    return res.equal ? 0 : 1;
  }

  // -------------------------------------------------------------- induce
  if (induce_cmd->parsed()) {
    auto sys = build_group(ind_g);
    auto J = parse_gen_list(sys, ind_J);
    AYRep psi = [&]() -> AYRep {
      if (!ind_psi_table.empty()) {
        auto lt = load_table(sys, read_json_file(ind_psi_table));
        return build_from_table(sys, lt.cell, lt.table, lt.gens).rep;
      }
      if (!ind_psi_trivial) throw error("need --psi-trivial or --psi-table");
      return trivial_parabolic_rep(sys, J);
    }();
    auto ind = induce_ay(sys, J, psi);
    auto ctx = make_parabolic(sys, J);
    auto chi = character(ind.result);
    auto oracle = induced_character_oracle(sys, ctx, psi);
    bool rel_ok = verify_relations(ind.result).ok();
    bool minimal = is_minimal(ind.result);
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "induced";
    j["cell"] = members_json(sys, ind.result.cell.members);
    j["dim"] = ind.result.dim();
    j["relations_ok"] = rel_ok;
    j["minimal"] = minimal;
    j["character"] = character_json(sys, chi);
    j["oracle_character"] = character_json(sys, oracle);
    bool match = chi == oracle;
    j["character_matches_oracle"] = match;
    emit_json(j, out_path);
    return (rel_ok && minimal && match) ? 0 : 1;
  }

  // -------------------------------------------------------------- restrict
  if (restrict_cmd->parsed()) {
    auto sys = build_group(ind_g);
    auto J = parse_gen_list(sys, ind_J);
    AYRep r = [&]() -> AYRep {
      if (!r_table.empty()) {
        auto lt = load_table(sys, read_json_file(r_table));
        return build_from_table(sys, lt.cell, lt.table, lt.gens).rep;
      }
      if (res_shape.empty()) throw error("need --shape or --from-table");
      Tableau q = res_tableau.empty() ? Tableau::row_reading(parse_shape(res_shape))
                                      : parse_tableau(res_tableau);
      return specht_rep(sys, q);
    }();
    auto blocks = restrict_ay(r, J);
    auto ctx = make_parabolic(sys, J);
    bool consistent = true;
    for (Elem p : ctx.cosets.parabolic_members) {
      Scalar total(0);
      for (auto& b : blocks) total += trace_of_element(b.block, p);
      if (total != trace_of_element(r, p)) consistent = false;
    }
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "restriction";
    OrderedJson bl = OrderedJson::array();
    for (auto& b : blocks) {
      OrderedJson item;
      item["coset_rep"] = word_string(sys, b.rep_elem);
      item["cell"] = members_json(sys, b.block.cell.members);
      item["dim"] = b.block.dim();
      bl.push_back(item);
    }
    j["blocks"] = bl;
    j["character_sum_consistent"] = consistent;
    emit_json(j, out_path);
    return consistent ? 0 : 1;
  }

  // -------------------------------------------------------------- specht
  if (sp_rep->parsed()) {
    Partition shape = parse_shape(sp_shape);
    int n = sp_n > 0 ? sp_n : partition_sum(shape);
    if (n != partition_sum(shape)) throw error("--n does not match the shape");
    auto sys = CoxeterSystem::from_type("A" + std::to_string(n - 1));
    Tableau q = sp_tableau.empty() ? Tableau::row_reading(shape) : parse_tableau(sp_tableau);
    AYRep r = specht_rep(sys, q, Normalization::SNN,
                         sp_mode == "hecke" ? RepMode::Hecke : RepMode::Q1);
    if (sp_char) {
      OrderedJson j;
      j["schema"] = kSchemaTag;
      j["kind"] = "character";
      j["character"] = character_json(sys, character(r));
      return emit_json(j, out_path);
    }
    return emit_json(matrices_json(r), out_path);
  }
  if (sp_oracle->parsed()) {
    auto o = specht_oracle(parse_shape(sp_shape));
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "specht-oracle";
    j["dimension"] = o.dimension;
    OrderedJson cls = OrderedJson::array();
    for (const auto& c : o.classes) {
      std::string type;
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) type += ",";
        type += std::to_string(c[i]);
      }
      cls.push_back(type);
    }
    j["classes"] = cls;
    j["character"] = float_vector_json(o.character);
    return emit_json(j, out_path);
  }
  if (sp_descent->parsed()) {
    auto sys = build_group(sp_g);
    AYRep r = descent_rep(sys, parse_word(sys, sp_w), Normalization::SNN,
                          sp_mode == "hecke" ? RepMode::Hecke : RepMode::Q1);
    if (sp_char) {
      OrderedJson j;
      j["schema"] = kSchemaTag;
      j["kind"] = "character";
      j["character"] = character_json(sys, character(r));
      return emit_json(j, out_path);
    }
    return emit_json(matrices_json(r), out_path);
  }

  // -------------------------------------------------------------- export
  if (exp_dot->parsed()) {
    auto sys = build_group(exp_g);
    std::optional<Cell> cell;
    if (!exp_cell_A.empty())
      cell = a_cell(sys, parse_refl_set(sys, exp_cell_A), parse_word(sys, exp_cell_w));
    return emit(cayley_dot(sys, cell ? &*cell : nullptr), out_path);
  }

  throw error("no subcommand handled");
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const non_generic_error& e) {
    OrderedJson j;
    j["schema"] = kSchemaTag;
    j["kind"] = "error";
    j["error"] = e.what();
    j["generic"] = false;
    std::cout << j.dump(2) << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
