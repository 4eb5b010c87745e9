#include "vops/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vops/analysis.hpp"
#include "vops/cosetenum.hpp"
#include "vops/errors.hpp"
#include "vops/io.hpp"
#include "vops/operators.hpp"

namespace vops {

namespace {

VoltageOperator load_operator(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.compare(0, prefix.size(), prefix) == 0)
    return builtin(ref.substr(prefix.size()));
  return read_vop_file_validated(ref);
}

void emit_artifact(const std::string& text, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + out_path + "'");
    file << text;
    if (!file) throw IoError("write failed for '" + out_path + "'");
  }
}

std::string cycles(const std::vector<int>& images) {
  std::string s;
  std::vector<char> done(images.size(), 0);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (done[start] || images[start] == static_cast<int>(start)) continue;
    s += '(';
    std::size_t at = start;
    bool first = true;
    while (!done[at]) {
      done[at] = 1;
      if (!first) s += ' ';
      s += std::to_string(at);
      first = false;
      at = static_cast<std::size_t>(images[at]);
    }
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

// Small deterministic generating set: greedily add elements not yet in the
// closure of the chosen ones.
std::vector<FlagPermutation> generating_set(const Premaniplex& p,
                                            const AutomorphismGroup& group) {
  std::vector<FlagPermutation> gens;
  std::size_t closure = 1;
  for (const auto& g : group.elements) {
    if (closure == group.order()) break;
    bool identity = true;
    for (std::size_t i = 0; i < g.images.size(); ++i)
      if (g.images[i] != static_cast<int>(i)) {
        identity = false;
        break;
      }
    if (identity) continue;
    auto candidate = gens;
    candidate.push_back(g);
    std::size_t order = generated_group(p, candidate).order();
    if (order > closure) {
      gens = std::move(candidate);
      closure = order;
    }
  }
  return gens;
}

std::vector<int> parse_color_set(const std::string& text, int rank) {
  std::vector<int> colors;
  if (text == "none" || text.empty()) return colors;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int c = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      colors.push_back(c);
    } catch (const std::exception&) {
      throw DomainError("bad color '" + tok + "' in set");
    }
  }
  for (int c : colors)
    if (c < 0 || c >= rank) throw DomainError("color out of range in set");
  return colors;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "inconclusive";
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NoExtra: return "NoExtra";
    case Verdict::NoExtraBeyondLifts: return "NoExtraBeyondLifts";
    case Verdict::ExtraPresent: return "ExtraPresent";
    default: return "Inconclusive";
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

struct LiftRow {
  int tau;
  int base_image;
  bool preserves;
  bool lifts;
};

std::vector<LiftRow> lift_rows(const Premaniplex& x, const VoltageOperator& op,
                               const AutomorphismGroup& aut_y) {
  std::vector<FlagPermutation> preserving = aut_preserving(op);
  std::vector<LiftRow> rows;
  for (std::size_t t = 0; t < aut_y.elements.size(); ++t) {
    const FlagPermutation& tau = aut_y.elements[t];
    LiftRow row;
    row.tau = static_cast<int>(t);
    row.base_image = tau(op.base);
    row.preserves =
        std::find(preserving.begin(), preserving.end(), tau) != preserving.end();
    row.lifts = find_lift(x, op, tau).has_value();
    rows.push_back(row);
  }
  return rows;
}

int cmd_analyze(const std::string& op_ref, const std::string& x_path,
                std::size_t cap, const std::string& format,
                std::ostream& out) {
  VoltageOperator op = load_operator(op_ref);
  Premaniplex x = read_pmx_file_validated(x_path);
  ConnectivityCheck pc = preserves_connectivity(op, cap);
  if (pc.verdict == Tri::Inconclusive) {
    out << "connectivity inconclusive cosets " << pc.cosets << "\n";
    return 2;
  }
  if (pc.verdict == Tri::No) {
    out << "connectivity no index " << pc.index << "\n";
    throw DomainError("analysis requires a connectivity-preserving operator");
  }
  OrbitAccount account = orbit_accounting(x, op);
  ExtraSymmetryCertificate cert = certify(x, op, cap);
  AutomorphismGroup aut_y = automorphisms(op.y);
  std::vector<LiftRow> lifts = lift_rows(x, op, aut_y);
  LiftedGroup lifted = lifted_group(x, op);
  bool extra = account.product_aut_order > lifted.group.order();

  if (format == "json") {
    nlohmann::json j;
    j["account"] = {{"x-orbits", account.x_orbits},
                    {"y-size", account.y_size},
                    {"x-aut", account.x_aut_order},
                    {"product-aut", account.product_aut_order},
                    {"index", account.index},
                    {"product-orbits", account.product_orbits},
                    {"t", account.t}};
    j["connectivity"] = {{"verdict", "yes"}, {"index", 1}};
    j["records"] = nlohmann::json::array();
    for (const auto& r : cert.records)
      j["records"].push_back({{"y1", r.y1},
                              {"base-orbit", r.in_base_orbit},
                              {"z-flags", r.z_flags},
                              {"covered", r.covered},
                              {"capped", r.capped}});
    j["certificate"] = {{"verdict", verdict_name(cert.verdict)},
                        {"direct", cert.direct_checked}};
    if (cert.direct_checked) {
      j["certificate"]["product-aut"] = cert.product_aut_order;
      j["certificate"]["lifted"] = cert.lifted_order;
    }
    j["lifts"] = nlohmann::json::array();
    for (const auto& row : lifts)
      j["lifts"].push_back({{"tau", row.tau},
                            {"base-image", row.base_image},
                            {"preserves", row.preserves},
                            {"lifts", row.lifts}});
    j["overall"] = {{"aut", account.product_aut_order},
                    {"lifted", lifted.group.order()},
                    {"extra", extra}};
    out << j.dump(2) << "\n";
    return 0;
  }

  out << "account x-orbits " << account.x_orbits << " y-size "
      << account.y_size << " x-aut " << account.x_aut_order << " product-aut "
      << account.product_aut_order << " index " << account.index
      << " product-orbits " << account.product_orbits << " t " << account.t
      << "\n";
  out << "connectivity yes index 1\n";
  for (const auto& r : cert.records)
    out << "record y1 " << r.y1 << " base-orbit " << yesno(r.in_base_orbit)
        << " z-flags " << r.z_flags << " covered " << yesno(r.covered)
        << " capped " << yesno(r.capped) << "\n";
  out << "certificate " << verdict_name(cert.verdict);
  if (cert.direct_checked)
    out << " direct product-aut " << cert.product_aut_order << " lifted "
        << cert.lifted_order;
  out << "\n";
  for (const auto& row : lifts)
    out << "lift tau " << row.tau << " base-image " << row.base_image
        << " preserves " << yesno(row.preserves) << " lifts "
        << yesno(row.lifts) << "\n";
  out << "overall aut " << account.product_aut_order << " lifted "
      << lifted.group.order() << " extra " << yesno(extra) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"voltage operations on premaniplexes"};
  app.require_subcommand(1);
  int exit_code = 0;
  std::function<void()> action;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a .pmx file");
  auto validate_path = std::make_shared<std::string>();
  validate_cmd->add_option("file", *validate_path)->required();
  validate_cmd->callback([&, validate_path] {
    action = [&, validate_path] {
      Premaniplex p = read_pmx_file(*validate_path);
      ValidationReport report = validate(p);
      if (report.ok()) {
        out << "ok rank " << p.rank() << " flags " << p.flag_count() << "\n";
      } else {
        for (const auto& v : report.violations) {
          if (v.kind == Violation::Kind::NotInvolution)
            out << "not-involution flag " << v.flag << " color " << v.color
                << "\n";
          else
            out << "axiom flag " << v.flag << " colors " << v.color << ","
                << v.color2 << "\n";
        }
        out << "invalid " << report.violations.size() << " violations\n";
        exit_code = 1;
      }
    };
  });

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "compute X x Y");
  auto apply_op = std::make_shared<std::string>();
  auto apply_x = std::make_shared<std::string>();
  auto apply_out = std::make_shared<std::string>();
  apply_cmd->add_option("op", *apply_op)->required();
  apply_cmd->add_option("x", *apply_x)->required();
  apply_cmd->add_option("-o,--output", *apply_out);
  apply_cmd->callback([&, apply_op, apply_x, apply_out] {
    action = [&, apply_op, apply_x, apply_out] {
      VoltageOperator op = load_operator(*apply_op);
      Premaniplex x = read_pmx_file_validated(*apply_x);
      emit_artifact(write_pmx_text(product(x, op)), *apply_out, out);
    };
  });

  // aut
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group");
  auto aut_path = std::make_shared<std::string>();
  aut_cmd->add_option("file", *aut_path)->required();
  aut_cmd->callback([&, aut_path] {
    action = [&, aut_path] {
      Premaniplex p = read_pmx_file_validated(*aut_path);
      AutomorphismGroup group = automorphisms(p);
      out << "flags " << p.flag_count() << "\n";
      out << "order " << group.order() << "\n";
      out << "orbits " << group.orbit_lists.size() << "\n";
      auto gens = generating_set(p, group);
      out << "gens " << gens.size() << "\n";
      for (std::size_t i = 0; i < gens.size(); ++i)
        out << "gen " << i << ": " << cycles(gens[i].images) << "\n";
    };
  });

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "flag orbits under Aut");
  auto orbits_path = std::make_shared<std::string>();
  orbits_cmd->add_option("file", *orbits_path)->required();
  orbits_cmd->callback([&, orbits_path] {
    action = [&, orbits_path] {
      Premaniplex p = read_pmx_file_validated(*orbits_path);
      AutomorphismGroup group = automorphisms(p);
      out << "orbits " << group.orbit_lists.size() << "\n";
      for (std::size_t i = 0; i < group.orbit_lists.size(); ++i) {
        out << "orbit " << i << ":";
        for (int flag : group.orbit_lists[i]) out << ' ' << flag;
        out << "\n";
      }
    };
  });

  // stg
  auto* stg_cmd = app.add_subcommand("stg", "symmetry type graph");
  auto stg_path = std::make_shared<std::string>();
  auto stg_out = std::make_shared<std::string>();
  stg_cmd->add_option("file", *stg_path)->required();
  stg_cmd->add_option("-o,--output", *stg_out);
  stg_cmd->callback([&, stg_path, stg_out] {
    action = [&, stg_path, stg_out] {
      Premaniplex p = read_pmx_file_validated(*stg_path);
      emit_artifact(write_pmx_text(stg(p).graph), *stg_out, out);
    };
  });

  // covers / iso
  auto* covers_cmd = app.add_subcommand("covers", "does A cover B?");
  auto covers_a = std::make_shared<std::string>();
  auto covers_b = std::make_shared<std::string>();
  covers_cmd->add_option("a", *covers_a)->required();
  covers_cmd->add_option("b", *covers_b)->required();
  covers_cmd->callback([&, covers_a, covers_b] {
    action = [&, covers_a, covers_b] {
      Premaniplex a = read_pmx_file_validated(*covers_a);
      Premaniplex b = read_pmx_file_validated(*covers_b);
      out << "covers " << yesno(covers(a, b)) << "\n";
    };
  });
  auto* iso_cmd = app.add_subcommand("iso", "are A and B isomorphic?");
  auto iso_a = std::make_shared<std::string>();
  auto iso_b = std::make_shared<std::string>();
  iso_cmd->add_option("a", *iso_a)->required();
  iso_cmd->add_option("b", *iso_b)->required();
  iso_cmd->callback([&, iso_a, iso_b] {
    action = [&, iso_a, iso_b] {
      Premaniplex a = read_pmx_file_validated(*iso_a);
      Premaniplex b = read_pmx_file_validated(*iso_b);
      out << "isomorphic " << yesno(is_isomorphic(a, b)) << "\n";
    };
  });

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "symmetry analysis");
  auto analyze_op = std::make_shared<std::string>();
  auto analyze_x = std::make_shared<std::string>();
  auto analyze_cap = std::make_shared<std::size_t>(kDefaultCosetCap);
  auto analyze_format = std::make_shared<std::string>("text");
  analyze_cmd->add_option("op", *analyze_op)->required();
  analyze_cmd->add_option("x", *analyze_x)->required();
  analyze_cmd->add_option("--cap", *analyze_cap);
  analyze_cmd->add_option("--format", *analyze_format)
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->callback([&, analyze_op, analyze_x, analyze_cap,
                         analyze_format] {
    action = [&, analyze_op, analyze_x, analyze_cap, analyze_format] {
      exit_code =
          cmd_analyze(*analyze_op, *analyze_x, *analyze_cap, *analyze_format,
                      out);
    };
  });

  // lifts
  auto* lifts_cmd = app.add_subcommand("lifts", "which Aut(Y) elements lift");
  auto lifts_op = std::make_shared<std::string>();
  auto lifts_x = std::make_shared<std::string>();
  lifts_cmd->add_option("op", *lifts_op)->required();
  lifts_cmd->add_option("x", *lifts_x)->required();
  lifts_cmd->callback([&, lifts_op, lifts_x] {
    action = [&, lifts_op, lifts_x] {
      VoltageOperator op = load_operator(*lifts_op);
      Premaniplex x = read_pmx_file_validated(*lifts_x);
      AutomorphismGroup aut_y = automorphisms(op.y);
      out << "y-aut " << aut_y.order() << "\n";
      for (const auto& row : lift_rows(x, op, aut_y))
        out << "tau " << row.tau << " base-image " << row.base_image
            << " preserves " << yesno(row.preserves) << " lifts "
            << yesno(row.lifts) << "\n";
      LiftedGroup lifted = lifted_group(x, op);
      out << "lifted-order " << lifted.group.order() << "\n";
      out << "equals-full " << yesno(lifted.equals_full) << "\n";
    };
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "compose two operators");
  auto compose_a = std::make_shared<std::string>();
  auto compose_b = std::make_shared<std::string>();
  auto compose_out = std::make_shared<std::string>();
  compose_cmd->add_option("first", *compose_a)->required();
  compose_cmd->add_option("second", *compose_b)->required();
  compose_cmd->add_option("-o,--output", *compose_out);
  compose_cmd->callback([&, compose_a, compose_b, compose_out] {
    action = [&, compose_a, compose_b, compose_out] {
      VoltageOperator composed =
          compose(load_operator(*compose_a), load_operator(*compose_b));
      emit_artifact(write_vop_text(composed), *compose_out, out);
    };
  });

  // build
  auto* build_cmd = app.add_subcommand("build", "constructions");
  build_cmd->require_subcommand(1);
  auto* coxeter_cmd = build_cmd->add_subcommand("coxeter", "flag graph of a Schlafli symbol");
  auto coxeter_ps = std::make_shared<std::vector<int>>();
  auto coxeter_relators = std::make_shared<std::vector<std::string>>();
  auto coxeter_cap = std::make_shared<std::size_t>(kDefaultCosetCap);
  auto coxeter_out = std::make_shared<std::string>();
  coxeter_cmd->add_option("p", *coxeter_ps)->required();
  coxeter_cmd->add_option("--relator", *coxeter_relators);
  coxeter_cmd->add_option("--cap", *coxeter_cap);
  coxeter_cmd->add_option("-o,--output", *coxeter_out);
  coxeter_cmd->callback([&, coxeter_ps, coxeter_relators, coxeter_cap,
                         coxeter_out] {
    action = [&, coxeter_ps, coxeter_relators, coxeter_cap, coxeter_out] {
      int n = static_cast<int>(coxeter_ps->size()) + 1;
      std::vector<std::vector<int>> extra;
      for (const std::string& text : *coxeter_relators)
        extra.push_back(parse_word(text, n).letters());
      emit_artifact(
          write_pmx_text(coxeter_flag_graph(*coxeter_ps, extra, *coxeter_cap)),
          *coxeter_out, out);
    };
  });
  auto* polygon_cmd = build_cmd->add_subcommand("polygon", "p-gon flag graph");
  auto polygon_p = std::make_shared<int>();
  auto polygon_out = std::make_shared<std::string>();
  polygon_cmd->add_option("p", *polygon_p)->required();
  polygon_cmd->add_option("-o,--output", *polygon_out);
  polygon_cmd->callback([&, polygon_p, polygon_out] {
    action = [&, polygon_p, polygon_out] {
      emit_artifact(write_pmx_text(polygon(*polygon_p)), *polygon_out, out);
    };
  });
  auto* onevertex_cmd = build_cmd->add_subcommand("one-vertex", "1^n");
  auto onevertex_n = std::make_shared<int>();
  auto onevertex_out = std::make_shared<std::string>();
  onevertex_cmd->add_option("n", *onevertex_n)->required();
  onevertex_cmd->add_option("-o,--output", *onevertex_out);
  onevertex_cmd->callback([&, onevertex_n, onevertex_out] {
    action = [&, onevertex_n, onevertex_out] {
      emit_artifact(write_pmx_text(one_vertex(*onevertex_n)), *onevertex_out,
                    out);
    };
  });
  auto* twoflag_cmd = build_cmd->add_subcommand("two-flag", "2_I");
  auto twoflag_n = std::make_shared<int>();
  auto twoflag_set = std::make_shared<std::string>();
  auto twoflag_out = std::make_shared<std::string>();
  twoflag_cmd->add_option("n", *twoflag_n)->required();
  twoflag_cmd->add_option("colors", *twoflag_set)->required();
  twoflag_cmd->add_option("-o,--output", *twoflag_out);
  twoflag_cmd->callback([&, twoflag_n, twoflag_set, twoflag_out] {
    action = [&, twoflag_n, twoflag_set, twoflag_out] {
      emit_artifact(
          write_pmx_text(two_flag(*twoflag_n,
                                  parse_color_set(*twoflag_set, *twoflag_n))),
          *twoflag_out, out);
    };
  });

  // builtin
  auto* builtin_cmd = app.add_subcommand("builtin", "built-in operators");
  builtin_cmd->require_subcommand(1);
  auto* list_cmd = builtin_cmd->add_subcommand("list", "list names");
  list_cmd->callback([&] {
    action = [&] {
      for (const std::string& name : builtin_names()) out << name << "\n";
    };
  });
  auto* export_cmd = builtin_cmd->add_subcommand("export", "write a .vop");
  auto export_name = std::make_shared<std::string>();
  auto export_out = std::make_shared<std::string>();
  export_cmd->add_option("name", *export_name)->required();
  export_cmd->add_option("-o,--output", *export_out);
  export_cmd->callback([&, export_name, export_out] {
    action = [&, export_name, export_out] {
      emit_artifact(write_vop_text(builtin(*export_name)), *export_out, out);
    };
  });

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  auto dot_path = std::make_shared<std::string>();
  auto dot_out = std::make_shared<std::string>();
  dot_cmd->add_option("file", *dot_path)->required();
  dot_cmd->add_option("-o,--output", *dot_out);
  dot_cmd->callback([&, dot_path, dot_out] {
    action = [&, dot_path, dot_out] {
      Premaniplex p = read_pmx_file_validated(*dot_path);
      emit_artifact(write_dot_text(p), *dot_out, out);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }
  try {
    if (action) action();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CappedError& e) {
    err << "inconclusive: " << e.what() << " (partial " << e.partial << ")\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace vops
