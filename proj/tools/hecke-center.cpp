// Command-line interface for computing in the center of the Iwahori-Hecke
// algebra of the symmetric group: norm-basis expansions, class elements,
// coefficient tables, permutation characters, projections, and the exact
// verification suite.

#include "heckecenter/central.hpp"
#include "heckecenter/combin.hpp"
#include "heckecenter/render.hpp"
#include "heckecenter/symgroup.hpp"

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hecke;

struct Options {
  int n = 0;
  std::string alpha_str, lambda_str;
  std::string format = "text";
  std::string method = "formula";
  int bound = 5;
  int oracle_bound = 7;
  bool q_output = false;
  bool cache_on = true;
  int jobs = 0;
};

Partition partition_arg(const std::string& s, int n, const char* name) {
  Composition c = parse_composition(s);
  if (c.total() != n)
    throw CLI::ValidationError(std::string(name) + " must sum to n (" + to_text(c) + " does not)");
  if (!std::is_sorted(c.parts().begin(), c.parts().end(), std::greater<int>())) {
    std::cerr << "note: " << name << " " << to_text(c) << " normalized to "
              << to_text(Partition::sorted_from(c)) << "\n";
  }
  return Partition::sorted_from(c);
}

Composition composition_arg(const std::string& s, int n, const char* name) {
  Composition c = parse_composition(s);
  if (c.total() != n)
    throw CLI::ValidationError(std::string(name) + " must sum to n (" + to_text(c) + " does not)");
  return c;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

json qhalf_json(const QHalfLaurent& v) {
  json a = json::array();
  for (const auto& [he, c] : v.terms()) a.push_back(json::array({he, static_cast<long long>(c)}));
  return a;
}

int run_expand_norm(const Options& o) {
  const Partition alpha = partition_arg(o.alpha_str, o.n, "--alpha");
  const ExpandMethod m = o.method == "direct" ? ExpandMethod::direct : ExpandMethod::formula;
  const CentralExpansion e = expand_norm(o.n, alpha, m);
  if (o.format == "json") {
    if (o.q_output) {
      json coeffs = json::array();
      for (const auto& [lam, c] : e.coeffs)
        coeffs.push_back(json{{"lambda", to_json(lam)},
                              {"coeff_q", qhalf_json(to_q_half(c, l_lambda(alpha) - l_lambda(lam)))}});
      std::cout << json{{"n", e.n}, {"alpha", to_json(e.alpha)}, {"coeffs", coeffs}}.dump() << "\n";
    } else {
      std::cout << to_json(e).dump() << "\n";
    }
    return 0;
  }
  if (o.format == "csv") {
    std::cout << csv_quote("alpha");
    for (const auto& [lam, c] : e.coeffs) std::cout << "," << csv_quote(to_text(lam));
    std::cout << "\n" << csv_quote(to_text(alpha));
    for (const auto& [lam, c] : e.coeffs) std::cout << "," << to_text(c);
    std::cout << "\n";
    return 0;
  }
  for (const auto& [lam, c] : e.coeffs) {
    std::cout << to_text(lam) << "\t";
    if (o.q_output)
      std::cout << to_text(to_q_half(c, l_lambda(alpha) - l_lambda(lam)));
    else
      std::cout << to_text(c);
    std::cout << "\n";
  }
  return 0;
}

int run_expand_gamma(const Options& o) {
  const Partition lam = partition_arg(o.lambda_str, o.n, "--lambda");
  const HeckeElement& g = gamma(o.n, lam);
  if (o.format == "json") {
    std::cout << to_json(g).dump() << "\n";
    return 0;
  }
  std::cout << to_text(g) << "\n";
  return 0;
}

int run_coeff(const Options& o) {
  const Partition alpha = partition_arg(o.alpha_str, o.n, "--alpha");
  const Partition lam = partition_arg(o.lambda_str, o.n, "--lambda");
  const XiPoly f = formula_coeff(o.n, alpha, lam);
  const int shift = l_lambda(alpha) - l_lambda(lam);
  const bool crosscheck = o.n <= o.bound;
  XiPoly direct;
  if (crosscheck) direct = gamma_coeff(norm_b(o.n, Composition(alpha.parts())), lam);
  if (o.format == "json") {
    json out{{"n", o.n},
             {"alpha", to_json(alpha)},
             {"lambda", to_json(lam)},
             {"formula", to_json(f)}};
    if (o.q_output) out["formula_q"] = qhalf_json(to_q_half(f, shift));
    if (crosscheck) {
      out["direct"] = to_json(direct);
      out["agree"] = (direct == f);
    }
    std::cout << out.dump() << "\n";
    return (crosscheck && !(direct == f)) ? 3 : 0;
  }
  std::cout << (o.q_output ? to_text(to_q_half(f, shift)) : to_text(f)) << "\n";
  if (crosscheck) {
    std::cout << "direct: " << (o.q_output ? to_text(to_q_half(direct, shift)) : to_text(direct))
              << (direct == f ? " (agree)" : " (MISMATCH)") << "\n";
    if (!(direct == f)) return 3;
  }
  return 0;
}

int run_table(const Options& o) {
  const auto& parts = partitions_in_table_order(o.n);
  const ExpandMethod m = o.method == "direct" ? ExpandMethod::direct : ExpandMethod::formula;
  std::vector<CentralExpansion> rows;
  rows.reserve(parts.size());
  for (const auto& a : parts) rows.push_back(expand_norm(o.n, a, m));

  auto cell_text = [&](const Partition& alpha, const Partition& lam, const XiPoly& c) {
    return o.q_output ? to_text(to_q_half(c, l_lambda(alpha) - l_lambda(lam))) : to_text(c);
  };

  if (o.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json cells = json::array();
      for (const auto& [lam, c] : r.coeffs)
        cells.push_back(o.q_output ? qhalf_json(to_q_half(c, l_lambda(r.alpha) - l_lambda(lam)))
                                   : to_json(c));
      jrows.push_back(json{{"alpha", to_json(r.alpha)}, {"cells", cells}});
    }
    json jparts = json::array();
    for (const auto& p : parts) jparts.push_back(to_json(p));
    std::cout << json{{"n", o.n}, {"partitions", jparts}, {"rows", jrows}}.dump() << "\n";
    return 0;
  }
  if (o.format == "csv") {
    std::cout << csv_quote("alpha");
    for (const auto& p : parts) std::cout << "," << csv_quote(to_text(p));
    std::cout << "\n";
    for (const auto& r : rows) {
      std::cout << csv_quote(to_text(r.alpha));
      for (const auto& [lam, c] : r.coeffs) std::cout << "," << cell_text(r.alpha, lam, c);
      std::cout << "\n";
    }
    return 0;
  }
  // text: aligned matrix
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (const auto& p : parts) header.push_back(to_text(p));
  grid.push_back(header);
  for (const auto& r : rows) {
    std::vector<std::string> line{to_text(r.alpha)};
    for (const auto& [lam, c] : r.coeffs) line.push_back(cell_text(r.alpha, lam, c));
    grid.push_back(line);
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& line : grid)
    for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : grid) {
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << line[i] << std::string(width[i] - line[i].size(), ' ');
    }
    std::cout << "\n";
  }
  return 0;
}

int run_character(const Options& o) {
  const Composition lam = composition_arg(o.lambda_str, o.n, "--lambda");
  const Partition alpha = partition_arg(o.alpha_str, o.n, "--alpha");
  const Int v = perm_character(o.n, lam, alpha);
  if (o.format == "json") {
    std::cout << json{{"n", o.n},
                      {"lambda", to_json(lam)},
                      {"alpha", to_json(alpha)},
                      {"value", v.str()}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << v.str() << "\n";
  return 0;
}

int run_project(const Options& o) {
  const Partition alpha = partition_arg(o.alpha_str, o.n, "--alpha");
  const Composition lam = composition_arg(o.lambda_str, o.n, "--lambda");
  const auto entries = project_norm_general(o.n, alpha, lam);
  bool checked = false, check_ok = true;
  if (o.n <= o.bound) {
    HeckeElement sum(o.n);
    for (const auto& e : entries) sum += e.norm.scaled(XiPoly(e.coefficient));
    checked = true;
    check_ok = (sum == project(norm_b(o.n, Composition(alpha.parts())), lam));
  }
  if (o.format == "json") {
    json je = json::array();
    for (const auto& e : entries)
      je.push_back(json{{"theta", to_json(e.theta)},
                        {"coefficient", e.coefficient.str()},
                        {"norm", to_json(e.norm)}});
    json out{{"n", o.n}, {"alpha", to_json(alpha)}, {"lambda", to_json(lam)}, {"entries", je}};
    if (checked) out["matches_projection"] = check_ok;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& e : entries)
      std::cout << to_text(e.theta) << "\t" << e.coefficient.str() << "\t" << to_text(e.norm)
                << "\n";
    if (checked)
      std::cout << "projection check: " << (check_ok ? "ok" : "MISMATCH") << "\n";
  }
  if (checked && !check_ok) throw internal_error("projection decomposition mismatch");
  return 0;
}

int run_verify(const Options& o) {
  if (o.n > o.bound) {
    std::cerr << "error: n exceeds the verification bound (" << o.bound
              << "); raise it with --bound\n";
    return 2;
  }
  const VerifyReport rep = verify_main_theorem(o.n);
  if (o.format == "json") {
    json jf = json::array();
    for (const auto& f : rep.failures) jf.push_back(json{{"check", f.check}, {"detail", f.detail}});
    std::cout << json{{"n", rep.n},
                      {"checks_run", rep.checks_run},
                      {"ok", rep.ok()},
                      {"failures", jf}}
                     .dump()
              << "\n";
  } else {
    std::cout << "n=" << rep.n << " checks=" << rep.checks_run
              << (rep.ok() ? " all equalities hold\n" : " FAILURES:\n");
    for (const auto& f : rep.failures) std::cout << "  " << f.check << ": " << f.detail << "\n";
  }
  return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the center of the Iwahori-Hecke algebra of S_n"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool needs_alpha, bool needs_lambda) {
    cmd->add_option("--n", o.n, "degree of the symmetric group")->required();
    if (needs_alpha) cmd->add_option("--alpha", o.alpha_str, "partition, comma-separated")->required();
    if (needs_lambda) cmd->add_option("--lambda", o.lambda_str, "partition, comma-separated")->required();
    cmd->add_option("--format", o.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--bound", o.bound, "largest n for direct cross-checks")->capture_default_str();
    cmd->add_flag("--q", o.q_output, "render coefficients over Z[q^(1/2), q^(-1/2)]");
    cmd->add_option("--method", o.method, "formula|direct")
        ->check(CLI::IsMember({"formula", "direct"}))
        ->capture_default_str();
    cmd->add_option("--jobs", o.jobs, "worker threads for norm sums (0 = default)");
    cmd->add_option("--cache", o.cache_on, "enable the basis-product memo")->capture_default_str();
  };

  auto* c_en = app.add_subcommand("expand-norm", "coefficients of a norm on the class-element basis");
  add_common(c_en, true, false);
  auto* c_eg = app.add_subcommand("expand-gamma", "a class element on the T basis");
  add_common(c_eg, false, true);
  auto* c_co = app.add_subcommand("coeff", "one coefficient, by the closed formula");
  add_common(c_co, true, true);
  auto* c_ta = app.add_subcommand("table", "full coefficient matrix for degree n");
  add_common(c_ta, false, false);
  auto* c_ch = app.add_subcommand("character", "permutation character value");
  add_common(c_ch, true, true);
  auto* c_pr = app.add_subcommand("project", "projection of a norm onto a parabolic subalgebra");
  add_common(c_pr, true, true);
  auto* c_ve = app.add_subcommand("verify", "run the exact verification suite for degree n");
  add_common(c_ve, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  }

  hecke::product_cache::set_enabled(o.cache_on);
  if (o.jobs > 0) hecke::parallel::set_threads(o.jobs);

  try {
    if (app.got_subcommand(c_en)) return run_expand_norm(o);
    if (app.got_subcommand(c_eg)) return run_expand_gamma(o);
    if (app.got_subcommand(c_co)) return run_coeff(o);
    if (app.got_subcommand(c_ta)) return run_table(o);
    if (app.got_subcommand(c_ch)) return run_character(o);
    if (app.got_subcommand(c_pr)) return run_project(o);
    if (app.got_subcommand(c_ve)) return run_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hecke::internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
