#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lmm/acceptance.hpp"
#include "lmm/assemble.hpp"
#include "lmm/diagram.hpp"
#include "lmm/golden.hpp"
#include "lmm/loop_oracle.hpp"
#include "lmm/multi_index.hpp"
#include "lmm/spectral_curve.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_expression(const lmm::Expression& e, bool json) {
  if (json)
    std::cout << lmm::render_json(e) << "\n";
  else
    std::cout << lmm::render_text(e);
}

std::string csv_number(double v) {
  std::ostringstream o;
  o << std::setprecision(17) << v;
  return o.str();
}

void csv_row(const std::string& name, lmm::Complex v) {
  std::cout << name << "," << csv_number(v.real()) << "," << csv_number(v.imag()) << "\n";
}

std::vector<double> parse_points(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--at expects comma-separated real numbers, got '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop equations and Feynman-diagram expansion of the Hermitean one-matrix model"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  int h = 2, k = 1, s = 1, max_h = 5, max_k = 8;
  bool json = false, csv = false, grid = false;
  std::string dot_dir;

  auto* lambda_cmd = app.add_subcommand("lambda", "coupling constant lambda^(H)");
  lambda_cmd->add_option("--h", h, "order")->required()->check(CLI::NonNegativeNumber);
  lambda_cmd->add_flag("--json", json, "JSON output");

  auto* verify_cmd = app.add_subcommand("lambda-verify", "compare lambda^(2..H) with the published tables");
  verify_cmd->add_option("--max-h", max_h, "highest order")->check(CLI::Range(2, 5));

  auto* count_cmd = app.add_subcommand("count-terms", "number of terms in lambda^(h), or the N(k,h) grid");
  count_cmd->add_option("--max-h", max_h, "highest order")->check(CLI::NonNegativeNumber);
  count_cmd->add_flag("--csv", csv, "CSV output");
  count_cmd->add_flag("--grid", grid, "emit N(k,h) for k <= max-k, h <= max-h");
  count_cmd->add_option("--max-k", max_k, "highest leg count for --grid")->check(CLI::NonNegativeNumber);

  auto* mset_cmd = app.add_subcommand("mset", "admissible multi-indices M_k^(h)");
  mset_cmd->add_option("--k", k, "legs")->required()->check(CLI::NonNegativeNumber);
  mset_cmd->add_option("--h", h, "topological index")->required()->check(CLI::NonNegativeNumber);

  auto* diag_cmd = app.add_subcommand("diagrams", "diagram catalog with weights");
  diag_cmd->add_option("--k", k, "external legs")->required()->check(CLI::NonNegativeNumber);
  diag_cmd->add_option("--h", h, "order")->required()->check(CLI::NonNegativeNumber);
  diag_cmd->add_option("--dot", dot_dir, "write one DOT file per diagram and a combined catalog.dot");
  diag_cmd->add_flag("--json", json, "JSON output");

  auto* corr_cmd = app.add_subcommand("correlator", "W_k^(h) as a diagram sum");
  corr_cmd->add_option("--k", k, "external legs")->required()->check(CLI::NonNegativeNumber);
  corr_cmd->add_option("--h", h, "order")->required()->check(CLI::NonNegativeNumber);
  corr_cmd->add_option("--s", s, "number of cuts")->check(CLI::PositiveNumber);
  corr_cmd->add_flag("--json", json, "JSON output");

  auto* oracle_cmd = app.add_subcommand("oracle", "W_1^(h) by residue recursion");
  oracle_cmd->add_option("--h", h, "order")->required()->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--s", s, "number of cuts")->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--json", json, "JSON output");

  auto* cross_cmd = app.add_subcommand("cross-check", "exact comparison of diagram sum and residue recursion for W_1^(h)");
  cross_cmd->add_option("--h", h, "order")->required()->check(CLI::Range(2, 1000));
  cross_cmd->add_option("--s", s, "number of cuts")->check(CLI::PositiveNumber);

  std::string config;
  int fmax = 0, free_energy = -1;
  bool eval = false;
  std::string at;
  auto* curve_cmd = app.add_subcommand("curve", "numeric evaluation on a one-cut spectral curve");
  curve_cmd->add_option("--config", config, "JSON curve configuration")->required()->check(CLI::ExistingFile);
  auto* moments_opt = curve_cmd->add_option("--moments", fmax, "emit y_{f,i} for f = 1..FMAX")->check(CLI::PositiveNumber);
  auto* eval_opt = curve_cmd->add_flag("--eval", eval, "evaluate a correlator or free energy");
  auto* ck = curve_cmd->add_option("--k", k, "external legs")->check(CLI::PositiveNumber);
  auto* ch = curve_cmd->add_option("--h", h, "order")->check(CLI::NonNegativeNumber);
  auto* fe = curve_cmd->add_option("--free-energy", free_energy, "free energy order")->check(CLI::Range(2, 1000));
  curve_cmd->add_option("--at", at, "point values p or p1,...,pk (default 3)");
  moments_opt->excludes(eval_opt);
  fe->excludes(ck)->excludes(ch);

  auto* verify_all = app.add_subcommand("verify-all", "run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (lambda_cmd->parsed()) {
      lmm::CouplingTable table;
      print_expression(table.lambda(h), json);
    } else if (verify_cmd->parsed()) {
      lmm::CouplingTable table;
      bool ok = true;
      for (int order = 2; order <= max_h; ++order) {
        auto r = lmm::compare_lambda(order, table);
        std::cout << (r.equal ? "MATCH    " : "MISMATCH ") << r.summary() << "\n";
        for (const auto& m : r.mismatches) std::cout << "  " << m << "\n";
        ok &= r.equal;
      }
      return ok ? 0 : kFailed;
    } else if (count_cmd->parsed()) {
      if (grid) {
        std::cout << "k,h,count\n";
        for (int kk = 0; kk <= max_k; ++kk)
          for (int hh = 0; hh <= max_h; ++hh) std::cout << kk << "," << hh << "," << lmm::count_terms(kk, hh) << "\n";
      } else {
        lmm::CouplingTable table;
        if (csv) std::cout << "h,count\n";
        for (int order = 0; order <= max_h; ++order) {
          if (order == 1) continue;  // lambda^(1) is the logarithm
          auto n = table.lambda(order).size();
          if (csv)
            std::cout << order << "," << n << "\n";
          else
            std::cout << "h = " << std::setw(2) << order << "  terms = " << n << "\n";
        }
      }
    } else if (mset_cmd->parsed()) {
      for (const auto& a : lmm::enumerate_mset(k, h)) std::cout << a.str() << "\n";
    } else if (diag_cmd->parsed()) {
      auto catalog = lmm::enumerate_diagrams(k, h);
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t i = 0; i < catalog.size(); ++i) {
          std::ostringstream name;
          name << "diagram_" << std::setw(4) << std::setfill('0') << i << ".dot";
          std::ofstream(std::filesystem::path(dot_dir) / name.str()) << lmm::render_dot(catalog[i]);
        }
        std::ofstream(std::filesystem::path(dot_dir) / "catalog.dot") << lmm::render_catalog_dot(catalog);
      }
      if (json) {
        std::cout << lmm::render_catalog_json(catalog) << "\n";
      } else {
        for (std::size_t i = 0; i < catalog.size(); ++i) {
          const auto& d = catalog[i];
          std::cout << i << "  weight " << lmm::symmetry_factor(d).value.get_str() << "  vertices";
          for (const auto& v : d.vertices) std::cout << " " << v.str();
          std::cout << "  edges";
          for (const auto& e : d.edges)
            std::cout << " " << e.a.vertex << "." << e.a.order << "-" << e.b.vertex << "." << e.b.order;
          std::cout << "  legs";
          for (const auto& l : d.legs) std::cout << " " << l.point.name() << "@" << l.vertex << "." << l.order;
          std::cout << "\n";
        }
      }
    } else if (corr_cmd->parsed()) {
      lmm::CouplingTable table;
      print_expression(lmm::correlator(k, h, s, table), json);
    } else if (oracle_cmd->parsed()) {
      print_expression(h == 1 ? lmm::w1_seed(s) : lmm::w1_recursion(h, s), json);
    } else if (cross_cmd->parsed()) {
      lmm::CouplingTable table;
      auto diagrams = lmm::correlator(1, h, s, table);
      auto oracle = lmm::w1_recursion(h, s);
      bool equal = diagrams == oracle;
      std::cout << (equal ? "EQUAL" : "DIFFERENT") << " W_1^(" << h << "), s = " << s << ": " << diagrams.size()
                << " terms from diagrams, " << oracle.size() << " from residue recursion\n";
      return equal ? 0 : kFailed;
    } else if (curve_cmd->parsed()) {
      std::ifstream in(config);
      std::stringstream text;
      text << in.rdbuf();
      auto cfg = lmm::parse_curve_config(text.str());
      auto curve = lmm::solve_endpoints(cfg.potential);
      if (*moments_opt) {
        std::cout << "generator,value_re,value_im\n";
        csv_row("a1", curve.a1);
        csv_row("a2", curve.a2);
        for (int f = 1; f <= fmax; ++f)
          for (int i = 1; i <= 2; ++i) csv_row(lmm::Generator::moment(f, i).name(), lmm::moment(curve, f, i, cfg.quadrature));
      } else if (eval) {
        if (free_energy < 0 && !*ch) throw UsageError("--eval needs --k and --h, or --free-energy");
        int legs = free_energy >= 0 ? 0 : k, order = free_energy >= 0 ? free_energy : h;
        auto labels = lmm::default_labels(legs);
        auto values = at.empty() ? std::vector<double>{3.0} : parse_points(at);
        if (values.size() != 1 && values.size() != labels.size())
          throw UsageError("--at needs one value or one per point");
        lmm::PointBindings bind;
        for (std::size_t i = 0; i < labels.size(); ++i) bind[labels[i]] = values.size() == 1 ? values[0] : values[i];
        lmm::CouplingTable table;
        auto e = lmm::correlator(legs, order, cfg.s, table, labels);
        auto env = lmm::curve_environment(curve, e, bind, cfg.quadrature);
        std::vector<lmm::Generator> gens;
        for (const auto& [g, v] : env) gens.push_back(g);
        std::sort(gens.begin(), gens.end(), lmm::render_less);
        std::cout << "generator,value_re,value_im\n";
        for (auto g : gens) csv_row(g.name(), env.at(g));
        std::string total = legs == 0 ? "F^(" + std::to_string(order) + ")"
                                      : "W_" + std::to_string(legs) + "^(" + std::to_string(order) + ")";
        csv_row(total, lmm::evaluate(e, env));
      } else {
        throw UsageError("curve needs --moments FMAX or --eval");
      }
    } else if (verify_all->parsed()) {
      bool ok = true;
      for (const auto& c : lmm::acceptance_criteria()) {
        auto r = lmm::run_criterion(c.id);
        std::cout << lmm::format_result(r) << std::flush;
        ok &= r.pass;
      }
      return ok ? 0 : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const lmm::ExcludedCase& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const lmm::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return 0;
}
