// Command-line front end. Exit codes: 0 success, 2 precondition violation,
// 3 budget exhausted, 4 I/O or parse failure.

#include "rsld/badtuples.hpp"
#include "rsld/bounds.hpp"
#include "rsld/codes.hpp"
#include "rsld/error.hpp"
#include "rsld/gf.hpp"
#include "rsld/harness.hpp"
#include "rsld/listdec.hpp"
#include "rsld/rs.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace rsld;

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = listdec::Budget{}.max_nodes;
  std::uint64_t budget_subsets = listdec::Budget{}.max_subsets;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.out, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + common.out + "' for writing");
  out << text;
  if (!out) throw Error(Errc::IoError, "write to '" + common.out + "' failed");
}

codes::Code load_code(const std::string& path) {
  std::istringstream in(read_file(path));
  return codes::read_code(in);
}

std::string code_text(const codes::Code& code) {
  std::ostringstream out;
  codes::write_code(out, code);
  return out.str();
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

json report_json(const bounds::Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"name", c.name},
                          {"holds", c.holds},
                          {"certified", c.certified},
                          {"method", c.method},
                          {"precision", c.precision},
                          {"margin", c.margin}});
  }
  return json{{"all_hold", report.all_hold()}, {"checks", checks}};
}

listdec::Budget make_budget(const Common& common) {
  listdec::Budget b;
  b.max_nodes = common.budget_nodes;
  b.max_subsets = common.budget_subsets;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for list decoding of randomly punctured Reed-Solomon codes"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common common;
  app.add_option("--seed", common.seed, "Random seed")->capture_default_str();
  app.add_option("--budget-nodes", common.budget_nodes, "Search node budget")->capture_default_str();
  app.add_option("--budget-subsets", common.budget_subsets, "Subset budget for witness search")
      ->capture_default_str();
  app.add_option("--out", common.out, "Write output to this file instead of stdout");
  std::function<void()> action;

  // field
  std::string field_spec;
  auto* field_cmd = app.add_subcommand("field", "Describe GF(p^e)");
  field_cmd->add_option("--field", field_spec, "Field as p^e")->required();
  field_cmd->callback([&] {
    action = [&] {
      const auto ctx = gf::FieldCtx::parse(field_spec);
      emit(common, json{{"p", ctx.p()}, {"e", ctx.e()}, {"q", ctx.q()}, {"modulus", ctx.modulus()},
                        {"modulus_string", ctx.modulus_string()}}
                           .dump(2) + "\n");
    };
  });

  // rs construct | full
  std::size_t rs_k = 1;
  std::string rs_evals;
  auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon codes");
  rs_cmd->require_subcommand(1);
  auto* rs_construct = rs_cmd->add_subcommand("construct", "RS code on chosen evaluation points");
  rs_construct->add_option("--field", field_spec)->required();
  rs_construct->add_option("--k", rs_k)->required();
  rs_construct->add_option("--evals", rs_evals, "Comma-separated element indices")->required();
  rs_construct->callback([&] {
    action = [&] {
      const auto ctx = gf::FieldCtx::parse(field_spec);
      std::vector<gf::FieldElement> evals;
      for (const auto& s : split(rs_evals)) evals.push_back(ctx.element(static_cast<gf::Symbol>(std::stoul(s))));
      emit(common, code_text(rs::materialize(rs::RSCode::create(ctx, rs_k, evals))));
    };
  });
  auto* rs_full = rs_cmd->add_subcommand("full", "RS code on every field element");
  rs_full->add_option("--field", field_spec)->required();
  rs_full->add_option("--k", rs_k)->required();
  rs_full->callback([&] {
    action = [&] { emit(common, code_text(rs::materialize(rs::RSCode::full(gf::FieldCtx::parse(field_spec), rs_k)))); };
  });

  // puncture
  std::string code_path, plan_path, plan_out;
  std::size_t punct_n = 0;
  auto* punct_cmd = app.add_subcommand("puncture", "Restrict a code to a plan of positions");
  punct_cmd->add_option("--code", code_path)->required();
  auto* plan_opt = punct_cmd->add_option("--plan", plan_path, "Plan file; otherwise sampled with --seed");
  punct_cmd->add_option("--n", punct_n, "Number of positions to sample")->excludes(plan_opt);
  punct_cmd->add_option("--plan-out", plan_out, "Write the plan used to this file");
  punct_cmd->callback([&] {
    action = [&] {
      const auto code = load_code(code_path);
      std::optional<codes::PuncturingPlan> plan;
      if (!plan_path.empty()) {
        std::istringstream in(read_file(plan_path));
        plan = codes::read_plan(in);
      } else {
        plan = codes::sample_puncturing(code.m(), punct_n, common.seed);
      }
      if (!plan_out.empty()) {
        std::ofstream out(plan_out);
        if (!out) throw Error(Errc::IoError, "cannot open '" + plan_out + "' for writing");
        codes::write_plan(out, *plan);
      }
      const auto result = codes::puncture(code, *plan);
      if (result.collapsed) std::cerr << "note: distinct codewords collapsed\n";
      emit(common, code_text(result.code));
    };
  });

  // check
  std::string radius = "1/2", mode = "exhaustive";
  std::size_t list_L = 1;
  auto* check_cmd = app.add_subcommand("check", "Decide (r, L)-list-decodability");
  check_cmd->add_option("--code", code_path)->required();
  check_cmd->add_option("--r", radius, "Relative radius, exact rational")->required();
  check_cmd->add_option("--L", list_L)->required();
  check_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "witness"}));
  check_cmd->callback([&] {
    action = [&] {
      const auto code = load_code(code_path);
      const auto params = listdec::ListDecParams::make(parse_rational(radius), list_L, code.m());
      const auto start = std::chrono::steady_clock::now();
      const auto d = mode == "witness" ? listdec::decide_witness_search(code, params, make_budget(common))
                                       : listdec::decide_exhaustive(code, params, make_budget(common));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      json j{{"verdict", d.decodable ? "decodable" : "witness"},
             {"stats", {{"nodes", d.stats.nodes}, {"subsets", d.stats.subsets}, {"time", secs}}}};
      if (d.witness) j["witness"] = json{{"center", d.witness->center}, {"members", d.witness->members}};
      emit(common, j.dump(2) + "\n");
    };
  });

  // badtuples count | sampleZ | chain
  std::string sets_path;
  std::uint64_t bt_c = 5, bt_h = 1;
  std::size_t retries = badtuples::kDefaultZRetries;
  std::string chain_m, chain_q;
  std::uint64_t chain_M = 0, chain_Z = 0, chain_n = 1;
  auto* bt_cmd = app.add_subcommand("badtuples", "Bad tuples and the counting argument");
  bt_cmd->require_subcommand(1);
  auto* bt_count = bt_cmd->add_subcommand("count", "Count bad tuples by enumeration");
  bt_count->add_option("--code", code_path)->required();
  bt_count->add_option("--sets", sets_path)->required();
  bt_count->add_option("--c", bt_c)->capture_default_str();
  bt_count->add_option("--h", bt_h)->capture_default_str();
  bt_count->callback([&] {
    action = [&] {
      const auto code = load_code(code_path);
      const auto sys = badtuples::parse_sets_json(read_file(sets_path), bt_c, bt_h);
      const auto r = badtuples::count_bad_tuples(sys, code);
      emit(common, json{{"bad", to_string(r.bad)},
                        {"total", to_string(r.total)},
                        {"overlap_weight", badtuples::overlap_weight(sys)},
                        {"weight_condition", badtuples::weight_condition(sys)}}
                           .dump(2) + "\n");
    };
  });
  auto* bt_z = bt_cmd->add_subcommand("sampleZ", "Sample a Z-set for given agreement sets");
  bt_z->add_option("--sets", sets_path)->required();
  bt_z->add_option("--c", bt_c)->capture_default_str();
  bt_z->add_option("--h", bt_h)->capture_default_str();
  bt_z->add_option("--retries", retries)->capture_default_str();
  bt_z->callback([&] {
    action = [&] {
      const auto sys = badtuples::parse_sets_json(read_file(sets_path), bt_c, bt_h);
      const auto M = badtuples::compute_M(sys);
      const auto z = badtuples::sample_Z(sys, M, common.seed, retries);
      std::vector<std::size_t> one_based;
      for (auto v : z.Z) one_based.push_back(v + 1);
      emit(common, json{{"M_size", M.size()}, {"Z", one_based}, {"attempts", z.attempts}}.dump(2) + "\n");
    };
  });
  auto* bt_chain = bt_cmd->add_subcommand("chain", "Evaluate the counting inequality at one point");
  bt_chain->add_option("--m", chain_m)->required();
  bt_chain->add_option("--q", chain_q)->required();
  bt_chain->add_option("--h", bt_h)->required();
  bt_chain->add_option("--c", bt_c)->capture_default_str();
  bt_chain->add_option("--M", chain_M)->required();
  bt_chain->add_option("--Z", chain_Z)->required();
  bt_chain->add_option("--n", chain_n)->required();
  bt_chain->callback([&] {
    action = [&] {
      const auto r = badtuples::counting_chain_check(parse_bigint(chain_m), parse_bigint(chain_q), bt_h, bt_c,
                                                     chain_M, chain_Z, chain_n);
      emit(common, json{{"inequality", r.inequality},
                        {"hypotheses", r.hypotheses()},
                        {"h_small", r.h_small},
                        {"c_large", r.c_large},
                        {"z_small", r.z_small},
                        {"m_large", r.m_large}}
                           .dump(2) + "\n");
    };
  });

  // bounds main | window | johnson
  std::uint64_t b_c = 5, b_n = 1, b_h = 1;
  std::string b_eps, b_q, b_m;
  auto* bounds_cmd = app.add_subcommand("bounds", "Parameter validators and reference bounds");
  bounds_cmd->require_subcommand(1);
  auto* b_main = bounds_cmd->add_subcommand("main", "Conditions of the main theorem");
  b_main->add_option("--c", b_c)->capture_default_str();
  b_main->add_option("--eps", b_eps)->required();
  b_main->add_option("--n", b_n)->required();
  b_main->add_option("--q", b_q)->required();
  b_main->callback([&] {
    action = [&] {
      const auto p = bounds::main_params(b_c, parse_rational(b_eps), b_n, parse_bigint(b_q));
      json j = report_json(bounds::main_report(p));
      j["derived"] = json{{"k", p.k},
                          {"list_size", p.list_size},
                          {"rate", to_string(p.rate)},
                          {"rate_bound", to_string(p.rate_bound)},
                          {"failure_exponent", to_string(p.failure_exponent)},
                          {"h", p.h},
                          {"capacity_ratio", to_string(p.capacity_ratio)}};
      emit(common, j.dump(2) + "\n");
    };
  });
  auto* b_window = bounds_cmd->add_subcommand("window", "Conditions of the puncturing theorem");
  b_window->add_option("--c", b_c)->capture_default_str();
  b_window->add_option("--q", b_q)->required();
  b_window->add_option("--h", b_h)->required();
  b_window->add_option("--m", b_m)->required();
  b_window->add_option("--n", b_n)->required();
  b_window->callback([&] {
    action = [&] {
      const auto w = bounds::check_window_1_3(b_c, parse_bigint(b_q), b_h, parse_bigint(b_m), b_n);
      json j = report_json(w.report);
      j["window_empty"] = w.window_empty;
      emit(common, j.dump(2) + "\n");
    };
  });
  auto* b_johnson = bounds_cmd->add_subcommand("johnson", "Johnson-bound profile");
  b_johnson->add_option("--eps", b_eps)->required();
  b_johnson->add_option("--n", b_n)->required();
  b_johnson->add_option("--q", b_q)->required();
  b_johnson->callback([&] {
    action = [&] {
      const auto p = bounds::johnson_profile(parse_rational(b_eps), b_n, parse_bigint(b_q));
      emit(common, json{{"rate_threshold", to_string(p.rate_threshold)},
                        {"radius", to_string(p.radius)},
                        {"list_size", to_string(p.list_size)}}
                           .dump(2) + "\n");
    };
  });

  // mc run | sweep
  harness::ExperimentConfig cfg;
  std::string mc_r = "1/2", mc_mode = "exhaustive", csv_path, sweep_r, sweep_L;
  auto* mc_cmd = app.add_subcommand("mc", "Monte-Carlo experiments over random puncturings");
  mc_cmd->require_subcommand(1);
  auto add_config_options = [&](CLI::App* cmd) {
    cmd->add_option("--field", cfg.field)->required();
    cmd->add_option("--k", cfg.k)->required();
    cmd->add_option("--n", cfg.n)->required();
    cmd->add_option("--trials", cfg.trials)->capture_default_str();
    cmd->add_option("--mode", mc_mode)->check(CLI::IsMember({"exhaustive", "witness"}));
    cmd->add_option("--threads", cfg.threads)->capture_default_str();
  };
  auto finish_config = [&] {
    cfg.seed = common.seed;
    cfg.mode = harness::parse_mode(mc_mode);
    cfg.budget = make_budget(common);
  };
  auto* mc_run = mc_cmd->add_subcommand("run", "One configuration; JSON records");
  add_config_options(mc_run);
  mc_run->add_option("--r", mc_r)->required();
  mc_run->add_option("--L", cfg.L)->required();
  mc_run->add_option("--csv", csv_path, "Also write the aggregate CSV row here");
  mc_run->callback([&] {
    action = [&] {
      finish_config();
      cfg.r = parse_rational(mc_r);
      const auto run = harness::run_mc(cfg);
      if (common.out.empty()) {
        std::cout << harness::to_json(run);
      } else {
        harness::persist(run, common.out);
      }
      if (!csv_path.empty()) {
        Common csv = common;
        csv.out = csv_path;
        emit(csv, harness::to_csv(run));
      }
    };
  });
  auto* mc_sweep = mc_cmd->add_subcommand("sweep", "Grid over radii and list sizes; CSV table");
  add_config_options(mc_sweep);
  mc_sweep->add_option("--r", sweep_r, "Comma-separated radii")->required();
  mc_sweep->add_option("--L", sweep_L, "Comma-separated list sizes")->required();
  mc_sweep->callback([&] {
    action = [&] {
      finish_config();
      std::vector<harness::ExperimentConfig> grid;
      for (const auto& r : split(sweep_r)) {
        for (const auto& l : split(sweep_L)) {
          auto c = cfg;
          c.r = parse_rational(r);
          c.L = std::stoul(l);
          grid.push_back(c);
        }
      }
      emit(common, harness::to_csv(harness::sweep(grid)));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
