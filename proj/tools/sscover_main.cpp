// Command-line front end: instance I/O and the check / project / classify /
// cover / verify / inertia / gen pipeline.
//
// Exit codes: 0 success, 1 input error (bad file or option), 2 verification
// failure, 3 internal assertion failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sscover/sscover.hpp"

namespace {

sscover::Instance worked_instance(const std::string& type) {
  using namespace sscover;
  if (type == "euclidean") {
    std::vector<Vec> g{Vec{{-1.0, 0.0}}, Vec{{1.0, 0.0}}};
    return Instance{MonotoneSet(ScalarProduct::identity(2), g), Tolerances{}};
  }
  if (type == "standard") {
    std::vector<Vec> g{Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 3.0}}};
    return Instance{MonotoneSet(ScalarProduct::standard(1), g), Tolerances{}};
  }
  if (type == "canonical") {
    std::vector<Vec> g{Vec{{0.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 2.0}}};
    return Instance{MonotoneSet(ScalarProduct::canonical(2, 1), g), Tolerances{}};
  }
  throw sscover::InputError("gen: unknown instance type '" + type + "'");
}

struct TolOverrides {
  double activity = 0.0;  // 0 = keep the instance value
  double isotropy = 0.0;
  double coverage = 0.0;
};

int dispatch(const std::string& command, const std::string& instance_path,
             const sscover::PipelineOptions& opts, const TolOverrides& tols,
             const std::vector<double>& at, const std::string& gen_type, int gen_d,
             int gen_m, int gen_n, const std::string& gen_out) {
  using namespace sscover;

  if (command == "gen") {
    Instance inst = gen_type == "random"
                        ? Instance{random_monotone(random_scalar_product(gen_d, gen_m, opts.seed),
                                                   gen_n, opts.seed),
                                   Tolerances{}}
                        : worked_instance(gen_type);
    if (gen_out.empty()) {
      std::cout << instance_to_json(inst);
    } else {
      save_instance(inst, gen_out);
      std::cout << "wrote " << gen_out << "\n";
    }
    return 0;
  }

  Instance inst = load_instance(instance_path);
  if (tols.activity > 0) inst.tolerances.activity = tols.activity;
  if (tols.isotropy > 0) inst.tolerances.isotropy = tols.isotropy;
  if (tols.coverage > 0) inst.tolerances.coverage = tols.coverage;

  if (command == "inertia") {
    const InertiaDecomposition dec = inertia(inst.space());
    std::cout << "signs:";
    for (int s : dec.lambda_signs) std::cout << " " << (s > 0 ? "+1" : "-1");
    std::cout << "\nV:\n";
    for (int i = 0; i < dec.v.rows(); ++i) {
      for (int k = 0; k < dec.v.cols(); ++k) {
        std::cout << (k ? " " : "") << format_double(dec.v(i, k));
      }
      std::cout << "\n";
    }
    return 0;
  }
  if (command == "project") {
    if (static_cast<int>(at.size()) != inst.set.dim()) {
      throw InputError("project: --at must supply exactly dim coordinates");
    }
    Vec x(inst.set.dim());
    for (int i = 0; i < x.size(); ++i) x[i] = at[i];
    const ProjectionResult pr = project(inst.set, x, inst.tolerances.activity);
    std::cout << "value: " << format_double(pr.value) << "\nminimizers:";
    for (int i : pr.minimizers) std::cout << " " << i;
    std::cout << "\n";
    return 0;
  }
  return run_pipeline(inst, command, opts, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex analysis and singularity coverings in pseudo-Euclidean spaces"};
  app.require_subcommand(1);

  sscover::PipelineOptions opts;
  TolOverrides tols;
  std::string instance_path;
  std::vector<double> at;
  std::string gen_type = "random";
  int gen_d = 2, gen_m = 1, gen_n = 8;
  std::string gen_out;

  const auto add_instance_arg = [&](CLI::App* cmd) {
    cmd->add_option("instance", instance_path, "instance JSON file")->required();
  };
  const auto add_pipeline_opts = [&](CLI::App* cmd, bool covering) {
    cmd->add_option("--seed", opts.seed, "random seed")->capture_default_str();
    cmd->add_option("--samples", opts.samples, "tie-set samples per point pair")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--radius", opts.radius, "sampling ball radius")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--tol-activity", tols.activity, "override activity tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-isotropy", tols.isotropy, "override isotropy tolerance")
        ->check(CLI::PositiveNumber);
    if (covering) {
      cmd->add_option("--j", opts.j, "coordinate to cover, 0 = all")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
      cmd->add_option("--order", opts.order, "singularity order: 0, 1, or 2 = all")
          ->check(CLI::Range(0, 2))
          ->capture_default_str();
      cmd->add_option("--epsilon", opts.epsilon, "normal-set diameter bound")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      cmd->add_option("--delta", opts.delta, "isotropy bound for order-0 normals")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      cmd->add_option("--tol-coverage", tols.coverage, "override coverage tolerance")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* check = app.add_subcommand("check", "validate an instance file");
  add_instance_arg(check);

  CLI::App* inertia_cmd = app.add_subcommand("inertia", "print the inertia factorization");
  add_instance_arg(inertia_cmd);

  CLI::App* project_cmd = app.add_subcommand("project", "project a point onto the set");
  add_instance_arg(project_cmd);
  project_cmd->add_option("--at", at, "point coordinates")->required()->delimiter(',');

  CLI::App* classify = app.add_subcommand("classify", "sample and classify singular points");
  add_instance_arg(classify);
  add_pipeline_opts(classify, false);

  CLI::App* cover = app.add_subcommand("cover", "emit covering surface families");
  add_instance_arg(cover);
  add_pipeline_opts(cover, true);

  CLI::App* verify = app.add_subcommand("verify", "classify, cover, and verify coverage");
  add_instance_arg(verify);
  add_pipeline_opts(verify, true);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--type", gen_type, "euclidean | standard | canonical | random");
  gen->add_option("--d", gen_d, "dimension (random type)")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "index (random type)")->check(CLI::NonNegativeNumber);
  gen->add_option("--n", gen_n, "number of points (random type)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", opts.seed, "random seed");
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    return dispatch(command, instance_path, opts, tols, at, gen_type, gen_d, gen_m,
                    gen_n, gen_out);
  } catch (const sscover::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sscover::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sscover::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
