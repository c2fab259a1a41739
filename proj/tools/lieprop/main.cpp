#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lieprop/errors.hpp"

using namespace lieprop::cli;

namespace {

void common_flags(CLI::App* sub, Options& o, bool many_inputs = false) {
  if (many_inputs) {
    sub->add_option("--input", o.inputs, "algebra file (repeatable)");
  } else {
    sub->add_option("--input", o.inputs, "algebra file")->expected(1);
  }
  sub->add_flag("--json", o.json, "machine-readable report");
  sub->add_option("--seed", o.seed, "random seed (default 0)");
  sub->add_option("--budget", o.budget, "candidate budget for searches");
  sub->add_option("--height", o.height, "maximum height for searches");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int k = 1; k < argc; ++k) o.argv.emplace_back(argv[k]);

  CLI::App app{"lieprop: exact structure checks for finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "certify anisotropic, regular, mna or depth2");
  check->add_option("property", o.property, "anisotropic | regular | mna | depth2")
      ->required()
      ->check(CLI::IsMember({"anisotropic", "regular", "mna", "depth2"}));
  common_flags(check, o);
  auto* analyze = app.add_subcommand("analyze", "series, Killing form, rank and simplicity");
  common_flags(analyze, o);
  auto* element = app.add_subcommand("element", "spectral report for one element");
  element->add_option("--vector", o.vector, "coordinates, comma separated")->required();
  common_flags(element, o);
  auto* rank = app.add_subcommand("rank", "symbolic rank with its certificate");
  common_flags(rank, o);
  auto* construct = app.add_subcommand("construct", "emit a family instance as an algebra file");
  construct->add_option("--family", o.family, "family name")->required();
  construct->add_option("--params", o.params, "key=value parameters");
  common_flags(construct, o);
  auto* depth = app.add_subcommand("depth-fp", "exhaustive depth over F_p");
  depth->add_option("--p", o.p, "prime")->required();
  common_flags(depth, o);
  auto* quat = app.add_subcommand("quat", "quaternion algebra (a, b) and its pure part");
  quat->add_option("--a", o.a)->required();
  quat->add_option("--b", o.b)->required();
  common_flags(quat, o);
  auto* suite = app.add_subcommand("verify-suite", "acceptance and consistency suite");
  suite->add_option("--zoo", o.zoo, "default | quaternion");
  common_flags(suite, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    Outcome out;
    if (*check) {
      out = run_check(o);
    } else if (*analyze) {
      out = run_analyze(o);
    } else if (*element) {
      out = run_element(o);
    } else if (*rank) {
      out = run_rank(o);
    } else if (*construct) {
      out = run_construct(o);
    } else if (*depth) {
      out = run_depth_fp(o);
    } else if (*quat) {
      out = run_quat(o);
    } else {
      out = run_verify_suite(o);
    }
    if (out.raw) {
      std::cout << *out.raw;
      std::cerr << (o.json ? out.report.dump(2) + "\n" : out.text);
    } else {
      std::cout << (o.json ? out.report.dump(2) + "\n" : out.text);
    }
    return out.exit;
  } catch (const InputFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const lieprop::PositiveCharacteristic& e) {
    std::cerr << "usage error: this check needs an algebra over Q (" << e.what() << ")\n";
    return kUsage;
  } catch (const lieprop::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
