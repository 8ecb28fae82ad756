#include <CLI11.hpp>

#include <iostream>

#include "circforest/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact rooted spanning forest counts for circulant foliations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file holding the same keys as the flags; flags win");

  circforest::CommandRequest req;
  long n_flag = 0;
  std::string range_flag;

  const auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", req.family_text, "family descriptor, e.g. \"GP(n,2)\"")
        ->required();
    sub->add_flag("--allow-disconnected", req.allow_disconnected,
                  "downgrade a disconnected base to a warning (oracle-only use)");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
  };
  const auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", req.precision_digits, "target precision, decimal digits")
        ->envname("CIRCFOREST_PRECISION")
        ->capture_default_str();
  };
  const auto add_n_range = [&](CLI::App* sub) {
    sub->add_option("--n", n_flag, "single layer count n");
    sub->add_option("--range", range_flag, "inclusive n range, e.g. 3..12");
  };

  CLI::App* poly = app.add_subcommand("poly", "characteristic polynomials Q(w), F(z), eta");
  add_family(poly);
  add_format(poly);

  CLI::App* count = app.add_subcommand("count", "exact forest counts via the resultant");
  add_family(count);
  add_format(count);
  add_n_range(count);

  CLI::App* oracle = app.add_subcommand("oracle", "exact counts via det(I+L) on the expanded graph");
  add_family(oracle);
  add_format(oracle);
  add_n_range(oracle);

  CLI::App* verify = app.add_subcommand("verify", "check f(n) = [p]*f(H)*a(n)^2 and report a(n)");
  add_family(verify);
  add_format(verify);
  add_n_range(verify);

  CLI::App* mahler = app.add_subcommand("mahler", "growth constant A by roots and by quadrature");
  add_family(mahler);
  add_format(mahler);
  add_precision(mahler);

  CLI::App* converge = app.add_subcommand("converge", "table of f(n)^(1/n) against A");
  add_family(converge);
  add_format(converge);
  add_precision(converge);
  converge->add_option("--n-max", req.n_max, "largest n in the table (>= 3)")->required();

  CLI::App* expand_cmd = app.add_subcommand("expand", "emit the expanded graph at a concrete n");
  add_family(expand_cmd);
  expand_cmd->add_option("--n", n_flag, "layer count n")->required();
  expand_cmd->add_option("--format", req.expand_format, "graph serialization")
      ->check(CLI::IsMember({"edge-list", "graph-text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  req.command = sub->get_name();
  if (const CLI::Option* o = sub->get_option_no_throw("--n"); o != nullptr && o->count() > 0)
    req.n = n_flag;
  if (const CLI::Option* o = sub->get_option_no_throw("--range"); o != nullptr && o->count() > 0)
    req.range_text = range_flag;

  const circforest::RunResult result = circforest::run(req);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  std::cout << result.output;
  return result.status;
}
