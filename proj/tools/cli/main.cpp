#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = snccoh::cli;

  CLI::App app{"Cohomology of simple normal crossings divisors from dual-complex data"};
  app.require_subcommand(1, 1);

  cli::Options options;
  std::string input;
  std::size_t form_degree = 0;
  std::size_t degree_bound = 0;

  const std::map<std::string, std::string> about{
      {"dual-complex", "dual complex of a divisor"},
      {"betti", "rational Betti numbers of a complex or a dual complex"},
      {"integral", "integral cohomology (free rank and torsion)"},
      {"presheaf-cohomology", "cohomology of a complex with presheaf coefficients"},
      {"snc-cohomology", "H^i(D, O_D) assembled from stratum tables"},
      {"forms", "cohomology of reduced r-forms (needs --form-degree)"},
      {"derham", "de Rham cohomology assembled from stratum tables"},
      {"hodge", "Hodge numbers against de Rham totals; exit 2 on mismatch"},
      {"euler", "Euler characteristic of O_D or of an SNC curve"},
      {"toric", "boundary divisor of a smooth fan"},
      {"verify-lemma31", "exactness of the local Cech sequence degree by degree"},
      {"bicomplex-pages", "E0, E1, E2 and Einf of a bicomplex"},
      {"degeneration", "whether E2 = Einf; exit 2 if not"},
      {"rational-check", "constant splitting and Betti obstruction"},
  };
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.contains(name) ? about.at(name) : "");
    sub->add_option("input", input, "JSON input document")->required();
    sub->add_flag("--json", options.json, "emit the report as JSON");
    sub->add_option("--degree-bound", degree_bound, "total degree bound for verify-lemma31");
    sub->add_option("--form-degree", form_degree, "form degree r for forms and bicomplex assembly");
    sub->add_option("--max-page", options.max_page, "last finite page printed by bicomplex-pages (0-2)");
    sub->add_option("--field", options.field, "coefficient field (only rational)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--degree-bound") > 0) options.degree_bound = degree_bound;
  if (chosen->count("--form-degree") > 0) options.form_degree = form_degree;

  try {
    const cli::json document = cli::load_document(input);
    const cli::Outcome outcome = cli::run(chosen->get_name(), document, input, options);
    if (options.json)
      std::cout << outcome.report.dump(2) << '\n';
    else
      std::cout << cli::render_text(outcome.report);
    return outcome.exit_code;
  } catch (const cli::SchemaError& e) {
    std::cerr << "SchemaError: " << e.what() << '\n';
  } catch (const snccoh::Error& e) {
    std::cerr << e.what() << '\n';
  }
  return cli::kExitInputError;
}
