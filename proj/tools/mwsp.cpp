#include "mwsp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  namespace cli = mwsp::cli;
  CLI::App app{"tree and orientation count inequalities for series-parallel graphs"};
  app.require_subcommand(1);

  cli::TablesConfig tables_cfg;
  std::string out_dir;
  const std::map<std::string, cli::Format> formats{
      {"csv", cli::Format::Csv}, {"json", cli::Format::Json},
      {"text", cli::Format::Text}};
  auto add_table_flags = [&](CLI::App* sub) {
    sub->add_option("--format", tables_cfg.format, "csv, json or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-edges", tables_cfg.max_edges,
                    "largest graph the search builds");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", tables_cfg.threads, "worker threads");
  };
  auto* tables = app.add_subcommand("tables", "reproduce the survivor tables");
  auto* search = app.add_subcommand("search", "same as tables");
  add_table_flags(tables);
  add_table_flags(search);

  std::string expr;
  auto* eval = app.add_subcommand("eval", "parameters of an expression");
  eval->add_option("expr", expr)->required();

  std::string path;
  auto* check = app.add_subcommand("check", "inequalities for a graph file");
  check->add_option("file", path)->required();

  std::string g_expr, h_expr;
  auto* repl = app.add_subcommand("replaces", "can G be replaced by H");
  repl->add_option("G", g_expr)->required();
  repl->add_option("H", h_expr)->required();

  int n = 0;
  auto* thom = app.add_subcommand("thomassen", "the digon-cycle family");
  thom->add_option("n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*tables || *search) {
      if (!out_dir.empty()) tables_cfg.out_dir = out_dir;
      return cli::cmd_tables(tables_cfg, std::cout, std::cerr);
    }
    if (*eval) return cli::cmd_eval(expr, std::cout, std::cerr);
    if (*check) return cli::cmd_check(path, std::cout, std::cerr);
    if (*repl) return cli::cmd_replaces(g_expr, h_expr, std::cout, std::cerr);
    if (*thom) return cli::cmd_thomassen(n, std::cout, std::cerr);
  } catch (const mwsp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}
