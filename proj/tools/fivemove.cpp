#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"5-move invariants of link diagrams"};
  app.require_subcommand(0, 1);

  CLI11_PARSE(app, argc, argv);

  if (app.get_subcommands().empty()) {
    std::printf("%s\n", app.help().c_str());
    return 0;
  }
  return 0;
}
