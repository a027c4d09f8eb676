#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vtrans/script.hpp"

using namespace vtrans;

namespace {

const ComponentDecl& find_decl(const ScriptFile& f, const std::string& name) {
  for (const auto& c : f.components)
    if (c.name == name) return c;
  throw DomainError("unknown component '" + name + "'");
}

// loop commands act on the single component named by the events
std::pair<ComponentState, std::vector<MoveEvent>> loop_setup(const ScriptFile& f,
                                                             const std::string& loop) {
  std::vector<MoveEvent> events = parse_loop(loop, f.bundle.base.genus);
  const ComponentDecl& decl = find_decl(f, event_component(events.front()));
  return {initial_component(decl.name, decl.base, decl.kinks), std::move(events)};
}

void print_normal_form(const LoopNormalForm& nf) {
  if (const auto* fiber = std::get_if<FiberLoopNormalForm>(&nf))
    std::cout << "(" << fiber->rot << "," << format_h1(fiber->drag) << "," << fiber->slide
              << ")\n";
  else {
    const auto& free = std::get<FreeLoopNormalForm>(nf);
    std::cout << "(" << free.rot << "," << free.fib << "," << free.slide << ")\n";
  }
}

ExampleFamily family_of(const std::string& name) {
  if (name == "parallel") return ExampleFamily::ParallelFibers;
  if (name == "clasped") return ExampleFamily::ClaspedParallel;
  return ExampleFamily::ClaspedBraided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transverse-loop calculus over circle bundles"};
  app.require_subcommand(1);

  std::string file, homotopy, loop, family;
  bool all = false, loose_components = false, loose_link = false;
  long long g = 2, k = 1, i1 = 0, i2 = 0;

  auto* cmd_validate = app.add_subcommand("validate", "parse a script and run every block");
  cmd_validate->add_option("file", file, "script file")->required();
  cmd_validate->callback([&] {
    const ScriptFile f = parse_script_file(file);
    for (const auto& b : f.blocks) validate(script_for(f, b));
    std::cout << "OK\n";
  });

  auto* cmd_nu = app.add_subcommand("nu", "figure-eight sum of a homotopy");
  cmd_nu->add_option("file", file, "script file")->required();
  cmd_nu->add_option("--homotopy", homotopy, "block name (needed with several blocks)");
  cmd_nu->callback([&] {
    const ScriptFile f = parse_script_file(file);
    const HomotopyBlock& b = select_block(f, homotopy);
    const HomotopyScript s = script_for(f, b);
    const NuValue value = nu(s);
    std::cout << render_nu_report(b.name, value, decide_zero(value, s.field));
  });

  auto* cmd_hv = app.add_subcommand("hv", "obstruction homomorphism on a loop of moves");
  cmd_hv->add_option("file", file, "script file supplying manifold/field/components")
      ->required();
  cmd_hv->add_option("--loop", loop, "';'-separated loop events")->required();
  cmd_hv->callback([&] {
    const ScriptFile f = parse_script_file(file);
    auto [state, events] = loop_setup(f, loop);
    std::cout << loop_obstruction(f.field, loop_atoms(state, events)) << "\n";
  });

  auto* cmd_nf = app.add_subcommand("normal-form", "normal form of a loop of moves");
  cmd_nf->add_option("file", file, "script file supplying manifold/field/components")
      ->required();
  cmd_nf->add_option("--loop", loop, "';'-separated loop events")->required();
  cmd_nf->callback([&] {
    const ScriptFile f = parse_script_file(file);
    auto [state, events] = loop_setup(f, loop);
    print_normal_form(normal_form_loop(f.field, state, events));
  });

  auto* cmd_verdict = app.add_subcommand("verdict", "five-slot verdict for a homotopy");
  cmd_verdict->add_option("file", file, "script file")->required();
  cmd_verdict->add_option("--homotopy", homotopy, "block name (needed with several blocks)");
  cmd_verdict->callback([&] {
    const ScriptFile f = parse_script_file(file);
    std::cout << render_verdict_report(file_verdict(script_for(f, select_block(f, homotopy))));
  });

  auto* cmd_leg = app.add_subcommand("legendrian", "promote the verdict to the Legendrian category");
  cmd_leg->add_option("file", file, "script file")->required();
  cmd_leg->add_option("--homotopy", homotopy, "block name (needed with several blocks)");
  cmd_leg->add_flag("--loose-components", loose_components, "components are loose");
  cmd_leg->add_flag("--loose-link", loose_link, "the link complement is loose");
  cmd_leg->callback([&] {
    const ScriptFile f = parse_script_file(file);
    const Verdict v = file_verdict(script_for(f, select_block(f, homotopy)));
    std::cout << render_legendrian_report(
        promote_to_legendrian(v, LooseFlags{loose_components, loose_link}));
  });

  auto* cmd_table = app.add_subcommand("table", "catalogued family verdicts as CSV rows");
  auto* opt_all = cmd_table->add_flag("--all", all, "the seven standard rows");
  auto* opt_family =
      cmd_table->add_option("--family", family, "parallel | clasped | braided")
          ->check(CLI::IsMember({"parallel", "clasped", "braided"}));
  cmd_table->add_option("--g", g, "genus of the base surface");
  cmd_table->add_option("--k", k, "field multiplicity");
  cmd_table->add_option("--i1", i1, "target level of the first component");
  cmd_table->add_option("--i2", i2, "target level of the second component");
  opt_all->excludes(opt_family);
  cmd_table->callback([&] {
    if (!all && family.empty())
      throw CLI::ValidationError("table", "either --all or --family is required");
    std::cout << table_header() << "\n";
    if (all) {
      for (const TableRow& row : standard_table(static_cast<int>(g), k))
        std::cout << render_table_row(row) << "\n";
    } else {
      const ExampleFamily fam = family_of(family);
      const FamilyParams params{static_cast<int>(g), k, i1, i2};
      std::cout << render_table_row({fam, params, family_verdict(fam, params)}) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
