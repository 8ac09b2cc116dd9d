#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paracurv.h"

namespace {

int report_error() {
  std::cerr << "error: " << pcv_last_error() << "\n";
  return 2;
}

bool is_builtin(const std::string& name) {
  for (int i = 0; i < pcv_builtin_count(); ++i)
    if (name == pcv_builtin_name(i)) return true;
  return false;
}

int run_check_command(const std::string& target, const std::string& format,
                      const std::string& identities) {
  pcv_model* model = nullptr;
  const pcv_status load_status = is_builtin(target)
                                     ? pcv_model_builtin(target.c_str(), &model)
                                     : pcv_model_load(target.c_str(), &model);
  if (load_status != PCV_OK) return report_error();

  pcv_run* run = nullptr;
  if (pcv_check(model, identities.empty() ? nullptr : identities.c_str(), nullptr, &run) !=
      PCV_OK) {
    pcv_model_free(model);
    return report_error();
  }

  char* rendered = nullptr;
  if (pcv_run_render(run, format.c_str(), &rendered) != PCV_OK) {
    pcv_run_free(run);
    pcv_model_free(model);
    return report_error();
  }
  std::cout << rendered;
  pcv_string_free(rendered);

  const int overall = pcv_run_overall(run);
  pcv_run_free(run);
  pcv_model_free(model);
  return overall == 1 ? 0 : 1;
}

int run_export_command(const std::string& name) {
  pcv_model* model = nullptr;
  if (pcv_model_builtin(name.c_str(), &model) != PCV_OK) return report_error();
  char* text = nullptr;
  if (pcv_model_canonical(model, &text) != PCV_OK) {
    pcv_model_free(model);
    return report_error();
  }
  std::cout << text;
  pcv_string_free(text);
  pcv_model_free(model);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact curvature and structure checks for frame models"};
  app.require_subcommand(1);

  std::string target;
  std::string format = "text";
  std::string identities;
  auto* check = app.add_subcommand("check", "classify a model and verify its identities");
  check->add_option("model", target, "builtin model name or path to a model file")
      ->required();
  check->add_option("--report", format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));
  check->add_option("--identities", identities,
                    "comma separated identity keys to run, or 'all'");

  auto* models = app.add_subcommand("models", "builtin model catalog");
  models->require_subcommand(1);
  auto* list = models->add_subcommand("list", "list builtin model names");
  std::string export_name;
  auto* export_cmd =
      models->add_subcommand("export", "print a builtin model as canonical JSON");
  export_cmd->add_option("name", export_name, "builtin model name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) return run_check_command(target, format, identities);
  if (list->parsed()) {
    for (int i = 0; i < pcv_builtin_count(); ++i)
      std::cout << pcv_builtin_name(i) << "\n";
    return 0;
  }
  if (export_cmd->parsed()) return run_export_command(export_name);
  return 2;
}
