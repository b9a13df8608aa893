// cocat: verify, enumerate and classify internal co-categories.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
// or input error.

#include <CLI11.hpp>

#include <iostream>

#include "cocat/cli/commands.hpp"
#include "cocat/core/error.hpp"

namespace {

enum class Format { Human, Json };

int emit(const cocat::cli::Report& rep, Format fmt) {
  std::cout << (fmt == Format::Json ? cocat::cli::render_json(rep) : cocat::cli::render_human(rep));
  return rep.exit_status();
}

int emit_error(const cocat::Error& e, Format fmt, int status) {
  if (fmt == Format::Json) {
    nlohmann::ordered_json j;
    j["error"] = std::string(cocat::to_string(e.kind()));
    j["message"] = e.what();
    j["exit_status"] = status;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cerr << "cocat: " << e.what() << '\n';
  }
  return status;
}

bool is_usage_error(cocat::ErrorKind k) {
  using cocat::ErrorKind;
  return k == ErrorKind::ParseError || k == ErrorKind::UnknownExample || k == ErrorKind::CapExceeded ||
         k == ErrorKind::InvalidArgument;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and enumeration toolkit for internal co-categories"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  Format fmt = Format::Human;
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}};
  app.add_option("--format", fmt, "Report rendering")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("{human,json}"))
      ->default_str("human");

  std::string example;
  std::string names;
  for (const auto& n : cocat::cli::example_names()) names += (names.empty() ? "" : ", ") + n;
  auto* verify = app.add_subcommand("verify", "Check a built-in example against its manifest");
  verify->add_option("example", example, "One of: " + names)->required();

  cocat::cli::EnumerateOptions eopts;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate co-categories in FinSet");
  enumerate->add_option("--q0-max", eopts.q0_max, "Largest |Q0|")->capture_default_str();
  enumerate->add_option("--q1-max", eopts.q1_max, "Largest |Q1|")->capture_default_str();
  enumerate->add_flag("--verify-theorem", eopts.verify_theorem,
                      "Classify every structure and replay the proof that it is a co-equivalence relation");
  enumerate->add_flag("--count-iso", eopts.count_iso, "Also count isomorphism classes");
  enumerate->add_flag("--include-empty", eopts.include_empty, "Include the structure on the empty set");
  enumerate->add_option("--workers", eopts.workers, "Worker threads (0 = all cores)")->capture_default_str();

  std::string category, file;
  auto* classify = app.add_subcommand("classify", "Classify a co-category read from a file");
  classify->add_option("--category", category, "Host category")
      ->required()
      ->check(CLI::IsMember({"finset", "abgp", "chain", "cat"}));
  classify->add_option("--file", file, "Input document")->required();

  auto* pipeline = app.add_subcommand("pipeline", "Send the interval through the nerve pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return emit(cocat::cli::cmd_verify(example), fmt);
    if (*enumerate) return emit(cocat::cli::cmd_enumerate(eopts), fmt);
    if (*classify) return emit(cocat::cli::cmd_classify_file(cocat::cli::parse_host(category), file), fmt);
    if (*pipeline) return emit(cocat::cli::cmd_pipeline(), fmt);
  } catch (const cocat::Error& e) {
    return emit_error(e, fmt, is_usage_error(e.kind()) ? 2 : 1);
  } catch (const std::exception& e) {
    std::cerr << "cocat: internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
