// sutra: step traces for Vedic and traditional arithmetic methods.
//
//   sutra list [--json]
//   sutra info <id> [--json]
//   sutra trace --method <id> --operands 12,34 [--format text|json] [--latent vedic|both|none]
//   sutra compare --operation multiply --operands 12,34 [--format text|json]
//   sutra serve [--host 127.0.0.1] [--port 8080]
//
// SUTRA_MAX_DIGITS overrides the 50-digit operand limit.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sutra/cli.hpp"
#include "sutra/service.hpp"

int main(int argc, char** argv) {
  using namespace sutra;

  CLI::App app{"Step traces for Vedic and traditional arithmetic methods"};
  app.require_subcommand(1);
  const std::size_t maxDigits = cli::maxDigitsFromEnv();

  const std::map<std::string, cli::Format> formats{{"text", cli::Format::Text}, {"json", cli::Format::Json}};
  const std::map<std::string, LatentDisplay> latents{
      {"vedic", LatentDisplay::Vedic}, {"both", LatentDisplay::Both}, {"none", LatentDisplay::None}};

  bool listJson = false;
  auto* list = app.add_subcommand("list", "List the available methods");
  list->add_flag("--json", listJson, "Emit canonical JSON");

  std::string infoId;
  bool infoJson = false;
  auto* info = app.add_subcommand("info", "Describe one method");
  info->add_option("id", infoId, "Method id")->required();
  info->add_flag("--json", infoJson, "Emit canonical JSON");

  cli::TraceArgs traceArgs;
  traceArgs.maxDigits = maxDigits;
  auto* trace = app.add_subcommand("trace", "Trace one method on the given operands");
  trace->add_option("--method", traceArgs.method, "Method id, see `list`")->required();
  trace->add_option("--operands", traceArgs.operands, "Comma-separated whole numbers")->required();
  trace->add_option("--format", traceArgs.format, "text or json")->transform(CLI::CheckedTransformer(formats));
  trace->add_option("--latent", traceArgs.latent, "Latent operations to show: vedic, both or none")
      ->transform(CLI::CheckedTransformer(latents));

  cli::CompareArgs compareArgs;
  compareArgs.maxDigits = maxDigits;
  auto* compare = app.add_subcommand("compare", "Run the Vedic and traditional methods side by side");
  compare->add_option("--operation", compareArgs.operation, "add, subtract, multiply or sqrt")->required();
  compare->add_option("--operands", compareArgs.operands, "Comma-separated whole numbers")->required();
  compare->add_option("--format", compareArgs.format, "text or json")->transform(CLI::CheckedTransformer(formats));
  compare->add_option("--latent", compareArgs.latent, "Latent operations to show: vedic, both or none")
      ->transform(CLI::CheckedTransformer(latents));

  service::Config serviceConfig;
  serviceConfig.maxDigits = maxDigits;
  auto* serve = app.add_subcommand("serve", "Serve traces over HTTP");
  serve->add_option("--host", serviceConfig.host, "Bind address")->capture_default_str();
  serve->add_option("--port", serviceConfig.port, "Port")->capture_default_str();
  serve->add_option("--cors-origin", serviceConfig.corsOrigin, "Allowed browser origin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*list) return cli::runList(listJson, std::cout);
  if (*info) return cli::runInfo(infoId, infoJson, std::cout, std::cerr);
  if (*trace) return cli::runTrace(traceArgs, std::cout, std::cerr);
  if (*compare) return cli::runCompare(compareArgs, std::cout, std::cerr);
  if (*serve) {
    std::cerr << "serving on http://" << serviceConfig.host << ":" << serviceConfig.port << "\n";
    if (!service::serve(serviceConfig)) {
      std::cerr << "error: cannot listen on " << serviceConfig.host << ":" << serviceConfig.port << "\n";
      return 1;
    }
  }
  return 0;
}
