#include <exception>
#include <iostream>

#include "cnp/campaign.hpp"
#include "cnp/cli.hpp"

int main(int argc, char** argv) {
  const cnp::ParsedCli parsed = cnp::parse_cli(argc, argv);
  if (!parsed.request) return parsed.exit_code;

  try {
    if (parsed.request->verify_path) {
      cnp::verify_network_file(*parsed.request->verify_path, std::cout);
      return 0;
    }
    const auto outcomes = cnp::run_campaign(*parsed.request->campaign);
    std::cout << cnp::format_report_text(cnp::build_report(outcomes));
    std::cout << "logs written to " << parsed.request->campaign->out_dir << "/\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
