// quadrica <verb> [--file payload.json] [--seed N] [--pretty]
//
// Reads a JSON payload from --file or stdin, runs one command, writes the
// JSON result to stdout.  See README.md for the payload schemas.

#include "quadrica/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic-form and quadric-parametrization toolkit"};
    app.set_help_flag();  // default help gets confused by the ':' verbs in usage text
    bool help = false;
    app.add_flag("-h,--help", help, "print this help and exit");

    std::string verb;
    std::string file;
    std::uint64_t seed = quadrica::kDefaultClassifySeed;
    bool pretty = false;
    app.add_option("verb", verb,
                   "one of: qform:analyze qform:witt qform:isotropic qform:equivalent qform:og "
                   "map:construct map:verify map:classify curve:reduce curve:conic3 "
                   "curve:sympower veronese:check sphere:stereo");
    app.add_option("--file", file, "read the JSON payload from this file instead of stdin");
    app.add_option("--seed", seed, "override the recorded specialization seed");
    app.add_flag("--pretty", pretty, "indent the JSON output");

    CLI11_PARSE(app, argc, argv);
    if (help || verb.empty()) {
        std::cout << app.help() << std::endl;
        return verb.empty() && !help ? 2 : 0;
    }

    std::string text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open payload file: " << file << std::endl;
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) text = "{}";

    quadrica::json payload;
    try {
        payload = quadrica::json::parse(text);
    } catch (const std::exception& e) {
        std::cout << quadrica::json{{"error", std::string("payload is not valid JSON: ") + e.what()}}
                  << std::endl;
        return 2;
    }

    auto result = quadrica::run_command(verb, payload, seed);
    std::cout << (pretty ? result.output.dump(2) : result.output.dump()) << std::endl;
    return result.exit_code;
}
