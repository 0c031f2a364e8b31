// Copyright 2026 The ssdef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ssdef: run the verification checks.
//
//   ssdef verify [check... | all]
//   ssdef list
//   ssdef report --format json
//
// Exit codes: 0 all assertable checks pass, 1 some check failed, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssdef/checks.hpp"

namespace {

constexpr int exit_usage = 2;

int emit(const ssdef::Report& rep, const std::string& format)
{
    if (format == "json") {
        std::cout << ssdef::to_json(rep).dump(2) << "\n";
    } else {
        std::cout << ssdef::to_text(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification harness for the supersingular curve y^2 + y = x^3 over F_4 and its deformations"};
    app.require_subcommand(1);

    ssdef::CheckConfig config;
    std::string format = "text";
    std::string parallel = "on";
    app.add_option("--padic-precision", config.k, "Witt vector length k")->capture_default_str();
    app.add_option("--a1-truncation", config.m, "a1-adic truncation m")->capture_default_str();
    app.add_option("--series-order", config.n, "power series order N")->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--parallel", parallel, "run checks concurrently")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();

    std::vector<std::string> names;
    auto* verify = app.add_subcommand("verify", "run named checks, or all of them");
    verify->add_option("checks", names, "check names or 'all'");
    auto* list = app.add_subcommand("list", "print the check catalog");
    auto* report = app.add_subcommand("report", "run every check and print the full report");
    // The format flag is accepted after the subcommand as well.
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    report->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    config.parallel = parallel == "on";

    if (*list) {
        const auto& cat = ssdef::check_catalog();
        if (format == "json") {
            ssdef::Json j = ssdef::Json::array();
            for (const auto& c : cat) {
                j.push_back({{"name", c.name}, {"anchor", c.anchor}, {"assertable", c.assertable}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& c : cat) {
                std::string name = c.name;
                name.resize(22, ' ');
                std::cout << name << " " << (c.assertable ? "assert  " : "record  ") << c.anchor << "\n";
            }
        }
        return 0;
    }

    if (*verify && names.size() == 1 && names[0] == "all") {
        names.clear();
    }
    if (*verify && names.empty() && verify->count("checks") == 0) {
        std::cerr << "verify: name at least one check, or 'all'\n";
        return exit_usage;
    }
    if (*report) {
        names.clear();
    }
    try {
        return emit(ssdef::run_checks(names, config), format);
    } catch (const ssdef::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
