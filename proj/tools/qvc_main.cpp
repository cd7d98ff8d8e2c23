// Copyright 2026 The qvc Authors
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

// qvc: command-line driver for the variational classifier pipeline.
//
//   qvc prep   --config run.json
//   qvc train  --config run.json
//   qvc eval   --config run.json
//   qvc kernel --config run.json
//   qvc report --config run.json [--force]
//
// Exit codes: 0 success, 1 user or configuration error, 2 internal error.

#include <iostream>

#include "CLI11.hpp"
#include "qvc/error.hpp"
#include "qvc/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum classifier pipeline"};
  app.require_subcommand(1);

  std::string config_path;
  bool force = false;
  bool quiet = false;

  struct Verb {
    const char* name;
    const char* help;
    void (*run)(const qvc::RunConfig&, const qvc::CommandOptions&);
  };
  const Verb verbs[] = {
      {"prep", "One-hot encode, split, fit PCA and min-max", qvc::cmd_prep},
      {"train", "Train the ansatz parameters with SPSA", qvc::cmd_train},
      {"eval", "Evaluate on the held-out split", qvc::cmd_eval},
      {"kernel", "Export train and test fidelity kernel matrices", qvc::cmd_kernel},
      {"report", "Run every stage and echo the resolved config", qvc::cmd_report},
  };
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("-c,--config", config_path, "Run config (JSON)")->required();
    sub->add_flag("-f,--force", force, "Overwrite existing artifacts");
    sub->add_flag("-q,--quiet", quiet, "Suppress progress output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const qvc::RunConfig cfg = qvc::load_run_config(config_path);
    qvc::CommandOptions opts;
    opts.overwrite = force;
    opts.log = quiet ? nullptr : &std::cerr;
    for (const Verb& v : verbs) {
      if (app.got_subcommand(v.name)) v.run(cfg, opts);
    }
  } catch (const qvc::InvariantError& e) {
    std::cerr << "qvc: internal error: " << e.what() << '\n';
    return 2;
  } catch (const qvc::Error& e) {
    std::cerr << "qvc: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "qvc: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qvc: internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
