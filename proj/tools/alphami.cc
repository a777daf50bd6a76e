// Copyright 2026 The alphami Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/run.h"

namespace {

constexpr const char* kFooter = R"help(Commands:
  measure   I_a^Z, I_a^{Y|Z}, I(X;Y|Z) and L(X -> Y | Z) of --input
  bound     check a probability bound (--thm 1, 3, leak or sdpi) for --event
  sdpi      contraction search for --channel and the conditional SDPI check;
            --input is then read as (W, X, Z) with W in x_labels, X in y_labels
  simulate  exact and sampled errors of the threshold test, and its bound
  exponent  conjugate forms of the error-exponent functions
  selftest  seeded property suite

Input: {"x_labels": [...], "y_labels": [...], "z_labels": [...], "probs": [...]}
  with probs x-major, then y, then z. Channel: {"in_labels": [...],
  "out_labels": [...], "rows": [[...], ...]}.

Events:
  expr    := conj ( "||" conj )*
  conj    := unary ( "&&" unary )*
  unary   := "!" unary | primary
  primary := "(" expr ")" | compare
  compare := var ( "==" | "!=" ) operand
  operand := var | label
  var     := "x" | "y" | "z"
  Labels are bare words or quoted strings. For --thm sdpi, x names W.

Environment: ALPHAMI_TENSOR_CAP caps tensor-power sizes (default 1e7).
Exit status: 0 all checks pass, 1 a check failed, 2 error (JSON on stderr).)help";

}  // namespace

int main(int argc, char** argv) {
  alphami::cli::RunConfig config;
  CLI::App app{"Conditional Sibson alpha-mutual information toolkit", "alphami"};
  app.footer(kFooter);
  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(alphami::cli::Commands()));
  app.add_option("--input", config.input, "Joint distribution file");
  app.add_option("--alpha", config.alphas, "Order (number, one or inf); repeatable")
      ->take_all();
  app.add_option("--event", config.event, "Event expression");
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--grid-step", config.grid_step, "Q_Z simplex grid step")
      ->capture_default_str();
  app.add_option("--budget", config.budget, "Random pairs in the contraction search")
      ->capture_default_str();
  app.add_option("--n", config.n, "Sample length")->capture_default_str();
  app.add_option("--tau", config.tau, "Threshold in nats per symbol; inf and -inf allowed")
      ->capture_default_str();
  app.add_option("--output", config.output, "Report file (default stdout)");
  app.add_option("--thm", config.thm, "Bound: 1, 3, leak or sdpi")->capture_default_str();
  app.add_option("--channel", config.channel, "Channel file for sdpi");
  app.add_option("--trials", config.trials, "Monte Carlo trials")->capture_default_str();
  app.add_option("--e-q", config.e_q, "Type-2 exponent arguments; repeatable")->take_all();
  app.add_option("--e-p", config.e_p, "Type-1 exponent arguments; repeatable")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : alphami::cli::kExitError;
  }
  return alphami::cli::Run(config, std::cout, std::cerr);
}
