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
#include "cli/run.h"

#include <cmath>
#include <fstream>
#include <limits>

#include "alphami/alpha.h"
#include "alphami/bounds.h"
#include "alphami/error.h"
#include "alphami/exponents.h"
#include "alphami/hyptest.h"
#include "alphami/sdpi.h"
#include "alphami/selftest.h"
#include "alphami/sibson.h"
#include "cli/event.h"
#include "cli/io.h"
#include "cli/report.h"
#include "json.hpp"

namespace alphami::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundTolerance = 1e-12;
constexpr double kSdpiTolerance = 1e-9;

std::vector<Alpha> Orders(const RunConfig& c, const char* fallback) {
  std::vector<Alpha> out;
  if (c.alphas.empty()) {
    out.push_back(Alpha::Parse(fallback));
  } else {
    for (const std::string& a : c.alphas) out.push_back(Alpha::Parse(a));
  }
  return out;
}

double FiniteAboveOne(Alpha a, const char* what) {
  if (!a.is_finite() || a.value() <= 1.0) {
    throw Error(ErrorKind::kPrecondition,
                std::string(what) + " needs finite orders above 1, got " + a.ToString());
  }
  return a.value();
}

double ParseTau(const std::string& text) {
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw Error(ErrorKind::kParse, "cannot parse tau '" + text + "'");
  }
  return v;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out.empty() ? "-" : out;
}

std::string JoinNumbers(const std::vector<double>& v) {
  std::vector<std::string> s;
  for (double d : v) s.push_back(FormatNumber(d));
  return Join(s);
}

std::string Arg(const char* key, const std::string& value) { return std::string(key) + "=" + value; }

void Header(const RunConfig& c, Report& r) {
  r.Set("command", c.command);
  r.Set("input", c.input.empty() ? "-" : c.input);
  r.Set("input_sha256", c.input.empty() ? "-" : Sha256Hex(ReadFile(c.input)));
  r.Set("channel", c.channel.empty() ? "-" : c.channel);
  r.Set("channel_sha256", c.channel.empty() ? "-" : Sha256Hex(ReadFile(c.channel)));
  r.Set("seed", std::to_string(c.seed));
  r.Set("alpha", Join(c.alphas));
  r.Set("event", c.event.empty() ? "-" : c.event);
  r.Set("thm", c.thm);
  r.Set("n", std::to_string(c.n));
  r.Set("tau", c.tau);
  r.Set("grid_step", FormatNumber(c.grid_step));
  r.Set("budget", std::to_string(c.budget));
  r.Set("trials", std::to_string(c.trials));
  r.Set("e_q", JoinNumbers(c.e_q));
  r.Set("e_p", JoinNumbers(c.e_p));
}

Joint3 RequireJoint(const RunConfig& c) {
  if (c.input.empty()) throw Error(ErrorKind::kValidation, "--input is required");
  return LoadJoint(c.input);
}

Kernel RequireChannel(const RunConfig& c) {
  if (c.channel.empty()) throw Error(ErrorKind::kValidation, "--channel is required");
  return LoadChannel(c.channel);
}

void RunMeasure(const RunConfig& c, Report& r) {
  const Joint3 j = RequireJoint(c);
  const Joint3 swapped = SwapXY(j);
  for (Alpha a : Orders(c, "2")) {
    const std::string arg = Arg("alpha", a.ToString());
    const double z = CondSibsonZ(j, a).value_nats;
    r.Value("cond_sibson_z", arg, "value_nats", z);
    r.Value("cond_sibson_ygz", arg, "value_nats", CondSibsonYGivenZ(j, a).value_nats);
    const double gap = std::abs(z - CondSibsonZ(swapped, a).value_nats);
    r.Check("cond_sibson_z", arg, "xy_swap_gap", gap, gap <= 1e-12 || z == kInf);
  }
  r.Value("cond_mutual_information", "-", "value_nats", ConditionalMutualInformation(j));
  r.Value("cond_maximal_leakage", "-", "value_nats", CondMaximalLeakage(j));
}

void EmitBound(const std::string& op, const std::string& arg, const BoundReport& b,
               Report& r) {
  r.Value(op, arg, "lhs", b.lhs);
  r.Value(op, arg, "rhs", b.rhs);
  r.Value(op, arg, "mass_factor", b.mass_factor);
  r.Value(op, arg, "information", b.information);
  r.Text(op, arg, "vacuous", b.vacuous ? "yes" : "no");
  r.Text(op, arg, "uninformative", b.uninformative ? "yes" : "no");
  r.Check(op, arg, "slack", b.slack, b.Holds(kBoundTolerance));
}

void RunBound(const RunConfig& c, Report& r) {
  if (c.event.empty()) throw Error(ErrorKind::kValidation, "--event is required");
  const Joint3 j = RequireJoint(c);
  if (c.thm == "leak") {
    EmitBound("bound_cor_leakage", "alpha=inf", BoundCorLeakage(j, ParseEvent(c.event, j)), r);
    return;
  }
  if (c.thm == "sdpi") {
    const Joint4 j4 = AttachChannel(j, RequireChannel(c));
    const Joint3 wyz = MarginalWYZ(j4);
    const EventMask e = ParseEvent(c.event, wyz);
    for (Alpha a : Orders(c, "2")) {
      const double alpha = FiniteAboveOne(a, "the contraction bound");
      ContractionSearchOptions opt;
      opt.budget = c.budget;
      opt.seed = c.seed;
      const ContractionEstimate est = ContractionSearch(ChannelYGivenX(j4), alpha, opt);
      const std::string arg = Arg("alpha", a.ToString());
      r.Value("contraction_search", arg, "eta_ratio_lower", est.eta_ratio_lower);
      EmitBound("bound_cor_sdpi", arg, BoundCorSdpi(j4, e, a, est.eta_ratio_lower), r);
    }
    return;
  }
  if (c.thm != "1" && c.thm != "3") {
    throw Error(ErrorKind::kValidation, "--thm must be 1, 3, leak or sdpi");
  }
  const EventMask e = ParseEvent(c.event, j);
  for (Alpha a : Orders(c, "2")) {
    const std::string arg = Arg("alpha", a.ToString());
    if (c.thm == "1") {
      EmitBound("bound_thm1", arg, BoundThm1(j, e, a), r);
    } else {
      EmitBound("bound_thm3", arg, BoundThm3(j, e, a), r);
    }
  }
}

void RunSdpi(const RunConfig& c, Report& r) {
  const Joint4 j4 = AttachChannel(RequireJoint(c), RequireChannel(c));
  for (Alpha a : Orders(c, "2")) {
    const double alpha = FiniteAboveOne(a, "sdpi");
    ContractionSearchOptions opt;
    opt.budget = c.budget;
    opt.seed = c.seed;
    const ContractionEstimate est = ContractionSearch(ChannelYGivenX(j4), alpha, opt);
    const std::string arg = Arg("alpha", a.ToString());
    r.Value("contraction_search", arg, "eta_normalized", est.eta_normalized);
    r.Value("contraction_search", arg, "eta_ratio_lower", est.eta_ratio_lower);
    const SdpiCheck check = SdpiConditionalCheck(j4, alpha, est);
    r.Value("sdpi_conditional", arg, "lhs", check.lhs);
    r.Value("sdpi_conditional", arg, "rhs", check.rhs);
    r.Check("sdpi_conditional", arg, "slack", check.rhs - check.lhs, check.holds);
  }
}

// Agreement of an estimate with an exact probability within three 95%
// binomial half-widths taken at the exact value.
bool Agrees(double estimate, double exact, int trials) {
  const double hw = 1.96 * std::sqrt(exact * (1.0 - exact) / trials);
  return std::abs(estimate - exact) <= 3.0 * hw + 1e-12;
}

void RunSimulate(const RunConfig& c, Report& r) {
  const Joint3 j = RequireJoint(c);
  const ThresholdTest test{ParseTau(c.tau), c.n};
  const ErrorReport exact = ExactErrors(j, test, c.grid_step);
  const std::string narg = Arg("n", std::to_string(c.n));
  r.Value("exact_errors", narg, "p1", exact.p1);
  r.Value("exact_errors", narg, "p2_worst", exact.p2_worst);
  r.Value("exact_errors", narg, "rate_r", exact.rate_r);
  r.Value("exact_errors", narg, "grid_points", static_cast<double>(exact.grid_points));
  r.Text("exact_errors", narg, "worst_qz", JoinNumbers(exact.worst_qz));

  const Pmf pz = Marginal(j, Axis::kZ);
  const std::vector<std::vector<double>> qz_list = {
      std::vector<double>(pz.probs().begin(), pz.probs().end()), exact.worst_qz};
  const ErrorReport mc = MonteCarloErrors(j, test, qz_list, c.trials, c.seed);
  r.Value("monte_carlo_errors", narg, "p1", mc.p1);
  r.Value("monte_carlo_errors", narg, "p1_half_width", mc.p1_half_width);
  r.Check("monte_carlo_errors", narg, "p1_minus_exact", mc.p1 - exact.p1,
          Agrees(mc.p1, exact.p1, c.trials));
  const char* names[] = {"qz=p_z", "qz=worst"};
  for (std::size_t q = 0; q < qz_list.size(); ++q) {
    const double p2_exact = ExactTypeTwoError(j, test, qz_list[q]);
    r.Value("exact_errors", names[q], "p2", p2_exact);
    r.Value("monte_carlo_errors", names[q], "p2", mc.p2[q]);
    r.Value("monte_carlo_errors", names[q], "p2_half_width", mc.p2_half_width[q]);
    r.Check("monte_carlo_errors", names[q], "p2_minus_exact", mc.p2[q] - p2_exact,
            Agrees(mc.p2[q], p2_exact, c.trials));
  }
  r.Check("exact_errors", narg, "worst_minus_p_z", exact.p2_worst - exact.p2.back(),
          exact.p2_worst >= exact.p2.back());

  for (Alpha a : Orders(c, "2")) {
    const double alpha = FiniteAboveOne(a, "the test bound");
    const Theorem6Report t = CheckTheorem6(j, test, alpha, c.grid_step);
    const std::string arg = Arg("alpha", a.ToString());
    r.Value("theorem6_check", arg, "information", t.information);
    r.Value("theorem6_check", arg, "grid_rate", t.grid_rate);
    r.Value("theorem6_check", arg, "claimed_rate", t.claimed_rate);
    r.Value("theorem6_check", arg, "lhs", t.lhs);
    r.Value("theorem6_check", arg, "rhs", t.rhs);
    r.Value("theorem6_check", arg, "normalized_lhs", t.normalized_lhs);
    r.Value("theorem6_check", arg, "normalized_rhs", t.normalized_rhs);
    if (t.certified) {
      r.Check("theorem6_check", arg, "slack", t.rhs - t.lhs, t.holds);
    } else {
      r.Text("theorem6_check", arg, "premise", "PREMISE_UNCERTIFIED");
    }
  }
}

void RunExponent(const RunConfig& c, Report& r) {
  const Joint3 j = RequireJoint(c);
  for (double l : {0.5, 0.0, -0.25, -0.5, -1.0, -2.0, -4.0}) {
    r.Value("ep_star", Arg("lambda", FormatNumber(l)), "value", EpStar(j, l));
  }
  const double at_positive = EpStar(j, 0.5);
  r.Check("ep_star", "lambda=0.5", "value", at_positive, at_positive == kInf);

  constexpr int kPoints = 100;
  std::vector<Sample> samples;
  double worst_sign = -kInf;
  for (int i = 0; i < kPoints; ++i) {
    const double l = -4.0 + 4.0 * i / (kPoints - 1);
    const double v = EpStar(j, l);
    worst_sign = std::max(worst_sign, v);
    samples.push_back({l, v});
  }
  const double violation = ConvexityViolation(samples);
  r.Check("ep_star", "lambda_grid=[-4,0]x100", "convexity_violation", violation,
          violation <= 1e-9);
  r.Check("ep_star", "lambda_grid=[-4,0]x100", "max_value", worst_sign, worst_sign <= 1e-12);

  const std::vector<double> grid = DefaultAlphaGrid();
  const std::vector<double> info = CondSibsonZOnGrid(j, grid);
  const std::vector<double> e_q = c.e_q.empty() ? std::vector<double>{0.0} : c.e_q;
  const std::vector<double> e_p = c.e_p.empty() ? std::vector<double>{0.0} : c.e_p;
  for (double e : e_q) {
    const BiconjugateValue b = EpBiconjugateFromValues(grid, info, e);
    r.Value("ep_biconjugate", Arg("e_q", FormatNumber(e)), "value", b.value);
    r.Value("ep_biconjugate", Arg("e_q", FormatNumber(e)), "argmax_alpha", b.argmax_alpha);
  }
  for (double e : e_p) {
    const BiconjugateValue b = EqBiconjugateFromValues(grid, info, e);
    r.Value("eq_biconjugate", Arg("e_p", FormatNumber(e)), "value", b.value);
    r.Value("eq_biconjugate", Arg("e_p", FormatNumber(e)), "argmax_alpha", b.argmax_alpha);
  }
}

void RunSelftestCommand(const RunConfig& c, Report& r) {
  for (const SelftestCheck& s : RunSelftest(c.seed)) {
    const std::string arg = Arg("cases", std::to_string(s.cases));
    r.Value("selftest", arg, s.name + ".tolerance", s.tolerance);
    r.Check("selftest", arg, s.name + ".worst", s.worst, s.passed);
  }
}

}  // namespace

const std::vector<std::string>& Commands() {
  static const std::vector<std::string> kCommands = {"measure",  "bound",    "sdpi",
                                                     "simulate", "exponent", "selftest"};
  return kCommands;
}

int Run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Report r;
    Header(c, r);
    if (c.command == "measure") {
      RunMeasure(c, r);
    } else if (c.command == "bound") {
      RunBound(c, r);
    } else if (c.command == "sdpi") {
      RunSdpi(c, r);
    } else if (c.command == "simulate") {
      RunSimulate(c, r);
    } else if (c.command == "exponent") {
      RunExponent(c, r);
    } else if (c.command == "selftest") {
      RunSelftestCommand(c, r);
    } else {
      throw Error(ErrorKind::kValidation, "unknown command '" + c.command + "'");
    }
    const std::string text = r.Render();
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream file(c.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::kResource, c.output + ": cannot write file");
      file << text;
    }
    return r.AllPassed() ? kExitPass : kExitAssertionFailed;
  } catch (const Error& e) {
    nlohmann::json record = {{"error", {{"kind", ErrorKindName(e.kind())},
                                        {"command", c.command},
                                        {"message", e.what()}}}};
    err << record.dump() << '\n';
    return kExitError;
  }
}

}  // namespace alphami::cli
