// Command-line front end: per-knot reports, pinch traces, family tables and
// the verification harness.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <new>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crosscap/format.hpp"
#include "crosscap/genus.hpp"
#include "crosscap/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

crosscap::Int decimal_arg(const std::string& text, const std::string& name) {
  const auto v = crosscap::parse_decimal(text);
  if (!v) throw UsageError{name + " must be a decimal integer, got '" + text + "'"};
  return *v;
}

crosscap::OutputFormat format_arg(const std::string& text) {
  const auto f = crosscap::parse_format(text);
  if (!f) throw UsageError{"unknown format '" + text + "' (human, json, csv)"};
  return *f;
}

crosscap::TorusKnot nontrivial_knot(const std::string& p_text, const std::string& q_text) {
  const crosscap::TorusKnot knot =
      crosscap::normalize(decimal_arg(p_text, "P"), decimal_arg(q_text, "Q"));
  if (knot.is_unknot()) throw crosscap::Error(crosscap::Errc::UnknotInput, knot.to_string() + " is an unknot");
  return knot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonorientable genus invariants of torus knots"};
  app.require_subcommand(1);

  std::string p_text, q_text, format_text = "human";

  auto* report = app.add_subcommand("report", "All invariants of T(P,Q)");
  report->add_option("P", p_text)->required();
  report->add_option("Q", q_text)->required();
  report->add_option("--format", format_text, "human|json|csv");

  std::string stop_text = "first-unknot";
  auto* trace = app.add_subcommand("trace", "Successive pinch moves on T(P,Q)");
  trace->add_option("P", p_text)->required();
  trace->add_option("Q", q_text)->required();
  trace->add_option("--stop", stop_text, "first-unknot|zero");

  std::string pmax_text, qmax_text, filter_text = "all", out_path;
  auto* table = app.add_subcommand("table", "Invariant table over a parameter range");
  table->add_option("--pmax", pmax_text)->required();
  table->add_option("--qmax", qmax_text)->required();
  table->add_option("--filter", filter_text, "all|even|odd|batson|family-km1");
  table->add_option("--format", format_text, "human|json|csv");
  table->add_option("--out", out_path, "write the table to FILE");

  std::string max_text;
  auto* verify = app.add_subcommand("verify", "Exhaustive lemma and theorem checks");
  verify->add_option("--max", max_text)->required();
  verify->add_option("--format", format_text, "human|json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*report) {
      const auto format = format_arg(format_text);
      std::cout << crosscap::render_report(crosscap::make_report(nontrivial_knot(p_text, q_text)), format);
      return kExitOk;
    }
    if (*trace) {
      crosscap::StopAt stop;
      if (stop_text == "first-unknot") {
        stop = crosscap::StopAt::FirstUnknot;
      } else if (stop_text == "zero") {
        stop = crosscap::StopAt::Zero;
      } else {
        throw UsageError{"unknown stop '" + stop_text + "' (first-unknot, zero)"};
      }
      std::cout << crosscap::render_trace(crosscap::pinch_sequence(nontrivial_knot(p_text, q_text), stop));
      return kExitOk;
    }
    if (*table) {
      const auto format = format_arg(format_text);
      const auto filter = crosscap::parse_filter(filter_text);
      if (!filter) throw UsageError{"unknown filter '" + filter_text + "'"};
      const auto pmax = decimal_arg(pmax_text, "--pmax");
      const auto qmax = decimal_arg(qmax_text, "--qmax");
      if (pmax < 2 || qmax < 2) throw UsageError{"--pmax and --qmax must be at least 2"};
      const std::string text = crosscap::render_table(crosscap::build_table(pmax, qmax, *filter), format);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) throw UsageError{"cannot write " + out_path};
      }
      return kExitOk;
    }
    if (*verify) {
      const auto format = format_arg(format_text);
      const auto max = decimal_arg(max_text, "--max");
      if (max < 3) throw UsageError{"--max must be at least 3"};
      const auto outcomes = crosscap::verify::run_all(max);
      std::cout << crosscap::render_outcomes(outcomes, format);
      for (const auto& o : outcomes) {
        if (!o.passed()) return kExitVerifyFailed;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const crosscap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: input too large (out of memory)\n";
    return kExitUsage;
  }
  return kExitUsage;
}
