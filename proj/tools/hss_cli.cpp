#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hss/complex.hpp"
#include "hss/engine.hpp"
#include "hss/error.hpp"
#include "hss/planner.hpp"
#include "hss/render.hpp"
#include "hss/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

hss::IVec parse_ints(const std::string& text, const std::string& what) {
  hss::IVec out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) throw hss::ParseError("malformed " + what + " '" + text + "'", start);
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

hss::IVec parse_position(const std::string& text, const hss::MultifilteredComplex& c) {
  hss::IVec p = parse_ints(text, "position");
  if (p.size() != static_cast<std::size_t>(c.n())) {
    throw hss::DimensionMismatch("position has " + std::to_string(p.size()) + " coordinates, complex has n=" +
                                 std::to_string(c.n()));
  }
  return p;
}

json matrix_json(const hss::Matrix& m) {
  auto rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct TermArgs {
  std::string input;
  std::string word;
  std::string position;
  int j = 1;
};

CLI::App* term_command(CLI::App& app, const std::string& name, const std::string& help, TermArgs& args,
                       bool needs_j) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--input", args.input, "complex file (JSON)")->required();
  sub->add_option("--word", args.word, "admissible word")->required();
  sub->add_option("--position", args.position, "comma-separated integers")->required();
  if (needs_j) sub->add_option("--j", args.j, "direction index (1-based)")->required();
  return sub;
}

int run(int argc, char** argv) {
  CLI::App app{"Higher spectral sequences of multifiltered chain complexes"};
  app.require_subcommand(1);

  TermArgs page_args, diff_args, sat_args, ext_args;
  term_command(app, "page", "report the page S(P; w)", page_args, false);
  term_command(app, "diff", "the differential of the page w in direction j at P", diff_args, true);
  term_command(app, "saturate", "the saturated page S(P; w j^inf)", sat_args, true);
  term_command(app, "extend", "the extension filtration of S(P; w j^inf e)", ext_args, true);

  std::string limit_input;
  auto* limit_cmd = app.add_subcommand("limit", "the limit term, i.e. the homology of the complex");
  limit_cmd->add_option("--input", limit_input, "complex file (JSON)")->required();

  std::string normal_text;
  int plan_j1 = 1;
  std::int64_t plan_k = 0;
  auto* plan_cmd = app.add_subcommand("plan", "the n=2 word with a given normal vector");
  plan_cmd->add_option("--normal", normal_text, "x,y")->required();
  plan_cmd->add_option("--j1", plan_j1, "direction saturated first (1 or 2)")->required();
  plan_cmd->add_option("--k", plan_k, "finite steps in direction j1 before saturation")->check(CLI::NonNegativeNumber);

  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<std::uint32_t> prime;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--seed", seed, "master seed");
  verify_cmd->add_option("--trials", trials, "random complexes in the main suite (0: enumerated suites only)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--prime", prime, "use only this characteristic");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  std::string draw_word;
  int draw_n = 2;
  std::string format = "ascii";
  std::int64_t truncation = 3;
  auto* draw_cmd = app.add_subcommand("draw-b", "draw the region B_w");
  draw_cmd->add_option("--word", draw_word, "admissible word")->required();
  draw_cmd->add_option("--n", draw_n, "number of filtrations");
  draw_cmd->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  draw_cmd->add_option("--truncation", truncation, "length of drawn rays and lines")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();

  if (name == "page") {
    const auto c = hss::load_mfc_file(page_args.input);
    const hss::Engine engine(c);
    const auto w = hss::Word::parse(page_args.word, c.n());
    emit(hss::page_report(c, engine.page(w, parse_position(page_args.position, c))));
  } else if (name == "diff") {
    const auto c = hss::load_mfc_file(diff_args.input);
    const hss::Engine engine(c);
    const auto w = hss::Word::parse(diff_args.word, c.n());
    const auto p = parse_position(diff_args.position, c);
    const auto d = engine.page_differential(w, p, diff_args.j);
    json doc;
    doc["word"] = w.to_string();
    doc["position"] = p;
    doc["j"] = diff_args.j;
    doc["source"] = c.dims_json(engine.dims(d.source.value));
    doc["middle"] = c.dims_json(engine.dims(d.middle.value));
    doc["target"] = c.dims_json(engine.dims(d.target.value));
    doc["incoming"] = matrix_json(d.incoming);
    doc["outgoing"] = matrix_json(d.outgoing);
    emit(doc);
  } else if (name == "saturate") {
    const auto c = hss::load_mfc_file(sat_args.input);
    const hss::Engine engine(c);
    const auto w = hss::Word::parse(sat_args.word, c.n());
    const auto p = parse_position(sat_args.position, c);
    json doc = hss::page_report(c, engine.saturate(w, p, sat_args.j));
    doc["stabilization_index"] = engine.stabilization_index(w, p, sat_args.j);
    emit(doc);
  } else if (name == "extend") {
    const auto c = hss::load_mfc_file(ext_args.input);
    const hss::Engine engine(c);
    const auto w = hss::Word::parse(ext_args.word, c.n());
    const auto p = parse_position(ext_args.position, c);
    const auto rep = engine.extension_filtration(w, p, ext_args.j);
    json doc;
    doc["word"] = w.then(hss::Letter::saturate(ext_args.j)).then(hss::Letter::extend()).to_string();
    doc["position"] = p;
    doc["first_index"] = rep.first_index;
    auto filtration = json::array();
    for (const auto& f : rep.filtration) filtration.push_back(c.dims_json(f));
    doc["filtration"] = std::move(filtration);
    auto pieces = json::array();
    for (const auto& g : rep.graded_pieces) pieces.push_back(c.dims_json(g));
    doc["graded_pieces"] = std::move(pieces);
    doc["total"] = c.dims_json(rep.total);
    emit(doc);
  } else if (name == "limit") {
    const auto c = hss::load_mfc_file(limit_input);
    const hss::Engine engine(c);
    json doc;
    doc["dims"] = c.dims_json(engine.limit());
    emit(doc);
  } else if (name == "plan") {
    const hss::IVec normal = parse_ints(normal_text, "normal vector");
    const hss::Plan plan = hss::plan_word(normal, plan_j1, plan_k);
    const hss::ContinuedFraction cf = hss::continued_fraction(normal);
    json doc;
    doc["normal"] = plan.normal;
    doc["j1"] = plan.j1;
    doc["j2"] = plan.j2;
    doc["k"] = plan.k;
    doc["complement"] = plan.complement;
    doc["trace"] = plan.trace;
    doc["tau"] = plan.tau.to_string();
    doc["omega"] = plan.omega.to_string();
    json cf_doc;
    cf_doc["infinite"] = cf.infinite;
    cf_doc["digits"] = cf.digits;
    cf_doc["alternate"] = cf.alternate ? json(*cf.alternate) : json(nullptr);
    doc["continued_fraction"] = std::move(cf_doc);
    emit(doc);
  } else if (name == "verify") {
    hss::VerifyOptions options = hss::VerifyOptions::scaled(seed, trials);
    if (prime) {
      hss::PrimeField checked(*prime);
      options.primes = {checked.characteristic()};
    }
    if (inject_fault) options.fault = hss::Fault::HomologyOffByOne;
    const auto results = hss::run_verification(options);
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failure_count
                << " failures\n";
    }
    const json summary = hss::verification_summary(results);
    std::cout << summary.dump(2) << "\n";
    return summary["passed"].get<bool>() ? 0 : 1;
  } else if (name == "draw-b") {
    const auto w = hss::Word::parse(draw_word, draw_n);
    std::cout << (format == "svg" ? hss::render_b_svg(w, truncation) : hss::render_b_ascii(w, truncation));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hss::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
