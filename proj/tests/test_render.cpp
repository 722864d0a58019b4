#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunn/presets.hpp"
#include "dunn/render.hpp"

using namespace dunn;

TEST_CASE("classify report carries the borrowed-condition line") {
  std::string text =
      render_source_report(source_classification(get_preset(PresetId::mc)), OutputFormat::text);
  CHECK(text.find("falsity(->w) = classical falsity(∧) [borrowed]") != std::string::npos);
  CHECK(text.find("truth(~) = classical truth(¬)") != std::string::npos);
}

TEST_CASE("empty witness report names the bounds") {
  WitnessSearchBounds bounds;
  WitnessSearchResult empty;
  std::string text =
      render_witnesses(empty, get_preset(PresetId::fde), bounds, OutputFormat::text);
  CHECK(text == "no witnesses (bounds: vars=2, depth=2, premises=2)\n");
}

TEST_CASE("verdict rendering") {
  Verdict invalid = Verdict::invalid(Valuation::from_pairs({{"p", Interpretation::just_false()}}));
  CHECK(render_verdict(invalid, OutputFormat::text) == "Invalid, counterexample p={0}\n");
  CHECK(render_verdict(invalid, OutputFormat::machine) ==
        "verdict=invalid\ncounterexample p={0}\n");
  CHECK(render_verdict(Verdict::valid_verdict(), OutputFormat::text) == "Valid\n");
  CHECK(render_verdict(Verdict::valid_verdict(), OutputFormat::machine) == "verdict=valid\n");
}

TEST_CASE("closure rendering") {
  CHECK(render_closure(std::nullopt, OutputFormat::machine) == "closure=ok\n");
  ClosureViolation violation{"∼R", {Interpretation::just_true()}, Interpretation::both()};
  CHECK(render_closure(violation, OutputFormat::machine) ==
        "closure=violation symbol=∼R args={1} result={1,0}\n");
  CHECK(render_closure(violation, OutputFormat::text) ==
        "Closure violation: ∼R({1}) = {1,0} is not admissible\n");
}

TEST_CASE("machine-readable output is identical across runs") {
  const LogicSpec& mc = get_preset(PresetId::mc);
  auto run = [&] {
    std::string out;
    out += render_table(truth_table("->w", mc), OutputFormat::machine);
    out += render_source_report(source_classification(mc), OutputFormat::machine);
    WitnessSearchBounds bounds;
    bounds.max_vars = 1;
    out += render_witnesses(find_contra_witnesses(mc, bounds), mc, bounds, OutputFormat::machine);
    return out;
  };
  CHECK(run() == run());
}

TEST_CASE("table rendering, machine cells") {
  std::string text = render_table(truth_table("~", get_preset(PresetId::fde)), OutputFormat::machine);
  CHECK(text.find("table symbol=∼ token=~ arity=1") != std::string::npos);
  CHECK(text.find("cell args={1} value={0}") != std::string::npos);
  CHECK(text.find("cell args={1,0} value={1,0}") != std::string::npos);
}

TEST_CASE("condition diff picks out the tweaking that produces ⊃") {
  std::string text = render_condition_diff(get_preset(PresetId::fde_mat), OutputFormat::machine);
  CHECK(text.find("diff connective==> condition=truth baseline=implication kind=Tweaking") !=
        std::string::npos);
  CHECK(text.find("diff connective=-> condition=truth baseline=implication kind=Identical") !=
        std::string::npos);
  // →W's falsity change mixes leaf and node changes
  std::string mc = render_condition_diff(get_preset(PresetId::mc), OutputFormat::machine);
  CHECK(mc.find("diff connective=->w condition=falsity baseline=implication kind=C5-Mixed") !=
        std::string::npos);
}
