#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dunn/contraclassic.hpp"
#include "dunn/presets.hpp"
#include "support/reference_tables.hpp"

using namespace dunn;

namespace {

Interpretation I(const char* text) { return *Interpretation::parse(text); }

const ConditionSource& entry_for(const SourceReport& report, std::string_view token,
                                 ConditionPolarity polarity) {
  for (const ConditionSource& e : report.entries) {
    if (e.token == token && e.polarity == polarity) return e;
  }
  throw std::runtime_error("no report entry for " + std::string(token));
}

}  // namespace

TEST_CASE("classical catalog profiles are complementary") {
  for (const ClassicalCatalogEntry& entry : classical_catalog()) {
    REQUIRE(entry.truth_profile.values.size() == entry.falsity_profile.values.size());
    for (std::size_t i = 0; i < entry.truth_profile.values.size(); ++i) {
      CHECK(entry.truth_profile.values[i] != entry.falsity_profile.values[i]);
    }
  }
  CHECK(classical_catalog_entry(ClassicalFamily::conjunction).truth_profile.values ==
        std::vector<bool>{true, false, false, false});
  CHECK(classical_catalog_entry(ClassicalFamily::biconditional).falsity_profile.values ==
        std::vector<bool>{false, true, true, false});
}

TEST_CASE("classical benchmark construction") {
  SUBCASE("MC maps →W to the classical conditional and ∼ to classical negation") {
    LogicSpec bench = classical_benchmark(get_preset(PresetId::mc));
    CHECK(bench.admissible() ==
          std::vector<Interpretation>{I("{1}"), I("{0}")});
    std::vector<Interpretation> tf = {I("{1}"), I("{0}")};
    CHECK(truth_table("->w", bench).cell(tf) == I("{0}"));
    std::vector<Interpretation> f = {I("{0}")};
    CHECK(truth_table("~", bench).cell(f) == I("{1}"));
  }

  SUBCASE("RUET's benchmark reads ∼R as classical negation") {
    LogicSpec bench = classical_benchmark(get_preset(PresetId::ruet));
    std::vector<Interpretation> t = {I("{1}")};
    std::vector<Interpretation> f = {I("{0}")};
    CHECK(truth_table("~R", bench).cell(t) == I("{0}"));
    CHECK(truth_table("~R", bench).cell(f) == I("{1}"));
  }

  SUBCASE("benchmark of FDE validates excluded middle") {
    // Oracle first: two classical valuations by hand.
    // p={1}: p∨∼p = {1}∨{0} = {1}; p={0}: {0}∨{1} = {1}.
    const LogicSpec bench = classical_benchmark(get_preset(PresetId::fde));
    for (Interpretation a : bench.admissible()) {
      Interpretation value = evaluate(bench.parse("p | ~p"), Valuation::from_pairs({{"p", a}}), bench);
      CHECK(value == I("{1}"));
    }
    CHECK(is_logical_truth(bench.parse("p | ~p"), bench).valid);
  }

  SUBCASE("benchmarks are closed and two-valued") {
    for (PresetId id : all_presets()) {
      LogicSpec bench = classical_benchmark(get_preset(id));
      CHECK_FALSE(closure_check(bench).has_value());
      for (const ConnectiveDef& def : bench.connectives()) {
        TruthTable table = truth_table(def.signature.token, bench);
        for (Interpretation cell : table.cells) {
          CHECK((cell == I("{1}") || cell == I("{0}")));
        }
      }
    }
  }

  SUBCASE("benchmarking is idempotent on tables") {
    for (PresetId id : all_presets()) {
      LogicSpec once = classical_benchmark(get_preset(id));
      LogicSpec twice = classical_benchmark(once);
      for (const ConnectiveDef& def : once.connectives()) {
        CHECK(truth_table(def.signature.token, once).cells ==
              truth_table(def.signature.token, twice).cells);
      }
    }
  }
}

TEST_CASE("contra-classical witness checks") {
  const LogicSpec& mc = get_preset(PresetId::mc);
  CHECK(is_contra_classical_witness(Argument::parse("|- ~(p ->w ~p)", mc), mc));

  const LogicSpec& tonk = get_preset(PresetId::tonk_and);
  CHECK(is_contra_classical_witness(Argument::parse("|- ~(p &t ~p) <=> (p &t ~p)", tonk), tonk));

  const LogicSpec& fde = get_preset(PresetId::fde);
  CHECK_FALSE(is_contra_classical_witness(Argument::parse("p & q |- p", fde), fde));
}

TEST_CASE("bounded witness search") {
  SUBCASE("FDE finds nothing at the default bounds") {
    WitnessSearchResult result = find_contra_witnesses(get_preset(PresetId::fde), {});
    CHECK(result.witnesses.empty());
    CHECK_FALSE(result.truncated);
  }

  SUBCASE("BLSUP theorem search reaches the known witness") {
    const LogicSpec& blsup = get_preset(PresetId::blsup);

    // The known witness formula checks out directly.
    Formula target = blsup.parse("~((p => p) |aa ~(p => p))");
    CHECK(is_contra_classical_witness(Argument{{}, target}, blsup));

    // Its depth is 4 (∼ over ∨AA over ∼ over ⊃); at that depth the
    // search must return a same-signature representative of it.
    WitnessSearchBounds bounds;
    bounds.max_vars = 1;
    bounds.max_depth = 4;
    bounds.max_premises = 0;
    WitnessSearchResult result = find_contra_witnesses(blsup, bounds);
    REQUIRE_FALSE(result.witnesses.empty());
    bool found = false;
    const LogicSpec bench = classical_benchmark(blsup);
    for (const Argument& w : result.witnesses) {
      if (!w.premises.empty()) continue;
      if (same_value(w.conclusion, target, blsup).same &&
          same_value(w.conclusion, target, bench).same) {
        found = true;
        break;
      }
    }
    CHECK(found);

    // At the acceptance bounds (vars 2, depth 3, theorems only) the
    // search is non-empty as well.
    bounds.max_vars = 2;
    bounds.max_depth = 3;
    CHECK_FALSE(find_contra_witnesses(blsup, bounds).witnesses.empty());
  }

  SUBCASE("CP theorem search is non-empty at depth 3") {
    WitnessSearchBounds bounds;
    bounds.max_vars = 1;
    bounds.max_depth = 3;
    bounds.max_premises = 0;
    CHECK_FALSE(find_contra_witnesses(get_preset(PresetId::cp), bounds).witnesses.empty());
  }

  SUBCASE("every reported witness survives the slow re-check") {
    // Cross-validate the vectorized search against the plain
    // enumeration path, on a sample of the output.
    const LogicSpec& ruet = get_preset(PresetId::ruet);
    const LogicSpec bench = classical_benchmark(ruet);
    WitnessSearchResult result = find_contra_witnesses(ruet, {});
    REQUIRE_FALSE(result.witnesses.empty());
    std::size_t step = std::max<std::size_t>(1, result.witnesses.size() / 40);
    for (std::size_t i = 0; i < result.witnesses.size(); i += step) {
      CAPTURE(result.witnesses[i].render(ruet));
      CHECK(is_contra_classical_witness(result.witnesses[i], ruet, bench));
    }
  }

  SUBCASE("a zero budget truncates") {
    WitnessSearchBounds bounds;
    bounds.time_budget = std::chrono::milliseconds(0);
    WitnessSearchResult result = find_contra_witnesses(get_preset(PresetId::tonk_and), bounds);
    CHECK(result.truncated);
  }

  SUBCASE("bad bounds are rejected") {
    WitnessSearchBounds bounds;
    bounds.max_vars = 0;
    CHECK_THROWS_AS(find_contra_witnesses(get_preset(PresetId::fde), bounds), SpecError);
    bounds.max_vars = 1;
    bounds.max_depth = -1;
    CHECK_THROWS_AS(find_contra_witnesses(get_preset(PresetId::fde), bounds), SpecError);
  }
}

TEST_CASE("source classification finds the borrowed conditions") {
  SUBCASE("each modified condition names its classical source") {
    SourceReport ruet = source_classification(get_preset(PresetId::ruet));
    CHECK(entry_for(ruet, "~R", ConditionPolarity::truth).family == ClassicalFamily::identity);
    CHECK(entry_for(ruet, "~R", ConditionPolarity::truth).profile == ConditionPolarity::truth);
    CHECK(entry_for(ruet, "~R", ConditionPolarity::truth).borrowed);

    SourceReport cp = source_classification(get_preset(PresetId::cp));
    CHECK(entry_for(cp, "~K", ConditionPolarity::falsity).family == ClassicalFamily::identity);
    CHECK(entry_for(cp, "~K", ConditionPolarity::falsity).profile == ConditionPolarity::falsity);
    CHECK(entry_for(cp, "~K", ConditionPolarity::falsity).borrowed);

    SourceReport tonk = source_classification(get_preset(PresetId::tonk_and));
    CHECK(entry_for(tonk, "&t", ConditionPolarity::truth).family == ClassicalFamily::disjunction);
    CHECK(entry_for(tonk, "&t", ConditionPolarity::truth).borrowed);

    SourceReport blsup = source_classification(get_preset(PresetId::blsup));
    CHECK(entry_for(blsup, "&aa", ConditionPolarity::falsity).family ==
          ClassicalFamily::disjunction);
    CHECK(entry_for(blsup, "&aa", ConditionPolarity::falsity).profile ==
          ConditionPolarity::falsity);
    CHECK(entry_for(blsup, "|aa", ConditionPolarity::falsity).family ==
          ClassicalFamily::conjunction);

    SourceReport tonk_or = source_classification(get_preset(PresetId::tonk_or));
    CHECK(entry_for(tonk_or, "|t", ConditionPolarity::truth).family ==
          ClassicalFamily::conjunction);

    SourceReport df = source_classification(get_preset(PresetId::df));
    CHECK(entry_for(df, "->df", ConditionPolarity::truth).family == ClassicalFamily::conjunction);
    CHECK(entry_for(df, "->df", ConditionPolarity::truth).profile == ConditionPolarity::truth);

    SourceReport mc = source_classification(get_preset(PresetId::mc));
    CHECK(entry_for(mc, "->w", ConditionPolarity::falsity).family == ClassicalFamily::conjunction);
    CHECK(entry_for(mc, "->w", ConditionPolarity::falsity).profile == ConditionPolarity::falsity);
    CHECK(entry_for(mc, "->w", ConditionPolarity::falsity).borrowed);
  }

  SUBCASE("unmodified conditions are not borrowed") {
    for (PresetId id : {PresetId::fde, PresetId::k3, PresetId::lp, PresetId::cl,
                        PresetId::fde_neg, PresetId::fde_mat, PresetId::p1gen}) {
      SourceReport report = source_classification(get_preset(id));
      for (const ConditionSource& e : report.entries) {
        CAPTURE(report.logic_name); CAPTURE(e.token); CAPTURE(to_string(e.polarity));
        CHECK_FALSE(e.borrowed);
        CHECK(e.family.has_value());
      }
    }
  }

  SUBCASE("P1GEN matches its own falsity profiles") {
    SourceReport report = source_classification(get_preset(PresetId::p1gen));
    CHECK(entry_for(report, "~", ConditionPolarity::falsity).family == ClassicalFamily::negation);
    CHECK(entry_for(report, "&", ConditionPolarity::falsity).family ==
          ClassicalFamily::conjunction);
    CHECK(entry_for(report, "|", ConditionPolarity::falsity).family ==
          ClassicalFamily::disjunction);
    CHECK(entry_for(report, "->", ConditionPolarity::falsity).family ==
          ClassicalFamily::implication);
    for (const ConditionSource& e : report.entries) {
      CHECK(e.profile == e.polarity);
    }
  }

  SUBCASE("PCON borrows three falsity conditions, including XOR for ∧") {
    SourceReport report = source_classification(get_preset(PresetId::pcon));
    CHECK(entry_for(report, "&", ConditionPolarity::falsity).family ==
          ClassicalFamily::biconditional);
    CHECK(entry_for(report, "&", ConditionPolarity::falsity).profile ==
          ConditionPolarity::falsity);
    CHECK(entry_for(report, "&", ConditionPolarity::falsity).borrowed);
    CHECK(entry_for(report, "|", ConditionPolarity::falsity).family ==
          ClassicalFamily::conjunction);
    CHECK(entry_for(report, "->w", ConditionPolarity::falsity).family ==
          ClassicalFamily::conjunction);
    CHECK_FALSE(entry_for(report, "&", ConditionPolarity::truth).borrowed);
    CHECK_FALSE(entry_for(report, "->w", ConditionPolarity::truth).borrowed);
  }
}

TEST_CASE("borrowed conditions line up with contra-classicality") {
  const std::set<std::string> borrowed_somewhere = {"RUET", "CP",    "TONK-AND", "TONK-OR",
                                                    "BLSUP", "DF",   "MC",       "PCON"};
  for (PresetId id : all_presets()) {
    SourceReport report = source_classification(get_preset(id));
    bool any = false;
    for (const ConditionSource& e : report.entries) any = any || e.borrowed;
    CHECK(any == (borrowed_somewhere.count(std::string(preset_name(id))) > 0));
  }
}

TEST_CASE("negation inconsistency witnesses") {
  SUBCASE("MC: the classic witness pair, checked directly") {
    const LogicSpec& mc = get_preset(PresetId::mc);
    CHECK(is_logical_truth(mc.parse("(p & ~p) ->w p"), mc).valid);
    CHECK(is_logical_truth(mc.parse("~((p & ~p) ->w p)"), mc).valid);
  }

  SUBCASE("MC search finds witnesses; each is verified on the slow path") {
    const LogicSpec& mc = get_preset(PresetId::mc);
    WitnessSearchBounds bounds;
    bounds.max_vars = 1;
    bounds.max_depth = 3;
    NegationInconsistencyResult result = negation_inconsistency_witnesses(mc, "~", bounds);
    REQUIRE_FALSE(result.witnesses.empty());
    for (const Formula& w : result.witnesses) {
      CAPTURE(mc.render(w));
      CHECK(is_logical_truth(w, mc).valid);
      CHECK(is_logical_truth(Formula::apply("∼", {w}), mc).valid);
    }
  }

  SUBCASE("BLSUP finds its known witness") {
    const LogicSpec& blsup = get_preset(PresetId::blsup);
    WitnessSearchBounds bounds;
    bounds.max_vars = 1;
    bounds.max_depth = 3;
    NegationInconsistencyResult result = negation_inconsistency_witnesses(blsup, "~", bounds);
    Formula target = blsup.parse("(p => p) |aa ~(p => p)");
    bool found = false;
    for (const Formula& w : result.witnesses) {
      if (same_value(w, target, blsup).same) found = true;
    }
    CHECK(found);
  }

  SUBCASE("FDE has none (it has no logical truths)") {
    WitnessSearchBounds bounds;
    bounds.max_vars = 2;
    bounds.max_depth = 3;
    CHECK(negation_inconsistency_witnesses(get_preset(PresetId::fde), "~", bounds)
              .witnesses.empty());
  }

  SUBCASE("the negation must be unary") {
    CHECK_THROWS_AS(
        negation_inconsistency_witnesses(get_preset(PresetId::fde), "&", {}), SpecError);
  }
}

TEST_CASE("user-defined logics run through the whole analysis") {
  auto fde_with = [](const char* name, const char* truth, const char* falsity) {
    std::vector<ConnectiveDef> defs;
    for (const ConnectiveDef& def : get_preset(PresetId::fde).connectives()) {
      if (def.signature.token == "|") continue;
      defs.push_back(def);
    }
    defs.push_back(ConnectiveDef{ConnectiveSignature{"∨", "|", 2, kPrecedenceDisjunction},
                                 ConditionExpr::parse(truth), ConditionExpr::parse(falsity),
                                 ClassicalFamily::disjunction});
    return LogicSpec(name, std::move(defs),
                     std::vector<Interpretation>(Interpretation::all().begin(),
                                                 Interpretation::all().end()));
  };

  SUBCASE("borrowing the conditional's truth condition turns ∨ contra-classical") {
    LogicSpec custom = fde_with("OR-FROM-IMP", "0 in A1 or 1 in A2", "0 in A1 and 0 in A2");

    SourceReport report = source_classification(custom);
    const ConditionSource& truth = entry_for(report, "|", ConditionPolarity::truth);
    CHECK(truth.family == ClassicalFamily::implication);
    CHECK(truth.borrowed);

    CHECK(is_contra_classical_witness(Argument::parse("p |- ~p | q", custom), custom));
    WitnessSearchBounds bounds;
    bounds.max_depth = 1;
    CHECK_FALSE(find_contra_witnesses(custom, bounds).witnesses.empty());
  }

  SUBCASE("a mere tweaking of ∨'s conditions stays sub-classical") {
    // Both Dunn atoms of the falsity condition flipped to their Boolean
    // counterparts: no borrowed condition, and no witnesses either.
    LogicSpec tweaked = fde_with("OR-TWEAKED", "1 in A1 or 1 in A2", "1 notin A1 and 1 notin A2");
    CHECK(classify_change(get_preset(PresetId::fde).find_token("|")->falsity_condition,
                          tweaked.find_token("|")->falsity_condition) == ChangeKind::tweaking);
    for (const ConditionSource& e : source_classification(tweaked).entries) {
      CHECK_FALSE(e.borrowed);
    }
    CHECK(find_contra_witnesses(tweaked, {}).witnesses.empty());
  }
}

TEST_CASE("MC is hyper-connexive") {
  const LogicSpec& mc = get_preset(PresetId::mc);
  for (const char* thesis : {
           "~(p ->w ~p)",               // Aristotle's Thesis
           "~(~p ->w p)",               // variant
           "(p ->w q) ->w ~(p ->w ~q)", // Boethius' Thesis
           "(p ->w ~q) ->w ~(p ->w q)", // variant
           "~(p ->w ~q) ->w (p ->w q)", // converse of Boethius
           "~(p ->w q) ->w (p ->w ~q)", // converse of the variant
       }) {
    CAPTURE(thesis);
    CHECK(is_logical_truth(mc.parse(thesis), mc).valid);
  }
}
