#include "dunn/contraclassic.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace dunn {

namespace {

ClassicalCatalogEntry make_entry(ClassicalFamily family, std::string_view truth,
                                 std::string_view falsity) {
  const int arity = classical_family_arity(family);
  ConditionExpr t = ConditionExpr::parse(truth);
  ConditionExpr f = ConditionExpr::parse(falsity);
  BooleanFunction tp = classical_profile(t, arity);
  BooleanFunction fp = classical_profile(f, arity);
  return ClassicalCatalogEntry{family, arity, std::move(t), std::move(f), std::move(tp), std::move(fp)};
}

}  // namespace

const std::vector<ClassicalCatalogEntry>& classical_catalog() {
  static const std::vector<ClassicalCatalogEntry> catalog = [] {
    std::vector<ClassicalCatalogEntry> entries;
    entries.push_back(make_entry(ClassicalFamily::identity, "1 in A1", "0 in A1"));
    entries.push_back(make_entry(ClassicalFamily::negation, "0 in A1", "1 in A1"));
    entries.push_back(make_entry(ClassicalFamily::conjunction, "1 in A1 and 1 in A2",
                                 "0 in A1 or 0 in A2"));
    entries.push_back(make_entry(ClassicalFamily::disjunction, "1 in A1 or 1 in A2",
                                 "0 in A1 and 0 in A2"));
    entries.push_back(make_entry(ClassicalFamily::implication, "0 in A1 or 1 in A2",
                                 "1 in A1 and 0 in A2"));
    entries.push_back(make_entry(ClassicalFamily::biconditional,
                                 "(0 in A1 or 1 in A2) and (0 in A2 or 1 in A1)",
                                 "(1 in A1 and 0 in A2) or (1 in A2 and 0 in A1)"));
    return entries;
  }();
  return catalog;
}

const ClassicalCatalogEntry& classical_catalog_entry(ClassicalFamily family) {
  for (const ClassicalCatalogEntry& entry : classical_catalog()) {
    if (entry.family == family) return entry;
  }
  throw SpecError("no catalog entry for classical family");
}

LogicSpec classical_benchmark(const LogicSpec& spec) {
  std::vector<ConnectiveDef> defs;
  defs.reserve(spec.connectives().size());
  for (const ConnectiveDef& def : spec.connectives()) {
    const ClassicalCatalogEntry& entry = classical_catalog_entry(def.classical_counterpart);
    if (entry.arity != def.signature.arity) {
      throw SpecError("connective '" + def.signature.symbol + "' (arity " +
                      std::to_string(def.signature.arity) + ") declares classical counterpart " +
                      std::string(to_string(def.classical_counterpart)) + " of arity " +
                      std::to_string(entry.arity));
    }
    defs.push_back(ConnectiveDef{def.signature, entry.truth_condition, entry.falsity_condition,
                                 def.classical_counterpart});
  }
  return LogicSpec(spec.name() + "-classical",
                   std::move(defs),
                   {Interpretation::just_true(), Interpretation::just_false()});
}

bool is_contra_classical_witness(const Argument& arg, const LogicSpec& spec) {
  return is_contra_classical_witness(arg, spec, classical_benchmark(spec));
}

bool is_contra_classical_witness(const Argument& arg, const LogicSpec& spec,
                                 const LogicSpec& benchmark) {
  return entails(arg, spec).valid && !entails(arg, benchmark).valid;
}

std::string WitnessSearchBounds::to_string() const {
  return "vars=" + std::to_string(max_vars) + ", depth=" + std::to_string(max_depth) +
         ", premises=" + std::to_string(max_premises);
}

std::string_view to_string(ConditionPolarity p) {
  return p == ConditionPolarity::truth ? "truth" : "falsity";
}

// ---------------------------------------------------------------------------
// Semantic formula pool

namespace {

using Clock = std::chrono::steady_clock;

// Value vectors are stored as canonical indices; truth masks carry one
// bit per valuation (1 iff 1 ∈ σ(f)), padding bits zero.
struct PoolEntry {
  Formula formula;
  int depth;
  std::vector<std::uint8_t> values;        // over the logic's valuations
  std::vector<std::uint8_t> bench_values;  // over the benchmark's valuations
  std::vector<std::uint64_t> truth_mask;
  std::vector<std::uint64_t> bench_truth_mask;
};

std::vector<std::uint64_t> truth_mask_of(const std::vector<std::uint8_t>& values) {
  std::vector<std::uint64_t> mask((values.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (Interpretation::from_canonical_index(values[i]).is_true()) {
      mask[i / 64] |= std::uint64_t(1) << (i % 64);
    }
  }
  return mask;
}

PoolEntry make_pool_entry(Formula formula, int depth, std::vector<std::uint8_t> values,
                          std::vector<std::uint8_t> bench_values) {
  std::vector<std::uint64_t> truth_mask = truth_mask_of(values);
  std::vector<std::uint64_t> bench_truth_mask = truth_mask_of(bench_values);
  return PoolEntry{std::move(formula), depth,           std::move(values),
                   std::move(bench_values), std::move(truth_mask), std::move(bench_truth_mask)};
}

std::string signature_key(const PoolEntry& e) {
  std::string key(e.values.begin(), e.values.end());
  key.push_back('\xff');
  key.append(e.bench_values.begin(), e.bench_values.end());
  return key;
}

// Per-connective application over value vectors via the precomputed
// full tables.
class VectorApplier {
public:
  explicit VectorApplier(const LogicSpec& spec) : spec_(spec) {}

  std::vector<std::uint8_t> apply(std::size_t connective_index,
                                  const std::vector<std::uint8_t>& a) const {
    std::span<const Interpretation> table = spec_.full_table(connective_index);
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = static_cast<std::uint8_t>(table[a[i]].canonical_index());
    }
    return out;
  }

  std::vector<std::uint8_t> apply(std::size_t connective_index, const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b) const {
    std::span<const Interpretation> table = spec_.full_table(connective_index);
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = static_cast<std::uint8_t>(table[a[i] * 4 + b[i]].canonical_index());
    }
    return out;
  }

private:
  const LogicSpec& spec_;
};

const std::vector<std::string>& pool_variable_names() {
  static const std::vector<std::string> names = {"p", "q", "r", "s", "t", "u", "v", "w"};
  return names;
}

struct FormulaPool {
  std::vector<PoolEntry> entries;
  std::size_t valuation_count = 0;
  std::size_t bench_valuation_count = 0;
  bool truncated = false;
};

// Builds the deduplicated pool, breadth-first by depth. Every raw
// formula of depth <= max_depth over the variables has a representative
// with the same (logic, benchmark) signature pair.
FormulaPool build_pool(const LogicSpec& spec, const LogicSpec& benchmark,
                       const WitnessSearchBounds& bounds, Clock::time_point deadline) {
  if (bounds.max_vars < 1 ||
      bounds.max_vars > static_cast<int>(pool_variable_names().size())) {
    throw SpecError("max_vars must be between 1 and " +
                    std::to_string(pool_variable_names().size()));
  }
  if (bounds.max_depth < 0) throw SpecError("max_depth must be >= 0");

  const std::vector<std::string> vars(pool_variable_names().begin(),
                                      pool_variable_names().begin() + bounds.max_vars);

  FormulaPool pool;
  std::unordered_map<std::string, std::size_t> seen;
  VectorApplier apply_logic(spec);
  VectorApplier apply_bench(benchmark);

  // Atom value vectors.
  std::vector<Valuation> logic_valuations = enumerate_valuations(vars, spec.admissible());
  std::vector<Valuation> bench_valuations = enumerate_valuations(vars, benchmark.admissible());
  pool.valuation_count = logic_valuations.size();
  pool.bench_valuation_count = bench_valuations.size();

  auto insert_entry = [&](PoolEntry entry) {
    std::string key = signature_key(entry);
    auto [it, inserted] = seen.emplace(std::move(key), pool.entries.size());
    if (inserted) pool.entries.push_back(std::move(entry));
    return inserted;
  };

  for (const std::string& var : vars) {
    std::vector<std::uint8_t> values;
    values.reserve(logic_valuations.size());
    for (const Valuation& v : logic_valuations) {
      values.push_back(static_cast<std::uint8_t>(v.value(var).canonical_index()));
    }
    std::vector<std::uint8_t> bench_values;
    bench_values.reserve(bench_valuations.size());
    for (const Valuation& v : bench_valuations) {
      bench_values.push_back(static_cast<std::uint8_t>(v.value(var).canonical_index()));
    }
    insert_entry(make_pool_entry(Formula::atom(var), 0, std::move(values), std::move(bench_values)));
  }

  std::size_t budget_probe = 0;
  auto out_of_budget = [&] {
    if ((++budget_probe & 1023) == 0 && Clock::now() > deadline) {
      pool.truncated = true;
      return true;
    }
    return false;
  };

  std::size_t level_begin = 0;  // first entry of the previous depth level
  for (int depth = 1; depth <= bounds.max_depth && !pool.truncated; ++depth) {
    const std::size_t level_end = pool.entries.size();
    for (std::size_t ci = 0; ci < spec.connectives().size() && !pool.truncated; ++ci) {
      const int arity = spec.connectives()[ci].signature.arity;
      if (arity == 1) {
        for (std::size_t i = level_begin; i < level_end; ++i) {
          if (out_of_budget()) break;
          insert_entry(make_pool_entry(
              Formula::apply(spec.connectives()[ci].signature.symbol, {pool.entries[i].formula}),
              depth, apply_logic.apply(ci, pool.entries[i].values),
              apply_bench.apply(ci, pool.entries[i].bench_values)));
        }
      } else {
        for (std::size_t l = 0; l < level_end && !pool.truncated; ++l) {
          for (std::size_t r = 0; r < level_end; ++r) {
            // at least one operand from the newest level
            if (pool.entries[l].depth != depth - 1 && pool.entries[r].depth != depth - 1) continue;
            if (out_of_budget()) break;
            insert_entry(make_pool_entry(
                Formula::apply(spec.connectives()[ci].signature.symbol,
                               {pool.entries[l].formula, pool.entries[r].formula}),
                depth, apply_logic.apply(ci, pool.entries[l].values, pool.entries[r].values),
                apply_bench.apply(ci, pool.entries[l].bench_values, pool.entries[r].bench_values)));
          }
        }
      }
    }
    level_begin = level_end;
  }
  return pool;
}

bool mask_covers(const std::vector<std::uint64_t>& premises, const std::vector<std::uint64_t>& conclusion) {
  for (std::size_t w = 0; w < premises.size(); ++w) {
    if ((premises[w] & ~conclusion[w]) != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> full_mask(std::size_t count) {
  std::vector<std::uint64_t> mask((count + 63) / 64, ~std::uint64_t(0));
  if (count % 64 != 0 && !mask.empty()) {
    mask.back() = (std::uint64_t(1) << (count % 64)) - 1;
  }
  return mask;
}

std::vector<std::uint64_t> mask_and(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

}  // namespace

WitnessSearchResult find_contra_witnesses(const LogicSpec& spec, const WitnessSearchBounds& bounds) {
  require_closure(spec);
  const LogicSpec benchmark = classical_benchmark(spec);
  require_closure(benchmark);
  if (bounds.max_premises < 0) throw SpecError("max_premises must be >= 0");

  const Clock::time_point deadline = Clock::now() + bounds.time_budget;
  FormulaPool pool = build_pool(spec, benchmark, bounds, deadline);

  WitnessSearchResult result;
  result.truncated = pool.truncated;

  const std::size_t n = pool.entries.size();
  const std::vector<std::uint64_t> all_logic = full_mask(pool.valuation_count);
  const std::vector<std::uint64_t> all_bench = full_mask(pool.bench_valuation_count);

  std::size_t budget_probe = 0;
  auto out_of_budget = [&] {
    if ((++budget_probe & 4095) == 0 && Clock::now() > deadline) {
      result.truncated = true;
      return true;
    }
    return false;
  };

  // Premise index combinations in lexicographic order, then conclusions
  // in pool order; the output therefore is already canonically ordered.
  std::vector<std::size_t> combo;
  auto scan_conclusions = [&](const std::vector<std::uint64_t>& joint,
                              const std::vector<std::uint64_t>& bench_joint) {
    for (std::size_t c = 0; c < n; ++c) {
      if (out_of_budget()) return;
      if (!mask_covers(joint, pool.entries[c].truth_mask)) continue;       // not valid in L
      if (mask_covers(bench_joint, pool.entries[c].bench_truth_mask)) continue;  // valid classically
      std::vector<Formula> premises;
      premises.reserve(combo.size());
      for (std::size_t pi : combo) premises.push_back(pool.entries[pi].formula);
      result.witnesses.push_back(Argument{std::move(premises), pool.entries[c].formula});
    }
  };

  for (int k = 0; k <= bounds.max_premises && !result.truncated; ++k) {
    if (static_cast<std::size_t>(k) > n) break;
    combo.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
    for (;;) {
      std::vector<std::uint64_t> joint = all_logic;
      std::vector<std::uint64_t> bench_joint = all_bench;
      for (std::size_t pi : combo) {
        joint = mask_and(joint, pool.entries[pi].truth_mask);
        bench_joint = mask_and(bench_joint, pool.entries[pi].bench_truth_mask);
      }
      scan_conclusions(joint, bench_joint);
      if (result.truncated) break;

      // next k-combination of {0..n-1}
      if (k == 0) break;
      std::size_t i = combo.size();
      bool advanced = false;
      while (i > 0) {
        --i;
        if (combo[i] + (combo.size() - i) < n) {
          ++combo[i];
          for (std::size_t j = i + 1; j < combo.size(); ++j) combo[j] = combo[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }

  return result;
}

// ---------------------------------------------------------------------------
// Source classification

namespace {

const BooleanFunction& profile_of(const ClassicalCatalogEntry& entry, ConditionPolarity p) {
  return p == ConditionPolarity::truth ? entry.truth_profile : entry.falsity_profile;
}

ConditionSource classify_condition(const ConnectiveDef& def, ConditionPolarity polarity) {
  const ConditionExpr& condition =
      polarity == ConditionPolarity::truth ? def.truth_condition : def.falsity_condition;
  const BooleanFunction profile = classical_profile(condition, def.signature.arity);

  ConditionSource source;
  source.symbol = def.signature.symbol;
  source.token = def.signature.token;
  source.polarity = polarity;

  // Same polarity first, then the opposite one; families in catalog order.
  const ConditionPolarity opposite =
      polarity == ConditionPolarity::truth ? ConditionPolarity::falsity : ConditionPolarity::truth;
  for (ConditionPolarity side : {polarity, opposite}) {
    for (const ClassicalCatalogEntry& entry : classical_catalog()) {
      if (entry.arity != def.signature.arity) continue;
      if (profile_of(entry, side) == profile) {
        source.family = entry.family;
        source.profile = side;
        source.borrowed =
            entry.family != def.classical_counterpart || side != polarity;
        return source;
      }
    }
  }
  source.borrowed = false;  // matches no classical condition, so borrows none
  return source;
}

}  // namespace

SourceReport source_classification(const LogicSpec& spec) {
  SourceReport report;
  report.logic_name = spec.name();
  for (const ConnectiveDef& def : spec.connectives()) {
    report.entries.push_back(classify_condition(def, ConditionPolarity::truth));
    report.entries.push_back(classify_condition(def, ConditionPolarity::falsity));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Negation inconsistency

NegationInconsistencyResult negation_inconsistency_witnesses(const LogicSpec& spec,
                                                             std::string_view negation_symbol,
                                                             const WitnessSearchBounds& bounds) {
  require_closure(spec);
  const ConnectiveDef& neg = spec.require_connective(negation_symbol);
  if (neg.signature.arity != 1) {
    throw SpecError("negation connective '" + neg.signature.symbol + "' must be unary");
  }
  const std::size_t neg_index = spec.connective_index(neg.signature.symbol);

  const LogicSpec benchmark = classical_benchmark(spec);
  const Clock::time_point deadline = Clock::now() + bounds.time_budget;
  FormulaPool pool = build_pool(spec, benchmark, bounds, deadline);

  NegationInconsistencyResult result;
  result.truncated = pool.truncated;

  const std::vector<std::uint64_t> all_logic = full_mask(pool.valuation_count);
  VectorApplier apply_logic(spec);
  for (const PoolEntry& entry : pool.entries) {
    if (!mask_covers(all_logic, entry.truth_mask)) continue;  // A itself not a logical truth
    std::vector<std::uint8_t> negated = apply_logic.apply(neg_index, entry.values);
    if (!mask_covers(all_logic, truth_mask_of(negated))) continue;
    result.witnesses.push_back(entry.formula);
  }
  return result;
}

}  // namespace dunn
