#include "cardzk/zk_audit.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

#include "cardzk/applications.hpp"
#include "cardzk/combinatorics.hpp"

namespace cardzk {

namespace {

// One run with every draw pinned to its canonical value. Establishes the
// reference verdict and block boundaries the factored enumeration must
// reproduce, plus the list of draw groups to factor over. Groups that only
// contain deterministic events (no draws) are kept so their reveals get
// compared as single-point factors.
struct CanonicalRun {
  Verdict verdict = Verdict::accept();
  std::vector<std::pair<std::string, std::uint64_t>> boundaries;
  std::vector<std::string> groups;
  int shuffle_sites = 0;
};

CanonicalRun canonical_run(const ProtocolRun& run, RandomSource::Fidelity fidelity,
                           bool logging) {
  CanonicalRun canon;
  OutcomeEnumerator::Options opts;
  opts.fidelity = fidelity;
  opts.focus_group = std::string();  // matches no group: pins everything
  OutcomeEnumerator::for_each_leaf(
      [&](RandomSource& rs) {
        Table table(rs, logging);
        canon.verdict = run(table);
        canon.boundaries = table.boundaries();
        canon.shuffle_sites = table.shuffle_calls();
        auto note = [&canon](const std::string& g) {
          if (std::find(canon.groups.begin(), canon.groups.end(), g) == canon.groups.end())
            canon.groups.push_back(g);
        };
        for (const RandomSource::Record& rec : rs.records()) note(rec.group);
        if (logging)
          for (const TranscriptEvent& ev : table.transcript().events()) note(ev.group);
      },
      opts);
  return canon;
}

void check_leaf_invariants(const CanonicalRun& canon, const Verdict& v, const Table& table,
                           const std::string& group) {
  if (v.accepted != canon.verdict.accepted || v.where != canon.verdict.where)
    throw ProtocolMisuse("factored audit: verdict varies inside draw group " + group);
  if (table.boundaries() != canon.boundaries)
    throw ProtocolMisuse("factored audit: block boundaries vary inside draw group " + group);
}

}  // namespace

FactoredEnumeration enumerate_factored(const ProtocolRun& run, RandomSource::Fidelity fidelity,
                                       std::int64_t max_leaves_per_group) {
  CanonicalRun canon = canonical_run(run, fidelity, /*logging=*/true);
  FactoredEnumeration out;
  out.verdict = canon.verdict;
  out.shuffle_sites = canon.shuffle_sites;
  out.total_runs = 1;

  for (const std::string& group : canon.groups) {
    FactorDistribution factor;
    factor.group = group;
    OutcomeEnumerator::Options opts;
    opts.fidelity = fidelity;
    opts.focus_group = group;
    opts.max_leaves = max_leaves_per_group;
    factor.leaves = OutcomeEnumerator::for_each_leaf(
        [&](RandomSource& rs) {
          Table table(rs, /*logging=*/true);
          Verdict v = run(table);
          check_leaf_invariants(canon, v, table, group);
          factor.probs[table.transcript().group_digest(group)] += rs.leaf_probability();
        },
        opts);

    double total = 0.0;
    for (const auto& [digest, p] : factor.probs) total += p;
    if (std::abs(total - 1.0) > 1e-6)
      throw ProtocolMisuse("factored audit: probabilities of group " + group +
                           " sum to " + std::to_string(total));
    out.total_runs += factor.leaves;
    out.factors.push_back(std::move(factor));
  }
  return out;
}

VerdictSweep sweep_verdicts(const ProtocolRun& run, std::int64_t max_leaves_per_group) {
  CanonicalRun canon = canonical_run(run, RandomSource::Fidelity::Verdict, /*logging=*/false);
  VerdictSweep out;
  out.verdict = canon.verdict;
  out.total_runs = 1;
  for (const std::string& group : canon.groups) {
    OutcomeEnumerator::Options opts;
    opts.fidelity = RandomSource::Fidelity::Verdict;
    opts.focus_group = group;
    opts.max_leaves = max_leaves_per_group;
    out.total_runs += OutcomeEnumerator::for_each_leaf(
        [&](RandomSource& rs) {
          Table table(rs, /*logging=*/false);
          Verdict v = run(table);
          check_leaf_invariants(canon, v, table, group);
        },
        opts);
  }
  return out;
}

ComparisonReport compare_exact(const FactoredEnumeration& real_side,
                               const FactoredEnumeration& sim_side, double tolerance) {
  auto unequal = [](std::string detail) {
    return ComparisonReport{false, std::move(detail)};
  };
  if (real_side.verdict.accepted != sim_side.verdict.accepted)
    return unequal("verdicts differ");

  auto index = [](const FactoredEnumeration& fe) {
    std::map<std::string, const FactorDistribution*> by_group;
    for (const FactorDistribution& f : fe.factors) by_group[f.group] = &f;
    return by_group;
  };
  std::map<std::string, const FactorDistribution*> real_by = index(real_side);
  std::map<std::string, const FactorDistribution*> sim_by = index(sim_side);

  std::vector<std::string> groups;
  for (const auto& [g, f] : real_by) groups.push_back(g);
  for (const auto& [g, f] : sim_by)
    if (!real_by.count(g)) groups.push_back(g);

  for (const std::string& g : groups) {
    auto ri = real_by.find(g);
    auto si = sim_by.find(g);
    if (ri == real_by.end() || si == sim_by.end())
      return unequal("group " + g + " appears on only one side");
    const auto& rp = ri->second->probs;
    const auto& sp = si->second->probs;
    if (rp.size() != sp.size())
      return unequal("group " + g + ": " + std::to_string(rp.size()) + " vs " +
                     std::to_string(sp.size()) + " transcript slices");
    for (const auto& [digest, p] : rp) {
      auto it = sp.find(digest);
      if (it == sp.end())
        return unequal("group " + g + ": a transcript slice appears on only one side");
      if (std::abs(p - it->second) > tolerance) {
        std::ostringstream msg;
        msg << "group " << g << ": slice probability " << p << " vs " << it->second;
        return unequal(msg.str());
      }
    }
  }
  return {true, ""};
}

Verdict run_seeded(const ProtocolRun& run, std::uint64_t seed, Transcript& out) {
  RandomSource rs = RandomSource::seeded(seed);
  Table table(rs, /*logging=*/true);
  Verdict v = run(table);
  out = table.transcript();
  return v;
}

MutationSweep sweep_shuffle_mutations(const ProtocolRun& real_run,
                                      const FactoredEnumeration& sim_side) {
  MutationSweep out;
  out.sites = canonical_run(real_run, RandomSource::Fidelity::Exact, false).shuffle_sites;
  for (int site = 0; site < out.sites; ++site) {
    ProtocolRun mutated = [site, &real_run](Table& table) {
      table.set_skipped_shuffle(site);
      return real_run(table);
    };
    FactoredEnumeration dist = enumerate_factored(mutated);
    if (compare_exact(dist, sim_side).equal) out.undetected.push_back(site);
  }
  return out;
}

// --- statistical comparison --------------------------------------------------

namespace {

struct RevealClass {
  std::size_t position;
  std::string tag;
  std::map<std::uint64_t, int> real_counts;
  std::map<std::uint64_t, int> sim_counts;
};

// Accumulates hashed reveal outcomes by transcript position. The event
// COUNT schedule is public and fixed, but a tag may carry run-dependent
// public data (the Bridges extraction names the slot it opens), so the
// tag is part of the outcome, not of the class identity: each position
// compares the joint (tag, symbols) distribution.
bool accumulate(const Transcript& t, std::vector<RevealClass>& classes, bool real_side,
                std::string& problem) {
  const std::vector<TranscriptEvent>& events = t.events();
  std::size_t next = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].kind != TranscriptEvent::Kind::Reveal) continue;
    if (next >= classes.size() || classes[next].position != i) {
      problem = "transcripts do not share one event schedule (position " +
                std::to_string(i) + ")";
      return false;
    }
    std::uint64_t key = fnv1a64(events[i].tag.data(), events[i].tag.size());
    key = fnv1a64(events[i].symbols.data(), events[i].symbols.size(), key);
    auto& counts = real_side ? classes[next].real_counts : classes[next].sim_counts;
    ++counts[key];
    ++next;
  }
  if (next != classes.size()) {
    problem = "transcripts do not share one event schedule (length)";
    return false;
  }
  return true;
}

}  // namespace

ComparisonReport compare_statistical(const ProtocolRun& real_side, const ProtocolRun& sim_side,
                                     int samples, double alpha, std::uint64_t seed) {
  Transcript shape;
  run_seeded(real_side, seed, shape);
  std::vector<RevealClass> classes;
  for (std::size_t i = 0; i < shape.events().size(); ++i)
    if (shape.events()[i].kind == TranscriptEvent::Kind::Reveal)
      classes.push_back(RevealClass{i, shape.events()[i].tag, {}, {}});

  std::string problem;
  for (int i = 0; i < samples; ++i) {
    Transcript real_t;
    run_seeded(real_side, seed + 2 * static_cast<std::uint64_t>(i), real_t);
    if (!accumulate(real_t, classes, true, problem)) return {false, problem};
    Transcript sim_t;
    run_seeded(sim_side, seed + 2 * static_cast<std::uint64_t>(i) + 1, sim_t);
    if (!accumulate(sim_t, classes, false, problem)) return {false, problem};
  }

  // First pass: which classes actually vary (after binning and merging)?
  // Bonferroni needs the count of tested hypotheses before any verdict.
  struct Tested {
    const RevealClass* cls;
    std::vector<std::pair<int, int>> bins;  // (real, sim) counts
  };
  std::vector<Tested> tested;
  for (const RevealClass& cls : classes) {
    std::map<std::uint64_t, std::pair<int, int>> outcomes;
    for (const auto& [key, count] : cls.real_counts) outcomes[key].first += count;
    for (const auto& [key, count] : cls.sim_counts) outcomes[key].second += count;
    if (outcomes.size() <= 1) continue;

    std::map<std::uint64_t, std::pair<int, int>> binned;
    if (outcomes.size() > 64) {
      for (const auto& [key, counts] : outcomes) {
        auto& bin = binned[key % 32];
        bin.first += counts.first;
        bin.second += counts.second;
      }
    } else {
      binned = std::move(outcomes);
    }

    std::vector<std::pair<int, int>> bins;
    std::pair<int, int> rare{0, 0};
    for (const auto& [key, counts] : binned) {
      if (counts.first + counts.second < 10) {
        rare.first += counts.first;
        rare.second += counts.second;
      } else {
        bins.push_back(counts);
      }
    }
    if (rare.first + rare.second > 0) bins.push_back(rare);
    if (bins.size() < 2) continue;
    tested.push_back(Tested{&cls, std::move(bins)});
  }
  if (tested.empty()) return {true, "no varying reveal classes"};

  double threshold = alpha / static_cast<double>(tested.size());
  for (const Tested& t : tested) {
    double n_real = 0, n_sim = 0, total = 0;
    for (const auto& [r, s] : t.bins) {
      n_real += r;
      n_sim += s;
      total += r + s;
    }
    double chi2 = 0;
    for (const auto& [r, s] : t.bins) {
      double col = r + s;
      double e_real = n_real * col / total;
      double e_sim = n_sim * col / total;
      chi2 += (r - e_real) * (r - e_real) / e_real;
      chi2 += (s - e_sim) * (s - e_sim) / e_sim;
    }
    boost::math::chi_squared dist(static_cast<double>(t.bins.size() - 1));
    double p = boost::math::cdf(boost::math::complement(dist, chi2));
    if (p < threshold) {
      std::ostringstream msg;
      msg << "reveal " << t.cls->tag << " (event " << t.cls->position << "): p=" << p
          << " below " << threshold;
      return {false, msg.str()};
    }
  }
  return {true, ""};
}

// --- packaged runs -----------------------------------------------------------

ProtocolRun spanning_run(const Graph& g, const EdgeFlags& h) {
  return [g, h](Table& table) { return verify_spanning_honest(g, h, table); };
}

ProtocolRun spanning_scripted_run(const Graph& g,
                                  std::vector<std::vector<Suit>> commitment_patterns,
                                  std::vector<SecretPlacement> rounds) {
  return [g, commitment_patterns, rounds](Table& table) {
    std::vector<int> coloring = greedy_coloring(g);
    SubgraphCommitment commitment = commit_patterns(g, commitment_patterns, table);
    ScriptedSpanningProver prover(rounds);
    return verify_connected_spanning(g, coloring, commitment, prover, table);
  };
}

ProtocolRun hamiltonian_run(const Graph& g, const EdgeFlags& h) {
  return [g, h](Table& table) {
    return verify_hamiltonian(g, greedy_coloring(g), h, table);
  };
}

ProtocolRun max_leaf_run(const Graph& g, int leaves, const EdgeFlags& h) {
  return [g, leaves, h](Table& table) {
    return verify_max_leaf(g, greedy_coloring(g), leaves, h, table);
  };
}

ProtocolRun bridges_run(const BridgesInstance& inst, const BridgesSolution& sol) {
  return [inst, sol](Table& table) { return verify_bridges(inst, sol, table); };
}

// --- simulators ---------------------------------------------------------------

namespace {

// Simulators write to the transcript directly: they have no cards, only
// the public schedule and the public reveal distributions.
void emit_reveal(Table& table, const std::string& tag, const std::string& symbols) {
  if (table.logging()) table.transcript().reveal(tag, symbols, table.rng().group());
}

int draw_core(Table& table, std::int64_t range) {
  return table.rng().draw(static_cast<int>(range), RandomSource::DrawClass::Core);
}

int draw_cosmetic(Table& table, std::int64_t range) {
  return table.rng().draw(static_cast<int>(range), RandomSource::DrawClass::Cosmetic);
}

std::string heart_at(int pos, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (i) out += ' ';
    out += (i == pos) ? 'H' : 'C';
  }
  return out;
}

std::string repeat_clubs(int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += 'C';
  }
  return out;
}

// `positions` ascending; `yes` there, `no` elsewhere.
std::string pattern_at(int n, const std::vector<int>& positions, char yes, char no) {
  std::string out;
  std::size_t next = 0;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    if (next < positions.size() && positions[next] == i) {
      out += yes;
      ++next;
    } else {
      out += no;
    }
  }
  return out;
}

std::string marks_text(const std::vector<int>& order, int lowest) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(order[i] + lowest);
  }
  return out;
}

// Mirrors select_sequence over k candidates: the shifted selector row is
// a uniformly placed single heart.
void sim_select(Table& table, const std::string& tag, int k) {
  emit_reveal(table, tag + ".row1.deal", heart_at(0, k));
  GroupGuard guard(table, tag + ".pick");
  table.log_action(tag + ".shift");
  emit_reveal(table, tag + ".row2", heart_at(draw_core(table, k), k));
}

void sim_restore(Table& table, const std::string& tag, int k) {
  GroupGuard guard(table, tag + ".restore");
  table.log_action(tag + ".restore.shift");
  emit_reveal(table, tag + ".row1", heart_at(draw_core(table, k), k));
}

// Mirrors neighbor_count on an m x k matrix whose revealed count is the
// public value `matches`: row 1's heart lands uniformly, the checked
// column shows `matches` hearts at a uniform row subset, and the
// rearrangement marks come up in freshly drawn uniform orders.
void sim_count(Table& table, const std::string& tag, int m, int k, int matches) {
  std::string outer = table.rng().group();
  int marked = m - 1;

  table.set_group(tag + ".cols");
  table.log_action(tag + ".scramble.cols");
  int j = draw_core(table, k);

  table.set_group(tag + ".rows");
  table.log_action(tag + ".scramble.rows");
  std::vector<int> heart_rows;
  if (marked > 1)
    heart_rows = nth_combination(marked, matches, draw_core(table, binomial(marked, matches)));
  else if (matches == 1)
    heart_rows.push_back(0);

  table.set_group(tag + ".cols");
  emit_reveal(table, tag + ".row1", heart_at(j, k));
  table.set_group(tag + ".rows");
  emit_reveal(table, tag + ".col", pattern_at(marked, heart_rows, 'H', 'C'));

  table.set_group(tag + ".restore.marks.cols");
  table.log_action(tag + ".restore.scramble.cols");
  emit_reveal(table, tag + ".restore.marks.cols",
              marks_text(nth_permutation(k, draw_cosmetic(table, factorial(k))), 1));

  table.set_group(tag + ".restore.marks.rows");
  table.log_action(tag + ".restore.scramble.rows");
  if (marked > 1) {
    emit_reveal(table, tag + ".restore.marks.rows",
                marks_text(nth_permutation(marked, draw_cosmetic(table, factorial(marked))), 2));
  } else {
    emit_reveal(table, tag + ".restore.marks.rows", "2");
  }
  table.set_group(outer);
}

void sim_copy(Table& table, const std::string& tag, int k, int made) {
  GroupGuard guard(table, tag);
  for (int i = 0; i < made; ++i) emit_reveal(table, tag + ".blank.deal", heart_at(0, k));
  table.log_action(tag + ".shift");
  emit_reveal(table, tag + ".row1", heart_at(draw_core(table, k), k));
}

void sim_add(Table& table, const std::string& tag, int k) {
  GroupGuard guard(table, tag);
  table.log_action(tag + ".shift");
  emit_reveal(table, tag + ".row1", heart_at(draw_core(table, k), k));
}

void sim_multiply(Table& table, const std::string& tag, int k) {
  emit_reveal(table, tag + ".zero.deal", heart_at(0, k));
  if (k > 2) {
    sim_copy(table, tag + ".fuel", k, k - 1);
    for (int i = 2; i < k; ++i) {
      sim_copy(table, tag + ".rung" + std::to_string(i), k, 2);
      sim_add(table, tag + ".add" + std::to_string(i), k);
    }
  }
  sim_select(table, tag + ".pick", k);
}

void sim_spanning(Table& table, const Graph& g, const std::string& prefix) {
  int n = g.vertex_count();
  int k = g.max_degree() + 3;
  std::vector<int> coloring = greedy_coloring(g);

  table.set_group(prefix + "setup");
  for (int v = 1; v <= n; ++v)
    emit_reveal(table, prefix + "blank.v" + std::to_string(v), heart_at(k - 1, k));

  for (int round = 1; round <= n - 1; ++round) {
    int s = round;
    int t = n;
    std::string rtag = prefix + "r" + std::to_string(round);
    table.set_group(rtag + ".place");
    for (int v = 1; v <= n; ++v)
      if (v == s || v == t)
        emit_reveal(table, rtag + ".place.v" + std::to_string(v), heart_at(0, k));

    for (int v = 1; v <= n; ++v) {
      std::string vtag = rtag + ".v" + std::to_string(v);
      table.set_group(vtag);
      for (int u : g.neighbors(v)) sim_select(table, vtag + ".nb" + std::to_string(u), 2);
      emit_reveal(table, vtag + ".art.deal", heart_at(coloring[static_cast<size_t>(v)], k));
      emit_reveal(table, vtag + ".art.deal", heart_at(coloring[static_cast<size_t>(v)], k));
      int expected = (v == s || v == t) ? 1 : 2;
      sim_count(table, vtag + ".count", g.degree(v) + 3, k, expected);
      for (int u : g.neighbors(v)) sim_restore(table, vtag + ".nb" + std::to_string(u), 2);
    }
  }
}

std::string cell_text(int r, int c) {
  return std::to_string(r) + "." + std::to_string(c);
}

std::string lip_name(bool horizontal, int r, int c) {
  return (horizontal ? "lip.h" : "lip.v") + cell_text(r, c);
}

}  // namespace

ProtocolRun spanning_simulator(const Graph& g) {
  return [g](Table& table) {
    sim_spanning(table, g, "");
    return Verdict::accept();
  };
}

ProtocolRun hamiltonian_simulator(const Graph& g) {
  return [g](Table& table) {
    sim_spanning(table, g, "span.");
    for (int e = 0; e < g.edge_count(); ++e)
      sim_copy(table, "deg.e" + std::to_string(e), 2, 2);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      std::string tag = "deg.v" + std::to_string(v);
      GroupGuard guard(table, tag);
      table.log_action(tag + ".scramble");
      int dv = g.degree(v);
      if (dv == 0) continue;
      std::vector<int> clubs{0, 1};
      if (dv > 1) clubs = nth_combination(dv, 2, draw_cosmetic(table, binomial(dv, 2)));
      emit_reveal(table, tag + ".open", pattern_at(dv, clubs, 'C', 'H'));
    }
    return Verdict::accept();
  };
}

ProtocolRun bridges_simulator(const BridgesInstance& inst) {
  return [inst](Table& table) {
    table.set_group("lips");
    for (int r = 0; r <= inst.rows; ++r)
      for (int c = 0; c < inst.cols; ++c)
        emit_reveal(table, lip_name(true, r, c) + ".ext", repeat_clubs(6));
    for (int r = 0; r < inst.rows; ++r)
      for (int c = 0; c <= inst.cols; ++c)
        emit_reveal(table, lip_name(false, r, c) + ".ext", repeat_clubs(6));

    table.set_group("boundary");
    for (int c = 0; c < inst.cols; ++c) {
      emit_reveal(table, lip_name(true, 0, c) + ".zero", heart_at(0, 9));
      emit_reveal(table, lip_name(true, inst.rows, c) + ".zero", heart_at(0, 9));
    }
    for (int r = 0; r < inst.rows; ++r) {
      emit_reveal(table, lip_name(false, r, 0) + ".zero", heart_at(0, 9));
      emit_reveal(table, lip_name(false, r, inst.cols) + ".zero", heart_at(0, 9));
    }

    for (const auto& [r, c] : inst.islands()) {
      std::string tag = "isl" + cell_text(r, c);
      GroupGuard guard(table, tag);
      for (int i = 1; i <= 4; ++i) sim_copy(table, tag + ".cp" + std::to_string(i), 9, 2);
      for (int i = 1; i <= 3; ++i) sim_add(table, tag + ".add" + std::to_string(i), 9);
      emit_reveal(table, tag + ".deal", heart_at(inst.island_number(r, c), 9));
      sim_count(table, tag + ".count", 2, 9, 1);
    }

    for (int r = 0; r < inst.rows; ++r) {
      for (int c = 0; c < inst.cols; ++c) {
        if (inst.is_island(r, c)) continue;
        std::string tag = "cell" + cell_text(r, c);
        GroupGuard guard(table, tag);
        sim_copy(table, tag + ".cp1", 9, 2);
        sim_copy(table, tag + ".cp3", 9, 2);
        sim_count(table, tag + ".vert", 2, 9, 1);
        sim_copy(table, tag + ".cp2", 9, 2);
        sim_copy(table, tag + ".cp4", 9, 2);
        sim_count(table, tag + ".horiz", 2, 9, 1);
        sim_copy(table, tag + ".cp5", 9, 2);
        sim_copy(table, tag + ".cp6", 9, 2);
        sim_multiply(table, tag + ".mul", 9);
        emit_reveal(table, tag + ".zero.deal", heart_at(0, 9));
        sim_count(table, tag + ".cross", 2, 9, 1);
      }
    }

    if (!inst.islands().empty()) {
      Graph g = island_graph(inst);
      for (int e = 0; e < g.edge_count(); ++e) {
        std::string tag = "xtr.e" + std::to_string(e);
        GroupGuard guard(table, tag + ".mix");
        table.log_action(tag + ".mix");
        int slot = draw_cosmetic(table, 2);
        emit_reveal(table, tag + ".club.slot" + std::to_string(slot), "C");
      }
      sim_spanning(table, g, "span.");
    }
    return Verdict::accept();
  };
}

}  // namespace cardzk
