#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cardzk/bridges.hpp"
#include "cardzk/errors.hpp"
#include "cardzk/graph.hpp"
#include "cardzk/random_source.hpp"
#include "cardzk/spanning.hpp"
#include "cardzk/table.hpp"
#include "cardzk/transcript.hpp"

namespace cardzk {

// A protocol run as the auditors see it: fresh table in, verdict out.
// Each invocation must rebuild its own secrets from scratch so that the
// outcome enumerator can replay it along every randomness path.
using ProtocolRun = std::function<Verdict(Table&)>;

// Distribution of one draw group's transcript slice, keyed by group digest.
// Groups without draws still get a (single-point) factor so deterministic
// reveals are compared too.
struct FactorDistribution {
  std::string group;
  std::int64_t leaves = 0;
  std::map<std::uint64_t, double> probs;
};

struct FactoredEnumeration {
  Verdict verdict;
  std::vector<FactorDistribution> factors;
  std::int64_t total_runs = 0;
  int shuffle_sites = 0;
};

// Enumerates each draw group independently while pinning the others, and
// checks the factoring is honest: the verdict and every block-boundary
// digest must be identical on every leaf of every factor, and each factor's
// probabilities must sum to one. Because state digests reconverge at block
// boundaries, the joint transcript distribution is the product of these
// factors; comparing factor-by-factor is then exact, not an approximation.
FactoredEnumeration enumerate_factored(const ProtocolRun& run,
                                       RandomSource::Fidelity fidelity = RandomSource::Fidelity::Exact,
                                       std::int64_t max_leaves_per_group = 2'000'000);

// Enumerates verdict-relevant draws only (transcript logging off) and
// checks the verdict is the same on every leaf. Used by the completeness
// and soundness sweeps.
struct VerdictSweep {
  Verdict verdict;
  std::int64_t total_runs = 0;
};
VerdictSweep sweep_verdicts(const ProtocolRun& run, std::int64_t max_leaves_per_group = 2'000'000);

struct ComparisonReport {
  bool equal = true;
  std::string detail;  // first discrepancy, for diagnostics
};

// Exact distribution equality, factor by factor.
ComparisonReport compare_exact(const FactoredEnumeration& real_side,
                               const FactoredEnumeration& sim_side,
                               double tolerance = 1e-9);

// Two-sample chi-square test per reveal position, Bonferroni-corrected
// across positions. Both runs must produce transcripts with the same tag
// shape (they do: the event schedule is public).
ComparisonReport compare_statistical(const ProtocolRun& real_side,
                                     const ProtocolRun& sim_side,
                                     int samples = 10'000,
                                     double alpha = 0.001,
                                     std::uint64_t seed = 0);

// One seeded execution; returns the verifier's view.
Verdict run_seeded(const ProtocolRun& run, std::uint64_t seed, Transcript& out);

// Re-runs `real` with each shuffle site in turn forced to be skipped and
// reports which mutations the exact comparison against `sim` fails to
// detect. A sound audit detects all of them.
struct MutationSweep {
  int sites = 0;
  std::vector<int> undetected;
};
MutationSweep sweep_shuffle_mutations(const ProtocolRun& real_run,
                                      const FactoredEnumeration& sim_side);

// --- packaged runs ---------------------------------------------------------

ProtocolRun spanning_run(const Graph& g, const EdgeFlags& h);
ProtocolRun spanning_scripted_run(const Graph& g,
                                  std::vector<std::vector<Suit>> commitment_patterns,
                                  std::vector<SecretPlacement> rounds);
ProtocolRun hamiltonian_run(const Graph& g, const EdgeFlags& h);
ProtocolRun max_leaf_run(const Graph& g, int leaves, const EdgeFlags& h);
ProtocolRun bridges_run(const BridgesInstance& inst, const BridgesSolution& sol);

// --- simulators -------------------------------------------------------------
//
// Witness-free emitters: they see only the public instance, write the same
// tags in the same groups as an accepting real run, and sample every reveal
// from its public distribution. Exact equality of the factored distributions
// against a real run is the zero-knowledge property made executable.

ProtocolRun spanning_simulator(const Graph& g);
ProtocolRun hamiltonian_simulator(const Graph& g);
ProtocolRun bridges_simulator(const BridgesInstance& inst);

}  // namespace cardzk
