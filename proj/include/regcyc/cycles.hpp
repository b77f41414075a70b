#pragma once

#include <optional>
#include <vector>

#include "regcyc/density.hpp"
#include "regcyc/digraph.hpp"

namespace regcyc {

/// Directed cycles through a common hub that share no other vertex. Each
/// cycle is stored as hub, ..., hub.
struct CyclePacking {
  Vertex hub = 0;
  std::vector<std::vector<Vertex>> cycles;

  std::size_t size() const noexcept { return cycles.size(); }
};

/// Maximum packing at a fixed hub, via Menger between N+(v) and N-(v).
CyclePacking cycles_through(const Digraph& d, Vertex v);

struct CNumber {
  int c = 0;
  CyclePacking best;
};

/// c(D): max over hubs, lowest hub id on ties. Hubs are evaluated in
/// parallel; the result does not depend on the thread count.
CNumber c_number(const Digraph& d, int jobs = 0);
CNumber c_number_serial(const Digraph& d);

bool verify_cycle_packing(const Digraph& d, const CyclePacking& packing);

inline constexpr int kBruteForceMaxVertices = 8;

/// Exhaustive search over simple cycles through each hub. Independent of
/// the flow-based route; only for n <= 8.
int c_brute_force(const Digraph& d);

/// ceil(3r/22).
int cycle_lower_bound(int r);

/// A verified packing of size >= ceil(3r/22), scanning hubs in ascending
/// order and stopping at the first that meets the bound.
CyclePacking guaranteed_packing(const Digraph& d);

/// Replay of the c(D) >= ceil(3r/22) argument on a concrete digraph.
struct TraceReport {
  DensityParams params;
  DenseWitness dense;
  std::optional<Vertex> hub;  // from the high-degree lemma, ids of D
  bool hub_from_lemma = false;
  CyclePacking packing;
  int bound = 0;
  // The separator-size argument applies when D' was exactly verified, the
  // hub has both D'-degrees >= gamma*r and v(D') - |S cap V(D')| > 2 gamma r.
  bool argument_applies = false;
  int separator_size = 0;
  bool bound_met = false;
};

struct TraceOptions {
  PartitionSearchOptions search;
  int jobs = 0;
};

TraceReport theorem1_trace(const Digraph& d, const TraceOptions& options = {});

}  // namespace regcyc
