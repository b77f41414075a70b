#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "regcyc/constructions.hpp"
#include "regcyc/cycles.hpp"
#include "regcyc/density.hpp"
#include "regcyc/dtw.hpp"

using namespace regcyc;

namespace {

double seconds(const std::function<void()>& body, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s serial %10.4f ms  parallel %10.4f ms  speedup %5.2fx  %s\n", name, serial * 1e3,
              parallel * 1e3, parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
  bool ok = true;

  {
    auto d = random_regular_digraph(200, 8, 1);
    CNumber s, p;
    double ts = seconds([&] { s = c_number_serial(d); }, 3);
    double tp = seconds([&] { p = c_number(d, jobs); }, 3);
    bool same = s.c == p.c && s.best.hub == p.best.hub && s.best.cycles == p.best.cycles;
    report("c_number n=200 r=8", ts, tp, same);
    ok = ok && same;
  }
  {
    auto d = random_regular_digraph(20, 3, 2);
    const auto beta = make_rational(3, 11), gamma = make_rational(4, 11);
    PartitionSearchOptions options;
    options.jobs = jobs;
    std::optional<Bipartition> s, p;
    double ts = seconds([&] { s = find_violating_partition_serial(d, 3, beta, gamma); }, 1);
    double tp = seconds([&] { p = find_violating_partition(d, 3, beta, gamma, options); }, 1);
    bool same = s.has_value() == p.has_value() && (!s || s->x == p->x);
    report("partition n=20", ts, tp, same);
    ok = ok && same;
  }
  {
    auto d = random_regular_digraph(24, 4, 3);
    auto all = VertexSet::range(d.n());
    LinkedCheck s, p;
    double ts = seconds([&] { s = check_k_linked_serial(d, all, 4); }, 1);
    double tp = seconds([&] { p = check_k_linked(d, all, 4, kDefaultSubsetBudget, jobs); }, 1);
    bool same = s.linked == p.linked && s.failing == p.failing && s.subsets_checked == p.subsets_checked;
    report("k-linked n=24 k=4", ts, tp, same);
    ok = ok && same;
  }
  return ok ? 0 : 1;
}
