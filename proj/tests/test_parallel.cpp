#include <doctest.h>

#include "ordpat/completion.hpp"
#include "ordpat/setup.hpp"
#include "ordpat/structure.hpp"
#include "test_util.hpp"

using namespace ordpat;

// The parallel kernels must reproduce the serial reference results
// exactly, independent of the schedule.

TEST_CASE("subset sweeps match the serial reference") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    PatternSetup s = testutil::random_setup(7, 4, seed);

    CHECK(support_closed_set(s, Exec::Serial) ==
          support_closed_set(s, Exec::Parallel));

    SweepReport ms = is_multistructure(s, Exec::Serial);
    SweepReport mp = is_multistructure(s, Exec::Parallel);
    CHECK(ms.verdict == mp.verdict);
    CHECK(ms.failures == mp.failures);

    SweepReport ss = is_pattern_structure(s, Exec::Serial);
    SweepReport sp = is_pattern_structure(s, Exec::Parallel);
    CHECK(ss.verdict == sp.verdict);
    CHECK(ss.failures == sp.failures);

    CHECK(definable_extents(s, Exec::Serial).extents ==
          definable_extents(s, Exec::Parallel).extents);
  }
}

TEST_CASE("classification matches the serial reference") {
  for (std::uint32_t seed = 50; seed < 58; ++seed) {
    Poset p = testutil::random_poset(8, seed);
    ClassifyReport a = classify(p, Exec::Serial);
    ClassifyReport b = classify(p, Exec::Parallel);
    CHECK(a.is_multilattice == b.is_multilattice);
    CHECK(a.is_lattice == b.is_lattice);
  }
}

TEST_CASE("antichain enumeration matches the serial reference") {
  for (std::uint32_t seed = 70; seed < 76; ++seed) {
    Poset p = testutil::random_poset(9, seed, 0.25);
    CHECK(enumerate_antichains(p, 1000000, Exec::Serial) ==
          enumerate_antichains(p, 1000000, Exec::Parallel));
  }
}

TEST_CASE("iff reports match the serial reference") {
  PatternSetup seq = testutil::fixture_setup("SEQ");
  IffReport a = completion_iff_theorem(seq, true, Exec::Serial);
  IffReport b = completion_iff_theorem(seq, true, Exec::Parallel);
  CHECK(a.multistructure.verdict == b.multistructure.verdict);
  CHECK(a.completion_structure.verdict == b.completion_structure.verdict);
  CHECK(a.extents_law == b.extents_law);
}
