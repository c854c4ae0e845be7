#include "doctest.h"

#include <iostream>

#include "support/soundness.hpp"

TEST_CASE("randomized soundness sweep") {
  soundness::Stats st = soundness::run(300, 2024, 100);
  for (const auto& f : st.failures) MESSAGE(f);
  MESSAGE("free " << st.free << " notfree " << st.notfree << " unknown " << st.unknown << " certs " << st.certificates
                  << " witnesses " << st.witnesses);
  CHECK(st.ok());
  CHECK(st.cases == 300);
  CHECK(st.free > 0);
  CHECK(st.notfree > 0);
  CHECK(st.artifacts_checked > 0);
  CHECK(st.conjugations == 100);
}
