#pragma once

#include <span>
#include <string>
#include <vector>

#include "polycount/bigint.hpp"

namespace polycount {

// Embedded OEIS prefix pinned to one counting family. The terms are static
// fixtures so the check stays hermetic; n_start is the smallest n with a
// nonzero count for that family and m, i.e. 2m-2.
struct OeisFixture {
  std::string id;
  std::string family;
  int m = 2;
  int n_start = 2;
  std::vector<std::string> prefix;  // exact decimal terms
};

// The three embedded fixtures: A002057 (full, m=2, n from 2),
// A003517 (full, m=3, n from 4), A003518 (full, m=4, n from 6).
std::span<const OeisFixture> oeis_fixtures();

struct OeisResult {
  std::string id;
  bool pass = false;
  std::string detail;  // first mismatch, if any
};

// Recomputes each fixture's terms through both the convolution and the
// closed form and compares against the stored prefix.
std::vector<OeisResult> run_oeis_checks();

}  // namespace polycount
