#include "polycount/oeis.hpp"

#include <array>

#include "polycount/full_count.hpp"

namespace polycount {

namespace {

// n_start is the smallest n with a nonzero count, 2m-2.
const std::array<OeisFixture, 3> kFixtures{{
    {"A002057", "full", 2, 2, {"1", "4", "14", "48", "165", "572", "2002", "7072", "25194"}},
    {"A003517", "full", 3, 4, {"1", "6", "27", "110", "429", "1638", "6188", "23256", "87210"}},
    {"A003518", "full", 4, 6, {"1", "8", "44", "208", "910", "3808", "15504", "62016", "245157"}},
}};

}  // namespace

std::span<const OeisFixture> oeis_fixtures() { return kFixtures; }

std::vector<OeisResult> run_oeis_checks() {
  std::vector<OeisResult> results;
  for (const OeisFixture& fixture : kFixtures) {
    OeisResult result;
    result.id = fixture.id;
    result.pass = true;
    const int n_last = fixture.n_start + static_cast<int>(fixture.prefix.size()) - 1;
    const CatalanTable cat = catalan_table(static_cast<std::size_t>(n_last) + 1);
    const std::vector<BigInt> row = full_count_convolution_row(fixture.m, n_last, cat);
    const FullCoefficients coeffs = gen_vector_full(fixture.m);
    for (std::size_t i = 0; i < fixture.prefix.size(); ++i) {
      const int n = fixture.n_start + static_cast<int>(i);
      const BigInt expected = parse_decimal(fixture.prefix[i]);
      const BigInt by_convolution = row[static_cast<std::size_t>(n)];
      const BigInt by_closed_form = full_count_closed(n, fixture.m, coeffs, cat);
      if (by_convolution != expected || by_closed_form != expected) {
        result.pass = false;
        result.detail = "n=" + std::to_string(n) + ": expected " + fixture.prefix[i] +
                        ", convolution " + to_decimal(by_convolution) + ", closed form " +
                        to_decimal(by_closed_form);
        break;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace polycount
