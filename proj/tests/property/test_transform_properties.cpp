#include <doctest.h>

#include "duval/ruled_models.hpp"
#include "generators.hpp"

using namespace duval;
using namespace duval::testing;

namespace {

std::vector<std::int64_t> coeffs(const DivisorClass& c) { return {c.coeffs().begin(), c.coeffs().end()}; }

}  // namespace

TEST_CASE("elementary transformations are isometries and move e by one") {
  Rng rng(0x5eed0201);
  for (int t = 0; t < kInstances; ++t) {
    const int e = rng.uniform(0, 5);
    const bool on = e == 0 ? true : rng.coin();
    const ModelPtr f = make_surface(SurfaceKind::hirzebruch(e));
    const int xi = 2 * rng.uniform(2, 8);
    const BranchModel b{f, xi * negative_section_class(f) + 2 * rng.uniform(xi, 3 * xi) * fibre_class(f), {}};
    const int m = rng.uniform(0, xi / 2);
    const ElementaryResult r = elementary_transform(b, {CenterId{"p"}, on, m, false, std::nullopt});
    CHECK(r.step.is_isometry());
    CHECK(r.branch.ambient->kind().e() == e + (on ? 1 : -1));
    CHECK(intersect(r.branch.branch_class, fibre_class(r.branch.ambient)) == xi);
    const DivisorClass x = random_class(rng, r.step.source);
    CHECK(r.step.apply_inverse(r.step.apply(x)) == x);
    const DivisorClass y = random_class(rng, r.step.source);
    CHECK(intersect(r.step.apply(x), r.step.apply(y)) == intersect(x, y));
  }
}

TEST_CASE("contraction of C0 is an isometry") {
  Rng rng(0x5eed0202);
  for (int t = 0; t < kInstances; ++t) {
    const ModelPtr f1 = make_surface(SurfaceKind::hirzebruch(1));
    const int a = rng.uniform(0, 10), b = rng.uniform(a, 3 * a + 2);
    const ContractionResult r = contract_negative_section(BranchModel{f1, a * negative_section_class(f1) + b * fibre_class(f1), {}},
                                                          rng.coin());
    CHECK(r.step.is_isometry());
    const DivisorClass x = random_class(rng, f1);
    CHECK(r.step.apply_inverse(r.step.apply(x)) == x);
    // Degree of the image curve is B.(C0 + G).
    CHECK(r.branch.branch_class[0] == b);
  }
}

TEST_CASE("quadratic transformation is an involutive isometry") {
  Rng rng(0x5eed0203);
  for (int t = 0; t < kInstances; ++t) {
    const int count = rng.uniform(3, 7);
    const ModelPtr w = make_model(SurfaceKind::plane(), random_forest(rng, count));
    std::vector<int> idx(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) idx[static_cast<std::size_t>(i)] = i;
    rng.shuffle(idx);
    const std::array<CenterId, 3> triple{w->centers()[static_cast<std::size_t>(idx[0])].id,
                                         w->centers()[static_cast<std::size_t>(idx[1])].id,
                                         w->centers()[static_cast<std::size_t>(idx[2])].id};
    const TransformStep there = cremona_quadratic(w, triple);
    CHECK(there.is_isometry());
    std::array<CenterId, 3> hats;
    for (std::size_t i = 0; i < 3; ++i) hats[i] = CenterId{triple[i].value + "^"};
    const TransformStep back = cremona_quadratic(there.target, hats, triple);
    CHECK(back.is_isometry());
    const DivisorClass x = random_class(rng, w);
    CHECK(coeffs(back.apply(there.apply(x))) == coeffs(x));

    const PlaneCurveData c{rng.uniform(1, 30), {rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0, 10)}};
    CHECK(cremona_numbers(cremona_numbers(c)) == c);
    // Matches the lattice action on the three centers.
    DivisorClass curve = static_cast<std::int64_t>(c.degree) * line_class(w);
    for (std::size_t i = 0; i < 3; ++i) curve = curve - c.multiplicities[i] * exceptional_class(w, triple[i]);
    const DivisorClass image = there.apply(curve);
    const PlaneCurveData numbers = cremona_numbers(c);
    CHECK(image[0] == numbers.degree);
    for (std::size_t i = 0; i < 3; ++i) CHECK(-image.coefficient(hats[i]) == numbers.multiplicities[i]);
  }
}
