#include "gompf/surgery.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gompf/errors.hpp"
#include "gompf/generators.hpp"
#include "oracles.hpp"

namespace gompf {
namespace {

SurgeryPresentation pres(IntMatrix b) { return SurgeryPresentation(std::move(b)); }
MeridianClass cls(IntVector v) { return MeridianClass{std::move(v)}; }

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DomainError thrown";
  return ErrorKind::IndexError;
}

TEST(SurgeryPresentation, RejectsNonSymmetric) {
  EXPECT_EQ(error_kind([] { pres(IntMatrix{{1, 2}, {3, 1}}); }), ErrorKind::NotSymmetric);
  EXPECT_EQ(error_kind([] { pres(IntMatrix{{1, 2}}); }), ErrorKind::NotSymmetric);
  EXPECT_EQ(SurgeryPresentation::s3().size(), 0u);
}

TEST(HomologySummary, KnownValues) {
  const HomologySummary rp3 = homology_summary(pres(IntMatrix{{2}}));
  EXPECT_EQ(rp3.invariant_factors, (IntVector{2}));
  EXPECT_EQ(rp3.betti_1, 0u);
  EXPECT_EQ(rp3.dim_h1_mod2, 1u);
  EXPECT_EQ(rp3.torsion_order, 2);

  const HomologySummary s1s2 = homology_summary(pres(IntMatrix{{0}}));
  EXPECT_TRUE(s1s2.invariant_factors.empty());
  EXPECT_EQ(s1s2.betti_1, 1u);
  EXPECT_EQ(s1s2.dim_h1_mod2, 1u);
  EXPECT_EQ(s1s2.kernel_basis, (std::vector<IntVector>{{1}}));

  const HomologySummary h = homology_summary(pres(IntMatrix{{2, 1}, {1, 2}}));
  EXPECT_EQ(h.invariant_factors, (IntVector{3}));
  EXPECT_EQ(h.betti_1, 0u);
  EXPECT_EQ(h.dim_h1_mod2, 0u);

  const HomologySummary s3 = homology_summary(SurgeryPresentation::s3());
  EXPECT_EQ(s3.torsion_order, 1);
  EXPECT_EQ(s3.dim_h1_mod2, 0u);
}

TEST(HomologySummary, InvariantsOnRandomPresentations) {
  Rng rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    const IntMatrix b = rng.coin() ? random_symmetric(rng, n, 5) : random_singular_symmetric(rng, n, 3);
    const HomologySummary h = homology_summary(pres(b));
    Integer prod = 1;
    for (const auto& d : h.invariant_factors) prod *= d;
    ASSERT_EQ(prod, h.torsion_order);
    ASSERT_EQ(h.betti_1, n - oracle::minor_rank(b));
    ASSERT_EQ(h.dim_h1_mod2, n - oracle::span_rank_mod2(b));
    ASSERT_EQ(h.kernel_basis.size(), h.betti_1);
  }
}

TEST(MeridianPairing, KnownValues) {
  EXPECT_EQ(meridian_pairing(pres(IntMatrix{{2}}), cls({1}), cls({1})), make_rational(-1, 2));
  EXPECT_EQ(meridian_pairing(pres(IntMatrix{{2}}), cls({2}), cls({1})), -1);
  EXPECT_EQ(error_kind([] { meridian_pairing(pres(IntMatrix{{0}}), cls({1}), cls({1})); }),
            ErrorKind::NonTorsion);
  EXPECT_EQ(error_kind([] { meridian_pairing(pres(IntMatrix{{2}}), cls({1, 0}), cls({1})); }),
            ErrorKind::DimensionMismatch);
}

TEST(MeridianPairing, AgreesWithAdjugateOracle) {
  Rng rng(22);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntMatrix b = random_symmetric(rng, n, 5);
    if (oracle::cofactor_det(b) == 0) continue;
    const IntVector v = random_vector(rng, n, 5);
    const IntVector w = random_vector(rng, n, 5);
    ASSERT_EQ(meridian_pairing(pres(b), cls(v), cls(w)), oracle::pairing_nonsingular(b, v, w));
  }
}

TEST(MeridianPairing, BilinearAndSymmetric) {
  Rng rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const SurgeryPresentation p = pres(random_singular_symmetric(rng, n, 3));
    const IntMatrix& b = p.linking_matrix();
    const IntVector v = b * random_vector(rng, n, 3);
    const IntVector v2 = random_torsion_characteristic(rng, p, 3);
    const IntVector w = random_torsion_characteristic(rng, p, 3);
    IntVector sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = v[i] + v2[i];
    ASSERT_EQ(meridian_pairing(p, cls(v), cls(w)), meridian_pairing(p, cls(w), cls(v)));
    ASSERT_EQ(meridian_pairing(p, cls(sum), cls(w)),
              meridian_pairing(p, cls(v), cls(w)) + meridian_pairing(p, cls(v2), cls(w)));
  }
}

TEST(LinkingForm, KnownValues) {
  EXPECT_EQ(linking_form(pres(IntMatrix{{4}}), cls({1})), ModClass::mod_one(make_rational(3, 4)));
  EXPECT_EQ(linking_form(pres(IntMatrix{{2}}), cls({2})), ModClass::mod_one(0));
  EXPECT_EQ(linking_form(pres(IntMatrix{{3}}), cls({2})).value(), make_rational(2, 3));
  EXPECT_EQ(linking_form(pres(IntMatrix{{3}}), cls({2})).to_string(), "2/3 (mod 1)");
}

TEST(LinkingForm, RepresentativeIndependenceAndEvenness) {
  Rng rng(24);
  for (int iter = 0; iter < 300; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
    const SurgeryPresentation p =
        pres(rng.coin() ? random_symmetric(rng, n, 5) : random_singular_symmetric(rng, n, 3));
    const IntVector v = random_torsion_characteristic(rng, p, 3);
    IntVector moved = p.linking_matrix() * random_vector(rng, n, 5);
    IntVector neg(n);
    for (std::size_t i = 0; i < n; ++i) {
      moved[i] += v[i];
      neg[i] = -v[i];
    }
    ASSERT_EQ(linking_form(p, cls(v)), linking_form(p, cls(moved)));
    ASSERT_EQ(linking_form(p, cls(v)), linking_form(p, cls(neg)));
    ASSERT_EQ(linking_form(p, cls(v)).value(),
              reduce_mod(meridian_pairing(p, cls(v), cls(v)), 1));
    ASSERT_EQ(linking_form(p, cls(IntVector(n))).value(), 0);
  }
}

TEST(EnumerateTorsion, KnownValues) {
  const auto three = enumerate_torsion(pres(IntMatrix{{3}}), 10);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].first, cls({0}));
  EXPECT_EQ(three[1].first, cls({1}));
  EXPECT_EQ(three[2].first, cls({2}));
  EXPECT_EQ(three[0].second.value(), 0);
  EXPECT_EQ(three[1].second.value(), make_rational(2, 3));
  EXPECT_EQ(three[2].second.value(), make_rational(2, 3));

  const auto two = enumerate_torsion(pres(IntMatrix{{2}}), 10);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].second.value(), 0);
  EXPECT_EQ(two[1].second.value(), make_rational(1, 2));

  const auto s3 = enumerate_torsion(SurgeryPresentation::s3(), 10);
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_TRUE(s3[0].first.v.empty());
  EXPECT_EQ(s3[0].second.value(), 0);
}

TEST(EnumerateTorsion, CapExceeded) {
  try {
    enumerate_torsion(pres(IntMatrix{{101}}), 100);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    EXPECT_NE(std::string(e.what()).find("101"), std::string::npos);
  }
  EXPECT_EQ(enumerate_torsion(pres(IntMatrix{{100}}), 100).size(), 100u);
}

TEST(EnumerateTorsion, DistinctClassesCountDeterminant) {
  Rng rng(25);
  for (int iter = 0; iter < 100; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const IntMatrix b = random_symmetric(rng, n, 4);
    const Integer det = oracle::cofactor_det(b);
    if (det == 0) continue;
    const auto reps = enumerate_torsion(pres(b), 10000);
    ASSERT_EQ(Integer(static_cast<unsigned long>(reps.size())), abs(det));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        IntVector diff(n);
        for (std::size_t k = 0; k < n; ++k) diff[k] = reps[i].first.v[k] - reps[j].first.v[k];
        ASSERT_FALSE(oracle::in_lattice_nonsingular(b, diff));
      }
      ASSERT_EQ(reps[i].second.value(),
                reduce_mod(oracle::pairing_nonsingular(b, reps[i].first.v, reps[i].first.v), 1));
    }
  }
}

TEST(EnumerateTorsion, SingularPresentationListsOnlyTorsion) {
  // Z ⊕ Z/3: the kernel direction is free and must not be enumerated.
  const SurgeryPresentation p = pres(IntMatrix{{3, 0}, {0, 0}});
  const auto reps = enumerate_torsion(p, 10);
  ASSERT_EQ(reps.size(), 3u);
  for (const auto& [v, ell] : reps) EXPECT_TRUE(is_torsion_class(p, v));
}

TEST(ClassReduction, CanonicalRepresentatives) {
  Rng rng(26);
  for (int iter = 0; iter < 100; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const SurgeryPresentation p = pres(random_symmetric(rng, n, 4));
    const IntVector v = random_vector(rng, n, 6);
    IntVector moved = p.linking_matrix() * random_vector(rng, n, 4);
    for (std::size_t i = 0; i < n; ++i) moved[i] += v[i];
    const MeridianClass r = reduce_class(p, cls(v));
    ASSERT_EQ(r, reduce_class(p, cls(moved)));
    IntVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = r.v[i] - v[i];
    ASSERT_TRUE(is_null_class(p, cls(diff)));
  }
  EXPECT_EQ(reduce_class(pres(IntMatrix{{2}}), cls({5})), cls({1}));
}

TEST(ModClass, CanonicalRange) {
  EXPECT_EQ(ModClass::mod_four(-7).value(), 1);
  EXPECT_EQ(ModClass::mod_four(-5).value(), 3);
  EXPECT_EQ(ModClass::mod_one(make_rational(-4, 3)).value(), make_rational(2, 3));
  EXPECT_EQ(ModClass::mod_four(8).value(), 0);
  EXPECT_EQ(ModClass::mod_four(-7).to_string(), "1 (mod 4)");
}

}  // namespace
}  // namespace gompf
