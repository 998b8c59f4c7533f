#include <set>

#include <gtest/gtest.h>

#include "nilrep/error.hpp"
#include "nilrep/finite_hom.hpp"
#include "nilrep/parse.hpp"
#include "oracles.hpp"

using namespace nilrep;

namespace {

oracle::Table table_of(const FiniteGroup &f) {
  oracle::Table t(f.order(), std::vector<std::size_t>(f.order()));
  for (Element a = 0; a < f.order(); ++a)
    for (Element b = 0; b < f.order(); ++b)
      t[a][b] = f.multiply(a, b);
  return t;
}

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::cyclic(1),     FiniteGroup::cyclic(5),    FiniteGroup::cyclic(12),
          FiniteGroup::dihedral(3),   FiniteGroup::dihedral(4),  FiniteGroup::dihedral(8),
          FiniteGroup::symmetric(3),  q8(),
          FiniteGroup::direct_product(q8(), FiniteGroup::cyclic(2)),
          FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6))};
}

ReductiveSpec target(const char *text) { return parse_reductive_spec(text); }

} // namespace

TEST(Q8, Structure) {
  const auto q = q8();
  EXPECT_EQ(q.order(), 8u);
  EXPECT_FALSE(q.is_abelian());
  const auto i = *q.find("i"), j = *q.find("j"), k = *q.find("k");
  EXPECT_EQ(q.multiply(i, j), k);
  EXPECT_EQ(q.multiply(j, i), *q.find("-k"));
  EXPECT_EQ(q.nilpotency_class(), 2u);

  std::vector<bool> all(8, true);
  const auto derived = q.commutator_with(all);
  std::set<std::string> members;
  for (Element e = 0; e < 8; ++e)
    if (derived[e])
      members.insert(q.label(e));
  EXPECT_EQ(members, (std::set<std::string>{"1", "-1"}));

  const auto z = q.center();
  EXPECT_EQ(std::count(z.begin(), z.end(), true), 2);
}

TEST(Q8, MatchesQuaternionArithmetic) {
  EXPECT_EQ(table_of(q8()), oracle::quaternion_table());
}

TEST(FiniteGroup, Constructors) {
  EXPECT_EQ(FiniteGroup::dihedral(4).order(), 8u);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24u);
  EXPECT_EQ(FiniteGroup::direct_product(q8(), FiniteGroup::cyclic(3)).order(), 24u);
  EXPECT_FALSE(FiniteGroup::symmetric(3).nilpotency_class().has_value());
  EXPECT_EQ(FiniteGroup::cyclic(7).nilpotency_class(), 1u);
  EXPECT_EQ(FiniteGroup::dihedral(8).nilpotency_class(), 3u);
  // Table with no identity.
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {1, 0}}), Error);
  // Identity and inverses present but not associative.
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 2, 0}}), Error);
}

TEST(EnumerateHoms, CyclicSourceCountsElements) {
  for (const auto &f : small_groups())
    EXPECT_EQ(enumerate_homs(GroupSpec::free_abelian(1), f).total, f.order());
}

TEST(EnumerateHoms, RankTwoCountsCommutingPairs) {
  for (const auto &f : small_groups()) {
    std::uint64_t centralizers = 0;
    for (Element g = 0; g < f.order(); ++g)
      centralizers += f.centralizer_size(g);
    const auto pairs = oracle::commuting_pairs(table_of(f));
    EXPECT_EQ(centralizers, pairs);
    EXPECT_EQ(enumerate_homs(GroupSpec::free_abelian(2), f).total, pairs);
  }
}

TEST(EnumerateHoms, QuaternionCounts) {
  const auto q = q8();
  const auto z2 = enumerate_homs(GroupSpec::free_abelian(2), q);
  EXPECT_EQ(z2.total, 40u);
  EXPECT_EQ(z2.surjective, 0u);
  EXPECT_FALSE(z2.witness.has_value());

  const auto h = enumerate_homs(GroupSpec::heisenberg(), q);
  EXPECT_EQ(h.total, 64u);
  EXPECT_EQ(h.surjective, 24u);
  EXPECT_EQ(static_cast<std::int64_t>(h.surjective),
            oracle::generating_pairs_inclusion_exclusion(table_of(q)));
}

TEST(EnumerateHoms, HeisenbergMatchesBruteForce) {
  // Every hom from H3 is determined by the images of x and y, which must
  // have a central commutator.
  for (const auto &f : small_groups()) {
    const auto z = f.center();
    std::uint64_t expected = 0;
    for (Element a = 0; a < f.order(); ++a)
      for (Element b = 0; b < f.order(); ++b)
        expected += z[f.commutator(a, b)];
    EXPECT_EQ(enumerate_homs(GroupSpec::heisenberg(), f).total, expected);
  }
}

TEST(EnumerateHoms, CyclicPresentation) {
  const auto g = parse_group_spec("<x | x^3>");
  EXPECT_EQ(enumerate_homs(g, FiniteGroup::cyclic(6)).total, 3u);
  EXPECT_EQ(enumerate_homs(g, q8()).total, 1u);
}

TEST(SurjectionWitness, HeisenbergIntoQ8) {
  const auto q = q8();
  const auto w = surjection_witness(GroupSpec::heisenberg(), q);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->size(), 3u);
  EXPECT_EQ(q.label((*w)[0]), "i");
  EXPECT_EQ(q.label((*w)[1]), "j");
  EXPECT_EQ(q.label((*w)[2]), "-1");
}

TEST(SurjectionWitness, VerifiesAgainstRelators) {
  const auto q = q8();
  for (const auto &g : {GroupSpec::heisenberg(), GroupSpec::free_nilpotent(2, 2),
                        GroupSpec::free_nilpotent(2, 3), GroupSpec::free_nilpotent(3, 2),
                        parse_group_spec("H3 x Z")}) {
    const auto w = surjection_witness(g, q);
    ASSERT_TRUE(w.has_value());
    const auto p = presentation_for_homs(g, q);
    EXPECT_TRUE(is_homomorphism(p, q, *w));
    const auto image = oracle::closure(table_of(q), *w);
    EXPECT_EQ(image.size(), q.order());
  }
}

TEST(SurjectionWitness, AbsentForAbelianSources) {
  for (unsigned k = 1; k <= 4; ++k)
    EXPECT_FALSE(surjection_witness(GroupSpec::free_abelian(k), q8()).has_value());
}

TEST(EnumerateHoms, Limits) {
  try {
    enumerate_homs(GroupSpec::free_abelian(7), FiniteGroup::cyclic(2));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  try {
    enumerate_homs(GroupSpec::free_abelian(5), FiniteGroup::symmetric(5));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  try {
    enumerate_homs(GroupSpec::free_nilpotent(2, 3), FiniteGroup::dihedral(16));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedGroup);
  }
}

TEST(Verdict, Examples) {
  const auto h = connectivity_verdict(GroupSpec::heisenberg(), target("SL2"));
  EXPECT_EQ(h.status, Connectivity::Disconnected);
  EXPECT_EQ(h.rule, VerdictRule::QuaternionQuotient);
  EXPECT_EQ(h.witness, (std::vector<std::string>{"i", "j", "-1"}));
  EXPECT_EQ(h.embedding_factor, "SL2");

  EXPECT_EQ(connectivity_verdict(GroupSpec::heisenberg(), target("T2")).status,
            Connectivity::Connected);
  EXPECT_EQ(connectivity_verdict(GroupSpec::free_nilpotent(2, 3), target("Sp4")).status,
            Connectivity::Disconnected);
  EXPECT_EQ(connectivity_verdict(GroupSpec::free_abelian(3), target("SL2")).status,
            Connectivity::Connected);
}

TEST(Verdict, AdjointTargetsFallThrough) {
  const auto v = connectivity_verdict(GroupSpec::heisenberg(), target("PGL2"));
  EXPECT_EQ(v.status, Connectivity::Disconnected);
  EXPECT_EQ(v.rule, VerdictRule::FreeNilpotentOrHeisenberg);
  EXPECT_TRUE(v.witness.empty());

  const auto u = connectivity_verdict(parse_group_spec("<x,y | [x,[x,y]], [y,[x,y]]>"),
                                      target("SO3"));
  EXPECT_EQ(u.status, Connectivity::Unknown);
}

TEST(Verdict, Consistency) {
  const std::vector<GroupSpec> groups{
      GroupSpec::heisenberg(),          GroupSpec::free_abelian(1),
      GroupSpec::free_abelian(2),       GroupSpec::free_abelian(3),
      GroupSpec::free_nilpotent(2, 2),  GroupSpec::free_nilpotent(3, 2),
      GroupSpec::free_nilpotent(2, 3),  GroupSpec::finite_abelian({2}),
      parse_group_spec("Z x Z/4"),      parse_group_spec("<x,y | [x,y]^2>")};
  const std::vector<const char *> targets{"SL2", "GL2", "PGL3", "Sp4", "SO5",
                                          "Spin5", "G2", "T1",  "T3",  "SL2 x T1"};
  for (const auto &g : groups)
    for (const auto *t : targets) {
      const auto spec = target(t);
      const auto v = connectivity_verdict(g, spec);
      EXPECT_FALSE(v.reason.empty());
      if (v.status == Connectivity::Connected) {
        EXPECT_TRUE(v.rule == VerdictRule::TorusTarget || v.rule == VerdictRule::AbelianSource)
            << render_group_spec(g) << " " << t;
        EXPECT_TRUE(abelianize(g).is_torsion_free());
      }
      if (v.status == Connectivity::Disconnected && v.rule == VerdictRule::QuaternionQuotient) {
        EXPECT_FALSE(v.witness.empty());
        EXPECT_TRUE(v.embedding_factor.has_value());
      }
      if (spec.is_torus() && abelianize(g).is_torsion_free())
        EXPECT_EQ(v.status, Connectivity::Connected);
      if (is_free_nilpotent_nonabelian_or_heisenberg(g) && !spec.is_torus())
        EXPECT_EQ(v.status, Connectivity::Disconnected);
    }
}

TEST(Verdict, TorsionInAbelianizationDisconnects) {
  const auto v = connectivity_verdict(GroupSpec::finite_abelian({2}), target("T1"));
  EXPECT_EQ(v.status, Connectivity::Disconnected);
  EXPECT_EQ(v.rule, VerdictRule::TorsionCharacters);
}

TEST(CentralBound, Values) {
  EXPECT_EQ(central_image_order_bound(1), 1);
  EXPECT_EQ(central_image_order_bound(2), 4);
  EXPECT_EQ(central_image_order_bound(3), 64);
  EXPECT_THROW(central_image_order_bound(0), Error);
  Integer previous = 0;
  for (unsigned m = 1; m <= 8; ++m) {
    const auto b = central_image_order_bound(m);
    EXPECT_EQ(b, oracle::diagonal_root_matrices(m));
    EXPECT_GE(b, previous);
    previous = b;
  }
}
