/*
* Copyright 2026 The nearfield authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/


#include "nearfield/mapnr.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace nearfield;
using namespace nearfield::mapnr;

namespace {

// End(Z_n): x -> k x.
std::vector<GMap> CyclicEndomorphisms(unsigned n)
{
	std::vector<GMap> out;
	for (unsigned k = 0; k < n; ++k) {
		GMap f{std::vector<unsigned>(n)};
		for (unsigned x = 0; x < n; ++x)
			f.images[x] = k * x % n;
		out.push_back(f);
	}
	std::sort(out.begin(), out.end());
	return out;
}

// End(V4): 2x2 matrices over F_2 acting on two-bit vectors.
std::vector<GMap> KleinEndomorphisms()
{
	std::vector<GMap> out;
	for (unsigned m = 0; m < 16; ++m) {
		unsigned c0 = m & 3, c1 = m >> 2; // images of the basis vectors 1 and 2
		GMap f{std::vector<unsigned>(4)};
		for (unsigned x = 0; x < 4; ++x)
			f.images[x] = ((x & 1) ? c0 : 0) ^ ((x & 2) ? c1 : 0);
		out.push_back(f);
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

TEST(Group, BuiltIns)
{
	auto z3 = Group::Cyclic(3);
	EXPECT_EQ(z3.order(), 3u);
	EXPECT_EQ(z3.add(2, 2), 1u);
	EXPECT_EQ(z3.neg(1), 2u);
	EXPECT_TRUE(z3.abelian());
	auto v4 = *Group::Named("V4");
	EXPECT_EQ(v4.add(3, 1), 2u);
	EXPECT_EQ(v4.neg(3), 3u);
	EXPECT_EQ(Group::Named("Z5")->order(), 5u);
	EXPECT_FALSE(Group::Named("Z6"));
	EXPECT_FALSE(Group::Named("S3"));
}

TEST(Group, RejectsInvalidTables)
{
	auto kind = [](std::vector<std::vector<unsigned>> t) {
		try {
			Group::FromTable(std::move(t));
		} catch (const Error& e) {
			return e.kind();
		}
		return ErrorKind::InvalidInput;
	};
	EXPECT_EQ(kind({}), ErrorKind::InvalidGroup);
	EXPECT_EQ(kind({{0, 1}, {1}}), ErrorKind::InvalidGroup);
	EXPECT_EQ(kind({{0, 2}, {1, 0}}), ErrorKind::InvalidGroup);
	EXPECT_EQ(kind({{1, 0}, {0, 0}}), ErrorKind::InvalidGroup);     // no identity
	EXPECT_EQ(kind({{0, 1}, {1, 1}}), ErrorKind::InvalidGroup);     // 1 has no inverse
	EXPECT_EQ(kind({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), ErrorKind::InvalidGroup);
}

TEST(Maps, CountsAndOrder)
{
	EXPECT_EQ(AllMaps(Group::Cyclic(2)).size(), 4u);
	EXPECT_EQ(AllMaps(Group::Cyclic(3)).size(), 27u);
	EXPECT_EQ(AllMaps(Group::Cyclic(4)).size(), 256u);
	EXPECT_EQ(AllMaps(Group::KleinFour()).size(), 256u);
	EXPECT_EQ(AllMaps(Group::Cyclic(5)).size(), 3125u);
	auto maps = AllMaps(Group::Cyclic(3));
	EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
	EXPECT_EQ(maps.front(), (GMap{{0, 0, 0}}));
	EXPECT_EQ(maps[1], (GMap{{0, 0, 1}}));
	EXPECT_EQ(MapCount(Group::Cyclic(7)), kMaxMaps + 1);
	EXPECT_THROW(AllMaps(Group::Cyclic(7)), Error);
}

TEST(Maps, Operations)
{
	auto G = Group::Cyclic(3);
	GMap f{{1, 2, 2}}, id = Identity(G), zeta = ZeroMap(G);
	EXPECT_EQ(MapAdd(G, f, zeta), f);
	EXPECT_EQ(MapCompose(G, f, id), f);
	EXPECT_EQ(MapCompose(G, id, f), f);
	EXPECT_EQ(MapAdd(G, f, MapNeg(G, f)), zeta);
	// maps act on the right: (x)(f o g) = ((x)f)g
	GMap g{{0, 0, 1}};
	EXPECT_EQ(MapCompose(G, f, g), (GMap{{0, 1, 1}}));
	// h_a o h_c = h_c
	for (unsigned a = 0; a < 3; ++a)
		for (unsigned c = 0; c < 3; ++c)
			EXPECT_EQ(MapCompose(G, Constant(G, a), Constant(G, c)), Constant(G, c));
}

TEST(NearRing, SmallGroups)
{
	for (const auto& name : {"Z2", "Z3", "Z4", "V4"}) {
		auto G = *Group::Named(name);
		auto r = VerifyLeftNearRing(G);
		EXPECT_TRUE(r.exhaustive) << name;
		EXPECT_TRUE(r.isLeftNearRing()) << name;
		EXPECT_TRUE(r.additiveGroup);
		EXPECT_TRUE(r.composeAssociative);
		EXPECT_FALSE(r.rightDistributive) << name;
		ASSERT_TRUE(r.constantCounterexample) << name;
		ASSERT_TRUE(r.constantLabels);
		auto [a, b, c] = *r.constantLabels;
		EXPECT_NE(c, G.zero());
		const auto& t = *r.constantCounterexample;
		EXPECT_EQ(t.f, Constant(G, a));
		EXPECT_EQ(t.g, Constant(G, b));
		EXPECT_EQ(t.h, Constant(G, c));
		// (h_a + h_b) o h_c = h_c, while h_a o h_c + h_b o h_c = h_c + h_c
		EXPECT_EQ(MapCompose(G, MapAdd(G, t.f, t.g), t.h), Constant(G, c));
		EXPECT_EQ(MapAdd(G, MapCompose(G, t.f, t.h), MapCompose(G, t.g, t.h)), Constant(G, G.add(c, c)));
		EXPECT_NE(G.add(c, c), c);
	}
	EXPECT_EQ(VerifyLeftNearRing(Group::Cyclic(4)).mapCount, 256u);
}

TEST(NearRing, TrivialGroupIsARing)
{
	auto r = VerifyLeftNearRing(Group::Cyclic(1));
	EXPECT_TRUE(r.isLeftNearRing());
	EXPECT_TRUE(r.rightDistributive);
	EXPECT_FALSE(r.constantCounterexample);
}

TEST(NearRing, SampledOrderFive)
{
	NearRingCheck check;
	check.count = 20000;
	check.seed = 5;
	auto r = VerifyLeftNearRing(Group::Cyclic(5), check);
	EXPECT_FALSE(r.exhaustive);
	EXPECT_EQ(r.triplesChecked, 20000u);
	EXPECT_TRUE(r.isLeftNearRing());
	EXPECT_TRUE(r.constantCounterexample);
}

TEST(Distributive, EqualsEndomorphisms)
{
	for (unsigned n : {1u, 2u, 3u, 4u}) {
		auto G = Group::Cyclic(n);
		auto d = DistributiveMaps(G);
		EXPECT_EQ(d, CyclicEndomorphisms(n)) << n;
		EXPECT_EQ(d, Endomorphisms(G));
		EXPECT_TRUE(CheckSubNearRing(G, d).ok());
	}
	auto V = Group::KleinFour();
	auto d = DistributiveMaps(V);
	EXPECT_EQ(d.size(), 16u);
	EXPECT_EQ(d, KleinEndomorphisms());
	EXPECT_EQ(d, Endomorphisms(V));
	EXPECT_TRUE(CheckSubNearRing(V, d).ok());
	EXPECT_EQ(DistributiveMaps(Group::Cyclic(2)).size(), 2u);
	EXPECT_EQ(DistributiveMaps(Group::Cyclic(3)).size(), 3u);
	EXPECT_EQ(DistributiveMaps(Group::Cyclic(4)).size(), 4u);
}

TEST(Distributive, BruteForceOverAllMaps)
{
	// h is distributive iff (f + g) o h = f o h + g o h for every f, g.
	auto G = Group::Cyclic(3);
	auto maps = AllMaps(G);
	std::vector<GMap> slow;
	for (const auto& h : maps) {
		bool ok = true;
		for (const auto& f : maps)
			for (const auto& g : maps)
				ok = ok && MapCompose(G, MapAdd(G, f, g), h) == MapAdd(G, MapCompose(G, f, h), MapCompose(G, g, h));
		if (ok)
			slow.push_back(h);
	}
	EXPECT_EQ(DistributiveMaps(G), slow);
}

TEST(Closure, DetectsNonClosedSets)
{
	auto G = Group::Cyclic(3);
	std::vector<GMap> s{ZeroMap(G), Constant(G, 1)};
	std::sort(s.begin(), s.end());
	auto r = CheckSubNearRing(G, s);
	EXPECT_TRUE(r.containsZero);
	EXPECT_FALSE(r.closedAdd);
	EXPECT_TRUE(r.closedCompose);
	EXPECT_FALSE(r.ok());
}
