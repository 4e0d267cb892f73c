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

#pragma once

#include "error.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// The mapping near-ring M(G) of all self-maps of a finite group G.
//
// Maps act on the right: (x)f is the image of x under f, and composition is
// (x)(f o g) = ((x)f)g, i.e. f first, then g. With this convention M(G) is a
// left near-ring: f o (g + h) = f o g + f o h always holds, while the right
// law fails as soon as |G| > 1.

namespace nearfield::mapnr {

/// Finite group given by its Cayley table, elements 0..order-1.
class Group
{
public:
	static Group FromTable(std::vector<std::vector<unsigned>> table, std::string name = "custom")
	{
		const std::size_t n = table.size();
		if (n == 0)
			throw Error(ErrorKind::InvalidGroup, "group table is empty");
		for (const auto& row : table) {
			if (row.size() != n)
				throw Error(ErrorKind::InvalidGroup, "group table is not square");
			for (unsigned v : row)
				if (v >= n)
					throw Error(ErrorKind::InvalidGroup, "group table entry out of range");
		}
		Group g;
		g._name = std::move(name);
		g._order = unsigned(n);
		g._add = std::move(table);

		std::optional<unsigned> zero;
		for (unsigned e = 0; e < n && !zero; ++e) {
			bool id = true;
			for (unsigned x = 0; x < n && id; ++x)
				id = g._add[e][x] == x && g._add[x][e] == x;
			if (id)
				zero = e;
		}
		if (!zero)
			throw Error(ErrorKind::InvalidGroup, "group table has no identity");
		g._zero = *zero;

		for (unsigned a = 0; a < n; ++a)
			for (unsigned b = 0; b < n; ++b)
				for (unsigned c = 0; c < n; ++c)
					if (g._add[g._add[a][b]][c] != g._add[a][g._add[b][c]])
						throw Error(ErrorKind::InvalidGroup, "group operation is not associative");

		g._neg.assign(n, 0);
		for (unsigned a = 0; a < n; ++a) {
			auto it = std::find(g._add[a].begin(), g._add[a].end(), g._zero);
			unsigned b = unsigned(it - g._add[a].begin());
			if (it == g._add[a].end() || g._add[b][a] != g._zero)
				throw Error(ErrorKind::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
			g._neg[a] = b;
		}

		g._abelian = true;
		for (unsigned a = 0; a < n; ++a)
			for (unsigned b = 0; b < n; ++b)
				g._abelian = g._abelian && g._add[a][b] == g._add[b][a];
		return g;
	}

	static Group Cyclic(unsigned n)
	{
		std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
		for (unsigned a = 0; a < n; ++a)
			for (unsigned b = 0; b < n; ++b)
				t[a][b] = (a + b) % n;
		return FromTable(std::move(t), "Z" + std::to_string(n));
	}

	/// Z_2 x Z_2 with elements encoded as two bits.
	static Group KleinFour()
	{
		std::vector<std::vector<unsigned>> t(4, std::vector<unsigned>(4));
		for (unsigned a = 0; a < 4; ++a)
			for (unsigned b = 0; b < 4; ++b)
				t[a][b] = a ^ b;
		return FromTable(std::move(t), "V4");
	}

	/// Built-ins: Z1..Z5 and V4.
	static std::optional<Group> Named(const std::string& name)
	{
		if (name == "V4")
			return KleinFour();
		if (name.size() == 2 && name[0] == 'Z' && name[1] >= '1' && name[1] <= '5')
			return Cyclic(unsigned(name[1] - '0'));
		return std::nullopt;
	}

	const std::string& name() const { return _name; }
	unsigned order() const { return _order; }
	unsigned zero() const { return _zero; }
	bool abelian() const { return _abelian; }
	unsigned add(unsigned a, unsigned b) const { return _add[a][b]; }
	unsigned neg(unsigned a) const { return _neg[a]; }
	const std::vector<std::vector<unsigned>>& table() const { return _add; }

private:
	Group() = default;

	std::string _name;
	unsigned _order = 0;
	unsigned _zero = 0;
	bool _abelian = false;
	std::vector<std::vector<unsigned>> _add;
	std::vector<unsigned> _neg;
};

/// A map G -> G by its image list: images[x] = (x)f.
struct GMap
{
	std::vector<unsigned> images;

	auto operator<=>(const GMap&) const = default;
};

inline constexpr std::uint64_t kMaxMaps = 100000;

inline std::uint64_t MapCount(const Group& G)
{
	std::uint64_t c = 1;
	for (unsigned i = 0; i < G.order(); ++i) {
		c *= G.order();
		if (c > kMaxMaps)
			return kMaxMaps + 1;
	}
	return c;
}

/// Every map G -> G, in lexicographic order of image lists.
inline std::vector<GMap> AllMaps(const Group& G)
{
	const std::uint64_t count = MapCount(G);
	if (count > kMaxMaps)
		throw Error(ErrorKind::TooLarge, "|G|^|G| exceeds " + std::to_string(kMaxMaps) + " maps");
	std::vector<GMap> maps;
	maps.reserve(count);
	GMap f{std::vector<unsigned>(G.order(), 0)};
	while (true) {
		maps.push_back(f);
		int i = int(G.order()) - 1;
		while (i >= 0 && ++f.images[i] == G.order())
			f.images[i--] = 0;
		if (i < 0)
			break;
	}
	return maps;
}

inline GMap Constant(const Group& G, unsigned a) { return {std::vector<unsigned>(G.order(), a)}; }

inline GMap Identity(const Group& G)
{
	GMap f{std::vector<unsigned>(G.order())};
	for (unsigned x = 0; x < G.order(); ++x)
		f.images[x] = x;
	return f;
}

/// The constant-zero map.
inline GMap ZeroMap(const Group& G) { return Constant(G, G.zero()); }

/// (x)(f + g) = (x)f + (x)g
inline GMap MapAdd(const Group& G, const GMap& f, const GMap& g)
{
	GMap r{std::vector<unsigned>(G.order())};
	for (unsigned x = 0; x < G.order(); ++x)
		r.images[x] = G.add(f.images[x], g.images[x]);
	return r;
}

inline GMap MapNeg(const Group& G, const GMap& f)
{
	GMap r{std::vector<unsigned>(G.order())};
	for (unsigned x = 0; x < G.order(); ++x)
		r.images[x] = G.neg(f.images[x]);
	return r;
}

/// (x)(f o g) = ((x)f)g
inline GMap MapCompose(const Group& G, const GMap& f, const GMap& g)
{
	GMap r{std::vector<unsigned>(G.order())};
	for (unsigned x = 0; x < G.order(); ++x)
		r.images[x] = g.images[f.images[x]];
	return r;
}

inline bool IsEndomorphism(const Group& G, const GMap& h)
{
	for (unsigned y = 0; y < G.order(); ++y)
		for (unsigned z = 0; z < G.order(); ++z)
			if (h.images[G.add(y, z)] != G.add(h.images[y], h.images[z]))
				return false;
	return true;
}

/// (f + g) o h == f o h + g o h
inline bool RightDistributes(const Group& G, const GMap& f, const GMap& g, const GMap& h)
{
	for (unsigned x = 0; x < G.order(); ++x) {
		unsigned lhs = h.images[G.add(f.images[x], g.images[x])];
		unsigned rhs = G.add(h.images[f.images[x]], h.images[g.images[x]]);
		if (lhs != rhs)
			return false;
	}
	return true;
}

struct MapTriple
{
	GMap f, g, h;
};

struct NearRingReport
{
	std::uint64_t mapCount = 0;
	bool exhaustive = false;
	std::uint64_t triplesChecked = 0;
	bool additiveGroup = false;
	bool additiveAbelian = false;
	bool composeAssociative = false;
	bool leftDistributive = false;
	bool rightDistributive = false;
	/// (h_a + h_b) o h_c vs h_a o h_c + h_b o h_c with constant maps.
	std::optional<MapTriple> constantCounterexample;
	std::optional<std::array<unsigned, 3>> constantLabels;

	bool isLeftNearRing() const { return additiveGroup && composeAssociative && leftDistributive; }
};

/// Sampling parameters for groups with more than kExhaustiveMaps maps.
struct NearRingCheck
{
	std::uint64_t seed = 1;
	std::uint64_t count = 1000000;

	static constexpr std::uint64_t kExhaustiveMaps = 256;
};

inline NearRingReport VerifyLeftNearRing(const Group& G, const NearRingCheck& check = {})
{
	NearRingReport r;
	const auto maps = AllMaps(G);
	const std::size_t M = maps.size();
	r.mapCount = M;
	r.exhaustive = M <= NearRingCheck::kExhaustiveMaps;

	// map codes: position in `maps`, i.e. base-|G| digits, images[0] most significant
	auto code = [&](const GMap& f) {
		std::size_t c = 0;
		for (unsigned v : f.images)
			c = c * G.order() + v;
		return c;
	};

	const GMap zeta = ZeroMap(G);
	bool group = true, abelian = true;
	for (const auto& f : maps) {
		group = group && MapAdd(G, f, zeta) == f && MapAdd(G, zeta, f) == f
			&& MapAdd(G, f, MapNeg(G, f)) == zeta && MapAdd(G, MapNeg(G, f), f) == zeta;
	}

	bool addAssoc = true, composeAssoc = true, left = true, right = true;
	auto checkTriple = [&](const GMap& f, const GMap& g, const GMap& h) {
		++r.triplesChecked;
		if (MapAdd(G, MapAdd(G, f, g), h) != MapAdd(G, f, MapAdd(G, g, h)))
			addAssoc = false;
		if (MapCompose(G, MapCompose(G, f, g), h) != MapCompose(G, f, MapCompose(G, g, h)))
			composeAssoc = false;
		if (MapCompose(G, f, MapAdd(G, g, h)) != MapAdd(G, MapCompose(G, f, g), MapCompose(G, f, h)))
			left = false;
		if (!RightDistributes(G, f, g, h))
			right = false;
	};

	if (r.exhaustive) {
		// precomputed operation tables over map codes
		std::vector<std::uint32_t> sum(M * M), comp(M * M);
		for (std::size_t i = 0; i < M; ++i)
			for (std::size_t j = 0; j < M; ++j) {
				sum[i * M + j] = std::uint32_t(code(MapAdd(G, maps[i], maps[j])));
				comp[i * M + j] = std::uint32_t(code(MapCompose(G, maps[i], maps[j])));
			}
		for (std::size_t i = 0; i < M; ++i)
			for (std::size_t j = 0; j < M; ++j) {
				abelian = abelian && sum[i * M + j] == sum[j * M + i];
				for (std::size_t k = 0; k < M; ++k) {
					++r.triplesChecked;
					std::size_t ij = sum[i * M + j], jk = sum[j * M + k];
					addAssoc = addAssoc && sum[ij * M + k] == sum[i * M + jk];
					std::size_t cij = comp[i * M + j], cjk = comp[j * M + k];
					composeAssoc = composeAssoc && comp[cij * M + k] == comp[i * M + cjk];
					left = left && comp[i * M + jk] == sum[cij * M + comp[i * M + k]];
					// (f + g) o h = f o h + g o h with (i, j, k) = (f, g, h)
					right = right && comp[ij * M + k] == sum[comp[i * M + k] * M + comp[j * M + k]];
				}
			}
	} else {
		SampleStream rng(check.seed);
		for (std::uint64_t t = 0; t < check.count; ++t) {
			const auto& f = maps[rng.below(std::uint32_t(M))];
			const auto& g = maps[rng.below(std::uint32_t(M))];
			const auto& h = maps[rng.below(std::uint32_t(M))];
			checkTriple(f, g, h);
			abelian = abelian && MapAdd(G, f, g) == MapAdd(G, g, f);
		}
	}

	r.additiveGroup = group && addAssoc;
	r.additiveAbelian = abelian;
	r.composeAssociative = composeAssoc;
	r.leftDistributive = left;

	// constant maps: (h_a + h_b) o h_c = h_c, h_a o h_c + h_b o h_c = h_c + h_c
	for (unsigned a = 0; a < G.order() && !r.constantCounterexample; ++a)
		for (unsigned b = 0; b < G.order() && !r.constantCounterexample; ++b)
			for (unsigned c = 0; c < G.order() && !r.constantCounterexample; ++c) {
				GMap ha = Constant(G, a), hb = Constant(G, b), hc = Constant(G, c);
				if (!RightDistributes(G, ha, hb, hc)) {
					r.constantCounterexample = MapTriple{ha, hb, hc};
					r.constantLabels = std::array<unsigned, 3>{a, b, c};
				}
			}
	r.rightDistributive = right && !r.constantCounterexample;
	return r;
}

/// D(M(G)) = { h : (f + g) o h = f o h + g o h for all f, g }, in map order.
///
/// Constant pairs (h_a, h_b) pre-filter the candidates: they reject exactly
/// the h with (a + b)h != (a)h + (b)h. Survivors get the full (f, g) scan.
inline std::vector<GMap> DistributiveMaps(const Group& G)
{
	const auto maps = AllMaps(G);
	std::vector<GMap> out;
	for (const auto& h : maps) {
		bool ok = true;
		for (unsigned a = 0; a < G.order() && ok; ++a)
			for (unsigned b = 0; b < G.order() && ok; ++b)
				ok = RightDistributes(G, Constant(G, a), Constant(G, b), h);
		for (std::size_t i = 0; i < maps.size() && ok; ++i)
			for (std::size_t j = 0; j < maps.size() && ok; ++j)
				ok = RightDistributes(G, maps[i], maps[j], h);
		if (ok)
			out.push_back(h);
	}
	return out;
}

/// End(G) from the homomorphism law on the Cayley table, in map order.
inline std::vector<GMap> Endomorphisms(const Group& G)
{
	std::vector<GMap> out;
	for (auto& h : AllMaps(G))
		if (IsEndomorphism(G, h))
			out.push_back(std::move(h));
	return out;
}

struct ClosureReport
{
	bool containsZero = false;
	bool closedAdd = false;
	bool closedCompose = false;

	bool ok() const { return containsZero && closedAdd && closedCompose; }
};

/// Sub-near-ring check for a sorted set of maps.
inline ClosureReport CheckSubNearRing(const Group& G, const std::vector<GMap>& set)
{
	auto member = [&](const GMap& f) { return std::binary_search(set.begin(), set.end(), f); };
	ClosureReport r;
	r.containsZero = member(ZeroMap(G));
	r.closedAdd = r.closedCompose = true;
	for (const auto& f : set)
		for (const auto& g : set) {
			r.closedAdd = r.closedAdd && member(MapAdd(G, f, g));
			r.closedCompose = r.closedCompose && member(MapCompose(G, f, g));
		}
	return r;
}

} // namespace nearfield::mapnr
