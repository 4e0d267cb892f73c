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


#include "nearfield/dickson.hpp"
#include "nearfield/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace nearfield;
using gf::Elem;
using gf::Field;

namespace {

// Independent model of the Dickson product: discrete logs from repeated
// polynomial products, coset labels from k -> [k]_q mod n, and q^k-th powers
// by square-and-multiply on polynomials.
class OracleProduct
{
public:
	explicit OracleProduct(const Nearfield& nf) : _nf(nf), _log(nf.size(), 0)
	{
		const Field& F = nf.field();
		Elem x = Field::One();
		for (std::uint32_t e = 0; e < F.order(); ++e) {
			_log[x.index] = e;
			x = F.mulPoly(x, F.generator());
		}
		for (unsigned k = 0; k < nf.n(); ++k)
			_labelOf[numth::KBracket(nf.q(), k) % nf.n()] = k;
	}

	unsigned coset(Elem a) const { return _labelOf.at(_log[a.index] % _nf.n()); }

	Elem power(Elem b, std::uint64_t e) const
	{
		const Field& F = _nf.field();
		Elem r = Field::One(), base = b;
		for (; e; e >>= 1) {
			if (e & 1)
				r = F.mulPoly(r, base);
			base = F.mulPoly(base, base);
		}
		return r;
	}

	Elem circ(Elem a, Elem b) const
	{
		if (a.index == 0)
			return Field::Zero();
		return _nf.field().mulPoly(a, power(b, numth::PowU64(_nf.q(), coset(a))));
	}

private:
	const Nearfield& _nf;
	std::vector<std::uint32_t> _log;
	std::map<std::uint64_t, unsigned> _labelOf;
};

Nearfield DN54()
{
	Nearfield::Options opt;
	opt.modulus = gf::Poly(5, {2, 0, 0, 0, 1});
	opt.generator = Elem{7};
	return Nearfield::Build(5, 4, opt);
}

Elem E(const Nearfield& nf, std::vector<std::uint32_t> c) { return nf.field().fromCoeffs(c); }

std::vector<Elem> SlowDistributive(const Nearfield& nf, const OracleProduct& o)
{
	const Field& F = nf.field();
	std::vector<Elem> out;
	for (std::uint32_t l = 0; l < nf.size(); ++l) {
		bool ok = true;
		for (std::uint32_t y = 0; y < nf.size() && ok; ++y)
			for (std::uint32_t z = 0; z < nf.size() && ok; ++z)
				ok = o.circ(F.addDigitwise({y}, {z}), {l}) == F.addDigitwise(o.circ({y}, {l}), o.circ({z}, {l}));
		if (ok)
			out.push_back({l});
	}
	return out;
}

} // namespace

TEST(Nearfield, RejectsInvalidPairs)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{6, 2}, {3, 4}, {4, 2}}) {
		try {
			Nearfield::Build(q, n);
			FAIL() << q << "," << n;
		} catch (const Error& e) {
			EXPECT_EQ(e.kind(), ErrorKind::NotADicksonPair);
		}
	}
}

TEST(Nearfield, CosetsPartitionEvenly)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 4}, {4, 3}, {7, 3}, {5, 1}}) {
		auto nf = Nearfield::Build(q, n);
		std::vector<std::uint32_t> count(n, 0);
		for (std::uint32_t a = 1; a < nf.size(); ++a)
			++count[nf.coset({a})];
		for (auto c : count)
			EXPECT_EQ(c, nf.field().order() / n);
		EXPECT_EQ(nf.coset(nf.generator()), n == 1 ? 0u : 1u);
		EXPECT_EQ(nf.coset(nf.field().exp(n)), 0u);
	}
}

TEST(Nearfield, ProductMatchesOracle)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 2}, {4, 3}, {9, 2}, {5, 1}}) {
		auto nf = Nearfield::Build(q, n);
		OracleProduct o(nf);
		for (std::uint32_t a = 0; a < nf.size(); ++a) {
			if (a) {
				ASSERT_EQ(nf.coset({a}), o.coset({a}));
			}
			for (std::uint32_t b = 0; b < nf.size(); ++b)
				ASSERT_EQ(nf.circ({a}, {b}), o.circ({a}, {b})) << q << "," << n << ": " << a << " o " << b;
		}
	}
}

TEST(Nearfield, ProductMatchesOracleOrder625Sampled)
{
	auto nf = DN54();
	OracleProduct o(nf);
	SampleStream rng(3);
	for (int i = 0; i < 5000; ++i) {
		Elem a{std::uint32_t(rng.below(nf.size()))}, b{std::uint32_t(rng.below(nf.size()))};
		ASSERT_EQ(nf.circ(a, b), o.circ(a, b));
	}
}

TEST(Nearfield, WorkedProduct)
{
	auto nf = DN54();
	Elem x2 = E(nf, {0, 0, 1}), x2p1 = E(nf, {1, 0, 1});
	EXPECT_EQ(nf.coset(x2), 2u);
	EXPECT_EQ(nf.field().toString(nf.circ(x2, x2p1)), "3+x^2");
	for (std::uint32_t b = 0; b < nf.size(); ++b) {
		EXPECT_EQ(nf.circ(gf::Field::Zero(), {b}), Field::Zero());
		EXPECT_EQ(nf.circ({b}, gf::Field::Zero()), Field::Zero());
		EXPECT_EQ(nf.circ(Field::One(), {b}), Elem{b});
		EXPECT_EQ(nf.circ({b}, Field::One()), Elem{b});
	}
}

TEST(Nearfield, NOneIsTheField)
{
	auto nf = Nearfield::Build(5, 1);
	for (std::uint32_t a = 0; a < 5; ++a)
		for (std::uint32_t b = 0; b < 5; ++b)
			EXPECT_EQ(nf.circ({a}, {b}), nf.field().mul({a}, {b}));
}

TEST(Nearfield, InverseAndPower)
{
	auto nf = DN54();
	for (std::uint32_t a = 1; a < nf.size(); ++a) {
		Elem inv = nf.circInv({a});
		ASSERT_EQ(nf.circ({a}, inv), Field::One()) << a;
		ASSERT_EQ(nf.circ(inv, {a}), Field::One()) << a;
	}
	Elem g = nf.generator();
	EXPECT_EQ(nf.circPow(g, 0), Field::One());
	EXPECT_EQ(nf.circPow(g, 1), g);
	EXPECT_EQ(nf.circPow(g, 3), nf.circ(nf.circ(g, g), g));
	EXPECT_THROW(nf.circInv(Field::Zero()), Error);
}

TEST(Nearfield, BaseSubfield)
{
	auto nf = DN54();
	auto base = nf.baseSubfield();
	ASSERT_EQ(base.size(), 5u);
	for (Elem b : base)
		EXPECT_EQ(nf.field().pow(b, 5), b);
}

TEST(Axioms, ExhaustiveSmallNearfields)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 2}, {4, 3}, {9, 2}, {11, 2}}) {
		auto nf = Nearfield::Build(q, n);
		auto r = VerifyLeftNearfield(nf);
		EXPECT_TRUE(r.exhaustive);
		EXPECT_TRUE(r.isProperNearfield()) << q << "," << n;
		EXPECT_EQ(r.leftViolations, 0u);
		ASSERT_TRUE(r.rightCounterexample);
		auto [a, b, c] = *r.rightCounterexample;
		OracleProduct o(nf);
		const Field& F = nf.field();
		EXPECT_NE(o.circ(F.addDigitwise(a, b), c), F.addDigitwise(o.circ(a, c), o.circ(b, c)));
	}
}

TEST(Axioms, FieldCaseIsRightDistributive)
{
	auto r = VerifyLeftNearfield(Nearfield::Build(5, 1));
	EXPECT_TRUE(r.rightDistributive);
	EXPECT_FALSE(r.rightCounterexample);
	EXPECT_FALSE(r.isProperNearfield());
	EXPECT_TRUE(r.leftDistributive);
}

TEST(Axioms, SampledLargeNearfield)
{
	CheckMode mode;
	mode.kind = CheckMode::Sampled;
	mode.count = 100000;
	mode.seed = 9;
	auto r = VerifyLeftNearfield(DN54(), mode);
	EXPECT_FALSE(r.exhaustive);
	EXPECT_EQ(r.triplesChecked, 100000u);
	EXPECT_TRUE(r.isProperNearfield());

	mode.kind = CheckMode::Exhaustive;
	try {
		VerifyLeftNearfield(DN54(), mode);
		FAIL();
	} catch (const Error& e) {
		EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
	}
}

TEST(Distributive, FullAgreesWithBruteForce)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}}) {
		auto nf = Nearfield::Build(q, n);
		OracleProduct o(nf);
		EXPECT_EQ(DistributiveElementsFull(nf), SlowDistributive(nf, o)) << q << "," << n;
	}
}

TEST(Distributive, ReducedAgreesWithFull)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 2}, {4, 3}, {9, 2}, {11, 2}, {13, 2}, {7, 3}, {5, 1}}) {
		auto nf = Nearfield::Build(q, n);
		EXPECT_EQ(DistributiveElementsReduced(nf), DistributiveElementsFull(nf)) << q << "," << n;
	}
	auto nf = DN54();
	EXPECT_EQ(DistributiveElementsReduced(nf), DistributiveElementsFull(nf));
}

TEST(Distributive, IsBaseSubfield)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 4}, {4, 3}, {13, 2}, {5, 1}}) {
		auto nf = Nearfield::Build(q, n);
		auto d = DistributiveElements(nf);
		EXPECT_EQ(d, nf.baseSubfield()) << q << "," << n;
		EXPECT_EQ(d.size(), n == 1 ? nf.size() : q);
	}
	auto nf = Nearfield::Build(3, 2);
	EXPECT_EQ(DistributiveElements(nf), (std::vector<Elem>{{0}, {1}, {2}}));
}

TEST(Center, ContainedInDistributorAndGeneralizedCenter)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}, {7, 2}, {5, 1}}) {
		auto nf = Nearfield::Build(q, n);
		OracleProduct o(nf);
		auto c = Center(nf);
		std::vector<Elem> slow;
		for (std::uint32_t x = 0; x < nf.size(); ++x) {
			bool ok = true;
			for (std::uint32_t y = 0; y < nf.size(); ++y)
				ok = ok && o.circ({x}, {y}) == o.circ({y}, {x});
			if (ok)
				slow.push_back({x});
		}
		EXPECT_EQ(c, slow);
		auto d = DistributiveElements(nf);
		auto gc = GeneralizedCenter(nf, d);
		EXPECT_TRUE(std::includes(d.begin(), d.end(), c.begin(), c.end()));
		EXPECT_TRUE(std::includes(gc.begin(), gc.end(), c.begin(), c.end()));
		EXPECT_TRUE(std::includes(gc.begin(), gc.end(), d.begin(), d.end()));
	}
}

TEST(Skewfield, DistributorIsSkewfield)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {7, 2}, {4, 3}}) {
		auto nf = Nearfield::Build(q, n);
		auto r = VerifyDistributorSkewfield(nf, DistributiveElements(nf));
		EXPECT_TRUE(r.ok());
		EXPECT_TRUE(r.commutative);
	}
	auto nf = DN54();
	EXPECT_TRUE(VerifyDistributorSkewfield(nf, DistributiveElements(nf)).ok());
}

TEST(Skewfield, RejectsNonSubfield)
{
	auto nf = Nearfield::Build(3, 2);
	auto r = VerifyDistributorSkewfield(nf, {{0}, {1}});
	EXPECT_FALSE(r.ok());
	EXPECT_FALSE(r.closedAdd);
}

TEST(VectorSpace, OverDistributor)
{
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}}) {
		auto nf = Nearfield::Build(q, n);
		auto r = VerifyVectorSpace(nf, DistributiveElements(nf));
		EXPECT_TRUE(r.ok()) << q << "," << n;
		EXPECT_EQ(r.dimension, unsigned(n));
	}
	auto nf = Nearfield::Build(3, 2);
	// Scalars that do not distribute from the right fail an axiom.
	auto bad = VerifyVectorSpace(nf, nf.field().elements());
	EXPECT_FALSE(bad.ok());
}

TEST(Presentation, RelationsHold)
{
	auto nf = DN54();
	auto r = VerifyPresentation(nf);
	EXPECT_EQ(r.mExp, 156u);
	EXPECT_EQ(r.tExp, 39u);
	EXPECT_TRUE(r.relationsHold());
	for (auto [q, n] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {4, 3}, {7, 3}, {13, 2}}) {
		auto rr = VerifyPresentation(Nearfield::Build(q, n));
		EXPECT_TRUE(rr.relationsHold()) << q << "," << n;
		EXPECT_EQ(rr.mExp * n, numth::PowU64(q, n) - 1);
	}
}

TEST(Presentation, GeneratesMultiplicativeGroup)
{
	// Every nonzero element is a o-word a^i o b^j with a = g^n, b = g.
	auto nf = Nearfield::Build(3, 2);
	auto r = VerifyPresentation(nf);
	std::set<Elem> reached;
	for (unsigned i = 0; i < r.mExp; ++i)
		for (unsigned j = 0; j < nf.n(); ++j)
			reached.insert(nf.circ(nf.circPow(r.a, i), nf.circPow(r.b, j)));
	EXPECT_EQ(reached.size(), nf.field().order());
}
