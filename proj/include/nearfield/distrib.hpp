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

#include "dickson.hpp"
#include "error.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace nearfield::distrib {

enum class CaseTag { ZeroOperand, SumZero, AllSameCoset, TwoCoincide, AllDistinct };

inline constexpr std::array<CaseTag, 5> kAllCaseTags = {
	CaseTag::ZeroOperand, CaseTag::SumZero, CaseTag::AllSameCoset, CaseTag::TwoCoincide, CaseTag::AllDistinct};

inline const char* ToString(CaseTag t)
{
	switch (t) {
	case CaseTag::ZeroOperand: return "ZeroOperand";
	case CaseTag::SumZero: return "SumZero";
	case CaseTag::AllSameCoset: return "AllSameCoset";
	case CaseTag::TwoCoincide: return "TwoCoincide";
	case CaseTag::AllDistinct: return "AllDistinct";
	}
	return "?";
}

/// Which two of alpha, beta, sigma = alpha + beta share a coset.
enum class MatchingPair { AlphaBeta, AlphaSigma, BetaSigma };

inline const char* ToString(MatchingPair w)
{
	switch (w) {
	case MatchingPair::AlphaBeta: return "ab";
	case MatchingPair::AlphaSigma: return "as";
	case MatchingPair::BetaSigma: return "bs";
	}
	return "?";
}

/// Coset pattern of a pair. Fields beyond `tag` are meaningful per tag:
///   AllSameCoset: shared = k
///   TwoCoincide:  shared = coset of the matching pair, odd = the other one
///   AllDistinct:  kAlpha, kBeta, kSigma
///   SumZero:      kAlpha, kBeta (beta = -alpha)
struct PairCase
{
	CaseTag tag = CaseTag::ZeroOperand;
	unsigned kAlpha = 0, kBeta = 0, kSigma = 0;
	unsigned shared = 0, odd = 0;
	MatchingPair which = MatchingPair::AlphaBeta;

	/// Compact label without commas, e.g. "TwoCoincide(1;2;ab)".
	std::string label() const
	{
		auto s = [](unsigned v) { return std::to_string(v); };
		switch (tag) {
		case CaseTag::ZeroOperand: return "ZeroOperand";
		case CaseTag::SumZero: return "SumZero(" + s(kAlpha) + ";" + s(kBeta) + ")";
		case CaseTag::AllSameCoset: return "AllSameCoset(" + s(shared) + ")";
		case CaseTag::TwoCoincide: return "TwoCoincide(" + s(shared) + ";" + s(odd) + ";" + ToString(which) + ")";
		case CaseTag::AllDistinct: return "AllDistinct(" + s(kAlpha) + ";" + s(kBeta) + ";" + s(kSigma) + ")";
		}
		return "?";
	}
};

inline PairCase ClassifyPair(const Nearfield& nf, Elem alpha, Elem beta)
{
	PairCase c;
	if (alpha.index == 0 || beta.index == 0) {
		c.tag = CaseTag::ZeroOperand;
		return c;
	}
	c.kAlpha = nf.coset(alpha);
	c.kBeta = nf.coset(beta);
	Elem sigma = nf.add(alpha, beta);
	if (sigma.index == 0) {
		c.tag = CaseTag::SumZero;
		return c;
	}
	c.kSigma = nf.coset(sigma);
	const unsigned a = c.kAlpha, b = c.kBeta, s = c.kSigma;
	if (a == b && b == s) {
		c.tag = CaseTag::AllSameCoset;
		c.shared = a;
	} else if (a == b) {
		c.tag = CaseTag::TwoCoincide;
		c.shared = a, c.odd = s, c.which = MatchingPair::AlphaBeta;
	} else if (a == s) {
		c.tag = CaseTag::TwoCoincide;
		c.shared = a, c.odd = b, c.which = MatchingPair::AlphaSigma;
	} else if (b == s) {
		c.tag = CaseTag::TwoCoincide;
		c.shared = b, c.odd = a, c.which = MatchingPair::BetaSigma;
	} else {
		c.tag = CaseTag::AllDistinct;
	}
	return c;
}

struct Prediction
{
	enum Kind { WholeField, Subfield, Unknown } kind = Unknown;
	std::uint64_t order = 0; // p^gamma for Subfield, |R| for WholeField
	unsigned gamma = 0;

	std::string label() const
	{
		switch (kind) {
		case WholeField: return "WholeField";
		case Subfield: return "Subfield(" + std::to_string(order) + ")";
		case Unknown: return "Unknown";
		}
		return "?";
	}
};

/// Subfield degree over F_p cut out by lambda^(q^u) = lambda^(q^v):
/// gamma = gcd(l d, l n) with d = (u - v) mod n. d = 0 gives the whole field.
inline unsigned SubfieldDegree(const Nearfield& nf, unsigned u, unsigned v)
{
	const unsigned n = nf.n();
	const unsigned d = (u + n - v) % n;
	return std::gcd(nf.l() * d, nf.l() * n);
}

inline Prediction PredictDistributor(const Nearfield& nf, const PairCase& c)
{
	Prediction p;
	auto subfield = [&](unsigned u, unsigned v) {
		unsigned gamma = SubfieldDegree(nf, u, v);
		Prediction r;
		r.gamma = gamma;
		r.order = numth::PowU64(nf.p(), gamma);
		r.kind = r.order == nf.size() ? Prediction::WholeField : Prediction::Subfield;
		return r;
	};
	switch (c.tag) {
	case CaseTag::ZeroOperand:
	case CaseTag::AllSameCoset:
		p.kind = Prediction::WholeField;
		p.order = nf.size();
		p.gamma = nf.field().m();
		return p;
	case CaseTag::SumZero: return subfield(c.kAlpha, c.kBeta);
	case CaseTag::TwoCoincide: return subfield(c.shared, c.odd);
	case CaseTag::AllDistinct: return p;
	}
	return p;
}

/// D(alpha, beta) = { lambda : (alpha + beta) o lambda = alpha o lambda + beta o lambda }, sorted.
inline std::vector<Elem> DistributorSet(const Nearfield& nf, Elem alpha, Elem beta)
{
	std::vector<Elem> out;
	const auto& F = nf.field();
	const Elem sigma = F.add(alpha, beta);
	for (std::uint32_t l = 0; l < nf.size(); ++l) {
		Elem lambda{l};
		if (nf.circ(sigma, lambda) == F.add(nf.circ(alpha, lambda), nf.circ(beta, lambda)))
			out.push_back(lambda);
	}
	return out;
}

struct Structure
{
	bool isAdditiveSubgroup = false;
	bool isSubfield = false;
	std::uint64_t order = 0;  // set size when a subfield
	unsigned degree = 0;      // h with order = p^h
	bool degreeDividesM = false;
};

/// Additive-subgroup and subfield (field multiplication) tests on a sorted set.
inline Structure DetectStructure(const gf::Field& F, const std::vector<Elem>& set)
{
	Structure s;
	if (set.empty())
		return s;
	std::vector<char> in(F.size(), 0);
	for (Elem e : set)
		in[e.index] = 1;
	auto member = [&](Elem e) { return in[e.index] != 0; };

	bool additive = member(gf::Field::Zero());
	for (std::size_t i = 0; i < set.size() && additive; ++i) {
		additive = member(F.neg(set[i]));
		for (std::size_t j = i; j < set.size() && additive; ++j)
			additive = member(F.add(set[i], set[j]));
	}
	s.isAdditiveSubgroup = additive;
	if (!additive)
		return s;

	bool field = member(gf::Field::One());
	for (std::size_t i = 0; i < set.size() && field; ++i) {
		if (set[i].index != 0)
			field = member(F.inv(set[i]));
		for (std::size_t j = i; j < set.size() && field; ++j)
			field = member(F.mul(set[i], set[j]));
	}
	s.isSubfield = field;
	if (field) {
		s.order = set.size();
		std::uint64_t v = 1;
		unsigned h = 0;
		while (v < s.order) {
			v *= F.p();
			++h;
		}
		s.degree = v == s.order ? h : 0;
		s.degreeDividesM = s.degree != 0 && F.m() % s.degree == 0;
	}
	return s;
}

struct DistributorReport
{
	Elem alpha, beta;
	PairCase pairCase;
	std::vector<Elem> set;
	Structure structure;
	Prediction predicted;
	std::optional<bool> match; // empty when predicted is Unknown
};

/// Solution set of lambda^(p^gamma) = lambda for each gamma in 0..m, computed once per field.
class SubfieldTable
{
public:
	explicit SubfieldTable(const gf::Field& F)
	{
		_sets.resize(F.m() + 1);
		for (unsigned g = 1; g <= F.m(); ++g)
			if (F.m() % g == 0)
				_sets[g] = gf::FixedSet(F, g);
	}

	const std::vector<Elem>& of(unsigned gamma) const { return _sets.at(gamma); }

private:
	std::vector<std::vector<Elem>> _sets;
};

inline std::optional<bool> PredictionMatches(const Prediction& p, const std::vector<Elem>& set, const SubfieldTable& table,
	std::uint32_t size)
{
	switch (p.kind) {
	case Prediction::WholeField: return set.size() == size;
	case Prediction::Subfield: return set == table.of(p.gamma);
	case Prediction::Unknown: return std::nullopt;
	}
	return std::nullopt;
}

inline DistributorReport AnalyzePair(const Nearfield& nf, Elem alpha, Elem beta)
{
	DistributorReport r;
	r.alpha = alpha;
	r.beta = beta;
	r.pairCase = ClassifyPair(nf, alpha, beta);
	r.set = DistributorSet(nf, alpha, beta);
	r.structure = DetectStructure(nf.field(), r.set);
	r.predicted = PredictDistributor(nf, r.pairCase);
	SubfieldTable table(nf.field());
	r.match = PredictionMatches(r.predicted, r.set, table, nf.size());
	return r;
}

// ---------------------------------------------------------------------------
// Sweep

inline constexpr std::uint64_t kDefaultOpBudget = 1000000000ull;

struct SweepOptions
{
	bool all = true;
	std::uint64_t seed = 1;
	std::uint64_t count = 0;
	unsigned workers = 1;
	std::uint64_t opBudget = kDefaultOpBudget;
};

struct SweepRow
{
	Elem alpha, beta;
	PairCase pairCase;
	std::uint32_t setId = 0;
	std::uint32_t setSize = 0;
	Prediction predicted;
	std::optional<bool> match;
	bool containsBaseField = false;
	bool containsOne = false;
	bool symmetric = false;
};

struct CaseCounters
{
	std::uint64_t pairs = 0;
	std::uint64_t matches = 0;
	std::uint64_t mismatches = 0;
	std::uint64_t unpredicted = 0;
	std::uint64_t subfieldResults = 0; // pairs whose set is a subfield
};

struct SweepSummary
{
	std::uint64_t pairs = 0;
	std::array<CaseCounters, kAllCaseTags.size()> byCase{};
	std::uint64_t baseFieldViolations = 0;     // F_q not inside D(alpha, beta)
	std::uint64_t oneViolations = 0;           // 1 not in D(alpha, beta)
	std::uint64_t subgroupViolations = 0;      // not an additive subgroup
	std::uint64_t degreeViolations = 0;        // subfield of order p^h with h not dividing l n
	std::uint64_t symmetryViolations = 0;      // D(alpha, beta) != D(beta, alpha)
	std::uint64_t distinctSets = 0;

	const CaseCounters& of(CaseTag t) const { return byCase[std::size_t(t)]; }

	std::uint64_t mismatches() const
	{
		std::uint64_t m = 0;
		for (const auto& c : byCase)
			m += c.mismatches;
		return m;
	}

	bool ok() const
	{
		return mismatches() == 0 && baseFieldViolations == 0 && oneViolations == 0 && subgroupViolations == 0
			&& degreeViolations == 0 && symmetryViolations == 0;
	}
};

struct SweepResult
{
	std::vector<SweepRow> rows;
	std::vector<std::vector<Elem>> sets;  // interned, indexed by SweepRow::setId
	std::vector<Structure> structures;    // per interned set
	SweepSummary summary;
};

namespace detail {

struct WorkerOutput
{
	std::map<std::vector<Elem>, std::uint32_t> intern;
	std::vector<std::vector<Elem>> sets;
};

inline std::uint32_t Intern(WorkerOutput& w, std::vector<Elem>&& set)
{
	auto [it, inserted] = w.intern.try_emplace(set, std::uint32_t(w.sets.size()));
	if (inserted)
		w.sets.push_back(std::move(set));
	return it->second;
}

} // namespace detail

/// D(alpha, beta) for every ordered pair of nonzero elements (or a seeded
/// sample of them), checked against the predicted structure.
///
/// Rows come out in canonical order (alpha major, beta minor for `all`; draw
/// order for samples) regardless of the worker count.
inline SweepResult Sweep(const Nearfield& nf, const SweepOptions& opt)
{
	const std::uint32_t size = nf.size();
	const std::uint32_t nonzero = size - 1;
	const auto& F = nf.field();

	std::vector<std::pair<Elem, Elem>> pairs;
	if (opt.all) {
		const std::uint64_t ops = std::uint64_t(size) * size * size;
		if (ops > opt.opBudget)
			throw Error(ErrorKind::BudgetExceeded, "full sweep needs " + std::to_string(ops) + " operations, over the budget of "
				+ std::to_string(opt.opBudget) + "; rerun with --sample COUNT --seed SEED");
		pairs.reserve(std::size_t(nonzero) * nonzero);
		for (std::uint32_t a = 1; a < size; ++a)
			for (std::uint32_t b = 1; b < size; ++b)
				pairs.push_back({{a}, {b}});
	} else {
		SampleStream rng(opt.seed);
		pairs.reserve(opt.count);
		for (std::uint64_t i = 0; i < opt.count; ++i) {
			Elem a{1 + rng.below(nonzero)};
			Elem b{1 + rng.below(nonzero)};
			pairs.push_back({a, b});
		}
	}

	const auto baseField = nf.baseSubfield();
	const SubfieldTable subfields(F);

	SweepResult result;
	result.rows.resize(pairs.size());
	std::vector<std::uint32_t> localId(pairs.size());
	std::vector<std::uint32_t> owner(pairs.size());
	std::vector<std::optional<std::uint32_t>> reverseLocal(opt.all ? 0 : pairs.size());

	const unsigned workers = std::max(1u, opt.workers);
	std::vector<detail::WorkerOutput> outputs(workers);

	// conj[k][lambda] = lambda^(q^k)
	std::vector<std::vector<Elem>> conj(nf.n(), std::vector<Elem>(size));
	for (unsigned k = 0; k < nf.n(); ++k)
		for (std::uint32_t l = 0; l < size; ++l)
			conj[k][l] = nf.qPower({l}, k);

	auto distributor = [&](Elem alpha, Elem beta) {
		std::vector<Elem> set;
		const Elem sigma = F.add(alpha, beta);
		const auto& ca = conj[nf.coset(alpha)];
		const auto& cb = conj[nf.coset(beta)];
		const auto& cs = conj[nf.coset(sigma)];
		for (std::uint32_t l = 0; l < size; ++l) {
			Elem lhs = sigma.index == 0 ? gf::Field::Zero() : F.mul(sigma, cs[l]);
			if (lhs == F.add(F.mul(alpha, ca[l]), F.mul(beta, cb[l])))
				set.push_back({l});
		}
		return set;
	};

	auto work = [&](unsigned w) {
		auto& out = outputs[w];
		for (std::size_t i = w; i < pairs.size(); i += workers) {
			auto [alpha, beta] = pairs[i];
			auto& row = result.rows[i];
			row.alpha = alpha;
			row.beta = beta;
			row.pairCase = ClassifyPair(nf, alpha, beta);
			row.predicted = PredictDistributor(nf, row.pairCase);
			auto set = distributor(alpha, beta);
			row.setSize = std::uint32_t(set.size());
			row.match = PredictionMatches(row.predicted, set, subfields, size);
			row.containsOne = std::binary_search(set.begin(), set.end(), gf::Field::One());
			row.containsBaseField = std::includes(set.begin(), set.end(), baseField.begin(), baseField.end());
			if (!opt.all) {
				auto rev = distributor(beta, alpha);
				row.symmetric = rev == set;
			}
			localId[i] = detail::Intern(out, std::move(set));
			owner[i] = w;
		}
	};

	if (workers == 1) {
		work(0);
	} else {
		std::vector<std::thread> threads;
		for (unsigned w = 0; w < workers; ++w)
			threads.emplace_back(work, w);
		for (auto& t : threads)
			t.join();
	}

	// global ids by content, numbered by first appearance in row order
	std::map<std::vector<Elem>, std::uint32_t> global;
	std::vector<std::vector<std::optional<std::uint32_t>>> remap(workers);
	for (unsigned w = 0; w < workers; ++w)
		remap[w].resize(outputs[w].sets.size());
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		auto& slot = remap[owner[i]][localId[i]];
		if (!slot) {
			const auto& set = outputs[owner[i]].sets[localId[i]];
			auto [it, inserted] = global.try_emplace(set, std::uint32_t(result.sets.size()));
			if (inserted)
				result.sets.push_back(set);
			slot = it->second;
		}
		result.rows[i].setId = *slot;
	}
	for (const auto& s : result.sets)
		result.structures.push_back(DetectStructure(F, s));

	if (opt.all) {
		for (std::size_t i = 0; i < pairs.size(); ++i) {
			std::uint32_t a = result.rows[i].alpha.index, b = result.rows[i].beta.index;
			std::size_t j = std::size_t(b - 1) * nonzero + (a - 1);
			result.rows[i].symmetric = result.rows[i].setId == result.rows[j].setId;
		}
	}

	auto& sum = result.summary;
	sum.pairs = pairs.size();
	sum.distinctSets = result.sets.size();
	for (const auto& row : result.rows) {
		auto& c = sum.byCase[std::size_t(row.pairCase.tag)];
		const auto& st = result.structures[row.setId];
		++c.pairs;
		if (!row.match)
			++c.unpredicted;
		else if (*row.match)
			++c.matches;
		else
			++c.mismatches;
		if (st.isSubfield)
			++c.subfieldResults;
		sum.baseFieldViolations += !row.containsBaseField;
		sum.oneViolations += !row.containsOne;
		sum.subgroupViolations += !st.isAdditiveSubgroup;
		sum.degreeViolations += st.isSubfield && !st.degreeDividesM;
		sum.symmetryViolations += !row.symmetric;
	}
	return result;
}

} // namespace nearfield::distrib
