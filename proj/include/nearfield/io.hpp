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

// JSON and CSV forms of the library's values. Requires nlohmann/json.
//
// Elements: text form "2+3x+x^2" (ascending powers, "0" for zero) and JSON
// form [2,3,1] (ascending coefficient residues, [] for zero). Every top-level
// document carries a "schema" field; see docs/schema.md.

#include "dickson.hpp"
#include "distrib.hpp"
#include "error.hpp"
#include "mapnr.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nearfield::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kDescriptorSchema = "nearfield.descriptor/1";
inline constexpr const char* kVerifySchema = "nearfield.verify/1";
inline constexpr const char* kDistributiveSchema = "nearfield.distributive/1";
inline constexpr const char* kPairSchema = "nearfield.pair/1";
inline constexpr const char* kDicksonPairSchema = "nearfield.dickson-pair/1";
inline constexpr const char* kSweepSummarySchema = "nearfield.sweep-summary/1";
inline constexpr const char* kSweepCsvSchema = "nearfield.sweep-csv/1";
inline constexpr const char* kMapNearRingSchema = "nearfield.mapnr/1";
inline constexpr const char* kErrorSchema = "nearfield.error/1";

inline json ElemJson(const gf::Field& F, Elem e) { return F.coeffs(e); }

inline json ElemListText(const gf::Field& F, const std::vector<Elem>& v)
{
	json a = json::array();
	for (Elem e : v)
		a.push_back(F.toString(e));
	return a;
}

/// Parses "2,0,1" into ascending coefficients. Residues must be in [0, p).
inline std::vector<std::uint32_t> ParseCoefficients(const std::string& text, std::uint32_t p)
{
	std::vector<std::uint32_t> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
			throw Error(ErrorKind::InvalidInput, "bad coefficient list '" + text + "'");
		std::uint32_t v = std::uint32_t(std::stoul(item));
		if (v >= p)
			throw Error(ErrorKind::InvalidInput, "coefficient " + item + " is not a residue mod " + std::to_string(p));
		out.push_back(v);
	}
	if (out.empty())
		throw Error(ErrorKind::InvalidInput, "empty coefficient list");
	return out;
}

inline json Descriptor(const Nearfield& nf)
{
	const auto& F = nf.field();
	json j;
	j["schema"] = kDescriptorSchema;
	j["p"] = nf.p();
	j["l"] = nf.l();
	j["q"] = nf.q();
	j["n"] = nf.n();
	j["size"] = nf.size();
	j["modulus"] = F.modulus().coeffs();
	j["modulus_text"] = F.modulus().toString();
	j["generator"] = ElemJson(F, nf.generator());
	j["generator_text"] = F.toString(nf.generator());
	j["coset_size"] = F.order() / nf.n();
	return j;
}

inline json DicksonVerdictJson(std::uint64_t q, std::uint64_t n, const numth::DicksonVerdict& v)
{
	json j;
	j["schema"] = kDicksonPairSchema;
	j["q"] = q;
	j["n"] = n;
	j["valid"] = v.valid;
	j["violated"] = v.valid ? json(nullptr) : json(numth::ToString(v.violated));
	return j;
}

inline json TripleJson(const gf::Field& F, const Triple& t)
{
	return json::array({F.toString(t.a), F.toString(t.b), F.toString(t.c)});
}

inline json AxiomJson(const Nearfield& nf, const AxiomReport& r)
{
	const auto& F = nf.field();
	json j;
	j["additive_abelian"] = r.additiveAbelian;
	j["multiplicative_group"] = r.multiplicativeGroup;
	j["left_distributive"] = r.leftDistributive;
	j["right_distributive"] = r.rightDistributive;
	j["right_counterexample"] = r.rightCounterexample ? TripleJson(F, *r.rightCounterexample) : json(nullptr);
	j["left_counterexample"] = r.leftCounterexample ? TripleJson(F, *r.leftCounterexample) : json(nullptr);
	j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
	j["triples_checked"] = r.triplesChecked;
	j["left_violations"] = r.leftViolations;
	j["right_triples_scanned"] = r.rightTriplesScanned;
	return j;
}

inline json PresentationJson(const Nearfield& nf, const PresentationReport& r)
{
	const auto& F = nf.field();
	json j;
	j["m"] = r.mExp;
	j["t"] = r.tExp;
	j["a"] = F.toString(r.a);
	j["b"] = F.toString(r.b);
	j["a_pow_m_is_one"] = r.aPowMIsOne;
	j["b_pow_n_equals_a_pow_t"] = r.bPowNEqualsAPowT;
	j["b_a_equals_a_pow_q_b"] = r.commutation;
	j["b_pow_m_equals_a_pow_t"] = r.bPowMEqualsAPowT;
	j["relations_hold"] = r.relationsHold();
	return j;
}

inline json StructureJson(const distrib::Structure& s)
{
	json j;
	j["is_additive_subgroup"] = s.isAdditiveSubgroup;
	j["is_subfield"] = s.isSubfield;
	j["subfield_order"] = s.isSubfield ? json(s.order) : json(nullptr);
	return j;
}

inline json DistributorJson(const Nearfield& nf, const distrib::DistributorReport& r)
{
	const auto& F = nf.field();
	json j;
	j["schema"] = kPairSchema;
	j["alpha"] = F.toString(r.alpha);
	j["beta"] = F.toString(r.beta);
	j["case"] = r.pairCase.label();
	j["size"] = r.set.size();
	j["set"] = ElemListText(F, r.set);
	j.update(StructureJson(r.structure));
	j["predicted"] = r.predicted.label();
	j["match"] = r.match ? json(*r.match) : json(nullptr);
	return j;
}

inline json SweepSummaryJson(const Nearfield& nf, const distrib::SweepResult& res, bool all)
{
	const auto& s = res.summary;
	json j;
	j["schema"] = kSweepSummarySchema;
	j["q"] = nf.q();
	j["n"] = nf.n();
	j["size"] = nf.size();
	j["mode"] = all ? "all" : "sample";
	j["pairs"] = s.pairs;
	json cases = json::object();
	for (auto tag : distrib::kAllCaseTags) {
		const auto& c = s.of(tag);
		cases[distrib::ToString(tag)] = {{"pairs", c.pairs}, {"matches", c.matches}, {"mismatches", c.mismatches},
			{"unpredicted", c.unpredicted}, {"subfield_results", c.subfieldResults}};
	}
	j["cases"] = cases;
	j["violations"] = {{"base_field_not_contained", s.baseFieldViolations}, {"one_not_contained", s.oneViolations},
		{"not_additive_subgroup", s.subgroupViolations}, {"degree_not_dividing_ln", s.degreeViolations},
		{"asymmetric", s.symmetryViolations}};
	j["distinct_sets"] = s.distinctSets;
	json sizes = json::array();
	for (std::size_t i = 0; i < res.sets.size(); ++i)
		sizes.push_back({{"size", res.sets[i].size()}, {"is_subfield", res.structures[i].isSubfield}});
	j["set_catalog"] = sizes;
	j["mismatches"] = s.mismatches();
	j["ok"] = s.ok();
	return j;
}

/// One header line "# nearfield.sweep-csv/1", then the column header and one row per pair.
inline void WriteSweepCsv(std::ostream& os, const Nearfield& nf, const distrib::SweepResult& res)
{
	const auto& F = nf.field();
	os << "# " << kSweepCsvSchema << "\n";
	os << "alpha,beta,case,size,is_subfield,subfield_order,predicted,match\n";
	for (const auto& row : res.rows) {
		const auto& st = res.structures[row.setId];
		os << F.toString(row.alpha) << ',' << F.toString(row.beta) << ',' << row.pairCase.label() << ',' << row.setSize << ','
		   << (st.isSubfield ? "true" : "false") << ',';
		if (st.isSubfield)
			os << st.order;
		os << ',' << row.predicted.label() << ',' << (row.match ? (*row.match ? "true" : "false") : "na") << '\n';
	}
}

inline json MapJson(const mapnr::GMap& f) { return f.images; }

/// {"order": n, "add": [[...], ...], "name": optional}
inline mapnr::Group GroupFromJson(const json& j)
{
	if (!j.is_object() || !j.contains("order") || !j.contains("add"))
		throw Error(ErrorKind::InvalidGroup, "group JSON needs 'order' and 'add'");
	auto order = j.at("order").get<unsigned>();
	auto table = j.at("add").get<std::vector<std::vector<unsigned>>>();
	if (table.size() != order)
		throw Error(ErrorKind::InvalidGroup, "'add' has " + std::to_string(table.size()) + " rows, expected " + std::to_string(order));
	return mapnr::Group::FromTable(std::move(table), j.value("name", std::string("custom")));
}

inline json ErrorJson(const Error& e)
{
	return {{"schema", kErrorSchema}, {"error", ToString(e.kind())}, {"message", e.what()}};
}

} // namespace nearfield::io
