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

// nearfield: construct Dickson nearfields and check their distributive structure.
//
// Exit codes: 0 success, 1 a verification check failed, 2 input error.

#include "nearfield/dickson.hpp"
#include "nearfield/distrib.hpp"
#include "nearfield/io.hpp"
#include "nearfield/mapnr.hpp"
#include "nearfield/numth.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

using namespace nearfield;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct RunConfig
{
	std::uint64_t q = 0;
	std::uint64_t n = 0;
	std::string modulus;
	std::string generator;
	std::uint32_t sizeCap = gf::kDefaultSizeCap;
	std::uint64_t opBudget = distrib::kDefaultOpBudget;
	bool all = false;
	std::optional<std::uint64_t> sample;
	std::uint64_t seed = 1;
	bool exhaustive = false;
	unsigned workers = 0;
	std::string format;
	std::string output;
	std::string summaryPath;
	std::string alpha;
	std::string beta;
	std::string lambda;
	std::string group;
};

std::uint32_t DefaultSizeCap()
{
	if (const char* env = std::getenv("NEARFIELD_SIZE_CAP")) {
		try {
			unsigned long v = std::stoul(env);
			if (v > 0 && v <= 0xFFFFFFFFul)
				return std::uint32_t(v);
		} catch (const std::exception&) {
		}
		throw Error(ErrorKind::InvalidInput, std::string("NEARFIELD_SIZE_CAP must be a positive integer, got '") + env + "'");
	}
	return gf::kDefaultSizeCap;
}

/// Writes to --output when given, stdout otherwise.
class Sink
{
public:
	explicit Sink(const std::string& path)
	{
		if (!path.empty()) {
			_file.open(path, std::ios::binary);
			if (!_file)
				throw Error(ErrorKind::InvalidInput, "cannot open output file '" + path + "'");
		}
	}

	std::ostream& stream() { return _file.is_open() ? static_cast<std::ostream&>(_file) : std::cout; }

private:
	std::ofstream _file;
};

Nearfield BuildFromConfig(const RunConfig& cfg)
{
	auto verdict = numth::CheckDicksonPair(cfg.q, cfg.n);
	if (!verdict)
		throw Error(ErrorKind::NotADicksonPair, "(" + std::to_string(cfg.q) + "," + std::to_string(cfg.n)
			+ ") is not a Dickson pair: condition " + numth::ToString(verdict.violated) + " fails");
	auto pp = *numth::AsPrimePower(cfg.q);
	Nearfield::Options opt;
	opt.sizeCap = cfg.sizeCap;
	const std::uint32_t p = std::uint32_t(pp.p);
	if (!cfg.modulus.empty())
		opt.modulus = gf::Poly(p, io::ParseCoefficients(cfg.modulus, p));
	if (!cfg.generator.empty()) {
		auto coeffs = io::ParseCoefficients(cfg.generator, p);
		if (coeffs.size() > std::uint64_t(pp.l) * cfg.n)
			throw Error(ErrorKind::InvalidInput, "generator has more coefficients than the extension degree");
		std::uint32_t idx = 0;
		for (std::size_t i = coeffs.size(); i-- > 0;)
			idx = idx * p + coeffs[i];
		opt.generator = gf::Elem{idx};
	}
	return Nearfield::Build(cfg.q, cfg.n, opt);
}

Elem ParseElement(const Nearfield& nf, const std::string& text)
{
	auto coeffs = io::ParseCoefficients(text, std::uint32_t(nf.p()));
	if (coeffs.size() > nf.field().m())
		throw Error(ErrorKind::InvalidInput, "element '" + text + "' has more coefficients than the extension degree");
	return nf.field().fromCoeffs(coeffs);
}

// Text form: one "dotted.path: value" line per leaf; arrays of scalars on one line.
void WriteText(std::ostream& os, const json& j, const std::string& path)
{
	auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
	if (j.is_object()) {
		for (const auto& [k, v] : j.items())
			WriteText(os, v, path.empty() ? k : path + "." + k);
		return;
	}
	if (j.is_array() && std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); })) {
		os << path << ":";
		for (const auto& v : j)
			os << " " << scalar(v);
		os << "\n";
		return;
	}
	if (j.is_array()) {
		for (std::size_t i = 0; i < j.size(); ++i)
			WriteText(os, j[i], path + "[" + std::to_string(i) + "]");
		return;
	}
	os << path << ": " << scalar(j) << "\n";
}

void Emit(const RunConfig& cfg, const json& j)
{
	Sink sink(cfg.output);
	if (cfg.format == "text")
		WriteText(sink.stream(), j, "");
	else
		sink.stream() << j.dump(2) << "\n";
}

int CmdPair(const RunConfig& cfg)
{
	auto v = numth::CheckDicksonPair(cfg.q, cfg.n);
	if (cfg.format == "text") {
		Sink sink(cfg.output);
		sink.stream() << "(" << cfg.q << "," << cfg.n << ") " << (v ? "is a Dickson pair" : "is not a Dickson pair")
					  << (v ? "" : std::string(": condition ") + numth::ToString(v.violated) + " fails") << "\n";
	} else {
		Emit(cfg, io::DicksonVerdictJson(cfg.q, cfg.n, v));
	}
	return v ? kExitOk : kExitInput;
}

int CmdBuild(const RunConfig& cfg)
{
	auto nf = BuildFromConfig(cfg);
	Emit(cfg, io::Descriptor(nf));
	return kExitOk;
}

int CmdVerify(const RunConfig& cfg)
{
	auto nf = BuildFromConfig(cfg);
	CheckMode mode;
	if (cfg.sample) {
		mode.kind = CheckMode::Sampled;
		mode.count = *cfg.sample;
		mode.seed = cfg.seed;
	} else if (cfg.exhaustive) {
		mode.kind = CheckMode::Exhaustive;
	}
	auto axioms = VerifyLeftNearfield(nf, mode);
	auto pres = VerifyPresentation(nf);

	const bool proper = nf.n() > 1;
	bool ok = axioms.additiveAbelian && axioms.multiplicativeGroup && axioms.leftDistributive && pres.relationsHold();
	// a proper nearfield must show a right-distributivity failure; a field must not
	ok = ok && (proper ? axioms.rightCounterexample.has_value() : !axioms.rightCounterexample.has_value());

	json j;
	j["schema"] = io::kVerifySchema;
	j["nearfield"] = io::Descriptor(nf);
	j["axioms"] = io::AxiomJson(nf, axioms);
	j["presentation"] = io::PresentationJson(nf, pres);
	j["ok"] = ok;
	Emit(cfg, j);
	return ok ? kExitOk : kExitMismatch;
}

int CmdDist(const RunConfig& cfg)
{
	auto nf = BuildFromConfig(cfg);
	const auto& F = nf.field();
	if (!cfg.alpha.empty() || !cfg.beta.empty()) {
		if (cfg.alpha.empty() || cfg.beta.empty())
			throw Error(ErrorKind::InvalidInput, "--alpha and --beta go together");
		auto report = distrib::AnalyzePair(nf, ParseElement(nf, cfg.alpha), ParseElement(nf, cfg.beta));
		json j = io::DistributorJson(nf, report);
		const auto drSet = nf.baseSubfield();
		json extra = json::array();
		for (Elem e : report.set)
			if (!std::binary_search(drSet.begin(), drSet.end(), e))
				extra.push_back(F.toString(e));
		j["outside_base_field"] = extra;
		if (!cfg.lambda.empty()) {
			Elem l = ParseElement(nf, cfg.lambda);
			const auto dr = DistributiveElements(nf);
			j["lambda"] = {{"value", F.toString(l)}, {"in_pair_set", std::binary_search(report.set.begin(), report.set.end(), l)},
				{"in_distributive", std::binary_search(dr.begin(), dr.end(), l)}};
		}
		Emit(cfg, j);
		return report.match.value_or(true) ? kExitOk : kExitMismatch;
	}

	if (!cfg.lambda.empty())
		throw Error(ErrorKind::InvalidInput, "--lambda needs --alpha and --beta");
	auto dr = DistributiveElements(nf);
	auto center = Center(nf);
	auto gcenter = GeneralizedCenter(nf, dr);
	auto skew = VerifyDistributorSkewfield(nf, dr);
	auto vs = VerifyVectorSpace(nf, dr);
	const auto fq = nf.baseSubfield();
	const bool equalsFq = dr == fq;
	const bool centerInD = std::includes(dr.begin(), dr.end(), center.begin(), center.end());
	const bool centerInGc = std::includes(gcenter.begin(), gcenter.end(), center.begin(), center.end());

	json j;
	j["schema"] = io::kDistributiveSchema;
	j["nearfield"] = io::Descriptor(nf);
	j["distributive"] = {{"size", dr.size()}, {"elements", io::ElemListText(F, dr)}, {"equals_base_field", equalsFq},
		{"method", nf.size() <= kFullDistributorScanLimit ? "full" : "coset-representatives"}};
	j["center"] = {{"size", center.size()}, {"elements", io::ElemListText(F, center)}, {"subset_of_distributive", centerInD}};
	j["generalized_center"] = {{"size", gcenter.size()}, {"contains_center", centerInGc}};
	j["skewfield"] = {{"ok", skew.ok()}, {"commutative", skew.commutative}};
	j["vector_space"] = {{"ok", vs.ok()}, {"dimension", vs.dimension}};
	const bool ok = equalsFq && centerInD && centerInGc && skew.ok() && vs.ok();
	j["ok"] = ok;
	Emit(cfg, j);
	return ok ? kExitOk : kExitMismatch;
}

int CmdSweep(const RunConfig& cfg)
{
	if (cfg.all == cfg.sample.has_value())
		throw Error(ErrorKind::InvalidInput, "sweep needs exactly one of --all or --sample COUNT");
	auto nf = BuildFromConfig(cfg);
	distrib::SweepOptions opt;
	opt.all = cfg.all;
	opt.count = cfg.sample.value_or(0);
	opt.seed = cfg.seed;
	opt.opBudget = cfg.opBudget;
	opt.workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
	auto res = distrib::Sweep(nf, opt);
	json summary = io::SweepSummaryJson(nf, res, cfg.all);

	const std::string format = cfg.format.empty() ? "csv" : cfg.format;
	if (format == "csv") {
		Sink sink(cfg.output);
		io::WriteSweepCsv(sink.stream(), nf, res);
		if (!cfg.summaryPath.empty()) {
			Sink s(cfg.summaryPath);
			s.stream() << summary.dump(2) << "\n";
		} else {
			std::cerr << summary.dump() << "\n";
		}
	} else if (format == "json") {
		Emit(cfg, summary);
	} else {
		Sink sink(cfg.output);
		auto& os = sink.stream();
		os << "sweep DN(" << nf.q() << "," << nf.n() << "): " << res.summary.pairs << " pairs, " << res.summary.mismatches()
		   << " mismatches\n";
		for (auto tag : distrib::kAllCaseTags) {
			const auto& c = res.summary.of(tag);
			os << "  " << distrib::ToString(tag) << ": " << c.pairs << " pairs, " << c.matches << " match, " << c.mismatches
			   << " mismatch, " << c.unpredicted << " unpredicted\n";
		}
	}
	return res.summary.ok() ? kExitOk : kExitMismatch;
}

int CmdMapNr(const RunConfig& cfg)
{
	auto group = mapnr::Group::Named(cfg.group);
	if (!group) {
		std::ifstream in(cfg.group);
		if (!in)
			throw Error(ErrorKind::InvalidInput, "'" + cfg.group + "' is neither a built-in group (Z1..Z5, V4) nor a readable file");
		json j;
		try {
			j = json::parse(in);
		} catch (const json::exception& e) {
			throw Error(ErrorKind::InvalidGroup, std::string("group file is not valid JSON: ") + e.what());
		}
		group = io::GroupFromJson(j);
	}
	const auto& G = *group;
	mapnr::NearRingCheck check;
	if (cfg.sample)
		check.count = *cfg.sample;
	check.seed = cfg.seed;
	auto report = mapnr::VerifyLeftNearRing(G, check);
	auto dmg = mapnr::DistributiveMaps(G);
	auto end = mapnr::Endomorphisms(G);
	auto closure = mapnr::CheckSubNearRing(G, dmg);

	json j;
	j["schema"] = io::kMapNearRingSchema;
	j["group"] = {{"name", G.name()}, {"order", G.order()}, {"abelian", G.abelian()}};
	j["map_count"] = report.mapCount;
	j["mode"] = report.exhaustive ? "exhaustive" : "sampled";
	j["triples_checked"] = report.triplesChecked;
	j["additive_group"] = report.additiveGroup;
	j["additive_abelian"] = report.additiveAbelian;
	j["compose_associative"] = report.composeAssociative;
	j["left_distributive"] = report.leftDistributive;
	j["right_distributive"] = report.rightDistributive;
	if (report.constantLabels) {
		const auto& c = *report.constantLabels;
		j["right_counterexample"] = {{"a", c[0]}, {"b", c[1]}, {"c", c[2]},
			{"lhs", io::MapJson(mapnr::MapCompose(G, mapnr::MapAdd(G, report.constantCounterexample->f, report.constantCounterexample->g),
						report.constantCounterexample->h))},
			{"rhs", io::MapJson(mapnr::MapAdd(G, mapnr::MapCompose(G, report.constantCounterexample->f, report.constantCounterexample->h),
						mapnr::MapCompose(G, report.constantCounterexample->g, report.constantCounterexample->h)))}};
	} else {
		j["right_counterexample"] = nullptr;
	}
	json maps = json::array();
	for (const auto& h : dmg)
		maps.push_back(io::MapJson(h));
	j["distributive_maps"] = {{"size", dmg.size()}, {"maps", maps}, {"equals_endomorphisms", dmg == end},
		{"closed_under_add", closure.closedAdd}, {"closed_under_compose", closure.closedCompose},
		{"contains_zero", closure.containsZero}};
	const bool ok = report.isLeftNearRing() && (G.order() > 1) == report.constantLabels.has_value() && dmg == end && closure.ok();
	j["ok"] = ok;
	Emit(cfg, j);
	return ok ? kExitOk : kExitMismatch;
}

void AddFieldOptions(CLI::App* cmd, RunConfig& cfg)
{
	cmd->add_option("q", cfg.q, "prime power q")->required();
	cmd->add_option("n", cfg.n, "twisting degree n")->required();
	cmd->add_option("--modulus", cfg.modulus, "monic irreducible modulus, ascending coefficients (x^4+2 -> 2,0,0,0,1)");
	cmd->add_option("--generator", cfg.generator, "generator of the multiplicative group, ascending coefficients");
	cmd->add_option("--size-cap", cfg.sizeCap, "largest field order accepted (default 8192, env NEARFIELD_SIZE_CAP)")
		->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv)
{
	RunConfig cfg;
	CLI::App app{"Dickson nearfields: construction, axiom checks, distributive sets"};
	app.require_subcommand(1);

	auto* pair = app.add_subcommand("pair", "check whether (q, n) is a Dickson pair");
	pair->add_option("q", cfg.q)->required();
	pair->add_option("n", cfg.n)->required();

	auto* build = app.add_subcommand("build", "construct DN_g(q, n) and print its descriptor");
	AddFieldOptions(build, cfg);

	auto* verify = app.add_subcommand("verify", "left-nearfield axioms, right-distributivity witness, group presentation");
	AddFieldOptions(verify, cfg);
	verify->add_option("--sample", cfg.sample, "sample this many triples instead of the exhaustive scan");
	verify->add_option("--seed", cfg.seed, "seed for sampled checks");
	verify->add_flag("--exhaustive", cfg.exhaustive, "force the exhaustive triple scan (at most 128 elements)");

	auto* dist = app.add_subcommand("dist", "D(R), C(R), GC(R); or D(alpha, beta) with --alpha/--beta");
	AddFieldOptions(dist, cfg);
	dist->add_option("--alpha", cfg.alpha, "alpha as ascending coefficients");
	dist->add_option("--beta", cfg.beta, "beta as ascending coefficients");
	dist->add_option("--lambda", cfg.lambda, "report membership of this element in D(alpha, beta) and D(R)");

	auto* sweep = app.add_subcommand("sweep", "D(alpha, beta) over all (or sampled) ordered nonzero pairs");
	AddFieldOptions(sweep, cfg);
	sweep->add_flag("--all", cfg.all, "every ordered pair of nonzero elements");
	sweep->add_option("--sample", cfg.sample, "number of sampled pairs");
	sweep->add_option("--seed", cfg.seed, "seed for --sample");
	sweep->add_option("--workers", cfg.workers, "worker threads (default: available parallelism)");
	sweep->add_option("--op-budget", cfg.opBudget, "largest size^3 allowed for --all")->check(CLI::PositiveNumber);
	sweep->add_option("--summary", cfg.summaryPath, "write the JSON summary here (csv format; default stderr)");

	auto* mapnr = app.add_subcommand("mapnr", "the mapping near-ring M(G) and its distributive maps");
	mapnr->add_option("group", cfg.group, "Z1..Z5, V4, or a JSON file {order, add}")->required();
	mapnr->add_option("--sample", cfg.sample, "sampled triples when |M(G)| > 256");
	mapnr->add_option("--seed", cfg.seed, "seed for sampled checks");

	for (auto* cmd : {pair, build, verify, dist, sweep, mapnr}) {
		cmd->add_option("--format", cfg.format, "json, csv (sweep only) or text")
			->check(CLI::IsMember({"json", "csv", "text"}));
		cmd->add_option("--output", cfg.output, "write to this file instead of stdout");
	}

	try {
		cfg.sizeCap = DefaultSizeCap();
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? kExitOk : kExitInput;
	} catch (const Error& e) {
		std::cout << io::ErrorJson(e).dump() << "\n";
		return kExitInput;
	}

	try {
		if (*pair)
			return CmdPair(cfg);
		if (*build)
			return CmdBuild(cfg);
		if (*verify)
			return CmdVerify(cfg);
		if (*dist)
			return CmdDist(cfg);
		if (*sweep)
			return CmdSweep(cfg);
		if (*mapnr)
			return CmdMapNr(cfg);
	} catch (const Error& e) {
		std::cout << io::ErrorJson(e).dump() << "\n";
		return kExitInput;
	}
	return kExitInput;
}
