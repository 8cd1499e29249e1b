#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symu/corpus.hpp"
#include "symu/coset_enum.hpp"
#include "symu/errors.hpp"
#include "symu/goodness.hpp"
#include "symu/group.hpp"
#include "symu/json_io.hpp"
#include "symu/presentation.hpp"
#include "symu/verify.hpp"

namespace {

// exit codes: 0 success/good, 10 checked-and-false, 2 input error,
// 3 resource cap
constexpr int kExitGood = 0;
constexpr int kExitFalse = 10;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

uint64_t parse_seed(const std::string& hex) {
  std::string s = hex;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty()) throw CLI::ValidationError("--seed", "empty seed");
  uint64_t v = 0;
  std::istringstream in(s);
  in >> std::hex >> v;
  if (in.fail() || !in.eof()) throw CLI::ValidationError("--seed", "not a hex value: " + hex);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_build(const std::string& family, const std::string& presentation_path,
              const std::string& out_path, int max_cosets, bool no_audit) {
  symu::Group g;
  if (!family.empty()) {
    g = symu::make_family(family, !no_audit);
  } else {
    symu::Presentation p = symu::parse_presentation(read_file(presentation_path));
    std::string label = presentation_path;
    if (auto slash = label.find_last_of('/'); slash != std::string::npos)
      label = label.substr(slash + 1);
    if (auto dot = label.find_last_of('.'); dot != std::string::npos) label = label.substr(0, dot);
    g = symu::group_from_presentation(p, max_cosets, label, !no_audit);
  }
  if (out_path.empty()) {
    std::cout << symu::group_to_json(g).dump(2) << "\n";
  } else {
    symu::save_group_file(g, out_path);
    std::cerr << g.label << ": order " << g.order << " -> " << out_path << "\n";
  }
  return kExitGood;
}

int cmd_check(const std::string& group_path, const std::string& ring_spec, bool as_json,
              int jobs) {
  symu::Group g = symu::load_group_file(group_path);
  const symu::Ring& ring = symu::Ring::parse(ring_spec);
  symu::ClassificationReport rep = symu::classify(g, ring, symu::reference_groups(), jobs);
  if (as_json) {
    std::cout << symu::classification_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << g.label << " (order " << g.order << ", " << ring.name() << "): "
              << (rep.goodness.good ? "good" : "not good") << "\n";
    if (rep.goodness.witness) {
      std::cout << "  witness: (" << rep.goodness.witness->first.describe(g) << ") vs ("
                << rep.goodness.witness->second.describe(g) << ") do not commute\n";
    }
    if (!rep.rhs.abelian) {
      std::cout << "  theorem rhs: " << (rep.rhs.good ? "holds" : "fails");
      if (rep.rhs.decomposition)
        std::cout << " via condition (" << rep.rhs.decomposition->condition << "), |E| = "
                  << rep.rhs.decomposition->e_elements.size();
      std::cout << "\n";
    }
    if (rep.lemma1)
      std::cout << "  lemma 1 sweep: " << (rep.lemma1->pass ? "pass" : "FAIL") << "\n";
    if (rep.lemma2) {
      std::cout << "  lemma 2: ";
      switch (rep.lemma2->status) {
        case symu::Lemma2Result::Status::verified:
          std::cout << "(A, b) witness verified, |A| = " << rep.lemma2->abelian_a.size();
          break;
        case symu::Lemma2Result::Status::failed:
          std::cout << "FAILED: " << rep.lemma2->reason;
          break;
        case symu::Lemma2Result::Status::inapplicable:
          std::cout << "inapplicable (" << rep.lemma2->reason << ")";
          break;
      }
      std::cout << "\n";
    }
  }
  return rep.goodness.good ? kExitGood : kExitFalse;
}

int cmd_units(const std::string& group_path, uint64_t seed, long long samples, bool as_json) {
  symu::Group g = symu::load_group_file(group_path);
  symu::UnitCensus census = symu::unit_census(g, seed, samples);
  if (as_json) {
    std::cout << symu::census_to_json(census).dump(2) << "\n";
  } else {
    std::cout << census.label << " (order " << census.order << ", GF(2)):\n"
              << "  |S| = " << census.s_size
              << ", symmetric elements = " << census.symmetric_elements
              << ", symmetric units = " << census.symmetric_units << "\n"
              << "  closure: " << (census.closure.closed ? "closed" : "NOT closed") << " ("
              << (census.closure.exact ? "exact" : "sampled") << ", "
              << census.closure.pairs_checked << " pairs)\n";
    if (census.closure.witness)
      std::cout << "  witness: u = " << census.closure.witness->first.to_string()
                << ", v = " << census.closure.witness->second.to_string() << "\n";
  }
  return census.closure.closed ? kExitGood : kExitFalse;
}

int cmd_verify(int max_order, bool families_only, uint64_t seed, long long samples, int jobs,
               bool as_json) {
  symu::VerifyOptions opts;
  opts.max_order = max_order;
  opts.families_only = families_only;
  opts.seed = seed;
  opts.sample_pairs = samples;
  opts.jobs = jobs;
  std::vector<symu::CheckResult> results = symu::run_verification(opts);
  int failed = 0;
  if (as_json) {
    nlohmann::json j;
    j["max_order"] = max_order;
    j["seed"] = seed;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : results) {
      j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (!r.pass) ++failed;
    }
    j["passed"] = static_cast<int>(results.size()) - failed;
    j["failed"] = failed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
      if (!r.pass && !r.detail.empty()) std::cout << "  -- " << r.detail;
      std::cout << "\n";
      if (!r.pass) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitGood : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symu: symmetric units of modular group algebras on concrete 2-groups"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a group and write it as JSON");
  std::string family, presentation_path, out_path;
  int max_cosets = 100000;
  bool no_audit = false;
  auto* fam_opt = build->add_option("--family", family, "family descriptor, e.g. cyclic:12, q8");
  auto* pres_opt =
      build->add_option("--presentation", presentation_path, "presentation file to enumerate");
  build->add_option("-o,--output", out_path, "output path (stdout when omitted)");
  build->add_option("--max-cosets", max_cosets, "coset enumeration cap")->check(CLI::PositiveNumber);
  build->add_flag("--no-audit", no_audit, "skip the construction audit (performance runs)");
  fam_opt->excludes(pres_opt);

  // check
  auto* chk = app.add_subcommand("check", "goodness verdict and classification for a group file");
  std::string chk_path, ring_spec = "2";
  bool chk_json = false;
  int jobs = 1;
  chk->add_option("group", chk_path, "group JSON file")->required();
  chk->add_option("--ring", ring_spec, "coefficient field: p or p^2 (e.g. 2, 4, 2^2, 3)");
  chk->add_flag("--json", chk_json, "emit the classification report as JSON");
  chk->add_option("--jobs", jobs, "parallelism for pairwise checks")->check(CLI::PositiveNumber);

  // units
  auto* units = app.add_subcommand("units", "symmetric-unit census over GF(2) (order <= 16)");
  std::string units_path, units_seed = "0xB0BD1";
  long long samples = 1000000;
  bool units_json = false;
  units->add_option("group", units_path, "group JSON file")->required();
  units->add_option("--sample", samples, "sampled closure pairs at order 16")
      ->check(CLI::PositiveNumber);
  units->add_option("--seed", units_seed, "hex RNG seed for sampling");
  units->add_flag("--json", units_json, "emit the census as JSON");

  // verify
  auto* ver = app.add_subcommand("verify", "run the corpus invariant sweep");
  int max_order = 16;
  bool families_only = false, ver_json = false;
  std::string ver_seed = "0xB0BD1";
  long long ver_samples = 1000000;
  int ver_jobs = 1;
  ver->add_option("--max-order", max_order, "corpus order bound (<= 16)")
      ->check(CLI::Range(1, 16));
  ver->add_flag("--families-only", families_only, "check only the named families");
  ver->add_option("--seed", ver_seed, "hex RNG seed for sampling");
  ver->add_option("--sample", ver_samples, "sampled closure pairs")->check(CLI::PositiveNumber);
  ver->add_option("--jobs", ver_jobs, "parallelism for pairwise checks")
      ->check(CLI::PositiveNumber);
  ver->add_flag("--json", ver_json, "emit the summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;  // help/version exit 0, bad flags exit 2
  }

  try {
    if (build->parsed()) {
      if (family.empty() == presentation_path.empty()) {
        std::cerr << "error: build needs exactly one of --family / --presentation\n";
        return kExitInput;
      }
      return cmd_build(family, presentation_path, out_path, max_cosets, no_audit);
    }
    if (chk->parsed()) return cmd_check(chk_path, ring_spec, chk_json, jobs);
    if (units->parsed()) return cmd_units(units_path, parse_seed(units_seed), samples, units_json);
    if (ver->parsed())
      return cmd_verify(max_order, families_only, parse_seed(ver_seed), ver_samples, ver_jobs,
                        ver_json);
  } catch (const symu::CapacityError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const symu::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
