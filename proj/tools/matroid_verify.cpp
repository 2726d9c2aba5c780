// Command-line surface over the matroid library: catalog access, ad-hoc
// queries, the claim batteries, and the projective sweeps.
//
// Exit codes: 0 = success / all claims pass, 1 = a claim failed,
// 2 = input or capacity error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matroid/claims.hpp"
#include "matroid/constructions.hpp"
#include "matroid/core.hpp"
#include "matroid/iso.hpp"
#include "matroid/spec_io.hpp"

namespace {

using namespace matroid;

void print_claims(const std::vector<ClaimReport>& claims) {
  auto sorted = claims;
  std::sort(sorted.begin(), sorted.end(),
            [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
  for (const auto& c : sorted) {
    std::cout << status_name(c.status) << "  " << c.id << "  (" << c.elapsed_ms << " ms)\n";
    if (!c.detail.empty()) std::cout << "      " << c.detail << "\n";
  }
}

bool any_failed(const std::vector<ClaimReport>& claims) {
  for (const auto& c : claims) {
    if (c.status == ClaimReport::Status::fail) return true;
  }
  return false;
}

void write_json(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"matroid computation and verification tool"};
  app.require_subcommand(1);

  auto* cmd_catalog = app.add_subcommand("catalog", "list the named matroids");

  std::string show_spec;
  auto* cmd_show = app.add_subcommand("show", "print a matroid summary");
  cmd_show->add_option("spec", show_spec, "catalog name or spec file")->required();

  std::string iso_a, iso_b;
  auto* cmd_iso = app.add_subcommand("iso", "test two matroids for isomorphism");
  cmd_iso->add_option("a", iso_a)->required();
  cmd_iso->add_option("b", iso_b)->required();

  std::string hm_host, hm_target;
  auto* cmd_hm = app.add_subcommand("has-minor", "search for a minor witness");
  cmd_hm->add_option("host", hm_host)->required();
  cmd_hm->add_option("target", hm_target)->required();

  std::string m4_spec;
  auto* cmd_m4 = app.add_subcommand("check-m4",
                                    "is the matroid simple with all cocircuits of size >= 4?");
  cmd_m4->add_option("spec", m4_spec)->required();

  std::string min_spec;
  auto* cmd_min = app.add_subcommand("minimal", "minor-minimality within the class");
  cmd_min->add_option("spec", min_spec)->required();

  std::string suite = "all", vp_json;
  auto* cmd_vp = app.add_subcommand("verify-paper", "run the claim batteries");
  cmd_vp->add_option("--suite", suite, "all|catalog|lemmas|duals|sweeps");
  cmd_vp->add_option("--json", vp_json, "write a JSON report here");

  int sw_field = 0, sw_rank = 0;
  std::string sw_json;
  auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive projective-geometry sweep");
  cmd_sweep->add_option("--field", sw_field, "2 or 3")->required();
  cmd_sweep->add_option("--rank", sw_rank, "<= 4 for GF(2), <= 3 for GF(3)")->required();
  cmd_sweep->add_option("--json", sw_json, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_catalog->parsed()) {
    for (const auto& e : catalog()) {
      std::cout << e.name << "  n=" << e.m.n() << " r=" << e.m.rank()
                << " girth=" << girth(e.m) << " cogirth=" << cogirth(e.m)
                << "  [" << e.source << "]\n";
    }
    return 0;
  }

  if (cmd_show->parsed()) {
    Matroid m = resolve_matroid_arg(show_spec);
    std::cout << "n = " << m.n() << "\nrank = " << m.rank()
              << "\nbases = " << m.bases().size() << "\nsource = " << source_name(m.source())
              << "\ngirth = " << (girth(m) == kInfinity ? "inf" : std::to_string(girth(m)))
              << "\ncogirth = " << (cogirth(m) == kInfinity ? "inf" : std::to_string(cogirth(m)))
              << "\n";
    SetFamily cs = circuits(m);
    std::cout << "circuits (" << cs.members.size() << "):";
    for (Word c : cs.members) std::cout << " " << set_to_string(c);
    std::cout << "\n";
    SetFamily ccs = cocircuits(m);
    std::cout << "cocircuits (" << ccs.members.size() << "):";
    for (Word c : ccs.members) std::cout << " " << set_to_string(c);
    std::cout << "\n";
    return 0;
  }

  if (cmd_iso->parsed()) {
    Matroid a = resolve_matroid_arg(iso_a), b = resolve_matroid_arg(iso_b);
    auto perm = find_isomorphism(a, b);
    if (perm) {
      std::cout << "isomorphic\n";
      for (std::size_t i = 0; i < perm->size(); ++i) {
        std::cout << i << " -> " << (*perm)[i] << "\n";
      }
    } else {
      std::cout << "not isomorphic\n";
    }
    return 0;
  }

  if (cmd_hm->parsed()) {
    Matroid host = resolve_matroid_arg(hm_host), target = resolve_matroid_arg(hm_target);
    auto w = has_minor(host, target);
    if (w) {
      std::cout << "minor found\ncontract = " << set_to_string(w->contract)
                << "\ndelete = " << set_to_string(w->del) << "\nmapping:";
      for (std::size_t t = 0; t < w->mapping.size(); ++t) {
        std::cout << " " << t << "->" << w->mapping[t];
      }
      std::cout << "\n";
    } else {
      std::cout << "no minor (exhaustive search)\n";
    }
    return 0;
  }

  if (cmd_m4->parsed()) {
    Matroid m = resolve_matroid_arg(m4_spec);
    std::cout << (in_m4(m) ? "true" : "false") << "\n";
    return 0;
  }

  if (cmd_min->parsed()) {
    Matroid m = resolve_matroid_arg(min_spec);
    ClaimReport rep = is_minor_minimal_m4(m);
    std::cout << status_name(rep.status) << ": " << rep.detail << " (" << rep.elapsed_ms
              << " ms)\n";
    return 0;
  }

  if (cmd_vp->parsed()) {
    std::vector<ClaimReport> claims = run_suite(suite);
    print_claims(claims);
    if (!vp_json.empty()) write_json(vp_json, report_to_json(claims));
    return any_failed(claims) ? 1 : 0;
  }

  if (cmd_sweep->parsed()) {
    SweepResult res = run_sweep(sw_field, sw_rank);
    std::cout << "field = GF(" << res.field << "), rank = " << res.rank
              << "\npoints = " << res.universe_size << "\nrestrictions = " << res.subsets_scanned
              << "\nclasses (simple, cogirth >= 4) = " << res.classes_examined
              << "\nfailures = " << res.failures.size() << "\ncensus by (n, r):\n";
    for (const auto& [key, count] : res.census) {
      std::cout << "  n=" << key.first << " r=" << key.second << " : " << count << "\n";
    }
    for (const auto& f : res.failures) std::cout << "FAILURE spec: " << f << "\n";
    if (!sw_json.empty()) {
      nlohmann::json j;
      j["schema"] = 1;
      j["field"] = res.field;
      j["rank"] = res.rank;
      j["universe_size"] = res.universe_size;
      j["subsets_scanned"] = res.subsets_scanned;
      j["classes_examined"] = res.classes_examined;
      j["failures"] = res.failures;
      nlohmann::json census = nlohmann::json::array();
      for (const auto& [key, count] : res.census) {
        census.push_back({{"n", key.first}, {"r", key.second}, {"classes", count}});
      }
      j["census"] = census;
      write_json(sw_json, j.dump(2));
    }
    return res.failures.empty() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
