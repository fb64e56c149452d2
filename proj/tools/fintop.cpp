// fintop: census, theorem verification, witness search and inspection of
// finite topological spaces.
//
// Exit status: 0 on success, 1 when a verify suite reports violations,
// 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fintop/census.hpp"
#include "fintop/covers.hpp"
#include "fintop/io.hpp"
#include "fintop/operators.hpp"
#include "fintop/verifier.hpp"

namespace {

using namespace fintop;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

enum class Format { text, json };

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_census(int n, bool up_to_homeo, const std::string& out_path) {
  const Census census = build_census(n, up_to_homeo);
  if (out_path == "-") {
    write_census(census, std::cout);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  write_census(census, out);
  std::cerr << "wrote " << census.records.size() << " records to " << out_path << '\n';
  return kOk;
}

int run_verify(int n, const std::string& census_path, bool up_to_homeo, const std::vector<std::string>& suite_args,
               Format format) {
  std::vector<SuiteId> suites;
  for (const auto& tag : split_list(suite_args)) {
    if (tag == "all") {
      suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
      continue;
    }
    auto id = parse_suite(tag);
    if (!id) throw InputError("unknown suite: " + tag);
    suites.push_back(*id);
  }
  if (suites.empty()) suites.assign(std::begin(kAllSuites), std::end(kAllSuites));

  std::vector<Topology> spaces;
  if (!census_path.empty()) {
    std::istringstream in(read_all(census_path));
    for (auto& r : read_census(in).records) spaces.push_back(r.space);
  } else {
    spaces = enumerate_topologies(n, up_to_homeo);
  }

  bool failed = false;
  for (SuiteId s : suites) {
    const Report r = run_suite(s, spaces);
    failed = failed || !r.passed();
    if (format == Format::json)
      std::cout << report_to_json(r).dump() << '\n';
    else
      std::cout << format_report(r);
  }
  return failed ? kViolations : kOk;
}

int run_search(const std::string& tag, int max_n, Format format) {
  auto pred = parse_search_predicate(tag);
  if (!pred) throw InputError("unknown search predicate: " + tag);
  const SearchResult r = search(*pred, max_n);
  if (format == Format::json)
    std::cout << search_to_json(r).dump() << '\n';
  else
    std::cout << format_search(r);
  return kOk;
}

const std::vector<std::string> kBasicFacets = {"opens", "closed", "min-nbhd", "alpha", "gc", "canonical-alpha-cover",
                                               "profile"};

void emit(Format format, const std::string& facet, const std::string& text, ojson value) {
  if (format == Format::json) {
    ojson j;
    j["facet"] = facet;
    j["value"] = std::move(value);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

ojson family_json(std::span<const Subset> members) {
  ojson arr = ojson::array();
  for (Subset s : members) arr.push_back(subset_to_json(s));
  return arr;
}

void print_facet(const SpaceAnalysis& s, const std::string& facet, Format format) {
  const Topology& t = s.space();
  if (facet == "opens") {
    emit(format, facet, "T = " + letters_family(t.opens()), family_json(t.opens()));
  } else if (facet == "closed") {
    const auto c = closed_sets(t);
    emit(format, facet, "closed = " + letters_family(c.members), family_json(c.members));
  } else if (facet == "min-nbhd") {
    std::string text;
    ojson arr = ojson::array();
    for (int x = 0; x < t.size(); ++x) {
      if (x) text += '\n';
      text += std::string("U(") + point_letter(x) + ") = " + to_letters(t.min_nbhd(x), true);
      arr.push_back(subset_to_json(t.min_nbhd(x)));
    }
    emit(format, facet, text, std::move(arr));
  } else if (facet == "alpha") {
    emit(format, facet, "T^α = " + letters_family(s.alpha().opens()), family_json(s.alpha().opens()));
  } else if (facet == "gc") {
    const auto gc = s.set_class(ClassKind::g_closed);
    const auto gca = SpaceAnalysis(s.alpha()).set_class(ClassKind::g_closed);
    const bool mismatch = !gc.same_members(gca);
    ojson j;
    j["gc"] = family_json(gc.members);
    j["gc_alpha"] = family_json(gca.members);
    j["gc_mismatch"] = mismatch;
    emit(format, facet,
         "GC(T) = " + letters_family(gc.members) + "\nGC(T^α) = " + letters_family(gca.members) +
             "\ngc_mismatch=" + (mismatch ? "true" : "false"),
         std::move(j));
  } else if (facet == "canonical-alpha-cover") {
    const auto c = canonical_alpha_cover(t);
    emit(format, facet, "canonical alpha-open cover = " + letters_family(c.members), family_json(c.members));
  } else if (facet == "profile") {
    const PropertyProfile p = profile(s);
    std::string text;
    ojson j;
    for (PropertyId id : kAllProperties) {
      text += std::string(to_string(id)) + "=" + (p.get(id) ? "true" : "false") + '\n';
      j[std::string(to_string(id))] = p.get(id);
    }
    text += "|SO|=" + std::to_string(p.sizes.semi_open) + " |RC|=" + std::to_string(p.sizes.regular_closed) +
            " |GC|=" + std::to_string(p.sizes.g_closed) + " |SGC|=" + std::to_string(p.sizes.sg_closed) +
            " |T^α|=" + std::to_string(p.sizes.alpha_open) + '\n';
    text += std::string("gc_mismatch=") + (p.gc_mismatch ? "true" : "false") + " so_eq_alpha=" +
            (p.so_eq_alpha ? "true" : "false");
    j["gc_mismatch"] = p.gc_mismatch;
    j["so_eq_alpha"] = p.so_eq_alpha;
    emit(format, facet, text, std::move(j));
  } else if (auto kind = parse_class_kind(facet)) {
    const auto c = s.set_class(*kind);
    emit(format, facet, facet + " = " + letters_family(c.members), set_class_to_json(c));
  } else if (auto prop = parse_property(facet)) {
    const PropertyResult r = evaluate_property(s, *prop);
    ojson j;
    j["holds"] = r.holds;
    j["reason"] = std::string(to_string(r.reason));
    emit(format, facet, facet + "=" + (r.holds ? "true" : "false") + " (" + std::string(to_string(r.reason)) + ")",
         std::move(j));
  } else {
    throw InputError("unknown facet: " + facet);
  }
}

int run_inspect(const std::string& path, const std::vector<std::string>& facet_args, bool complete, Format format) {
  const Topology t = parse_space(read_all(path), complete);
  std::vector<std::string> facets = split_list(facet_args);
  if (facets.empty()) facets = {"opens", "alpha", "profile"};
  std::vector<std::string> expanded;
  for (const auto& f : facets) {
    if (f != "all") {
      expanded.push_back(f);
      continue;
    }
    expanded.insert(expanded.end(), kBasicFacets.begin(), kBasicFacets.end());
    for (ClassKind k : kAllClassKinds) expanded.emplace_back(to_string(k));
    for (PropertyId p : kAllProperties) expanded.emplace_back(to_string(p));
  }
  // Validate every name before printing anything.
  for (const auto& f : expanded)
    if (std::find(kBasicFacets.begin(), kBasicFacets.end(), f) == kBasicFacets.end() && !parse_class_kind(f) &&
        !parse_property(f))
      throw InputError("unknown facet: " + f);
  const SpaceAnalysis s(t);
  for (const auto& f : expanded) print_facet(s, f, format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces: census, theorem verification, witness search"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int census_n = 0;
  bool census_homeo = false;
  std::string census_out = "-";
  auto* census_cmd = app.add_subcommand("census", "Enumerate and profile all topologies on n points");
  census_cmd->add_option("--n", census_n, "Point count")->required();
  census_cmd->add_flag("--up-to-homeo", census_homeo, "Keep one space per homeomorphism class");
  census_cmd->add_option("--out", census_out, "Output path, or - for standard output");

  int verify_n = 0;
  std::string verify_census;
  bool verify_homeo = false;
  std::vector<std::string> verify_suites;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem suites over a census");
  auto* n_opt = verify_cmd->add_option("--n", verify_n, "Point count of the census to generate");
  auto* c_opt = verify_cmd->add_option("--census", verify_census, "Census file to verify instead");
  n_opt->excludes(c_opt);
  verify_cmd->add_flag("--up-to-homeo", verify_homeo, "Use one space per homeomorphism class");
  verify_cmd->add_option("--suite", verify_suites, "Suite ids (repeatable or comma-separated), or all");
  add_format(verify_cmd);

  std::string search_pred;
  int search_max_n = 0;
  auto* search_cmd = app.add_subcommand("search", "Search the census for witnesses");
  search_cmd->add_option("predicate", search_pred, "Predicate id")->required();
  search_cmd->add_option("--max-n", search_max_n, "Largest point count to scan")->required();
  add_format(search_cmd);

  std::string inspect_space;
  std::vector<std::string> inspect_facets;
  bool inspect_complete = false;
  auto* inspect_cmd = app.add_subcommand("inspect", "Print operators, classes and properties of one space");
  inspect_cmd->add_option("--space", inspect_space, "Space file, or - for standard input")->required();
  inspect_cmd->add_option("--facets", inspect_facets, "Facets (comma-separated); all for everything");
  inspect_cmd->add_flag("--complete", inspect_complete, "Complete a non-closed open-set family to a topology");
  add_format(inspect_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  try {
    if (census_cmd->parsed()) return run_census(census_n, census_homeo, census_out);
    if (verify_cmd->parsed()) {
      if (verify_census.empty() && verify_n <= 0) throw InputError("verify needs --n or --census");
      return run_verify(verify_n, verify_census, verify_homeo, verify_suites, format);
    }
    if (search_cmd->parsed()) return run_search(search_pred, search_max_n, format);
    if (inspect_cmd->parsed()) return run_inspect(inspect_space, inspect_facets, inspect_complete, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
