#include "hibi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "hibi/analyze.hpp"
#include "hibi/errors.hpp"
#include "hibi/families.hpp"
#include "hibi/frobenius.hpp"
#include "hibi/ideals.hpp"
#include "hibi/io.hpp"
#include "hibi/levels.hpp"
#include "hibi/paths.hpp"

namespace hibi {

namespace {

std::vector<long> split_params(const std::string& csv) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadParameters("cannot parse parameter '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string path_line(const Poset& p, const StarPath& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? ", " : "") + p.name(c.vertices[i]);
  return s + ")";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poset invariants of Hibi rings"};
  app.name("hibi");
  app.require_subcommand(1);
  app.fallthrough(true);

  Caps caps = default_caps();
  app.add_option("--max-states", caps.max_states, "Path search state cap");
  app.add_option("--max-elements", caps.max_elements, "Ideal enumeration element cap");

  std::string file;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Parse a poset file and report its shape");
  validate->add_option("file", file, "Poset file, '-' for stdin")->required();

  auto* invariants = app.add_subcommand("invariants", "Full invariant report with certificates");
  invariants->add_option("file", file)->required();
  invariants->add_flag("--json", as_json, "Emit the report as one JSON object");

  bool all_paths = false, maximal_paths = false, star_only = false;
  auto* paths_cmd = app.add_subcommand("paths", "List Hasse-diagram paths");
  paths_cmd->add_option("file", file)->required();
  auto* opt_all = paths_cmd->add_flag("--all", all_paths, "Include non-maximal paths");
  paths_cmd->add_flag("--maximal", maximal_paths, "Only maximal paths (default)")->excludes(opt_all);
  paths_cmd->add_flag("--star-only", star_only, "Only paths satisfying condition (*)");

  auto* lattice = app.add_subcommand("lattice", "List the ideal lattice J(P)");
  lattice->add_option("file", file)->required();

  auto* gens = app.add_subcommand("generators", "List the Hibi ring generators");
  gens->add_option("file", file)->required();

  long q = 2;
  auto* nu_cmd = app.add_subcommand("nu", "Brute-force Frobenius oracle for one q");
  nu_cmd->add_option("file", file)->required();
  nu_cmd->add_option("--q", q, "Frobenius exponent")->required();
  nu_cmd->add_flag("--json", as_json);

  std::string method = "both";
  auto* fpt_cmd = app.add_subcommand("fpt", "F-pure threshold");
  fpt_cmd->add_option("file", file)->required();
  fpt_cmd->add_option("--method", method, "levels, paths or both")
      ->check(CLI::IsMember({"levels", "paths", "both"}));

  std::string family, params, output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named poset family");
  gen_cmd->add_option("--family", family, "chain, antichain, segre or example44")
      ->required()
      ->check(CLI::IsMember({"chain", "antichain", "segre", "example44"}));
  gen_cmd->add_option("--params", params, "Comma-separated integers")->required();
  gen_cmd->add_option("-o,--output", output, "Write to a file instead of stdout");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 64;
  }

  try {
    if (*validate) {
      const Poset p = parse_poset_file(file);
      out << "ok: " << p.size() << " elements, " << p.cover_pairs().size() << " covers, rank "
          << p.rank() << (p.is_pure() ? ", pure" : ", not pure") << "\n";
    } else if (*invariants) {
      const InvariantReport r = analyze(parse_poset_file(file), caps);
      out << (as_json ? report_to_json(r) + "\n" : report_to_text(r));
    } else if (*paths_cmd) {
      const Poset p = parse_poset_file(file);
      PathQuery query{.maximal_only = !all_paths, .star_only = star_only};
      const std::vector<StarPath> found = enumerate_paths(p, query, caps);
      out << found.size() << " paths\n";
      for (const StarPath& c : found) {
        out << path_line(p, c) << "  len*=" << upper_length(c)
            << "  star=" << (satisfies_star(p, c) ? "yes" : "no")
            << "  maximal=" << (is_maximal_path(p, c) ? "yes" : "no") << "\n";
      }
    } else if (*lattice) {
      const Poset p = parse_poset_file(file);
      const std::vector<PosetIdeal> ideals = enumerate_ideals(p, caps);
      out << "J(P): " << ideals.size() << " ideals\n";
      for (const PosetIdeal& ideal : ideals) {
        std::string s = "{";
        for (std::size_t i = 0; i < ideal.members().size(); ++i)
          s += (i ? ", " : "") + p.name(ideal.members()[i]);
        out << s << "}\n";
      }
    } else if (*gens) {
      const Poset p = parse_poset_file(file);
      const std::vector<HibiMonomial> g = generators(p, caps);
      out << g.size() << " generators\n";
      for (const HibiMonomial& m : g) out << monomial_to_string(p, m) << "\n";
    } else if (*nu_cmd) {
      const Poset p = parse_poset_file(file);
      const FrobeniusReport r = frobenius_nu(p, q, caps);
      if (as_json) {
        out << frobenius_report_to_json(p, r) << "\n";
      } else {
        out << "nu(" << r.q << ") = " << r.nu << " (predicted " << r.predicted << ") "
            << (r.matches ? "MATCH" : "MISMATCH") << "\n";
        out << "witness: " << monomial_to_string(p, r.witness) << "\n";
      }
    } else if (*fpt_cmd) {
      const Poset p = parse_poset_file(file);
      if (method == "levels") {
        out << "fpt = " << fpt_by_levels(p) << " [levels]\n";
      } else if (method == "paths") {
        out << "fpt = " << lower_rank(p, caps) + 2 << " [paths]\n";
      } else {
        const int by_levels = fpt_by_levels(p);
        const int by_paths = lower_rank(p, caps) + 2;
        if (by_levels != by_paths)
          throw InternalDisagreement("fpt methods disagree: levels " + std::to_string(by_levels) +
                                     ", paths " + std::to_string(by_paths));
        out << "fpt = " << by_levels << " [levels=" << by_levels << ", paths=" << by_paths << "]\n";
      }
    } else if (*gen_cmd) {
      const std::vector<long> ps = split_params(params);
      auto want = [&](std::size_t count) {
        if (ps.size() != count)
          throw BadParameters("family '" + family + "' takes " + std::to_string(count) +
                              " parameter(s)");
      };
      Poset p;
      if (family == "chain") {
        want(1);
        if (ps[0] < 0) throw BadParameters("chain length must be nonnegative");
        p = chain(static_cast<std::size_t>(ps[0]));
      } else if (family == "antichain") {
        want(1);
        if (ps[0] < 0) throw BadParameters("antichain size must be nonnegative");
        p = antichain(static_cast<std::size_t>(ps[0]));
      } else if (family == "segre") {
        want(2);
        if (ps[0] < 2 || ps[1] < 2) throw BadParameters("Segre parameters must be at least 2");
        p = segre_poset(static_cast<std::size_t>(ps[0]), static_cast<std::size_t>(ps[1]));
      } else {
        want(3);
        p = example44_poset(static_cast<int>(ps[0]), static_cast<int>(ps[1]),
                            static_cast<int>(ps[2]), caps);
      }
      const std::string json = poset_to_json(p);
      if (output.empty()) {
        out << json << "\n";
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw DomainError("cannot write '" + output + "'");
        f << json << "\n";
      }
    }
    return 0;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hibi
