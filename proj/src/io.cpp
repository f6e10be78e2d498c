#include "hibi/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hibi/errors.hpp"

namespace hibi {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Poset parse_poset_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw ParseError("JSON poset needs an \"elements\" array");

  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("\"elements\" entries must be strings");
    elements.push_back(e.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> relations;
  for (const char* key : {"covers", "relations"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of pairs");
    for (const auto& pair : j[key]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw ParseError(std::string("\"") + key + "\" entries must be [string, string] pairs");
      relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  return Poset::build(std::move(elements), relations);
}

Poset parse_poset_text_lines(std::string_view text) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  auto declare = [&](const std::string& name) {
    for (const std::string& e : elements)
      if (e == name) return;
    elements.push_back(name);
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    std::size_t lt = line.find('<');
    if (lt == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected \"x < y\"");
    if (line.find('<', lt + 1) != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": more than one '<'");
    const std::string x = trim(line.substr(0, lt));
    const std::string y = trim(line.substr(lt + 1));
    if (x.empty() || y.empty())
      throw ParseError("line " + std::to_string(lineno) + ": empty element name");
    declare(x);
    declare(y);
    relations.emplace_back(x, y);
  }
  return Poset::build(std::move(elements), relations);
}

}  // namespace

Poset parse_poset(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_poset_json(text);
  return parse_poset_text_lines(text);
}

Poset parse_poset_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_poset(buffer.str());
}

std::string poset_to_json(const Poset& p) {
  ordered_json j;
  j["elements"] = p.elements();
  ordered_json covers = ordered_json::array();
  for (const auto& [x, y] : p.cover_pairs()) covers.push_back({p.name(x), p.name(y)});
  j["covers"] = covers;
  return j.dump();
}

std::string report_to_json(const InvariantReport& r) {
  ordered_json j;
  j["n_elements"] = r.n_elements;
  j["dim"] = r.dim;
  j["rank"] = r.rank;
  j["upper_rank"] = r.upper_rank;
  j["lower_rank"] = r.lower_rank;
  j["c_diagonal"] = r.c_diagonal;
  j["fpt"] = r.fpt;
  j["minus_a"] = r.minus_a;
  j["min_maximal_chain"] = r.min_maximal_chain;
  j["pure"] = r.pure;
  j["gorenstein"] = r.gorenstein;
  j["inequality_ok"] = r.inequality_ok;
  ordered_json w;
  w["upper_path"] = r.witnesses.upper_path;
  w["lower_path"] = r.witnesses.lower_path;
  w["level_path"] = r.witnesses.level_path;
  ordered_json psi = ordered_json::object();
  for (const auto& [name, level] : r.witnesses.psi) psi[name] = level;
  w["psi"] = psi;
  j["witnesses"] = w;
  return j.dump();
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  auto line = [&](const char* key, const std::string& value) {
    out << key << std::string(20 - std::string(key).size(), ' ') << value << "\n";
  };
  auto join = [](const std::vector<std::string>& names) {
    std::string s = "(";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
    return s + ")";
  };
  line("n_elements", std::to_string(r.n_elements));
  line("dim", std::to_string(r.dim));
  line("rank", std::to_string(r.rank));
  line("upper_rank", std::to_string(r.upper_rank));
  line("lower_rank", std::to_string(r.lower_rank));
  line("c_diagonal", std::to_string(r.c_diagonal));
  line("fpt", std::to_string(r.fpt));
  line("minus_a", std::to_string(r.minus_a));
  line("min_maximal_chain", std::to_string(r.min_maximal_chain));
  line("pure", r.pure ? "true" : "false");
  line("gorenstein", r.gorenstein ? "true" : "false");
  line("inequality_ok", r.inequality_ok ? "true" : "false");
  line("upper_witness", join(r.witnesses.upper_path));
  line("lower_witness", join(r.witnesses.lower_path));
  line("level_witness", join(r.witnesses.level_path));
  std::string psi;
  for (const auto& [name, level] : r.witnesses.psi)
    psi += (psi.empty() ? "" : ", ") + name + ":" + std::to_string(level);
  line("psi", psi);
  return out.str();
}

std::string monomial_to_string(const Poset& p, const HibiMonomial& m) {
  std::ostringstream out;
  if (m.t_degree == 0) {
    out << "1";
  } else {
    out << "T";
    if (m.t_degree != 1) out << "^" << m.t_degree;
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    if (m.exponents[x] == 0) continue;
    out << "*X[" << p.name(x) << "]";
    if (m.exponents[x] != 1) out << "^" << m.exponents[x];
  }
  return out.str();
}

std::string frobenius_report_to_json(const Poset& p, const FrobeniusReport& r) {
  ordered_json j;
  j["q"] = r.q;
  j["nu"] = r.nu;
  j["predicted"] = r.predicted;
  j["matches"] = r.matches;
  ordered_json w;
  w["t_degree"] = r.witness.t_degree;
  ordered_json exps = ordered_json::object();
  for (ElementId x = 0; x < p.size(); ++x) exps[p.name(x)] = r.witness.exponents[x];
  w["exponents"] = exps;
  w["monomial"] = monomial_to_string(p, r.witness);
  j["witness"] = w;
  return j.dump();
}

}  // namespace hibi
