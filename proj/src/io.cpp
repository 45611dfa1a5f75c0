#include "isel/io.hpp"

#include "isel/rational_text.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace isel {
namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string("malformed JSON in ") + what);
  return j;
}

Rational entry_to_rational(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  throw ParseError(std::string(what) + ": entries must be numbers or strings");
}

RatMat matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw ParseError(std::string(what) + ": expected a nonempty array of rows");
  const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  if (cols == 0)
    throw ParseError(std::string(what) + ": rows must be nonempty arrays");
  RatMat out(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols)
      throw ParseError(std::string(what) + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      out(static_cast<Index>(r), static_cast<Index>(c)) =
          entry_to_rational(rows[r][c], what);
  }
  return out;
}

json matrix_to_json(const RatMat& m) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      const Rational& v = m(r, c);
      if (denominator(v) == 1 && numerator(v) >= -(1ll << 53) &&
          numerator(v) <= (1ll << 53)) {
        row.push_back(numerator(v).convert_to<long long>());
      } else {
        row.push_back(format_rational(v));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

ElectionFile parse_election_text(const std::string& text) {
  const json j = parse_json(text, "election instance");
  if (!j.contains("domain") || !j.contains("candidates") ||
      !j.contains("voters"))
    throw ParseError("election instance needs domain, candidates and voters");
  ElectionFile file;
  const std::string domain = j.at("domain").get<std::string>();
  if (domain == "real")
    file.election.domain = Domain::Real;
  else if (domain == "binary")
    file.election.domain = Domain::Binary;
  else
    throw ParseError("domain must be \"real\" or \"binary\"");
  file.norm.p = j.value("p", 1);
  if (file.norm.p < 1) throw ParseError("p must be a positive integer");
  file.election.candidates = matrix_from_json(j.at("candidates"), "candidates");
  file.election.voters = matrix_from_json(j.at("voters"), "voters");
  try {
    validate(file.election);
  } catch (const UsageError& err) {
    throw ParseError(std::string("invalid election instance: ") + err.what());
  }
  return file;
}

ElectionFile read_election_file(const std::string& path) {
  return parse_election_text(read_text_file(path));
}

std::string election_to_text(const Election& e, NormOrder norm) {
  json j;
  j["domain"] = e.domain == Domain::Real ? "real" : "binary";
  j["p"] = norm.p;
  j["candidates"] = matrix_to_json(e.candidates);
  j["voters"] = matrix_to_json(e.voters);
  return j.dump(2) + "\n";
}

void write_election_file(const std::string& path, const Election& e,
                         NormOrder norm) {
  write_text_file(path, election_to_text(e, norm));
}

MarginInstance parse_margin_text(const std::string& text) {
  const json j = parse_json(text, "margin instance");
  MarginInstance mi;
  mi.entries = matrix_from_json(j.at("entries"), "entries");
  if (j.contains("rows") &&
      j.at("rows").get<Index>() != mi.entries.rows())
    throw ParseError("margin instance row count mismatch");
  if (j.contains("cols") &&
      j.at("cols").get<Index>() != mi.entries.cols())
    throw ParseError("margin instance column count mismatch");
  const std::string sat = j.value("satisfaction", "weak");
  if (sat == "weak")
    mi.satisfaction = Satisfaction::Weak;
  else if (sat == "strict")
    mi.satisfaction = Satisfaction::Strict;
  else
    throw ParseError("satisfaction must be \"weak\" or \"strict\"");
  const std::string rule = j.value("win_rule", "all_rows");
  if (rule == "all_rows")
    mi.win_rule = WinRule::AllRows;
  else if (rule == "count_rows")
    mi.win_rule = WinRule::CountRows;
  else
    throw ParseError("win_rule must be \"all_rows\" or \"count_rows\"");
  return mi;
}

MarginInstance read_margin_file(const std::string& path) {
  return parse_margin_text(read_text_file(path));
}

std::string margin_to_text(const MarginInstance& mi) {
  json j;
  j["rows"] = mi.rows();
  j["cols"] = mi.cols();
  json rows = json::array();
  for (Index r = 0; r < mi.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < mi.cols(); ++c)
      row.push_back(format_rational(mi.entries(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  j["satisfaction"] = mi.satisfaction == Satisfaction::Weak ? "weak" : "strict";
  j["win_rule"] = mi.win_rule == WinRule::AllRows ? "all_rows" : "count_rows";
  return j.dump(2) + "\n";
}

void write_margin_file(const std::string& path, const MarginInstance& mi) {
  write_text_file(path, margin_to_text(mi));
}

ZeroOneIlp read_ilp_file(const std::string& path) {
  const json j = parse_json(read_text_file(path), "0-1 program");
  if (!j.contains("A") || !j.contains("b"))
    throw ParseError("0-1 program needs fields A and b");
  const json& a = j.at("A");
  const json& b = j.at("b");
  if (!a.is_array() || a.empty() || !a[0].is_array() || !b.is_array())
    throw ParseError("0-1 program: A must be a matrix and b a vector");
  ZeroOneIlp src;
  src.a.resize(static_cast<Index>(a.size()), static_cast<Index>(a[0].size()));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!a[r].is_array() || a[r].size() != a[0].size())
      throw ParseError("0-1 program: ragged A");
    for (std::size_t c = 0; c < a[r].size(); ++c)
      src.a(static_cast<Index>(r), static_cast<Index>(c)) =
          a[r][c].get<int>();
  }
  src.b.resize(static_cast<Index>(b.size()));
  for (std::size_t r = 0; r < b.size(); ++r)
    src.b[static_cast<Index>(r)] = b[r].get<int>();
  validate(src);
  return src;
}

Graph parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  bool have_problem = false;
  std::size_t declared_edges = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> g.num_vertices >> declared_edges) || kind != "edge")
        throw ParseError("malformed DIMACS problem line: " + line);
      have_problem = true;
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (!have_problem || !(ls >> u >> v))
        throw ParseError("malformed DIMACS edge line: " + line);
      g.edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown DIMACS line: " + line);
    }
  }
  if (!have_problem) throw ParseError("DIMACS input lacks a problem line");
  if (g.edges.size() != declared_edges)
    throw ParseError("DIMACS edge count mismatch");
  try {
    validate(g);
  } catch (const UsageError& err) {
    throw ParseError(std::string("invalid graph: ") + err.what());
  }
  return g;
}

Graph read_dimacs_file(const std::string& path) {
  return parse_dimacs_text(read_text_file(path));
}

X3cInstance read_x3c_file(const std::string& path) {
  const json j = parse_json(read_text_file(path), "exact-cover instance");
  X3cInstance src;
  src.t = j.at("t").get<int>();
  for (const json& row : j.at("sets")) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("exact-cover sets must be triples");
    src.sets.push_back({row[0].get<int>(), row[1].get<int>(),
                        row[2].get<int>()});
  }
  validate(src);
  return src;
}

HittingSetInstance read_hitting_set_file(const std::string& path) {
  const json j = parse_json(read_text_file(path), "hitting-set instance");
  HittingSetInstance src;
  src.num_elements = j.at("num_elements").get<int>();
  src.k = j.at("k").get<int>();
  for (const json& row : j.at("sets")) {
    if (!row.is_array()) throw ParseError("hitting-set sets must be arrays");
    std::vector<int> set;
    for (const json& v : row) set.push_back(v.get<int>());
    src.sets.push_back(std::move(set));
  }
  validate(src);
  return src;
}

std::string provenance_to_text(const Provenance& p) {
  json j;
  j["construction"] = p.construction;
  json params = json::object();
  for (const auto& [key, value] : p.params) params[key] = value;
  j["params"] = std::move(params);
  j["notes"] = p.notes;
  return j.dump(2) + "\n";
}

void write_provenance_file(const std::string& path, const Provenance& p) {
  write_text_file(path, provenance_to_text(p));
}

}  // namespace isel
