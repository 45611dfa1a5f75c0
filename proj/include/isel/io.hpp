#pragma once

#include "isel/election.hpp"
#include "isel/margin.hpp"
#include "isel/reductions.hpp"

#include <iosfwd>
#include <string>

namespace isel {

/// Election instance plus the norm order it is meant to be solved under.
struct ElectionFile {
  Election election;
  NormOrder norm{1};
};

// JSON election instances: {"domain": "real"|"binary", "p": int,
// "candidates": [[...]], "voters": [[...]]}. Row 1 of candidates is the
// target. Entries are numbers (exact integers/dyadics) or strings holding
// decimals or fractions, parsed exactly.
ElectionFile read_election_file(const std::string& path);
ElectionFile parse_election_text(const std::string& text);
void write_election_file(const std::string& path, const Election& e,
                         NormOrder norm);
std::string election_to_text(const Election& e, NormOrder norm);

// JSON margin instances: {"rows", "cols", "entries", "satisfaction":
// "weak"|"strict", "win_rule": "all_rows"|"count_rows"}.
MarginInstance read_margin_file(const std::string& path);
MarginInstance parse_margin_text(const std::string& text);
void write_margin_file(const std::string& path, const MarginInstance& mi);
std::string margin_to_text(const MarginInstance& mi);

// Source problems: {"A": [[...]], "b": [...]} / DIMACS edge format /
// {"t", "sets"} / {"num_elements", "sets", "k"}.
ZeroOneIlp read_ilp_file(const std::string& path);
Graph read_dimacs_file(const std::string& path);
Graph parse_dimacs_text(const std::string& text);
X3cInstance read_x3c_file(const std::string& path);
HittingSetInstance read_hitting_set_file(const std::string& path);

std::string provenance_to_text(const Provenance& p);
void write_provenance_file(const std::string& path, const Provenance& p);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace isel
