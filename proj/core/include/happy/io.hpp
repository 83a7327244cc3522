#pragma once

#include "happy/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace happy {

/// "mhe", "wmhe", "mhv" or "wmhv".
std::string variant_name(const Instance& inst);

/// Instance text format:
///
///   happy <mhe|mhv|wmhe|wmhv> <n> <m> <k> <ell>
///   v <id> c <color>          precolor
///   v <id> w <weight>         vertex weight (wmhv only, default 1)
///   e <u> <v> [<weight>]      edge (weight only in wmhe, default 1)
///
/// Ids are 1..n, '#' starts a comment, ell = 0 means optimize. Errors name the line.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Canonical form: header, vertex lines ascending, edges sorted. A target of 0 is
/// written as 0 and therefore reads back as no target.
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_text(const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string digest(const Instance& inst);

/// Colors separated by commas or whitespace, in vertex order.
std::vector<Color> parse_coloring(const std::string& text);

struct ResultRecord {
    std::string variant;
    std::string algorithm;
    Weight optimum = 0;
    Weight happy_weight = 0;
    std::vector<Color> coloring;
    double elapsed_ms = 0;
    std::string digest;
    std::optional<Weight> target;
};

/// Re-evaluates the coloring first; throws std::logic_error if it does not reach
/// solution.happy_weight.
ResultRecord make_record(const Instance& inst, const Solution& solution, double elapsed_ms);

/// One-line JSON with a fixed field order. With a target, adds "target" and
/// "answer": "yes" | "no".
std::string to_json(const ResultRecord& record, bool with_elapsed = true);

}  // namespace happy
