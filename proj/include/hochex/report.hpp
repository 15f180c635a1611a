#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hochex/matrix.hpp"
#include "hochex/scalar.hpp"

namespace hochex {

// Order-preserving JSON so that identical configurations render to
// byte-identical documents.
using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json };

// Parsed command-line configuration shared by every subcommand.
struct RunConfig {
    std::size_t vertices = 1;
    std::size_t truncation = 2;
    unsigned long characteristic = 0;
    std::optional<std::size_t> degree;
    std::vector<std::string> coefficients;  // raw text, parsed per field
    unsigned long long seed = 1;
    std::size_t samples = 200;
    OutputFormat format = OutputFormat::Text;
};

// Outcome of a subcommand: process exit status (0 = success / all checks
// pass, 1 = a computed check failed, 2 = usage error), the human-readable
// report and the machine-readable document (always carrying "schema": 1).
struct CommandResult {
    int exit_code = 0;
    std::string text;
    Json json;
};

std::string render(const CommandResult& r, OutputFormat f);

// Table of second-homology dimensions, rank-computed versus closed formula,
// for every degree q in [1, 2n]; exit 0 iff every row matches.
CommandResult cmd_homology(const RunConfig& cfg);

// Builds the degree-q cocycle with the given class coefficients, prints its
// nonzero values and the classification of the extension algebra's quiver.
CommandResult cmd_extend(const RunConfig& cfg);

// Full deterministic verification sweep for one (s, n, char): formula
// agreement, every valid degree x coefficient pattern with expected verdict
// and structural invariants, duality oracle (when the algebra is small
// enough), the worked fixtures for s = 3 and n in {2, 3, 4}, and symmetry
// certification where the theory promises it.
CommandResult cmd_verify(const RunConfig& cfg);

// Degree-2 (co)homology of the full tuple complexes compared with the graded
// sum; refuses algebras of dimension > 12.
CommandResult cmd_oracle(const RunConfig& cfg);

// Fixed deterministic nonzero coefficient patterns over an m-dimensional
// class space: the m unit vectors, then the all-ones vector when m > 1.
std::vector<Vec> coefficient_patterns(std::size_t m, const FieldSpec& fs);

// Splits "1,0,2/3" on commas and trims blanks; empty text gives no tokens.
std::vector<std::string> split_coefficients(const std::string& text);

}  // namespace hochex
