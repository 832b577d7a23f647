#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabur/entropy.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/pauli.hpp"
#include "stabur/stabgroup.hpp"

// Text formats.
//
// Generator list: one signed Pauli string per line; '#' starts a comment;
// blank lines are ignored.
//
// Graph: first line is the vertex count n, then one "i j" edge per line,
// 0-indexed. '#' comments and blank lines are allowed anywhere.
//
// Amplitude CSV: header "y,numerator,log2_den,sign", one row per y with y
// written as a bit string (qubit 0 first), |R(y)| = numerator / 2^log2_den
// and sign in {-1, 0, 1}.
//
// Curve CSV: header "a1,a2,entropy_kind,q".

namespace stabur {

enum class InputKind { kGroup, kGraph };

/// Graph files start with an integer line; anything else is a generator list.
InputKind detect_input_kind(std::string_view text);

/// Parses a generator list. ParseError positions are 1-based line numbers.
std::vector<PauliOperator> parse_generator_list(std::string_view text);

/// Parses and validates a generator list.
StabilizerGroup parse_group(std::string_view text);

/// Parses a graph file. ParseError positions are 1-based line numbers.
Graph parse_graph(std::string_view text);

std::string format_generator_list(const StabilizerGroup& g);
std::string format_graph(const Graph& g);

/// Bit string of y over n qubits, qubit 0 first.
std::string bit_string(std::uint64_t y, int n);

std::string amplitude_csv(const AmplitudeTable& table);

/// Formats a double with 12 significant digits, the presentation precision
/// for inexact values.
std::string format_real(double value);

std::string curve_csv(std::span<const CurvePoint> points, const EntropySpec& spec);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace stabur
