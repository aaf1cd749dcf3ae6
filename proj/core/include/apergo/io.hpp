#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apergo/measures.hpp"
#include "apergo/signal.hpp"
#include "apergo/stochastic.hpp"
#include "apergo/subspace.hpp"

namespace apergo::io {

// Matrix files: CSV with a `dim,<rows>,<cols>` header line followed by
// row-major rows, or JSON {"rows", "cols", "entries"} with entries flat in
// row-major order.  Chosen by file extension (.json vs anything else).
Matrix read_matrix(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

// Subspace files are matrix files whose rows span the subspace.
Subspace read_subspace(const std::string& path);

// Signal CSV: optional `t,x1..xd` header, one row per grid point.
SampledSignal read_signal(const std::string& path, NormKind kind,
                          std::optional<DomainKind> hint = {});
void write_signal(const std::string& path, const SampledSignal& s);

// Weight CSV: optional `n,p` header, one row per index, covering a full
// symmetric window [-n_max, n_max].
WeightSeq read_weights(const std::string& path);
void write_weights(const std::string& path, const WeightSeq& w);

// Measure JSON: {"side": "line"|"half_line",
//                "density": {"type": "constant", "value": c} |
//                           {"type": "sampled", "times": [...], "values": [...]} |
//                           null,
//                "atoms": [[t, mass], ...]}.
MeasureDensity read_measure(const std::string& path);
void write_measure(const std::string& path, const MeasureDensity& mu);

// Ensemble CSV: optional `t,draw_id,x1..xd` header; draw ids 0..K-1, every
// (t, draw) pair present exactly once.
ProcessEnsemble read_ensemble(const std::string& path, std::uint64_t seed = 0);
void write_ensemble(const std::string& path, const ProcessEnsemble& x);

// All numbers found in the file, in order (commas, whitespace, newlines).
Vector read_vector(const std::string& path);

// "1,2.5,-3" -> vector; used by inline CLI flags.
Vector parse_vector(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

std::string read_text(const std::string& path);

// Writes content to a temporary sibling then renames it into place.
void write_text_atomic(const std::string& path, const std::string& content);

// FNV-1a 64-bit digest of the file bytes, as 16 hex characters.
std::string file_digest(const std::string& path);

}  // namespace apergo::io
