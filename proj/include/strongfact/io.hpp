#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "strongfact/grid.hpp"
#include "strongfact/matrix_op.hpp"
#include "strongfact/sequence.hpp"

namespace strongfact {

/// Row-major CSV with a first line `N=<n>`. Blank lines and lines starting
/// with '#' are skipped. ParseError carries "path:line".
MatrixOp read_matrix_csv(const std::string& path);
/// {"N": n, "entries": [[...], ...]} or a bare array of rows.
MatrixOp read_matrix_json(const std::string& path);
/// Dispatches on the extension (.json, otherwise CSV).
MatrixOp read_matrix(const std::string& path);
void write_matrix_csv(const std::string& path, const MatrixOp& A);

/// One value per line.
TruncatedSeq read_sequence_csv(const std::string& path);
void write_sequence_csv(const std::string& path, const TruncatedSeq& x);

/// Built-in sequences of length N: ones, harmonic (1/i), inverse-squares
/// (1/i^2), linear (i), alternating ((-1)^{i+1}), zero-first (0, 1, 1, ...),
/// zero-two (0, 0, 1, ...), random (seeded, uniform in [1/2, 3/2]).
/// Anything else is read as a CSV path and must have length N.
TruncatedSeq named_sequence(const std::string& name, std::size_t N, std::uint64_t seed = 0);

/// (node, value) pairs; the nodes must be those of `grid` to 1e-12.
GridFunction read_grid_function_csv(const std::string& path, const GridPtr& grid);

struct GeneratorParams {
  std::size_t N = 0;
  TruncatedSeq g;
  TruncatedSeq h;
  std::uint64_t seed = 0;
  std::size_t row = 1;  // perturbed: position and size of the added entry
  std::size_t col = 2;
  double eps = 1e-3;
};

/// rank-one (M_g C M_h, the Cesaro shape), identity, cesaro, random-lower,
/// diagonal (diag g), perturbed (rank-one plus eps at (row, col)), zero.
MatrixOp generate_matrix(const std::string& name, const GeneratorParams& params);

}  // namespace strongfact
