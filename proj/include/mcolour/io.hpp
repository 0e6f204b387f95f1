#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mcolour/hypergraph.hpp"

namespace mcolour {

// HGR text format:
//   line 1: <num_edges> <num_vertices>
//   then one edge per line as space-separated 1-based vertex ids.
// Lines starting with '%' are comments. CRLF and trailing whitespace are accepted.

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// One colour per line; an optional `# palette <C>` header. Without the header
/// the palette is the largest colour present.
Colouring parse_colouring(std::istream& in);
void write_colouring(std::ostream& out, const Colouring& c);

/// One rational per line, `p/q` or decimal.
Weighting parse_weights(std::istream& in);
void write_weights(std::ostream& out, const Weighting& w);

Hypergraph read_hypergraph_file(const std::filesystem::path& path);
Colouring read_colouring_file(const std::filesystem::path& path);
Weighting read_weights_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace mcolour
