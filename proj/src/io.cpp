#include "mcolour/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "mcolour/error.hpp"

namespace mcolour {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_natural(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t num_edges = 0;
  std::uint64_t num_vertices = 0;
  std::vector<std::vector<VertexId>> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() == '%') continue;

    if (!have_header) {
      if (line.empty()) continue;
      const auto tokens = split_ws(line);
      if (tokens.size() != 2) {
        throw ParseError(line_no, "malformed header, expected '<num_edges> <num_vertices>'");
      }
      num_edges = parse_natural(tokens[0], line_no, "edge count");
      num_vertices = parse_natural(tokens[1], line_no, "vertex count");
      have_header = true;
      edges.reserve(num_edges);
      continue;
    }

    if (edges.size() == num_edges) {
      if (line.empty()) continue;
      throw ParseError(line_no, "more edge lines than the declared " + std::to_string(num_edges));
    }
    if (line.empty()) throw ParseError(line_no, "empty edge line");

    std::vector<VertexId> edge;
    for (const auto token : split_ws(line)) {
      const auto id = parse_natural(token, line_no, "vertex id");
      if (id < 1 || id > num_vertices) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) + " out of range 1.." +
                                      std::to_string(num_vertices));
      }
      const auto v = static_cast<VertexId>(id - 1);
      for (VertexId seen : edge) {
        if (seen == v) {
          throw ParseError(line_no, "duplicate vertex " + std::to_string(id) + " in edge");
        }
      }
      edge.push_back(v);
    }
    edges.push_back(std::move(edge));
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges.size() != num_edges) {
    throw ParseError(line_no, "declared " + std::to_string(num_edges) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Hypergraph(num_vertices, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.num_edges() << ' ' << h.num_vertices() << '\n';
  for (const auto& edge : h.edges()) {
    for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? " " : "") << edge[i] + 1;
    out << '\n';
  }
}

Colouring parse_colouring(std::istream& in) {
  Colouring c;
  std::string raw;
  std::size_t line_no = 0;
  bool explicit_palette = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto tokens = split_ws(line.substr(1));
      if (tokens.size() == 2 && tokens[0] == "palette") {
        c.palette = static_cast<ColourId>(parse_natural(tokens[1], line_no, "palette size"));
        explicit_palette = true;
      }
      continue;
    }
    const auto colour = parse_natural(line, line_no, "colour");
    if (colour < 1) throw ParseError(line_no, "colours are 1-based");
    c.colours.push_back(static_cast<ColourId>(colour));
  }
  if (!explicit_palette) c.palette = c.max_used();
  return c;
}

void write_colouring(std::ostream& out, const Colouring& c) {
  out << "# palette " << c.palette << '\n';
  for (ColourId colour : c.colours) out << colour << '\n';
}

Weighting parse_weights(std::istream& in) {
  Weighting w;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '%' || line.front() == '#') continue;
    try {
      w.push_back(parse_rational(line));
    } catch (const ParseError& err) {
      throw ParseError(line_no, err.what());
    }
  }
  return w;
}

void write_weights(std::ostream& out, const Weighting& w) {
  for (const auto& value : w) out << format_rational(value) << '\n';
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_hypergraph(in);
}

Colouring read_colouring_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_colouring(in);
}

Weighting read_weights_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_weights(in);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace mcolour
