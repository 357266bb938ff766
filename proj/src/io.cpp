#include "zetacode/io.hpp"

#include <fstream>
#include <sstream>

namespace zetacode {

namespace {

// Strips comments and yields non-blank lines with their 1-based numbers.
class LineReader {
 public:
  LineReader(std::istream& in, const std::string& source) : in_(in), source_(source) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      bool blank = raw.find_first_not_of(" \t\r\n") == std::string::npos;
      if (blank) continue;
      out = raw;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(source_, line_, msg); }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

std::vector<long> parse_longs(LineReader& r, const std::string& line, std::size_t expect = 0) {
  std::istringstream is(line);
  std::vector<long> vals;
  long v;
  while (is >> v) vals.push_back(v);
  std::string junk;
  if (is.clear(), is >> junk) r.fail("unexpected token '" + junk + "'");
  if (expect && vals.size() != expect)
    r.fail("expected " + std::to_string(expect) + " integers, found " +
           std::to_string(vals.size()));
  return vals;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open file");
  return f;
}

}  // namespace

UndirectedMultigraph parse_edge_list(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::string line;
  if (!r.next(line)) throw ParseError(source, r.line(), "missing header line \"V E\"");
  auto head = parse_longs(r, line, 2);
  if (head[0] < 0 || head[1] < 0) r.fail("vertex and edge counts must be nonnegative");
  std::size_t V = static_cast<std::size_t>(head[0]);
  std::size_t E = static_cast<std::size_t>(head[1]);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(E);
  for (std::size_t k = 0; k < E; ++k) {
    if (!r.next(line)) throw ParseError(source, r.line(), "expected " + std::to_string(E) +
                                                              " edges, file ended after " +
                                                              std::to_string(k));
    auto uv = parse_longs(r, line, 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= static_cast<long>(V) || uv[1] >= static_cast<long>(V))
      r.fail("edge endpoint out of range [0, " + std::to_string(V) + ")");
    if (uv[0] == uv[1]) r.fail("self-loops are not allowed");
    edges.emplace_back(static_cast<std::uint32_t>(uv[0]), static_cast<std::uint32_t>(uv[1]));
  }
  if (r.next(line)) r.fail("trailing content after the last edge");
  return UndirectedMultigraph(V, std::move(edges));
}

UndirectedMultigraph read_edge_list(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_edge_list(f, path);
}

void write_edge_list(std::ostream& out, const UndirectedMultigraph& g) {
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

ParityCheckMatrix parse_dense_parity(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (r.next(line)) {
    auto vals = parse_longs(r, line);
    std::vector<int> row;
    row.reserve(vals.size());
    for (long v : vals) {
      if (v != 0 && v != 1) r.fail("entries must be 0 or 1");
      row.push_back(static_cast<int>(v));
    }
    if (!rows.empty() && row.size() != rows[0].size())
      r.fail("row has " + std::to_string(row.size()) + " entries, expected " +
             std::to_string(rows[0].size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source, r.line(), "empty parity check matrix");
  return ParityCheckMatrix::from_rows(rows);
}

ParityCheckMatrix read_dense_parity(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_dense_parity(f, path);
}

ParityCheckMatrix parse_alist(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::string line;
  if (!r.next(line)) throw ParseError(source, r.line(), "missing alist header \"n m\"");
  auto head = parse_longs(r, line, 2);
  if (head[0] < 1 || head[1] < 1) r.fail("alist dimensions must be positive");
  std::size_t n = static_cast<std::size_t>(head[0]);
  std::size_t m = static_cast<std::size_t>(head[1]);
  if (!r.next(line)) throw ParseError(source, r.line(), "missing max-weight line");
  auto maxw = parse_longs(r, line, 2);
  if (!r.next(line)) throw ParseError(source, r.line(), "missing column weight list");
  auto colw = parse_longs(r, line, n);
  if (!r.next(line)) throw ParseError(source, r.line(), "missing row weight list");
  auto roww = parse_longs(r, line, m);
  for (long w : colw)
    if (w < 0 || w > maxw[0]) r.fail("column weight outside [0, max]");
  for (long w : roww)
    if (w < 0 || w > maxw[1]) r.fail("row weight outside [0, max]");

  ParityCheckMatrix H(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!r.next(line)) throw ParseError(source, r.line(), "missing index list for column " +
                                                              std::to_string(c + 1));
    auto idx = parse_longs(r, line);
    std::size_t nonzero = 0;
    for (long v : idx) {
      if (v < 0 || v > static_cast<long>(m)) r.fail("check index outside [0, m]");
      if (v == 0) continue;  // padding
      if (H.at(static_cast<std::size_t>(v - 1), c)) r.fail("duplicate check index");
      H.set(static_cast<std::size_t>(v - 1), c, 1);
      ++nonzero;
    }
    if (nonzero != static_cast<std::size_t>(colw[c]))
      r.fail("column " + std::to_string(c + 1) + " lists " + std::to_string(nonzero) +
             " checks but its declared weight is " + std::to_string(colw[c]));
  }
  for (std::size_t rr = 0; rr < m; ++rr) {
    if (!r.next(line)) throw ParseError(source, r.line(), "missing index list for row " +
                                                              std::to_string(rr + 1));
    auto idx = parse_longs(r, line);
    std::size_t nonzero = 0;
    for (long v : idx) {
      if (v < 0 || v > static_cast<long>(n)) r.fail("bit index outside [0, n]");
      if (v == 0) continue;
      if (!H.at(rr, static_cast<std::size_t>(v - 1)))
        r.fail("row list names bit " + std::to_string(v) + " absent from the column lists");
      ++nonzero;
    }
    if (nonzero != static_cast<std::size_t>(roww[rr]))
      r.fail("row " + std::to_string(rr + 1) + " lists " + std::to_string(nonzero) +
             " bits but its declared weight is " + std::to_string(roww[rr]));
    if (nonzero != H.row_weight(rr))
      r.fail("row " + std::to_string(rr + 1) + " is inconsistent with the column lists");
  }
  if (r.next(line)) r.fail("trailing content after the row lists");
  return H;
}

ParityCheckMatrix read_alist(const std::string& path) {
  auto f = open_or_throw(path);
  return parse_alist(f, path);
}

void write_alist(std::ostream& out, const ParityCheckMatrix& H) {
  std::size_t n = H.cols(), m = H.rows();
  std::size_t cmax = 0, rmax = 0;
  for (std::size_t c = 0; c < n; ++c) cmax = std::max(cmax, H.col_weight(c));
  for (std::size_t r = 0; r < m; ++r) rmax = std::max(rmax, H.row_weight(r));
  out << n << " " << m << "\n" << cmax << " " << rmax << "\n";
  for (std::size_t c = 0; c < n; ++c) out << H.col_weight(c) << (c + 1 < n ? " " : "\n");
  for (std::size_t r = 0; r < m; ++r) out << H.row_weight(r) << (r + 1 < m ? " " : "\n");
  for (std::size_t c = 0; c < n; ++c) {
    bool first = true;
    for (std::size_t r = 0; r < m; ++r)
      if (H.at(r, c)) {
        out << (first ? "" : " ") << r + 1;
        first = false;
      }
    if (first) out << 0;  // explicit padding keeps empty lists parseable
    out << "\n";
  }
  for (std::size_t r = 0; r < m; ++r) {
    bool first = true;
    for (std::size_t c = 0; c < n; ++c)
      if (H.at(r, c)) {
        out << (first ? "" : " ") << c + 1;
        first = false;
      }
    if (first) out << 0;
    out << "\n";
  }
}

nlohmann::json multipoly_json(const MultiPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json t;
    t["exp"] = e;
    t["coef"] = c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
    terms.push_back(std::move(t));
  }
  nlohmann::json out;
  out["vars"] = f.vars();
  out["truncation"] = f.truncation();
  out["terms"] = std::move(terms);
  return out;
}

nlohmann::json unipoly_json(const UniPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  nlohmann::json out;
  out["coeffs"] = std::move(coeffs);
  out["degree"] = f.degree();
  out["pretty"] = f.str();
  return out;
}

}  // namespace zetacode
