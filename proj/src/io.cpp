#include "mws/io.hpp"

#include <charconv>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string_view>

namespace mws {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

std::uint64_t parse_uint(const std::string& token, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError("malformed " + std::string(what) + " '" + token + "'");
  return v;
}

// Next line with content; blank lines are skipped.
std::vector<std::string> next_line(std::istream& in, std::string_view what) {
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split(line);
    if (!tokens.empty()) return tokens;
  }
  throw FormatError("unexpected end of input while reading " + std::string(what));
}

Field parse_field(const std::string& token) {
  try {
    return Field::parse(token);
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad field in header: ") + e.what());
  }
}

template <class Range>
void write_joined(std::ostream& out, const Range& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

GeneratorMatrix read_gmat_body(std::istream& in, const std::vector<std::string>& header) {
  if (header.size() != 4) throw FormatError("GMAT header must be 'gmat q k n'");
  const Field field = parse_field(header[1]);
  const std::uint64_t k = parse_uint(header[2], "k");
  const std::uint64_t n = parse_uint(header[3], "n");
  if (k < 1) throw FormatError("GMAT needs k >= 1");
  std::vector<Element> entries;
  entries.reserve(k * n);
  for (std::uint64_t r = 0; r < k; ++r) {
    const auto row = next_line(in, "GMAT row " + std::to_string(r));
    if (row.size() != n)
      throw FormatError("GMAT row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected " +
                        std::to_string(n));
    for (const auto& t : row) {
      const std::uint64_t e = parse_uint(t, "matrix entry");
      if (e >= field.order()) throw FormatError("matrix entry " + t + " outside GF(" + field.name() + ")");
      entries.push_back(static_cast<Element>(e));
    }
  }
  return GeneratorMatrix(field, k, n, std::move(entries));
}

ProjectiveMultiset read_pmul_body(std::istream& in, const std::vector<std::string>& header) {
  if (header.size() != 3) throw FormatError("PMUL header must be 'pmul q k'");
  const Field field = parse_field(header[1]);
  const std::uint64_t k = parse_uint(header[2], "k");
  if (k < 1) throw FormatError("PMUL needs k >= 1");
  const auto space = ProjectiveSpace::build(field, static_cast<unsigned>(k));
  const auto row = next_line(in, "PMUL multiplicities");
  if (row.size() != space->size())
    throw FormatError("PMUL has " + std::to_string(row.size()) + " multiplicities, expected " +
                      std::to_string(space->size()));
  std::vector<std::uint64_t> mult;
  mult.reserve(row.size());
  for (const auto& t : row) mult.push_back(parse_uint(t, "multiplicity"));
  return ProjectiveMultiset(space, std::move(mult));
}

const char* status_of(const BoundCheck& b) {
  if (b.passed) return "pass";
  return b.informational ? "info" : "fail";
}

}  // namespace

void write_gmat(std::ostream& out, const GeneratorMatrix& g) {
  out << "gmat " << g.field().name() << ' ' << g.rows() << ' ' << g.cols() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) write_joined(out, g.row(r));
}

void write_pmul(std::ostream& out, const ProjectiveMultiset& m) {
  out << "pmul " << m.field().name() << ' ' << m.dimension() << '\n';
  write_joined(out, m.multiplicities());
}

std::string to_gmat(const GeneratorMatrix& g) {
  std::ostringstream ss;
  write_gmat(ss, g);
  return ss.str();
}

std::string to_pmul(const ProjectiveMultiset& m) {
  std::ostringstream ss;
  write_pmul(ss, m);
  return ss.str();
}

GeneratorMatrix read_gmat(std::istream& in) {
  const auto header = next_line(in, "GMAT header");
  if (header[0] != "gmat") throw FormatError("expected 'gmat' header, got '" + header[0] + "'");
  return read_gmat_body(in, header);
}

ProjectiveMultiset read_pmul(std::istream& in) {
  const auto header = next_line(in, "PMUL header");
  if (header[0] != "pmul") throw FormatError("expected 'pmul' header, got '" + header[0] + "'");
  return read_pmul_body(in, header);
}

std::variant<GeneratorMatrix, ProjectiveMultiset> read_code(std::istream& in) {
  const auto header = next_line(in, "header");
  if (header[0] == "gmat") return read_gmat_body(in, header);
  if (header[0] == "pmul") return read_pmul_body(in, header);
  throw FormatError("unknown format keyword '" + header[0] + "' (expected gmat or pmul)");
}

std::string report_to_text(const SpectrumReport& r) {
  std::ostringstream out;
  out << "q " << r.q << '\n' << "k " << r.k << '\n' << "n " << r.n << '\n' << "d " << r.d << '\n';
  out << "qk " << r.qk << '\n';
  out << "S";
  for (auto w : r.weights) out << ' ' << w;
  out << '\n';
  out << "spread " << (r.spread ? std::to_string(*r.spread) : "none") << '\n';
  out << "h " << (r.h ? std::to_string(*r.h) : "none") << '\n';
  std::string flags;
  const std::pair<bool, const char*> named[] = {{r.is_mws, "mws"},
                                                {r.is_compact, "compact"},
                                                {r.is_strictly_compact, "strictly_compact"},
                                                {r.is_fws, "fws"},
                                                {r.is_degenerate, "degenerate"}};
  for (const auto& [set, name] : named) {
    if (!set) continue;
    if (!flags.empty()) flags += ' ';
    flags += name;
  }
  out << "flags " << (flags.empty() ? "none" : flags) << '\n';
  for (const auto& b : r.bounds) out << "bound " << b.name << ' ' << status_of(b) << '\n';
  return out.str();
}

std::string report_to_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["k"] = r.k;
  j["n"] = r.n;
  j["d"] = r.d;
  j["qk"] = r.qk;
  j["S"] = r.weights;
  j["spread"] = r.spread ? nlohmann::ordered_json(*r.spread) : nlohmann::ordered_json(nullptr);
  j["h"] = r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr);
  j["flags"] = {{"mws", r.is_mws},
                {"compact", r.is_compact},
                {"strictly_compact", r.is_strictly_compact},
                {"fws", r.is_fws},
                {"degenerate", r.is_degenerate}};
  j["bounds"] = nlohmann::ordered_json::array();
  for (const auto& b : r.bounds)
    j["bounds"].push_back({{"name", b.name}, {"status", status_of(b)}, {"detail", b.detail}});
  return j.dump(2) + "\n";
}

std::string weight_sets_to_text(const std::vector<std::vector<std::uint64_t>>& sets) {
  std::ostringstream out;
  for (const auto& s : sets) write_joined(out, s);
  out << "count " << sets.size() << '\n';
  return out.str();
}

}  // namespace mws
