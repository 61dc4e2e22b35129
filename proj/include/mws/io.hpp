#ifndef MWS_IO_HPP
#define MWS_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "mws/code.hpp"
#include "mws/spectrum.hpp"

namespace mws {

/// Thrown for malformed GMAT / PMUL input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GMAT: "gmat <q> <k> <n>" then k rows of n element indices.
// PMUL: "pmul <q> <k>" then q_k multiplicities in canonical point order.
// <q> is "p" for prime fields and "p^m" otherwise. LF endings, single spaces.

void write_gmat(std::ostream& out, const GeneratorMatrix& g);
void write_pmul(std::ostream& out, const ProjectiveMultiset& m);
std::string to_gmat(const GeneratorMatrix& g);
std::string to_pmul(const ProjectiveMultiset& m);

GeneratorMatrix read_gmat(std::istream& in);
ProjectiveMultiset read_pmul(std::istream& in);

/// Reads either format, dispatching on the header keyword.
std::variant<GeneratorMatrix, ProjectiveMultiset> read_code(std::istream& in);

/// Flat "key value" lines.
std::string report_to_text(const SpectrumReport& r);

/// Keys: q, k, n, d, qk, S, spread, h, flags, bounds.
std::string report_to_json(const SpectrumReport& r);

/// One weight set per line, then "count N".
std::string weight_sets_to_text(const std::vector<std::vector<std::uint64_t>>& sets);

}  // namespace mws

#endif  // MWS_IO_HPP
