#ifndef SPHC_IO_HPP
#define SPHC_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sphc/graph.hpp"
#include "sphc/oracle.hpp"
#include "sphc/spherical.hpp"
#include "sphc/stanley_reisner.hpp"

namespace sphc {
namespace io {

using json = nlohmann::ordered_json;

/// `.cplx`: one facet per line of whitespace-separated vertex ids, an
/// optional `#universe v1 v2 ...` line, `()` for the empty facet, empty
/// file for the void complex.
SimplicialComplex read_cplx(std::istream& in);
SimplicialComplex read_cplx_file(const std::string& path);
std::string write_cplx(const SimplicialComplex& delta);

/// `.graph`: first line n, then `u v` edge lines, 1-indexed.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

json profile_json(const HomologyProfile& profile);
json classification_json(const Classification& cls);
json verdict_json(const SphericalVerdict& verdict);
json filtration_json(const FiltrationRecord& rec);
json sign_json(const SignPosetStats& stats);
json betti_json(const BettiTable& table);
json oracle_report_json(const oracle::OracleReport& rep);

std::string betti_tsv(const BettiTable& table);
/// Standard Betti diagram: rows |support| - i, columns i.
std::string betti_diagram(const BettiTable& table);

}  // namespace io
}  // namespace sphc

#endif
