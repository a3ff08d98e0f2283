#pragma once

#include <string>

#include "pgx/spectra.hpp"
#include "pgx/structure.hpp"

namespace pgx {

// Single-line JSON documents with fixed key order, byte-stable for equal
// inputs.  No trailing newline; callers append one when emitting.

// {"order":720,"element_orders":[1,2,...],"mu":[3,8,10]}
std::string spectrum_json(const Spectrum& s, const MuSet& m);

// {"vertices":[2,3,5],"edges":[[2,5]]}
std::string graph_json(const PrimeGraph& g);

// Graphviz form, one statement per line; exactly "graph G { }" when empty.
std::string graph_dot(const PrimeGraph& g);

// {"equal":false,"left":{...},"right":{...},"edge_symmetric_difference":[[2,3]]}
std::string compare_json(const PrimeGraph& left, const PrimeGraph& right);

// {"subject":...,"kind":...,"overall":"pass","checks":[{"name":...,"status":...,"detail":...}]}
std::string report_json(const VerificationReport& r);

// Same with "case" inserted after "kind" for theorem classifications.
std::string report_json(const VerificationReport& r, const std::string& case_name);

}  // namespace pgx
