#pragma once

namespace hopftrees {

// Hard ceilings. Exceeding one raises ResourceError.
//   degree ceiling: largest n accepted by enumeration, DSE solvers, the
//     special families, and verification suites (default 10).
//   cut vertex cap: largest tree (in vertices) whose cuts are enumerated
//     (default 8).
int degree_ceiling();
void set_degree_ceiling(int n);
int cut_vertex_cap();
void set_cut_vertex_cap(int n);

// Reads HOPFTREES_MAX_DEGREE; when set to a positive integer it replaces the
// degree ceiling and raises the cut cap to at least that value plus one.
// Returns false if the variable is set but malformed.
bool apply_environment_limits();

// Throws ResourceError if n exceeds the degree ceiling.
void require_degree(int n, const char* what);

}  // namespace hopftrees
