#include "hopftrees/limits.hpp"

#include "hopftrees/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace hopftrees {

namespace {
std::atomic<int> g_degree_ceiling{10};
std::atomic<int> g_cut_vertex_cap{8};
}  // namespace

int degree_ceiling() { return g_degree_ceiling.load(); }
void set_degree_ceiling(int n) { g_degree_ceiling.store(n); }
int cut_vertex_cap() { return g_cut_vertex_cap.load(); }
void set_cut_vertex_cap(int n) { g_cut_vertex_cap.store(n); }

bool apply_environment_limits() {
  const char* env = std::getenv("HOPFTREES_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64) return false;
  set_degree_ceiling(static_cast<int>(v));
  set_cut_vertex_cap(std::max(cut_vertex_cap(), static_cast<int>(v) + 1));
  return true;
}

void require_degree(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative degree");
  if (n > degree_ceiling())
    throw ResourceError(std::string(what) + ": degree " + std::to_string(n) +
                        " exceeds ceiling " + std::to_string(degree_ceiling()));
}

}  // namespace hopftrees
