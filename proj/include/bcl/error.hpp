#pragma once

#include <stdexcept>
#include <string>

namespace bcl {

enum class errc {
  invalid_input,
  duplicate_vertex_in_face,
  ghost_vertex,
  face_not_in_complex,
  not_balanced,
  coloring_improper,
  not_facets,
  label_collision,
  color_mismatch,
  not_admissible,
  lsop_not_found,
  budget_exhausted,
  unknown_name,
  not_a_manifold,
};

const char* errc_name(errc c);

/// All library errors carry one of the codes above plus a human-readable detail.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw error(code, detail); }

}  // namespace bcl
