#pragma once

#include <stdexcept>
#include <string>

namespace zagreb {

enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  empty_graph,
  isolated_vertex,
  isolated_vertex_with_negative_lambda,
  lambda_out_of_range,
  too_few_vertices,
  parameter_out_of_range,
  n_too_large,
  bad_checksum_byte,
  truncated_body,
  trailing_garbage,
  too_large,
  syntax_error,
  io_error,
  value_overflow,
};

const char* errc_name(errc code);

/// Library-wide exception. `code()` identifies the failed precondition,
/// `what()` names the offending input (pair, byte, line, ...).
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace zagreb
