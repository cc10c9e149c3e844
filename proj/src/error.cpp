#include "zagreb/error.hpp"

namespace zagreb {

const char* errc_name(errc code) {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::empty_graph: return "EmptyGraph";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::isolated_vertex_with_negative_lambda: return "IsolatedVertexWithNegativeLambda";
    case errc::lambda_out_of_range: return "LambdaOutOfRange";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::n_too_large: return "NTooLarge";
    case errc::bad_checksum_byte: return "BadChecksumByte";
    case errc::truncated_body: return "TruncatedBody";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::too_large: return "TooLarge";
    case errc::syntax_error: return "SyntaxError";
    case errc::io_error: return "IoError";
    case errc::value_overflow: return "ValueOverflow";
  }
  return "UnknownError";
}

}  // namespace zagreb
