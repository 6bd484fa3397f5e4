#ifndef OPVFRAME_FRAME_IO_HPP
#define OPVFRAME_FRAME_IO_HPP

#include <string>

#include "opvframe/frame.hpp"

namespace opv {

// Frame file format, version 1 (JSON):
//
//   {
//     "format_version": 1,
//     "n": 2,
//     "blocks": [
//       { "rows": 1, "data": [ [ [re, im], [re, im] ] ] },
//       ...
//     ]
//   }
//
// Every data row holds exactly n [re, im] pairs of finite binary64 values.
// Doubles are written as their shortest round-trip decimal, so
// write -> read -> write is byte-identical and read(write(F)) == F
// bit-exactly.

std::string frame_to_json(const OpvFrame& f);
OpvFrame frame_from_json(const std::string& text);

OpvFrame read_frame(const std::string& path);
void write_frame(const OpvFrame& f, const std::string& path);

// A spectrum file is a frame file with a single square block: the matrix S.
ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const ComplexMatrix& s, const std::string& path);

}  // namespace opv

#endif
