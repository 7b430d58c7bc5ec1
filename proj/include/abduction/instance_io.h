// The .abd text format. Line oriented, DIMACS style:
//
//   c <comment>
//   p abd <nvars>
//   n <var> <name>
//   h <class> <var> ... <var> 0
//   m <var> ... <var> 0
//   w <var> <weight>
//   <lit> ... <lit> 0
//
// A candidate explanation travels as the comment `c candidate <var> ... 0`.
// Reduction records are written as `c map ...` comments and ignored when
// parsing.

#ifndef ABDUCTION_INSTANCE_IO_H_
#define ABDUCTION_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "abduction/core.h"
#include "abduction/reductions.h"

namespace abduction {

class ParseError : public AbductionError {
 public:
  ParseError(int line, const std::string& message);
  // 1-based; 0 when the problem is not tied to one line.
  int line() const { return line_; }

 private:
  int line_;
};

// Parses and validates. Syntax problems throw ParseError, semantic ones
// InvalidInstance.
AbductionInstance parse_instance(std::string_view text);

// Canonical form: header, name lines, hypothesis lines by class, the
// manifestation line, weights by variable, the candidate comment, clauses
// in canonical order.
std::string serialize_instance(const AbductionInstance& instance);

// `c map` comment lines describing a reduction record.
std::string serialize_record(const ReductionRecord& record);

AbductionInstance read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace abduction

#endif  // ABDUCTION_INSTANCE_IO_H_
