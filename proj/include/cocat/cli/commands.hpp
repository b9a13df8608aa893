#pragma once

// The verification, enumeration, classification and pipeline commands as
// library calls returning reports.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cocat/cli/report.hpp"
#include "cocat/cli/text_format.hpp"

namespace cocat::cli {

/// Names accepted by cmd_verify, in display order.
const std::vector<std::string>& example_names();

/// Builds a named example and checks it against its manifest of expected
/// classifier flags.  Throws UnknownExample.
Report cmd_verify(std::string_view example);

struct EnumerateOptions {
  std::size_t q0_max = 1;
  std::size_t q1_max = 1;
  bool verify_theorem = false;
  bool count_iso = false;
  bool include_empty = false;  // also count the vacuous structure on the empty set
  unsigned workers = 0;        // 0 = hardware concurrency
};

/// Largest bounds the enumerator accepts; (4, 6) already takes minutes.
inline constexpr std::size_t kMaxQ0 = 3;
inline constexpr std::size_t kMaxQ1 = 6;

/// Throws CapExceeded beyond kMaxQ0 / kMaxQ1.
Report cmd_enumerate(const EnumerateOptions& opts);

/// Axiom report, the four flags and their witnesses.
Report cmd_classify(const AnyCoCategory& data);
/// Parses the file and classifies it; ParseError when its category field
/// disagrees with `declared`.
Report cmd_classify_file(Host declared, const std::string& path);

/// Nerve pipeline on the interval, compared with the chain example.
Report cmd_pipeline();

}  // namespace cocat::cli
