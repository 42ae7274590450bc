// The commands of the command-line front end, rendered as text or JSON.

#ifndef TROPMIRROR_CORE_SESSION_HPP
#define TROPMIRROR_CORE_SESSION_HPP

#include "core/serialize.hpp"

#include <string>
#include <vector>

namespace tropmirror {

const std::vector<std::string>& command_names();

/// complex, pt1, tropdef, dualize or mirror applied to a problem (dualize
/// also takes a complex). Throws Schema for an unknown command.
std::string run_command(const std::string& command, const Json& input, bool json_output, bool pretty);

/// Three session-style lines: the printed faces, the header, and the
/// equidimensionality, simpliciality and F-vector line.
std::string format_complex(const FaceComplex& c, char letter);

}  // namespace tropmirror

#endif  // TROPMIRROR_CORE_SESSION_HPP
