#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semiquad/certificate.hpp"
#include "semiquad/coset.hpp"
#include "semiquad/hilbert.hpp"
#include "semiquad/presentation.hpp"

namespace semiquad {

using Json = nlohmann::json;

/// Syntax or content error in a presentation file. `line()` is 1-based; 0
/// when the error is not tied to a line.
class ParseError : public UsageError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Text format:
///
///   # comment
///   generators 5
///   x5*x2 = x2*x1
///   x5*x1 = 0
Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::filesystem::path& path);

/// Same as canonical_text(); parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const Presentation& p);

/// {"n": 5, "relations": [{"zero": [5,1]}, {"equal": [[5,2],[2,1]]}]}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json word_to_json(const Word& w);
Json certificate_to_json(const Certificate& c);

/// {"degree", "minimals", "singular", "truncated"}
Json basis_to_json(const MinimalBasis& basis, bool truncated);

Json profile_to_json(const HilbertProfile& profile);
HilbertProfile profile_from_json(const Json& j);
/// "degree,dim" header and one row per computed degree.
std::string profile_to_csv(const HilbertProfile& profile);

Json regularity_to_json(const RegularityResult& r);
RegularityResult regularity_from_json(const Json& j);

}  // namespace semiquad
