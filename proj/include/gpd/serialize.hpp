#ifndef GPD_SERIALIZE_HPP
#define GPD_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "gpd/morita.hpp"

// Documents: the on-disk JSON format. One structure per file, with a kind
// tag and a name. Serialization is canonical (fixed key order, two-space
// indent, tables in index order), so equal documents map to equal bytes.

namespace gpd {

struct Document {
  std::string name;
  std::variant<Groupoid, GAction, InternalFunctor, Bibundle, InternalGroupoid>
      payload;

  std::string kind() const;
  bool operator==(const Document&) const = default;
};

/// Parse failures carry the offending field in the message.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses and (by default) validates; validation failures are parse
/// failures naming the violated condition. `base_dir` resolves named
/// groupoid references ("g" loads base_dir/g.json).
Document parse_document(const std::string& text,
                        const std::string& base_dir = "",
                        bool run_validators = true);

std::string serialize_document(const Document& d);

Document load_document(const std::string& path, bool run_validators = true);

/// Writes the full serialization or nothing (never a partial file).
void save_document(const Document& d, const std::string& path);

/// The validator matching the payload kind.
ValidationReport validate_document(const Document& d);

}  // namespace gpd

#endif  // GPD_SERIALIZE_HPP
