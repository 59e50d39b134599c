#ifndef HOINFO_BATCH_HPP
#define HOINFO_BATCH_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hoinfo/report.hpp"

namespace hoinfo {

// One manifest entry, resolved lazily so a malformed entry fails on its own.
struct BatchItem {
  nlohmann::json entry;
  std::filesystem::path base_dir;
};

/// Manifest: a JSON array (or {"items": [...]}) whose elements are either a
/// path string, {"input": PATH, "format": FMT}, or a generator spec object
/// such as {"kind": "parity", "order": 3}. Relative paths resolve against
/// `base_dir`.
std::vector<BatchItem> parse_manifest(std::string_view text, const std::filesystem::path& base_dir);

InputSource resolve_item(const BatchItem& item);
std::string describe_item(const BatchItem& item);

struct BatchRecord {
  std::size_t index = 0;
  std::string descriptor;
  std::optional<RunReport> report;
  ErrorCode error_code = ErrorCode::ParseError;
  std::string error_message;

  bool ok() const noexcept { return report.has_value(); }
};

nlohmann::json batch_record_to_json(const BatchRecord& record);

/// Runs every item on up to `jobs` worker threads. `emit` is called from the
/// calling thread exactly once per item, in manifest order, as soon as all
/// earlier items have been emitted. Returns the number of failed items.
std::size_t run_batch(const std::vector<BatchItem>& items, const RunOptions& options, unsigned jobs,
                      const std::function<void(const BatchRecord&)>& emit);

}  // namespace hoinfo

#endif  // HOINFO_BATCH_HPP
