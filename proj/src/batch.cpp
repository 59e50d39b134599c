#include "hoinfo/batch.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace hoinfo {

using nlohmann::json;

std::vector<BatchItem> parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("manifest: ") + e.what());
  }
  if (doc.is_object() && doc.contains("items")) doc = doc.at("items");
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "manifest must be a JSON array of inputs");

  std::vector<BatchItem> items;
  items.reserve(doc.size());
  for (auto& entry : doc) items.push_back({entry, base_dir});
  return items;
}

InputSource resolve_item(const BatchItem& item) {
  const json& e = item.entry;
  auto resolve_path = [&](const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_relative() && p != "-") path = item.base_dir / path;
    return path;
  };
  if (e.is_string()) return FileInput{resolve_path(e.get<std::string>()), InputFormat::automatic};
  if (e.is_object() && e.contains("input")) {
    if (!e.at("input").is_string()) throw Error(ErrorCode::ParseError, "'input' must be a path string");
    FileInput file{resolve_path(e.at("input").get<std::string>()), InputFormat::automatic};
    if (e.contains("format")) file.format = parse_input_format(e.at("format").get<std::string>());
    return file;
  }
  if (e.is_object()) return generator_spec_from_json(e);
  throw Error(ErrorCode::ParseError, "manifest entry must be a path or an object");
}

std::string describe_item(const BatchItem& item) {
  const json& e = item.entry;
  if (e.is_string()) return e.get<std::string>();
  if (e.is_object() && e.contains("input") && e.at("input").is_string()) return e.at("input").get<std::string>();
  return e.dump();
}

json batch_record_to_json(const BatchRecord& record) {
  json doc = {{"index", record.index}, {"input", record.descriptor}};
  if (record.report) {
    doc["report"] = report_to_json(*record.report);
  } else {
    doc["error"] = {{"code", std::string(to_string(record.error_code))}, {"message", record.error_message}};
  }
  return doc;
}

namespace {

BatchRecord run_one(const BatchItem& item, std::size_t index, const RunOptions& options) {
  BatchRecord rec;
  rec.index = index;
  rec.descriptor = describe_item(item);
  try {
    rec.report = run_source(resolve_item(item), options);
  } catch (const Error& e) {
    rec.error_code = e.code();
    rec.error_message = e.what();
  } catch (const std::exception& e) {
    rec.error_code = ErrorCode::ParseError;
    rec.error_message = e.what();
  }
  return rec;
}

}  // namespace

std::size_t run_batch(const std::vector<BatchItem>& items, const RunOptions& options, unsigned jobs,
                      const std::function<void(const BatchRecord&)>& emit) {
  const std::size_t n = items.size();
  std::vector<std::optional<BatchRecord>> done(n);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      BatchRecord rec = run_one(items[i], i, options);
      {
        std::lock_guard lock(mu);
        done[i] = std::move(rec);
      }
      ready.notify_all();
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), std::max<std::size_t>(n, 1)));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  std::size_t failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BatchRecord rec;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value(); });
      rec = std::move(*done[i]);
      done[i].reset();
    }
    if (!rec.ok()) ++failed;
    emit(rec);
  }
  return failed;
}

}  // namespace hoinfo
