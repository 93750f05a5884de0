#include "feqlab/cli/manifest.hpp"

#include <fstream>
#include <system_error>

#include "feqlab/cli/json_io.hpp"
#include "feqlab/error.hpp"

namespace feqlab::cli {

namespace {

std::optional<Status> parse_status(const Json& value, const std::string& where) {
  if (!value.is_string()) throw Error("manifest: " + where + " must be a string");
  const auto& s = value.get_ref<const std::string&>();
  if (s == "HOLDS") return Status::kHolds;
  if (s == "FAILS") return Status::kFails;
  if (s == "UNCONSTRAINED") return std::nullopt;
  throw Error("manifest: " + where + " has unknown status '" + s + "'");
}

}  // namespace

ExpectedStatus ExpectedStatus::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("manifest: cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("manifest: " + path.string() + ": " + e.what());
  }
  if (!doc.contains("identities") || !doc["identities"].is_object()) {
    throw Error("manifest: missing \"identities\" object");
  }

  ExpectedStatus out;
  // Top-level keys other than "identities" ("format", "notes") are ignored.
  for (const auto& [name, body] : doc["identities"].items()) {
    const auto id = identity_from_string(name);
    if (!id) throw Error("manifest: unknown identity '" + name + "'");
    if (!body.is_object()) throw Error("manifest: entry for " + name + " must be an object");
    Entry entry;
    for (const auto& [key, value] : body.items()) {
      if (key == "equal_weights") {
        entry.equal_weights = parse_status(value, name + ".equal_weights");
      } else if (key == "SYMBOLIC_Q" || key == "AT_Q1" || key == "AT_RATIONAL_Q") {
        entry.by_mode[key] = parse_status(value, name + "." + key);
      } else {
        throw Error("manifest: unknown key " + name + "." + key);
      }
    }
    if (entry.by_mode.size() != 3) throw Error("manifest: " + name + " must list all three modes");
    out.entries_[*id] = std::move(entry);
  }
  for (IdentityId id : kAllIdentities) {
    if (!out.entries_.contains(id)) throw Error("manifest: no entry for " + std::string(to_string(id)));
  }
  return out;
}

bool ExpectedStatus::is_degenerate(IdentityId id, const Params& params) const {
  const Entry& e = entries_.at(id);
  if (!e.equal_weights) return false;
  std::optional<long> w1;
  std::optional<long> w2;
  for (const auto& [name, value] : params) {
    if (name == "w1") w1 = value;
    if (name == "w2") w2 = value;
  }
  return w1 && w2 && *w1 == *w2;
}

std::optional<Status> ExpectedStatus::expected(IdentityId id, const EvalMode& mode, const Params& params) const {
  const Entry& e = entries_.at(id);
  if (is_degenerate(id, params)) return *e.equal_weights;
  return e.by_mode.find(mode.name())->second;
}

std::filesystem::path default_manifest_path() {
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    auto installed = exe.parent_path() / FEQLAB_INSTALLED_MANIFEST;
    if (std::filesystem::exists(installed, ec)) return installed.lexically_normal();
  }
  return FEQLAB_SOURCE_MANIFEST;
}

}  // namespace feqlab::cli
